import doctest

import pytest

from spintori import matrices, permutations, smith, tori


@pytest.mark.parametrize(
    "module", [permutations, matrices, smith, tori], ids=lambda m: m.__name__
)
def test_module_doctests(module):
    result = doctest.testmod(module)
    assert result.failed == 0
    assert result.attempted > 0

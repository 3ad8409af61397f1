"""End-to-end acceptance checks: each test pins one promised behavior
of the finished tool, at full sweep sizes."""

import math
import random
import subprocess
import sys
import time
from dataclasses import dataclass
from pathlib import Path

import pytest

from spintori import (
    FORM_MINUS,
    FORM_PLUS,
    SignedCycleType,
    TorusClass,
    canonical_invariants,
    center_invariants,
    closed_form_decomposition,
    determinant,
    diagonalization_witnesses,
    embeds,
    enumerate_classes,
    evaluate,
    exchange_identity_check,
    invariant_factors,
    power_gcd_closed_form,
    power_two_part,
    reduced_form_identity,
    reduced_torus_matrix,
    torus_matrix,
    torus_order,
    two_part,
)
from spintori.matrices import mat_mul

GOLDEN = Path(__file__).parent / "golden"
SWEEP_QS = (2, 3, 4, 5, 7, 9, 11, 13, 16, 25)


@dataclass(frozen=True)
class SweepRecord:
    l: int
    form: str
    cls: TorusClass
    q: int
    closed: tuple[int, ...]
    lattice: tuple[int, ...]
    absdet: int


@pytest.fixture(scope="module")
def sweep():
    records = []
    for l in range(2, 9):
        for form in (FORM_PLUS, FORM_MINUS):
            for cls in enumerate_classes(l, form):
                dec = closed_form_decomposition(cls)
                for q in SWEEP_QS:
                    a = torus_matrix(cls, q)
                    records.append(
                        SweepRecord(
                            l,
                            form,
                            cls,
                            q,
                            canonical_invariants(dec.orders(q)),
                            tuple(x for x in invariant_factors(a) if x > 1),
                            abs(determinant(a)),
                        )
                    )
    return records


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "spintori", *args], capture_output=True, text=True
    )


def test_table_reproduction_degree_four():
    start = time.perf_counter()
    plus = run_cli("table", "--l", "4", "--form", "plus")
    minus = run_cli("table", "--l", "4", "--form", "minus")
    elapsed = time.perf_counter() - start
    assert plus.returncode == 0 and minus.returncode == 0
    assert plus.stdout == (GOLDEN / "table_l4_plus.txt").read_text()
    assert minus.stdout == (GOLDEN / "table_l4_minus.txt").read_text()
    flagged = [line for line in plus.stdout.splitlines() if line.endswith("[*]")]
    assert len(flagged) == 1 and flagged[0].startswith("2,2:+/-")
    assert elapsed < 1.0


def test_closed_form_matches_lattice_everywhere(sweep):
    assert len(sweep) == sum(
        len(enumerate_classes(l, f)) * len(SWEEP_QS)
        for l in range(2, 9)
        for f in (FORM_PLUS, FORM_MINUS)
    )
    for rec in sweep:
        assert rec.closed == rec.lattice, (
            f"routes disagree at l={rec.l} form={rec.form} "
            f"type={rec.cls.literal()} q={rec.q}"
        )


def test_order_law(sweep):
    for rec in sweep:
        order = torus_order(rec.cls, rec.q)
        assert math.prod(rec.closed) == order
        assert rec.absdet == order


def test_split_pairs_have_identical_invariants():
    for l in (2, 4, 6, 8):
        types = {
            c.ctype for c in enumerate_classes(l, FORM_PLUS) if c.ctype.is_split_eligible()
        }
        assert types
        for ct in types:
            for q in (2, 3, 5, 9):
                plus = invariant_factors(torus_matrix(TorusClass(ct, "+"), q))
                minus = invariant_factors(torus_matrix(TorusClass(ct, "-"), q))
                assert plus == minus, (ct.literal(), q)


def test_block_reduction_pipeline():
    seen = set()
    for l in range(2, 7):
        for form in (FORM_PLUS, FORM_MINUS):
            for cls in enumerate_classes(l, form):
                ct = cls.ctype
                if len(ct.parts) < 2 or ct in seen:
                    continue
                seen.add(ct)
                for q in (2, 3, 5):
                    assert reduced_form_identity(ct, q), (ct.literal(), q)
                    big = [x for x in invariant_factors(torus_matrix(ct, q)) if x > 1]
                    small = [
                        x for x in invariant_factors(reduced_torus_matrix(ct, q)) if x > 1
                    ]
                    assert big == small, (ct.literal(), q)
    assert len(seen) > 100


def test_gcd_and_two_part_closed_forms():
    for a in range(3, 100, 2):
        for n in range(1, 13):
            assert power_two_part(a, n, -1) == two_part(a**n - 1)
            assert power_two_part(a, n, 1) == two_part(a**n + 1)
        for n1 in range(1, 13):
            for n2 in range(1, 13):
                for eps in (1, -1):
                    if n1 % 2 and n2 % 2:
                        assert power_gcd_closed_form("ii", a, n1, n2, eps) == math.gcd(
                            a**n1 - eps, a**n2 + eps
                        )
                        assert power_gcd_closed_form("iv", a, n1, n2, eps) == math.gcd(
                            a**n1 + eps, a**n2 + eps
                        )
                    elif n1 % 2 == 0 and n2 % 2:
                        assert power_gcd_closed_form("iii", a, n1, n2, eps) == math.gcd(
                            a**n1 + 1, a**n2 + eps
                        )
                        assert power_gcd_closed_form("v", a, n1, n2, eps) == math.gcd(
                            a**n1 - 1, a**n2 + eps
                        )
    for a in range(3, 20, 2):
        eps = 1 if a % 4 == 1 else -1
        for n1 in (1, 3, 5, 7):
            for n2 in (1, 3, 5, 7):
                for n3 in (2, 4, 6, 8):
                    assert exchange_identity_check(a, n1, n2, n3, eps), (a, n1, n2, n3)


def test_witness_families_randomized():
    rng = random.Random(20260822)

    def coprime_pair():
        while True:
            a, b = rng.randint(1, 60), rng.randint(1, 60)
            if math.gcd(a, b) == 1:
                return a, b

    for case in ("i", "ii", "iii", "iv"):
        for _ in range(1000):
            if case in ("i", "ii"):
                a, b = coprime_pair()
                c = None
            elif case == "iii":
                a, b = rng.randint(1, 60), rng.randint(1, 60)
                c = math.gcd(a, b) * rng.randint(1, 12)
            else:
                a, b = coprime_pair()
                c = 2 * rng.randint(0, 30) + 1
            mat, target, p, q = diagonalization_witnesses(case, a, b, c)
            assert mat_mul(mat_mul(p, mat), q) == target
            assert abs(determinant(p)) == 1
            assert abs(determinant(q)) == 1


def test_center_contained_in_every_torus():
    for l in range(2, 7):
        for form in (FORM_PLUS, FORM_MINUS):
            for q in (2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25):
                z = center_invariants(l, form, q)
                for cls in enumerate_classes(l, form):
                    torus = canonical_invariants(evaluate(cls, q))
                    assert embeds(z, torus), (l, form, q, cls.literal())


def test_degree_two_exceptional_isomorphisms():
    for q in (2, 3, 4, 5, 7, 8, 9, 11, 13):
        minus = {
            cls.literal(): canonical_invariants(evaluate(cls, q))
            for cls in enumerate_classes(2, FORM_MINUS)
        }
        assert minus == {
            "1,-1": canonical_invariants([q**2 - 1]),
            "-2": (q**2 + 1,),
        }
        plus = {
            cls.literal(): canonical_invariants(evaluate(cls, q))
            for cls in enumerate_classes(2, FORM_PLUS)
        }
        assert plus == {
            "1,1": canonical_invariants([q - 1, q - 1]),
            "-1,-1": canonical_invariants([q + 1, q + 1]),
            "2:+": canonical_invariants([q - 1, q + 1]),
            "2:-": canonical_invariants([q - 1, q + 1]),
        }


def test_even_q_tori_fully_split():
    for q in (2, 4, 8, 16):
        for l in range(2, 9):
            for form in (FORM_PLUS, FORM_MINUS):
                for cls in enumerate_classes(l, form):
                    ct = cls.ctype
                    split_orders = [
                        q**length - sign for length, sign in zip(ct.lengths, ct.signs)
                    ]
                    assert canonical_invariants(evaluate(cls, q)) == canonical_invariants(
                        split_orders
                    ), (q, cls.literal())

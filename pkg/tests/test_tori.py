import math
import random

import pytest

from spintori import (
    FORM_MINUS,
    FORM_PLUS,
    CyclicFactor,
    GroupForm,
    SignedCycleType,
    TorusClass,
    alternative_decomposition,
    canonical_invariants,
    center_invariants,
    closed_form_decomposition,
    embeds,
    enumerate_classes,
    evaluate,
    exchange_identity_check,
    gcd_doubling_check,
    invariant_factors,
    is_prime_power,
    oracle_invariants,
    power_gcd_closed_form,
    power_two_part,
    symbolic_decomposition,
    torus_order,
    two_part,
)

T = SignedCycleType.parse


class TestCaseRouting:
    def test_case_i(self):
        dec = closed_form_decomposition(T("3,-1"))
        assert dec.case == "i"
        assert dec.factors[0].terms == ((3, 1), (1, -1))

    def test_case_i_prefers_smallest_odd_parts(self):
        dec = closed_form_decomposition(T("3,1,-1"))
        assert dec.factors[0].terms == ((1, 1), (1, -1))
        assert [f.terms for f in dec.factors[1:]] == [((3, 1),)]

    def test_case_ii_positive_side(self):
        dec = closed_form_decomposition(T("1,1,-2"))
        assert dec.case == "ii"
        assert dec.factors[0].terms == ((2, -1), (1, 1))

    def test_case_ii_negative_side(self):
        dec = closed_form_decomposition(T("-2,-1,-1"))
        assert dec.case == "ii"
        assert dec.factors[0].terms == ((2, -1), (1, -1))

    def test_case_iii_uses_least_two_part(self):
        dec = closed_form_decomposition(T("4,2"))
        assert dec.case == "iii"
        assert [f.terms for f in dec.factors] == [((1, 1),), ((1, -1),), ((4, 1),)]

    def test_case_iii_single_part(self):
        dec = closed_form_decomposition(T("4"))
        assert dec.case == "iii"
        assert [f.terms for f in dec.factors] == [((2, 1),), ((2, -1),)]

    def test_case_iv(self):
        for text in ("1,1", "-2,-2", "2,1,1", "-4,-2"):
            assert closed_form_decomposition(T(text)).case == "iv"

    def test_case_precedence_i_over_ii(self):
        # both an odd/odd pair and a negated even part present
        dec = closed_form_decomposition(T("1,-2,-1"))
        assert dec.case == "i"

    def test_split_tag_carried_through(self):
        dec = closed_form_decomposition(TorusClass.parse("2,2:-"))
        assert dec.split == "-"
        assert closed_form_decomposition(T("2,2")).split == "+"
        assert closed_form_decomposition(T("3,1")).split is None

    def test_order_law_symbolically(self):
        for l in range(2, 8):
            for form in (FORM_PLUS, FORM_MINUS):
                for cls in enumerate_classes(l, form):
                    dec = closed_form_decomposition(cls)
                    for q in (2, 3, 7):
                        assert dec.order(q) == torus_order(cls, q)


class TestEvaluation:
    def test_known_orders(self):
        assert evaluate(T("3,-1"), 3) == (104,)
        assert evaluate(T("1,-3"), 3) == (56,)
        assert evaluate(T("2,2"), 3) == (2, 4, 8)

    def test_oracle_agreement_spot(self):
        for text, q in (("3,-1", 3), ("1,1,-2", 5), ("4,2", 3), ("-2,-2", 2)):
            cls = T(text)
            want = canonical_invariants(evaluate(cls, q))
            assert want == oracle_invariants(cls, q)

    def test_wrong_two_part_choice_would_fail(self):
        # splitting the 4 instead of the 2 in [4,2] gives a different
        # group, so the minimality rule is load bearing
        q = 3
        wrong = canonical_invariants([q**2 - 1, q**2 + 1, q**2 - 1])
        right = canonical_invariants(evaluate(T("4,2"), q))
        assert right == oracle_invariants(T("4,2"), q)
        assert wrong != right


class TestAlternativeDecomposition:
    def test_even_q_gives_none(self):
        assert alternative_decomposition(T("1,-2,-1"), 4) is None

    def test_requires_case_i_and_negated_even_part(self):
        assert alternative_decomposition(T("3,-1"), 5) is None
        assert alternative_decomposition(T("1,1,-2"), 5) is None

    def test_anchor_follows_q_mod_four(self):
        cls = T("1,-2,-1")
        alt5 = alternative_decomposition(cls, 5)
        assert alt5.factors[0].terms == ((2, -1), (1, 1))
        alt3 = alternative_decomposition(cls, 3)
        assert alt3.factors[0].terms == ((2, -1), (1, -1))

    def test_matches_primary_decomposition(self):
        for l in range(2, 7):
            for form in (FORM_PLUS, FORM_MINUS):
                for cls in enumerate_classes(l, form):
                    for q in (3, 5, 7, 9):
                        alt = alternative_decomposition(cls, q)
                        if alt is None:
                            continue
                        assert canonical_invariants(alt.orders(q)) == canonical_invariants(
                            evaluate(cls, q)
                        )


class TestCanonicalInvariants:
    def test_known_values(self):
        assert canonical_invariants([10, 8]) == (2, 40)
        assert canonical_invariants([5, 3]) == (15,)
        assert canonical_invariants([1, 7]) == (7,)
        assert canonical_invariants([]) == ()

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            canonical_invariants([4, 0])

    def test_against_smith_form_of_diagonal(self):
        rng = random.Random(41)
        for _ in range(120):
            orders = [rng.randint(1, 60) for _ in range(rng.randint(1, 5))]
            diag = [
                [orders[i] if i == j else 0 for j in range(len(orders))]
                for i in range(len(orders))
            ]
            want = tuple(x for x in invariant_factors(diag) if x > 1)
            assert canonical_invariants(orders) == want

    def test_chain_divides(self):
        rng = random.Random(43)
        for _ in range(100):
            orders = [rng.randint(2, 400) for _ in range(4)]
            chain = canonical_invariants(orders)
            assert math.prod(chain) == math.prod(orders)
            for a, b in zip(chain, chain[1:]):
                assert b % a == 0


class TestCenter:
    def test_known_values(self):
        assert center_invariants(4, FORM_PLUS, 3) == (2, 2)
        assert center_invariants(4, FORM_MINUS, 3) == (2,)
        assert center_invariants(3, FORM_MINUS, 3) == (4,)
        assert center_invariants(3, FORM_PLUS, 5) == (4,)
        assert center_invariants(4, FORM_PLUS, 2) == ()

    def test_embeds_in_every_torus_spot(self):
        for l, form, q in ((3, FORM_PLUS, 3), (4, FORM_MINUS, 5), (5, FORM_PLUS, 2)):
            z = center_invariants(l, form, q)
            for cls in enumerate_classes(l, form):
                assert embeds(z, canonical_invariants(evaluate(cls, q)))


class TestEmbeds:
    def test_basic(self):
        assert embeds((2, 2), (2, 4))
        assert embeds((2,), (4,))

    def test_cyclic_subgroup_needs_matching_exponent(self):
        assert embeds((4,), (8,))
        assert not embeds((4,), (2, 2))
        assert not embeds((2, 2), (8,))
        assert embeds((), (5,))

    def test_reflexive(self):
        assert embeds((2, 4, 3), (2, 4, 3))


class TestNumberTheory:
    def test_two_part(self):
        assert two_part(48) == 16
        assert two_part(7) == 1
        with pytest.raises(ValueError):
            two_part(0)

    def test_power_two_part_examples(self):
        assert power_two_part(3, 2, -1) == 8
        assert power_two_part(3, 2, 1) == 2
        assert power_two_part(5, 3, -1) == 4
        assert power_two_part(7, 6, -1) == 16

    def test_power_two_part_against_direct(self):
        for a in range(3, 30, 2):
            for n in range(1, 9):
                assert power_two_part(a, n, -1) == two_part(a**n - 1)
                assert power_two_part(a, n, 1) == two_part(a**n + 1)

    def test_power_gcd_examples(self):
        assert power_gcd_closed_form("ii", 3, 1, 3, 1) == 2
        assert power_gcd_closed_form("v", 3, 2, 1, -1) == 2
        assert power_gcd_closed_form("iv", 3, 3, 1, -1) == 2

    def test_power_gcd_against_direct(self):
        for a in (3, 5, 9):
            for n1 in range(1, 7):
                for n2 in range(1, 7):
                    for eps in (1, -1):
                        if n1 % 2 and n2 % 2:
                            assert power_gcd_closed_form("ii", a, n1, n2, eps) == math.gcd(
                                a**n1 - eps, a**n2 + eps
                            )
                            assert power_gcd_closed_form("iv", a, n1, n2, eps) == math.gcd(
                                a**n1 + eps, a**n2 + eps
                            )
                        if n1 % 2 == 0 and n2 % 2:
                            assert power_gcd_closed_form("iii", a, n1, n2, eps) == math.gcd(
                                a**n1 + 1, a**n2 + eps
                            )
                            assert power_gcd_closed_form("v", a, n1, n2, eps) == math.gcd(
                                a**n1 - 1, a**n2 + eps
                            )

    def test_parity_preconditions(self):
        with pytest.raises(ValueError):
            power_gcd_closed_form("ii", 3, 2, 3, 1)
        with pytest.raises(ValueError):
            power_gcd_closed_form("v", 3, 3, 1, -1)
        with pytest.raises(ValueError):
            power_two_part(4, 2, 1)

    def test_exchange_identity(self):
        assert exchange_identity_check(3, 1, 1, 2, -1)
        assert exchange_identity_check(5, 1, 3, 2, 1)
        with pytest.raises(ValueError):
            exchange_identity_check(3, 1, 1, 2, 1)

    def test_gcd_doubling(self):
        assert gcd_doubling_check(4, 2)
        assert gcd_doubling_check(6, 2)
        assert gcd_doubling_check(12, 4)
        with pytest.raises(ValueError):
            gcd_doubling_check(2, 4)

    def test_is_prime_power(self):
        assert [n for n in range(2, 20) if is_prime_power(n)] == [
            2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19,
        ]
        assert not is_prime_power(1)
        assert not is_prime_power(36)


class TestRendering:
    def test_factor_term_order(self):
        f = CyclicFactor(((1, 1), (3, -1)))
        assert f.terms == ((3, -1), (1, 1))
        assert f.order(3) == 56

    def test_symbolic_strings(self):
        assert symbolic_decomposition(T("3,-1")) == "Z_{(q^3-1)(q+1)}"
        assert symbolic_decomposition(T("1,-2,-1")) == "Z_{q^2+1} x Z_{q^2-1}"
        assert symbolic_decomposition(T("2,2")) == "Z_{q^2-1} x Z_{q+1} x Z_{q-1}"
        assert symbolic_decomposition(T("1,1,-1,-1")) == "Z_{q^2-1} x Z_{q+1} x Z_{q-1}"
        assert symbolic_decomposition(T("1,1,-2")) == "Z_{(q^2+1)(q-1)} x Z_{q-1}"
        assert symbolic_decomposition(T("-4")) == "Z_{q^4+1}"
        assert symbolic_decomposition(T("1,1")) == "Z_{q-1} x Z_{q-1}"

    def test_merge_only_within_a_factor(self):
        # [2,2] splits one part into q-1 and q+1 as separate factors,
        # which must not merge into a single q^2-1
        assert symbolic_decomposition(T("2,2")).count("x") == 2


class TestGroupForm:
    def test_coerce(self):
        assert GroupForm.coerce("plus") is GroupForm.PLUS
        assert GroupForm.coerce("-") is GroupForm.MINUS
        assert GroupForm.coerce(GroupForm.PLUS) is GroupForm.PLUS
        with pytest.raises(ValueError):
            GroupForm.coerce("twisted")

    def test_sign(self):
        assert GroupForm.PLUS.sign == 1
        assert GroupForm.MINUS.sign == -1

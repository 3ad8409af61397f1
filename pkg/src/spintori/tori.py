"""Closed-form cyclic decompositions of the maximal tori, plus the
number-theoretic helpers that justify them.

A torus class is a signed cycle type (positive parts L', negated parts
L'') with a split tag where needed.  ``closed_form_decomposition``
routes it through four mutually exclusive shapes, in this precedence:

  i:    some odd length in L' and some odd length in L''
        -> one composite factor (q^a - 1)(q^b + 1), rest standard;
  ii:   odd lengths on exactly one side, and an even length in L''
        -> composite (q^a -+ 1)(q^b + 1), rest standard;
  iii:  no negated parts and every length even
        -> split a length of least 2-part as (q^(a/2) - 1)(q^(a/2) + 1);
  iv:   anything else -> fully split product of Z_{q^length - sign}.

"Standard" factor for a part of length a and sign eps is Z_{q^a - eps};
``CyclicFactor`` terms follow that subtractive convention.  The
number-theoretic helpers near the bottom instead describe numbers
additively, as a^n + eps, matching the statements they implement; each
docstring says which convention it uses.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd

from .permutations import (
    FORM_MINUS,
    FORM_PLUS,
    SignedCycleType,
    TorusClass,
)
from .smith import invariant_factors
from .matrices import torus_matrix


class GroupForm(enum.Enum):
    PLUS = FORM_PLUS
    MINUS = FORM_MINUS

    @classmethod
    def coerce(cls, value) -> "GroupForm":
        if isinstance(value, GroupForm):
            return value
        if value in (FORM_PLUS, "+"):
            return cls.PLUS
        if value in (FORM_MINUS, "-"):
            return cls.MINUS
        raise ValueError(f"not a group form: {value!r}")

    @property
    def sign(self) -> int:
        return 1 if self is GroupForm.PLUS else -1


@dataclass(frozen=True)
class CyclicFactor:
    """One cyclic factor, a product of terms q^a - eps.

    Terms are held sorted by descending exponent, plus-sign (q^a - 1)
    before minus-sign (q^a + 1) at equal exponent.

    >>> f = CyclicFactor(((1, 1), (3, -1)))
    >>> f.terms
    ((3, -1), (1, 1))
    >>> f.order(3)
    56
    """

    terms: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if not self.terms:
            raise ValueError("factor needs at least one term")
        for a, eps in self.terms:
            if a < 1 or eps not in (1, -1):
                raise ValueError(f"bad term {(a, eps)!r}")
        object.__setattr__(
            self, "terms", tuple(sorted(self.terms, key=lambda t: (-t[0], -t[1])))
        )

    @classmethod
    def single(cls, a: int, eps: int) -> "CyclicFactor":
        return cls(((a, eps),))

    @property
    def degree(self) -> int:
        return sum(a for a, _ in self.terms)

    def order(self, q: int) -> int:
        out = 1
        for a, eps in self.terms:
            out *= q**a - eps
        return out


@dataclass(frozen=True)
class TorusDecomposition:
    """A class together with its closed-form factor list.

    ``factors`` keeps the shape the case analysis produces (composite
    factor first); ``symbolic`` renders the display form, where a
    (q^a-1)(q^a+1) pair inside a factor merges to q^(2a)-1 and factors
    are sorted by descending size as polynomials in q.
    """

    ctype: SignedCycleType
    split: str | None
    case: str
    factors: tuple[CyclicFactor, ...]

    @property
    def form(self) -> GroupForm:
        return GroupForm.coerce(self.ctype.form)

    def orders(self, q: int) -> tuple[int, ...]:
        return tuple(f.order(q) for f in self.factors)

    def order(self, q: int) -> int:
        out = 1
        for f in self.factors:
            out *= f.order(q)
        return out

    def canonical(self, q: int) -> tuple[int, ...]:
        return canonical_invariants(self.orders(q))

    def symbolic(self) -> str:
        return " x ".join(f"Z_{{{_factor_body(f)}}}" for f in display_factors(self))


def _choose(indexed: list[tuple[int, int]]) -> int:
    """Pick the index of the smallest length, earliest among ties."""
    return min(indexed, key=lambda iv: (iv[1], iv[0]))[0]


def two_part(n: int) -> int:
    """Largest power of two dividing n.

    >>> two_part(48)
    16
    >>> two_part(7)
    1
    """
    if n <= 0:
        raise ValueError("positive integers only")
    return n & -n


def closed_form_decomposition(tau) -> TorusDecomposition:
    """Route a class through the four closed-form shapes.

    >>> closed_form_decomposition(SignedCycleType.parse("3,-1")).case
    'i'
    >>> closed_form_decomposition(SignedCycleType.parse("1,1,-2")).case
    'ii'
    >>> [f.terms for f in closed_form_decomposition(SignedCycleType.parse("4")).factors]
    [((2, 1),), ((2, -1),)]
    """
    if isinstance(tau, TorusClass):
        ctype, split = tau.ctype, tau.split
    else:
        ctype = tau
        split = "+" if ctype.is_split_eligible() else None
    lengths, signs = ctype.lengths, ctype.signs
    idx = range(len(lengths))
    pos_odd = [(i, lengths[i]) for i in idx if signs[i] > 0 and lengths[i] % 2]
    neg_odd = [(i, lengths[i]) for i in idx if signs[i] < 0 and lengths[i] % 2]
    neg_even = [(i, lengths[i]) for i in idx if signs[i] < 0 and lengths[i] % 2 == 0]

    def rest(*skip) -> tuple[CyclicFactor, ...]:
        return tuple(
            CyclicFactor.single(lengths[k], signs[k]) for k in idx if k not in skip
        )

    if pos_odd and neg_odd:
        i = _choose(pos_odd)
        j = _choose(neg_odd)
        composite = CyclicFactor(((lengths[i], 1), (lengths[j], -1)))
        return TorusDecomposition(ctype, split, "i", (composite,) + rest(i, j))

    if (pos_odd or neg_odd) and neg_even:
        i = _choose(pos_odd or neg_odd)
        j = _choose(neg_even)
        composite = CyclicFactor(((lengths[i], signs[i]), (lengths[j], -1)))
        return TorusDecomposition(ctype, split, "ii", (composite,) + rest(i, j))

    if ctype.is_split_eligible():
        i = _choose([(k, lengths[k]) for k in idx
                     if two_part(lengths[k]) == min(two_part(v) for v in lengths)])
        half = lengths[i] // 2
        factors = (CyclicFactor.single(half, 1), CyclicFactor.single(half, -1)) + rest(i)
        return TorusDecomposition(ctype, split, "iii", factors)

    return TorusDecomposition(ctype, split, "iv", rest())


def alternative_decomposition(tau, q: int) -> TorusDecomposition | None:
    """Second factorization available in case i when L'' also holds an
    even length and q is odd: the composite is re-anchored on the even
    part, paired with whichever odd part has sign eps with
    q = eps mod 4.  Returns None when inapplicable.  Isomorphic to the
    primary decomposition (an exchange identity on the 2-parts).
    """
    if q % 2 == 0:
        return None
    base = closed_form_decomposition(tau)
    if base.case != "i":
        return None
    ctype, split = base.ctype, base.split
    lengths, signs = ctype.lengths, ctype.signs
    idx = range(len(lengths))
    neg_even = [(i, lengths[i]) for i in idx if signs[i] < 0 and lengths[i] % 2 == 0]
    if not neg_even:
        return None
    pos_odd = [(i, lengths[i]) for i in idx if signs[i] > 0 and lengths[i] % 2]
    neg_odd = [(i, lengths[i]) for i in idx if signs[i] < 0 and lengths[i] % 2]
    t = _choose(pos_odd) if q % 4 == 1 else _choose(neg_odd)
    k = _choose(neg_even)
    composite = CyclicFactor(((lengths[t], signs[t]), (lengths[k], -1)))
    others = tuple(
        CyclicFactor.single(lengths[n], signs[n]) for n in idx if n not in (t, k)
    )
    return TorusDecomposition(ctype, split, base.case, (composite,) + others)


def evaluate(tau, q: int) -> tuple[int, ...]:
    """Closed-form factor orders at a specific q.

    >>> evaluate(SignedCycleType.parse("3,-1"), 3)
    (104,)
    """
    return closed_form_decomposition(tau).orders(q)


def torus_order(tau, q: int) -> int:
    """prod(q^length - sign) over the parts; the law every
    decomposition must satisfy.

    >>> torus_order(SignedCycleType.parse("1,-3"), 3)
    56
    """
    ctype = tau.ctype if isinstance(tau, TorusClass) else tau
    out = 1
    for length, sign in zip(ctype.lengths, ctype.signs):
        out *= q**length - sign
    return out


def canonical_invariants(orders) -> tuple[int, ...]:
    """Canonical divisor chain of a direct product of cyclic groups,
    trivial factors dropped.  Pure gcd/lcm sifting, no factorization.

    >>> canonical_invariants([10, 8])
    (2, 40)
    >>> canonical_invariants([5, 3])
    (15,)
    >>> canonical_invariants([1, 7])
    (7,)
    """
    vals = []
    for n in orders:
        if n < 1:
            raise ValueError(f"orders must be positive, got {n}")
        if n > 1:
            vals.append(int(n))
    changed = True
    while changed:
        changed = False
        for i in range(len(vals)):
            for j in range(i + 1, len(vals)):
                a, b = vals[i], vals[j]
                if b % a:
                    g = gcd(a, b)
                    vals[i], vals[j] = g, a * b // g
                    changed = True
    return tuple(sorted(v for v in vals if v > 1))


def oracle_invariants(tau, q: int) -> tuple[int, ...]:
    """Nontrivial invariant factors of the lattice matrix: the
    independent route the closed form is checked against."""
    return tuple(x for x in invariant_factors(torus_matrix(tau, q)) if x > 1)


# ---------------------------------------------------------------------------
# centers


def center_invariants(l: int, form, q: int) -> tuple[int, ...]:
    """Invariants of the center: (gcd(2,q-1))^2 for form plus with l
    even, else the cyclic gcd(4, q^l - sign).  Trivial factors dropped.

    >>> center_invariants(4, "plus", 3)
    (2, 2)
    >>> center_invariants(4, "minus", 3)
    (2,)
    >>> center_invariants(3, "minus", 3)
    (4,)
    """
    form = GroupForm.coerce(form)
    if l < 2:
        raise ValueError("degree must be at least 2")
    if form is GroupForm.PLUS and l % 2 == 0:
        d = gcd(2, q - 1)
        raw: tuple[int, ...] = (d, d)
    else:
        raw = (gcd(4, q**l - form.sign),)
    return tuple(x for x in raw if x > 1)


def _valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def embeds(sub: tuple[int, ...], big: tuple[int, ...]) -> bool:
    """Whether the abelian group with invariants ``sub`` embeds into
    the one with invariants ``big``: prime by prime, the descending
    exponent lists must dominate.

    >>> embeds((2, 2), (2, 4))
    True
    >>> embeds((4,), (2, 2))
    False
    """
    primes = set()
    for n in sub:
        primes.update(_prime_factors(n))
    for p in primes:
        have = sorted((_valuation(n, p) for n in big), reverse=True)
        need = sorted((_valuation(n, p) for n in sub), reverse=True)
        for k, exp in enumerate(need):
            if exp == 0:
                break
            if k >= len(have) or have[k] < exp:
                return False
    return True


def is_prime_power(n: int) -> bool:
    """
    >>> [m for m in range(2, 20) if is_prime_power(m)]
    [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19]
    """
    if n < 2:
        return False
    ps = _prime_factors(n)
    return len(ps) == 1


# ---------------------------------------------------------------------------
# two-adic helpers (additive convention: values are a^n + eps)


def power_two_part(a: int, n: int, eps: int) -> int:
    """Predicted 2-part of a^n + eps for odd a, without computing the
    power.  Additive convention: eps=-1 describes a^n - 1.

    >>> power_two_part(3, 2, -1)   # (3^2 - 1) has 2-part 8
    8
    >>> power_two_part(3, 2, 1)    # (3^2 + 1) has 2-part 2
    2
    >>> power_two_part(5, 3, -1)
    4
    """
    if a < 3 or a % 2 == 0:
        raise ValueError("a must be odd and at least 3")
    if n < 1:
        raise ValueError("n must be positive")
    if eps == -1:
        if n % 2 == 0 and a % 4 == 3:
            return two_part(n) * two_part(a + 1)
        return two_part(n) * two_part(a - 1)
    if eps == 1:
        return two_part(a + 1) if n % 2 else 2
    raise ValueError("eps must be +-1")


def power_gcd_closed_form(case: str, a: int, n1: int, n2: int, eps: int) -> int:
    """Predicted gcd for the classic pairs of numbers a^n +- 1, odd a.
    Additive convention throughout (arguments describe a^n + eps):

    case "ii":  n1, n2 odd:       gcd(a^n1 - eps, a^n2 + eps) = 2
    case "iii": n1 even, n2 odd:  gcd(a^n1 + 1,   a^n2 + eps) = 2
    case "iv":  n1, n2 odd:       gcd(a^n1 + eps, a^n2 + eps) = a^(n1,n2) + eps
    case "v":   n1 even, n2 odd:  gcd(a^n1 - 1,   a^n2 + eps) = a^(n1,n2) + eps

    >>> power_gcd_closed_form("ii", 3, 1, 3, 1)
    2
    >>> power_gcd_closed_form("v", 3, 2, 1, -1)
    2
    >>> power_gcd_closed_form("iv", 3, 3, 1, -1)
    2
    """
    if a < 3 or a % 2 == 0:
        raise ValueError("a must be odd and at least 3")
    if n1 < 1 or n2 < 1:
        raise ValueError("exponents must be positive")
    if eps not in (1, -1):
        raise ValueError("eps must be +-1")
    if case == "ii":
        if n1 % 2 == 0 or n2 % 2 == 0:
            raise ValueError("case ii needs both exponents odd")
        return 2
    if case == "iii":
        if n1 % 2 or n2 % 2 == 0:
            raise ValueError("case iii needs n1 even, n2 odd")
        return 2
    if case == "iv":
        if n1 % 2 == 0 or n2 % 2 == 0:
            raise ValueError("case iv needs both exponents odd")
        return a ** gcd(n1, n2) + eps
    if case == "v":
        if n1 % 2 or n2 % 2 == 0:
            raise ValueError("case v needs n1 even, n2 odd")
        return a ** gcd(n1, n2) + eps
    raise ValueError(f"unknown case {case!r}")


def exchange_identity_check(a: int, n1: int, n2: int, n3: int, eps: int) -> bool:
    """For odd a with a = eps mod 4, odd n1, n2 and even n3:

      Z_{(a^n1+eps)(a^n2-eps)} x Z_{a^n3+1}
        is isomorphic to
      Z_{a^n1+eps} x Z_{(a^n2-eps)(a^n3+1)}

    (additive convention).  Verified by comparing canonical invariants.

    >>> exchange_identity_check(3, 1, 1, 2, -1)
    True
    """
    if a < 3 or a % 2 == 0 or (a - eps) % 4:
        raise ValueError("need odd a with a = eps mod 4")
    if n1 % 2 == 0 or n2 % 2 == 0 or n3 % 2:
        raise ValueError("need n1, n2 odd and n3 even")
    x = a**n1 + eps
    y = a**n2 - eps
    z = a**n3 + 1
    return canonical_invariants([x * y, z]) == canonical_invariants([x, y * z])


def gcd_doubling_check(a: int, b: int) -> bool:
    """When the 2-part of a is at least that of b, doubling a cannot
    grow the gcd: gcd(2a, b) == gcd(a, b).

    >>> gcd_doubling_check(4, 2) and gcd_doubling_check(6, 2) and gcd_doubling_check(12, 4)
    True
    """
    if a < 1 or b < 1:
        raise ValueError("positive integers only")
    if two_part(a) < two_part(b):
        raise ValueError("premise needs two_part(a) >= two_part(b)")
    return gcd(2 * a, b) == gcd(a, b)


# ---------------------------------------------------------------------------
# rendering


def _merge_terms(terms: tuple[tuple[int, int], ...]) -> tuple[tuple[int, int], ...]:
    ts = list(terms)
    merged = True
    while merged:
        merged = False
        for a, eps in ts:
            if eps == 1 and (a, -1) in ts:
                ts.remove((a, 1))
                ts.remove((a, -1))
                ts.append((2 * a, 1))
                merged = True
                break
    return tuple(sorted(ts, key=lambda t: (-t[0], -t[1])))


def _poly_key(terms) -> tuple:
    # coefficients of prod(x^a - eps), leading first: polynomial order
    coeffs = [1]
    for a, eps in terms:
        new = [0] * (len(coeffs) + a)
        for i, c in enumerate(coeffs):
            new[i + a] += c
            new[i] -= eps * c
        coeffs = new
    return (len(coeffs) - 1, tuple(reversed(coeffs)))


def display_factors(dec: TorusDecomposition) -> list[CyclicFactor]:
    """Display form of the factors: pairwise merges applied, sorted by
    descending size as polynomials in q."""
    out = [CyclicFactor(_merge_terms(f.terms)) for f in dec.factors]
    out.sort(key=lambda f: _poly_key(f.terms), reverse=True)
    return out


def _term_body(a: int, eps: int) -> str:
    base = "q" if a == 1 else f"q^{a}"
    return f"{base}-1" if eps == 1 else f"{base}+1"


def _factor_body(f: CyclicFactor) -> str:
    if len(f.terms) == 1:
        return _term_body(*f.terms[0])
    return "".join(f"({_term_body(a, eps)})" for a, eps in f.terms)


def symbolic_decomposition(tau) -> str:
    """Rendered closed form, e.g. 'Z_{(q^3-1)(q+1)}'.

    >>> symbolic_decomposition(SignedCycleType.parse("3,-1"))
    'Z_{(q^3-1)(q+1)}'
    >>> symbolic_decomposition(SignedCycleType.parse("1,-2,-1"))
    'Z_{q^2+1} x Z_{q^2-1}'
    """
    return closed_form_decomposition(tau).symbolic()

"""Signed permutations, signed cycle types, and torus class bookkeeping.

A signed permutation on n points maps each i in {1, ..., n} to a signed
image w(i), where |w| is a bijection of {1, ..., n} and signs propagate
through w(-i) = -w(i).  We store the images of 1..n as a tuple, so
``SignedPermutation((2, -1))`` sends 1 to 2 and 2 to -1.  These are the
symmetries of the hyperoctahedron; the ones with an even number of sign
flips form the type-D reflection group, whose conjugacy data drives
everything else in this package.

Composition reads left to right: ``(u * v)(i) == v(u(i))``.  Under this
convention ``matrices.permutation_matrix`` is a homomorphism,
``matrix(u * v) == matrix(u) @ matrix(v)``.

Cycles are read off the underlying unsigned permutation; a cycle counts
as negative when the signs met along it multiply to -1.  The multiset of
signed cycle lengths is the conjugacy invariant.  It is written with
positive lengths first, both groups in descending order, e.g. the
element with images (2, 1, 4, -3) has type ``2,-2``, while
(2, 1, -4, -3) carries two flips in one cycle and has type ``2,2``.

Torus classes are signed cycle types, except that an all-positive
all-even type labels two distinct classes, tagged '+' and '-'.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

FORM_PLUS = "plus"
FORM_MINUS = "minus"


@dataclass(frozen=True)
class SignedPermutation:
    """A signed permutation, stored as the tuple of images of 1..n.

    >>> w = SignedPermutation((2, -1))
    >>> w(1), w(2), w(-2)
    (2, -1, 1)
    >>> (w * w).images
    (-1, -2)
    >>> w.inverse()(2)
    1
    """

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(abs(x) for x in self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a signed permutation of 1..{n}: {self.images!r}")

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        if i == 0 or abs(i) > self.degree:
            raise ValueError(f"point {i} out of range for degree {self.degree}")
        img = self.images[abs(i) - 1]
        return img if i > 0 else -img

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        if other.degree != self.degree:
            raise ValueError("cannot compose signed permutations of different degrees")
        return SignedPermutation(tuple(other(self(i)) for i in range(1, self.degree + 1)))

    def inverse(self) -> "SignedPermutation":
        imgs = [0] * self.degree
        for i in range(1, self.degree + 1):
            j = self.images[i - 1]
            imgs[abs(j) - 1] = i if j > 0 else -i
        return SignedPermutation(tuple(imgs))

    def sign_count(self) -> int:
        """Number of points sent to a negative image."""
        return sum(1 for x in self.images if x < 0)

    def is_even_signed(self) -> bool:
        """True when the element lies in the type-D subgroup."""
        return self.sign_count() % 2 == 0


def identity(n: int) -> SignedPermutation:
    return SignedPermutation(tuple(range(1, n + 1)))


def negate_point(n: int, k: int) -> SignedPermutation:
    """The involution fixing every point but flipping the sign at k.

    >>> negate_point(3, 3).images
    (1, 2, -3)
    """
    if not 1 <= k <= n:
        raise ValueError(f"point {k} out of range")
    return SignedPermutation(tuple(-i if i == k else i for i in range(1, n + 1)))


def conjugate(w: SignedPermutation, g: SignedPermutation) -> SignedPermutation:
    """g^-1 * w * g; preserves the signed cycle type."""
    return g.inverse() * w * g


@dataclass(frozen=True)
class SignedCycleType:
    """Multiset of signed cycle lengths, held in canonical part order.

    Parts are nonzero integers; a negative part is a negative cycle of
    that length.  Canonical order is positives descending, then
    negatives by length descending.

    >>> SignedCycleType((-1, 2, -2, 1)).parts
    (2, 1, -2, -1)
    >>> SignedCycleType((2, 1, -1)).degree
    4
    >>> SignedCycleType.parse("1,-2,-1").literal()
    '1,-2,-1'
    """

    parts: tuple[int, ...]

    def __post_init__(self):
        if not self.parts:
            raise ValueError("empty cycle type")
        if any(not isinstance(p, int) or p == 0 for p in self.parts):
            raise ValueError(f"parts must be nonzero integers: {self.parts!r}")
        pos = sorted((p for p in self.parts if p > 0), reverse=True)
        neg = sorted((p for p in self.parts if p < 0), key=abs, reverse=True)
        object.__setattr__(self, "parts", tuple(pos) + tuple(neg))

    @classmethod
    def parse(cls, text: str) -> "SignedCycleType":
        try:
            parts = tuple(int(tok) for tok in text.split(","))
        except ValueError:
            raise ValueError(f"bad cycle type literal: {text!r}") from None
        return cls(parts)

    def literal(self) -> str:
        return ",".join(str(p) for p in self.parts)

    @property
    def degree(self) -> int:
        return sum(abs(p) for p in self.parts)

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(abs(p) for p in self.parts)

    @property
    def signs(self) -> tuple[int, ...]:
        """+1 / -1 per part, aligned with ``parts``."""
        return tuple(1 if p > 0 else -1 for p in self.parts)

    @property
    def num_negative(self) -> int:
        return sum(1 for p in self.parts if p < 0)

    @property
    def form(self) -> str:
        """'plus' when the number of negative parts is even, else 'minus'."""
        return FORM_PLUS if self.num_negative % 2 == 0 else FORM_MINUS

    def is_split_eligible(self) -> bool:
        """True for all-positive, all-even types, which label two classes."""
        return all(p > 0 and p % 2 == 0 for p in self.parts)


@dataclass(frozen=True)
class TorusClass:
    """A torus class: a signed cycle type plus a split tag when needed.

    >>> TorusClass(SignedCycleType((2, 2)), "-").literal()
    '2,2:-'
    >>> TorusClass(SignedCycleType((3, -1))).literal()
    '3,-1'
    """

    ctype: SignedCycleType
    split: str | None = None

    def __post_init__(self):
        if self.split is not None:
            if self.split not in ("+", "-"):
                raise ValueError(f"split tag must be '+' or '-', got {self.split!r}")
            if not self.ctype.is_split_eligible():
                raise ValueError(f"type {self.ctype.literal()} does not split")

    @classmethod
    def parse(cls, text: str) -> "TorusClass":
        body, sep, tag = text.partition(":")
        ctype = SignedCycleType.parse(body)
        if not sep:
            return cls(ctype)
        return cls(ctype, tag)

    def literal(self) -> str:
        base = self.ctype.literal()
        return f"{base}:{self.split}" if self.split else base

    @property
    def form(self) -> str:
        return self.ctype.form


def cycle_type(w: SignedPermutation) -> SignedCycleType:
    """Signed cycle type of an element.

    >>> cycle_type(SignedPermutation((2, 1, 4, -3))).literal()
    '2,-2'
    >>> cycle_type(SignedPermutation((2, 1, -4, -3))).literal()
    '2,2'
    >>> cycle_type(SignedPermutation((1, -2))).literal()
    '1,-1'
    """
    seen = [False] * w.degree
    parts = []
    for start in range(1, w.degree + 1):
        if seen[start - 1]:
            continue
        length, sign, i = 0, 1, start
        while not seen[i - 1]:
            seen[i - 1] = True
            img = w(i)
            sign *= 1 if img > 0 else -1
            i = abs(img)
            length += 1
        parts.append(length * sign)
    return SignedCycleType(tuple(parts))


def negative_cycle_parity(w: SignedPermutation) -> int:
    """Parity of the number of negative cycles (0 or 1).

    Equals the parity of the sign count, so it tells the coset of the
    type-D subgroup that w lies in.
    """
    return cycle_type(w).num_negative % 2


def standard_representative(ctype: SignedCycleType) -> SignedPermutation:
    """Block representative: consecutive points per part, one sign flip
    on the closing image of each negative part.

    >>> standard_representative(SignedCycleType((2, -2))).images
    (2, 1, 4, -3)
    """
    imgs = []
    offset = 0
    for p in ctype.parts:
        k = abs(p)
        for i in range(1, k):
            imgs.append(offset + i + 1)
        imgs.append((offset + 1) if p > 0 else -(offset + 1))
        offset += k
    return SignedPermutation(tuple(imgs))


def representative(cls: TorusClass) -> SignedPermutation:
    """Class representative; the '-' member of a split pair is the
    standard one conjugated by the sign flip at the last point.

    >>> representative(TorusClass.parse("2,2:-")).images
    (2, 1, -4, -3)
    """
    w = standard_representative(cls.ctype)
    if cls.split == "-":
        d = negate_point(cls.ctype.degree, cls.ctype.degree)
        w = conjugate(w, d)
    return w


def _partitions(n: int, max_part: int | None = None):
    # descending tuples
    if n == 0:
        yield ()
        return
    top = n if max_part is None else min(max_part, n)
    for first in range(top, 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def _signed_types(l: int):
    for partition in _partitions(l):
        counts = {}
        for p in partition:
            counts[p] = counts.get(p, 0) + 1
        distinct = sorted(counts)
        for negs in itertools.product(*(range(counts[d] + 1) for d in distinct)):
            parts = []
            for d, k in zip(distinct, negs):
                parts.extend([d] * (counts[d] - k))
                parts.extend([-d] * k)
            yield SignedCycleType(tuple(parts))


def _class_sort_key(cls: TorusClass):
    t = cls.ctype
    negated = tuple(sorted((-p for p in t.parts if p < 0), reverse=True))
    unsigned = tuple(sorted(t.lengths, reverse=True))
    return (unsigned, t.num_negative, negated, 0 if cls.split != "-" else 1)


def enumerate_classes(l: int, form: str) -> list[TorusClass]:
    """All torus classes of the given degree and form, canonically ordered.

    Split-eligible types contribute two entries ('+' before '-'); the
    form is decided by the parity of the number of negative parts.

    >>> [c.literal() for c in enumerate_classes(2, "plus")]
    ['1,1', '-1,-1', '2:+', '2:-']
    >>> len(enumerate_classes(4, "minus"))
    9
    """
    if l < 2:
        raise ValueError(f"degree must be at least 2, got {l}")
    if form not in (FORM_PLUS, FORM_MINUS):
        raise ValueError(f"form must be 'plus' or 'minus', got {form!r}")
    out = []
    for t in _signed_types(l):
        if t.form != form:
            continue
        if t.is_split_eligible():
            out.append(TorusClass(t, "+"))
            out.append(TorusClass(t, "-"))
        else:
            out.append(TorusClass(t))
    out.sort(key=_class_sort_key)
    return out

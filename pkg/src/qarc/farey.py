"""Extended rationals, even continued fractions, and the Farey tree.

A rational here lives on the extended line Q union {inf}, with 0 = 0/1 and
inf = 1/0.  Every positive rational has a unique even-length continued
fraction [a1, ..., a2m] (a1 >= 0, the rest >= 1), a unique Farey mediant
decomposition p/q (+) u/v with u*q - p*v = 1, and an attached integer l that
drives every q-weight downstream.

The l convention: l = 0 when the expansion ends in a term >= 2; when it ends
in 1, l is the preceding term, except that a length-two expansion [a, 1]
(the value a+1, parents a/1 and 1/0) takes l = a - 1.  The carve-out makes
l(1/1) = -1 for the base edge (0, inf) and is the unique choice under which
the Farey-weighted recursions agree with the matrix computation everywhere;
the verification sweep enforces exactly that.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


class FractionParseError(ValueError):
    """Unparseable fraction text (a usage error, not a domain error)."""


@dataclass(frozen=True, order=False)
class ExtRational:
    """A reduced fraction r/s on the extended rational line.

    s >= 0 always; infinity is (1, 0), zero is (0, 1); the sign lives on r.
    """

    r: int
    s: int

    def __post_init__(self):
        if self.s < 0 or (self.s == 0 and self.r != 1):
            raise ValueError(f"not canonical: {self.r}/{self.s}")
        if gcd(abs(self.r), self.s) != 1:
            raise ValueError(f"not reduced: {self.r}/{self.s}")

    # -- predicates ----------------------------------------------------------

    def is_infinite(self) -> bool:
        return self.s == 0

    def is_zero(self) -> bool:
        return self.r == 0

    def is_negative(self) -> bool:
        return self.s != 0 and self.r < 0

    def is_positive_finite(self) -> bool:
        return self.s != 0 and self.r > 0

    # -- arithmetic-ish -------------------------------------------------------

    def __neg__(self) -> ExtRational:
        if self.is_infinite():
            return self
        return ExtRational(-self.r, self.s)

    def __abs__(self) -> ExtRational:
        return ExtRational(abs(self.r), self.s)

    def reciprocal(self) -> ExtRational:
        if self.is_infinite():
            return ExtRational(0, 1)
        if self.r == 0:
            return ExtRational(1, 0)
        sign = 1 if self.r > 0 else -1
        return ExtRational(sign * self.s, abs(self.r))

    def as_fraction(self) -> Fraction:
        if self.is_infinite():
            raise ValueError("infinity is not a Fraction")
        return Fraction(self.r, self.s)

    def __lt__(self, other: ExtRational) -> bool:
        # inf is the greatest element; total order on the rest.
        if self.is_infinite():
            return False
        if other.is_infinite():
            return True
        return self.r * other.s < other.r * self.s

    def __le__(self, other: ExtRational) -> bool:
        return self == other or self < other

    def __str__(self) -> str:
        if self.is_infinite():
            return "inf"
        if self.s == 1:
            return str(self.r)
        return f"{self.r}/{self.s}"

    def __repr__(self) -> str:
        return f"ExtRational({self.r}, {self.s})"


ZERO = ExtRational(0, 1)
ONE = ExtRational(1, 1)
INF = ExtRational(1, 0)


def reduce_fraction(num: int, den: int) -> ExtRational:
    """Canonical reduced form; sign on the numerator; (k, 0) -> 1/0 for k != 0."""
    if num == 0 and den == 0:
        raise ValueError("0/0 is not a rational")
    if den == 0:
        return INF
    if den < 0:
        num, den = -num, -den
    g = gcd(abs(num), den)
    return ExtRational(num // g, den // g)


def parse_fraction(text: str) -> ExtRational:
    """Parse "r/s", "-r/s", plain integers, and the aliases inf/∞/1/0."""
    t = text.strip()
    if t in ("inf", "∞", "1/0", "+inf"):
        return INF
    try:
        if "/" in t:
            a, b = t.split("/", 1)
            return reduce_fraction(int(a), int(b))
        return reduce_fraction(int(t), 1)
    except (ValueError, ZeroDivisionError) as exc:
        raise FractionParseError(f"cannot parse fraction {text!r}") from exc


# -- continued fractions ---------------------------------------------------------


def cf_expand_even(x: ExtRational) -> list[int]:
    """Even-length continued fraction [a1, ..., a2m] of a positive rational.

    Greedy expansion followed by a parity fix: an odd expansion ending in
    a >= 2 becomes [..., a-1, 1]; the single term [1] becomes [0, 1].
    0 and inf are atoms handled by callers, never expanded here.
    """
    if not x.is_positive_finite():
        raise ValueError(f"even continued fractions require x > 0 finite, got {x}")
    terms = []
    num, den = x.r, x.s
    while den:
        a, rem = divmod(num, den)
        terms.append(a)
        num, den = den, rem
    if len(terms) % 2:
        if terms == [1]:
            terms = [0, 1]
        elif terms[-1] >= 2:
            terms[-1] -= 1
            terms.append(1)
        else:
            # Greedy output never ends in 1 except [1]; fold defensively.
            terms[-2] += terms.pop()
    return terms


def cf_value(cf: list[int]) -> ExtRational:
    """Exact value of [a1, ..., ak] = a1 + 1/(a2 + ...); [] is inf."""
    num, den = 1, 0
    for a in reversed(cf):
        num, den = a * num + den, num
    return reduce_fraction(num, den)


@dataclass(frozen=True)
class FareyDecomp:
    """The mediant decomposition x = left (+) right with u*q - p*v = 1."""

    left: ExtRational
    right: ExtRational
    l: int


def farey_decompose(x: ExtRational) -> FareyDecomp:
    """Farey parents and the l-invariant of a positive rational.

    Parents by the continued-fraction surgery on [a1, ..., a2m]:
    left  = [a1, ..., a2m-2 + 1]          if a2m-1 == 1 and m > 1,
            [a1, ..., a2m-1 - 1, 1]       otherwise;
    right = [a1, ..., a2m-1, a2m - 1]     if a2m >= 2,
            [a1, ..., a2m-2]              if a2m == 1.
    l = 0 when a2m >= 2; a2m-1 when a2m == 1 and m > 1; a1 - 1 when m == 1
    and a2m == 1 (so l(1/1) = -1 and l(n+1) = n-1).
    """
    if not x.is_positive_finite():
        raise ValueError(f"farey_decompose requires x > 0 finite, got {x}")
    cf = cf_expand_even(x)
    m = len(cf) // 2

    if m > 1 and cf[-2] == 1:
        left_cf = cf[:-3] + [cf[-3] + 1]
    else:
        left_cf = cf[:-2] + [cf[-2] - 1, 1]
    if cf[-1] >= 2:
        right_cf = cf[:-1] + [cf[-1] - 1]
    else:
        right_cf = cf[:-2]

    if cf[-1] >= 2:
        l = 0
    elif m > 1:
        l = cf[-2]
    else:
        l = cf[0] - 1

    left = cf_value(left_cf)
    right = cf_value(right_cf)
    # Structural guarantees of the decomposition, cheap enough to keep on.
    assert right.r * left.s - left.r * right.s == 1, (x, left, right)
    assert reduce_fraction(left.r + right.r, left.s + right.s) == x
    return FareyDecomp(left, right, l)


def stern_brocot_enum(depth: int) -> list[ExtRational]:
    """All Stern-Brocot mediants between 0/1 and 1/0 down to ``depth`` levels.

    Level 0 is [1/1]; each level lists its 2**d nodes in increasing order, so
    parents always precede children and depth d yields 2**(d+1) - 1 values.
    """
    if depth < 0:
        raise ValueError("depth must be >= 0")
    out: list[ExtRational] = []
    level = [(ZERO, INF)]
    for _ in range(depth + 1):
        nxt = []
        for lo, hi in level:
            med = ExtRational(lo.r + hi.r, lo.s + hi.s)
            out.append(med)
            nxt.append((lo, med))
            nxt.append((med, hi))
        level = nxt
    return out

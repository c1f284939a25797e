"""Right and left q-deformed rational numbers by three independent routes.

Each extended rational x gets two deformations: the right one (flavor
``sharp``) and the left one (flavor ``flat``).  Both are canonical fractions
R(q)/S(q) of integer Laurent polynomials that specialize to r/s at q = 1.

Routes implemented, all returning identical canonical values:

* ``cf``     -- nested evaluation of the even continued fraction, alternating
                q and q^-1 levels, with the flat flavor differing only in the
                innermost q-integer;
* ``matrix`` -- the word in the 2x2 generators [[q,1],[0,1]], [[1,0],[-q,q]]
                applied to the column (1,0) (sharp) or (1,1-q) (flat);
* ``farey``  -- the weighted mediant recursion R(x) = R(left) + w*R(right)
                with w = q^(l+1) for sharp and q^-(l+1) for flat.

Negative rationals reduce to positive ones through
[-x] = -q^-1 * [x]|_{q -> q^-1}; the matrix route can also run the
sign-flipped word directly, and the two must agree.
"""

from __future__ import annotations

from dataclasses import dataclass

from .farey import ExtRational, FareyDecomp, cf_expand_even, farey_decompose
from .laurent import FracPair, LPoly1

FLAVORS = ("sharp", "flat")
METHODS = ("cf", "matrix", "farey", "arc")


def _check_flavor(flavor: str) -> None:
    if flavor not in FLAVORS:
        raise ValueError(f"flavor must be one of {FLAVORS}, got {flavor!r}")


@dataclass(frozen=True)
class QRational:
    """A q-deformed rational: the underlying value, the flavor tag, and the
    canonical numerator/denominator pair."""

    value: ExtRational
    flavor: str
    frac: FracPair

    @property
    def num(self) -> LPoly1:
        return self.frac.num

    @property
    def den(self) -> LPoly1:
        return self.frac.den

    def __str__(self) -> str:
        return str(self.frac)

    def to_json_dict(self) -> dict:
        return {
            "value": str(self.value),
            "flavor": self.flavor,
            "num": self.num.to_json_dict(),
            "den": self.den.to_json_dict(),
        }


def q_integer(a: int, flavor: str) -> LPoly1:
    """The q-deformation of a nonnegative integer.

    sharp: 1 + q + ... + q^(a-1); flat: 1 + q + ... + q^(a-2) + q^a.
    The flat flavor is only ever needed for a >= 1 (innermost continued
    fraction terms are positive) and is rejected at a = 0.
    """
    _check_flavor(flavor)
    if a < 0:
        raise ValueError("q_integer requires a >= 0")
    if flavor == "sharp":
        return LPoly1({i: 1 for i in range(a)})
    if a == 0:
        raise ValueError("flat q-integer is undefined at 0")
    terms = {i: 1 for i in range(a - 1)}
    terms[a] = 1
    return LPoly1(terms)


# Hard-coded values at the two ends of the extended line.
_SEEDS = {
    ("sharp", "zero"): (LPoly1.zero(), LPoly1.one()),
    ("sharp", "inf"): (LPoly1.one(), LPoly1.zero()),
    ("flat", "zero"): (LPoly1({1: 1, 0: -1}), LPoly1({1: 1})),   # (q-1)/q
    ("flat", "inf"): (LPoly1.one(), LPoly1({0: 1, 1: -1})),      # 1/(1-q)
}


def _seed(flavor: str, x: ExtRational) -> QRational:
    key = (flavor, "inf" if x.is_infinite() else "zero")
    num, den = _SEEDS[key]
    return QRational(x, flavor, FracPair(num, den).normalize())


# -- continued-fraction route ---------------------------------------------------


def qdeform_cf(x: ExtRational, flavor: str) -> QRational:
    """Evaluate the nested q-continued-fraction from the innermost level out.

    Level i carries the q-integer [a_i] in q (i odd) or q^-1 (i even) and the
    weight monomial q^(a_i) (resp. q^(-a_i)); the innermost level uses the
    sharp q-integer for sharp and the flat one for flat.
    """
    _check_flavor(flavor)
    if x.is_zero() or x.is_infinite():
        return _seed(flavor, x)
    if x.is_negative():
        raise ValueError("qdeform_cf takes nonnegative input; negate separately")
    cf = cf_expand_even(x)
    n = len(cf)

    inner = q_integer(cf[-1], flavor).invert_q()  # level 2m is a q^-1 level
    frac = FracPair(inner, LPoly1.one())
    for i in range(n - 1, 0, -1):  # remaining levels a_{2m-1} .. a_1
        a = cf[i - 1]
        p = q_integer(a, "sharp")
        if i % 2 == 0:  # even level: everything in q^-1
            p = p.invert_q()
            w = LPoly1.monomial(1, -a)
        else:
            w = LPoly1.monomial(1, a)
        frac = FracPair(p * frac.num + w * frac.den, frac.num)
    return QRational(x, flavor, frac.normalize())


# -- matrix route -----------------------------------------------------------------


@dataclass(frozen=True)
class QMatrix:
    """2x2 matrix over one-variable Laurent polynomials."""

    a: LPoly1
    b: LPoly1
    c: LPoly1
    d: LPoly1

    def __mul__(self, other: QMatrix) -> QMatrix:
        return QMatrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def det(self) -> LPoly1:
        return self.a * self.d - self.b * self.c

    def apply_to_column(self, x: LPoly1, y: LPoly1) -> FracPair:
        return FracPair(self.a * x + self.b * y, self.c * x + self.d * y)

    @classmethod
    def identity(cls) -> QMatrix:
        one, zero = LPoly1.one(), LPoly1.zero()
        return cls(one, zero, zero, one)


def _gen_t1() -> QMatrix:
    q, one, zero = LPoly1({1: 1}), LPoly1.one(), LPoly1.zero()
    m = QMatrix(q, one, zero, one)
    assert m.det() == LPoly1({1: 1})
    return m


def _gen_t2() -> QMatrix:
    q, one, zero = LPoly1({1: 1}), LPoly1.one(), LPoly1.zero()
    m = QMatrix(one, zero, -q, q)
    assert m.det() == LPoly1({1: 1})
    return m


_T1 = _gen_t1()
_T2 = _gen_t2()
# Exact inverses: t1^-1 = [[q^-1, -q^-1], [0, 1]], t2^-1 = [[1, 0], [1, q^-1]].
_T1_INV = QMatrix(LPoly1({-1: 1}), LPoly1({-1: -1}), LPoly1.zero(), LPoly1.one())
_T2_INV = QMatrix(LPoly1.one(), LPoly1.zero(), LPoly1.one(), LPoly1({-1: 1}))


def _power(m: QMatrix, n: int) -> QMatrix:
    out = QMatrix.identity()
    for _ in range(n):
        out = out * m
    return out


def matrix_word(x: ExtRational) -> QMatrix:
    """The generator word t1^(a1) t2^(-a2) ... t2^(-a2m) for x >= 0, with all
    exponents negated for x < 0.  0 uses the expansion [-1, 1]; inf the empty
    word."""
    if x.is_infinite():
        return QMatrix.identity()
    if x.is_zero():
        return _T1_INV * _T2_INV
    cf = cf_expand_even(abs(x))
    neg = x.is_negative()
    word = QMatrix.identity()
    for i, a in enumerate(cf):
        odd_pos = i % 2 == 0
        if odd_pos:
            gen = _T1_INV if neg else _T1
        else:
            gen = _T2 if neg else _T2_INV
        word = word * _power(gen, a)
    return word


def qdeform_matrix(x: ExtRational, flavor: str) -> QRational:
    """Apply the generator word to (1, 0) for sharp or (1, 1-q) for flat."""
    _check_flavor(flavor)
    word = matrix_word(x)
    if flavor == "sharp":
        col = (LPoly1.one(), LPoly1.zero())
    else:
        col = (LPoly1.one(), LPoly1({0: 1, 1: -1}))
    return QRational(x, flavor, word.apply_to_column(*col).normalize())


# -- weighted Farey route -----------------------------------------------------------


def qdeform_farey(x: ExtRational, flavor: str, cache: dict | None = None) -> QRational:
    """Recursive mediant descent: R(x) = R(left) + w R(right) and the same
    for S, with w = q^(l+1) (sharp) or q^-(l+1) (flat); seeds as in the other
    routes.  ``cache`` maps reduced fractions to raw (num, den) pairs and may
    be shared across calls within one session.
    """
    _check_flavor(flavor)
    if x.is_negative():
        raise ValueError("qdeform_farey takes nonnegative input; negate separately")
    if cache is None:
        cache = {}

    def raw(v: ExtRational) -> tuple[LPoly1, LPoly1]:
        key = (v, flavor)
        hit = cache.get(key)
        if hit is not None:
            return hit
        if v.is_zero() or v.is_infinite():
            num, den = _SEEDS[(flavor, "inf" if v.is_infinite() else "zero")]
        else:
            dec = farey_decompose(v)
            ln, ld = raw(dec.left)
            rn, rd = raw(dec.right)
            e = dec.l + 1 if flavor == "sharp" else -(dec.l + 1)
            w = LPoly1.monomial(1, e)
            num, den = ln + w * rn, ld + w * rd
        cache[key] = (num, den)
        return num, den

    num, den = raw(x)
    return QRational(x, flavor, FracPair(num, den).normalize())


# -- negation and dispatch -------------------------------------------------------------


def qdeform_negate(pos: QRational) -> QRational:
    """[-x] = -q^-1 [x]|_(q -> q^-1), renormalized; input must be positive."""
    if not pos.value.is_positive_finite():
        raise ValueError("qdeform_negate requires a positive finite value")
    num = pos.num.invert_q() * LPoly1.monomial(-1, -1)
    den = pos.den.invert_q()
    return QRational(-pos.value, pos.flavor, FracPair(num, den).normalize())


def qdeform(
    x: ExtRational,
    flavor: str,
    method: str = "matrix",
    cache: dict | None = None,
) -> QRational:
    """Dispatch to one of the routes; negatives run through the positive
    computation plus negation, except the matrix route which runs the
    sign-flipped word directly (the two agree; tests pin that down)."""
    if method == "arc":  # late import: arcmodel depends on this module
        from .arcmodel import deformation_from_arcs

        return deformation_from_arcs(x, flavor)
    if method == "matrix":
        return qdeform_matrix(x, flavor)
    if method == "cf":
        fn = qdeform_cf
    elif method == "farey":
        fn = lambda v, f: qdeform_farey(v, f, cache)  # noqa: E731
    else:
        raise ValueError(f"method must be one of {METHODS}, got {method!r}")
    if x.is_negative():
        return qdeform_negate(fn(abs(x), flavor))
    return fn(x, flavor)

"""Exact sparse Laurent polynomials over the integers, in one or two variables.

Everything downstream (q-deformed rationals, intersection polynomials,
bracket state sums) is built from the two classes here:

* ``LPoly1`` -- Laurent polynomials in a single variable (default ``q``),
  stored as a map from integer exponent to nonzero integer coefficient.
* ``LPoly2`` -- Laurent polynomials in two variables ``q1, q2``, stored as a
  map from exponent pairs to nonzero integer coefficients.

Coefficients are Python ints (arbitrary precision); deep Farey recursions
overflow 64-bit coefficient ranges, so exactness is non-negotiable.
``FracPair`` is the value type for formal fractions of one-variable
polynomials, with a single canonical representative per value.
"""

from __future__ import annotations

class ArityError(TypeError):
    """Mixed one/two-variable operands, or mismatched variable names."""


def _clean(terms: dict) -> dict:
    return {e: c for e, c in terms.items() if c != 0}


class LPoly1:
    """Sparse Laurent polynomial in one variable with integer coefficients.

    Immutable.  Exponents may be negative.  The zero polynomial has no terms.
    """

    __slots__ = ("_terms", "var", "_hash")

    def __init__(self, terms: dict[int, int] | None = None, var: str = "q"):
        self._terms = _clean(dict(terms) if terms else {})
        self.var = var
        self._hash: int | None = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, var: str = "q") -> LPoly1:
        return cls({}, var)

    @classmethod
    def one(cls, var: str = "q") -> LPoly1:
        return cls({0: 1}, var)

    @classmethod
    def monomial(cls, coeff: int, exp: int, var: str = "q") -> LPoly1:
        return cls({exp: coeff}, var)

    # -- structure ---------------------------------------------------------

    def items(self) -> list[tuple[int, int]]:
        """Terms as (exponent, coefficient), ascending exponent."""
        return sorted(self._terms.items())

    def coeff(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def valuation(self) -> int:
        """Lowest exponent; undefined on zero."""
        if not self._terms:
            raise ValueError("zero polynomial has no valuation")
        return min(self._terms)

    def degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(self._terms)

    def has_nonnegative_coeffs(self) -> bool:
        return all(c >= 0 for c in self._terms.values())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LPoly1):
            return NotImplemented
        return self.var == other.var and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.var, tuple(self.items())))
        return self._hash

    # -- ring arithmetic ----------------------------------------------------

    def _check(self, other: LPoly1) -> None:
        if not isinstance(other, LPoly1):
            raise ArityError(f"expected LPoly1, got {type(other).__name__}")
        if self.var != other.var:
            raise ArityError(f"variable mismatch: {self.var!r} vs {other.var!r}")

    def __add__(self, other: LPoly1) -> LPoly1:
        self._check(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LPoly1(out, self.var)

    def __sub__(self, other: LPoly1) -> LPoly1:
        self._check(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) - c
        return LPoly1(out, self.var)

    def __neg__(self) -> LPoly1:
        return LPoly1({e: -c for e, c in self._terms.items()}, self.var)

    def __mul__(self, other: LPoly1) -> LPoly1:
        self._check(other)
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LPoly1(out, self.var)

    def shift(self, k: int) -> LPoly1:
        """Multiply by var**k."""
        return LPoly1({e + k: c for e, c in self._terms.items()}, self.var)

    def scale(self, c: int) -> LPoly1:
        return LPoly1({e: c * v for e, v in self._terms.items()}, self.var)

    # -- substitutions -------------------------------------------------------

    def invert_q(self) -> LPoly1:
        """Substitute var -> var**-1 (exponent negation).  An involution."""
        return LPoly1({-e: c for e, c in self._terms.items()}, self.var)

    def eval_ones(self) -> int:
        """Evaluate at var = 1, i.e. the sum of all coefficients."""
        return sum(self._terms.values())

    def rename(self, var: str) -> LPoly1:
        return LPoly1(self._terms, var)

    # -- presentation ---------------------------------------------------------

    def __str__(self) -> str:
        return render_poly1(self)

    def __repr__(self) -> str:
        return f"LPoly1({dict(self.items())!r}, var={self.var!r})"

    def to_json_dict(self) -> dict:
        return {"var": self.var, "terms": [[e, c] for e, c in self.items()]}

    @classmethod
    def from_json_dict(cls, data: dict) -> LPoly1:
        return cls({int(e): int(c) for e, c in data["terms"]}, data.get("var", "q"))


class LPoly2:
    """Sparse Laurent polynomial in two variables q1, q2 over the integers."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: dict[tuple[int, int], int] | None = None):
        self._terms = _clean(dict(terms) if terms else {})
        self._hash: int | None = None

    @classmethod
    def zero(cls) -> LPoly2:
        return cls({})

    @classmethod
    def one(cls) -> LPoly2:
        return cls({(0, 0): 1})

    @classmethod
    def monomial(cls, coeff: int, e1: int, e2: int) -> LPoly2:
        return cls({(e1, e2): coeff})

    def items(self) -> list[tuple[tuple[int, int], int]]:
        """Terms as ((e1, e2), coefficient), lexicographically ascending."""
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def has_nonnegative_coeffs(self) -> bool:
        return all(c >= 0 for c in self._terms.values())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LPoly2):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self.items()))
        return self._hash

    def _check(self, other: LPoly2) -> None:
        if not isinstance(other, LPoly2):
            raise ArityError(f"expected LPoly2, got {type(other).__name__}")

    def __add__(self, other: LPoly2) -> LPoly2:
        self._check(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LPoly2(out)

    def __sub__(self, other: LPoly2) -> LPoly2:
        self._check(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) - c
        return LPoly2(out)

    def __neg__(self) -> LPoly2:
        return LPoly2({e: -c for e, c in self._terms.items()})

    def __mul__(self, other: LPoly2) -> LPoly2:
        self._check(other)
        out: dict[tuple[int, int], int] = {}
        for (a1, a2), c1 in self._terms.items():
            for (b1, b2), c2 in other._terms.items():
                e = (a1 + b1, a2 + b2)
                out[e] = out.get(e, 0) + c1 * c2
        return LPoly2(out)

    def eval_ones(self) -> int:
        """Evaluate at q1 = q2 = 1."""
        return sum(self._terms.values())

    # -- grading collapses ----------------------------------------------------

    def set_q2_to_q1_pow(self, n: int) -> LPoly1:
        """Substitute q2 -> q1**n; each (e1, e2) becomes exponent e1 + n*e2.

        Returns a one-variable polynomial in ``q1``.
        """
        out: dict[int, int] = {}
        for (e1, e2), c in self._terms.items():
            e = e1 + n * e2
            out[e] = out.get(e, 0) + c
        return LPoly1(out, var="q1")

    def collapse_to_single(self) -> tuple[int, LPoly1]:
        """Factor as q1**c * P(q1^-1 q2) when all exponent pairs satisfy
        e1 + e2 = c for one constant c.

        Returns (c, P) with P a polynomial in q = q1^-1 q2 (exponent e2 per
        monomial).  Raises ValueError when the exponent pairs do not lie on a
        single such line; that signals a violated grading invariant upstream.
        """
        if not self._terms:
            return 0, LPoly1.zero()
        lines = {e1 + e2 for (e1, e2) in self._terms}
        if len(lines) != 1:
            raise ValueError(
                f"exponent pairs not on a single line e1+e2=c: lines {sorted(lines)}"
            )
        c = lines.pop()
        return c, LPoly1({e2: v for (e1, e2), v in self._terms.items()})

    def __str__(self) -> str:
        return render_poly2(self)

    def __repr__(self) -> str:
        return f"LPoly2({dict(self.items())!r})"

    def to_json_dict(self) -> dict:
        return {"vars": ["q1", "q2"], "terms": [[[e1, e2], c] for (e1, e2), c in self.items()]}

    @classmethod
    def from_json_dict(cls, data: dict) -> LPoly2:
        return cls({(int(e[0]), int(e[1])): int(c) for e, c in data["terms"]})


def expand_collapsed(prefactor: int, p: LPoly1) -> LPoly2:
    """Inverse of LPoly2.collapse_to_single: q1**prefactor * P(q1^-1 q2)."""
    return LPoly2({(prefactor - e, e): c for e, c in p.items()})


def lift_to_q1inv_q2(p: LPoly1) -> LPoly2:
    """Substitute q -> q1^-1 q2 into a one-variable polynomial."""
    return LPoly2({(-e, e): c for e, c in p.items()})


# -- fractions ----------------------------------------------------------------


class FracPair:
    """A formal fraction num/den of one-variable Laurent polynomials.

    ``den == 0`` is allowed only for the single sanctioned value representing
    infinity (canonically 1/0).  No polynomial GCD cancellation is performed;
    only the common-monomial/sign normalization below, which already yields a
    unique representative for every value this library produces.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LPoly1, den: LPoly1):
        if num.is_zero() and den.is_zero():
            raise ValueError("0/0 is not a value")
        self.num = num
        self.den = den

    def is_infinite(self) -> bool:
        return self.den.is_zero()

    def normalize(self) -> FracPair:
        """Canonical representative: strip the common monomial q**k with
        k = min(valuation(num), valuation(den)), then fix the sign so the
        lowest nonzero coefficient of the denominator (of the numerator when
        den == 0) is positive.
        """
        num, den = self.num, self.den
        vals = [p.valuation() for p in (num, den) if not p.is_zero()]
        k = min(vals)
        num = num.shift(-k)
        den = den.shift(-k)
        anchor = den if not den.is_zero() else num
        if anchor.coeff(anchor.valuation()) < 0:
            num = -num
            den = -den
        return FracPair(num, den)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FracPair):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __str__(self) -> str:
        return f"{_wrap(self.num)}/{_wrap(self.den)}"

    def __repr__(self) -> str:
        return f"FracPair({self.num!r}, {self.den!r})"

    def to_json_dict(self) -> dict:
        return {"num": self.num.to_json_dict(), "den": self.den.to_json_dict()}


# -- plain rendering ------------------------------------------------------------
#
# Plain output lists terms by descending exponent (the order fractions are
# customarily written in), omits the q**0 factor, and writes exponent one
# without a caret: "q^3+q^2+1", "-2q^3", "1+q1^-2".

def _term_str(coeff: int, exp: int, var: str, lead: bool) -> str:
    sign = "-" if coeff < 0 else ("" if lead else "+")
    a = abs(coeff)
    if exp == 0:
        body = str(a)
    else:
        pw = var if exp == 1 else f"{var}^{exp}"
        body = pw if a == 1 else f"{a}{pw}"
    return sign + body


def render_poly1(p: LPoly1) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for i, (e, c) in enumerate(sorted(p.items(), reverse=True)):
        parts.append(_term_str(c, e, p.var, lead=(i == 0)))
    return "".join(parts)


def _mono2_str(e1: int, e2: int) -> str:
    factors = []
    if e1 != 0:
        factors.append("q1" if e1 == 1 else f"q1^{e1}")
    if e2 != 0:
        factors.append("q2" if e2 == 1 else f"q2^{e2}")
    return "*".join(factors) if factors else ""


def render_poly2(p: LPoly2) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for i, ((e1, e2), c) in enumerate(sorted(p.items(), reverse=True)):
        sign = "-" if c < 0 else ("" if i == 0 else "+")
        a = abs(c)
        mono = _mono2_str(e1, e2)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        parts.append(sign + body)
    return "".join(parts)


def _wrap(p: LPoly1) -> str:
    """Numerator/denominator rendering: parenthesize sums, pull the sign out
    of an all-negative polynomial so -(q+1)/q^2 reads naturally.
    """
    if p.is_zero():
        return "0"
    if len(p.items()) == 1:
        return render_poly1(p)
    if all(c < 0 for _, c in p.items()):
        return f"-({render_poly1(-p)})"
    return f"({render_poly1(p)})"

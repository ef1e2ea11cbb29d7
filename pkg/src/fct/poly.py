"""Exact bivariate integer polynomials and the triangle transformations.

A polynomial is a mapping (xdeg, ydeg) -> coefficient with arbitrary
precision integers.  All transformation rules between the H-, F- and
M-triangles are implemented monomial by monomial in denominator-free
form; the support preconditions that make them denominator-free are
enforced:

* H-triangles: ydeg <= xdeg on every monomial,
* F-triangles: xdeg + ydeg <= n,
* M-triangles: ydeg >= xdeg.

>>> p = BivarPoly({(0, 0): 1, (1, 1): 1})
>>> h_from_m(BivarPoly({(0, 0): 1, (0, 1): -1, (1, 1): 1}), 1) == p
True
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InternalInvariantError, UsageError


class BivarPoly:
    """Immutable-by-convention bivariate polynomial over the integers."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {k: v for k, v in (coeffs or {}).items() if v}

    @classmethod
    def zero(cls) -> "BivarPoly":
        return cls()

    @classmethod
    def one(cls) -> "BivarPoly":
        return cls({(0, 0): 1})

    @classmethod
    def monomial(cls, i: int, j: int, c: int = 1) -> "BivarPoly":
        return cls({(i, j): c})

    def __eq__(self, other) -> bool:
        return isinstance(other, BivarPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other) -> "BivarPoly":
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return BivarPoly(out)

    def __sub__(self, other) -> "BivarPoly":
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) - v
        return BivarPoly(out)

    def __neg__(self) -> "BivarPoly":
        return BivarPoly({k: -v for k, v in self.coeffs.items()})

    def __mul__(self, other) -> "BivarPoly":
        if isinstance(other, int):
            return BivarPoly({k: v * other for k, v in self.coeffs.items()})
        out = {}
        for (i1, j1), v1 in self.coeffs.items():
            for (i2, j2), v2 in other.coeffs.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + v1 * v2
        return BivarPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "BivarPoly":
        if e < 0:
            raise UsageError("negative power of a polynomial")
        out = BivarPoly.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        return f"BivarPoly({self.coeffs!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for (i, j) in sorted(self.coeffs):
            c = self.coeffs[(i, j)]
            mono = ("" if i == 0 else "x" if i == 1 else f"x^{i}") + (
                "" if j == 0 else "y" if j == 1 else f"y^{j}"
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}{mono}")
        text = " + ".join(parts)
        return text.replace("+ -", "- ")

    def coeff(self, i: int, j: int) -> int:
        return self.coeffs.get((i, j), 0)

    def evaluate(self, x, y):
        return sum(c * x**i * y**j for (i, j), c in self.coeffs.items())

    def substitute_y(self, y) -> "BivarPoly":
        """Collapse the y variable at an integer value."""
        out = {}
        for (i, j), c in self.coeffs.items():
            k = (i, 0)
            out[k] = out.get(k, 0) + c * y**j
        return BivarPoly(out)

    def dy(self) -> "BivarPoly":
        """Partial derivative with respect to y."""
        return BivarPoly({(i, j - 1): c * j for (i, j), c in self.coeffs.items() if j})

    def xdeg(self) -> int:
        return max((i for i, _ in self.coeffs), default=0)

    def monomial_list(self) -> list:
        """Sorted [xdeg, ydeg, coefficient] rows, the canonical wire form."""
        return [[i, j, self.coeffs[(i, j)]] for (i, j) in sorted(self.coeffs)]

    @classmethod
    def from_monomial_list(cls, rows) -> "BivarPoly":
        return cls({(int(i), int(j)): int(c) for i, j, c in rows})

    def latex(self, var1: str = "x", var2: str = "y") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for (i, j) in sorted(self.coeffs):
            c = self.coeffs[(i, j)]
            mono = ""
            if i:
                mono += var1 if i == 1 else f"{var1}^{{{i}}}"
            if j:
                mono += var2 if j == 1 else f"{var2}^{{{j}}}"
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def require_h_support(p: BivarPoly) -> None:
    for i, j in p.coeffs:
        if j > i:
            raise UsageError(f"H-triangle support violated at {(i, j)}")


def require_f_support(p: BivarPoly, n: int) -> None:
    for i, j in p.coeffs:
        if i + j > n:
            raise UsageError(f"F-triangle support violated at {(i, j)} for rank {n}")


def require_m_support(p: BivarPoly) -> None:
    for i, j in p.coeffs:
        if j < i:
            raise UsageError(f"M-triangle support violated at {(i, j)}")


_X = BivarPoly.monomial(1, 0)
_Y = BivarPoly.monomial(0, 1)
_ONE = BivarPoly.one()
_XM1 = _X - _ONE  # x - 1
_ONEMX = _ONE - _X  # 1 - x
_U = _ONE + (_Y - _ONE) * _X  # 1 + (y - 1) x


def h_from_f(f: BivarPoly, n: int) -> BivarPoly:
    """H(x, y) = (x-1)^n F(1/(x-1), (1 + (y-1)x)/(x-1))."""
    require_f_support(f, n)
    out = BivarPoly.zero()
    for (l, m), c in f.coeffs.items():
        out = out + c * (_U**m) * (_XM1 ** (n - l - m))
    return out


def h_from_m(m: BivarPoly, n: int) -> BivarPoly:
    """H(x, y) = (1 + (y-1)x)^n M(y/(y-1), (y-1)x/(1 + (y-1)x))."""
    require_m_support(m)
    out = BivarPoly.zero()
    for (a, b), c in m.coeffs.items():
        if b > n:
            raise UsageError("M-triangle degree exceeds rank")
        out = out + c * (_Y**a) * ((_Y - _ONE) ** (b - a)) * (_X**b) * (_U ** (n - b))
    return out


def f_from_m(m: BivarPoly, n: int) -> BivarPoly:
    """F(x, y) = y^n M((1+y)/(y-x), (y-x)/y)."""
    require_m_support(m)
    out = BivarPoly.zero()
    for (a, b), c in m.coeffs.items():
        if b > n:
            raise UsageError("M-triangle degree exceeds rank")
        out = out + c * ((_ONE + _Y) ** a) * ((_Y - _X) ** (b - a)) * (_Y ** (n - b))
    return out


def m_from_h(h: BivarPoly, n: int) -> BivarPoly:
    """M(x, y) = (1-y)^n H(y(x-1)/(1-y), x/(x-1)); inverse of h_from_m."""
    require_h_support(h)
    one_my = _ONE - _Y
    out = BivarPoly.zero()
    for (i, j), c in h.coeffs.items():
        if i > n:
            raise UsageError("H-triangle degree exceeds rank")
        out = out + c * (_Y**i) * (_X**j) * (_XM1 ** (i - j)) * (one_my ** (n - i))
    return out


def h_from_f_k1(f: BivarPoly, n: int) -> BivarPoly:
    """The k = 1 alternative form H(x, y) = (1-x)^n F(x/(1-x), xy/(1-x))."""
    require_f_support(f, n)
    out = BivarPoly.zero()
    for (l, m), c in f.coeffs.items():
        out = out + c * (_X ** (l + m)) * (_Y**m) * (_ONEMX ** (n - l - m))
    return out


def f_self_dual_image(f: BivarPoly, n: int) -> BivarPoly:
    """(-1)^n F(-1-x, -1-y), which equals F at k = 1."""
    mxm1 = -_ONE - _X
    mym1 = -_ONE - _Y
    out = BivarPoly.zero()
    for (l, m), c in f.coeffs.items():
        out = out + c * (mxm1**l) * (mym1**m)
    return out * (-1) ** n


def h_reciprocal_image(h: BivarPoly, n: int) -> BivarPoly:
    """(-1)^n H(1-x, -xy/(1-x)); maps H at -k onto H at k."""
    require_h_support(h)
    out = BivarPoly.zero()
    for (i, j), c in h.coeffs.items():
        out = out + c * (_ONEMX ** (i - j)) * ((-_X * _Y) ** j)
    return out * (-1) ** n


def m_reciprocal_image(m: BivarPoly, n: int) -> BivarPoly:
    """y^n M(xy, 1/y); maps M at -k onto M at k."""
    require_m_support(m)
    out = BivarPoly.zero()
    for (a, b), c in m.coeffs.items():
        if b > n:
            raise UsageError("M-triangle degree exceeds rank")
        out = out + c * (_X**a) * (_Y ** (n + a - b))
    return out


def h_dual_image(h: BivarPoly, n: int) -> BivarPoly:
    """x^n H(1/x, 1 + (y-1)x); equals H at k = 1."""
    require_h_support(h)
    out = BivarPoly.zero()
    for (i, j), c in h.coeffs.items():
        if i > n:
            raise UsageError("H-triangle degree exceeds rank")
        out = out + c * (_X ** (n - i)) * (_U**j)
    return out


def f_from_h_k1(h: BivarPoly, n: int) -> BivarPoly:
    """F(x, y) = x^n H((x+1)/x, (y+1)/(x+1)) at k = 1."""
    require_h_support(h)
    out = BivarPoly.zero()
    for (i, j), c in h.coeffs.items():
        if i > n:
            raise UsageError("H-triangle degree exceeds rank")
        out = out + c * ((_X + _ONE) ** (i - j)) * ((_Y + _ONE) ** j) * (_X ** (n - i))
    return out


def ceiling_specialization(h: BivarPoly) -> BivarPoly:
    """H(x, 1 - 1/x), a polynomial in x thanks to the support condition."""
    require_h_support(h)
    out = BivarPoly.zero()
    for (i, j), c in h.coeffs.items():
        out = out + c * (_X ** (i - j)) * (_XM1**j)
    return out


def bottom_specialization(h: BivarPoly, n: int) -> BivarPoly:
    """x^n H(1/x, 0), a polynomial in x."""
    require_h_support(h)
    out = BivarPoly.zero()
    for (i, j), c in h.coeffs.items():
        if j == 0:
            if i > n:
                raise UsageError("H-triangle degree exceeds rank")
            out = out + c * (_X ** (n - i))
    return out


def _lagrange_fit(points) -> tuple:
    """Coefficients (ascending) of the polynomial through the given points."""
    coeffs = [Fraction(0)] * len(points)
    for xi, yi in points:
        num = [Fraction(1)]  # running product of (x - xj), ascending coefficients
        den = Fraction(1)
        for xj, _ in points:
            if xj == xi:
                continue
            num = [
                (num[p - 1] if p else Fraction(0)) - xj * (num[p] if p < len(num) else Fraction(0))
                for p in range(len(num) + 1)
            ]
            den *= Fraction(xi - xj)
        for p, c in enumerate(num):
            coeffs[p] += Fraction(yi) * c / den
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _poly_eval(coeffs, x) -> Fraction:
    out = Fraction(0)
    for c in reversed(coeffs):
        out = out * x + c
    return out


@dataclass(frozen=True)
class KFamily:
    """A family of triangles indexed by the positive integer parameter k.

    Each coefficient is interpolated as a polynomial in k of degree at
    most ``degree_bound``; the fit must reproduce every supplied sample
    exactly.
    """

    samples: tuple  # tuple of (k, BivarPoly), k strictly increasing
    degree_bound: int

    @classmethod
    def fit(cls, samples: dict, degree_bound: int) -> "KFamily":
        ordered = tuple(sorted(samples.items()))
        if len(ordered) < degree_bound + 1:
            raise UsageError(
                f"need at least {degree_bound + 1} samples, got {len(ordered)}"
            )
        fam = cls(samples=ordered, degree_bound=degree_bound)
        fam.coefficient_polynomials  # force the fit and its verification
        return fam

    @property
    def coefficient_polynomials(self) -> dict:
        monomials = set()
        for _, p in self.samples:
            monomials |= set(p.coeffs)
        fit_points = self.samples[: self.degree_bound + 1]
        out = {}
        for key in sorted(monomials):
            pts = [(k, p.coeff(*key)) for k, p in fit_points]
            coeffs = _lagrange_fit(pts)
            if len(coeffs) > self.degree_bound + 1:
                raise InternalInvariantError("interpolation degree bound exceeded")
            for k, p in self.samples:
                if _poly_eval(coeffs, k) != p.coeff(*key):
                    raise InternalInvariantError(
                        f"coefficient {key} is not polynomial of degree "
                        f"<= {self.degree_bound} in k"
                    )
            out[key] = coeffs
        return out

    def predict(self, k: int) -> BivarPoly:
        """Evaluate the family at any integer k (negative values allowed)."""
        out = {}
        for key, coeffs in self.coefficient_polynomials.items():
            v = _poly_eval(coeffs, k)
            if v.denominator != 1:
                raise InternalInvariantError("interpolated value is not an integer")
            if v:
                out[key] = int(v)
        return BivarPoly(out)

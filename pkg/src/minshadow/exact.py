"""Exact arithmetic substrate: binomials, dense polynomials, rational
matrices, and affine forms over named parameters.

Integers are Python ints, rationals are fractions.Fraction, a polynomial
is a coefficient list indexed by exponent (trailing zeros trimmed, the
zero polynomial is []), and a matrix is a rectangular list of rows.
Every routine is a pure function over immutable-by-convention values;
nothing here ever touches floating point.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Mapping, Sequence

Scalar = int | Fraction


class SingularMatrixError(ValueError):
    """Raised when a matrix inverse is requested for a singular matrix."""


class LinearSystemError(ValueError):
    """Raised when a linear system has no solution."""


def binomial(n: int, k: int) -> int:
    """C(n, k) with the out-of-range convention C(n, k) = 0 for k < 0 or k > n.

    A negative upper index is rejected: callers are expected to rewrite
    such binomials into nonnegative-top form first.
    """
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


# ---------------------------------------------------------------------------
# dense univariate polynomials


def poly_trim(p: Sequence[Scalar]) -> list[Scalar]:
    """Strip trailing zero coefficients."""
    n = len(p)
    while n and not p[n - 1]:
        n -= 1
    return list(p[:n])


def poly_add(p: Sequence[Scalar], q: Sequence[Scalar]) -> list[Scalar]:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] = out[i] + c
    return poly_trim(out)


def poly_scale(c: Scalar, p: Sequence[Scalar]) -> list[Scalar]:
    if not c:
        return []
    return [c * x for x in p]


def poly_product(p: Sequence[Scalar], q: Sequence[Scalar]) -> list[Scalar]:
    """Exact convolution product."""
    p = poly_trim(p)
    q = poly_trim(q)
    if not p or not q:
        return []
    out: list[Scalar] = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return poly_trim(out)


def poly_pow(p: Sequence[Scalar], e: int) -> list[Scalar]:
    if e < 0:
        raise ValueError("negative polynomial power")
    out: list[Scalar] = [1]
    base = poly_trim(p)
    while e:
        if e & 1:
            out = poly_product(out, base)
        e >>= 1
        if e:
            base = poly_product(base, base)
    return out


def poly_eval(p: Sequence[Scalar], x: Scalar) -> Scalar:
    acc: Scalar = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


# ---------------------------------------------------------------------------
# rational matrices

Matrix = list[list[Fraction]]


def identity_matrix(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def matrix_product(a: Sequence[Sequence[Scalar]], b: Sequence[Sequence[Scalar]]) -> Matrix:
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    out = [[Fraction(0)] * cols for _ in range(rows)]
    for i in range(rows):
        ai = a[i]
        oi = out[i]
        for k in range(inner):
            c = ai[k]
            if c:
                bk = b[k]
                for j in range(cols):
                    if bk[j]:
                        oi[j] += c * bk[j]
    return out


def _pivot_size(x: Fraction) -> int:
    return x.numerator.bit_length() + x.denominator.bit_length()


def matrix_inverse(m: Sequence[Sequence[Scalar]]) -> Matrix:
    """Exact inverse by rational Gauss-Jordan elimination.

    The pivot in each column is the nonzero candidate of smallest
    numerator-times-denominator size, which keeps intermediate entries
    from blowing up on the structured matrices seen here.
    """
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix_inverse requires a square matrix")
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(m)]
    for col in range(n):
        cand = [i for i in range(col, n) if aug[i][col]]
        if not cand:
            raise SingularMatrixError(f"matrix is singular (no pivot in column {col})")
        piv = min(cand, key=lambda i: _pivot_size(aug[i][col]))
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        if pv != 1:
            aug[col] = [x / pv for x in aug[col]]
        prow = aug[col]
        for i in range(n):
            f = aug[i][col]
            if i != col and f:
                aug[i] = [x - f * y for x, y in zip(aug[i], prow)]
    return [row[n:] for row in aug]


# ---------------------------------------------------------------------------
# affine forms


class AffineForm:
    """An exact affine expression  constant + sum(coeff * parameter).

    Parameters are identified by name; zero coefficients are never
    stored, so equality is plain structural equality.  Instances are
    immutable.
    """

    __slots__ = ("constant", "terms")

    def __init__(self, constant: Scalar = 0,
                 terms: Mapping[str, Scalar] | None = None):
        object.__setattr__(self, "constant", Fraction(constant))
        clean = {}
        if terms:
            for name, coeff in terms.items():
                coeff = Fraction(coeff)
                if coeff:
                    clean[name] = coeff
        object.__setattr__(self, "terms", clean)

    @classmethod
    def parameter(cls, name: str, coeff: Scalar = 1) -> "AffineForm":
        return cls(0, {name: coeff})

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("AffineForm is immutable")

    @property
    def is_constant(self) -> bool:
        return not self.terms

    def as_fraction(self) -> Fraction:
        if self.terms:
            raise ValueError(f"affine form {self} is not constant")
        return self.constant

    def parameters(self) -> frozenset[str]:
        return frozenset(self.terms)

    def substitute(self, values: Mapping[str, Scalar]) -> "AffineForm":
        const = self.constant
        rest = {}
        for name, coeff in self.terms.items():
            if name in values:
                const += coeff * Fraction(values[name])
            else:
                rest[name] = coeff
        return AffineForm(const, rest)

    @staticmethod
    def _coerce(other) -> "AffineForm | None":
        if isinstance(other, AffineForm):
            return other
        if isinstance(other, (int, Fraction)):
            return AffineForm(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms = dict(self.terms)
        for name, coeff in o.terms.items():
            terms[name] = terms.get(name, Fraction(0)) + coeff
        return AffineForm(self.constant + o.constant, terms)

    __radd__ = __add__

    def __neg__(self):
        return AffineForm(-self.constant, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return AffineForm(self.constant * other,
                              {k: v * other for k, v in self.terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return AffineForm(self.constant / other,
                              {k: v / other for k, v in self.terms.items()})
        return NotImplemented

    def __bool__(self):
        return bool(self.constant) or bool(self.terms)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.constant == o.constant and self.terms == o.terms

    def __hash__(self):
        return hash((self.constant, tuple(sorted(self.terms.items()))))

    def __str__(self):
        parts: list[str] = []
        if self.constant or not self.terms:
            parts.append(format_exact(self.constant))
        for name in sorted(self.terms):
            coeff = self.terms[name]
            sign = "-" if coeff < 0 else "+"
            mag = abs(coeff)
            body = name if mag == 1 else f"{format_exact(mag)}*{name}"
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"AffineForm({self})"


def as_affine(x) -> AffineForm:
    if isinstance(x, AffineForm):
        return x
    return AffineForm(x)


def parametric_linear_solve(
    a: Sequence[Sequence[Scalar]],
    rhs: Sequence[AffineForm | Scalar],
    unknowns: Sequence[str],
) -> tuple[dict[str, AffineForm], list[str]]:
    """Solve a * x = rhs exactly, where rhs entries may carry free parameters.

    Returns each unknown as an AffineForm over the parameters that remain
    free, together with the sorted list of free parameter names.  Extra
    consistent equations are fine.  An unknown whose column acquires no
    pivot is reported as a free parameter under its own name rather than
    being silently resolved; an inconsistent system raises
    LinearSystemError.
    """
    ncols = len(unknowns)
    if any(len(row) != ncols for row in a):
        raise ValueError("row length does not match number of unknowns")
    if len(a) != len(rhs):
        raise ValueError("matrix and right-hand side sizes differ")

    # pivots: column -> (row coefficients, affine rhs), kept fully reduced
    pivots: dict[int, tuple[list[Fraction], AffineForm]] = {}
    for row, r in zip(a, rhs):
        coeffs = [Fraction(x) for x in row]
        form = as_affine(r)
        for col, (prow, pform) in pivots.items():
            f = coeffs[col]
            if f:
                coeffs = [x - f * y for x, y in zip(coeffs, prow)]
                form = form - pform * f
        lead = next((c for c in range(ncols) if coeffs[c]), None)
        if lead is None:
            if form:
                raise LinearSystemError(f"no solution: 0 = {form}")
            continue
        f = coeffs[lead]
        if f != 1:
            coeffs = [x / f for x in coeffs]
            form = form / f
        for col, (prow, pform) in list(pivots.items()):
            g = prow[lead]
            if g:
                pivots[col] = ([x - g * y for x, y in zip(prow, coeffs)],
                               pform - form * g)
        pivots[lead] = (coeffs, form)

    free_cols = [c for c in range(ncols) if c not in pivots]
    solution: dict[str, AffineForm] = {}
    for c in free_cols:
        solution[unknowns[c]] = AffineForm.parameter(unknowns[c])
    for c, (prow, pform) in pivots.items():
        expr = pform
        for fc in free_cols:
            if prow[fc]:
                expr = expr - AffineForm.parameter(unknowns[fc], prow[fc])
        solution[unknowns[c]] = expr

    free_names: set[str] = {unknowns[c] for c in free_cols}
    for form in list(solution.values()):
        free_names.update(form.parameters())
    return solution, sorted(free_names)


def format_exact(x: Scalar) -> str:
    """Serialize an exact number: integers in decimal, rationals as "p/q"."""
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"
    return str(x)

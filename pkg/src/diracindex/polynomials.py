"""Exact multivariate polynomials over Q.

Terms are stored sparsely as {exponent tuple: nonzero Fraction}.  The
serialization order is graded lexicographic: ascending total degree,
then descending lexicographic on the exponent tuple, so X1 - X2 prints
its X1 term first.  No floating point enters anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatch, ZeroForm
from .groups import RootDatum, Weight

Exponent = tuple[int, ...]


def _gl_key(exp: Exponent):
    return (sum(exp), tuple(-e for e in exp))


class MultiPoly:
    __slots__ = ("arity", "terms")

    def __init__(self, arity: int, terms: dict[Exponent, Fraction] | None = None):
        self.arity = int(arity)
        clean: dict[Exponent, Fraction] = {}
        for exp, coeff in (terms or {}).items():
            if len(exp) != self.arity:
                raise DimensionMismatch(
                    f"exponent {exp} has arity {len(exp)}, expected {self.arity}"
                )
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            c = Fraction(coeff)
            if c != 0:
                clean[tuple(int(e) for e in exp)] = c
        self.terms = clean

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls, arity: int) -> "MultiPoly":
        return cls(arity, {})

    @classmethod
    def const(cls, arity: int, value) -> "MultiPoly":
        return cls(arity, {(0,) * arity: Fraction(value)})

    @classmethod
    def variable(cls, arity: int, i: int) -> "MultiPoly":
        exp = [0] * arity
        exp[i] = 1
        return cls(arity, {tuple(exp): Fraction(1)})

    @classmethod
    def from_linear(cls, coeffs: Sequence) -> "MultiPoly":
        arity = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            c = Fraction(c)
            if c != 0:
                exp = [0] * arity
                exp[i] = 1
                terms[tuple(exp)] = c
        return cls(arity, terms)

    # -- ring operations ----------------------------------------------

    def _check(self, other: "MultiPoly"):
        if self.arity != other.arity:
            raise DimensionMismatch(f"arity {self.arity} != {other.arity}")

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.const(self.arity, other)
        self._check(other)
        terms = dict(self.terms)
        for exp, c in other.terms.items():
            terms[exp] = terms.get(exp, Fraction(0)) + c
        return MultiPoly(self.arity, terms)

    def __sub__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.const(self.arity, other)
        return self + (-other)

    def __neg__(self):
        return MultiPoly(self.arity, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            scalar = Fraction(other)
            return MultiPoly(
                self.arity, {e: c * scalar for e, c in self.terms.items()}
            )
        self._check(other)
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                out[exp] = out.get(exp, Fraction(0)) + c1 * c2
        return MultiPoly(self.arity, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = MultiPoly.const(self.arity, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MultiPoly)
            and self.arity == other.arity
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.arity, frozenset(self.terms.items())))

    # -- queries -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        """Degree of the zero polynomial is reported as -1."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        degrees = {sum(e) for e in self.terms}
        return len(degrees) <= 1

    def sorted_terms(self) -> list[tuple[Exponent, Fraction]]:
        return sorted(self.terms.items(), key=lambda t: _gl_key(t[0]))

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self.arity:
            raise DimensionMismatch(
                f"point has {len(point)} coordinates, expected {self.arity}"
            )
        pt = [Fraction(x) for x in point]
        total = Fraction(0)
        for exp, coeff in self.terms.items():
            val = coeff
            for x, e in zip(pt, exp):
                if e:
                    val *= x**e
            total += val
        return total

    def derivative(self, i: int) -> "MultiPoly":
        out: dict[Exponent, Fraction] = {}
        for exp, coeff in self.terms.items():
            if exp[i] == 0:
                continue
            new = list(exp)
            new[i] -= 1
            key = tuple(new)
            out[key] = out.get(key, Fraction(0)) + coeff * exp[i]
        return MultiPoly(self.arity, out)

    def __repr__(self):
        if self.is_zero():
            return "MultiPoly(0)"
        bits = []
        for exp, coeff in self.sorted_terms():
            mono = "*".join(
                f"X{i + 1}" + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(exp)
                if e
            )
            bits.append(f"{coeff}" + (f"*{mono}" if mono else ""))
        return "MultiPoly(" + " + ".join(bits) + ")"


def poly_eval(poly: MultiPoly, point: Sequence) -> Fraction:
    return poly.evaluate(point)


@dataclass(frozen=True)
class LinearForm:
    """A nonzero linear form sum c_i X_i."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "coeffs", tuple(Fraction(c) for c in self.coeffs)
        )
        if all(c == 0 for c in self.coeffs):
            raise ZeroForm("linear form is identically zero")

    @classmethod
    def from_weight(cls, w: Weight) -> "LinearForm":
        return cls(tuple(w))

    @property
    def arity(self) -> int:
        return len(self.coeffs)

    def pivot(self) -> int:
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        raise ZeroForm("linear form is identically zero")

    def to_poly(self) -> MultiPoly:
        return MultiPoly.from_linear(self.coeffs)

    def primitive(self) -> "LinearForm":
        """Divide by the coefficient content and make the pivot positive."""
        denoms = math.lcm(*(c.denominator for c in self.coeffs if c != 0))
        ints = [c * denoms for c in self.coeffs]
        g = math.gcd(*(int(c) for c in ints if c != 0))
        scaled = [Fraction(int(c), g) for c in ints]
        if scaled[self.pivot()] < 0:
            scaled = [-c for c in scaled]
        return LinearForm(tuple(scaled))

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self.arity:
            raise DimensionMismatch("point arity mismatch")
        return sum(
            (c * Fraction(x) for c, x in zip(self.coeffs, point)), Fraction(0)
        )


def linear_form_product(arity: int, forms: Iterable[LinearForm]) -> MultiPoly:
    """Expanded product of linear forms; the empty product is the constant 1."""
    result = MultiPoly.const(arity, 1)
    for form in forms:
        if form.arity != arity:
            raise DimensionMismatch("form arity mismatch")
        result = result * form.to_poly()
    return result


def restrict_to_hyperplane(
    poly: MultiPoly, form: LinearForm, pivot: int | None = None
) -> MultiPoly:
    """Substitute the solution of form = 0 for its pivot variable.

    The pivot variable X_j is eliminated via
    X_j = -sum_{i != j} (c_i / c_j) X_i and the remaining variables are
    renumbered in order, so the result has arity reduced by one.
    """
    if poly.arity != form.arity:
        raise DimensionMismatch("polynomial and form arities differ")
    j = form.pivot() if pivot is None else pivot
    cj = form.coeffs[j]
    if cj == 0:
        raise ZeroForm(f"pivot coefficient at index {j} is zero")
    new_arity = poly.arity - 1
    sub_coeffs = [
        -form.coeffs[i] / cj for i in range(poly.arity) if i != j
    ]
    substitution = MultiPoly.from_linear(sub_coeffs)
    sub_powers: dict[int, MultiPoly] = {0: MultiPoly.const(new_arity, 1)}

    def power(d: int) -> MultiPoly:
        if d not in sub_powers:
            sub_powers[d] = power(d - 1) * substitution
        return sub_powers[d]

    acc: dict[Exponent, Fraction] = {}
    for exp, coeff in poly.terms.items():
        rest = tuple(e for i, e in enumerate(exp) if i != j)
        for sexp, scoeff in power(exp[j]).terms.items():
            key = tuple(a + b for a, b in zip(sexp, rest))
            acc[key] = acc.get(key, Fraction(0)) + coeff * scoeff
    return MultiPoly(new_arity, acc)


def divides_linear_form(poly: MultiPoly, form: LinearForm) -> bool:
    """True iff the linear form divides the polynomial exactly."""
    return restrict_to_hyperplane(poly, form).is_zero()


def divide_by_linear_form(poly: MultiPoly, form: LinearForm) -> MultiPoly:
    """Exact quotient poly / form; raises ValueError when not divisible."""
    if poly.arity != form.arity:
        raise DimensionMismatch("polynomial and form arities differ")
    j = form.pivot()
    cj = form.coeffs[j]
    rest_coeffs = list(form.coeffs)
    rest_coeffs[j] = Fraction(0)
    rest = (
        MultiPoly.from_linear(rest_coeffs)
        if any(c != 0 for c in rest_coeffs)
        else MultiPoly.zero(poly.arity)
    )
    # Group by the pivot exponent and do synthetic division from the top.
    by_degree: dict[int, dict[Exponent, Fraction]] = {}
    for exp, coeff in poly.terms.items():
        d = exp[j]
        stripped = list(exp)
        stripped[j] = 0
        by_degree.setdefault(d, {})[tuple(stripped)] = coeff
    top = max(by_degree, default=0)
    layers = [
        MultiPoly(poly.arity, by_degree.get(d, {})) for d in range(top + 1)
    ]
    quotient = MultiPoly.zero(poly.arity)
    xj = MultiPoly.variable(poly.arity, j)
    carry = MultiPoly.zero(poly.arity)
    for d in range(top, 0, -1):
        q_layer = (layers[d] + carry) * (Fraction(1) / cj)
        quotient = quotient + q_layer * xj ** (d - 1)
        carry = -(q_layer * rest)
    remainder = layers[0] + carry
    if not remainder.is_zero():
        raise ValueError("polynomial is not divisible by the linear form")
    return quotient


def extract_linear_factors(
    poly: MultiPoly, candidates: Sequence[LinearForm]
) -> tuple[list[tuple[LinearForm, int]], MultiPoly]:
    """Peel off every candidate linear factor, with multiplicity.

    Returns the factor list and the remaining cofactor.  Candidates are
    processed in the given order; the result is independent of the order
    because Q[X] is a UFD and the candidates are pairwise non-proportional
    in every use here.
    """
    factors: list[tuple[LinearForm, int]] = []
    current = poly
    for form in candidates:
        mult = 0
        while not current.is_zero() and divides_linear_form(current, form):
            current = divide_by_linear_form(current, form)
            mult += 1
        if mult:
            factors.append((form, mult))
    return factors, current


def poly_det(matrix: Sequence[Sequence[MultiPoly]]) -> MultiPoly:
    """Determinant of a square matrix of polynomials by Laplace expansion.

    Memoized on column subsets, which keeps the n <= 8 cases cheap.
    """
    n = len(matrix)
    if n == 0:
        raise ValueError("empty matrix")
    arity = matrix[0][0].arity
    cache: dict[tuple[int, ...], MultiPoly] = {}

    def minor(row: int, cols: tuple[int, ...]) -> MultiPoly:
        if not cols:
            return MultiPoly.const(arity, 1)
        if cols in cache:
            return cache[cols]
        total = MultiPoly.zero(arity)
        for pos, c in enumerate(cols):
            entry = matrix[row][c]
            if entry.is_zero():
                continue
            sub = minor(row + 1, cols[:pos] + cols[pos + 1 :])
            term = entry * sub
            total = total + (term if pos % 2 == 0 else -term)
        cache[cols] = total
        return total

    return minor(0, tuple(range(n)))


def _power_sum_operator(poly: MultiPoly, k: int) -> MultiPoly:
    out = MultiPoly.zero(poly.arity)
    for i in range(poly.arity):
        p = poly
        for _ in range(k):
            p = p.derivative(i)
        out = out + p
    return out


def _product_derivative(poly: MultiPoly) -> MultiPoly:
    p = poly
    for i in range(poly.arity):
        p = p.derivative(i)
    return p


def invariant_operator_images(poly: MultiPoly, datum: RootDatum) -> list[MultiPoly]:
    """Apply generators of the W-invariant constant-coefficient operators.

    Type A on r coordinates uses the power sums p_1(d), ..., p_r(d);
    types B/C use p_2(d), p_4(d), ..., p_{2r}(d); type D uses
    p_2(d), ..., p_{2r-2}(d) together with d_1 d_2 ... d_r.
    """
    if poly.arity != datum.rank:
        raise DimensionMismatch("polynomial arity must equal the rank")
    r = datum.rank
    kind = datum.ambient.kind
    images = []
    if kind == "A":
        degrees = range(1, r + 1)
    elif kind in ("B", "C"):
        degrees = range(2, 2 * r + 1, 2)
    else:
        degrees = range(2, 2 * r - 1, 2)
    for k in degrees:
        images.append(_power_sum_operator(poly, k))
    if kind == "D":
        images.append(_product_derivative(poly))
    return images


def is_harmonic(poly: MultiPoly, datum: RootDatum) -> bool:
    """True iff every invariant operator without constant term kills poly."""
    return all(img.is_zero() for img in invariant_operator_images(poly, datum))

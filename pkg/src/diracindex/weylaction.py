"""Weyl group action on polynomials, orbit spans, and Weyl dimension polynomials.

The action is (w.P)(lam) = P(w^{-1} lam); since every w is a signed
permutation this is a monomial-level remap, no general composition needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import CapExceeded, DimensionMismatch
from .groups import RootDatum, Weight, WeylElement, dot
from .polynomials import Exponent, MultiPoly, _gl_key

SPAN_COLUMN_CAP = 20_000


def act(w: WeylElement, poly: MultiPoly) -> MultiPoly:
    """(w.P)(lam) = P(w^{-1} lam)."""
    if poly.arity != len(w.perm):
        raise DimensionMismatch("polynomial arity must match the Weyl element")
    inv = w.inverse()
    out: dict[Exponent, Fraction] = {}
    for exp, coeff in poly.terms.items():
        new_exp = tuple(exp[p] for p in w.perm)
        sign = 1
        for s, e in zip(inv.signs, exp):
            if s < 0 and e % 2 == 1:
                sign = -sign
        out[new_exp] = out.get(new_exp, Fraction(0)) + sign * coeff
    return MultiPoly(poly.arity, out)


@dataclass(frozen=True)
class PolySpan:
    """Echelonized basis of a Q-span of polynomials of one arity."""

    basis: tuple[MultiPoly, ...]
    monomials: tuple[Exponent, ...]  # pivotless column order, graded-lex

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, poly: MultiPoly) -> bool:
        return _reduce_against(poly, self.basis).is_zero()


def _leading(poly: MultiPoly) -> Exponent:
    return min(poly.terms, key=_gl_key) if poly.terms else ()


def _reduce_against(poly: MultiPoly, echelon: Sequence[MultiPoly]) -> MultiPoly:
    current = poly
    for b in echelon:
        lead = _leading(b)
        if not current.terms:
            break
        c = current.terms.get(lead)
        if c is not None:
            current = current - b * (c / b.terms[lead])
    return current


def echelonize(polys: Iterable[MultiPoly]) -> list[MultiPoly]:
    """Gaussian elimination over Q; leading monomials in graded-lex order."""
    basis: list[MultiPoly] = []
    for p in polys:
        r = _reduce_against(p, basis)
        if not r.is_zero():
            lead = _leading(r)
            r = r * (Fraction(1) / r.terms[lead])
            basis = [b - r * b.terms.get(lead, Fraction(0)) for b in basis]
            basis.append(r)
            basis.sort(key=lambda b: _gl_key(_leading(b)))
    return basis


def orbit_span(
    poly: MultiPoly, elements: Sequence[WeylElement], cap: int = SPAN_COLUMN_CAP
) -> PolySpan:
    """Echelonized span of {w.P : w in W}; dimension is exact."""
    translates = [act(w, poly) for w in elements]
    monomials = sorted({e for t in translates for e in t.terms}, key=_gl_key)
    if len(monomials) > cap or len(monomials) * len(translates) > 50 * cap:
        raise CapExceeded(
            f"{len(monomials)} columns x {len(translates)} rows exceeds the span cap"
        )
    basis = echelonize(translates)
    return PolySpan(tuple(basis), tuple(monomials))


def weyl_dim_poly(datum: RootDatum) -> MultiPoly:
    """Weyl dimension polynomial for the compact subgroup.

    D_k(lam) = prod_{alpha in R_k^+} <lam, alpha> / <rho_k, alpha>, so that
    D_k(gamma) is the dimension of the K-type with infinitesimal character
    gamma and D_k(rho_k) = 1.
    """
    result = MultiPoly.const(datum.rank, 1)
    for alpha in datum.compact_positive_roots:
        norm = dot(datum.rho_k, alpha)
        result = result * MultiPoly.from_linear([c / norm for c in alpha])
    return result


def weyl_dim_value(datum: RootDatum, gamma: Weight) -> Fraction:
    """D_k(gamma) evaluated directly (same normalization as weyl_dim_poly)."""
    value = Fraction(1)
    for alpha in datum.compact_positive_roots:
        value *= dot(gamma, alpha) / dot(datum.rho_k, alpha)
    return value


def weyl_dim_value_g(datum: RootDatum, lam_plus_rho: Weight) -> Fraction:
    """Full-group Weyl dimension at a rho-shifted parameter."""
    value = Fraction(1)
    for alpha in datum.positive_roots:
        value *= dot(lam_plus_rho, alpha) / dot(datum.rho_g, alpha)
    return value

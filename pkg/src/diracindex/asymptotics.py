"""Exact character asymptotics on the compact Cartan subgroup.

The global character of a family member at exp(t y) equals the compact
character of its Dirac index divided by ch(S+ - S-) = d_g/d_k, so as an
exact Laurent series in t it is (sum_w a_w N_{w lam})/d_g.  The pole
order never exceeds r_g - r_k, and the coefficient at exactly that order
is (prod_{compact} alpha(y) / prod_{all} alpha(y)) * Q(lam) with Q the
index polynomial.  Everything here is rational arithmetic; the limit
checks are exact equalities.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .dirac import IndexFamily, evaluate_index, index_polynomial
from .errors import DimensionMismatch
from .groups import RootDatum, Weight, dot
from .kmodules import (
    check_regular_direction,
    frequencies_to_series,
    weyl_denominator_factored,
    weyl_numerator_frequencies,
)
from .series import TruncatedSeries


@dataclass(frozen=True)
class LaurentSeries:
    """Finitely many negative powers: coefficient of t^(low + k) is
    series.coeffs[k]."""

    low: int
    series: TruncatedSeries

    @classmethod
    def zero(cls, order: int) -> "LaurentSeries":
        return cls(0, TruncatedSeries.zero(order))

    @property
    def pole_order(self) -> int:
        val = self.series.valuation()
        if val is None:
            return 0
        return max(0, -(self.low + val))

    def is_zero(self) -> bool:
        return self.series.is_zero()

    def coeff(self, power: int) -> Fraction:
        k = power - self.low
        if k < 0:
            return Fraction(0)
        return self.series.coeff(k)


@dataclass(frozen=True)
class LimitReport:
    """One exact limit check of t^d * character at t -> 0+."""

    d: int
    value: Fraction | None
    expected: Fraction | None
    match: bool
    underflow: bool = False


def root_ratio(datum: RootDatum, y: Weight) -> Fraction:
    """prod_{alpha in R_k+} alpha(y) / prod_{alpha in R_g+} alpha(y)."""
    num = Fraction(1)
    for alpha in datum.compact_positive_roots:
        num *= dot(alpha, y)
    den = Fraction(1)
    for alpha in datum.positive_roots:
        den *= dot(alpha, y)
    return num / den


def character_series(
    fam: IndexFamily, lam: Weight, y: Weight, order: int = 8
) -> LaurentSeries:
    """Exact Laurent expansion of the family character at exp(t y).

    The numerator sum_w a_w N_{w lam} is assembled from the normalized
    index (so off-lattice or compactly singular translates drop out the
    same way they do in evaluation), then divided by d_g with its zero of
    order r_g at t = 0 factored analytically.
    """
    datum = fam.datum
    check_regular_direction(datum, y)
    if len(lam) != datum.rank:
        raise DimensionMismatch("parameter length must equal the rank")
    module = evaluate_index(fam, lam)
    if module.is_zero():
        return LaurentSeries.zero(order)
    freqs: dict[Fraction, int] = {}
    for gamma, c in module.coeffs.items():
        for f, m in weyl_numerator_frequencies(datum, gamma, y).items():
            v = freqs.get(f, 0) + c * m
            if v:
                freqs[f] = v
            else:
                freqs.pop(f, None)
    if not freqs:
        return LaurentSeries.zero(order)
    r_g = datum.r_g
    # A nonzero sum of k exponentials has a nonzero moment among the first
    # k, so this order always sees the true valuation.
    numerator = frequencies_to_series(freqs, max(order + r_g, len(freqs)))
    val = numerator.valuation()
    assert val is not None
    shifted = numerator.shift_down(val)
    _, u = weyl_denominator_factored(datum, y, "g", shifted.order)
    quotient = shifted.divide(u)
    return LaurentSeries(val - r_g, quotient.truncate(order))


def leading_limit(fam: IndexFamily, lam: Weight, y: Weight, d: int) -> LimitReport:
    """Exact value of lim_{t->0+} t^d * character, compared to the theorem.

    expected is 0 for d above r_g - r_k, the root ratio times Q(lam) at
    d = r_g - r_k, and None below that (the theorem is silent there).
    When d is smaller than the actual pole order the limit diverges; the
    report flags underflow instead of raising.
    """
    datum = fam.datum
    gap = datum.r_g - datum.r_k
    series = character_series(fam, lam, y, order=max(8, d + 2))
    if d < series.pole_order:
        return LimitReport(d=d, value=None, expected=None, match=False, underflow=True)
    value = series.coeff(-d)
    if d > gap:
        expected: Fraction | None = Fraction(0)
    elif d == gap:
        expected = root_ratio(datum, y) * index_polynomial(fam).evaluate(lam)
    else:
        expected = None
    match = expected is not None and value == expected
    return LimitReport(d=d, value=value, expected=expected, match=match)

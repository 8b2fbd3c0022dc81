"""Discrete-series chamber combinatorics for SU(n,1): the determinant
character polynomial, its divisor structure against the index polynomial,
tau-invariants, and degree bookkeeping.

Coordinates: C^(n+1) with the compact block on the first n coordinates.
The closed dominant chamber C for K is lam_1 >= ... >= lam_n; it splits
into n+1 chambers D_0, ..., D_n according to where lam_{n+1} interleaves,
with D_0 the holomorphic one (lam_{n+1} <= lam_n) and D_n the
antiholomorphic one (lam_{n+1} >= lam_1).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import IndexOutOfRange, NotInC
from .groups import GroupId, RootDatum, Weight, build_root_datum
from .polynomials import (
    LinearForm,
    MultiPoly,
    extract_linear_factors,
    linear_form_product,
    poly_det,
)
from .weylaction import weyl_dim_poly


def su_n1_datum(n: int) -> RootDatum:
    if n < 1:
        raise IndexOutOfRange("n must be at least 1")
    return build_root_datum(GroupId.su(n, 1), max_rank=max(8, n + 1))


def chamber_of(lam: Weight, n: int) -> int:
    """Index i of the chamber D_i containing lam; ties resolve downward."""
    if len(lam) != n + 1:
        raise NotInC(f"expected {n + 1} coordinates")
    for a in range(n - 1):
        if lam[a] < lam[a + 1]:
            raise NotInC("coordinates are not weakly decreasing on the compact block")
    last = lam[n]
    if last <= lam[n - 1]:
        return 0
    for i in range(1, n):
        if lam[n - i - 1] >= last >= lam[n - i]:
            return i
    return n


def difference_form(n_vars: int, p: int, q: int) -> LinearForm:
    """The form lam_p - lam_q in n_vars variables (1-based indices)."""
    coeffs = [Fraction(0)] * n_vars
    coeffs[p - 1] = Fraction(1)
    coeffs[q - 1] = Fraction(-1)
    return LinearForm(tuple(coeffs))


@lru_cache(maxsize=None)
def char_poly_det(n: int, i: int) -> MultiPoly:
    """Exact expansion of the n x n character determinant in lam_1..lam_n.

    Rows are the power rows lam^(n-2), ..., lam^1 followed by the two
    indicator rows of the split {1..n-i} | {n-i+1..n}.
    """
    if n < 2 or not 1 <= i <= n - 1:
        raise IndexOutOfRange(f"need n >= 2 and 1 <= i <= n-1, got n={n}, i={i}")
    rows: list[list[MultiPoly]] = []
    for power in range(n - 2, 0, -1):
        rows.append([MultiPoly.variable(n, j) ** power for j in range(n)])
    rows.append(
        [MultiPoly.const(n, 1 if j < n - i else 0) for j in range(n)]
    )
    rows.append(
        [MultiPoly.const(n, 1 if j >= n - i else 0) for j in range(n)]
    )
    return poly_det(rows)


def vandermonde(n_vars: int, indices: list[int] | None = None) -> MultiPoly:
    """prod_{p < q} (lam_p - lam_q) over the given 1-based indices."""
    idx = indices if indices is not None else list(range(1, n_vars + 1))
    forms = [
        difference_form(n_vars, idx[a], idx[b])
        for a in range(len(idx))
        for b in range(a + 1, len(idx))
    ]
    return linear_form_product(n_vars, forms)


def gcd_factor_pairs(n: int, i: int) -> list[tuple[int, int]]:
    """Index pairs (p,q) of the common-divisor product for chamber i."""
    if not 1 <= i <= n - 1:
        raise IndexOutOfRange(f"need 1 <= i <= n-1, got i={i}")
    pairs = [(p, q) for p in range(1, n - i + 1) for q in range(p + 1, n - i + 1)]
    pairs += [(p, q) for p in range(n - i + 1, n + 1) for q in range(p + 1, n + 1)]
    return pairs


@lru_cache(maxsize=None)
def index_poly_restricted(n: int) -> MultiPoly:
    """The SU(n,1) index polynomial in the first n variables only.

    The compact Weyl dimension polynomial never involves lam_{n+1}, so
    dropping that variable is exact.
    """
    full = weyl_dim_poly(su_n1_datum(n))
    terms = {}
    for exp, c in full.terms.items():
        if exp[n] != 0:
            raise ValueError("index polynomial unexpectedly involves lam_{n+1}")
        terms[exp[:n]] = c
    return MultiPoly(n, terms)


@lru_cache(maxsize=None)
def gcd_with_index(n: int, i: int) -> MultiPoly:
    """Greatest common linear-divisor product of the character determinant
    and the index polynomial, computed by factor extraction and checked
    against the closed-form block product."""
    if n < 2:
        raise IndexOutOfRange("n must be at least 2")
    det = char_poly_det(n, i)
    index_poly = index_poly_restricted(n)
    candidates = [
        difference_form(n, p, q)
        for p in range(1, n + 1)
        for q in range(p + 1, n + 1)
    ]
    det_factors, _ = extract_linear_factors(det, candidates)
    det_mult = {form: m for form, m in det_factors}
    idx_factors, _ = extract_linear_factors(index_poly, candidates)
    idx_mult = {form: m for form, m in idx_factors}
    common = MultiPoly.const(n, 1)
    for form in candidates:
        m = min(det_mult.get(form, 0), idx_mult.get(form, 0))
        for _ in range(m):
            common = common * form.to_poly()
    closed = linear_form_product(
        n, [difference_form(n, p, q) for p, q in gcd_factor_pairs(n, i)]
    )
    if common != closed:
        raise ValueError("extracted common factor disagrees with the closed form")
    return closed


def extract_det_factors(
    n: int, i: int
) -> tuple[list[tuple[LinearForm, int]], MultiPoly]:
    """Linear root-form factors of the character determinant, plus cofactor."""
    det = char_poly_det(n, i)
    candidates = [
        difference_form(n, p, q)
        for p in range(1, n + 1)
        for q in range(p + 1, n + 1)
    ]
    return extract_linear_factors(det, candidates)


def tau_invariant(n: int, i: int) -> tuple[Weight, ...]:
    """Simple compact roots of chamber D_i, as weights in Q^(n+1).

    The simple roots of D_i are the consecutive differences of the chamber
    order; the compact ones are e_j - e_{j+1} for j != n - i.
    """
    if not 0 <= i <= n:
        raise IndexOutOfRange(f"need 0 <= i <= n, got i={i}")
    out = []
    for j in range(1, n):
        if j == n - i:
            continue
        coords = [Fraction(0)] * (n + 1)
        coords[j - 1] = Fraction(1)
        coords[j] = Fraction(-1)
        out.append(tuple(coords))
    return tuple(out)


def tau_generated_pairs(n: int, i: int) -> list[tuple[int, int]]:
    """Pairs (p,q) of the positive roots generated by the tau-invariant."""
    blocks: list[list[int]] = []
    current = [1]
    tau_positions = {j for j in range(1, n) if j != n - i}
    for j in range(1, n):
        if j in tau_positions:
            current.append(j + 1)
        else:
            blocks.append(current)
            current = [j + 1]
    blocks.append(current)
    pairs = []
    for block in blocks:
        pairs += [
            (block[a], block[b])
            for a in range(len(block))
            for b in range(a + 1, len(block))
        ]
    return pairs


def degree_report(n: int, i: int) -> dict[str, int]:
    """Verified degree identities for chamber i of SU(n,1)."""
    if n < 4 or not 2 <= i <= n - 2:
        raise IndexOutOfRange(f"need n >= 4 and 2 <= i <= n-2, got n={n}, i={i}")
    det = char_poly_det(n, i)
    index_poly = index_poly_restricted(n)
    common = gcd_with_index(n, i)
    deg_p = det.total_degree()
    deg_q = index_poly.total_degree()
    deg_r = common.total_degree()
    report = {
        "deg_P": deg_p,
        "deg_Q": deg_q,
        "deg_R": deg_r,
        "deg_P_over_R": deg_p - deg_r,
        "deg_Q_over_R": deg_q - deg_r,
    }
    expected = {
        "deg_P": comb(n - 1, 2),
        "deg_Q": comb(n, 2),
        "deg_R": comb(i, 2) + comb(n - i, 2),
        "deg_P_over_R": i * (n - i) - (n - 1),
        "deg_Q_over_R": i * (n - i),
    }
    if report != expected:
        raise ValueError(f"degree identities fail: {report} != {expected}")
    return report

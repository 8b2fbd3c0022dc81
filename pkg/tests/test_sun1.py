from fractions import Fraction as F
from math import comb

import pytest

from diracindex.errors import IndexOutOfRange, NotInC
from diracindex.polynomials import (
    MultiPoly,
    divides_linear_form,
    restrict_to_hyperplane,
)
from diracindex.sun1 import (
    chamber_of,
    char_poly_det,
    degree_report,
    difference_form,
    extract_det_factors,
    gcd_factor_pairs,
    gcd_with_index,
    index_poly_restricted,
    tau_generated_pairs,
    tau_invariant,
    vandermonde,
)


def W(*coords):
    return tuple(F(c) for c in coords)


def test_chamber_of():
    # last coordinate below the compact block: holomorphic chamber
    assert chamber_of(W(3, 2, 1), 2) == 0
    # last coordinate above: antiholomorphic chamber
    assert chamber_of(W(3, 2, 4), 2) == 2
    assert chamber_of(W(3, 1, 2), 2) == 1
    # ties resolve to the smaller index
    assert chamber_of(W(3, 2, 2), 2) == 0
    assert chamber_of(W(2, 2, 2), 2) == 0
    assert chamber_of(W(3, 2, 3), 2) == 1
    with pytest.raises(NotInC):
        chamber_of(W(1, 2, 0), 2)
    with pytest.raises(NotInC):
        chamber_of(W(1, 2), 2)


def L(arity, i):
    return MultiPoly.variable(arity, i)


def test_det_4_2_displayed():
    l1, l2, l3, l4 = (L(4, i) for i in range(4))
    displayed = -((l1 - l2) * (l3 - l4) * (l1 + l2 - l3 - l4))
    assert char_poly_det(4, 2) == displayed


def test_det_5_2_displayed():
    l1, l2, l3, l4, l5 = (L(5, i) for i in range(5))
    quad = (
        l1 * l2 + l1 * l3 - l1 * l4 - l1 * l5 + l2 * l3
        - l2 * l4 - l2 * l5 - l3 * l4 - l3 * l5
        + l4 * l4 + l4 * l5 + l5 * l5
    )
    displayed = -((l1 - l2) * (l1 - l3) * (l2 - l3) * (l4 - l5) * quad)
    assert char_poly_det(5, 2) == displayed


@pytest.mark.parametrize("n", [3, 4, 5])
def test_det_extreme_chambers_are_vandermonde(n):
    assert char_poly_det(n, 1) == vandermonde(n, list(range(1, n)))
    # the opposite extreme reduces to a Vandermonde too, with a sign that
    # alternates with n under the pinned determinant normalization
    tail = vandermonde(n, list(range(2, n + 1)))
    sign = 1 if n % 2 == 0 else -1
    assert char_poly_det(n, n - 1) == tail * sign


@pytest.mark.parametrize("n,i", [(4, 2), (5, 2), (6, 3)])
def test_det_degree_and_homogeneity(n, i):
    det = char_poly_det(n, i)
    assert det.is_homogeneous()
    assert det.total_degree() == comb(n - 1, 2)


def test_det_bad_indices():
    with pytest.raises(IndexOutOfRange):
        char_poly_det(4, 0)
    with pytest.raises(IndexOutOfRange):
        char_poly_det(4, 4)
    with pytest.raises(IndexOutOfRange):
        char_poly_det(1, 1)


def test_divisibility_examples():
    det = char_poly_det(4, 2)
    assert divides_linear_form(det, difference_form(4, 1, 2))
    assert not divides_linear_form(det, difference_form(4, 1, 3))
    # the crossing restriction is a signed Vandermonde in the survivors
    rest = restrict_to_hyperplane(det, difference_form(4, 1, 3))
    vdm = vandermonde(3)
    assert rest == vdm or rest == -vdm
    assert not rest.is_zero()


def test_gcd_closed_forms():
    l1, l2, l3, l4 = (L(4, i) for i in range(4))
    assert gcd_with_index(4, 2) == (l1 - l2) * (l3 - l4)
    g51 = gcd_with_index(5, 1)
    assert g51 == vandermonde(5, [1, 2, 3, 4])
    for n in range(2, 7):
        for i in range(1, n):
            g = gcd_with_index(n, i)
            assert g.total_degree() == comb(i, 2) + comb(n - i, 2)


def test_tau_invariant_sets():
    tau42 = tau_invariant(4, 2)
    assert set(tau42) == {
        W(1, -1, 0, 0, 0),
        W(0, 0, 1, -1, 0),
    }
    # holomorphic chamber: every compact simple root
    tau0 = tau_invariant(4, 0)
    assert len(tau0) == 3
    # n = 2, i = 1 degenerates to the empty set
    assert tau_invariant(2, 1) == ()
    with pytest.raises(IndexOutOfRange):
        tau_invariant(4, 5)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_tau_generates_exactly_the_gcd_factors(n):
    for i in range(1, n):
        assert set(tau_generated_pairs(n, i)) == set(gcd_factor_pairs(n, i))


def test_degree_report_values():
    assert degree_report(4, 2) == {
        "deg_P": 3,
        "deg_Q": 6,
        "deg_R": 2,
        "deg_P_over_R": 1,
        "deg_Q_over_R": 4,
    }
    assert degree_report(5, 2) == {
        "deg_P": 6,
        "deg_Q": 10,
        "deg_R": 4,
        "deg_P_over_R": 2,
        "deg_Q_over_R": 6,
    }
    with pytest.raises(IndexOutOfRange):
        degree_report(4, 1)
    with pytest.raises(IndexOutOfRange):
        degree_report(3, 2)


def test_index_poly_restricted_is_vandermonde_multiple():
    idx = index_poly_restricted(4)
    vdm = vandermonde(4)
    # proportional with a positive rational constant
    ratio = None
    for exp, c in vdm.terms.items():
        ratio = idx.terms[exp] / c
        break
    assert ratio > 0
    assert idx == vdm * ratio


def test_extract_det_factors():
    factors, cofactor = extract_det_factors(4, 2)
    found = {tuple(f.coeffs): m for f, m in factors}
    assert found == {
        tuple(difference_form(4, 1, 2).coeffs): 1,
        tuple(difference_form(4, 3, 4).coeffs): 1,
    }
    l1, l2, l3, l4 = (L(4, i) for i in range(4))
    assert cofactor == -(l1 + l2 - l3 - l4)


def _det_oracle_4x4(i):
    """Independent construction of the 4x4 determinant by cofactor
    expansion along the first row, written out directly."""
    n = 4
    rows = []
    for power in (2, 1):
        rows.append([L(n, j) ** power for j in range(n)])
    rows.append([MultiPoly.const(n, 1 if j < n - i else 0) for j in range(n)])
    rows.append([MultiPoly.const(n, 1 if j >= n - i else 0) for j in range(n)])

    def det3(cols, r0):
        total = MultiPoly.zero(n)
        for pos, c in enumerate(cols):
            sub_cols = cols[:pos] + cols[pos + 1 :]
            minor = rows[r0 + 1][sub_cols[0]] * rows[r0 + 2][sub_cols[1]] - rows[
                r0 + 1
            ][sub_cols[1]] * rows[r0 + 2][sub_cols[0]]
            term = rows[r0][c] * minor
            total = total + (term if pos % 2 == 0 else -term)
        return total

    total = MultiPoly.zero(n)
    cols = (0, 1, 2, 3)
    for pos, c in enumerate(cols):
        sub = cols[:pos] + cols[pos + 1 :]
        term = rows[0][c] * det3(sub, 1)
        total = total + (term if pos % 2 == 0 else -term)
    return total


@pytest.mark.parametrize("i", [1, 2, 3])
def test_det_matches_cofactor_oracle(i):
    assert char_poly_det(4, i) == _det_oracle_4x4(i)


def test_degree_report_consistent_with_gk_dimension():
    # deg P = (number of positive roots) - (GK dimension 2n - 1)
    from diracindex.fixtures import su_n1_ds_family

    for n in (4, 5, 6):
        fam = su_n1_ds_family(n, 2)
        assert fam.gk_dim == 2 * n - 1
        r_g = comb(n + 1, 2)
        assert degree_report(n, 2)["deg_P"] == r_g - fam.gk_dim

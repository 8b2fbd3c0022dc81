import random
from fractions import Fraction as F

import pytest

from diracindex.groups import (
    GroupId,
    WeylElement,
    build_root_datum,
    reflection,
    weyl_elements,
)
from diracindex.polynomials import MultiPoly
from diracindex.weylaction import (
    act,
    echelonize,
    orbit_span,
    weyl_dim_poly,
    weyl_dim_value,
)


def _rank_oracle(polys):
    """Independent rank computation: dense matrix over the union of
    monomials, straightforward forward elimination."""
    monos = sorted({e for p in polys for e in p.terms})
    rows = [[p.terms.get(m, F(0)) for m in monos] for p in polys]
    rank = 0
    col = 0
    while col < len(monos) and rank < len(rows):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pv = rows[rank][col]
        rows[rank] = [v / pv for v in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [v - f * w for v, w in zip(rows[r], rows[rank])]
        rank += 1
        col += 1
    return rank


def test_act_examples():
    x1 = MultiPoly.variable(2, 0)
    x2 = MultiPoly.variable(2, 1)
    s = WeylElement((1, 0), (1, 1))
    assert act(s, x1 - x2) == -(x1 - x2)
    e = WeylElement.identity(2)
    p = x1 * x2 + x1
    assert act(e, p) == p
    flip = WeylElement((0, 1), (-1, 1))
    assert act(flip, x1 * x2) == -(x1 * x2)


def test_act_is_group_action():
    d = build_root_datum(GroupId.sp_r(2))
    rng = random.Random(3)
    elements = weyl_elements(d, "g")
    p = MultiPoly(2, {(2, 0): F(1), (1, 1): F(-2), (0, 1): F(3)})
    for _ in range(20):
        a, b = rng.choice(elements), rng.choice(elements)
        assert act(a, act(b, p)) == act(a.compose(b), p)


def test_orbit_span_dims():
    x1 = MultiPoly.variable(2, 0)
    x2 = MultiPoly.variable(2, 1)
    su11 = build_root_datum(GroupId.su(1, 1))
    span = orbit_span(x1 - x2, weyl_elements(su11, "g"))
    assert span.dim == 1

    sp4 = build_root_datum(GroupId.sp_r(2))
    translates = [act(w, x1 - x2) for w in weyl_elements(sp4, "g")]
    assert _rank_oracle(translates) == 2
    span = orbit_span(x1 - x2, weyl_elements(sp4, "g"))
    assert span.dim == 2

    span = orbit_span(MultiPoly.const(2, 5), weyl_elements(sp4, "g"))
    assert span.dim == 1


def test_orbit_span_conjugation_invariant():
    d = build_root_datum(GroupId.sp_r(2))
    elements = weyl_elements(d, "g")
    p = MultiPoly(2, {(2, 0): F(1), (0, 1): F(1)})
    dims = {orbit_span(act(w, p), elements).dim for w in elements}
    assert len(dims) == 1


def test_span_contains():
    d = build_root_datum(GroupId.su(2, 1))
    dk = weyl_dim_poly(d)
    span = orbit_span(dk, weyl_elements(d, "g"))
    assert span.contains(dk)
    assert span.contains(MultiPoly.zero(3))
    assert not span.contains(MultiPoly.const(3, 1))


def test_weyl_dim_poly_su21():
    d = build_root_datum(GroupId.su(2, 1))
    x1 = MultiPoly.variable(3, 0)
    x2 = MultiPoly.variable(3, 1)
    assert weyl_dim_poly(d) == x1 - x2
    assert weyl_dim_poly(d).evaluate(d.rho_k) == 1


def test_weyl_dim_poly_su31_proportional_to_vandermonde():
    from diracindex.sun1 import vandermonde

    d = build_root_datum(GroupId.su(3, 1))
    dk = weyl_dim_poly(d)
    vdm3 = vandermonde(3)
    lifted = MultiPoly(4, {e + (0,): c for e, c in vdm3.terms.items()})
    # D_k = V / prod <rho_k, alpha>; the normalizing constant here is 1*1*2
    assert dk * 2 == lifted
    assert dk.evaluate(d.rho_k) == 1


GROUPS_RANK_LE_4 = [
    GroupId.su(1, 1),
    GroupId.su(2, 2),
    GroupId.so_even_odd(2, 2),
    GroupId.sp_r(4),
    GroupId.sp_pq(2, 2),
    GroupId.so_even_even(2, 2),
    GroupId.so_star(4),
]


@pytest.mark.parametrize("group", GROUPS_RANK_LE_4, ids=lambda g: g.label())
def test_weyl_dim_positive_integer_on_dominant_lattice(group):
    d = build_root_datum(group)
    assert weyl_dim_poly(d).evaluate(d.rho_k) == 1
    rng = random.Random(41)
    count = 0
    while count < 100:
        gamma = tuple(
            g + F(rng.randint(0, 6)) for g in d.rho_g
        )  # on the shifted lattice
        gamma = _dominate_compact(d, gamma)
        if gamma is None:
            continue
        val = weyl_dim_value(d, gamma)
        assert val == weyl_dim_poly(d).evaluate(gamma)
        assert val.denominator == 1 and val > 0
        count += 1


def _dominate_compact(datum, gamma):
    from diracindex.groups import normalize_k_dominant

    norm = normalize_k_dominant(datum, gamma)
    return None if norm is None else norm[1]


def test_echelonize_deterministic():
    x1 = MultiPoly.variable(2, 0)
    x2 = MultiPoly.variable(2, 1)
    basis1 = echelonize([x1 + x2, x1 - x2, x1])
    basis2 = echelonize([x1, x1 + x2, x1 - x2])
    assert basis1 == basis2
    assert len(basis1) == 2

import random
from collections import Counter
from fractions import Fraction as F

import pytest

from diracindex.errors import InvalidPartition
from diracindex.fixtures import reference_table_row
from diracindex.groups import GroupId, build_root_datum, weyl_elements
from diracindex.springer import (
    Bipartition,
    Symbol,
    ambient_algebra,
    bipartition_dim,
    bipartition_of_symbol,
    dual_partition,
    generator_poly,
    is_very_even,
    orbit_dim,
    partition_of_symbol,
    sigma_k_bipartition,
    sigma_k_partition,
    springer_row,
    springer_table,
    standard_tableaux_count,
    symbol_of_bipartition,
    symbol_of_partition,
    symbols_equivalent,
    table_groups,
    valid_nilpotent,
)
from diracindex.weylaction import orbit_span


# -- symbols -------------------------------------------------------------


def test_displayed_symbol_type_b():
    sym = symbol_of_bipartition(Bipartition((1, 1), (1, 1)), "B")
    assert sym == Symbol((0, 2, 3), (1, 2), "B")


def test_displayed_symbol_type_c():
    sym = symbol_of_bipartition(Bipartition((), (2, 1)), "C")
    assert sym == Symbol((0, 1, 2), (1, 3), "C")


def test_empty_bipartition_symbol():
    sym = symbol_of_bipartition(Bipartition((), ()), "B")
    assert sym == Symbol((0,), (), "B")


def test_partition_of_displayed_symbols():
    assert partition_of_symbol(Symbol((0, 2, 3), (1, 2), "B")) == (3, 2, 2, 1, 1)
    assert partition_of_symbol(Symbol((0, 1, 2), (1, 3), "C")) == (3, 1, 1, 1)


def test_symbol_equivalence_under_shift():
    a = Symbol((0, 2, 3), (1, 2), "B")
    shifted = Symbol((0, 1, 3, 4), (0, 2, 3), "B")
    assert symbols_equivalent(a, shifted)
    assert not symbols_equivalent(a, Symbol((0, 1, 3), (1, 2), "B"))
    assert partition_of_symbol(a) == partition_of_symbol(shifted)


def test_symbol_validation():
    with pytest.raises(ValueError):
        Symbol((0, 0), (1,), "B")  # not strictly increasing
    with pytest.raises(ValueError):
        Symbol((0, 1), (1,), "D")  # row lengths must match in type D


# -- partitions -----------------------------------------------------------


def _partitions_of(n, cap=None):
    cap = n if cap is None else cap
    if n == 0:
        yield ()
        return
    for first in range(min(n, cap), 0, -1):
        for rest in _partitions_of(n - first, first):
            yield (first,) + rest


def _validity_oracle(p, kind, total):
    """Direct filter by the parity rules, written independently."""
    if sum(p) != total:
        return False
    if kind == "A":
        return True
    counts = Counter(p)
    if kind == "C":
        bad = [x for x in counts if x % 2 == 1 and counts[x] % 2 == 1]
    else:
        bad = [x for x in counts if x % 2 == 0 and counts[x] % 2 == 1]
    return not bad


@pytest.mark.parametrize("kind", ["A", "B", "C", "D"])
def test_validity_matches_enumeration_oracle(kind):
    for total in range(1, 15):
        for p in _partitions_of(total):
            assert valid_nilpotent(p, kind, total) == _validity_oracle(
                p, kind, total
            )


def test_validity_examples():
    assert valid_nilpotent((3, 2, 2, 1, 1), "B", 9)
    assert not valid_nilpotent((3, 1, 1, 1), "C", 6)
    assert not valid_nilpotent((3, 2, 2, 2), "B", 9)


def _dual_oracle(p):
    cells = {(r, c) for r, row in enumerate(p) for c in range(row)}
    transposed = {(c, r) for r, c in cells}
    rows = Counter(r for r, _ in transposed)
    return tuple(rows[r] for r in sorted(rows))


def test_dual_partition_involution_and_oracle():
    rng = random.Random(4)
    for total in range(1, 21):
        parts = list(_partitions_of(total))
        sample = parts if len(parts) <= 30 else rng.sample(parts, 30)
        for p in sample:
            assert dual_partition(p) == _dual_oracle(p)
            assert dual_partition(dual_partition(p)) == p


def test_orbit_dims():
    assert orbit_dim((3, 2, 2, 1, 1), "B", 9) == 20
    assert orbit_dim((2, 2), "C", 4) == 6
    for p, q in [(1, 1), (1, 2), (2, 3)]:
        part = (2,) * p + (1,) * (q - p)
        assert orbit_dim(part, "A", p + q) == 2 * p * q
    with pytest.raises(InvalidPartition):
        orbit_dim((3, 1, 1, 1), "C", 6)


def test_very_even():
    assert is_very_even((2, 2))
    assert not is_very_even((3, 1))
    assert not is_very_even(())


# -- tableaux counts -------------------------------------------------------


def _syt_count_oracle(shape):
    """Count standard fillings by brute-force backtracking."""
    if not shape:
        return 1
    n = sum(shape)
    cells = [(r, c) for r, row in enumerate(shape) for c in range(row)]

    def backtrack(filled):
        if len(filled) == n:
            return 1
        total = 0
        value = len(filled)
        for r, c in cells:
            if (r, c) in filled:
                continue
            if (r > 0 and (r - 1, c) not in filled) or (
                c > 0 and (r, c - 1) not in filled
            ):
                continue
            filled[(r, c)] = value
            total += backtrack(filled)
            del filled[(r, c)]
        return total

    return backtrack({})


@pytest.mark.parametrize(
    "shape", [(1,), (2,), (1, 1), (2, 1), (2, 2), (3, 1), (3, 2), (2, 2, 1)]
)
def test_hook_length_formula_matches_backtracking(shape):
    assert standard_tableaux_count(shape) == _syt_count_oracle(shape)


def test_bipartition_dims():
    assert bipartition_dim(Bipartition((), (4,))) == 1
    assert bipartition_dim(Bipartition((1,), (1,))) == 2
    assert bipartition_dim(Bipartition((1, 1), (1, 1))) == 6


# -- the catalog and the classification table -----------------------------


def test_catalog_entries():
    assert sigma_k_bipartition(GroupId.so_even_odd(2, 2)) == Bipartition(
        (1, 1), (1, 1)
    )
    assert sigma_k_bipartition(GroupId.sp_pq(1, 2)) == Bipartition((), (2, 1))
    assert sigma_k_bipartition(GroupId.sp_r(2)) == Bipartition((1,), (1,))
    assert sigma_k_bipartition(GroupId.su(2, 3)) == (2, 2, 1)


def test_pipeline_rows():
    row = springer_row(GroupId.so_even_odd(2, 2))
    assert row.is_springer and row.partition == (3, 2, 2, 1, 1)
    assert row.orbit_dim == 20

    row = springer_row(GroupId.sp_pq(1, 2))
    assert not row.is_springer and row.partition is None

    row = springer_row(GroupId.so_star(3))
    assert row.is_springer and row.partition == (2, 2, 1, 1)
    assert row.orbit_dim == 6
    assert not row.two_orbits

    row = springer_row(GroupId.so_star(4))
    assert row.two_orbits and row.partition == (2, 2, 2, 2)


def test_invalid_pipeline_partition_is_reported():
    # p >= q + 2 in the even-odd orthogonal family: the merged partition
    # exists but fails the parity rule
    group = GroupId.so_even_odd(3, 1)
    assert sigma_k_partition(group) == (3, 2, 2, 2)
    kind, total = ambient_algebra(group)
    assert not valid_nilpotent((3, 2, 2, 2), kind, total)
    assert not springer_row(group).is_springer


@pytest.mark.parametrize("group", table_groups(3), ids=lambda g: g.label())
def test_table_against_reference(group):
    flag, partition, dim = reference_table_row(group)
    row = springer_row(group)
    assert row.is_springer == flag
    if flag:
        assert row.partition == partition
        assert row.orbit_dim == dim
        datum = build_root_datum(group, max_rank=max(8, group.rank))
        assert row.orbit_dim == 2 * (datum.r_g - datum.r_k)
        assert row.generator.total_degree() == datum.r_k


@pytest.mark.parametrize("group", table_groups(3), ids=lambda g: g.label())
def test_catalog_certified_by_inversion(group):
    """Invert the recorded partition through the merge construction and
    recover the catalog label; the symbol construction round-trips."""
    flag, partition, _ = reference_table_row(group)
    if not flag:
        return
    kind, _ = ambient_algebra(group)
    label = sigma_k_bipartition(group)
    if kind == "A":
        assert label == partition
        return
    sym = symbol_of_partition(partition, kind)
    assert bipartition_of_symbol(sym) == label
    assert symbols_equivalent(symbol_of_bipartition(label, kind), sym)
    assert partition_of_symbol(symbol_of_bipartition(label, kind)) == partition


def test_springer_table_deterministic_order():
    rows = springer_table(2)
    labels = [r.group.label() for r in rows]
    assert labels == [g.label() for g in table_groups(2)]


RANK_LE_4 = [g for g in table_groups(4) if g.rank <= 4]


@pytest.mark.parametrize("group", RANK_LE_4, ids=lambda g: g.label())
def test_span_dimension_matches_label_dimension(group):
    """The Weyl-orbit span of the generator has the dimension of the
    catalog label: the hook-length count for hyperoctahedral labels, the
    plain tableaux count in type A, halved for the split equal-pair
    labels of type D."""
    datum = build_root_datum(group)
    row = springer_row(group)
    span = orbit_span(row.generator, weyl_elements(datum, "g"))
    label = row.label
    kind, _ = ambient_algebra(group)
    if kind == "A":
        expected = standard_tableaux_count(label)
    else:
        expected = bipartition_dim(label)
        if kind == "D" and label.alpha == label.beta:
            expected //= 2
    assert span.dim == expected


@pytest.mark.parametrize("group", table_groups(5), ids=lambda g: g.label())
def test_orbit_dimension_is_twice_noncompact_count(group):
    # for every valid row the orbit dimension equals dim_C(p) = 2(r_g - r_k)
    row = springer_row(group)
    if row.is_springer:
        datum = build_root_datum(group, max_rank=max(8, group.rank))
        assert row.orbit_dim == 2 * (datum.r_g - datum.r_k)


def test_bipartition_dim_cap():
    from diracindex.errors import CapExceeded

    with pytest.raises(CapExceeded):
        bipartition_dim(Bipartition((7, 6), ()))


from hypothesis import given, settings, strategies as st


@st.composite
def partitions(draw, max_total=16):
    total = draw(st.integers(1, max_total))
    parts = []
    remaining = total
    cap = total
    while remaining > 0:
        part = draw(st.integers(1, min(cap, remaining)))
        parts.append(part)
        cap = part
        remaining -= part
    return tuple(parts)


@settings(max_examples=150, deadline=None)
@given(partitions(), st.sampled_from(["B", "C", "D"]))
def test_symbol_partition_roundtrip_on_valid_partitions(p, kind):
    total = sum(p)
    if kind == "B" and total % 2 == 0:
        p = p + (1,) if p[-1] >= 1 else p
        p = tuple(sorted(p, reverse=True))
        total = sum(p)
    if kind in ("C", "D") and total % 2 == 1:
        p = tuple(sorted(p + (1,), reverse=True))
        total = sum(p)
    if not valid_nilpotent(p, kind, total):
        return
    sym = symbol_of_partition(p, kind)
    assert partition_of_symbol(sym) == p
    # and the bipartition read off the symbol rebuilds an equivalent symbol
    bp = bipartition_of_symbol(sym)
    assert symbols_equivalent(symbol_of_bipartition(bp, kind), sym)

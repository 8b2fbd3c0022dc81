"""Root data and Weyl groups for the equal-rank classical real families.

All weights live in ambient epsilon-coordinates, as tuples of exact
rationals of length equal to the rank.  The six supported families and
their compact/noncompact splits:

* ``SU(p,q)``        -- type A_{p+q-1} in Q^{p+q}; roots e_i - e_j; a root is
                        compact iff i, j <= p or i, j > p.
* ``SOe(2p,2q+1)``   -- type B_{p+q}; roots e_i +- e_j (i<j) and e_i; compact
                        part is the D_p block on the first p coordinates plus
                        the B_q block on the last q.
* ``Sp(2n,R)``       -- type C_n; compact part {e_i - e_j} (K = U(n)).
* ``Sp(p,q)``        -- type C_{p+q}; compact part C_p x C_q blocks.
* ``SOe(2p,2q)``     -- type D_{p+q}; compact part D_p x D_q blocks.
* ``SO*(2n)``        -- type D_n; compact part {e_i - e_j} (K = U(n)).

Weyl group elements are signed permutations: all signs +1 in type A, an
even number of -1 signs in type D.  SU(p,q) weights are *not* quotiented
by the trace line; every quantity computed downstream is invariant under
adding a multiple of (1,...,1), and the SU lattice accordingly contains
all vectors with pairwise integral coordinate differences.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from typing import Callable, Iterable

from .errors import (
    DimensionMismatch,
    EnumerationCapExceeded,
    IllegalParams,
    RankCapExceeded,
)

Weight = tuple[Fraction, ...]

DEFAULT_RANK_CAP = 8
DEFAULT_WEYL_CAP = 100_000


def as_weight(coords: Iterable) -> Weight:
    return tuple(Fraction(c) for c in coords)


def weight_add(a: Weight, b: Weight) -> Weight:
    if len(a) != len(b):
        raise DimensionMismatch(f"weight lengths {len(a)} != {len(b)}")
    return tuple(x + y for x, y in zip(a, b))


def weight_sub(a: Weight, b: Weight) -> Weight:
    if len(a) != len(b):
        raise DimensionMismatch(f"weight lengths {len(a)} != {len(b)}")
    return tuple(x - y for x, y in zip(a, b))


def weight_neg(a: Weight) -> Weight:
    return tuple(-x for x in a)


def weight_scale(c, a: Weight) -> Weight:
    c = Fraction(c)
    return tuple(c * x for x in a)


def dot(a: Weight, b: Weight) -> Fraction:
    if len(a) != len(b):
        raise DimensionMismatch(f"weight lengths {len(a)} != {len(b)}")
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def pairing(lam: Weight, alpha: Weight) -> Fraction:
    """Coroot pairing <alpha^vee, lam> = 2(lam, alpha)/(alpha, alpha)."""
    return 2 * dot(lam, alpha) / dot(alpha, alpha)


class Family(Enum):
    SU = "SU"
    SO_EVEN_ODD = "SOe_even_odd"
    SP_R = "Sp2nR"
    SP_PQ = "SpPQ"
    SO_EVEN_EVEN = "SOe_even_even"
    SO_STAR = "SOstar"


@dataclass(frozen=True)
class GroupId:
    """One classical real form; (p, q) parameters, or n stored as p (q = 0)."""

    family: Family
    p: int
    q: int = 0

    def __post_init__(self):
        p, q = self.p, self.q
        fam = self.family
        ok = {
            Family.SU: p >= 1 and q >= 1,
            Family.SO_EVEN_ODD: p >= 1 and q >= 0,
            Family.SP_R: p >= 1 and q == 0,
            Family.SP_PQ: p >= 1 and q >= 1,
            Family.SO_EVEN_EVEN: p >= 1 and q >= 1,
            Family.SO_STAR: p >= 1 and q == 0,
        }[fam]
        if not ok:
            raise IllegalParams(f"illegal parameters ({p},{q}) for {fam.value}")

    @classmethod
    def su(cls, p: int, q: int) -> "GroupId":
        return cls(Family.SU, p, q)

    @classmethod
    def so_even_odd(cls, p: int, q: int) -> "GroupId":
        """SO_e(2p, 2q+1); q = 0 is allowed."""
        return cls(Family.SO_EVEN_ODD, p, q)

    @classmethod
    def sp_r(cls, n: int) -> "GroupId":
        return cls(Family.SP_R, n, 0)

    @classmethod
    def sp_pq(cls, p: int, q: int) -> "GroupId":
        return cls(Family.SP_PQ, p, q)

    @classmethod
    def so_even_even(cls, p: int, q: int) -> "GroupId":
        return cls(Family.SO_EVEN_EVEN, p, q)

    @classmethod
    def so_star(cls, n: int) -> "GroupId":
        return cls(Family.SO_STAR, n, 0)

    @property
    def n(self) -> int:
        return self.p

    @property
    def rank(self) -> int:
        return self.p + self.q

    def label(self) -> str:
        p, q = self.p, self.q
        return {
            Family.SU: f"SU({p},{q})",
            Family.SO_EVEN_ODD: f"SOe({2 * p},{2 * q + 1})",
            Family.SP_R: f"Sp({2 * p},R)",
            Family.SP_PQ: f"Sp({p},{q})",
            Family.SO_EVEN_EVEN: f"SOe({2 * p},{2 * q})",
            Family.SO_STAR: f"SO*({2 * p})",
        }[self.family]


@dataclass(frozen=True)
class Block:
    """A contiguous run of coordinates carrying one irreducible root block."""

    kind: str  # 'A', 'B', 'C' or 'D'
    start: int
    size: int

    @property
    def indices(self) -> range:
        return range(self.start, self.start + self.size)

    def weyl_order(self) -> int:
        m = self.size
        if m == 0:
            return 1
        if self.kind == "A":
            return math.factorial(m)
        if self.kind in ("B", "C"):
            return (2**m) * math.factorial(m)
        if self.kind == "D":
            return (2 ** max(m - 1, 0)) * math.factorial(m)
        raise ValueError(f"unknown block kind {self.kind!r}")


def _lattice_integral(w: Weight) -> bool:
    return all(c.denominator == 1 for c in w)


def _lattice_integral_differences(w: Weight) -> bool:
    return all((c - w[0]).denominator == 1 for c in w[1:])


@dataclass(frozen=True)
class RootDatum:
    group: GroupId
    rank: int
    pos_roots: tuple[tuple[Weight, bool], ...]  # (root, compact?)
    rho_g: Weight
    rho_k: Weight
    ambient: Block
    compact_blocks: tuple[Block, ...]
    lattice: Callable[[Weight], bool] = field(compare=False)

    @property
    def positive_roots(self) -> tuple[Weight, ...]:
        return tuple(r for r, _ in self.pos_roots)

    @property
    def compact_positive_roots(self) -> tuple[Weight, ...]:
        return tuple(r for r, c in self.pos_roots if c)

    @property
    def noncompact_positive_roots(self) -> tuple[Weight, ...]:
        return tuple(r for r, c in self.pos_roots if not c)

    @property
    def r_g(self) -> int:
        return len(self.pos_roots)

    @property
    def r_k(self) -> int:
        return sum(1 for _, c in self.pos_roots if c)

    def on_lattice(self, w: Weight) -> bool:
        return len(w) == self.rank and self.lattice(w)

    def on_shifted_lattice(self, gamma: Weight) -> bool:
        """Membership in Lambda + rho_g, the allowed spectral parameters."""
        return len(gamma) == self.rank and self.lattice(weight_sub(gamma, self.rho_g))

    def is_g_regular(self, lam: Weight) -> bool:
        return all(dot(lam, a) != 0 for a in self.positive_roots)

    def is_k_regular(self, lam: Weight) -> bool:
        return all(dot(lam, a) != 0 for a in self.compact_positive_roots)

    def is_k_dominant_regular(self, lam: Weight) -> bool:
        return all(dot(lam, a) > 0 for a in self.compact_positive_roots)


def _block_roots(block: Block, rank: int) -> list[Weight]:
    """Positive roots of one block, as ambient-rank weights."""

    def e(i: int, c=1) -> Weight:
        v = [Fraction(0)] * rank
        v[i] = Fraction(c)
        return tuple(v)

    idx = list(block.indices)
    roots: list[Weight] = []
    for a in range(len(idx)):
        for b in range(a + 1, len(idx)):
            i, j = idx[a], idx[b]
            roots.append(weight_add(e(i), weight_neg(e(j))))  # e_i - e_j
            if block.kind in ("B", "C", "D"):
                roots.append(weight_add(e(i), e(j)))  # e_i + e_j
    if block.kind == "B":
        roots.extend(e(i) for i in idx)
    elif block.kind == "C":
        roots.extend(e(i, 2) for i in idx)
    return roots


def _family_layout(group: GroupId) -> tuple[Block, tuple[Block, ...]]:
    p, q, r = group.p, group.q, group.rank
    fam = group.family
    if fam == Family.SU:
        return Block("A", 0, r), (Block("A", 0, p), Block("A", p, q))
    if fam == Family.SO_EVEN_ODD:
        return Block("B", 0, r), (Block("D", 0, p), Block("B", p, q))
    if fam == Family.SP_R:
        return Block("C", 0, r), (Block("A", 0, r),)
    if fam == Family.SP_PQ:
        return Block("C", 0, r), (Block("C", 0, p), Block("C", p, q))
    if fam == Family.SO_EVEN_EVEN:
        return Block("D", 0, r), (Block("D", 0, p), Block("D", p, q))
    if fam == Family.SO_STAR:
        return Block("D", 0, r), (Block("A", 0, r),)
    raise IllegalParams(f"unknown family {fam}")


@lru_cache(maxsize=None)
def build_root_datum(group: GroupId, max_rank: int = DEFAULT_RANK_CAP) -> RootDatum:
    """Construct the root datum with the conventions in the module docstring."""
    rank = group.rank
    if rank > max_rank:
        raise RankCapExceeded(f"rank {rank} exceeds cap {max_rank}")
    ambient, compact_blocks = _family_layout(group)
    all_roots = _block_roots(ambient, rank)
    compact_set = set()
    for blk in compact_blocks:
        compact_set.update(_block_roots(blk, rank))
    pos_roots = tuple((root, root in compact_set) for root in all_roots)
    half = Fraction(1, 2)
    rho_g = tuple(
        sum((root[i] for root in all_roots), Fraction(0)) * half for i in range(rank)
    )
    rho_k = tuple(
        sum((root[i] for root in compact_set), Fraction(0)) * half for i in range(rank)
    )
    lattice = (
        _lattice_integral_differences if group.family == Family.SU else _lattice_integral
    )
    return RootDatum(
        group=group,
        rank=rank,
        pos_roots=pos_roots,
        rho_g=rho_g,
        rho_k=rho_k,
        ambient=ambient,
        compact_blocks=compact_blocks,
        lattice=lattice,
    )


def with_lattice(datum: RootDatum, predicate: Callable[[Weight], bool]) -> RootDatum:
    """Copy of the datum with a substituted weight-lattice predicate.

    The default per-family lattices (integral coordinates, or integral
    differences for the special unitary family) fit the fixtures here;
    covers with other character lattices can swap in their own test.
    """
    from dataclasses import replace

    return replace(datum, lattice=predicate)


@dataclass(frozen=True)
class WeylElement:
    """Signed permutation; (w.lam)_i = signs[i] * lam[perm[i]]."""

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    @classmethod
    def identity(cls, rank: int) -> "WeylElement":
        return cls(tuple(range(rank)), (1,) * rank)

    def apply(self, w: Weight) -> Weight:
        if len(w) != len(self.perm):
            raise DimensionMismatch("weight length does not match Weyl element")
        return tuple(s * w[p] for p, s in zip(self.perm, self.signs))

    def compose(self, other: "WeylElement") -> "WeylElement":
        """self o other: apply ``other`` first, then ``self``."""
        perm = tuple(other.perm[p] for p in self.perm)
        signs = tuple(s * other.signs[p] for p, s in zip(self.perm, self.signs))
        return WeylElement(perm, signs)

    def inverse(self) -> "WeylElement":
        n = len(self.perm)
        inv_perm = [0] * n
        inv_signs = [1] * n
        for i, p in enumerate(self.perm):
            inv_perm[p] = i
            inv_signs[p] = self.signs[i]
        return WeylElement(tuple(inv_perm), tuple(inv_signs))

    def sign(self) -> int:
        return _perm_parity(self.perm) * math.prod(self.signs)

    def is_identity(self) -> bool:
        return all(p == i for i, p in enumerate(self.perm)) and all(
            s == 1 for s in self.signs
        )


def _perm_parity(perm: tuple[int, ...]) -> int:
    seen = [False] * len(perm)
    parity = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            parity = -parity
    return parity


def reflection(alpha: Weight) -> WeylElement:
    """The reflection s_alpha, for alpha of the form +-e_i +- e_j or (2)e_i."""
    rank = len(alpha)
    support = [i for i, c in enumerate(alpha) if c != 0]
    perm = list(range(rank))
    signs = [1] * rank
    if len(support) == 1:
        signs[support[0]] = -1
    elif len(support) == 2:
        i, j = support
        perm[i], perm[j] = j, i
        if alpha[i] * alpha[j] > 0:  # e_i + e_j: swap and flip both signs
            signs[i] = signs[j] = -1
    else:
        raise ValueError("reflection only implemented for classical root shapes")
    return WeylElement(tuple(perm), tuple(signs))


def _block_elements(block: Block, rank: int) -> list[WeylElement]:
    idx = list(block.indices)
    m = len(idx)
    out: list[WeylElement] = []
    sign_choices: Iterable[tuple[int, ...]]
    if block.kind == "A" or m == 0:
        sign_choices = [(1,) * m]
    elif block.kind in ("B", "C"):
        sign_choices = product((1, -1), repeat=m)
    else:  # D: even number of -1s
        sign_choices = (
            s for s in product((1, -1), repeat=m) if s.count(-1) % 2 == 0
        )
    sign_choices = list(sign_choices)
    for sigma in permutations(range(m)):
        for sgns in sign_choices:
            perm = list(range(rank))
            signs = [1] * rank
            for a in range(m):
                perm[idx[a]] = idx[sigma[a]]
                signs[idx[a]] = sgns[a]
            out.append(WeylElement(tuple(perm), tuple(signs)))
    return out


def weyl_order(datum: RootDatum, which: str = "g") -> int:
    blocks = (datum.ambient,) if which == "g" else datum.compact_blocks
    return math.prod(b.weyl_order() for b in blocks)


@lru_cache(maxsize=None)
def _weyl_elements_cached(
    group: GroupId, which: str, cap: int
) -> tuple[WeylElement, ...]:
    datum = build_root_datum(group, max(group.rank, DEFAULT_RANK_CAP))
    order = weyl_order(datum, which)
    if order > cap:
        raise EnumerationCapExceeded(f"|W| = {order} exceeds cap {cap}")
    blocks = (datum.ambient,) if which == "g" else datum.compact_blocks
    elems = [WeylElement.identity(datum.rank)]
    for blk in blocks:
        blk_elems = _block_elements(blk, datum.rank)
        elems = [e.compose(b) for e in elems for b in blk_elems]
    assert len(set(elems)) == order
    return tuple(elems)


def weyl_elements(
    datum: RootDatum, which: str = "g", cap: int = DEFAULT_WEYL_CAP
) -> tuple[WeylElement, ...]:
    """Complete, duplicate-free list of W_g or W_k as signed permutations."""
    if which not in ("g", "k"):
        raise ValueError("which must be 'g' or 'k'")
    return _weyl_elements_cached(datum.group, which, cap)


@lru_cache(maxsize=None)
def simple_roots(datum: RootDatum) -> tuple[Weight, ...]:
    """Positive roots not expressible as a sum of two positive roots."""
    pos = set(datum.positive_roots)
    sums = {weight_add(a, b) for a in pos for b in pos}
    return tuple(r for r in datum.positive_roots if r not in sums)


def normalize_k_dominant(
    datum: RootDatum, gamma: Weight
) -> tuple[int, Weight] | None:
    """Unique (sign(x), x.gamma) with x in W_k and x.gamma strictly k-dominant.

    Returns None when gamma is singular for some compact root.  Works
    blockwise: sort descending for A blocks, sort absolute values (all
    signs made positive) for B/C blocks, same for D blocks except that
    sign flips must come in pairs, so an odd flip count either lands on a
    zero coordinate or leaves the last coordinate negative.
    """
    coords = list(gamma)
    total_sign = 1
    for blk in datum.compact_blocks:
        idx = list(blk.indices)
        vals = [coords[i] for i in idx]
        if blk.kind == "A":
            if len(set(vals)) != len(vals):
                return None
            order = sorted(range(len(vals)), key=lambda a: vals[a], reverse=True)
            total_sign *= _perm_parity(tuple(order))
            new_vals = [vals[a] for a in order]
        elif blk.kind in ("B", "C"):
            if any(v == 0 for v in vals):
                return None
            flips = sum(1 for v in vals if v < 0)
            avals = [abs(v) for v in vals]
            if len(set(avals)) != len(avals):
                return None
            order = sorted(range(len(avals)), key=lambda a: avals[a], reverse=True)
            total_sign *= _perm_parity(tuple(order)) * ((-1) ** flips)
            new_vals = [avals[a] for a in order]
        else:  # D
            zeros = sum(1 for v in vals if v == 0)
            if zeros >= 2:
                return None
            avals = [abs(v) for v in vals]
            if len(set(avals)) != len(avals):
                return None
            flips = sum(1 for v in vals if v < 0)
            order = sorted(range(len(avals)), key=lambda a: avals[a], reverse=True)
            total_sign *= _perm_parity(tuple(order))
            new_vals = [avals[a] for a in order]
            if flips % 2 == 1 and zeros == 0 and new_vals:
                new_vals[-1] = -new_vals[-1]
        for i, v in zip(idx, new_vals):
            coords[i] = v
    return total_sign, tuple(coords)

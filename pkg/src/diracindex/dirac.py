"""Dirac index machinery: spin module weights, discrete-series indices,
index families over coherent families, translation checks, and index
polynomials.

An index family records integers a_w on Weyl group elements so that the
index at any parameter lam of the coset base + Lambda is
sum_w a_w * E(w lam), with E the sign-normalized virtual K-type.  The
translation principle is exactly the statement that one coefficient
vector serves the whole family, so evaluation is a single normalized sum.

Sign conventions, pinned once and validated operationally:

* The spin module halves S+/S- are the even/odd parity pieces of the
  exterior algebra on the positive noncompact roots, with labels swapped
  when the number of positive noncompact roots is odd; this makes
  ch(S+ - S-) equal to the quotient d_g/d_k of Weyl denominators exactly.
* A discrete series with regular Harish-Chandra parameter lam has index
  (-1)^m E(lam), m the number of positive noncompact roots of the fixed
  system that lam makes negative.  For the rank-one hyperbolic unitary
  group this gives +E_n on the holomorphic side and -E_{-n} on the
  antiholomorphic side.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from itertools import combinations
from typing import Mapping

from .errors import CapExceeded, DimensionMismatch, OffLattice, SingularParameter
from .groups import (
    RootDatum,
    Weight,
    WeylElement,
    dot,
    normalize_k_dominant,
    simple_roots,
    weight_add,
    weight_sub,
)
from .kmodules import (
    VirtualKModule,
    WeightMultiset,
    tensor_virtual,
    virtual_k_type,
    weight_multiset,
)
from .polynomials import MultiPoly
from .ratlinalg import solve_linear
from .series import TruncatedSeries
from .weylaction import act, weyl_dim_poly

SPIN_SUBSET_CAP = 20


@dataclass(frozen=True)
class SpinWeights:
    plus: WeightMultiset
    minus: WeightMultiset

    def total(self) -> int:
        return self.plus.total() + self.minus.total()


def spin_weights(datum: RootDatum, cap: int = SPIN_SUBSET_CAP) -> SpinWeights:
    """The 2^(r_g - r_k) spin weights -rho_g + rho_k + (subset sums),
    split by subset parity, with the parity labels chosen so that
    ch(S+ - S-) = d_g/d_k holds exactly."""
    noncompact = datum.noncompact_positive_roots
    q = len(noncompact)
    if q > cap:
        raise CapExceeded(f"{q} noncompact roots exceeds the subset cap {cap}")
    base = weight_sub(datum.rho_k, datum.rho_g)
    plus: dict[Weight, int] = {}
    minus: dict[Weight, int] = {}
    flip = q % 2 == 1
    for size in range(q + 1):
        even = size % 2 == 0
        bucket = plus if (even != flip) else minus
        for subset in combinations(noncompact, size):
            w = base
            for beta in subset:
                w = weight_add(w, beta)
            bucket[w] = bucket.get(w, 0) + 1
    return SpinWeights(WeightMultiset(plus), WeightMultiset(minus))


def spin_character_series(
    datum: RootDatum, y: Weight, order: int
) -> TruncatedSeries:
    """ch(S+ - S-)(exp ty) as an exact series in t."""
    sw = spin_weights(datum)
    total = TruncatedSeries.zero(order)
    for w, m in sw.plus.items():
        total = total + TruncatedSeries.exponential(dot(w, y), order).scale(m)
    for w, m in sw.minus.items():
        total = total - TruncatedSeries.exponential(dot(w, y), order).scale(m)
    return total


def chamber_sign(lam: Weight, datum: RootDatum) -> int:
    """(-1)^(number of positive noncompact roots made negative by lam)."""
    flips = sum(1 for beta in datum.noncompact_positive_roots if dot(lam, beta) < 0)
    return -1 if flips % 2 else 1


def index_discrete_series(lam: Weight, datum: RootDatum) -> VirtualKModule:
    """Dirac index of the discrete series with Harish-Chandra parameter lam."""
    if not datum.is_g_regular(lam):
        raise SingularParameter(f"{lam} is singular")
    return virtual_k_type(lam, datum).scale(chamber_sign(lam, datum))


@dataclass(frozen=True)
class IndexFamily:
    """Index data of one coherent family: I(X_lam) = sum_w a_w E(w lam)."""

    datum: RootDatum
    base: Weight
    coeffs: Mapping[WeylElement, int]
    gk_dim: int | None = None
    name: str = ""

    def __post_init__(self):
        object.__setattr__(
            self,
            "coeffs",
            {w: int(a) for w, a in self.coeffs.items() if a != 0},
        )
        if len(self.base) != self.datum.rank:
            raise DimensionMismatch("base length must equal the rank")

    def support(self) -> list[tuple[WeylElement, int]]:
        return sorted(
            self.coeffs.items(), key=lambda t: (t[0].perm, t[0].signs)
        )

    def is_zero(self) -> bool:
        return not self.coeffs


def discrete_series_family(
    lam0: Weight, datum: RootDatum, gk_dim: int | None = None, name: str = ""
) -> IndexFamily:
    """The index family through a discrete series at regular parameter lam0."""
    if not datum.is_g_regular(lam0):
        raise SingularParameter(f"{lam0} is singular")
    eps = chamber_sign(lam0, datum)
    e = WeylElement.identity(datum.rank)
    return IndexFamily(datum, lam0, {e: eps}, gk_dim=gk_dim, name=name)


def family_combination(
    fam: IndexFamily, other: IndexFamily, c1: int = 1, c2: int = 1
) -> IndexFamily:
    """c1 * fam + c2 * other, over a common base."""
    if fam.datum.group != other.datum.group or fam.base != other.base:
        raise ValueError("families must share a datum and base point")
    coeffs = {w: c1 * a for w, a in fam.coeffs.items()}
    for w, a in other.coeffs.items():
        coeffs[w] = coeffs.get(w, 0) + c2 * a
    return IndexFamily(fam.datum, fam.base, coeffs)


def evaluate_index(fam: IndexFamily, lam: Weight) -> VirtualKModule:
    """I(X_lam) = sum_w a_w E(w lam); lam must lie on the base coset."""
    datum = fam.datum
    if len(lam) != datum.rank:
        raise DimensionMismatch("parameter length must equal the rank")
    if not datum.on_lattice(weight_sub(lam, fam.base)):
        raise OffLattice(f"{lam} is not in base + Lambda")
    out = VirtualKModule.zero(datum)
    for w, a in fam.coeffs.items():
        out = out + virtual_k_type(w.apply(lam), datum).scale(a)
    return out


def index_polynomial(fam: IndexFamily) -> MultiPoly:
    """Q(lam) = sum_w a_w D_k(w lam), as an exact polynomial.

    On every lattice point of the coset this equals the virtual dimension
    of evaluate_index, because D_k vanishes at compactly singular
    parameters and changes by sgn under the compact Weyl group.
    """
    dk = weyl_dim_poly(fam.datum)
    out = MultiPoly.zero(fam.datum.rank)
    for w, a in fam.coeffs.items():
        out = out + act(w.inverse(), dk) * a
    return out


def verify_translation(
    fam: IndexFamily, f_highest: Weight, lam: Weight
) -> bool:
    """Check I(X_lam) (x) F = sum_{mu in Delta(F)} I(X_{lam+mu}) exactly."""
    delta = weight_multiset(f_highest, fam.datum)
    left = tensor_virtual(evaluate_index(fam, lam), delta)
    right = VirtualKModule.zero(fam.datum)
    for mu, m in delta.items():
        right = right + evaluate_index(fam, weight_add(lam, mu)).scale(m)
    return left == right


def is_integral_weyl(w: WeylElement, base: Weight, datum: RootDatum) -> bool:
    """True iff base - w(base) is an integer combination of roots."""
    diff = weight_sub(base, w.apply(base))
    simples = simple_roots(datum)
    rows = [[alpha[i] for alpha in simples] for i in range(datum.rank)]
    sol = solve_linear(rows, list(diff))
    if sol is None:
        return False
    return all(c.denominator == 1 for c in sol)


def act_on_family(
    w: WeylElement, fam: IndexFamily, validate: bool = False
) -> IndexFamily:
    """Coherent-continuation action: the family of w.X evaluates at lam to
    the original family at w^{-1} lam, i.e. coefficients a'_u = a_{uw}."""
    if validate and not is_integral_weyl(w, fam.base, fam.datum):
        raise ValueError("Weyl element is not integral for the base parameter")
    coeffs = {u.compose(w.inverse()): a for u, a in fam.coeffs.items()}
    return replace(fam, coeffs=coeffs)


def canonical_coeffs(fam: IndexFamily) -> dict[WeylElement, int]:
    """Coefficients folded onto coset representatives making w(base)
    dominant for the compact positive system.  Families that differ only
    by the compact-coset ambiguity fold to the same dictionary."""
    datum = fam.datum
    out: dict[WeylElement, int] = {}
    for w, a in fam.coeffs.items():
        gamma = w.apply(fam.base)
        normalized = normalize_k_dominant(datum, gamma)
        if normalized is None:
            # Compactly singular translate: keep the raw representative.
            out[w] = out.get(w, 0) + a
            continue
        sign, dom = normalized
        u = _k_element_sending(datum, gamma, dom)
        folded = u.compose(w)
        out[folded] = out.get(folded, 0) + sign * a
    return {w: a for w, a in out.items() if a != 0}


def families_equivalent(fam: IndexFamily, other: IndexFamily) -> bool:
    """Equality up to the compact-coset ambiguity of the coefficients."""
    if fam.datum.group != other.datum.group or fam.base != other.base:
        return False
    return canonical_coeffs(fam) == canonical_coeffs(other)


def _k_element_sending(
    datum: RootDatum, source: Weight, target: Weight
) -> WeylElement:
    """Some u in W_k with u(source) = target, found blockwise by matching
    sorted coordinates (source is assumed compactly regular)."""
    rank = datum.rank
    perm = list(range(rank))
    signs = [1] * rank
    for blk in datum.compact_blocks:
        idx = list(blk.indices)
        src = [source[i] for i in idx]
        tgt = [target[i] for i in idx]
        used = [False] * len(idx)
        for a, t in enumerate(tgt):
            found = False
            for b, s in enumerate(src):
                if used[b]:
                    continue
                if blk.kind == "A" and s == t:
                    perm[idx[a]], signs[idx[a]], used[b] = idx[b], 1, True
                    found = True
                elif blk.kind in ("B", "C", "D") and (s == t or s == -t):
                    perm[idx[a]] = idx[b]
                    signs[idx[a]] = 1 if s == t else -1
                    used[b] = True
                    found = True
                if found:
                    break
            if not found:
                raise ValueError("no compact Weyl element maps source to target")
        if blk.kind == "D":
            flips = sum(1 for i in idx if signs[i] < 0)
            if flips % 2 == 1:
                # Sign flips come in pairs in a D block; absorb the odd one
                # on a zero coordinate, where it acts trivially.
                for i in idx:
                    if source[perm[i]] == 0:
                        signs[i] = -signs[i]
                        break
                else:
                    raise ValueError("no compact Weyl element maps source to target")
    return WeylElement(tuple(perm), tuple(signs))

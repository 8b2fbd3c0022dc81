"""Virtual modules for the spin double cover of K, indexed by infinitesimal
character, plus weight multisets of finite-dimensional modules and exact
character series on the compact torus.

A spectral parameter gamma contributes the (virtual) irreducible of
highest weight gamma - rho_k when gamma is strictly dominant regular for
the compact positive system; a W_k-translate contributes with the sign of
the translating element; compactly singular or off-lattice parameters
contribute zero.  The allowed parameters form the coset Lambda + rho_g.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .errors import (
    DimensionMismatch,
    NotDominantIntegral,
    SingularDirection,
)
from .groups import (
    RootDatum,
    Weight,
    dot,
    normalize_k_dominant,
    pairing,
    reflection,
    simple_roots,
    weight_add,
    weight_sub,
    weyl_elements,
)
from .ratlinalg import solve_linear
from .series import TruncatedSeries
from .weylaction import weyl_dim_value, weyl_dim_value_g


class VirtualKModule:
    """Finitely supported integer combination of dominant-regular parameters."""

    __slots__ = ("datum", "coeffs")

    def __init__(self, datum: RootDatum, coeffs: Mapping[Weight, int] | None = None):
        self.datum = datum
        clean: dict[Weight, int] = {}
        for gamma, c in (coeffs or {}).items():
            c = int(c)
            if c == 0:
                continue
            if len(gamma) != datum.rank:
                raise DimensionMismatch("parameter length must equal the rank")
            if not datum.is_k_dominant_regular(gamma):
                raise ValueError("stored parameters must be dominant regular for K")
            if not datum.on_shifted_lattice(gamma):
                raise ValueError("stored parameters must lie on the shifted lattice")
            clean[gamma] = c
        self.coeffs = clean

    @classmethod
    def zero(cls, datum: RootDatum) -> "VirtualKModule":
        return cls(datum, {})

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check(self, other: "VirtualKModule"):
        if self.datum.group != other.datum.group:
            raise ValueError("modules live over different groups")

    def __add__(self, other: "VirtualKModule") -> "VirtualKModule":
        self._check(other)
        out = dict(self.coeffs)
        for g, c in other.coeffs.items():
            out[g] = out.get(g, 0) + c
        return VirtualKModule(self.datum, out)

    def __sub__(self, other: "VirtualKModule") -> "VirtualKModule":
        return self + other.scale(-1)

    def scale(self, c: int) -> "VirtualKModule":
        return VirtualKModule(
            self.datum, {g: c * v for g, v in self.coeffs.items()}
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, VirtualKModule)
            and self.datum.group == other.datum.group
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.datum.group, frozenset(self.coeffs.items())))

    def sorted_terms(self) -> list[tuple[Weight, int]]:
        return sorted(self.coeffs.items(), key=lambda t: t[0])

    def __repr__(self):
        if self.is_zero():
            return "VirtualKModule(0)"
        bits = [
            f"{c:+d}*E[{','.join(str(x) for x in g)}]"
            for g, c in self.sorted_terms()
        ]
        return "VirtualKModule(" + " ".join(bits) + ")"


def virtual_k_type(gamma: Weight, datum: RootDatum) -> VirtualKModule:
    """Sign-normalized virtual K-type with infinitesimal character gamma.

    Zero when gamma is off the shifted lattice or singular for a compact
    root; otherwise sgn(x) times the dominant representative x.gamma.
    """
    if len(gamma) != datum.rank:
        raise DimensionMismatch("parameter length must equal the rank")
    if not datum.on_shifted_lattice(gamma):
        return VirtualKModule.zero(datum)
    normalized = normalize_k_dominant(datum, gamma)
    if normalized is None:
        return VirtualKModule.zero(datum)
    sign, dom = normalized
    return VirtualKModule(datum, {dom: sign})


def dim_virtual(module: VirtualKModule) -> int:
    """Dimension sum(coeff * WeylDim); exact and always an integer."""
    total = Fraction(0)
    for gamma, c in module.coeffs.items():
        total += c * weyl_dim_value(module.datum, gamma)
    if total.denominator != 1:
        raise ValueError(f"non-integral virtual dimension {total}")
    return int(total)


@dataclass(frozen=True)
class WeightMultiset:
    """Finite multiset of weights with positive integer multiplicities."""

    mults: Mapping[Weight, int]

    def __post_init__(self):
        object.__setattr__(self, "mults", dict(self.mults))
        if any(m <= 0 for m in self.mults.values()):
            raise ValueError("multiplicities must be positive")

    def total(self) -> int:
        return sum(self.mults.values())

    def items(self):
        return self.mults.items()

    def __contains__(self, w: Weight) -> bool:
        return w in self.mults

    def __eq__(self, other):
        return isinstance(other, WeightMultiset) and dict(self.mults) == dict(
            other.mults
        )


def _dominant_rep_g(datum: RootDatum, mu: Weight) -> Weight:
    """Dominant representative of mu under the full Weyl group, blockwise."""
    blk = datum.ambient
    vals = list(mu)
    if blk.kind == "A":
        vals.sort(reverse=True)
    elif blk.kind in ("B", "C"):
        vals = sorted((abs(v) for v in vals), reverse=True)
    else:  # D: even sign flips
        negs = sum(1 for v in vals if v < 0)
        has_zero = any(v == 0 for v in vals)
        vals = sorted((abs(v) for v in vals), reverse=True)
        if negs % 2 == 1 and not has_zero:
            vals[-1] = -vals[-1]
    return tuple(vals)


def _is_g_dominant(datum: RootDatum, mu: Weight) -> bool:
    return all(dot(mu, a) >= 0 for a in simple_roots(datum))


@lru_cache(maxsize=None)
def _height_functional(datum: RootDatum) -> Weight:
    """Vector x with <alpha_i, x> = 1 for every simple root alpha_i, so that
    dot(beta, x) is the coefficient sum of beta in the simple-root basis."""
    simples = simple_roots(datum)
    x = solve_linear(simples, [Fraction(1)] * len(simples))
    if x is None:
        raise ValueError("simple roots admit no height functional")
    return tuple(x)


@lru_cache(maxsize=None)
def _dominant_character(datum: RootDatum, highest: Weight) -> tuple:
    """Freudenthal multiplicities at the dominant weights of V(highest)."""
    rho = datum.rho_g
    pos = datum.positive_roots
    simples = simple_roots(datum)
    top_norm = dot(weight_add(highest, rho), weight_add(highest, rho))

    # BFS over the weight diagram by simple-root steps; the norm bound
    # |mu + rho|^2 <= |highest + rho|^2 holds for every weight of V.
    seen = {highest}
    frontier = [highest]
    while frontier:
        nxt = []
        for mu in frontier:
            for alpha in simples:
                child = weight_sub(mu, alpha)
                if child in seen:
                    continue
                cr = weight_add(child, rho)
                if dot(cr, cr) <= top_norm:
                    seen.add(child)
                    nxt.append(child)
        frontier = nxt

    dominants = [mu for mu in seen if _is_g_dominant(datum, mu)]
    # Order by the height of highest - mu in the simple-root basis; every
    # parameter the recursion consults dominates the one being computed.
    height = _height_functional(datum)
    dominants.sort(key=lambda mu: dot(weight_sub(highest, mu), height))

    mult: dict[Weight, Fraction] = {}

    def mult_of(nu: Weight) -> Fraction:
        return mult.get(_dominant_rep_g(datum, nu), Fraction(0))

    for mu in dominants:
        if mu == highest:
            mult[mu] = Fraction(1)
            continue
        mu_rho = weight_add(mu, rho)
        denom = top_norm - dot(mu_rho, mu_rho)
        acc = Fraction(0)
        for alpha in pos:
            norm2 = dot(alpha, alpha)
            k = 1
            while True:
                nu = weight_add(mu, tuple(k * a for a in alpha))
                nr = weight_add(nu, rho)
                if dot(nr, nr) > top_norm:
                    # Past the vertex of the norm parabola the bound is final.
                    if k * norm2 > -dot(mu_rho, alpha):
                        break
                else:
                    m = mult_of(nu)
                    if m:
                        acc += m * dot(nu, alpha)
                k += 1
        value = 2 * acc / denom
        if value:
            mult[mu] = value
    return tuple(sorted(mult.items()))


def weyl_orbit(datum: RootDatum, mu: Weight) -> set[Weight]:
    """Full Weyl group orbit of mu, generated by simple reflections."""
    gens = [reflection(alpha) for alpha in simple_roots(datum)]
    orbit = {mu}
    frontier = [mu]
    while frontier:
        nxt = []
        for nu in frontier:
            for s in gens:
                im = s.apply(nu)
                if im not in orbit:
                    orbit.add(im)
                    nxt.append(im)
        frontier = nxt
    return orbit


def weight_multiset(highest: Weight, datum: RootDatum) -> WeightMultiset:
    """All weights of the finite-dimensional module with the given highest
    weight, with multiplicities (Freudenthal recursion, exact rationals)."""
    if len(highest) != datum.rank:
        raise DimensionMismatch("highest weight length must equal the rank")
    for alpha in datum.positive_roots:
        p = pairing(highest, alpha)
        if p < 0 or p.denominator != 1:
            raise NotDominantIntegral(
                f"<{alpha}, {highest}> = {p} is not a nonnegative integer"
            )
    dom = dict(_dominant_character(datum, tuple(highest)))
    out: dict[Weight, int] = {}
    for mu, m in dom.items():
        if m.denominator != 1:
            raise ValueError("non-integral weight multiplicity")
        for nu in weyl_orbit(datum, mu):
            out[nu] = int(m)
    total = sum(out.values())
    expected = weyl_dim_value_g(datum, weight_add(highest, datum.rho_g))
    if total != expected:
        raise ValueError(
            f"weight multiset mass {total} disagrees with Weyl dimension {expected}"
        )
    return WeightMultiset(out)


def tensor_virtual(module: VirtualKModule, delta: WeightMultiset) -> VirtualKModule:
    """Tensor by the weight multiset of a finite-dimensional module."""
    datum = module.datum
    out = VirtualKModule.zero(datum)
    for gamma, c in module.coeffs.items():
        for mu, m in delta.items():
            out = out + virtual_k_type(weight_add(gamma, mu), datum).scale(c * m)
    return out


# -- exact character series on the compact torus ----------------------


def check_regular_direction(datum: RootDatum, y: Weight) -> None:
    if len(y) != datum.rank:
        raise DimensionMismatch("direction length must equal the rank")
    for alpha in datum.positive_roots:
        if dot(alpha, y) == 0:
            raise SingularDirection(f"direction is singular for root {alpha}")


def weyl_numerator_frequencies(
    datum: RootDatum, gamma: Weight, y: Weight
) -> dict[Fraction, int]:
    """Exponent frequencies of sum_{w in W_k} sgn(w) e^{(w gamma)(y) t}."""
    freqs: dict[Fraction, int] = {}
    for w in weyl_elements(datum, "k"):
        f = dot(w.apply(gamma), y)
        freqs[f] = freqs.get(f, 0) + w.sign()
    return {f: c for f, c in freqs.items() if c != 0}


def frequencies_to_series(freqs: Mapping[Fraction, int], order: int) -> TruncatedSeries:
    total = TruncatedSeries.zero(order)
    for rate, c in freqs.items():
        total = total + TruncatedSeries.exponential(rate, order).scale(c)
    return total


def weyl_denominator_factored(
    datum: RootDatum, y: Weight, which: str, order: int
) -> tuple[int, TruncatedSeries]:
    """d(exp ty) = t^r * U(t) with U(0) = prod alpha(y) != 0; returns (r, U).

    Each factor e^{a t/2} - e^{-a t/2} contributes one power of t and a
    series 2*sinh(at/2)/t with constant term a.
    """
    roots = (
        datum.positive_roots if which == "g" else datum.compact_positive_roots
    )
    u = TruncatedSeries.one(order)
    for alpha in roots:
        a = dot(alpha, y)
        half = TruncatedSeries.exponential(Fraction(a, 2), order + 1)
        mhalf = TruncatedSeries.exponential(Fraction(-a, 2), order + 1)
        factor = (half - mhalf).shift_down(1)
        u = u * factor.truncate(order)
    return len(roots), u


def ch_series(module: VirtualKModule, y: Weight, order: int) -> TruncatedSeries:
    """Taylor series in t of the character of the module at exp(t y).

    The Weyl numerator vanishes to order r_k at t = 0, matching the zero
    of the compact Weyl denominator, so the quotient is a power series;
    its constant term is the virtual dimension.
    """
    datum = module.datum
    check_regular_direction(datum, y)
    if order < datum.r_g:
        raise ValueError(f"order must be at least r_g = {datum.r_g}")
    if module.is_zero():
        return TruncatedSeries.zero(order)
    freqs: dict[Fraction, int] = {}
    for gamma, c in module.coeffs.items():
        for f, m in weyl_numerator_frequencies(datum, gamma, y).items():
            v = freqs.get(f, 0) + c * m
            if v:
                freqs[f] = v
            else:
                freqs.pop(f, None)
    r_k = datum.r_k
    # order past the frequency count so a nonzero sum cannot read as zero
    numerator = frequencies_to_series(freqs, max(order + r_k, len(freqs)))
    shifted = numerator.shift_down(r_k)  # checks exact vanishing to order r_k
    _, u = weyl_denominator_factored(datum, y, "k", order)
    return shifted.truncate(order).divide(u)

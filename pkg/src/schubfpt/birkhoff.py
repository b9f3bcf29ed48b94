"""Join-irreducibles of Gamma(X; gamma), the ideal lattice rebuilt from them,
and shortest/longest saturated chains of the poset with -inf and +inf adjoined."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import BudgetExceededError, DegenerateLatticeError
from .lattice import SchubertLattice, leq
from .tuples import GammaTuple, Point, decompose, is_gorenstein, kappa_profile

DEFAULT_MAX_IDEALS = 10**6
MAX_ENUMERATED_CHAINS = 10**5

BOTTOM = "-inf"
TOP = "inf"


@dataclass(frozen=True)
class IrreduciblePoset:
    """A finite poset given by its elements and the componentwise order.

    The augmented cover graph always includes ``BOTTOM`` and ``TOP``.
    """

    elements: tuple[Point, ...]
    augmented: bool = True

    def less(self, x, y) -> bool:
        if x == y:
            return False
        if x == BOTTOM or y == TOP:
            return True
        if x == TOP or y == BOTTOM:
            return False
        return leq(x, y)

    @cached_property
    def covers(self) -> dict[Point, list[Point]]:
        """Upward covers inside P (without -inf/inf)."""
        els = self.elements
        out = {}
        for x in els:
            above = [y for y in els if self.less(x, y)]
            out[x] = [y for y in above if not any(self.less(z, y) for z in above)]
        return out

    @cached_property
    def augmented_covers(self) -> dict:
        out: dict = {BOTTOM: [], TOP: []}
        has_lower = {y for ys in self.covers.values() for y in ys}
        for x in self.elements:
            out[x] = list(self.covers[x]) or [TOP]
            if x not in has_lower:
                out[BOTTOM].append(x)
        if not self.elements:
            out[BOTTOM] = [TOP]
        return out

    def comparable_pairs(self) -> list[tuple[Point, Point]]:
        return [(x, y) for x in self.elements for y in self.elements if self.less(x, y)]

    def __len__(self) -> int:
        return len(self.elements)


def join_irreducibles(lat: SchubertLattice) -> IrreduciblePoset:
    """Elements with exactly one lower cover."""
    if len(lat) < 2:
        raise DegenerateLatticeError("a one-element lattice has no join-irreducibles")
    lower = lat.lower_covers
    return IrreduciblePoset(tuple(x for x in lat.elements if len(lower[x]) == 1))


def ideal_lattice(P: IrreduciblePoset, max_ideals: int = DEFAULT_MAX_IDEALS) -> list[frozenset]:
    """All down-closed subsets of P.

    Elements are decided in lexicographic order, which is a linear extension
    of the componentwise order, so each decision only looks at earlier ones.
    """
    els = sorted(P.elements)
    below = {x: [y for y in els if P.less(y, x)] for x in els}
    out: list[frozenset] = []
    chosen: set = set()

    def walk(k: int):
        if k == len(els):
            if len(out) >= max_ideals:
                raise BudgetExceededError("ideal count", max_ideals)
            out.append(frozenset(chosen))
            return
        x = els[k]
        walk(k + 1)
        if all(y in chosen for y in below[x]):
            chosen.add(x)
            walk(k + 1)
            chosen.discard(x)

    walk(0)
    return out


def birkhoff_map(lat: SchubertLattice, P: IrreduciblePoset) -> dict[Point, frozenset]:
    return {x: frozenset(p for p in P.elements if leq(p, x)) for x in lat.elements}


def check_round_trip(lat: SchubertLattice, max_ideals: int = DEFAULT_MAX_IDEALS) -> list[str]:
    """x -> {p in P : p <= x} must be an order isomorphism onto the ideals of P."""
    if len(lat) < 2:
        return []
    P = join_irreducibles(lat)
    ideals = ideal_lattice(P, max_ideals)
    phi = birkhoff_map(lat, P)
    errs = []
    if len(ideals) != len(lat):
        errs.append(f"{len(ideals)} ideals but {len(lat)} lattice elements")
    if set(phi.values()) != set(ideals):
        errs.append("image of the lattice is not the set of ideals")
    els = lat.elements
    for x in els:
        for y in els:
            if leq(x, y) != (phi[x] <= phi[y]):
                errs.append(f"order not preserved between {x} and {y}")
    return errs


@dataclass(frozen=True)
class ChainStats:
    dist: int
    rank: int


def _topological(P: IrreduciblePoset) -> list:
    # lexicographic order is a linear extension of the componentwise order
    return [BOTTOM, *sorted(P.elements), TOP]


def chain_stats(P: IrreduciblePoset) -> ChainStats:
    """Shortest and longest saturated -inf -> inf chains, counted in cover steps."""
    cov = P.augmented_covers
    shortest = {BOTTOM: 0}
    longest = {BOTTOM: 0}
    for x in _topological(P):
        for y in cov[x]:
            shortest[y] = min(shortest.get(y, shortest[x] + 1), shortest[x] + 1)
            longest[y] = max(longest.get(y, longest[x] + 1), longest[x] + 1)
    return ChainStats(shortest[TOP], longest[TOP])


def maximal_chain_lengths(P: IrreduciblePoset, limit: int = MAX_ENUMERATED_CHAINS) -> set[int] | None:
    """Lengths of all maximal chains of the augmented poset, by explicit
    enumeration; ``None`` when there are more than ``limit`` chains."""
    cov = P.augmented_covers
    lengths: set[int] = set()
    count = 0
    stack = [(BOTTOM, 0)]
    while stack:
        x, k = stack.pop()
        if x == TOP:
            lengths.add(k)
            count += 1
            if count > limit:
                return None
            continue
        stack.extend((y, k + 1) for y in cov[x])
    return lengths


def remark_stats(gamma: GammaTuple, lat: SchubertLattice | None = None) -> ChainStats:
    if lat is None:
        lat = SchubertLattice.enumerate(gamma)
    if len(lat) < 2:
        return ChainStats(1, 1)
    return chain_stats(join_irreducibles(lat))


def verify_remark(gamma: GammaTuple, lat: SchubertLattice | None = None) -> bool:
    """rank = kappa and dist = kappa' on the join-irreducibles of Gamma(X; gamma)."""
    stats = remark_stats(gamma, lat)
    prof = kappa_profile(decompose(gamma))
    return stats.rank == prof.kappa_max and stats.dist == prof.kappa_min


def gorenstein_coherent(gamma: GammaTuple, lat: SchubertLattice | None = None) -> bool | None:
    """is_gorenstein <=> kappa == kappa' <=> all maximal chains have one length.

    ``None`` when the chain enumeration exceeds its limit.
    """
    if lat is None:
        lat = SchubertLattice.enumerate(gamma)
    dec = decompose(gamma)
    prof = kappa_profile(dec)
    lengths = maximal_chain_lengths(join_irreducibles(lat))
    if lengths is None:
        return None
    g = is_gorenstein(dec)
    return g == (prof.kappa_max == prof.kappa_min) == (len(lengths) == 1)

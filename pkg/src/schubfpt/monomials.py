"""Standard monomials as multichains of Gamma(X; gamma).

A standard monomial ``xi_1 ... xi_u`` is a weakly increasing sequence of
lattice elements.  Membership in ``J_0^{u_0} cap ... cap J_t^{u_t}`` is the
factor count: at least ``u_i`` factors in ``Omega_i`` for each ``i``.
Coefficients and straightening relations never enter.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .errors import BudgetExceededError
from .lattice import SchubertLattice, leq
from .tuples import GammaTuple, Point, decompose, kappa_profile

DEFAULT_MAX_MULTICHAINS = 10**7

Multichain = tuple[Point, ...]
PowerSpec = tuple[int, ...]


def is_multichain(mc: Sequence[Point], lat: SchubertLattice) -> bool:
    return all(x in lat for x in mc) and all(leq(x, y) for x, y in zip(mc, mc[1:]))


def _check_spec(spec: Sequence[int], lat: SchubertLattice) -> None:
    if len(spec) != lat.t + 1:
        raise ValueError(f"power spec has {len(spec)} exponents, lattice has t+1 = {lat.t + 1}")
    if any(u < 0 for u in spec):
        raise ValueError(f"exponents must be non-negative: {tuple(spec)}")


def membership(mc: Sequence[Point], spec: Sequence[int], lat: SchubertLattice) -> bool:
    _check_spec(spec, lat)
    return all(
        sum(1 for x in mc if x in om) >= u for om, u in zip(lat.omega_sets, spec)
    )


def _above(lat: SchubertLattice) -> dict[Point, list[Point]]:
    return {x: [y for y in lat.elements if leq(x, y)] for x in lat.elements}


def generators(
    spec: Sequence[int], lat: SchubertLattice, max_count: int = DEFAULT_MAX_MULTICHAINS
) -> set[Multichain]:
    """Length-``max(spec)`` multichains whose first ``u_i`` factors lie in Omega_i."""
    _check_spec(spec, lat)
    u = max(spec, default=0)
    omegas = lat.omega_sets
    # position k must sit in every Omega_i with u_i > k
    allowed = []
    for k in range(u):
        ok = set(lat.elements)
        for om, ui in zip(omegas, spec):
            if ui > k:
                ok &= om
        allowed.append(ok)
    above = _above(lat)
    out: set[Multichain] = set()
    prefix: list[Point] = []

    def walk(k: int, candidates: list[Point]):
        if k == u:
            if len(out) >= max_count:
                raise BudgetExceededError("multichain count", max_count)
            out.add(tuple(prefix))
            return
        for x in candidates:
            if x in allowed[k]:
                prefix.append(x)
                walk(k + 1, above[x])
                prefix.pop()

    walk(0, lat.elements)
    return out


def multichains(lat: SchubertLattice, length: int, max_count: int = DEFAULT_MAX_MULTICHAINS) -> Iterator[Multichain]:
    """Every weakly increasing sequence of ``length`` lattice elements."""
    above = _above(lat)
    count = 0
    prefix: list[Point] = []

    def walk(candidates):
        nonlocal count
        if len(prefix) == length:
            count += 1
            if count > max_count:
                raise BudgetExceededError("multichain count", max_count)
            yield tuple(prefix)
            return
        for x in candidates:
            prefix.append(x)
            yield from walk(above[x])
            prefix.pop()

    yield from walk(lat.elements)


def has_member_of_length(spec: Sequence[int], lat: SchubertLattice, length: int) -> bool:
    """Depth-first search for a length-``length`` multichain satisfying the
    factor count, pruning branches that can no longer meet some ``u_i``."""
    _check_spec(spec, lat)
    omegas = lat.omega_sets
    above = _above(lat)

    def walk(k: int, candidates, counts: tuple[int, ...]) -> bool:
        remaining = length - k
        if any(c + remaining < u for c, u in zip(counts, spec)):
            return False
        if remaining == 0:
            return True
        for x in candidates:
            nxt = tuple(c + (x in om) for c, om in zip(counts, omegas))
            if walk(k + 1, above[x], nxt):
                return True
        return False

    return walk(0, lat.elements, (0,) * len(spec))


def min_member_degree(spec: Sequence[int], lat: SchubertLattice) -> int:
    """Smallest length of a multichain satisfying ``membership``."""
    length = 0
    while not has_member_of_length(spec, lat, length):
        length += 1
    return length


def min_generation_degree(spec: Sequence[int], lat: SchubertLattice) -> int:
    """``max(spec)``, confirmed by search: nothing shorter is a member and the
    constant multichain at gamma has that length."""
    u = max(spec, default=0)
    found = min_member_degree(spec, lat)
    if found != u:
        raise AssertionError(f"minimal member degree {found} differs from max exponent {u}")
    return u


def canonical_spec(gamma: GammaTuple) -> PowerSpec:
    return kappa_profile(decompose(gamma)).kappas


def anticanonical_shifted_spec(gamma: GammaTuple, m: int) -> PowerSpec:
    """Exponents ``m * (kappa - kappa_i)`` of ``gamma^(m kappa) omega^(-m)``."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    prof = kappa_profile(decompose(gamma))
    return tuple(m * (prof.kappa_max - k) for k in prof.kappas)

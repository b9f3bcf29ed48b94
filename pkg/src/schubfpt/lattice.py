"""The distributive lattice Gamma(X; gamma) = {delta : delta >= gamma}.

Elements are stored as plain integer tuples ("points"); the owning lattice
carries ``n``.  Order is componentwise, join is componentwise max and meet
is componentwise min.
"""

from __future__ import annotations

import random
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import BudgetExceededError
from .tuples import GammaTuple, Point, decompose, upper_neighbors

DEFAULT_MAX_ELEMENTS = 10**6
DEFAULT_MAX_TRIPLES = 10**7
RELATIONAL_COVER_LIMIT = 10**4


def leq(x: Sequence[int], y: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(x, y))


def join(x: Sequence[int], y: Sequence[int]) -> Point:
    return tuple(map(max, x, y))


def meet(x: Sequence[int], y: Sequence[int]) -> Point:
    return tuple(map(min, x, y))


def increment_covers(x: Point, n: int) -> list[Point]:
    """Tuples obtained by adding 1 to a single entry and staying valid."""
    d = len(x)
    out = []
    for j in range(d):
        bound = x[j + 1] if j + 1 < d else n + 1
        if x[j] + 1 < bound:
            out.append(x[:j] + (x[j] + 1,) + x[j + 1 :])
    return out


def _upper_set(gamma: Point, n: int, limit: int) -> list[Point]:
    d = len(gamma)
    out: list[Point] = []
    prefix: list[int] = []

    def extend(j: int):
        if j == d:
            if len(out) >= limit:
                raise BudgetExceededError("lattice element count", limit)
            out.append(tuple(prefix))
            return
        lo = max(gamma[j], prefix[-1] + 1 if prefix else 1)
        for v in range(lo, n - (d - 1 - j) + 1):
            prefix.append(v)
            extend(j + 1)
            prefix.pop()

    extend(0)
    return out


class SchubertLattice:
    """All tuples above ``gamma`` with their cover structure and Omega sets.

    Build with :meth:`enumerate`; the instance is not mutated afterwards.
    """

    def __init__(self, gamma: GammaTuple, elements: list[Point]):
        self.gamma = gamma
        self.n = gamma.n
        self.d = gamma.d
        self.elements = elements
        self.index = {x: i for i, x in enumerate(elements)}
        self.bottom = gamma.entries
        self.top = GammaTuple.top(self.d, self.n).entries
        self.zetas: list[Point] = [z.entries for z in upper_neighbors(gamma)] if not gamma.is_top else []
        self.t = len(self.zetas) - 1

    @classmethod
    def enumerate(cls, gamma: GammaTuple, max_elements: int = DEFAULT_MAX_ELEMENTS) -> "SchubertLattice":
        return cls(gamma, _upper_set(gamma.entries, gamma.n, max_elements))

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x) -> bool:
        return tuple(x) in self.index

    def __iter__(self):
        return iter(self.elements)

    def covers(self, x: Sequence[int]) -> list[Point]:
        return increment_covers(tuple(x), self.n)

    @cached_property
    def cover_edges(self) -> list[tuple[int, int]]:
        """Index pairs ``(i, j)`` with ``elements[i]`` covered by ``elements[j]``."""
        idx = self.index
        return sorted((i, idx[y]) for i, x in enumerate(self.elements) for y in self.covers(x))

    @cached_property
    def lower_covers(self) -> dict[Point, list[Point]]:
        out: dict[Point, list[Point]] = {x: [] for x in self.elements}
        for x in self.elements:
            for y in self.covers(x):
                out[y].append(x)
        return out

    def covers_relational(self, x: Sequence[int]) -> list[Point]:
        """Covers of ``x`` straight from the definition: no element strictly between."""
        x = tuple(x)
        above = [y for y in self.elements if y != x and leq(x, y)]
        return [y for y in above if not any(z != y and leq(z, y) for z in above)]

    @cached_property
    def omega_sets(self) -> list[frozenset[Point]]:
        return [frozenset(x for x in self.elements if not leq(z, x)) for z in self.zetas]

    def omega_set(self, i: int) -> frozenset[Point]:
        if not 0 <= i <= self.t:
            raise IndexError(f"Omega index {i} outside 0..{self.t}")
        return self.omega_sets[i]


def principal_chain(lat: SchubertLattice) -> list[Point]:
    """Start at the minimum; each next element is the join of all covers of the last."""
    chain = [lat.bottom]
    while chain[-1] != lat.top:
        covers = lat.covers(chain[-1])
        nxt = covers[0]
        for y in covers[1:]:
            nxt = join(nxt, y)
        chain.append(nxt)
    return chain


def principal_chain_direct(gamma: GammaTuple) -> list[Point]:
    """Same chain without the lattice: bump the last entry of blocks 0..t_i."""
    xi = gamma
    chain = [xi.entries]
    while not xi.is_top:
        dec = decompose(xi)
        entries = list(xi.entries)
        last = -1
        for block in dec.blocks[: dec.t + 1]:
            last += len(block)
            entries[last] += 1
        xi = xi.replace(entries)
        chain.append(xi.entries)
    return chain


# structural checks; each returns a list of failure messages (empty on success)


def check_upward_closed(lat: SchubertLattice) -> list[str]:
    """Every valid single-entry increment of an element is again an element.

    Increments generate the componentwise order on strictly increasing tuples,
    so this is equivalent to upward closure.
    """
    return [
        f"{y} above {x} missing"
        for x in lat.elements
        for y in increment_covers(x, lat.n)
        if y not in lat.index
    ]


def check_upward_closed_bruteforce(lat: SchubertLattice, universe: Iterable[Point]) -> list[str]:
    elements = set(lat.elements)
    return [f"{y} >= gamma missing" for y in universe if leq(lat.bottom, y) and y not in elements]


def _codes(points: np.ndarray, n: int) -> np.ndarray:
    # base-(n+1) digits, most significant first, so codes sort lexicographically
    weights = (n + 1) ** np.arange(points.shape[-1] - 1, -1, -1, dtype=np.int64)
    return points @ weights


def operation_tables(lat: SchubertLattice) -> tuple[np.ndarray, np.ndarray, list[str]]:
    """Index tables ``J[i, j]`` and ``M[i, j]`` of join and meet.

    Entries whose join or meet falls outside the lattice are reported in the
    returned message list and set to -1.
    """
    pts = np.array(lat.elements, dtype=np.int64)
    codes = _codes(pts, lat.n)
    errs = []
    tables = []
    for op, name in ((np.maximum, "join"), (np.minimum, "meet")):
        c = _codes(op(pts[:, None, :], pts[None, :, :]), lat.n)
        pos = np.clip(np.searchsorted(codes, c), 0, len(codes) - 1)
        found = codes[pos] == c
        for i, j in zip(*np.nonzero(~found)):
            errs.append(f"{name} of {lat.elements[i]},{lat.elements[j]} lies outside the lattice")
        tables.append(np.where(found, pos, -1))
    return tables[0], tables[1], errs


def check_lattice_closed(
    lat: SchubertLattice, max_pairs: int = DEFAULT_MAX_TRIPLES, samples: int = 20000, seed: int = 0
) -> list[str]:
    els = lat.elements
    if len(els) ** 2 <= max_pairs:
        return operation_tables(lat)[2]
    rng = random.Random(seed)
    errs = []
    for _ in range(samples):
        x, y = rng.choice(els), rng.choice(els)
        for z in (join(x, y), meet(x, y)):
            if z not in lat.index:
                errs.append(f"join/meet of {x},{y} gives {z} outside the lattice")
    return errs


def check_distributive(
    lat: SchubertLattice, max_triples: int = DEFAULT_MAX_TRIPLES, samples: int = 20000, seed: int = 0
) -> tuple[list[str], bool]:
    """Distributivity ``x ^ (y v z) == (x ^ y) v (x ^ z)``.

    Exhaustive when ``|L|**3 <= max_triples``, otherwise a seeded random
    sample.  Returns ``(failures, exhaustive)``.
    """
    els = lat.elements
    if len(els) ** 3 > max_triples:
        rng = random.Random(seed)
        triples = ((rng.choice(els), rng.choice(els), rng.choice(els)) for _ in range(samples))
        errs = [
            f"distributivity fails at {x},{y},{z}"
            for x, y, z in triples
            if meet(x, join(y, z)) != join(meet(x, y), meet(x, z))
        ]
        return errs, False
    J, M, closure = operation_tables(lat)
    if closure:
        return closure, True
    lhs = M[:, J]  # lhs[x, y, z] = x ^ (y v z)
    rhs = J[M[:, :, None], M[:, None, :]]  # (x ^ y) v (x ^ z)
    bad = np.argwhere(lhs != rhs)
    return [f"distributivity fails at {els[x]},{els[y]},{els[z]}" for x, y, z in bad[:20]], True


def check_cover_rule(lat: SchubertLattice) -> list[str] | None:
    """Increment-rule covers against the relational definition; ``None`` if the
    lattice is above the relational-check limit."""
    if len(lat) > RELATIONAL_COVER_LIMIT:
        return None
    return [
        f"covers of {x} disagree"
        for x in lat.elements
        if sorted(lat.covers(x)) != sorted(lat.covers_relational(x))
    ]


def check_omega(lat: SchubertLattice) -> list[str]:
    errs = []
    omegas = lat.omega_sets
    for i, om in enumerate(omegas):
        if lat.bottom not in om:
            errs.append(f"gamma not in Omega_{i}")
        for x in om:
            if any(y not in om for y in lat.lower_covers[x]):
                errs.append(f"Omega_{i} not downward closed at {x}")
    if len(set(omegas)) != len(omegas):
        errs.append("Omega sets are not pairwise distinct")
    if omegas and frozenset.intersection(*omegas) != {lat.bottom}:
        errs.append("intersection of the Omega sets is not {gamma}")
    return errs

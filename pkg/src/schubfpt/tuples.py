"""Tuples of Gamma(X), their block/gap decomposition and the closed formulas.

A tuple ``[a_1, ..., a_d]`` with ``1 <= a_1 < ... < a_d <= n`` indexes a
maximal minor of a generic ``d x n`` matrix.  Everything here is a pure
function of the tuple; lattice-level objects live in :mod:`schubfpt.lattice`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import BottomTupleError, DegenerateTopTupleError, InvalidTupleError

Point = tuple[int, ...]


@dataclass(frozen=True)
class GammaTuple:
    entries: Point
    n: int

    def __post_init__(self):
        entries = tuple(int(a) for a in self.entries)
        object.__setattr__(self, "entries", entries)
        validate_entries(entries, self.n)

    @classmethod
    def top(cls, d: int, n: int) -> "GammaTuple":
        return cls(tuple(range(n - d + 1, n + 1)), n)

    @classmethod
    def bottom(cls, d: int, n: int) -> "GammaTuple":
        return cls(tuple(range(1, d + 1)), n)

    @classmethod
    def parse(cls, text: str, d: int | None = None, n: int | None = None) -> "GammaTuple":
        """Parse ``"2,3,4,6,8,9"``; ``d`` (if given) must match the entry count."""
        parts = [p for p in text.replace("[", "").replace("]", "").split(",") if p.strip()]
        try:
            entries = tuple(int(p) for p in parts)
        except ValueError as exc:
            raise InvalidTupleError(f"cannot parse tuple {text!r}") from exc
        if d is not None and len(entries) != d:
            raise InvalidTupleError(f"expected {d} entries, got {len(entries)} in {text!r}")
        if n is None:
            raise InvalidTupleError("the ambient bound n is required")
        return cls(entries, n)

    @property
    def d(self) -> int:
        return len(self.entries)

    @property
    def is_top(self) -> bool:
        return self.entries[0] == self.n - self.d + 1

    @property
    def is_bottom(self) -> bool:
        return self.entries[-1] == self.d

    def replace(self, entries: Sequence[int]) -> "GammaTuple":
        return GammaTuple(tuple(entries), self.n)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, j):
        return self.entries[j]

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.entries)) + "]"


def validate_entries(entries: Sequence[int], n: int) -> None:
    if n < 1:
        raise InvalidTupleError(f"n must be positive, got {n}")
    if not entries:
        raise InvalidTupleError("a tuple needs at least one entry")
    if len(entries) > n:
        raise InvalidTupleError(f"d={len(entries)} exceeds n={n}")
    if entries[0] < 1 or entries[-1] > n:
        raise InvalidTupleError(f"entries of {list(entries)} must lie in [1, {n}]")
    for x, y in zip(entries, entries[1:]):
        if x >= y:
            raise InvalidTupleError(f"entries of {list(entries)} are not strictly increasing")


def all_tuples(d: int, n: int) -> Iterator[GammaTuple]:
    """Every element of Gamma(X) for a ``d x n`` matrix, in lexicographic order."""
    from itertools import combinations

    for c in combinations(range(1, n + 1), d):
        yield GammaTuple(c, n)


@dataclass(frozen=True)
class BlockGapDecomposition:
    """Maximal runs of consecutive entries (blocks) and the runs of missing
    integers after each of them (gaps), closed off by ``a_{d+1} = n + 1``."""

    blocks: tuple[Point, ...]
    gaps: tuple[Point, ...]
    n: int

    @property
    def s(self) -> int:
        return len(self.blocks) - 1

    @property
    def t(self) -> int:
        return self.s - 1 if self.blocks[-1][-1] == self.n else self.s

    @property
    def block_sizes(self) -> list[int]:
        return [len(b) for b in self.blocks]

    @property
    def gap_sizes(self) -> list[int]:
        return [len(g) for g in self.gaps]

    def entries(self) -> Point:
        return tuple(a for block in self.blocks for a in block)


def decompose(gamma: GammaTuple) -> BlockGapDecomposition:
    a = gamma.entries
    blocks: list[Point] = []
    run = [a[0]]
    for x in a[1:]:
        if x == run[-1] + 1:
            run.append(x)
        else:
            blocks.append(tuple(run))
            run = [x]
    blocks.append(tuple(run))
    starts = [b[0] for b in blocks[1:]] + [gamma.n + 1]
    gaps = tuple(tuple(range(b[-1] + 1, nxt)) for b, nxt in zip(blocks, starts))
    return BlockGapDecomposition(tuple(blocks), gaps, gamma.n)


@dataclass(frozen=True)
class KappaProfile:
    kappas: tuple[int, ...]

    @property
    def kappa_max(self) -> int:
        return max(self.kappas)

    @property
    def kappa_min(self) -> int:
        return min(self.kappas)


def kappa_profile(dec: BlockGapDecomposition) -> KappaProfile:
    """kappa_i = |b_0| + ... + |b_i| + |g_i| + ... + |g_t| for 0 <= i <= t."""
    t = dec.t
    if t < 0:
        raise DegenerateTopTupleError(
            "gamma = [n-d+1, ..., n] has no kappa profile; use fpt/neg_a_invariant"
        )
    bs, gs = dec.block_sizes, dec.gap_sizes
    return KappaProfile(tuple(sum(bs[: i + 1]) + sum(gs[i : t + 1]) for i in range(t + 1)))


def fpt(gamma: GammaTuple) -> int:
    """F-pure threshold of the irrelevant ideal of the Schubert cycle."""
    if gamma.is_top:
        return 1
    return kappa_profile(decompose(gamma)).kappa_min


def neg_a_invariant(gamma: GammaTuple) -> int:
    """Minus the a-invariant of the Schubert cycle."""
    if gamma.is_top:
        return 1
    return kappa_profile(decompose(gamma)).kappa_max


def twist(a: GammaTuple) -> GammaTuple:
    n = a.n
    return GammaTuple(tuple(n - x + 1 for x in reversed(a.entries)), n)


def m_value_at(a: Sequence[int], j: int) -> int:
    """``a_j - 2j`` with 1-based ``j``."""
    return a[j - 1] - 2 * j


def m_value(a: GammaTuple | Sequence[int]) -> int:
    entries = tuple(a)
    values = [m_value_at(entries, j) for j in range(1, len(entries) + 1) if entries[j - 1] > j]
    if not values:
        raise BottomTupleError("m(a) is undefined for a = [1, ..., d]")
    return max(values)


def upper_neighbors(gamma: GammaTuple) -> list[GammaTuple]:
    """zeta_0, ..., zeta_t: bump the last entry of each of the first t+1 blocks."""
    dec = decompose(gamma)
    out = []
    last = -1
    for i, block in enumerate(dec.blocks):
        last += len(block)
        if i > dec.t:
            break
        entries = list(gamma.entries)
        entries[last] += 1
        out.append(gamma.replace(entries))
    return out


def is_gorenstein(dec: BlockGapDecomposition) -> bool:
    return all(dec.gap_sizes[i - 1] == dec.block_sizes[i] for i in range(1, dec.t + 1))


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


def nu_e_predicted(gamma: GammaTuple, p: int, e: int) -> int:
    """kappa' * (p**e - 1).  Python integers do not wrap, so large p**e is exact."""
    if not _is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if e < 1:
        raise ValueError(f"e must be positive, got {e}")
    kmin = kappa_profile(decompose(gamma)).kappa_min
    return kmin * (p**e - 1)

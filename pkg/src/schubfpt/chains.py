"""The decrement chain (Algorithm 2), its length tau, and the twist duality
with the principal chain."""

from __future__ import annotations

from typing import Sequence

from .errors import BottomTupleError
from .lattice import SchubertLattice, principal_chain
from .tuples import GammaTuple, Point, m_value, twist


def algorithm2_step(a: Sequence[int]) -> Point:
    """Lower every entry that has room below it, all at once.

    Works on any strictly increasing tuple of positive integers; no upper
    bound is involved.
    """
    a = tuple(a)
    d = len(a)
    if a == tuple(range(1, d + 1)):
        raise BottomTupleError("[1, ..., d] is the end of the decrement chain")
    return tuple(
        x - 1 if (j == 0 and x > 1) or (j > 0 and x > a[j - 1] + 1) else x
        for j, x in enumerate(a)
    )


def decrement_chain(a: Sequence[int]) -> list[Point]:
    a = tuple(a)
    bottom = tuple(range(1, len(a) + 1))
    chain = [a]
    while chain[-1] != bottom:
        chain.append(algorithm2_step(chain[-1]))
    return chain


def tau(a: Sequence[int]) -> int:
    """Number of tuples in the decrement chain, both ends included."""
    return len(decrement_chain(a))


def verify_tau_formula(a: GammaTuple | Sequence[int]) -> bool:
    return tau(a) == m_value(a) + len(tuple(a)) + 1


def verify_twist_duality(gamma: GammaTuple, lat: SchubertLattice | None = None) -> bool:
    if lat is None:
        lat = SchubertLattice.enumerate(gamma)
    n = gamma.n
    twisted = [tuple(n - x + 1 for x in reversed(xi)) for xi in principal_chain(lat)]
    return decrement_chain(twist(gamma).entries) == twisted


def proof_case(a: Sequence[int]) -> str:
    """Which case of the inductive tau argument ``a`` falls in.

    ``r1`` is the first 1-based position with ``a_j > j``.  Returns ``"base"``
    for ``[1, ..., d-1, d+1]`` and ``"case1"``/``"case2"``/``"case3"`` otherwise.
    """
    a = tuple(a)
    d = len(a)
    r1 = next((j for j in range(1, d + 1) if a[j - 1] > j), None)
    if r1 is None:
        raise BottomTupleError("[1, ..., d] has no proof case")
    if a == tuple(range(1, d)) + (d + 1,):
        return "base"
    if a[r1 - 1] > r1 + 1:
        return "case1"
    # a_{r1} = r1 + 1 and r1 < d here, otherwise a would be the base tuple
    return "case2" if a[r1] == r1 + 2 else "case3"

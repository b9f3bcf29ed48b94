"""Exhaustive sweeps: run every invariant check over all tuples with n <= N.

A check returns a :class:`CheckOutcome` per tuple.  Budget overruns become
``"skip"`` outcomes and are never counted as passes.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Iterator

from .birkhoff import check_round_trip, gorenstein_coherent, remark_stats
from .chains import decrement_chain, proof_case, tau, verify_tau_formula
from .config import Settings
from .errors import BudgetExceededError
from .lattice import (
    SchubertLattice,
    check_cover_rule,
    check_distributive,
    check_lattice_closed,
    check_omega,
    check_upward_closed,
    check_upward_closed_bruteforce,
    increment_covers,
    leq,
    principal_chain,
    principal_chain_direct,
)
from .monomials import (
    anticanonical_shifted_spec,
    canonical_spec,
    generators,
    membership,
    min_member_degree,
    multichains,
)
from .tuples import (
    GammaTuple,
    all_tuples,
    decompose,
    fpt,
    is_gorenstein,
    kappa_profile,
    m_value,
    m_value_at,
    neg_a_invariant,
    twist,
    upper_neighbors,
)

BRUTE_FORCE_MULTICHAIN_LIMIT = 20000


@dataclass
class CheckOutcome:
    check: str
    gamma: tuple[int, ...]
    n: int
    status: str  # "pass" | "fail" | "skip"
    messages: list[str] = field(default_factory=list)
    tags: list[str] = field(default_factory=list)

    @property
    def sort_key(self):
        return (CHECK_ORDER.index(self.check), self.n, len(self.gamma), self.gamma)


def _outcome(check, gamma, errs, tags=()):
    return CheckOutcome(check, gamma.entries, gamma.n, "fail" if errs else "pass", list(errs), list(tags))


def check_tuple(gamma: GammaTuple, settings: Settings) -> CheckOutcome:
    errs = []
    dec = decompose(gamma)
    a, n = gamma.entries, gamma.n
    if dec.entries() != a:
        errs.append("blocks do not reassemble gamma")
    if sum(dec.block_sizes) + sum(dec.gap_sizes) != n - a[0] + 1:
        errs.append("block and gap sizes do not sum to n - a_1 + 1")
    if any(not g for g in dec.gaps[:-1]):
        errs.append("blocks are not maximal")
    if dec.t != (dec.s - 1 if a[-1] == n else dec.s):
        errs.append("wrong t")
    if twist(twist(gamma)) != gamma:
        errs.append("twist is not an involution")
    tw = twist(gamma)
    for delta in all_tuples(gamma.d, n):
        if leq(a, delta.entries) != leq(twist(delta).entries, tw.entries):
            errs.append(f"twist does not reverse the order at {delta}")
            break
    neighbors = sorted(z.entries for z in upper_neighbors(gamma))
    if neighbors != sorted(increment_covers(a, n)):
        errs.append("upper neighbors differ from the increment covers")
    if len(set(neighbors)) != len(neighbors):
        errs.append("upper neighbors not distinct")
    if not gamma.is_top:
        prof = kappa_profile(dec)
        k = prof.kappas
        for i in range(1, dec.t + 1):
            if k[i - 1] - k[i] != dec.gap_sizes[i - 1] - dec.block_sizes[i]:
                errs.append(f"kappa difference identity fails at i={i}")
        if not prof.kappa_min <= prof.kappa_max:
            errs.append("kappa' > kappa")
        if (prof.kappa_min == prof.kappa_max) != is_gorenstein(dec):
            errs.append("kappa == kappa' disagrees with the Gorenstein test")
    if not gamma.is_bottom:
        errs.extend(_lemma_m_values(a))
    return _outcome("tuple", gamma, errs)


def _lemma_m_values(a) -> list[str]:
    errs = []
    d = len(a)
    for j in range(1, d):
        if j < a[j - 1] == a[j] - 1 and m_value_at(a, j + 1) != m_value_at(a, j) - 1:
            errs.append(f"m(a,{j + 1}) != m(a,{j}) - 1")
    # the maximum is attained at the first entry of a block outside {a_r = r}
    firsts = [j for j in range(1, d + 1) if a[j - 1] > j and (j == 1 or a[j - 2] != a[j - 1] - 1)]
    m = m_value(a)
    if max(m_value_at(a, j) for j in firsts) != m:
        errs.append("m(a) not attained at a block start")
    for j in range(1, d + 1):
        if a[j - 1] > j and j not in firsts and m_value_at(a, j) >= m:
            errs.append(f"m(a,{j}) at a non-initial entry reaches m(a)")
    return errs


def check_tau(gamma: GammaTuple, settings: Settings) -> CheckOutcome:
    if gamma.is_bottom:
        ok = tau(gamma.entries) == 1
        return _outcome("tau", gamma, [] if ok else ["tau([1..d]) != 1"], ["bottom"])
    errs = [] if verify_tau_formula(gamma) else [f"tau={tau(gamma.entries)} but m+d+1={m_value(gamma) + gamma.d + 1}"]
    return _outcome("tau", gamma, errs, [proof_case(gamma.entries)])


def check_chain(gamma: GammaTuple, settings: Settings) -> CheckOutcome:
    errs = []
    lat = SchubertLattice.enumerate(gamma, settings.max_elements)
    chain = principal_chain(lat)
    if chain != principal_chain_direct(gamma):
        errs.append("join-of-covers chain differs from the block-increment chain")
    if len(chain) != neg_a_invariant(gamma):
        errs.append(f"chain length {len(chain)} != -a = {neg_a_invariant(gamma)}")
    n = gamma.n
    twisted = [tuple(n - x + 1 for x in reversed(xi)) for xi in chain]
    if decrement_chain(twist(gamma).entries) != twisted:
        errs.append("decrement chain of the twist is not the twisted principal chain")
    if any(not leq(x, y) or x == y for x, y in zip(chain, chain[1:])):
        errs.append("principal chain not strictly increasing")
    return _outcome("chain", gamma, errs)


def check_lattice(gamma: GammaTuple, settings: Settings) -> CheckOutcome:
    lat = SchubertLattice.enumerate(gamma, settings.max_elements)
    errs = check_upward_closed(lat)
    errs += check_upward_closed_bruteforce(lat, (x.entries for x in all_tuples(gamma.d, gamma.n)))
    errs += check_lattice_closed(lat)
    dist_errs, exhaustive = check_distributive(lat, settings.max_triples)
    errs += dist_errs
    tags = ["distributive:exhaustive" if exhaustive else "distributive:sampled"]
    cover_errs = check_cover_rule(lat)
    if cover_errs is None:
        tags.append("covers:rule-only")
    else:
        errs += cover_errs
    errs += check_omega(lat)
    if sorted(lat.covers(lat.bottom)) != sorted(z.entries for z in upper_neighbors(gamma)):
        errs.append("covers of gamma differ from its upper neighbors")
    return _outcome("lattice", gamma, errs, tags)


def check_birkhoff(gamma: GammaTuple, settings: Settings) -> CheckOutcome:
    lat = SchubertLattice.enumerate(gamma, settings.max_elements)
    errs = check_round_trip(lat, settings.max_ideals)
    stats = remark_stats(gamma, lat)
    if stats.dist != fpt(gamma):
        errs.append(f"dist={stats.dist} != fpt={fpt(gamma)}")
    if stats.rank != neg_a_invariant(gamma):
        errs.append(f"rank={stats.rank} != -a={neg_a_invariant(gamma)}")
    tags = []
    if not gamma.is_top:
        coherent = gorenstein_coherent(gamma, lat)
        if coherent is None:
            tags.append("gorenstein:chain-limit")
        elif not coherent:
            errs.append("Gorenstein test, kappa == kappa' and gradedness disagree")
    return _outcome("birkhoff", gamma, errs, tags)


def check_monomials(gamma: GammaTuple, settings: Settings) -> CheckOutcome:
    if gamma.is_top:
        return CheckOutcome("monomials", gamma.entries, gamma.n, "pass", [], ["top"])
    lat = SchubertLattice.enumerate(gamma, settings.max_elements)
    errs = []
    prof = kappa_profile(decompose(gamma))
    canon = canonical_spec(gamma)
    if min_member_degree(canon, lat) != prof.kappa_max:
        errs.append("canonical spec: minimal member degree != kappa")
    for m in (1, 2, 3):
        shifted = anticanonical_shifted_spec(gamma, m)
        if min_member_degree(shifted, lat) != m * (prof.kappa_max - prof.kappa_min):
            errs.append(f"shifted anticanonical spec, m={m}: minimal degree != m(kappa - kappa')")
    ones = (1,) * (lat.t + 1)
    if generators(ones, lat, settings.max_multichains) != {(lat.bottom,)}:
        errs.append("generators of (1, ..., 1) is not {(gamma)}")
    tags = []
    for spec in (canon, anticanonical_shifted_spec(gamma, 1)):
        gens = generators(spec, lat, settings.max_multichains)
        u = max(spec)
        if (lat.bottom,) * u not in gens:
            errs.append(f"constant multichain missing from generators of {spec}")
        try:
            brute = {mc for mc in multichains(lat, u, BRUTE_FORCE_MULTICHAIN_LIMIT) if membership(mc, spec, lat)}
        except BudgetExceededError:
            tags.append("generators:brute-force-skipped")
            brute = {mc for mc in gens if membership(mc, spec, lat)}
        if brute != gens:
            errs.append(f"prefix-rule generators of {spec} differ from counted members")
    return _outcome("monomials", gamma, errs, tags)


CHECKS: dict[str, Callable[[GammaTuple, Settings], CheckOutcome]] = {
    "tuple": check_tuple,
    "tau": check_tau,
    "chain": check_chain,
    "lattice": check_lattice,
    "birkhoff": check_birkhoff,
    "monomials": check_monomials,
}
CHECK_ORDER = list(CHECKS)


def sweep_tuples(max_n: int, min_n: int = 1) -> Iterator[GammaTuple]:
    for n in range(min_n, max_n + 1):
        for d in range(1, n + 1):
            for c in combinations(range(1, n + 1), d):
                yield GammaTuple(c, n)


def run_one(task) -> CheckOutcome:
    name, entries, n, settings = task
    gamma = GammaTuple(entries, n)
    try:
        return CHECKS[name](gamma, settings)
    except BudgetExceededError as exc:
        return CheckOutcome(name, gamma.entries, n, "skip", [str(exc)], ["budget"])


def run_checks(names: Iterable[str], max_n: int, settings: Settings) -> list[CheckOutcome]:
    names = list(names)
    for name in names:
        if name not in CHECKS:
            raise ValueError(f"unknown check {name!r}; choose from {', '.join(CHECKS)}")
    tasks = [(name, g.entries, g.n, settings) for name in names for g in sweep_tuples(max_n)]
    if settings.jobs > 1:
        with ProcessPoolExecutor(max_workers=settings.jobs) as pool:
            results = list(pool.map(run_one, tasks, chunksize=32))
    else:
        results = [run_one(t) for t in tasks]
    return sorted(results, key=lambda r: r.sort_key)


def summarize(results: list[CheckOutcome]) -> dict:
    summary: dict = {}
    for r in results:
        entry = summary.setdefault(r.check, {"pass": 0, "fail": 0, "skip": 0, "tags": Counter(), "failures": []})
        entry[r.status] += 1
        entry["tags"].update(r.tags)
        if r.status == "fail":
            entry["failures"].append({"gamma": list(r.gamma), "n": r.n, "messages": r.messages})
    for entry in summary.values():
        entry["tags"] = dict(sorted(entry["tags"].items()))
    return summary

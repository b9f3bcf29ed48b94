"""Deterministic JSON and DOT renderings of lattices, irreducible posets and
invariant reports."""

from __future__ import annotations

import json
from importlib import resources

from . import __version__
from .birkhoff import BOTTOM, TOP, IrreduciblePoset, chain_stats, join_irreducibles, remark_stats
from .chains import tau
from .lattice import SchubertLattice, principal_chain, principal_chain_direct
from .tuples import GammaTuple, decompose, fpt, is_gorenstein, kappa_profile, neg_a_invariant, twist

SCHEMA_VERSION = 1


def load_schema(name: str) -> dict:
    """``name`` is one of ``invariant_report``, ``lattice_export``, ``irreducibles_export``."""
    text = resources.files("schubfpt.schemas").joinpath(f"{name}.schema.json").read_text()
    return json.loads(text)


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _label(x) -> str:
    return x if isinstance(x, str) else "[" + ",".join(map(str, x)) + "]"


def invariant_report(gamma: GammaTuple, oracles: bool = False, max_elements: int | None = None) -> dict:
    dec = decompose(gamma)
    kappas = None if gamma.is_top else list(kappa_profile(dec).kappas)
    chain = principal_chain_direct(gamma)
    report = {
        "schema": "schubfpt/invariant-report",
        "version": SCHEMA_VERSION,
        "tool_version": __version__,
        "gamma": list(gamma.entries),
        "d": gamma.d,
        "n": gamma.n,
        "blocks": [list(b) for b in dec.blocks],
        "gaps": [list(g) for g in dec.gaps],
        "s": dec.s,
        "t": dec.t,
        "kappas": kappas,
        "fpt": fpt(gamma),
        "neg_a": neg_a_invariant(gamma),
        "gorenstein": is_gorenstein(dec),
        "chain_length": len(chain),
    }
    if oracles:
        kwargs = {} if max_elements is None else {"max_elements": max_elements}
        lat = SchubertLattice.enumerate(gamma, **kwargs)
        pc = principal_chain(lat)
        t = tau(twist(gamma).entries)
        stats = remark_stats(gamma, lat)
        report["oracles"] = {
            "lattice_size": len(lat),
            "principal_chain": [list(x) for x in pc],
            "tau_of_twist": t,
            "dist": stats.dist,
            "rank": stats.rank,
            "agreement": {
                "principal_chain_direct": pc == chain,
                "chain_length_neg_a": len(pc) == report["neg_a"],
                "tau_neg_a": t == report["neg_a"],
                "dist_fpt": stats.dist == report["fpt"],
                "rank_neg_a": stats.rank == report["neg_a"],
            },
        }
    return report


def report_table(report: dict) -> str:
    rows = [
        ("gamma", _label(report["gamma"])),
        ("d, n", f"{report['d']}, {report['n']}"),
        ("blocks", " ".join(_label(b) for b in report["blocks"])),
        ("gaps", " ".join(_label(g) for g in report["gaps"])),
        ("s, t", f"{report['s']}, {report['t']}"),
        ("kappas", "-" if report["kappas"] is None else ", ".join(map(str, report["kappas"]))),
        ("fpt", str(report["fpt"])),
        ("-a", str(report["neg_a"])),
        ("gorenstein", str(report["gorenstein"]).lower()),
        ("chain length", str(report["chain_length"])),
    ]
    if "oracles" in report:
        o = report["oracles"]
        rows += [
            ("lattice size", str(o["lattice_size"])),
            ("tau(twist)", str(o["tau_of_twist"])),
            ("dist, rank", f"{o['dist']}, {o['rank']}"),
        ]
        rows += [(f"agree: {k}", str(v).lower()) for k, v in o["agreement"].items()]
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k:<{width}}  {v}" for k, v in rows) + "\n"


def lattice_json(lat: SchubertLattice) -> dict:
    idx = lat.index
    return {
        "schema": "schubfpt/lattice-export",
        "version": SCHEMA_VERSION,
        "tool_version": __version__,
        "gamma": list(lat.bottom),
        "d": lat.d,
        "n": lat.n,
        "elements": [list(x) for x in lat.elements],
        "cover_edges": [list(e) for e in lat.cover_edges],
        "upper_neighbors": [list(z) for z in lat.zetas],
        "omega": ["".join("1" if x in om else "0" for x in lat.elements) for om in lat.omega_sets],
        "principal_chain": [idx[x] for x in principal_chain(lat)],
    }


def lattice_dot(lat: SchubertLattice) -> str:
    chain = principal_chain(lat)
    on_chain = set(chain)
    chain_edges = set(zip(chain, chain[1:]))
    lines = [f'digraph "Gamma({lat.d},{lat.n};{_label(lat.bottom)})" {{', "  rankdir=BT;", "  node [shape=box];"]
    for i, x in enumerate(lat.elements):
        style = ' color=red penwidth=2' if x in on_chain else ""
        lines.append(f'  n{i} [label="{_label(x)}"{style}];')
    for i, j in lat.cover_edges:
        x, y = lat.elements[i], lat.elements[j]
        style = " [color=red penwidth=2]" if (x, y) in chain_edges else ""
        lines.append(f"  n{i} -> n{j}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _augmented_edges(P: IrreduciblePoset) -> list[tuple]:
    cov = P.augmented_covers
    nodes = [BOTTOM, *sorted(P.elements), TOP]
    return [(x, y) for x in nodes for y in sorted(cov.get(x, []), key=lambda v: (v == TOP, v))]


def _node_id(P_index: dict, x):
    return x if isinstance(x, str) else P_index[x]


def irreducibles_json(lat: SchubertLattice) -> dict:
    P = join_irreducibles(lat)
    index = {x: i for i, x in enumerate(P.elements)}
    stats = chain_stats(P)
    return {
        "schema": "schubfpt/irreducibles-export",
        "version": SCHEMA_VERSION,
        "tool_version": __version__,
        "gamma": list(lat.bottom),
        "d": lat.d,
        "n": lat.n,
        "elements": [list(x) for x in P.elements],
        "cover_edges": [[_node_id(index, x), _node_id(index, y)] for x, y in _augmented_edges(P)],
        "dist": stats.dist,
        "rank": stats.rank,
    }


def irreducibles_dot(lat: SchubertLattice) -> str:
    P = join_irreducibles(lat)
    index = {x: i for i, x in enumerate(P.elements)}

    def node(x):
        return {BOTTOM: "bot", TOP: "top"}.get(x) if isinstance(x, str) else f"p{index[x]}"

    lines = [f'digraph "P({lat.d},{lat.n};{_label(lat.bottom)})" {{', "  rankdir=BT;", "  node [shape=box];"]
    lines.append('  bot [label="-inf" shape=plaintext];')
    for x in P.elements:
        lines.append(f'  p{index[x]} [label="{_label(x)}"];')
    lines.append('  top [label="inf" shape=plaintext];')
    for x, y in _augmented_edges(P):
        lines.append(f"  {node(x)} -> {node(y)};")
    lines.append("}")
    return "\n".join(lines) + "\n"

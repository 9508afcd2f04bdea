"""Exhaustive small-graph enumeration and the bound-verification harness.

`enumerate_connected` yields one representative per isomorphism class of
connected simple graphs of a given order (internally capped at 8), grown by
adding one vertex at a time with canonical-form deduplication at every level.
`verify_theorem` drives `check_bound` + `classify` over a graph stream,
asserting the size bound and the equality characterization for every input
and collecting the extremal census.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Iterable

from .canon import canonical_form, canonical_relabeled
from .graph import Graph, bits_of
from .graph6 import graph6_decode, graph6_encode
from .recognition import BoundViolationError, check_bound

ENUMERATION_MAX_ORDER = 8

_levels: dict[int, list[Graph]] = {}


def _all_graphs(n: int) -> list[Graph]:
    """All simple graphs of order n up to isomorphism (connected or not),
    canonically labeled, sorted by canonical form."""
    cached = _levels.get(n)
    if cached is not None:
        return cached
    if n == 1:
        result = [Graph.from_edges(1, [])]
    else:
        seen: dict[bytes, Graph] = {}
        new = n - 1
        for g in _all_graphs(n - 1):
            base = tuple(g.adjacency_mask(v) for v in range(new))
            for mask in range(1 << new):
                adj = list(base)
                for v in bits_of(mask):
                    adj[v] |= 1 << new
                adj.append(mask)
                h = Graph(n, tuple(adj))
                key = canonical_form(h)
                if key not in seen:
                    seen[key] = canonical_relabeled(h)
        result = [seen[key] for key in sorted(seen)]
    _levels[n] = result
    return result


def enumerate_connected(n: int) -> list[Graph]:
    """One canonically labeled representative per isomorphism class of
    connected graphs of order n, in canonical-form order."""
    if not 1 <= n <= ENUMERATION_MAX_ORDER:
        raise ValueError(
            f"internal enumeration handles 1 <= n <= {ENUMERATION_MAX_ORDER}; "
            "feed larger orders from a graph6 file instead"
        )
    return [g for g in _all_graphs(n) if g.is_connected()]


@dataclass(frozen=True)
class ExtremalEntry:
    """One extremal graph found by the harness."""

    graph6: str  # canonical labeling, so entries are comparable across runs
    n: int
    gamma_t: int
    family: str | None
    k: int | None


@dataclass
class EnumerationSummary:
    """Outcome of a verification run; `violations` must stay empty."""

    examined_by_order: dict[int, int] = field(default_factory=dict)
    extremal: list[ExtremalEntry] = field(default_factory=list)
    violations: list[str] = field(default_factory=list)
    skipped_small: int = 0
    skipped_disconnected: int = 0
    wall_time: float = 0.0

    @property
    def examined(self) -> int:
        return sum(self.examined_by_order.values())

    @property
    def total(self) -> int:
        return self.examined + self.skipped_small + self.skipped_disconnected

    def to_json_dict(self) -> dict:
        # wall_time intentionally omitted: serialized output stays run-to-run identical
        return {
            "examined_by_order": {str(k): v for k, v in sorted(self.examined_by_order.items())},
            "examined": self.examined,
            "skipped_small": self.skipped_small,
            "skipped_disconnected": self.skipped_disconnected,
            "extremal_count": len(self.extremal),
            "extremal": [
                {
                    "graph6": e.graph6,
                    "n": e.n,
                    "gamma_t": e.gamma_t,
                    "family": e.family,
                    "k": e.k,
                }
                for e in self.extremal
            ],
            "violations": list(self.violations),
        }


def _verify_one(g: Graph) -> dict:
    g6 = graph6_encode(canonical_relabeled(g))
    record = {"n": g.n, "g6": g6, "extremal": False, "gamma_t": None,
              "family": None, "k": None, "violation": None}
    try:
        report = check_bound(g)
    except BoundViolationError as exc:
        record["violation"] = f"{g6}: {exc}"
        return record
    record["gamma_t"] = report.gamma_t
    cls = report.classification
    if report.is_extremal != cls.is_member:
        side = "extremal but unrecognized" if report.is_extremal else "recognized but not extremal"
        record["violation"] = f"{g6}: equality characterization failed ({side})"
        return record
    if report.is_extremal:
        record["extremal"] = True
        record["family"] = cls.family
        record["k"] = cls.k
    return record


def _verify_g6(line: str) -> dict:
    return _verify_one(graph6_decode(line))


def verify_theorem(graphs: Iterable[Graph], jobs: int = 1) -> EnumerationSummary:
    """Check the size bound and its equality characterization on every input.

    Inputs must be connected with order >= 3; anything else is counted and
    skipped. Results are merged in canonical-graph6 order, so the summary is
    identical for any job count.
    """
    start = time.perf_counter()
    summary = EnumerationSummary()
    eligible: list[Graph] = []
    for g in graphs:
        if g.n < 3:
            summary.skipped_small += 1
        elif not g.is_connected():
            summary.skipped_disconnected += 1
        else:
            eligible.append(g)

    if jobs > 1 and len(eligible) > 1:
        lines = [graph6_encode(g) for g in eligible]
        with Pool(processes=jobs) as pool:
            records = pool.map(_verify_g6, lines, chunksize=max(1, len(lines) // (jobs * 8)))
    else:
        records = [_verify_one(g) for g in eligible]

    extremal = []
    for rec in records:
        summary.examined_by_order[rec["n"]] = summary.examined_by_order.get(rec["n"], 0) + 1
        if rec["violation"] is not None:
            summary.violations.append(rec["violation"])
        elif rec["extremal"]:
            extremal.append(rec)
    extremal.sort(key=lambda r: (r["n"], r["g6"]))
    summary.extremal = [
        ExtremalEntry(r["g6"], r["n"], r["gamma_t"], r["family"], r["k"]) for r in extremal
    ]
    summary.violations.sort()
    summary.examined_by_order = dict(sorted(summary.examined_by_order.items()))
    summary.wall_time = time.perf_counter() - start
    return summary


def verify_enumerated(max_n: int, jobs: int = 1) -> EnumerationSummary:
    """Run verify_theorem over every connected graph of order 3..max_n."""
    if not 3 <= max_n <= ENUMERATION_MAX_ORDER:
        raise ValueError(f"max_n must be between 3 and {ENUMERATION_MAX_ORDER}")

    def stream():
        for n in range(3, max_n + 1):
            yield from enumerate_connected(n)

    return verify_theorem(stream(), jobs=jobs)

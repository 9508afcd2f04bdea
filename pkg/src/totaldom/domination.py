"""Exact total domination: branch-and-bound solver, brute-force oracle,
the almost-total variant, and the closed path/cycle formula.

A total dominating set (TD-set) is a vertex set S such that every vertex of
the graph, including members of S, has a neighbor in S. An almost total
dominating set (ATD-set) anchored at v contains v, leaves v with no neighbor
in S, and dominates every other vertex.

The solver branches on an undominated vertex with the fewest remaining
dominator options, trying each option in ascending label order; it prunes
with ceil(undominated / max_degree) against the incumbent. Among minimum
sets it always returns the lexicographically smallest witness (by sorted
label sequence), reconstructed with feasibility probes, so outputs are
reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, bits_of

ORACLE_MAX_ORDER = 24


class NoTDSetError(ValueError):
    """The graph has no total dominating set (an isolated vertex exists)."""


class NoATDSetError(ValueError):
    """No almost total dominating set exists for the requested anchor."""


@dataclass(frozen=True)
class TDCertificate:
    """Exact total domination number together with a minimum witness set."""

    value: int
    witness: frozenset[int]


@dataclass(frozen=True)
class ATDCertificate:
    """Exact almost total domination number for an anchor vertex."""

    anchor: int
    value: int
    witness: frozenset[int]


def is_total_dominating(g: Graph, s) -> bool:
    """True iff every vertex of g has a neighbor in s."""
    dominated = 0
    for v in s:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} outside 0..{g.n - 1}")
        dominated |= g.adjacency_mask(v)
    return dominated == (1 << g.n) - 1


def is_almost_total_dominating(g: Graph, anchor: int, s) -> bool:
    """True iff s contains the anchor, no neighbor of it, and dominates all others."""
    smask = 0
    for v in s:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} outside 0..{g.n - 1}")
        smask |= 1 << v
    if not smask >> anchor & 1:
        return False
    if g.adjacency_mask(anchor) & smask:
        return False
    dominated = 0
    rest = smask
    while rest:
        v = (rest & -rest).bit_length() - 1
        rest &= rest - 1
        dominated |= g.adjacency_mask(v)
    others = ((1 << g.n) - 1) & ~(1 << anchor)
    return dominated & others == others


def gamma_t_path_cycle(n: int) -> int:
    """Total domination number of both the path and the cycle on n >= 3 vertices."""
    if n < 3:
        raise ValueError(f"formula requires n >= 3, got {n}")
    return n // 2 + -(-n // 4) - n // 4


# -- search core ------------------------------------------------------------


def _greedy_cover(adj, targets, required, forbidden, n):
    """Greedy extension of `required`; None means the instance is infeasible."""
    chosen = required
    dominated = 0
    rest = required
    while rest:
        v = (rest & -rest).bit_length() - 1
        rest &= rest - 1
        dominated |= adj[v]
    pool = ((1 << n) - 1) & ~forbidden & ~chosen
    undom = targets & ~dominated
    while undom:
        best_gain = 0
        best_v = -1
        rest = pool
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            gain = (adj[v] & undom).bit_count()
            if gain > best_gain:
                best_gain, best_v = gain, v
        if best_gain == 0:
            return None
        chosen |= 1 << best_v
        pool &= ~(1 << best_v)
        dominated |= adj[best_v]
        undom = targets & ~dominated
    return chosen


def _cover_search(adj, delta, targets, required, forbidden, bound, early_stop):
    """DFS for S >= required avoiding forbidden with targets in N(S), |S| < bound.

    Returns (size, mask) of the best (or, with early_stop, the first) solution,
    or None when no solution beats the bound.
    """
    best_size = bound
    best_mask = None

    base_dom = 0
    rest = required
    while rest:
        v = (rest & -rest).bit_length() - 1
        rest &= rest - 1
        base_dom |= adj[v]

    def dfs(chosen, count, dominated, excluded):
        nonlocal best_size, best_mask
        undom = targets & ~dominated
        if not undom:
            best_size = count
            best_mask = chosen
            return early_stop
        need = -(-undom.bit_count() // delta)
        if count + need >= best_size:
            return False
        pick_opts = 0
        pick_cnt = n_big = 1 << 30
        rest = undom
        while rest:
            u = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            opts = adj[u] & ~excluded
            cnt = opts.bit_count()
            if cnt == 0:
                return False
            if cnt < pick_cnt:
                pick_cnt, pick_opts = cnt, opts
                if cnt == 1:
                    break
        local_excl = excluded
        opts = pick_opts
        while opts:
            w = (opts & -opts).bit_length() - 1
            opts &= opts - 1
            if dfs(chosen | (1 << w), count + 1, dominated | adj[w], local_excl):
                return True
            local_excl |= 1 << w
            if count + need >= best_size:
                break
        return False

    dfs(required, required.bit_count(), base_dom, forbidden)
    if best_mask is None:
        return None
    return best_size, best_mask


def _min_cover(adj, delta, targets, required, forbidden, n):
    """Minimum solution size, or None if infeasible."""
    greedy = _greedy_cover(adj, targets, required, forbidden, n)
    if greedy is None:
        return None
    gsize = greedy.bit_count()
    improved = _cover_search(adj, delta, targets, required, forbidden, gsize, False)
    return improved[0] if improved is not None else gsize


def _lex_min_witness(adj, delta, targets, required, forbidden, value, n):
    """Lexicographically least optimal solution, built by feasibility probes."""
    in_mask = required
    out_mask = forbidden
    size = in_mask.bit_count()
    for v in range(n):
        if size == value:
            break
        if (in_mask | out_mask) >> v & 1:
            continue
        trial = in_mask | 1 << v
        if _cover_search(adj, delta, targets, trial, out_mask, value + 1, True) is not None:
            in_mask = trial
            size += 1
        else:
            out_mask |= 1 << v
    dominated = 0
    rest = in_mask
    while rest:
        v = (rest & -rest).bit_length() - 1
        rest &= rest - 1
        dominated |= adj[v]
    if size != value or dominated & targets != targets:
        raise AssertionError("witness reconstruction lost optimality; solver bug")
    return in_mask


def _solve_component(sub: Graph) -> tuple[int, int]:
    adj = tuple(sub.adjacency_mask(v) for v in range(sub.n))
    delta = sub.max_degree()
    full = (1 << sub.n) - 1
    value = _min_cover(adj, delta, full, 0, 0, sub.n)
    witness = _lex_min_witness(adj, delta, full, 0, 0, value, sub.n)
    return value, witness


def gamma_t(g: Graph) -> TDCertificate:
    """Exact total domination number with branch-and-bound.

    Disconnected inputs are solved per component and summed. Raises
    NoTDSetError when an isolated vertex (order-1 component) is present.
    """
    if g.n == 0:
        return TDCertificate(0, frozenset())
    total = 0
    witness: set[int] = set()
    for comp in g.component_masks():
        if comp.bit_count() == 1:
            v = comp.bit_length() - 1
            raise NoTDSetError(f"vertex {v} is isolated; no TD-set exists")
        sub, old = g.induced_subgraph(bits_of(comp))
        value, mask = _solve_component(sub)
        total += value
        witness.update(old[i] for i in bits_of(mask))
    return TDCertificate(total, frozenset(witness))


def gamma_t_oracle(g: Graph) -> TDCertificate:
    """Brute-force reference: subsets by increasing cardinality, lexicographic within.

    Practical for order <= 24 only; larger inputs are refused.
    """
    if g.n > ORACLE_MAX_ORDER:
        raise ValueError(f"oracle is capped at order {ORACLE_MAX_ORDER}, got {g.n}")
    if g.n == 0:
        return TDCertificate(0, frozenset())
    if g.min_degree() == 0:
        raise NoTDSetError("isolated vertex present; no TD-set exists")
    adj = tuple(g.adjacency_mask(v) for v in range(g.n))
    full = (1 << g.n) - 1
    for k in range(1, g.n + 1):
        for combo in combinations(range(g.n), k):
            dominated = 0
            for v in combo:
                dominated |= adj[v]
            if dominated == full:
                return TDCertificate(k, frozenset(combo))
    raise AssertionError("unreachable: V itself is a TD-set when min degree >= 1")


def gamma_t_almost(g: Graph, anchor: int) -> ATDCertificate:
    """Exact almost total domination number for the given anchor vertex.

    Infeasibility (some vertex can only be dominated from the anchor's
    neighborhood) is detected by search exhaustion and raises NoATDSetError.
    """
    if not 0 <= anchor < g.n:
        raise ValueError(f"anchor {anchor} outside 0..{g.n - 1}")
    adj = tuple(g.adjacency_mask(v) for v in range(g.n))
    required = 1 << anchor
    forbidden = adj[anchor]
    targets = ((1 << g.n) - 1) & ~(1 << anchor)
    delta = g.max_degree()
    value = _min_cover(adj, delta, targets, required, forbidden, g.n)
    if value is None:
        raise NoATDSetError(f"no ATD-set exists with respect to vertex {anchor}")
    witness = _lex_min_witness(adj, delta, targets, required, forbidden, value, g.n)
    return ATDCertificate(anchor, value, frozenset(bits_of(witness)))

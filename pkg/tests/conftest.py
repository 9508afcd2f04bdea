"""Shared test helpers: hypothesis graph strategies and brute-force oracles."""

from __future__ import annotations

import itertools

from hypothesis import strategies as st

from totaldom import Graph


@st.composite
def graphs(draw, min_n=1, max_n=9, connected=False, min_degree=0):
    """Random simple graph; optionally retried into connectivity by edge filling."""
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    picked = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    g = Graph.from_edges(n, picked)
    if connected and n > 1:
        # deterministically stitch components together so the draw always yields
        # a connected graph instead of rejecting
        comps = g.components()
        extra = [(min(comps[i]), min(comps[i + 1])) for i in range(len(comps) - 1)]
        g = Graph.from_edges(n, picked + extra)
    if min_degree > 0:
        edges = set(g.edges())
        for v in range(n):
            others = [u for u in range(n) if u != v]
            i = 0
            while g.degree(v) + 0 < min_degree and i < len(others):
                edges.add(tuple(sorted((v, others[i]))))
                i += 1
            g = Graph.from_edges(n, sorted(edges))
    return g


def permutations_iso(g1: Graph, g2: Graph) -> bool:
    """Brute-force isomorphism test by trying every permutation."""
    if g1.n != g2.n or g1.m != g2.m:
        return False
    e2 = set(g2.edges())
    for perm in itertools.permutations(range(g1.n)):
        if all(tuple(sorted((perm[u], perm[v]))) in e2 for u, v in g1.edges()):
            return True
    return False


def brute_force_td_subsets(g: Graph, must_contain=None):
    """All subset sizes: yield (size, frozenset) of every total dominating set."""
    full = (1 << g.n) - 1
    req = set(must_contain or ())
    for k in range(1, g.n + 1):
        for combo in itertools.combinations(range(g.n), k):
            if not req.issubset(combo):
                continue
            dominated = 0
            for v in combo:
                dominated |= g.adjacency_mask(v)
            if dominated == full:
                yield k, frozenset(combo)

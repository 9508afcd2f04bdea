"""Canonical forms and isomorphism via partition refinement with backtracking.

The labeler runs equitable refinement (split cells by neighbor counts against
every cell, sub-cells ordered by their count vectors), then individualizes
vertices of the first non-singleton cell, exploring every choice and keeping
the minimum adjacency code over all discrete partitions reached. Interchangeable
vertices (equal open or closed neighborhoods) are branched only once, which
keeps complete graphs and other twin-heavy inputs linear. Intended for orders
up to ~64; validated against brute-force permutation search on small orders.
"""

from __future__ import annotations

from .graph import Graph, mask_of


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement of an ordered partition; order is structure-determined."""
    while True:
        masks = [mask_of(c) for c in cells]
        new_cells: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            keyed: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                key = tuple((adj[v] & mk).bit_count() for mk in masks)
                keyed.setdefault(key, []).append(v)
            if len(keyed) == 1:
                new_cells.append(cell)
            else:
                changed = True
                for key in sorted(keyed):
                    new_cells.append(keyed[key])
        cells = new_cells
        if not changed:
            return cells


def _code_for(adj: tuple[int, ...], n: int, order: list[int]) -> bytes:
    # order[new] = old; code = n header byte + upper-triangle bits row-major
    acc = 0
    for i in range(n):
        row = adj[order[i]]
        for j in range(i + 1, n):
            acc = (acc << 1) | (row >> order[j] & 1)
    nbits = n * (n - 1) // 2
    return bytes([n]) + acc.to_bytes((nbits + 7) // 8, "big")


def _canonical(g: Graph) -> tuple[bytes, tuple[int, ...]]:
    cached = g._canon
    if cached is not None:
        return cached
    n = g.n
    adj = tuple(g.adjacency_mask(v) for v in range(n))
    if n == 0:
        result = (bytes([0]), ())
        g._canon = result
        return result

    best: list = [None, None]  # code, order

    def recurse(cells: list[list[int]]) -> None:
        for i, cell in enumerate(cells):
            if len(cell) > 1:
                break
        else:
            order = [c[0] for c in cells]
            code = _code_for(adj, n, order)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, order
            return
        target = cells[i]
        seen_open: set[int] = set()
        seen_closed: set[int] = set()
        for v in target:
            open_key = adj[v]
            closed_key = adj[v] | (1 << v)
            skip = open_key in seen_open or closed_key in seen_closed
            seen_open.add(open_key)
            seen_closed.add(closed_key)
            if skip:
                continue
            split = cells[:i] + [[v], [w for w in target if w != v]] + cells[i + 1 :]
            recurse(_refine(adj, split))

    recurse(_refine(adj, [list(range(n))]))
    order = best[1]
    labeling = [0] * n
    for new, old in enumerate(order):
        labeling[old] = new
    result = (best[0], tuple(labeling))
    g._canon = result
    return result


def canonical_form(g: Graph) -> bytes:
    """Total-order key: two graphs have equal keys iff they are isomorphic."""
    return _canonical(g)[0]


def canonical_labeling(g: Graph) -> tuple[int, ...]:
    """Permutation (old -> new) that relabels g onto its canonical representative."""
    return _canonical(g)[1]


def canonical_relabeled(g: Graph) -> Graph:
    """The canonical representative of g's isomorphism class."""
    return g.relabel(canonical_labeling(g))


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.m != g2.m:
        return False
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    return canonical_form(g1) == canonical_form(g2)


def isomorphism_map(g1: Graph, g2: Graph) -> dict[int, int] | None:
    """A vertex bijection g1 -> g2 preserving adjacency, or None."""
    if not are_isomorphic(g1, g2):
        return None
    lab1 = canonical_labeling(g1)
    lab2 = canonical_labeling(g2)
    inv2 = [0] * g2.n
    for old, new in enumerate(lab2):
        inv2[new] = old
    return {v: inv2[lab1[v]] for v in range(g1.n)}

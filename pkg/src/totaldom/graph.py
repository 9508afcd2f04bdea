"""Compact immutable simple graphs with bitset adjacency.

Vertices are dense integer labels 0..n-1. Every derived graph (deletion,
contraction, induced subgraph) relabels densely and hands back the
relabeling map, so callers can carry vertex roles through reductions.
All operations return new graphs; instances are safe to share.
"""

from __future__ import annotations

from typing import Iterable, Iterator

MAX_ORDER = 128


class Graph:
    """Simple undirected graph on vertices 0..n-1, adjacency as per-vertex bitmasks."""

    __slots__ = ("n", "_adj", "_m", "_canon")

    def __init__(self, n: int, adj: tuple[int, ...]):
        # internal constructor: adj must already be symmetric and irreflexive
        self.n = n
        self._adj = adj
        self._m = sum(a.bit_count() for a in adj) // 2
        self._canon = None  # lazily filled by totaldom.canon

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a simple graph; duplicate edges collapse, self-loops are rejected."""
        if n < 0 or n > MAX_ORDER:
            raise ValueError(f"order must be between 0 and {MAX_ORDER}, got {n}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u} is not allowed")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    # -- basic queries ----------------------------------------------------

    @property
    def m(self) -> int:
        """Number of edges."""
        return self._m

    def adjacency_mask(self, v: int) -> int:
        """Neighbors of v as a bitmask."""
        return self._adj[v]

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(a.bit_count() for a in self._adj)

    def max_degree(self) -> int:
        if self.n == 0:
            raise ValueError("max degree of the empty graph is undefined")
        return max(a.bit_count() for a in self._adj)

    def min_degree(self) -> int:
        if self.n == 0:
            raise ValueError("min degree of the empty graph is undefined")
        return min(a.bit_count() for a in self._adj)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        """Sorted list of neighbors of v."""
        return _bits(self._adj[v])

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, sorted."""
        out = []
        for u in range(self.n):
            rest = self._adj[u] >> (u + 1)
            v = u + 1
            while rest:
                if rest & 1:
                    out.append((u, v))
                rest >>= 1
                v += 1
        return out

    # -- derived graphs ---------------------------------------------------

    def with_edge(self, u: int, v: int) -> "Graph":
        """Copy of the graph with edge (u, v) added (no-op if present)."""
        if u == v:
            raise ValueError("self-loop")
        adj = list(self._adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.n, tuple(adj))

    def induced_subgraph(self, keep: Iterable[int]) -> tuple["Graph", list[int]]:
        """Subgraph induced by `keep`, relabeled 0..k-1 in label order.

        Returns (subgraph, old_labels) where old_labels[new] = old.
        """
        old = sorted(set(keep))
        for v in old:
            if not 0 <= v < self.n:
                raise ValueError(f"vertex {v} outside 0..{self.n - 1}")
        pos = {v: i for i, v in enumerate(old)}
        adj = [0] * len(old)
        for i, v in enumerate(old):
            rest = self._adj[v]
            while rest:
                w = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                j = pos.get(w)
                if j is not None:
                    adj[i] |= 1 << j
        return Graph(len(old), tuple(adj)), old

    def delete_vertices(self, drop: Iterable[int]) -> tuple["Graph", dict[int, int]]:
        """Graph minus `drop`, survivors relabeled densely in original order.

        Returns (graph, mapping) with mapping[old] = new for every survivor.
        """
        dropset = set(drop)
        for v in dropset:
            if not 0 <= v < self.n:
                raise ValueError(f"vertex {v} outside 0..{self.n - 1}")
        sub, old_labels = self.induced_subgraph(v for v in range(self.n) if v not in dropset)
        return sub, {old: new for new, old in enumerate(old_labels)}

    def contract(self, x: int, y: int) -> tuple["Graph", dict[int, int]]:
        """Merge x and y into one vertex adjacent to the union of their neighborhoods.

        Any x-y edge is discarded and parallel edges collapse, so the result is
        simple and has order n-1. The merged vertex sits at min(x, y)'s slot.
        Returns (graph, mapping) where mapping is total: mapping[x] == mapping[y]
        is the merged vertex's new label.
        """
        if x == y:
            raise ValueError("cannot contract a vertex with itself")
        if not (0 <= x < self.n and 0 <= y < self.n):
            raise ValueError("contract endpoints outside vertex range")
        lo, hi = (x, y) if x < y else (y, x)
        mapping = {}
        for v in range(self.n):
            if v == hi:
                continue
            mapping[v] = v if v < hi else v - 1
        merged = mapping[lo]
        mapping[hi] = merged
        n2 = self.n - 1
        adj = [0] * n2
        union = (self._adj[x] | self._adj[y]) & ~(1 << x) & ~(1 << y)
        for v in range(self.n):
            if v in (x, y):
                continue
            nv = mapping[v]
            rest = self._adj[v] & ~(1 << x) & ~(1 << y)
            while rest:
                w = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                adj[nv] |= 1 << mapping[w]
        rest = union
        while rest:
            w = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            adj[merged] |= 1 << mapping[w]
            adj[mapping[w]] |= 1 << merged
        return Graph(n2, tuple(adj)), mapping

    def relabel(self, perm: Iterable[int]) -> "Graph":
        """Apply a permutation (perm[old] = new) to the vertex labels."""
        perm = list(perm)
        if sorted(perm) != list(range(self.n)):
            raise ValueError("not a permutation of the vertex labels")
        adj = [0] * self.n
        for v in range(self.n):
            nv = perm[v]
            rest = self._adj[v]
            while rest:
                w = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                adj[nv] |= 1 << perm[w]
        return Graph(self.n, tuple(adj))

    # -- connectivity -----------------------------------------------------

    def component_masks(self) -> list[int]:
        """Vertex sets of the connected components, as bitmasks, by least member."""
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = 1 << s
            frontier = 1 << s
            while frontier:
                nxt = 0
                rest = frontier
                while rest:
                    v = (rest & -rest).bit_length() - 1
                    rest &= rest - 1
                    nxt |= self._adj[v]
                frontier = nxt & ~comp
                comp |= nxt
            comps.append(comp)
            seen |= comp
        return comps

    def components(self) -> list[frozenset[int]]:
        """Connected components as vertex sets, ordered by least member."""
        return [frozenset(_bits(mask)) for mask in self.component_masks()]

    def is_connected(self) -> bool:
        """True iff the graph has exactly one component (requires n >= 1)."""
        if self.n == 0:
            raise ValueError("connectivity of the empty graph is undefined")
        return len(self.component_masks()) == 1

    # -- value semantics ----------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self._m})"


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return out


def bits_of(mask: int) -> Iterator[int]:
    """Iterate the set bit positions of a mask in ascending order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def mask_of(vertices: Iterable[int]) -> int:
    """Bitmask of a vertex collection."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m

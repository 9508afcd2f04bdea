"""Constructors for the extremal graph families, with vertex role labelings.

Families and their tags:

  G       cubic ladder-like graphs on 4k vertices: two alternating paths
          a1 b1 ... ak bk and c1 d1 ... ck dk, rungs ai-di and bi-ci, closed
          by a1-c1 and bk-dk. G with k=1 is the complete graph K4.
  H       variant of G (k >= 2): the closing edges a1-c1, bk-dk are swapped
          for a1-bk and c1-dk.
  GP16    the generalized Petersen graph GP(8,3) on 16 vertices (outer
          8-cycle, spokes, inner step-3 connections).
  F       F with k=0 is the triangle; for k >= 1 it is G_k with the edge
          a1-c1 subdivided three times (new vertices v1, v2, v3).
  L       L with k=0 is the 6-cycle; for k >= 1 it is F_k with the edge
          bk-dk also subdivided three times (new vertices u1, u2, u3).
  corona  the 2-corona: every vertex of a host graph gets its own pendant
          path of two new vertices (mid, leaf).

Vertex numbering is canonical per family so roles can be found by arithmetic:
G/H lay out a1..ak, b1..bk, c1..ck, d1..dk as labels 0..4k-1 in that order;
F/L append subdivision vertices after those. Role tags mirror this ("a1",
"b3", "v2", "u1", "hub2", "mid2", "leaf2").
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph


@dataclass(frozen=True)
class FamilyMember:
    """A generated family member: the graph plus its role labeling."""

    graph: Graph
    family: str
    k: int | None
    roles: dict[int, str]

    def vertex(self, role: str) -> int:
        """Label of the vertex carrying `role` (e.g. 'a1', 'v2', 'leaf3')."""
        for v, tag in self.roles.items():
            if tag == role:
                return v
        raise KeyError(f"no vertex with role {role!r}")


def _ladder_parts(k: int) -> tuple[list[tuple[int, int]], dict[int, str]]:
    """Shared core of G/H: both paths and all rungs, no closing edges.

    Labels: a_i = i-1, b_i = k+i-1, c_i = 2k+i-1, d_i = 3k+i-1 (i = 1..k).
    """
    a = lambda i: i
    b = lambda i: k + i
    c = lambda i: 2 * k + i
    d = lambda i: 3 * k + i
    edges = []
    for i in range(k):
        edges.append((a(i), b(i)))
        edges.append((c(i), d(i)))
        edges.append((a(i), d(i)))
        edges.append((b(i), c(i)))
        if i + 1 < k:
            edges.append((b(i), a(i + 1)))
            edges.append((d(i), c(i + 1)))
    roles = {}
    for i in range(k):
        roles[a(i)] = f"a{i + 1}"
        roles[b(i)] = f"b{i + 1}"
        roles[c(i)] = f"c{i + 1}"
        roles[d(i)] = f"d{i + 1}"
    return edges, roles


def gen_G(k: int) -> FamilyMember:
    """Cubic member of family G on 4k vertices (k >= 1)."""
    if k < 1:
        raise ValueError(f"family G needs k >= 1, got {k}")
    edges, roles = _ladder_parts(k)
    edges.append((0, 2 * k))               # a1-c1
    edges.append((2 * k - 1, 4 * k - 1))   # bk-dk
    return FamilyMember(Graph.from_edges(4 * k, edges), "G", k, roles)


def gen_H(k: int) -> FamilyMember:
    """Cubic member of family H on 4k vertices (k >= 2)."""
    if k < 2:
        raise ValueError(f"family H needs k >= 2, got {k}")
    edges, roles = _ladder_parts(k)
    edges.append((0, 2 * k - 1))           # a1-bk
    edges.append((2 * k, 4 * k - 1))       # c1-dk
    return FamilyMember(Graph.from_edges(4 * k, edges), "H", k, roles)


def gen_GP16() -> FamilyMember:
    """The generalized Petersen graph GP(8,3): outer cycle, spokes, step-3 inner."""
    edges = []
    roles = {}
    for i in range(8):
        edges.append((i, (i + 1) % 8))
        edges.append((i, 8 + i))
        edges.append((8 + i, 8 + (i + 3) % 8))
        roles[i] = f"outer{i}"
        roles[8 + i] = f"inner{i}"
    return FamilyMember(Graph.from_edges(16, edges), "GP16", None, roles)


def gen_F(k: int) -> FamilyMember:
    """Member of family F on 4k+3 vertices (k >= 0); k=0 is the triangle."""
    if k < 0:
        raise ValueError(f"family F needs k >= 0, got {k}")
    if k == 0:
        return FamilyMember(gen_cycle(3), "F", 0, {})
    edges, roles = _ladder_parts(k)
    edges.append((2 * k - 1, 4 * k - 1))   # bk-dk
    v1, v2, v3 = 4 * k, 4 * k + 1, 4 * k + 2
    edges += [(0, v1), (v1, v2), (v2, v3), (v3, 2 * k)]  # a1-c1 subdivided thrice
    roles.update({v1: "v1", v2: "v2", v3: "v3"})
    return FamilyMember(Graph.from_edges(4 * k + 3, edges), "F", k, roles)


def gen_L(k: int) -> FamilyMember:
    """Member of family L on 4k+6 vertices (k >= 0); k=0 is the 6-cycle."""
    if k < 0:
        raise ValueError(f"family L needs k >= 0, got {k}")
    if k == 0:
        return FamilyMember(gen_cycle(6), "L", 0, {})
    edges, roles = _ladder_parts(k)
    v1, v2, v3 = 4 * k, 4 * k + 1, 4 * k + 2
    u1, u2, u3 = 4 * k + 3, 4 * k + 4, 4 * k + 5
    edges += [(0, v1), (v1, v2), (v2, v3), (v3, 2 * k)]              # a1-c1 subdivided
    edges += [(2 * k - 1, u1), (u1, u2), (u2, u3), (u3, 4 * k - 1)]  # bk-dk subdivided
    roles.update({v1: "v1", v2: "v2", v3: "v3", u1: "u1", u2: "u2", u3: "u3"})
    return FamilyMember(Graph.from_edges(4 * k + 6, edges), "L", k, roles)


def two_corona(host: Graph) -> FamilyMember:
    """Attach a vertex-disjoint pendant path of two new vertices to every host vertex.

    Order triples: host vertex i keeps its label ("hub"), its path partner is
    n+i ("mid"), the far end 2n+i ("leaf").
    """
    nh = host.n
    if nh < 1:
        raise ValueError("2-corona needs a host with at least one vertex")
    edges = list(host.edges())
    roles = {}
    for i in range(nh):
        edges.append((i, nh + i))
        edges.append((nh + i, 2 * nh + i))
        roles[i] = f"hub{i + 1}"
        roles[nh + i] = f"mid{i + 1}"
        roles[2 * nh + i] = f"leaf{i + 1}"
    return FamilyMember(Graph.from_edges(3 * nh, edges), "corona", nh, roles)


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def gen_path(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def gen_complete(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"complete graph needs n >= 1, got {n}")
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])

"""Structural recognition of the extremal families and the size bound verdict.

The three families are distinguished by minimum degree: the cycle 2-coronas
(delta = 1), the F/L families reachable by repeatedly contracting away special
2-paths (delta = 2), and the cubic families G/H/GP16 (delta = 3). A connected
graph with every component of order >= 3 satisfies m <= D*(n - gamma_t) where
D is the effective maximum degree (3 when the true maximum is 2); equality
holds exactly for the family members, which is what `check_bound` reports.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .canon import are_isomorphic, isomorphism_map
from .domination import gamma_t
from .families import gen_cycle, gen_F, gen_G, gen_GP16, gen_H, gen_L, two_corona
from .graph import Graph


class InternalCheckError(RuntimeError):
    """Two independent characterizations disagreed; never acceptable silently."""


class BoundViolationError(RuntimeError):
    """m > effective_delta * (n - gamma_t): would falsify the proven bound."""


@dataclass(frozen=True)
class SpecialTwoPath:
    """A degree-2 path v1..v5 whose degree-3 ends share two degree-3 neighbors x, y."""

    v1: int
    v2: int
    v3: int
    v4: int
    v5: int
    x: int
    y: int

    def path(self) -> tuple[int, int, int, int, int]:
        return (self.v1, self.v2, self.v3, self.v4, self.v5)


@dataclass(frozen=True)
class Classification:
    """Family membership verdict with an isomorphism witness onto the generator."""

    family: str | None  # "Gdone" | "GdtwoF" | "GdtwoL" | "GcubG" | "GcubH" | "GcubGP16"
    k: int | None = None
    witness: dict[int, int] | None = field(default=None, compare=False)
    note: str = field(default="", compare=False)

    @property
    def is_member(self) -> bool:
        return self.family is not None


NOT_IN_FAMILIES = Classification(None)


@dataclass(frozen=True)
class ExtremalityReport:
    """Everything `check_bound` learned about one graph."""

    n: int
    m: int
    max_degree: int
    effective_delta: int
    gamma_t: int
    bound: int
    is_extremal: bool
    classification: Classification

    def to_json_dict(self) -> dict:
        """Stable-key-order dict for machine consumption."""
        return {
            "n": self.n,
            "m": self.m,
            "max_degree": self.max_degree,
            "effective_delta": self.effective_delta,
            "gamma_t": self.gamma_t,
            "bound": self.bound,
            "extremal": self.is_extremal,
            "classification": {
                "family": self.classification.family,
                "k": self.classification.k,
            },
        }


def effective_delta(g: Graph) -> int:
    """The bound's degree parameter: 3 when the maximum degree is 2."""
    d = g.max_degree()
    if d <= 1:
        raise ValueError(f"bound needs maximum degree >= 2, got {d}")
    return 3 if d == 2 else d


def find_special_two_paths(g: Graph) -> list[SpecialTwoPath]:
    """All special 2-paths, one per tuple, normalized so v1 < v5."""
    deg = g.degrees()
    found = []
    for v1 in range(g.n):
        if deg[v1] != 3:
            continue
        for v2 in g.neighbors(v1):
            if deg[v2] != 2:
                continue
            v3 = _other_neighbor(g, v2, v1)
            if deg[v3] != 2:
                continue
            v4 = _other_neighbor(g, v3, v2)
            if deg[v4] != 2:
                continue
            v5 = _other_neighbor(g, v4, v3)
            if deg[v5] != 3 or v1 >= v5:
                continue
            if len({v1, v2, v3, v4, v5}) != 5:
                continue
            common = g.adjacency_mask(v1) & g.adjacency_mask(v5)
            if common.bit_count() != 2:
                continue
            x = (common & -common).bit_length() - 1
            y = (common ^ (common & -common)).bit_length() - 1
            if deg[x] == 3 and deg[y] == 3:
                found.append(SpecialTwoPath(v1, v2, v3, v4, v5, x, y))
    found.sort(key=lambda p: (p.v1, p.v5))
    return found


def _other_neighbor(g: Graph, v: int, prev: int) -> int:
    mask = g.adjacency_mask(v) & ~(1 << prev)
    return (mask & -mask).bit_length() - 1


def _validate_special(g: Graph, p: SpecialTwoPath) -> None:
    verts = (p.v1, p.v2, p.v3, p.v4, p.v5, p.x, p.y)
    if len(set(verts)) != 7 or not all(0 <= v < g.n for v in verts):
        raise ValueError("not a special 2-path of this graph")
    deg = g.degrees()
    ok = (
        deg[p.v1] == deg[p.v5] == deg[p.x] == deg[p.y] == 3
        and deg[p.v2] == deg[p.v3] == deg[p.v4] == 2
        and all(g.has_edge(a, b) for a, b in zip(p.path(), p.path()[1:]))
        and all(g.has_edge(e, c) for e in (p.v1, p.v5) for c in (p.x, p.y))
    )
    if not ok:
        raise ValueError("not a special 2-path of this graph")


def reduce_special(g: Graph, p: SpecialTwoPath) -> Graph:
    """Contract the path's endpoints and delete its three interior vertices.

    The order drops by exactly 4; in the result x and y have degree 2 and
    share the merged vertex as a neighbor.
    """
    _validate_special(g, p)
    merged, mapping = g.contract(p.v1, p.v5)
    reduced, _ = merged.delete_vertices({mapping[p.v2], mapping[p.v3], mapping[p.v4]})
    return reduced


_C3 = gen_cycle(3)
_C6 = gen_cycle(6)


def _reduces_to_base(g: Graph) -> bool:
    n = g.n
    if n < 3 or n % 4 in (0, 1):
        return False
    if n == 3:
        return are_isomorphic(g, _C3)
    if n == 6:
        return are_isomorphic(g, _C6)
    for p in find_special_two_paths(g):
        reduced = reduce_special(g, p)
        if reduced.min_degree() >= 2 and reduced.is_connected() and _reduces_to_base(reduced):
            return True
    return False


def is_in_Gdtwo(g: Graph) -> Classification:
    """Membership in the delta-2 families, decided by the contraction recursion.

    Backtracks over every special 2-path; acceptance is cross-validated by an
    isomorphism check against the generated F/L member of matching order.
    """
    if g.n < 3 or not g.is_connected() or g.min_degree() < 2:
        return NOT_IN_FAMILIES
    if not _reduces_to_base(g):
        return NOT_IN_FAMILIES
    if g.n % 4 == 3:
        family, k, member = "GdtwoF", (g.n - 3) // 4, gen_F((g.n - 3) // 4)
    else:
        family, k, member = "GdtwoL", (g.n - 6) // 4, gen_L((g.n - 6) // 4)
    witness = isomorphism_map(g, member.graph)
    if witness is None:
        raise InternalCheckError(
            f"reduction accepted an order-{g.n} graph that is not isomorphic to "
            f"the unique {family}({k}) member"
        )
    return Classification(family, k, witness)


def is_in_Gdone(g: Graph) -> Classification:
    """Membership in the delta-1 family: 2-coronas of cycles.

    Structural test: the degree-3 vertices induce a cycle, each carries exactly
    one pendant path of two vertices, and nothing else exists.
    """
    n = g.n
    if n < 9 or n % 3 != 0 or not g.is_connected():
        return NOT_IN_FAMILIES
    k = n // 3
    deg = g.degrees()
    hubs = [v for v in range(n) if deg[v] == 3]
    mids = [v for v in range(n) if deg[v] == 2]
    leaves = [v for v in range(n) if deg[v] == 1]
    if not (len(hubs) == len(mids) == len(leaves) == k):
        return NOT_IN_FAMILIES
    hub_mask = sum(1 << v for v in hubs)
    mid_mask = sum(1 << v for v in mids)
    leaf_mask = sum(1 << v for v in leaves)
    for v in leaves:
        if g.adjacency_mask(v) & ~mid_mask:
            return NOT_IN_FAMILIES
    for v in mids:
        nb = g.adjacency_mask(v)
        if (nb & hub_mask).bit_count() != 1 or (nb & leaf_mask).bit_count() != 1:
            return NOT_IN_FAMILIES
    for v in hubs:
        nb = g.adjacency_mask(v)
        if (nb & hub_mask).bit_count() != 2 or (nb & mid_mask).bit_count() != 1:
            return NOT_IN_FAMILIES
    # connectivity of g forces the 2-regular hub subgraph to be a single cycle
    member = two_corona(gen_cycle(k))
    witness = isomorphism_map(g, member.graph)
    if witness is None:
        raise InternalCheckError(
            f"structural corona test accepted an order-{n} graph that is not "
            f"isomorphic to the cycle 2-corona with k={k}"
        )
    return Classification("Gdone", k, witness)


def is_in_Gcub(g: Graph) -> Classification:
    """Membership in the cubic families, by canonical-form comparison.

    Acceptance is cross-checked against the independent characterization that
    members are exactly the connected cubic graphs with gamma_t = n/2.
    """
    n = g.n
    if n < 4 or n % 4 != 0 or not g.is_connected():
        return NOT_IN_FAMILIES
    if any(d != 3 for d in g.degrees()):
        return NOT_IN_FAMILIES
    k = n // 4
    candidates: list[tuple[str, int | None, Graph]] = [("GcubG", k, gen_G(k).graph)]
    if k >= 2:
        candidates.append(("GcubH", k, gen_H(k).graph))
    if n == 16:
        candidates.append(("GcubGP16", None, gen_GP16().graph))
    for family, kk, member in candidates:
        if are_isomorphic(g, member):
            if 2 * gamma_t(g).value != n:
                raise InternalCheckError(
                    f"{family} member of order {n} fails the gamma_t = n/2 "
                    "characterization"
                )
            return Classification(family, kk, isomorphism_map(g, member))
    return NOT_IN_FAMILIES


def classify(g: Graph) -> Classification:
    """First matching family verdict; the families are pairwise disjoint."""
    if g.n == 0:
        return Classification(None, note="empty graph")
    if not g.is_connected():
        return Classification(None, note="disconnected: the characterization covers connected graphs only")
    for test in (is_in_Gdone, is_in_Gdtwo, is_in_Gcub):
        verdict = test(g)
        if verdict.is_member:
            return verdict
    return NOT_IN_FAMILIES


def check_bound(g: Graph) -> ExtremalityReport:
    """Exact size-bound verdict: compute gamma_t, the bound, and the classification.

    Requires every component to have order >= 3. A graph with m exceeding the
    bound would falsify the underlying theorem, so that raises
    BoundViolationError instead of returning a report.
    """
    for comp in g.component_masks():
        if comp.bit_count() < 3:
            raise ValueError("check_bound requires every component to have order >= 3")
    cert = gamma_t(g)
    deff = effective_delta(g)
    bound = deff * (g.n - cert.value)
    if g.m > bound:
        raise BoundViolationError(
            f"m={g.m} exceeds {deff}*(n - gamma_t)={bound}; this contradicts the proven bound"
        )
    return ExtremalityReport(
        n=g.n,
        m=g.m,
        max_degree=g.max_degree(),
        effective_delta=deff,
        gamma_t=cert.value,
        bound=bound,
        is_extremal=g.m == bound,
        classification=classify(g),
    )

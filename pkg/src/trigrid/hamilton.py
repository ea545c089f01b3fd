"""Hamilton cycles and the diamond local structure used by the cycle planner.

Provides exact backtracking search for Hamilton cycles, the dual-forest
decomposition induced by a Hamilton cycle (triangle faces split by the
closed curve), and extraction of a diamond whose subpath parities allow
swapping adjacent pieces along the cycle.
"""

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Set, Tuple

import networkx as nx

from .grid import Edge, GridError, TriGridGraph, cartesian, edge_key, is_star_of_david
from .ears import cycle_edges


class HamiltonError(Exception):
    pass


class NoLocalStructureError(HamiltonError):
    pass


@dataclass(frozen=True)
class HamiltonCycle:
    """A spanning cycle, stored anti-clockwise from the minimum vertex id
    (for lattice graphs; abstract graphs keep the lexicographic direction)."""

    order: Tuple[int, ...]

    @property
    def edges(self) -> FrozenSet[Edge]:
        return frozenset(cycle_edges(self.order))

    def __len__(self) -> int:
        return len(self.order)


def validate_cycle(g: TriGridGraph, h: HamiltonCycle) -> None:
    order = h.order
    if len(order) != g.num_vertices or set(order) != set(g.vertex_ids):
        raise HamiltonError("cycle does not span the vertex set")
    for u, v in zip(order, order[1:] + order[:1]):
        if not g.has_edge(u, v):
            raise HamiltonError(f"cycle uses a non-edge ({u}, {v})")


def _signed_area(g: TriGridGraph, order: Sequence[int]) -> float:
    pts = [cartesian(g.point_of(v)) for v in order]
    area = 0.0
    for (x1, y1), (x2, y2) in zip(pts, pts[1:] + pts[:1]):
        area += x1 * y2 - x2 * y1
    return area / 2.0


def _normalize(g: TriGridGraph, order: Sequence[int]) -> Tuple[int, ...]:
    """Rotate to start at the minimum id; orient anti-clockwise when the
    graph carries lattice coordinates, else take the lexicographically
    smaller direction."""
    order = list(order)
    if g.is_lattice:
        if _signed_area(g, order) < 0:
            order.reverse()
    i = order.index(min(order))
    order = order[i:] + order[:i]
    if not g.is_lattice and order[1] > order[-1]:
        order = [order[0]] + order[1:][::-1]
    return tuple(order)


def _hamilton_search(g: TriGridGraph, all_cycles: bool) -> Iterator[Tuple[int, ...]]:
    """Backtracking over simple paths with a connectivity-style prune:
    every unvisited vertex must keep two usable neighbors."""
    nvert = g.num_vertices
    start = min(g.vertex_ids, key=lambda v: (g.degree(v), v))
    visited = {start}
    path = [start]

    def usable(w: int, tail: int) -> int:
        cnt = 0
        for x in g.adj[w]:
            if x == tail or x == start or x not in visited:
                cnt += 1
        return cnt

    def extend() -> Iterator[Tuple[int, ...]]:
        tail = path[-1]
        if len(path) == nvert:
            if g.has_edge(tail, start):
                yield tuple(path)
            return
        nbrs = sorted((w for w in g.adj[tail] if w not in visited),
                      key=lambda w: (g.degree(w), w))
        for w in nbrs:
            visited.add(w)
            path.append(w)
            if all(usable(x, w) >= 2 for x in g.vertex_ids if x not in visited):
                yield from extend()
            path.pop()
            visited.discard(w)

    yield from extend()


def find_hamilton(g: TriGridGraph) -> HamiltonCycle:
    """First Hamilton cycle found by exact search.

    The Star of David graph is rejected upfront: it is the one
    locally-connected triangular grid graph with no spanning cycle.
    """
    if g.is_lattice and is_star_of_david(g):
        raise GridError("the Star of David graph has no Hamilton cycle")
    for order in _hamilton_search(g, all_cycles=False):
        h = HamiltonCycle(_normalize(g, order))
        validate_cycle(g, h)
        return h
    raise HamiltonError("no Hamilton cycle found")


def enumerate_hamilton_cycles(g: TriGridGraph) -> Iterator[HamiltonCycle]:
    """All distinct Hamilton cycles (deduplicated up to rotation and
    direction), in search order."""
    seen: Set[Tuple[int, ...]] = set()
    for order in _hamilton_search(g, all_cycles=True):
        h = HamiltonCycle(_normalize(g, order))
        key = min(h.order, (h.order[0],) + h.order[1:][::-1])
        if key in seen:
            continue
        seen.add(key)
        validate_cycle(g, h)
        yield h


# ---------------------------------------------------------------------------
# dual forests

@dataclass(frozen=True, eq=False)
class DualForests:
    """Triangle faces split by the closed curve of a Hamilton cycle.

    ``side1`` holds the triangles outside the cycle polygon (the side of
    the outer face), ``side2`` those inside; nodes are triangle frozensets
    and dual edges connect triangles sharing an inner edge on the same
    side. ``cut_edges`` are the inner edges crossed by the cycle.
    """

    triangles: Tuple[FrozenSet[int], ...]
    side1: "nx.Graph" = field(repr=False)
    side2: "nx.Graph" = field(repr=False)
    cut_edges: FrozenSet[Edge] = frozenset()


def _point_in_polygon(pt: Tuple[float, float],
                      poly: Sequence[Tuple[float, float]]) -> bool:
    x, y = pt
    inside = False
    for (x1, y1), (x2, y2) in zip(poly, list(poly[1:]) + [poly[0]]):
        if (y1 > y) != (y2 > y):
            xi = x1 + (y - y1) * (x2 - x1) / (y2 - y1)
            if x < xi:
                inside = not inside
    return inside


def dual_forests(g: TriGridGraph, h: HamiltonCycle) -> DualForests:
    """Partition the triangle faces by the side of the cycle polygon and
    build the two dual graphs; both are forests of maximum degree three."""
    validate_cycle(g, h)
    if not g.is_lattice:
        raise GridError("dual forests need lattice coordinates")
    poly = [cartesian(g.point_of(v)) for v in h.order]
    hedges = h.edges

    outside: Set[FrozenSet[int]] = set()
    for tri in g.faces:
        cx = sum(cartesian(g.point_of(v))[0] for v in tri) / 3.0
        cy = sum(cartesian(g.point_of(v))[1] for v in tri) / 3.0
        if not _point_in_polygon((cx, cy), poly):
            outside.add(tri)

    by_edge: Dict[Edge, List[FrozenSet[int]]] = {}
    for tri in g.faces:
        for u, v in ((a, b) for a in tri for b in tri if a < b):
            if g.has_edge(u, v):
                by_edge.setdefault(edge_key(u, v), []).append(tri)

    side1 = nx.Graph()
    side2 = nx.Graph()
    for tri in g.faces:
        (side1 if tri in outside else side2).add_node(tri)
    cut: Set[Edge] = set()
    for e in g.inner_edges:
        t1, t2 = by_edge[e]
        if e in hedges:
            cut.add(e)
            assert (t1 in outside) != (t2 in outside), \
                "cycle edge with both triangles on one side"
            continue
        assert (t1 in outside) == (t2 in outside), \
            "shared non-cycle edge must keep both triangles on one side"
        (side1 if t1 in outside else side2).add_edge(t1, t2)

    for forest in (side1, side2):
        assert forest.number_of_nodes() == 0 or nx.is_forest(forest)
        assert all(dg <= 3 for _, dg in forest.degree())
    return DualForests(tuple(g.faces), side1, side2, frozenset(cut))


# ---------------------------------------------------------------------------
# the parity diamond

@dataclass(frozen=True)
class ParityDiamond:
    """A diamond (two triangles sharing the edge (a, c); outer vertices b
    and d) positioned on a Hamilton cycle so that the cycle contains
    (a, b) but not (a, c), the subpath p1 from d to a avoiding b has even
    length, and the subpath p2 from b to c avoiding a has odd length.
    """

    a: int
    b: int
    c: int
    d: int
    cycle: HamiltonCycle
    case: str                    # "i" or "ii"
    p1: Tuple[int, ...]          # vertex path d -> a, even edge count
    p2: Tuple[int, ...]          # vertex path b -> c, odd edge count


def _arc(order: Sequence[int], frm: int, to: int, avoid: int) -> Tuple[int, ...]:
    """The cycle arc from `frm` to `to` not passing through `avoid`."""
    i = order.index(frm)
    n = len(order)
    for step in (1, -1):
        path = [frm]
        j = i
        while path[-1] != to:
            j = (j + step) % n
            path.append(order[j])
        if avoid not in path:
            return tuple(path)
    raise HamiltonError("both arcs pass through the avoided vertex")


def _classify(h: HamiltonCycle, a: int, b: int, c: int, d: int) -> Optional[str]:
    """Lemma-condition case for the labeling, or None if neither holds."""
    he = h.edges
    if edge_key(a, c) in he:
        return None
    if edge_key(a, b) in he and edge_key(b, c) in he:
        return "ii"
    if edge_key(a, b) in he and edge_key(c, d) in he:
        return "i"
    return None


def _parity_labelings(h: HamiltonCycle,
                      diamond: Tuple[int, int, int, int]) -> List[ParityDiamond]:
    """All labelings of the diamond satisfying the parity conditions."""
    s1, s2, t1, t2 = diamond
    out = []
    for a, c in ((s1, s2), (s2, s1)):
        for b, d in ((t1, t2), (t2, t1)):
            he = h.edges
            if edge_key(a, b) not in he or edge_key(a, c) in he:
                continue
            p1 = _arc(h.order, d, a, avoid=b)
            p2 = _arc(h.order, b, c, avoid=a)
            if (len(p1) - 1) % 2 != 0 or (len(p2) - 1) % 2 != 1:
                continue
            case = "ii" if len(p2) == 2 else _classify(h, a, b, c, d)
            if case is None:
                continue
            out.append(ParityDiamond(a, b, c, d, h, case, p1, p2))
    return out


def _diamonds(g: TriGridGraph) -> List[Tuple[int, int, int, int]]:
    from .ears import enumerate_diamonds
    return enumerate_diamonds(g)


def _scan(g: TriGridGraph, h: HamiltonCycle) -> List[ParityDiamond]:
    found = []
    for diamond in _diamonds(g):
        found.extend(_parity_labelings(h, diamond))
    return found


def _best(cands: List[ParityDiamond]) -> ParityDiamond:
    return min(cands, key=lambda pd: (len(pd.p2), (pd.a, pd.b, pd.c, pd.d)))


def select_parity(h: HamiltonCycle,
                  diamond: Tuple[int, int, int, int]) -> ParityDiamond:
    """Orient a qualifying diamond so the two cycle subpaths have the
    required parities; exactly the right orientation exists because the
    cycle has odd length."""
    cands = _parity_labelings(h, diamond)
    if not cands:
        raise HamiltonError("diamond does not meet the parity conditions")
    return _best(cands)


def _modified_cycles(g: TriGridGraph, h: HamiltonCycle) -> Iterator[HamiltonCycle]:
    """Local reroutes of the cycle: detach a vertex from its two cycle
    neighbors f, g (which must be adjacent) and insert it between an
    adjacent cycle edge (b, c)."""
    he = set(h.edges)
    pos = {v: i for i, v in enumerate(h.order)}
    n = len(h.order)
    for a in g.vertex_ids:
        f = h.order[(pos[a] - 1) % n]
        g2 = h.order[(pos[a] + 1) % n]
        if not g.has_edge(f, g2):
            continue
        others = [w for w in g.adj[a] if w not in (f, g2)]
        for b in others:
            for c in others:
                if b >= c or edge_key(b, c) not in he:
                    continue
                new_edges = (he - {edge_key(a, f), edge_key(a, g2), edge_key(b, c)}) \
                    | {edge_key(a, b), edge_key(a, c), edge_key(f, g2)}
                order = _edges_to_cycle(new_edges, g.num_vertices)
                if order is None:
                    continue
                h2 = HamiltonCycle(_normalize(g, order))
                validate_cycle(g, h2)
                yield h2


def _edges_to_cycle(edges: Set[Edge], nvert: int) -> Optional[Tuple[int, ...]]:
    """Walk an edge set that should form one spanning cycle; None if it
    splits into several cycles or is not 2-regular."""
    adj: Dict[int, List[int]] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    if len(adj) != nvert or any(len(ns) != 2 for ns in adj.values()):
        return None
    order = [min(adj)]
    prev = None
    while True:
        nxt = [w for w in adj[order[-1]] if w != prev]
        prev = order[-1]
        cand = nxt[0]
        if cand == order[0]:
            break
        order.append(cand)
    if len(order) != nvert:
        return None
    return tuple(order)


def find_local_structure(g: TriGridGraph, h: HamiltonCycle) -> ParityDiamond:
    """A parity diamond for some Hamilton cycle of the graph.

    Scans the given cycle first; if no diamond qualifies, tries local
    reroutes of the cycle, then falls back to enumerating other Hamilton
    cycles. The returned structure's cycle may differ from the input.
    """
    if g.num_vertices < 5:
        raise HamiltonError("graph too small for the diamond structure")
    validate_cycle(g, h)
    cands = _scan(g, h)
    if cands:
        return _best(cands)
    for h2 in _modified_cycles(g, h):
        cands = _scan(g, h2)
        if cands:
            return _best(cands)
    for h2 in enumerate_hamilton_cycles(g):
        cands = _scan(g, h2)
        if cands:
            return _best(cands)
    raise NoLocalStructureError("no parity diamond on any Hamilton cycle")

"""Cubic multipoles: graphs with semiedges grouped into connectors.

A multipole has vertices, undirected edges (multi-edges allowed, loops
rejected), and semiedges. A semiedge dangles from one vertex, or is paired
with a partner semiedge into an isolated edge. Connectors are named, ordered,
pairwise disjoint groups of semiedges used when multipoles are glued.

Edges and semiedges share one id namespace; a coloring is a plain dict
mapping element ids to colors. Multipoles are immutable after construction:
every operation returns a new value.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple


@dataclass(frozen=True)
class Edge:
    id: str
    u: str
    v: str

    def ends(self) -> Tuple[str, str]:
        return (self.u, self.v)

    def other(self, x: str) -> str:
        return self.v if x == self.u else self.u


@dataclass(frozen=True)
class Semiedge:
    id: str
    vertex: Optional[str] = None
    partner: Optional[str] = None  # id of the partner semiedge of an isolated edge


@dataclass(frozen=True)
class Connector:
    name: str
    members: Tuple[str, ...]  # ordered semiedge ids; order is part of the data model


@dataclass(frozen=True)
class Multipole:
    vertices: Tuple[str, ...]
    edges: Tuple[Edge, ...]
    semiedges: Tuple[Semiedge, ...]
    connectors: Tuple[Connector, ...] = ()
    # derived indexes, filled in __post_init__
    _incidence: Dict[str, Tuple[str, ...]] = field(
        default_factory=dict, repr=False, compare=False
    )
    _edge_by_id: Dict[str, Edge] = field(default_factory=dict, repr=False, compare=False)
    _semi_by_id: Dict[str, Semiedge] = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self) -> None:
        inc: Dict[str, List[str]] = {v: [] for v in self.vertices}
        eby: Dict[str, Edge] = {}
        sby: Dict[str, Semiedge] = {}
        for e in self.edges:
            eby[e.id] = e
            if e.u in inc:
                inc[e.u].append(e.id)
            if e.v in inc:
                inc[e.v].append(e.id)
        for s in self.semiedges:
            sby[s.id] = s
            if s.vertex is not None and s.vertex in inc:
                inc[s.vertex].append(s.id)
        object.__setattr__(self, "_incidence", {v: tuple(ids) for v, ids in inc.items()})
        object.__setattr__(self, "_edge_by_id", eby)
        object.__setattr__(self, "_semi_by_id", sby)

    # -- lookups ---------------------------------------------------------

    def edge(self, eid: str) -> Edge:
        return self._edge_by_id[eid]

    def semiedge(self, sid: str) -> Semiedge:
        return self._semi_by_id[sid]

    def has_edge_id(self, eid: str) -> bool:
        return eid in self._edge_by_id

    def is_edge(self, elem: str) -> bool:
        return elem in self._edge_by_id

    def is_semiedge(self, elem: str) -> bool:
        return elem in self._semi_by_id

    def elements_at(self, v: str) -> Tuple[str, ...]:
        """Edge and semiedge ids incident to v, in construction order."""
        return self._incidence[v]

    def degree(self, v: str) -> int:
        return len(self._incidence[v])

    def element_ids(self) -> Tuple[str, ...]:
        """All colorable element ids: edges then semiedges."""
        return tuple(e.id for e in self.edges) + tuple(s.id for s in self.semiedges)

    def edge_ends(self, elem: str) -> Tuple[str, ...]:
        """Vertices a colorable element touches (2 for edges, 0/1 for semiedges)."""
        e = self._edge_by_id.get(elem)
        if e is not None:
            return (e.u, e.v)
        s = self._semi_by_id[elem]
        return (s.vertex,) if s.vertex is not None else ()

    def edges_between(self, u: str, v: str) -> List[Edge]:
        pair = frozenset((u, v))
        return [e for e in self.edges if frozenset((e.u, e.v)) == pair]

    def is_closed(self) -> bool:
        return not self.semiedges

    def adjacent(self, u: str, v: str) -> bool:
        return any(
            self._edge_by_id[x].other(u) == v
            for x in self._incidence[u]
            if x in self._edge_by_id
        )


@dataclass(frozen=True)
class ValidationReport:
    problems: Tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.problems


def make_multipole(
    vertices: Iterable[str],
    edges: Iterable[Tuple[str, str, str]],
    semiedges: Iterable[Tuple[str, Optional[str]]] = (),
    connectors: Iterable[Tuple[str, Sequence[str]]] = (),
) -> Multipole:
    """Convenience constructor from plain tuples; rejects loops immediately."""
    es = []
    for eid, u, v in edges:
        if u == v:
            raise ValueError(f"loop edge {eid} at {u} is not representable")
        es.append(Edge(eid, u, v))
    return Multipole(
        vertices=tuple(vertices),
        edges=tuple(es),
        semiedges=tuple(Semiedge(sid, vx) for sid, vx in semiedges),
        connectors=tuple(Connector(name, tuple(members)) for name, members in connectors),
    )


def validate(m: Multipole) -> ValidationReport:
    """Report every structural violation; an empty report means valid."""
    problems: List[str] = []
    vset = set(m.vertices)
    if len(vset) != len(m.vertices):
        problems.append("duplicate vertex ids")
    seen_ids = set()
    for e in m.edges:
        if e.id in seen_ids:
            problems.append(f"duplicate element id {e.id}")
        seen_ids.add(e.id)
        if e.u == e.v:
            problems.append(f"loop edge {e.id} at {e.u}")
        for x in (e.u, e.v):
            if x not in vset:
                problems.append(f"edge {e.id} references unknown vertex {x}")
    semi_ids = set()
    for s in m.semiedges:
        if s.id in seen_ids:
            problems.append(f"duplicate element id {s.id}")
        seen_ids.add(s.id)
        semi_ids.add(s.id)
        if s.vertex is None and s.partner is None:
            problems.append(f"semiedge {s.id} attached to nothing")
        if s.vertex is not None and s.partner is not None:
            problems.append(f"semiedge {s.id} has both a vertex and a partner")
        if s.vertex is not None and s.vertex not in vset:
            problems.append(f"semiedge {s.id} references unknown vertex {s.vertex}")
    for s in m.semiedges:
        if s.partner is not None:
            mate = m._semi_by_id.get(s.partner)
            if mate is None:
                problems.append(f"semiedge {s.id} references unknown partner {s.partner}")
            elif mate.partner != s.id:
                problems.append(f"semiedges {s.id}/{s.partner} are not mutually partnered")
    for v in m.vertices:
        d = m.degree(v)
        if d != 3:
            problems.append(f"vertex {v} has degree {d}, expected 3")
    used = set()
    for c in m.connectors:
        if len(set(c.members)) != len(c.members):
            problems.append(f"connector {c.name} repeats a member")
        for sid in c.members:
            if sid not in semi_ids:
                problems.append(f"connector {c.name} references unknown semiedge {sid}")
            if sid in used:
                problems.append(f"semiedge {sid} appears in two connectors")
            used.add(sid)
    return ValidationReport(tuple(problems))


def cut_semiedge_id(edge_id: str, vertex: str) -> str:
    """Id of the semiedge born when an edge is cut, keeping its provenance."""
    return f"cut:{edge_id}@{vertex}"


def induced_submultipole(m: Multipole, vs: Iterable[str]) -> Multipole:
    """M[V']: keep edges inside vs, turn edges leaving vs into semiedges."""
    keep = set(vs)
    unknown = keep - set(m.vertices)
    if unknown:
        raise KeyError(f"unknown vertex ids: {sorted(unknown)}")
    edges: List[Edge] = []
    semis: List[Semiedge] = []
    for e in m.edges:
        inside = (e.u in keep) + (e.v in keep)
        if inside == 2:
            edges.append(e)
        elif inside == 1:
            end = e.u if e.u in keep else e.v
            semis.append(Semiedge(cut_semiedge_id(e.id, end), end))
    for s in m.semiedges:
        if s.vertex is not None and s.vertex in keep:
            semis.append(s)
    return Multipole(
        vertices=tuple(v for v in m.vertices if v in keep),
        edges=tuple(edges),
        semiedges=tuple(semis),
    )


def identify_semiedges(m: Multipole, s1: str, s2: str) -> Tuple[Multipole, str]:
    """Weld two dangling semiedges into one edge; returns (multipole, new edge id)."""
    if s1 == s2:
        raise ValueError("cannot identify a semiedge with itself")
    a = m.semiedge(s1)
    b = m.semiedge(s2)
    for s in (a, b):
        if s.vertex is None:
            raise ValueError(f"semiedge {s.id} has no endpoint vertex")
    if a.vertex == b.vertex:
        raise ValueError(f"identifying {s1} and {s2} would create a loop at {a.vertex}")
    new_id = f"weld({s1},{s2})"
    edges = m.edges + (Edge(new_id, a.vertex, b.vertex),)
    semis = tuple(s for s in m.semiedges if s.id not in (s1, s2))
    connectors = tuple(
        Connector(c.name, tuple(x for x in c.members if x not in (s1, s2)))
        for c in m.connectors
    )
    return (
        Multipole(vertices=m.vertices, edges=edges, semiedges=semis, connectors=connectors),
        new_id,
    )


def subdivide_edge(m: Multipole, eid: str, label: str) -> Tuple[Multipole, str, str]:
    """Replace an edge by two edges through a new degree-2 vertex.

    The caller must restore cubicity afterwards (a pendant edge is attached
    during junction assembly). Returns (multipole, half-at-u id, half-at-v id).
    """
    e = m.edge(eid)
    if label in m.vertices:
        raise ValueError(f"vertex id {label} already in use")
    ha, hb = f"{eid}#a", f"{eid}#b"
    edges = tuple(x for x in m.edges if x.id != eid) + (
        Edge(ha, e.u, label),
        Edge(hb, label, e.v),
    )
    return (
        Multipole(
            vertices=m.vertices + (label,),
            edges=edges,
            semiedges=m.semiedges,
            connectors=m.connectors,
        ),
        ha,
        hb,
    )


def add_pendant_edge(m: Multipole, v: str, label_vertex: str, eid: str) -> Multipole:
    """Attach a new degree-1 vertex to v (used to re-cube subdivision points in tests)."""
    if label_vertex in m.vertices:
        raise ValueError(f"vertex id {label_vertex} already in use")
    return Multipole(
        vertices=m.vertices + (label_vertex,),
        edges=m.edges + (Edge(eid, v, label_vertex),),
        semiedges=m.semiedges,
        connectors=m.connectors,
    )


def relabel(m: Multipole, vertex_map: Dict[str, str], element_map: Dict[str, str]) -> Multipole:
    """Rename vertices and elements; maps must cover everything they rename."""
    def vm(v: str) -> str:
        return vertex_map.get(v, v)

    def em(x: str) -> str:
        return element_map.get(x, x)

    return Multipole(
        vertices=tuple(vm(v) for v in m.vertices),
        edges=tuple(Edge(em(e.id), vm(e.u), vm(e.v)) for e in m.edges),
        semiedges=tuple(
            Semiedge(em(s.id), vm(s.vertex) if s.vertex else None,
                     em(s.partner) if s.partner else None)
            for s in m.semiedges
        ),
        connectors=tuple(
            Connector(c.name, tuple(em(x) for x in c.members)) for c in m.connectors
        ),
    )

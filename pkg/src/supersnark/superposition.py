"""Building superpositions of a snark along a cycle by Petersen superedges.

A superposition spec names the base graph, the cycle, one supervertex kind
per cycle vertex, and per-slot junction parameters (the right semiedge
permutation p and the dock d). Building replaces every cycle vertex by its
supervertex, every cycle edge by a fresh copy of the Petersen superedge, and
welds connectors per the junction parameters; everything off the cycle is
kept verbatim. Built graphs carry provenance: slot-local names are embedded
in vertex and edge ids, and per-junction role handles are retained so a
coloring can be assembled and audited piece by piece.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .assembly import KIND_A, KIND_APRIME, KINDS, Role, perm_inverse
from .coloring import Coloring, restriction
from .multipole import (
    Edge,
    Multipole,
    ValidationReport,
    induced_submultipole,
    validate,
)
from .petersen import SuperedgeLayout, petersen_superedge


@dataclass(frozen=True)
class JunctionParams:
    p: Tuple[int, int, int]  # right semiedge permutation of this slot's superedge
    d: int                   # dock of this slot's left connector

    def __post_init__(self) -> None:
        if sorted(self.p) != [1, 2, 3]:
            raise ValueError(f"p must be a permutation of (1,2,3), got {self.p}")
        if self.d not in (1, 2, 3):
            raise ValueError(f"dock must be 1..3, got {self.d}")


@dataclass(frozen=True)
class SuperpositionSpec:
    base: Multipole
    cycle: Tuple[str, ...]
    kinds: Tuple[str, ...]
    junctions: Tuple[JunctionParams, ...]

    @property
    def g(self) -> int:
        return len(self.cycle)


def validate_spec(spec: SuperpositionSpec) -> ValidationReport:
    """Structural checks; chord placements are legal but reported as warnings."""
    problems: List[str] = []
    g = spec.g
    if g < 3:
        problems.append(f"cycle length {g} < 3")
    if len(set(spec.cycle)) != g:
        problems.append("cycle vertices are not distinct")
    if len(spec.kinds) != g:
        problems.append(f"{len(spec.kinds)} kinds for {g} slots")
    if len(spec.junctions) != g:
        problems.append(f"{len(spec.junctions)} junction params for {g} slots")
    for k in spec.kinds:
        if k not in KINDS:
            problems.append(f"unknown supervertex kind {k}")
    if not spec.base.is_closed():
        problems.append("base graph must be closed (no semiedges)")
    bad = [v for v in spec.base.vertices if spec.base.degree(v) != 3]
    if bad:
        problems.append(f"base graph not cubic at {bad[:3]}")
    missing = [v for v in spec.cycle if v not in spec.base.vertices]
    if missing:
        problems.append(f"cycle vertices not in base: {missing[:3]}")
        return ValidationReport(tuple(problems))
    if g >= 2 and not problems:
        for i in range(g):
            u, v = spec.cycle[i], spec.cycle[(i + 1) % g]
            if not spec.base.edges_between(u, v):
                problems.append(f"consecutive cycle vertices {u},{v} not adjacent")
    return ValidationReport(tuple(problems))


def spec_warnings(spec: SuperpositionSpec) -> List[str]:
    """Non-fatal notes: legs landing on the cycle (chords / parallel edges)."""
    notes = []
    try:
        _, f_edges = cycle_edge_choice(spec)
    except ValueError:
        return notes
    on_cycle = set(spec.cycle)
    for i, eid in enumerate(f_edges):
        e = spec.base.edge(eid)
        other = e.other(spec.cycle[i])
        if other in on_cycle:
            notes.append(
                f"leg of slot {i} ends on the cycle at {other}; the paper's figures "
                "depict the chordless case"
            )
    return notes


def cycle_edge_choice(spec: SuperpositionSpec) -> Tuple[List[str], List[str]]:
    """Pick the cycle edges e_i and legs f_i (lex-least edge among parallels)."""
    g = spec.g
    cycle_edges: List[str] = []
    used: set = set()
    for i in range(g):
        u, v = spec.cycle[i], spec.cycle[(i + 1) % g]
        cands = sorted(e.id for e in spec.base.edges_between(u, v) if e.id not in used)
        if not cands:
            raise ValueError(f"no available edge between consecutive {u},{v}")
        cycle_edges.append(cands[0])
        used.add(cands[0])
    f_edges: List[str] = []
    for i in range(g):
        u = spec.cycle[i]
        rest = [
            x
            for x in spec.base.elements_at(u)
            if x not in (cycle_edges[(i - 1) % g], cycle_edges[i])
        ]
        if len(rest) != 1:
            raise ValueError(f"vertex {u} does not have exactly one non-cycle edge")
        f_edges.append(rest[0])
    return cycle_edges, f_edges


@dataclass(frozen=True)
class Superposition:
    """The built graph plus provenance handles for assembly and audits."""
    spec: SuperpositionSpec
    graph: Multipole
    layout: SuperedgeLayout
    cycle_edges: Tuple[str, ...]          # base edge ids e_i
    leg_edges: Tuple[str, ...]            # base edge ids f_i
    slot_elem: Tuple[Dict[str, str], ...]  # layout element -> built element, per slot
    junction_edges: Tuple[Dict[Role, str], ...]  # role -> built edge id, per junction
    built_leg: Tuple[str, ...]            # built edge id carrying f_i, per slot
    m_int: Multipole

    def slot_vertex(self, i: int, layout_vertex: str) -> str:
        return f"B{i}.{layout_vertex}"


def slot_vertex_name(i: int, v: str) -> str:
    return f"B{i}.{v}"


def build(spec: SuperpositionSpec) -> Superposition:
    """Construct the superposition; the result always validates as closed cubic."""
    report = validate_spec(spec)
    if not report.ok:
        raise ValueError(f"invalid spec: {report.problems[0]}")
    layout = petersen_superedge()
    g = spec.g
    cycle_edges, leg_edges = cycle_edge_choice(spec)
    on_cycle = set(spec.cycle)

    vertices: List[str] = []
    edges: List[Edge] = []

    m_int = induced_submultipole(spec.base, [v for v in spec.base.vertices if v not in on_cycle])
    vertices.extend(m_int.vertices)
    edges.extend(m_int.edges)

    slot_elem: List[Dict[str, str]] = []
    for i in range(g):
        emap: Dict[str, str] = {}
        for v in layout.multipole.vertices:
            vertices.append(slot_vertex_name(i, v))
        for e in layout.multipole.edges:
            eid = f"B{i}.{e.id}"
            edges.append(Edge(eid, slot_vertex_name(i, e.u), slot_vertex_name(i, e.v)))
            emap[e.id] = eid
        slot_elem.append(emap)

    for i in range(g):
        vertices.append(f"A{i}.u")
        if spec.kinds[i] == KIND_APRIME:
            vertices.extend([f"A{i}.u1", f"A{i}.u2"])

    built_leg: List[Optional[str]] = [None] * g
    for i in range(g):
        if built_leg[i] is not None:
            continue
        base_leg = spec.base.edge(leg_edges[i])
        other = base_leg.other(spec.cycle[i])
        eid = f"F{i}"
        if other in on_cycle:
            j = spec.cycle.index(other)
            edges.append(Edge(eid, f"A{i}.u", f"A{j}.u"))
            built_leg[i] = eid
            if leg_edges[j] == leg_edges[i]:
                built_leg[j] = eid
        else:
            edges.append(Edge(eid, f"A{i}.u", other))
            built_leg[i] = eid

    junction_edges: List[Dict[Role, str]] = []
    for i in range(g):
        left_slot = (i - 1) % g
        p = spec.junctions[left_slot].p
        dock = spec.junctions[i].d
        kind = spec.kinds[i]
        jstar = perm_inverse(p)[dock - 1]
        roles: Dict[Role, str] = {}

        def zv(j: int) -> str:
            return slot_vertex_name(left_slot, layout.semi_vertex[layout.right_sem(j)])

        def wv(j: int) -> str:
            return slot_vertex_name(i, layout.semi_vertex[layout.left_sem(j)])

        def add(role: Role, a: str, b: str) -> None:
            eid = f"J{i}." + "_".join(role)
            roles[role] = eid
            edges.append(Edge(eid, a, b))

        add(("dock_z",), zv(jstar), f"A{i}.u")
        add(("dock_w",), f"A{i}.u", wv(dock))
        nondock = sorted(j for j in (1, 2, 3) if j != jstar)
        if kind == KIND_A:
            for j in nondock:
                add(("ident", str(j)), zv(j), wv(p[j - 1]))
        else:
            subv = {nondock[0]: f"A{i}.u1", nondock[1]: f"A{i}.u2"}
            for j in nondock:
                add(("sub_z", str(j)), zv(j), subv[j])
                add(("sub_w", str(j)), subv[j], wv(p[j - 1]))
            add(("uu",), f"A{i}.u1", f"A{i}.u2")
        roles[("f",)] = built_leg[i]
        junction_edges.append(roles)

    graph = Multipole(vertices=tuple(vertices), edges=tuple(edges), semiedges=())

    expected_v = len(spec.base.vertices) - g + sum(
        1 if k == KIND_A else 3 for k in spec.kinds
    ) + 8 * g
    assert len(graph.vertices) == expected_v, "vertex count formula violated"
    assert 2 * len(graph.edges) == 3 * expected_v, "edge count formula violated"
    rep = validate(graph)
    assert rep.ok, f"built graph failed validation: {rep.problems[:3]}"

    return Superposition(
        spec=spec,
        graph=graph,
        layout=layout,
        cycle_edges=tuple(cycle_edges),
        leg_edges=tuple(leg_edges),
        slot_elem=tuple(slot_elem),
        junction_edges=tuple(junction_edges),
        built_leg=tuple(built_leg),
        m_int=m_int,
    )


def m_int_of(base: Multipole, cycle: Tuple[str, ...]) -> Multipole:
    """The induced submultipole on the vertices off the cycle."""
    return induced_submultipole(base, [v for v in base.vertices if v not in set(cycle)])


def sigma_int(sigma: Coloring, base: Multipole, cycle: Tuple[str, ...]) -> Coloring:
    """The restriction of the base coloring to the off-cycle submultipole."""
    return restriction(sigma, base, m_int_of(base, cycle))


def reverse_spec(spec: SuperpositionSpec) -> SuperpositionSpec:
    """The same built graph described with the cycle traversed backwards.

    New slot k hosts old slot (g-2-k) mod g seen through the side-swap
    isomorphism; each permutation is replaced by the inverse of the
    permutation across the junction, and each dock is pulled through that
    permutation. build(reverse_spec(s)) is isomorphic to build(s); the
    bijection is checked structurally by `reversal_vertex_map`.
    """
    g = spec.g
    cycle = tuple(spec.cycle[(g - 1 - k) % g] for k in range(g))
    kinds = tuple(spec.kinds[(g - 1 - k) % g] for k in range(g))
    ps: List[Tuple[int, int, int]] = [None] * g  # type: ignore[list-item]
    ds: List[int] = [0] * g
    for k in range(g):
        # junction at new slot k sits at old vertex m = g-1-k
        m = (g - 1 - k) % g
        old_p = spec.junctions[(m - 1) % g].p
        old_d = spec.junctions[m].d
        ps[(k - 1) % g] = perm_inverse(old_p)
        ds[k] = perm_inverse(old_p)[old_d - 1]
    junctions = tuple(JunctionParams(ps[k], ds[k]) for k in range(g))
    return SuperpositionSpec(base=spec.base, cycle=cycle, kinds=kinds, junctions=junctions)


def reversal_vertex_map(spec: SuperpositionSpec, rev: SuperpositionSpec) -> Dict[str, str]:
    """Vertex bijection from build(rev) onto build(spec); raises if not an isomorphism."""
    layout = petersen_superedge()
    g = spec.g
    fwd = build(spec)
    bwd = build(rev)
    vmap: Dict[str, str] = {v: v for v in fwd.m_int.vertices}
    swap = layout.side_swap.vertex_map
    for k in range(g):
        m = (g - 2 - k) % g
        for v in layout.multipole.vertices:
            vmap[slot_vertex_name(k, v)] = slot_vertex_name(m, swap[v])
    for k in range(g):
        m = (g - 1 - k) % g
        vmap[f"A{k}.u"] = f"A{m}.u"

    fwd_pairs: Dict[frozenset, int] = {}
    for e in fwd.graph.edges:
        key = frozenset((e.u, e.v))
        fwd_pairs[key] = fwd_pairs.get(key, 0) + 1

    # the two subdividing vertices of a three-vertex supervertex may swap;
    # resolve each by its mapped neighborhood
    for k in range(g):
        if rev.kinds[k] != KIND_APRIME:
            continue
        m = (g - 1 - k) % g
        cands = [f"A{m}.u1", f"A{m}.u2"]
        for name in (f"A{k}.u1", f"A{k}.u2"):
            nbrs = []
            for x in bwd.graph.elements_at(name):
                w = bwd.graph.edge(x).other(name)
                if w in vmap:
                    nbrs.append(vmap[w])
            placed = None
            for cand in cands:
                cand_nbrs = {fwd.graph.edge(x).other(cand) for x in fwd.graph.elements_at(cand)}
                if all(n in cand_nbrs for n in nbrs):
                    placed = cand
                    break
            if placed is None:
                raise AssertionError(f"reversal bijection failed at {name}")
            cands.remove(placed)
            vmap[name] = placed

    bwd_pairs: Dict[frozenset, int] = {}
    for e in bwd.graph.edges:
        key = frozenset((vmap[e.u], vmap[e.v]))
        bwd_pairs[key] = bwd_pairs.get(key, 0) + 1
    if fwd_pairs != bwd_pairs:
        raise AssertionError("reversal bijection does not map edges onto edges")
    return vmap

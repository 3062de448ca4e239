"""Petersen graph, its superedge, template colorings and boundary predicates.

The superedge is obtained from the Petersen graph by deleting a fixed pair of
vertices at distance 2 and is relabeled canonically: w1 is the unique common
neighbor (shared by both connectors), w2..w4/z2..z4 follow adjacency order,
c is the interior vertex. Semiedges are L1,L2,L3 (left) and R1,R2,R3 (right).

Template colorings are not hand-entered: the two generators R(1,2,3) and
L2(1,2,3,(4,5)) are derived by exact constrained search from their contracts
(three colors + boundary schemes + the full (2,3)-chain for R; the (4,5)
chain between L2/L3, chain-recolor safety and junction consistency for L2),
and the other ten registry members are produced by the Kempe complement, the
involution I, and color permutations. Every instance is re-validated against
its contract before use.
"""
from __future__ import annotations

import itertools
import logging
import threading
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, List, Optional, Tuple

from . import assembly
from .coloring import (
    COLORS,
    Coloring,
    ColorScheme,
    find_kempe_chain,
    is_normal,
    kempe_swap,
    permute_colors,
    poor_count,
    scheme_of,
    schemes_consistent,
)
from .multipole import Connector, Multipole, Semiedge, induced_submultipole, make_multipole, relabel
from .oracle import BoundaryConstraint, iter_normal_colorings

log = logging.getLogger(__name__)

LEFT = ("L1", "L2", "L3")
RIGHT = ("R1", "R2", "R3")

R_FAMILY = ("R", "Rbar", "R_I", "Rbar_I")
L_FAMILY = ("L1", "L1bar", "L1_I", "L1bar_I", "L2", "L2bar", "L2_I", "L2bar_I")
ALL_TEMPLATE_IDS = R_FAMILY + L_FAMILY


def petersen_graph() -> Multipole:
    """The Petersen graph: outer 5-cycle, inner pentagram, five spokes."""
    outer = [f"o{k}" for k in range(5)]
    inner = [f"i{k}" for k in range(5)]
    edges = []
    for k in range(5):
        edges.append((f"o{k}-o{(k + 1) % 5}", outer[k], outer[(k + 1) % 5]))
    for k in range(5):
        edges.append((f"o{k}-i{k}", outer[k], inner[k]))
    for k in range(5):
        edges.append((f"i{k}-i{(k + 2) % 5}", inner[k], inner[(k + 2) % 5]))
    return make_multipole(outer + inner, edges)


@dataclass(frozen=True)
class Iso:
    """A structure map of the superedge: vertex bijection plus element bijection."""
    vertex_map: Dict[str, str]
    elem_map: Dict[str, str]


@dataclass(frozen=True)
class SuperedgeLayout:
    multipole: Multipole
    left: Tuple[str, str, str]
    right: Tuple[str, str, str]
    semi_vertex: Dict[str, str]
    iso_I: Iso
    side_swap: Iso

    def left_sem(self, j: int) -> str:
        return self.left[j - 1]

    def right_sem(self, j: int) -> str:
        return self.right[j - 1]


_VERTEX_RANK = {v: k for k, v in enumerate(("w1", "w2", "w3", "w4", "z2", "z3", "z4", "c"))}


def _edge_label(a: str, b: str) -> str:
    a, b = sorted((a, b), key=_VERTEX_RANK.__getitem__)
    return f"{a}-{b}"


def _neighbors_in_order(m: Multipole, v: str) -> List[str]:
    return [m.edge(x).other(v) for x in m.elements_at(v) if m.is_edge(x)]


def _derive_layout() -> SuperedgeLayout:
    p10 = petersen_graph()
    u, v = "o1", "o4"  # fixed nonadjacent pair at distance 2
    nu = _neighbors_in_order(p10, u)
    nv = _neighbors_in_order(p10, v)
    common = [x for x in nu if x in nv]
    assert len(common) == 1, "girth 5 guarantees a unique common neighbor"
    w1 = common[0]
    wside = [x for x in nu if x != w1]
    zside = [x for x in nv if x != w1]

    sub = induced_submultipole(p10, [x for x in p10.vertices if x not in (u, v)])

    names = {w1: "w1", wside[0]: "w2", wside[1]: "w3", zside[0]: "z2", zside[1]: "z3"}
    rest = [x for x in sub.vertices if x not in names]
    w4 = next(x for x in _neighbors_in_order(sub, wside[0]) if x in rest)
    names[w4] = "w4"
    z4 = next(x for x in _neighbors_in_order(sub, zside[0]) if x in rest)
    names[z4] = "z4"
    (center,) = [x for x in rest if x not in (w4, z4)]
    names[center] = "c"

    elem_map: Dict[str, str] = {}
    for e in sub.edges:
        elem_map[e.id] = _edge_label(names[e.u], names[e.v])
    semi_names = {}
    for s in sub.semiedges:
        src = s.id[len("cut:"):].rsplit("@", 1)[0]
        side = "L" if u in src.split("-") else "R"  # every cut edge touched u or v
        semi_names[s.id] = (side, names[s.vertex])
    # ordered by the attachment vertices: w1, then the two u-neighbors in order
    label_of = {}
    left_order = [names[w1], names[wside[0]], names[wside[1]]]
    right_order = [names[w1], names[zside[0]], names[zside[1]]]
    for s in sub.semiedges:
        side, vx = semi_names[s.id]
        if side == "L":
            label_of[s.id] = f"L{left_order.index(vx) + 1}"
        else:
            label_of[s.id] = f"R{right_order.index(vx) + 1}"
    elem_map.update(label_of)

    mp = relabel(sub, names, elem_map)
    mp = Multipole(
        vertices=tuple(sorted(mp.vertices, key=_VERTEX_RANK.__getitem__)),
        edges=tuple(sorted(mp.edges, key=lambda e: e.id)),
        semiedges=tuple(sorted(mp.semiedges, key=lambda s: s.id)),
        connectors=(Connector("L", LEFT), Connector("R", RIGHT)),
    )
    assert len(mp.vertices) == 8 and len(mp.edges) == 9 and len(mp.semiedges) == 6
    semi_vertex = {s.id: s.vertex for s in mp.semiedges}

    iso_i = _find_connector_iso(
        mp, semi_vertex, {"L1": "L1", "R1": "R1", "L2": "L3", "L3": "L2", "R2": "R3", "R3": "R2"}
    )
    swap = _find_connector_iso(
        mp, semi_vertex, {"L1": "R1", "R1": "L1", "L2": "R2", "R2": "L2", "L3": "R3", "R3": "L3"}
    )
    return SuperedgeLayout(mp, LEFT, RIGHT, semi_vertex, iso_i, swap)


def _find_connector_iso(m: Multipole, semi_vertex: Dict[str, str], smap: Dict[str, str]) -> Iso:
    """Least automorphism of the superedge realizing a prescribed semiedge action."""
    forced = {semi_vertex[s]: semi_vertex[t] for s, t in smap.items()}
    free = [v for v in m.vertices if v not in forced]
    free_targets = [v for v in m.vertices if v not in set(forced.values())]
    edge_pairs = {frozenset((e.u, e.v)) for e in m.edges}
    solutions = []
    for images in itertools.permutations(free_targets, len(free)):
        f = dict(forced)
        f.update(zip(free, images))
        if all(frozenset((f[e.u], f[e.v])) in edge_pairs for e in m.edges):
            solutions.append(f)
    if not solutions:
        raise AssertionError(f"no superedge isomorphism realizes {smap}; layout is broken")
    solutions.sort(key=lambda f: tuple(f[v] for v in sorted(f)))
    f = solutions[0]
    elem_map = dict(smap)
    by_pair = {frozenset((e.u, e.v)): e.id for e in m.edges}
    for e in m.edges:
        elem_map[e.id] = by_pair[frozenset((f[e.u], f[e.v]))]
    return Iso(f, elem_map)


_layout_lock = threading.Lock()
_layout: Optional[SuperedgeLayout] = None


def petersen_superedge() -> SuperedgeLayout:
    """The canonical superedge layout (derived once, immutable)."""
    global _layout
    with _layout_lock:
        if _layout is None:
            _layout = _derive_layout()
        return _layout


def apply_iso(sigma: Coloring, iso: Iso) -> Coloring:
    """Pull a coloring back along an isomorphism: new(x) = old(iso(x))."""
    return {x: sigma[iso.elem_map[x]] for x in sigma}


# -- junction color contexts ----------------------------------------------


@dataclass(frozen=True)
class SlotContext:
    """Base-coloring values around a superedge slot i.

    prev2_edge/prev_leg/prev_edge meet at the vertex before the slot;
    prev_edge/edge/leg meet at the slot's own supervertex. next_edge/next_leg
    are the forward values when a binding needs them.
    """
    prev2_edge: int
    prev_leg: int
    prev_edge: int
    edge: int
    leg: int
    next_edge: Optional[int] = None
    next_leg: Optional[int] = None

    def complement_pair(self) -> Tuple[int, int]:
        k = sorted(set(COLORS) - {self.prev_edge, self.edge, self.leg})
        return (k[0], k[1])

    def is_valid(self) -> bool:
        if len({self.prev_edge, self.edge, self.leg}) != 3:
            return False
        if len({self.prev2_edge, self.prev_leg, self.prev_edge}) != 3:
            return False
        back = {self.prev2_edge, self.prev_leg}
        return back == {self.edge, self.leg} or back == set(self.complement_pair())


def all_contexts() -> Tuple[SlotContext, ...]:
    """All 240 junction color contexts allowed by properness and normality."""
    out = []
    for prev_edge in COLORS:
        rest = [c for c in COLORS if c != prev_edge]
        for edge, leg in itertools.permutations(rest, 2):
            k1, k2 = sorted(set(COLORS) - {prev_edge, edge, leg})
            for back in ((edge, leg), (leg, edge), (k1, k2), (k2, k1)):
                ctx = SlotContext(back[0], back[1], prev_edge, edge, leg)
                assert ctx.is_valid()
                out.append(ctx)
    assert len(out) == 240
    return tuple(out)


FIG5_CONTEXT = SlotContext(prev2_edge=4, prev_leg=5, prev_edge=2, edge=1, leg=3)


# -- template registry -----------------------------------------------------


@dataclass(frozen=True)
class TemplateInstance:
    """A named coloring of the superedge with its boundary contract data."""
    template_id: str
    params: Tuple[int, int, int]
    chain_colors: Tuple[int, int]
    coloring: Coloring
    chain: Tuple[str, ...]

    @property
    def family(self) -> str:
        return "R" if self.template_id in R_FAMILY else "L"

    def semiedge_color(self, sid: str) -> int:
        return self.coloring[sid]

    def complemented(self) -> "TemplateInstance":
        """The Kempe complement: chain colors swapped along the chain."""
        layout = petersen_superedge()
        swapped = kempe_swap(layout.multipole, self.coloring, self.chain, self.chain_colors)
        return TemplateInstance(
            template_id=toggle_bar(self.template_id),
            params=self.params,
            chain_colors=(self.chain_colors[1], self.chain_colors[0]),
            coloring=swapped,
            chain=self.chain,
        )


def toggle_bar(template_id: str) -> str:
    if template_id.startswith("R"):
        return {"R": "Rbar", "Rbar": "R", "R_I": "Rbar_I", "Rbar_I": "R_I"}[template_id]
    stem, bar, iso = _parse_l(template_id)
    return _l_id(stem, not bar, iso)


def toggle_iso(template_id: str) -> str:
    if template_id.startswith("R"):
        return {"R": "R_I", "R_I": "R", "Rbar": "Rbar_I", "Rbar_I": "Rbar"}[template_id]
    stem, bar, iso = _parse_l(template_id)
    return _l_id(stem, bar, not iso)


def _parse_l(template_id: str) -> Tuple[str, bool, bool]:
    t = template_id
    iso = t.endswith("_I")
    if iso:
        t = t[:-2]
    bar = t.endswith("bar")
    if bar:
        t = t[:-3]
    return t, bar, iso


def _l_id(stem: str, bar: bool, iso: bool) -> str:
    return stem + ("bar" if bar else "") + ("_I" if iso else "")


class ContractViolation(AssertionError):
    pass


def _chain_cover_filter(
    m: Multipole, start: str, end: str, colors: Tuple[int, int]
):
    """Candidate filter: the `colors`-elements form exactly one chain start->end."""
    def ok(cand: Coloring) -> bool:
        if cand[start] not in colors:
            return False
        chain, terminal = find_kempe_chain(m, cand, start, colors)
        if terminal != end:
            return False
        total = sum(1 for c in cand.values() if c in colors)
        return total == len(chain)
    return ok


def _chain_flank_filter(m: Multipole, start: str, colors: Tuple[int, int], flank: int):
    """Candidate filter: every off-chain element at a chain vertex has color `flank`.

    This is what makes the chain recolorable with already-used colors.
    """
    def ok(cand: Coloring) -> bool:
        chain, _ = find_kempe_chain(m, cand, start, colors)
        members = set(chain)
        for x in chain:
            for v in m.edge_ends(x):
                for y in m.elements_at(v):
                    if y not in members and cand[y] != flank:
                        return False
        return True
    return ok


def _derive_canonical_r(layout: SuperedgeLayout) -> Tuple[Coloring, Tuple[str, ...]]:
    m = layout.multipole
    allowed = {x: frozenset({1, 2, 3}) for x in m.element_ids()}
    bc = BoundaryConstraint(
        fixed={"R1": 1, "R2": 1, "R3": 1, "L2": 1, "L1": 2, "L3": 2},
        allowed=allowed,
        schemes_consistent={
            "R1": ColorScheme(1, frozenset({2, 3})),
            "R2": ColorScheme(1, frozenset({2, 3})),
            "R3": ColorScheme(1, frozenset({2, 3})),
            "L2": ColorScheme(1, frozenset({2, 3})),
            "L1": ColorScheme(2, frozenset({1, 3})),
            "L3": ColorScheme(2, frozenset({1, 3})),
        },
        filters=(_chain_cover_filter(m, "L1", "L3", (2, 3)),),
    )
    sols = list(iter_normal_colorings(m, bc))
    if not sols:
        raise ContractViolation("no coloring satisfies the R(1,2,3) contract")
    data = sols[0]
    chain, _ = find_kempe_chain(m, data, "L1", (2, 3))
    return data, chain


def _derive_canonical_l2(
    layout: SuperedgeLayout, r_data: Coloring
) -> Tuple[Coloring, Tuple[str, ...]]:
    m = layout.multipole
    rbar123 = permute_colors(r_data, {1: 1, 2: 3, 3: 2, 4: 4, 5: 5})  # R(1,3,2)

    def junction_filter(cand: Coloring) -> bool:
        # row p=(1,2,3), A, d=2 of the odd-pair table: pairs with R(1,3,2)
        return assembly.junction_assembles(
            layout,
            left=cand,
            right=rbar123,
            p=(1, 2, 3),
            dock=2,
            kind="A",
            f_color=3,
            uu_color=None,
        )

    bc = BoundaryConstraint(
        fixed={"L1": 2, "L2": 4, "L3": 4, "R1": 3, "R2": 2, "R3": 3},
        schemes_consistent={
            "L1": ColorScheme(2, frozenset({4, 5})),
            "L2": ColorScheme(4, frozenset({2, 5})),
            "L3": ColorScheme(4, frozenset({2, 5})),
        },
        filters=(
            _chain_cover_filter(m, "L2", "L3", (4, 5)),
            _chain_flank_filter(m, "L2", (4, 5), 2),
            junction_filter,
        ),
    )
    sols = list(iter_normal_colorings(m, bc))
    if not sols:
        raise ContractViolation("no coloring satisfies the L2(1,2,3,(4,5)) contract")
    data = sols[0]
    chain, _ = find_kempe_chain(m, data, "L2", (4, 5))
    return data, chain


_registry_lock = threading.Lock()
_registry: Optional[Dict[str, Tuple[Coloring, Tuple[str, ...]]]] = None


def template_registry() -> Dict[str, Tuple[Coloring, Tuple[str, ...]]]:
    """Canonical data for the 12 templates: id -> (coloring, chain elements).

    R-family data is in colors {1,2,3} with the (2,3)-chain; L-family data is
    the (1,2,3,(4,5)) parameterization. Derived once, then reused.
    """
    global _registry
    with _registry_lock:
        if _registry is not None:
            return _registry
        layout = petersen_superedge()
        m = layout.multipole
        reg: Dict[str, Tuple[Coloring, Tuple[str, ...]]] = {}

        r_data, r_chain = _derive_canonical_r(layout)
        reg["R"] = (r_data, r_chain)
        rbar = kempe_swap(m, r_data, r_chain, (2, 3))
        reg["Rbar"] = (rbar, r_chain)

        l2_data, l2_chain = _derive_canonical_l2(layout, r_data)
        reg["L2"] = (l2_data, l2_chain)
        reg["L2bar"] = (kempe_swap(m, l2_data, l2_chain, (4, 5)), l2_chain)
        swap13 = {1: 3, 2: 2, 3: 1, 4: 4, 5: 5}
        l1_data = permute_colors(l2_data, swap13)
        reg["L1"] = (l1_data, l2_chain)
        reg["L1bar"] = (kempe_swap(m, l1_data, l2_chain, (4, 5)), l2_chain)

        for tid in list(reg):
            data, chain = reg[tid]
            iso = layout.iso_I
            ichain = tuple(iso.elem_map[x] for x in reversed(chain))
            reg[toggle_iso(tid)] = (apply_iso(data, iso), ichain)

        for tid, (data, chain) in reg.items():
            if not is_normal(m, data):
                raise ContractViolation(f"canonical template {tid} is not normal")
        _registry = reg
        return reg


def _as_perm(images: Dict[int, int]) -> Dict[int, int]:
    if sorted(images.values()) != list(COLORS):
        raise ValueError(f"color arguments must be distinct, got {images}")
    return images


@lru_cache(maxsize=None)
def _instantiate_cached(
    template_id: str, c1: int, c2: int, c3: int, t1: int, t2: int
) -> TemplateInstance:
    layout = petersen_superedge()
    m = layout.multipole
    data, chain = template_registry()[template_id]
    k = sorted(set(COLORS) - {c1, c2, c3})
    if template_id in R_FAMILY:
        pi = _as_perm({1: c1, 2: c2, 3: c3, 4: k[0], 5: k[1]})
        inst_data = permute_colors(data, pi)
        chain_cols = (pi[data[chain[0]]], pi[data[chain[1]]])
    else:
        if {t1, t2} == set(k):
            pi = _as_perm({1: c1, 2: c2, 3: c3, 4: t1, 5: t2})
            inst_data = permute_colors(data, pi)
        elif (t1, t2) in ((c1, c3), (c3, c1)):
            target = (1, 3) if (t1, t2) == (c1, c3) else (3, 1)
            rebound = dict(data)
            for x in chain:
                rebound[x] = target[0] if data[x] == 4 else target[1]
            pi = _as_perm({1: c1, 2: c2, 3: c3, 4: k[0], 5: k[1]})
            inst_data = permute_colors(rebound, pi)
        else:
            raise ValueError(
                f"chain colors {(t1, t2)} must be the complement pair of "
                f"{(c1, c2, c3)} or drawn from {{c1,c3}}"
            )
        chain_cols = (t1, t2)
    inst = TemplateInstance(template_id, (c1, c2, c3), chain_cols, inst_data, chain)
    problems = validate_instance(inst)
    if problems:
        # canonical data is already oracle-derived, so this means the contract
        # itself is inconsistent; fail loudly instead of guessing
        log.error("template %s%s failed validation: %s", template_id, (c1, c2, c3), problems)
        raise ContractViolation(f"{template_id}{(c1, c2, c3)}: {problems}")
    return inst


def template(template_id: str, c1: int, c2: int, c3: int,
             chain_colors: Optional[Tuple[int, int]] = None) -> TemplateInstance:
    """A validated template instance with the given color parameters."""
    if template_id not in ALL_TEMPLATE_IDS:
        raise KeyError(f"unknown template {template_id}")
    if len({c1, c2, c3}) != 3:
        raise ValueError(f"color arguments must be distinct, got {(c1, c2, c3)}")
    if template_id in R_FAMILY:
        t1, t2 = 0, 0  # unused
    else:
        if chain_colors is None:
            k = sorted(set(COLORS) - {c1, c2, c3})
            chain_colors = (k[0], k[1])
        t1, t2 = chain_colors
        if t1 == t2:
            raise ValueError("chain colors must differ")
    return _instantiate_cached(template_id, c1, c2, c3, t1, t2)


def validate_instance(inst: TemplateInstance) -> List[str]:
    """Machine check of a template against its declared contract."""
    layout = petersen_superedge()
    m = layout.multipole
    problems: List[str] = []
    if not is_normal(m, inst.coloring):
        problems.append("not normal")
        return problems
    if inst.family == "R":
        used = set(inst.coloring.values())
        if used != set(inst.params):
            problems.append(f"R-family must use exactly its three colors, uses {sorted(used)}")
        if poor_count(m, inst.coloring) != 9:
            problems.append("R-family must have exactly 9 poor edges")
        # the chain joins L1 to L3, or L1 to L2 for the I-variants
        want_ends = {"L1", "L2"} if inst.template_id.endswith("_I") else {"L1", "L3"}
    else:
        want_ends = {"L2", "L3"}
    start, end = inst.chain[0], inst.chain[-1]
    if {start, end} != want_ends:
        problems.append(f"chain joins {start},{end}, expected {sorted(want_ends)}")
    elif inst.coloring[start] not in inst.chain_colors:
        problems.append("declared chain colors do not match the chain")
    else:
        chain, terminal = find_kempe_chain(m, inst.coloring, start, inst.chain_colors)
        if terminal != end or set(chain) != set(inst.chain):
            problems.append(f"no {inst.chain_colors}-chain connecting {start} and {end}")
    return problems


# -- sigma-colored bindings and the two boundary predicates ----------------


def sigma_color(template_id: str, ctx: SlotContext, pair_left: bool = False) -> TemplateInstance:
    """Bind a template's color parameters to the base coloring around a slot.

    R-family: (c1,c2,c3) = (edge, prev_edge, leg) at the slot.
    L-family as the left member of a conjoined pair (ctx is the pair context
    at the right slot): (c1,c2,c3) = (edge, prev_edge, leg) with the chain
    bound to (prev2_edge, prev_leg).
    L-family standalone at its own slot: c2 = edge, chain = (prev_edge, leg),
    and (c1,c3) come from the forward values, defaulting to the complement
    pair when the context does not carry them.
    """
    if template_id in R_FAMILY:
        return template(template_id, ctx.edge, ctx.prev_edge, ctx.leg)
    if pair_left:
        return template(
            template_id, ctx.edge, ctx.prev_edge, ctx.leg, (ctx.prev2_edge, ctx.prev_leg)
        )
    if ctx.next_edge is not None and ctx.next_leg is not None:
        c1, c3 = ctx.next_edge, ctx.next_leg
    else:
        c1, c3 = ctx.complement_pair()
    return template(template_id, c1, ctx.edge, c3, (ctx.prev_edge, ctx.leg))


def is_right_monochromatic(inst_or_coloring, ctx: SlotContext) -> bool:
    """All three right schemes consistent with (edge, {prev_edge, leg})."""
    layout = petersen_superedge()
    coloring = getattr(inst_or_coloring, "coloring", inst_or_coloring)
    want = ColorScheme(ctx.edge, frozenset({ctx.prev_edge, ctx.leg}))
    return all(
        schemes_consistent(scheme_of(layout.multipole, coloring, s), want)
        for s in layout.right
    )


def is_left_compatible(inst_or_coloring, ctx: SlotContext, dock: int) -> bool:
    """The three-clause left-side contract at the given dock.

    (a) dock scheme consistent with (edge, {prev_edge, leg});
    (b) the other two schemes consistent with (prev_edge, {edge, leg});
    (c) a (prev_edge, leg)-chain joins the two non-dock left semiedges, and
        swapping it turns both their leads into `leg` while staying normal.
    """
    layout = petersen_superedge()
    m = layout.multipole
    coloring = getattr(inst_or_coloring, "coloring", inst_or_coloring)
    if dock not in (1, 2, 3):
        raise ValueError(f"dock must be 1..3, got {dock}")
    dock_sem = layout.left_sem(dock)
    others = [s for s in layout.left if s != dock_sem]
    want_dock = ColorScheme(ctx.edge, frozenset({ctx.prev_edge, ctx.leg}))
    if not schemes_consistent(scheme_of(m, coloring, dock_sem), want_dock):
        return False
    want_other = ColorScheme(ctx.prev_edge, frozenset({ctx.edge, ctx.leg}))
    if not all(schemes_consistent(scheme_of(m, coloring, s), want_other) for s in others):
        return False
    cs = (ctx.prev_edge, ctx.leg)
    if coloring[others[0]] not in cs:
        return False
    chain, terminal = find_kempe_chain(m, coloring, others[0], cs)
    if terminal != others[1]:
        return False
    try:
        swapped = kempe_swap(m, coloring, chain, cs)
    except ValueError:
        return False
    if not is_normal(m, swapped):
        return False
    return all(scheme_of(m, swapped, s).lead == ctx.leg for s in others)

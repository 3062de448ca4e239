"""Extending a normal 5-edge-coloring of the base snark to a superposition.

The pipeline follows the constructive argument end to end: when every dock
is trivial the cycle is either handled by the even-length compatibility mode
or reversed (when some permutation moves index 1) or rejected as method-
inapplicable (odd length, trivial connection). Otherwise the slots are
decomposed into even-chains of dock-1 superedges, split into conjoined
pairs (the last pair of an even-run chain being the odd one), with all
remaining slots singletons. Each chunk is colored from the template
registry, chunk-leftmost colorings are Kempe-complemented at three-vertex
supervertices, the whole coloring is assembled onto the built graph, and an
independent verifier re-checks normality, the poor-edge count and exact
preservation of the off-cycle coloring.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from . import assembly
from .assembly import KIND_A, KIND_APRIME, conjugate_by_swap23, junction_role_colors
from .coloring import (
    ABNORMAL,
    Coloring,
    assert_total,
    classify_edge,
    is_normal,
    POOR,
    RICH,
)
from .petersen import (
    SlotContext,
    TemplateInstance,
    is_left_compatible,
    is_right_monochromatic,
    petersen_superedge,
    sigma_color,
    toggle_iso,
)
from .superposition import (
    Superposition,
    SuperpositionSpec,
    build,
    cycle_edge_choice,
    reversal_vertex_map,
    reverse_spec,
    validate_spec,
)

log = logging.getLogger(__name__)

SINGLETON = "singleton"
REGULAR_PAIR = "regular_pair"
ODD_PAIR = "odd_pair"


class MethodInapplicable(Exception):
    """Trivial connection along an odd cycle: the construction method does
    not apply (the paper exhibits an instance with no color-preserving
    extension, but does not prove impossibility in general)."""


class VerificationFailed(Exception):
    def __init__(self, report: "Report"):
        super().__init__("; ".join(report.problems[:5]))
        self.report = report


class InvalidInput(ValueError):
    pass


# -- cycle decomposition ----------------------------------------------------


@dataclass(frozen=True)
class Chunk:
    kind: str
    slots: Tuple[int, ...]


@dataclass(frozen=True)
class ChainDecomposition:
    chunks: Tuple[Chunk, ...]
    even_chains: Tuple[Tuple[int, ...], ...]


def decompose(docks: Sequence[int]) -> ChainDecomposition:
    """Partition slots into singletons and conjoined pairs along even-chains.

    A start superedge has dock 1 with a non-1 predecessor; its even-chain
    runs to the first end superedge (dock 1, non-1 successor), extended by
    one extra slot when that distance is even so the chain length is always
    even. Pairs are consecutive; the appended pair is the odd one.
    """
    g = len(docks)
    if all(d == 1 for d in docks):
        raise ValueError("decompose requires a non-trivial dock somewhere")
    chunks: List[Chunk] = []
    chains: List[Tuple[int, ...]] = []
    covered = set()
    for i0 in range(g):
        if not (docks[i0] == 1 and docks[(i0 - 1) % g] != 1):
            continue
        r = 0
        while docks[(i0 + r + 1) % g] == 1:
            r += 1
        length = r + 1 if r % 2 == 1 else r + 2
        chain = tuple((i0 + t) % g for t in range(length))
        chains.append(chain)
        for t in range(0, length, 2):
            pair_kind = ODD_PAIR if (r % 2 == 0 and t == r) else REGULAR_PAIR
            chunks.append(Chunk(pair_kind, (chain[t], chain[t + 1])))
        covered.update(chain)
    for i in range(g):
        if i not in covered:
            assert docks[i] != 1, "dock-1 slot escaped every even-chain"
            chunks.append(Chunk(SINGLETON, (i,)))
    chunks.sort(key=lambda c: c.slots[0])
    # partition sanity
    seen: List[int] = [s for c in chunks for s in c.slots]
    assert sorted(seen) == list(range(g)), "chunks do not partition the slots"
    return ChainDecomposition(tuple(chunks), tuple(chains))


# -- chunk coloring ---------------------------------------------------------

SINGLETON_TABLE = {
    (KIND_A, 2): "R",
    (KIND_A, 3): "R_I",
    (KIND_APRIME, 2): "Rbar",
    (KIND_APRIME, 3): "Rbar_I",
}

# odd conjoined pair (left dock 1, right dock 2), keyed by the permutation
# between the two superedges; the third entry names the color of the extra
# supervertex edge ("edge" = sigma(e_i), "leg" = sigma(f_i))
ODD_PAIR_TABLE: Dict[Tuple[int, int, int], Dict[str, Tuple[str, str, Optional[str]]]] = {
    (1, 2, 3): {KIND_A: ("L2", "Rbar", None), KIND_APRIME: ("L2", "R", "edge")},
    (1, 3, 2): {KIND_A: ("L2_I", "Rbar", None), KIND_APRIME: ("L2_I", "R", "edge")},
    (2, 1, 3): {KIND_A: ("L1", "R_I", None), KIND_APRIME: ("L1_I", "R_I", "leg")},
    (2, 3, 1): {KIND_A: ("L1_I", "R_I", None), KIND_APRIME: ("L1", "R_I", "leg")},
    (3, 1, 2): {KIND_A: ("L2_I", "Rbar", None), KIND_APRIME: ("L2_I", "R", "edge")},
    (3, 2, 1): {KIND_A: ("L2", "Rbar", None), KIND_APRIME: ("L2", "R", "edge")},
}

_UU_RULES: Dict[Optional[str], Optional[int]] = {}


def _uu_color(rule: Optional[str], ctx: SlotContext) -> Optional[int]:
    if rule is None:
        return None
    return {"edge": ctx.edge, "leg": ctx.leg, "prev_edge": ctx.prev_edge}[rule]


@dataclass(frozen=True)
class PairColoring:
    left: TemplateInstance
    right: TemplateInstance
    uu_rule: Optional[str]
    choice: Tuple[str, str, Optional[str]]


def pair_left_slot_view(ctx: SlotContext) -> SlotContext:
    """The left slot's own context inside a pair (backward values defaulted)."""
    return SlotContext(
        prev2_edge=ctx.prev_edge,
        prev_leg=ctx.prev_leg,
        prev_edge=ctx.prev2_edge,
        edge=ctx.prev_edge,
        leg=ctx.prev_leg,
    )


def _pair_ok(
    left: TemplateInstance,
    right: TemplateInstance,
    p: Tuple[int, int, int],
    dock: int,
    kind: str,
    ctx: SlotContext,
    uu_rule: Optional[str],
) -> bool:
    layout = petersen_superedge()
    if not is_right_monochromatic(right, ctx):
        return False
    if not is_left_compatible(left, pair_left_slot_view(ctx), 1):
        return False
    uu = _uu_color(uu_rule, ctx)
    if not assembly.junction_assembles(
        layout, left.coloring, right.coloring, p, dock, kind, ctx.leg, uu
    ):
        return False
    # the chunk-boundary complement must not break the internal junction
    return assembly.junction_assembles(
        layout, left.complemented().coloring, right.coloring, p, dock, kind, ctx.leg, uu
    )


def _pair_candidates(kind: str) -> List[Tuple[str, str, Optional[str]]]:
    lefts = ("L1", "L1_I", "L2", "L2_I")
    if kind == KIND_A:
        rights = ("R_I", "R", "Rbar_I", "Rbar")
        uus: Tuple[Optional[str], ...] = (None,)
    else:
        rights = ("R", "R_I", "Rbar", "Rbar_I")
        uus = ("leg", "edge", "prev_edge")
    return [(l, r, u) for l in lefts for r in rights for u in uus]


def _solve_pair(
    p: Tuple[int, int, int],
    dock: int,
    kind: str,
    ctx: SlotContext,
    preferred: Optional[Tuple[str, str, Optional[str]]],
) -> PairColoring:
    candidates: List[Tuple[str, str, Optional[str]]] = []
    if preferred is not None:
        candidates.append(preferred)
    candidates.extend(c for c in _pair_candidates(kind) if c != preferred)
    for idx, (lid, rid, uu_rule) in enumerate(candidates):
        left = sigma_color(lid, ctx, pair_left=True)
        right = sigma_color(rid, ctx)
        if _pair_ok(left, right, p, dock, kind, ctx, uu_rule):
            if preferred is not None and idx > 0:
                log.warning(
                    "pair table entry %s failed for p=%s dock=%s kind=%s; "
                    "fell back to %s", preferred, p, dock, kind, (lid, rid, uu_rule)
                )
            return PairColoring(left, right, uu_rule, (lid, rid, uu_rule))
    raise AssertionError(
        f"no template pair assembles for p={p} dock={dock} kind={kind} ctx={ctx}"
    )


_regular_choice: Dict[Tuple[Tuple[int, int, int], str], Tuple[str, str, Optional[str]]] = {}


def color_regular_pair(
    p: Tuple[int, int, int], kind: str, ctx: SlotContext
) -> PairColoring:
    """Colorings for two consecutive dock-1 superedges joined under p."""
    key = (tuple(p), kind)
    sol = _solve_pair(tuple(p), 1, kind, ctx, _regular_choice.get(key))
    _regular_choice[key] = sol.choice
    return sol


def odd_pair_choice(p: Tuple[int, int, int], dock: int, kind: str) -> Tuple[str, str, Optional[str]]:
    """Table lookup for an odd pair; dock 3 goes through the involution."""
    if dock == 2:
        return ODD_PAIR_TABLE[tuple(p)][kind]
    if dock != 3:
        raise ValueError(f"odd pair dock must be 2 or 3, got {dock}")
    lid, rid, uu = ODD_PAIR_TABLE[conjugate_by_swap23(tuple(p))][kind]
    return (toggle_iso(lid), toggle_iso(rid), uu)


def color_odd_pair(
    p: Tuple[int, int, int], dock: int, kind: str, ctx: SlotContext
) -> PairColoring:
    """Colorings for a dock-1 superedge followed by a dock-2/3 superedge."""
    return _solve_pair(tuple(p), dock, kind, ctx, odd_pair_choice(p, dock, kind))


def color_singleton(kind: str, dock: int, ctx: SlotContext) -> TemplateInstance:
    """The standalone superedge coloring for a non-trivial dock."""
    tid = SINGLETON_TABLE[(kind, dock)]
    return sigma_color(tid, ctx)


# -- the end-to-end pipeline ------------------------------------------------


@dataclass(frozen=True)
class Report:
    ok: bool
    problems: Tuple[str, ...]
    poor: int
    rich: int


@dataclass(frozen=True)
class ExtensionResult:
    coloring: Coloring
    poor: int
    rich: int
    templates: Dict[int, str]
    adjustments: Tuple[str, ...]
    used_reversal: bool
    decomposition: Optional[ChainDecomposition]


def slot_contexts(
    spec: SuperpositionSpec, sigma: Coloring
) -> List[SlotContext]:
    cycle_edges, leg_edges = cycle_edge_choice(spec)
    g = spec.g
    out = []
    for i in range(g):
        out.append(
            SlotContext(
                prev2_edge=sigma[cycle_edges[(i - 2) % g]],
                prev_leg=sigma[leg_edges[(i - 1) % g]],
                prev_edge=sigma[cycle_edges[(i - 1) % g]],
                edge=sigma[cycle_edges[i]],
                leg=sigma[leg_edges[i]],
                next_edge=sigma[cycle_edges[(i + 1) % g]],
                next_leg=sigma[leg_edges[(i + 1) % g]],
            )
        )
    return out


def extend(spec: SuperpositionSpec, sigma: Coloring) -> ExtensionResult:
    """Extend a normal coloring of the base onto the built superposition.

    Raises MethodInapplicable for the trivial connection along an odd cycle
    and VerificationFailed if the assembled coloring fails the independent
    verifier (which would indicate an internal bug).
    """
    report = validate_spec(spec)
    if not report.ok:
        raise InvalidInput(report.problems[0])
    assert_total(spec.base, sigma)
    if not is_normal(spec.base, sigma):
        raise InvalidInput("base coloring is not a normal 5-edge-coloring")

    g = spec.g
    docks = [j.d for j in spec.junctions]
    if all(d == 1 for d in docks):
        if any(j.p[0] != 1 for j in spec.junctions):
            return _extend_reversed(spec, sigma)
        if g % 2 == 1:
            raise MethodInapplicable(
                "trivial connection along an odd cycle: construction method "
                "not applicable"
            )
        chunks = tuple(Chunk(REGULAR_PAIR, (2 * k, 2 * k + 1)) for k in range(g // 2))
        decomposition = ChainDecomposition(chunks, (tuple(range(g)),))
    else:
        decomposition = decompose(docks)

    ctxs = slot_contexts(spec, sigma)
    slot_coloring: Dict[int, TemplateInstance] = {}
    templates: Dict[int, str] = {}
    uu_rules: Dict[int, Optional[str]] = {}
    adjustments: List[str] = []

    for chunk in decomposition.chunks:
        if chunk.kind == SINGLETON:
            (i,) = chunk.slots
            inst = color_singleton(spec.kinds[i], docks[i], ctxs[i])
            slot_coloring[i] = inst
            templates[i] = inst.template_id
        else:
            a, b = chunk.slots
            p = spec.junctions[a].p
            kind = spec.kinds[b]
            if chunk.kind == REGULAR_PAIR:
                sol = color_regular_pair(p, kind, ctxs[b])
            else:
                sol = color_odd_pair(p, docks[b], kind, ctxs[b])
            left = sol.left
            if spec.kinds[a] == KIND_APRIME:
                left = left.complemented()
                adjustments.append(f"complemented chain of slot {a} at its junction")
            slot_coloring[a] = left
            slot_coloring[b] = sol.right
            templates[a] = left.template_id
            templates[b] = sol.right.template_id
            uu_rules[b] = sol.uu_rule

    pair_right_slots = set(uu_rules)
    sp = build(spec)
    layout = sp.layout
    col: Coloring = {}
    for e in sp.m_int.edges:
        col[e.id] = sigma[e.id]
    for i in range(g):
        col[sp.built_leg[i]] = sigma[sp.leg_edges[i]]
        inst = slot_coloring[i]
        for eid, built in sp.slot_elem[i].items():
            col[built] = inst.coloring[eid]
    for i in range(g):
        left_inst = slot_coloring[(i - 1) % g]
        right_inst = slot_coloring[i]
        if i in pair_right_slots:
            uu = _uu_color(uu_rules[i], ctxs[i])
        elif spec.kinds[i] == KIND_APRIME:
            uu = ctxs[i].edge  # boundary junction of a three-vertex supervertex
        else:
            uu = None
        roles = junction_role_colors(
            {j: left_inst.coloring[layout.right_sem(j)] for j in (1, 2, 3)},
            {j: right_inst.coloring[layout.left_sem(j)] for j in (1, 2, 3)},
            spec.junctions[(i - 1) % g].p,
            docks[i],
            spec.kinds[i],
            ctxs[i].leg,
            uu,
        )
        for role, color in roles.items():
            col[sp.junction_edges[i][role]] = color

    rep = verify_extension(sp, col, sigma)
    if not rep.ok:
        raise VerificationFailed(rep)
    return ExtensionResult(
        coloring=col,
        poor=rep.poor,
        rich=rep.rich,
        templates=templates,
        adjustments=tuple(adjustments),
        used_reversal=False,
        decomposition=decomposition,
    )


def _extend_reversed(spec: SuperpositionSpec, sigma: Coloring) -> ExtensionResult:
    """Relabel the cycle backwards, extend, and pull the coloring back."""
    rev = reverse_spec(spec)
    vmap = reversal_vertex_map(spec, rev)  # also proves the builds isomorphic
    res = extend(rev, sigma)
    fwd = build(spec)
    bwd = build(rev)
    by_pair: Dict[frozenset, List[str]] = {}
    for e in fwd.graph.edges:
        by_pair.setdefault(frozenset((e.u, e.v)), []).append(e.id)
    col: Coloring = {}
    for e in bwd.graph.edges:
        cands = by_pair[frozenset((vmap[e.u], vmap[e.v]))]
        target = e.id if e.id in cands else cands[0]
        col[target] = res.coloring[e.id]
    g = spec.g
    templates = {(g - 2 - k) % g: tid for k, tid in res.templates.items()}
    rep = verify_extension(fwd, col, sigma)
    if not rep.ok:
        raise VerificationFailed(rep)
    return ExtensionResult(
        coloring=col,
        poor=rep.poor,
        rich=rep.rich,
        templates=templates,
        adjustments=res.adjustments + ("reversed the cycle direction",),
        used_reversal=True,
        decomposition=res.decomposition,
    )


def verify_extension(sp: Superposition, col: Coloring, sigma: Coloring) -> Report:
    """Re-check everything from scratch, independent of the assembly path."""
    problems: List[str] = []
    graph = sp.graph
    want = set(graph.element_ids())
    have = set(col)
    for x in sorted(want - have):
        problems.append(f"uncolored element {x}")
    for x in sorted(have - want):
        problems.append(f"colored unknown element {x}")
    if problems:
        return Report(False, tuple(problems), 0, 0)
    for v in graph.vertices:
        elems = graph.elements_at(v)
        if len({col[x] for x in elems}) != len(elems):
            problems.append(f"improper at {v}")
    poor = rich = 0
    for e in graph.edges:
        cls = classify_edge(graph, col, e.id)
        if cls == ABNORMAL:
            problems.append(f"abnormal edge {e.id}")
        elif cls == POOR:
            poor += 1
        else:
            rich += 1
    for e in sp.m_int.edges:
        if col[e.id] != sigma[e.id]:
            problems.append(f"off-cycle edge {e.id} recolored")
    for i in range(sp.spec.g):
        if col[sp.built_leg[i]] != sigma[sp.leg_edges[i]]:
            problems.append(f"leg of slot {i} recolored")
    return Report(not problems, tuple(problems), poor, rich)

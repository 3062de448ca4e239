"""Independent brute-force ground truth.

Exact decision procedures used to validate everything else at desk scale:
3-edge-colorability of closed cubic graphs (backtracking with propagation
and a fixed-vertex symmetry reduction), bridge detection (low-link), snark
verification, and a constrained exhaustive search for normal 5-edge-colorings
of small multipoles. Searches are deterministic: solutions are produced in
lexicographic order with respect to the documented canonical element order,
so "first solution" means "lexicographically least".
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

from .coloring import COLORS, Coloring, ColorScheme, schemes_consistent
from .multipole import Multipole

DEFAULT_SIZE_GUARD = 40
GUARD_ENV = "SUPERSNARK_SIZE_GUARD"


class SizeGuardExceeded(ValueError):
    pass


def size_guard() -> int:
    raw = os.environ.get(GUARD_ENV)
    return int(raw) if raw else DEFAULT_SIZE_GUARD


def canonical_element_order(m: Multipole) -> Tuple[str, ...]:
    """Vertex-major order: sorted vertices, each vertex's unseen elements sorted.

    Lexicographic comparisons of colorings are taken along this sequence.
    """
    order: List[str] = []
    seen = set()
    for v in sorted(m.vertices):
        for x in sorted(m.elements_at(v)):
            if x not in seen:
                seen.add(x)
                order.append(x)
    for x in m.element_ids():  # isolated-edge semiedges, if any
        if x not in seen:
            seen.add(x)
            order.append(x)
    return tuple(order)


# -- bridges and 3-edge-colorability ------------------------------------


def is_bridgeless(m: Multipole) -> bool:
    """Exact bridge detection via iterative low-link; parallel edges are never bridges."""
    if not m.is_closed():
        raise ValueError("bridge check expects a closed graph")
    if not m.vertices:
        return True
    index: Dict[str, int] = {}
    low: Dict[str, int] = {}
    counter = 0
    adj: Dict[str, List[Tuple[str, str]]] = {v: [] for v in m.vertices}
    for e in m.edges:
        adj[e.u].append((e.v, e.id))
        adj[e.v].append((e.u, e.id))
    for root in m.vertices:
        if root in index:
            continue
        stack: List[Tuple[str, Optional[str], int]] = [(root, None, 0)]
        index[root] = low[root] = counter
        counter += 1
        while stack:
            v, via, i = stack.pop()
            if i < len(adj[v]):
                stack.append((v, via, i + 1))
                w, eid = adj[v][i]
                if eid == via:
                    continue
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append((w, eid, 0))
                else:
                    low[v] = min(low[v], index[w])
            elif via is not None:
                # retreating from v over `via`; find the parent on the stack top
                pv = stack[-1][0]
                if low[v] > index[pv]:
                    return False
                low[pv] = min(low[pv], low[v])
    return True


def is_three_edge_colorable(m: Multipole) -> bool:
    """Exact test by backtracking over proper 3-edge-colorings.

    At every cubic vertex the three incident edge colors must be a
    permutation of {1,2,3}; the three edges at the first vertex are
    pre-colored 1,2,3 (sound for existence, colors can be permuted).
    """
    if not m.is_closed():
        raise ValueError("3-edge-colorability expects a closed graph")
    bad = [v for v in m.vertices if m.degree(v) != 3]
    if bad:
        raise ValueError(f"not cubic at {bad[:3]}")
    if not m.edges:
        return True

    edge_ids = [e.id for e in m.edges]
    eidx = {eid: k for k, eid in enumerate(edge_ids)}
    ends: List[Tuple[int, int]] = []
    vidx = {v: k for k, v in enumerate(m.vertices)}
    incident: List[List[int]] = [[] for _ in m.vertices]
    for e in m.edges:
        ends.append((vidx[e.u], vidx[e.v]))
        incident[vidx[e.u]].append(eidx[e.id])
        incident[vidx[e.v]].append(eidx[e.id])

    # BFS edge order from the first vertex keeps the colored region connected
    order: List[int] = []
    seen_e = [False] * len(edge_ids)
    seen_v = [False] * len(m.vertices)
    queue = [0]
    seen_v[0] = True
    while queue:
        v = queue.pop(0)
        for k in incident[v]:
            if not seen_e[k]:
                seen_e[k] = True
                order.append(k)
                a, b = ends[k]
                w = b if a == v else a
                if not seen_v[w]:
                    seen_v[w] = True
                    queue.append(w)
    if len(order) != len(edge_ids):  # disconnected: color components independently
        for k in range(len(edge_ids)):
            if not seen_e[k]:
                seen_e[k] = True
                order.append(k)

    color = [0] * len(edge_ids)
    for fixed, k in enumerate(incident[0]):
        color[k] = fixed + 1
    pre = set(incident[0])
    todo = [k for k in order if k not in pre]

    def allowed(k: int) -> List[int]:
        a, b = ends[k]
        used = {color[x] for x in incident[a] if color[x]}
        used |= {color[x] for x in incident[b] if color[x]}
        return [c for c in (1, 2, 3) if c not in used]

    def bt(i: int) -> bool:
        if i == len(todo):
            return True
        k = todo[i]
        for c in allowed(k):
            color[k] = c
            if bt(i + 1):
                return True
            color[k] = 0
        return False

    # check the seed vertex itself is consistent (parallel edges at v0)
    if len({color[k] for k in incident[0]}) != 3:
        return False
    return bt(0)


def check_snark(m: Multipole) -> bool:
    """Bridgeless and not 3-edge-colorable (the broad snark definition)."""
    return is_bridgeless(m) and not is_three_edge_colorable(m)


# -- constrained normal-coloring search ----------------------------------


@dataclass(frozen=True)
class BoundaryConstraint:
    """Declarative restrictions for the normal-coloring search.

    fixed: exact colors per element.
    allowed: per-element color menus (defaults to 1..5).
    schemes_exact: semiedge id -> required scheme, compared for equality.
    schemes_consistent: semiedge id -> scheme the actual one must be
        consistent with (equal leads, equal or complementary pairs).
    filters: predicates applied to complete candidate colorings, in order.
    """
    fixed: Dict[str, int] = field(default_factory=dict)
    allowed: Dict[str, FrozenSet[int]] = field(default_factory=dict)
    schemes_exact: Dict[str, ColorScheme] = field(default_factory=dict)
    schemes_consistent: Dict[str, ColorScheme] = field(default_factory=dict)
    filters: Tuple[Callable[[Coloring], bool], ...] = ()


def iter_normal_colorings(
    m: Multipole, bc: Optional[BoundaryConstraint] = None
) -> Iterator[Coloring]:
    """Yield normal 5-edge-colorings satisfying the constraint, lex-ascending.

    Properness is enforced as elements are placed; normality of an edge is
    checked as soon as all six elements around it are colored; scheme
    requirements are checked once the semiedge's vertex is saturated.
    """
    bc = bc or BoundaryConstraint()
    n_elems = len(m.element_ids())
    if n_elems > size_guard():
        raise SizeGuardExceeded(
            f"{n_elems} colorable elements exceed the exact-search guard "
            f"({size_guard()}); set {GUARD_ENV} to override"
        )

    order = canonical_element_order(m)
    pos = {x: k for k, x in enumerate(order)}
    menus: List[Tuple[int, ...]] = []
    for x in order:
        menu = bc.allowed.get(x, frozenset(COLORS))
        if x in bc.fixed:
            menu = menu & {bc.fixed[x]}
        menus.append(tuple(sorted(menu)))

    vert_elems = {v: m.elements_at(v) for v in m.vertices}
    # for each element, the edges whose full neighborhood it completes checking for
    edge_near: Dict[str, List[Tuple[str, str]]] = {x: [] for x in order}
    for e in m.edges:
        near = set(vert_elems[e.u]) | set(vert_elems[e.v])
        last = max(near, key=lambda x: pos[x])
        edge_near[last].append((e.u, e.v))
    scheme_at: Dict[str, List[str]] = {x: [] for x in order}
    for sid in list(bc.schemes_exact) + list(bc.schemes_consistent):
        s = m.semiedge(sid)
        if s.vertex is None:
            raise ValueError(f"scheme constraint on isolated-edge semiedge {sid}")
        last = max(vert_elems[s.vertex], key=lambda x: pos[x])
        scheme_at[last].append(sid)

    color: Coloring = {}

    def vertex_ok(v: str) -> bool:
        cs = [color[x] for x in vert_elems[v] if x in color]
        return len(cs) == len(set(cs))

    def edge_ok(u: str, v: str) -> bool:
        union = {color[x] for x in vert_elems[u]} | {color[x] for x in vert_elems[v]}
        return len(union) != 4

    def scheme_ok(sid: str) -> bool:
        s = m.semiedge(sid)
        others = [color[x] for x in vert_elems[s.vertex] if x != sid]
        actual = ColorScheme(color[sid], frozenset(others))
        want = bc.schemes_exact.get(sid)
        if want is not None and actual != want:
            return False
        want = bc.schemes_consistent.get(sid)
        if want is not None and not schemes_consistent(actual, want):
            return False
        return True

    def place(k: int) -> Iterator[Coloring]:
        if k == len(order):
            cand = dict(color)
            if all(f(cand) for f in bc.filters):
                yield cand
            return
        x = order[k]
        for c in menus[k]:
            color[x] = c
            if all(vertex_ok(v) for v in m.edge_ends(x)):
                if all(edge_ok(u, v) for u, v in edge_near[x]) and all(
                    scheme_ok(s) for s in scheme_at[x]
                ):
                    yield from place(k + 1)
            del color[x]

    yield from place(0)


def search_normal_coloring(
    m: Multipole, bc: Optional[BoundaryConstraint] = None
) -> Optional[Coloring]:
    """Lexicographically least normal coloring satisfying bc, or None."""
    for sol in iter_normal_colorings(m, bc):
        return sol
    return None


def derive_template(m: Multipole, bc: BoundaryConstraint) -> Optional[Coloring]:
    """Contract-driven template supplier: alias of the constrained search."""
    return search_normal_coloring(m, bc)


def find_normal_coloring(m: Multipole) -> Optional[Coloring]:
    """Lex-least normal 5-edge-coloring of a small closed graph, or None."""
    if len(m.vertices) > 30:
        raise SizeGuardExceeded(
            f"{len(m.vertices)} vertices exceed the exact normal-coloring guard (30)"
        )
    return search_normal_coloring(m)

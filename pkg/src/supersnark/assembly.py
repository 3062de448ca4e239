"""Gluing two superedge colorings across a supervertex junction.

The junction between consecutive superedges identifies right semiedge j of
the left superedge with left semiedge p(j) of the right one. The identified
edge whose left-connector index equals the dock is subdivided by the main
supervertex vertex u, which also carries the leg edge; with the three-vertex
supervertex the two remaining identified edges are subdivided as well and the
two subdividing vertices are joined by one extra edge.

These helpers build the two-superedge multipole once per junction shape and
color it from two template colorings, so lemma-level claims can be checked by
the one generic normality verifier.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Optional, Tuple

from .coloring import Coloring, is_normal
from .multipole import Connector, Edge, Multipole, Semiedge

KIND_A = "A"
KIND_APRIME = "Aprime"
KINDS = (KIND_A, KIND_APRIME)

Role = Tuple[str, ...]


class AssemblyMismatch(ValueError):
    """The two facing semiedge colors disagree on an identified edge."""


def perm_apply(p: Tuple[int, int, int], j: int) -> int:
    return p[j - 1]


def perm_inverse(p: Tuple[int, int, int]) -> Tuple[int, int, int]:
    inv = [0, 0, 0]
    for j in (1, 2, 3):
        inv[p[j - 1] - 1] = j
    return (inv[0], inv[1], inv[2])


def conjugate_by_swap23(p: Tuple[int, int, int]) -> Tuple[int, int, int]:
    """The permutation seen after relabeling indices 2 and 3 on both sides."""
    sw = {1: 1, 2: 3, 3: 2}
    out = [0, 0, 0]
    for j in (1, 2, 3):
        out[sw[j] - 1] = sw[p[j - 1]]
    return (out[0], out[1], out[2])


def junction_role_colors(
    left_right_colors: Dict[int, int],
    right_left_colors: Dict[int, int],
    p: Tuple[int, int, int],
    dock: int,
    kind: str,
    f_color: int,
    uu_color: Optional[int],
) -> Dict[Role, int]:
    """Colors of the junction edges, keyed by structural role.

    left_right_colors: j -> color of the left superedge's right semiedge j.
    right_left_colors: j -> color of the right superedge's left semiedge j.
    Raises AssemblyMismatch when a non-subdivided identified edge would need
    two different colors.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown supervertex kind {kind}")
    jstar = perm_inverse(p)[dock - 1]
    out: Dict[Role, int] = {
        ("dock_z",): left_right_colors[jstar],
        ("dock_w",): right_left_colors[dock],
        ("f",): f_color,
    }
    for j in (1, 2, 3):
        if j == jstar:
            continue
        a = left_right_colors[j]
        b = right_left_colors[perm_apply(p, j)]
        if kind == KIND_A:
            if a != b:
                raise AssemblyMismatch(
                    f"identified edge {j}->{perm_apply(p, j)} colored {a} vs {b}"
                )
            out[("ident", str(j))] = a
        else:
            out[("sub_z", str(j))] = a
            out[("sub_w", str(j))] = b
    if kind == KIND_APRIME:
        if uu_color is None:
            raise ValueError("three-vertex supervertex needs a color for the extra edge")
        out[("uu",)] = uu_color
    return out


@dataclass(frozen=True)
class PairStructure:
    """Two superedge copies glued through one junction, with role handles."""
    multipole: Multipole
    left_elem: Dict[str, str]   # layout element -> assembled element (kept ones)
    right_elem: Dict[str, str]
    role_edges: Dict[Role, str]


def _pair_structure(layout, p: Tuple[int, int, int], dock: int, kind: str) -> PairStructure:
    m = layout.multipole
    jstar = perm_inverse(p)[dock - 1]
    vertices = [f"Lv.{v}" for v in m.vertices] + [f"Rv.{v}" for v in m.vertices] + ["u"]
    nondock = [j for j in (1, 2, 3) if j != jstar]
    sub_vertex = {}
    if kind == KIND_APRIME:
        for k, j in enumerate(sorted(nondock)):
            sub_vertex[j] = f"x{k + 1}"
        vertices += [sub_vertex[j] for j in sorted(nondock)]

    edges = []
    left_elem: Dict[str, str] = {}
    right_elem: Dict[str, str] = {}
    for e in m.edges:
        edges.append(Edge(f"Le.{e.id}", f"Lv.{e.u}", f"Lv.{e.v}"))
        left_elem[e.id] = f"Le.{e.id}"
        edges.append(Edge(f"Re.{e.id}", f"Rv.{e.u}", f"Rv.{e.v}"))
        right_elem[e.id] = f"Re.{e.id}"
    semis = []
    for sid in layout.left:
        semis.append(Semiedge(f"Ls.{sid}", f"Lv.{layout.semi_vertex[sid]}"))
        left_elem[sid] = f"Ls.{sid}"
    for sid in layout.right:
        semis.append(Semiedge(f"Rs.{sid}", f"Rv.{layout.semi_vertex[sid]}"))
        right_elem[sid] = f"Rs.{sid}"
    semis.append(Semiedge("J.f", "u"))

    role_edges: Dict[Role, str] = {}

    def zv(j: int) -> str:
        return f"Lv.{layout.semi_vertex[layout.right_sem(j)]}"

    def wv(j: int) -> str:
        return f"Rv.{layout.semi_vertex[layout.left_sem(j)]}"

    def add(role: Role, u: str, v: str) -> None:
        eid = "J." + "_".join(role)
        role_edges[role] = eid
        edges.append(Edge(eid, u, v))

    add(("dock_z",), zv(jstar), "u")
    add(("dock_w",), "u", wv(dock))
    for j in nondock:
        if kind == KIND_A:
            add(("ident", str(j)), zv(j), wv(perm_apply(p, j)))
        else:
            add(("sub_z", str(j)), zv(j), sub_vertex[j])
            add(("sub_w", str(j)), sub_vertex[j], wv(perm_apply(p, j)))
    if kind == KIND_APRIME:
        js = sorted(nondock)
        add(("uu",), sub_vertex[js[0]], sub_vertex[js[1]])
    role_edges[("f",)] = "J.f"

    mp = Multipole(
        vertices=tuple(vertices),
        edges=tuple(edges),
        semiedges=tuple(semis),
        connectors=(
            Connector("L", tuple(f"Ls.{s}" for s in layout.left)),
            Connector("R", tuple(f"Rs.{s}" for s in layout.right)),
        ),
    )
    return PairStructure(mp, left_elem, right_elem, role_edges)


@lru_cache(maxsize=None)
def _pair_structure_cached(p: Tuple[int, int, int], dock: int, kind: str) -> PairStructure:
    from .petersen import petersen_superedge

    return _pair_structure(petersen_superedge(), p, dock, kind)


def pair_structure(p: Tuple[int, int, int], dock: int, kind: str) -> PairStructure:
    return _pair_structure_cached(tuple(p), dock, kind)


def assemble_junction(
    layout,
    left: Coloring,
    right: Coloring,
    p: Tuple[int, int, int],
    dock: int,
    kind: str,
    f_color: int,
    uu_color: Optional[int],
) -> Tuple[PairStructure, Coloring]:
    """Color the glued two-superedge multipole from two superedge colorings."""
    ps = pair_structure(tuple(p), dock, kind)
    lrc = {j: left[layout.right_sem(j)] for j in (1, 2, 3)}
    rlc = {j: right[layout.left_sem(j)] for j in (1, 2, 3)}
    roles = junction_role_colors(lrc, rlc, tuple(p), dock, kind, f_color, uu_color)
    out: Coloring = {}
    for e in layout.multipole.edges:
        out[ps.left_elem[e.id]] = left[e.id]
        out[ps.right_elem[e.id]] = right[e.id]
    for sid in layout.left:
        out[ps.left_elem[sid]] = left[sid]
    for sid in layout.right:
        out[ps.right_elem[sid]] = right[sid]
    for role, color in roles.items():
        out[ps.role_edges[role]] = color
    return ps, out


def junction_assembles(
    layout,
    left: Coloring,
    right: Coloring,
    p: Tuple[int, int, int],
    dock: int,
    kind: str,
    f_color: int,
    uu_color: Optional[int],
) -> bool:
    """True when the glued coloring exists and is normal."""
    try:
        ps, out = assemble_junction(layout, left, right, p, dock, kind, f_color, uu_color)
    except AssemblyMismatch:
        return False
    return is_normal(ps.multipole, out)

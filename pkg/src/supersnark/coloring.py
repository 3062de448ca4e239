"""Edge-coloring semantics on multipoles.

A coloring is a plain dict mapping element ids (edges and semiedges) to
colors 1..5 and must be total on its host multipole; treat colorings as
immutable. Properness is checked per vertex. An edge between vertices u, v
is poor/rich/abnormal by the size of the union of the two endpoint palettes
(3/5/4); semiedges contribute to palettes but are never classified
themselves. A coloring is normal when it is proper and no edge is abnormal.
"""
from __future__ import annotations

from typing import Dict, FrozenSet, List, NamedTuple, Optional, Sequence, Tuple

from .multipole import Multipole

Coloring = Dict[str, int]

COLORS = (1, 2, 3, 4, 5)

POOR = "poor"
RICH = "rich"
ABNORMAL = "abnormal"


class ColorScheme(NamedTuple):
    lead: int
    pair: FrozenSet[int]


def assert_total(m: Multipole, sigma: Coloring) -> None:
    missing = [x for x in m.element_ids() if x not in sigma]
    if missing:
        raise ValueError(f"coloring not total, missing {missing[:5]}")
    bad = [x for x, c in sigma.items() if c not in COLORS]
    if bad:
        raise ValueError(f"colors out of range on {bad[:5]}")


def palette(m: Multipole, sigma: Coloring, v: str) -> FrozenSet[int]:
    """Set of colors incident to v."""
    return frozenset(sigma[x] for x in m.elements_at(v))


def is_proper(m: Multipole, sigma: Coloring) -> bool:
    assert_total(m, sigma)
    for v in m.vertices:
        elems = m.elements_at(v)
        if len({sigma[x] for x in elems}) != len(elems):
            return False
    return True


def classify_edge(m: Multipole, sigma: Coloring, eid: str) -> str:
    """Classify an internal edge as poor/rich/abnormal by palette union size."""
    e = m.edge(eid)  # raises on semiedges: only edges are classified
    union = palette(m, sigma, e.u) | palette(m, sigma, e.v)
    n = len(union)
    if n == 5:
        return RICH
    if n == 4:
        return ABNORMAL
    return POOR  # n <= 3 only happens below cubicity; poor by convention


def abnormal_edges(m: Multipole, sigma: Coloring) -> List[str]:
    return [e.id for e in m.edges if classify_edge(m, sigma, e.id) == ABNORMAL]


def is_normal(m: Multipole, sigma: Coloring) -> bool:
    """Proper and with no abnormal edge."""
    if not is_proper(m, sigma):
        return False
    return not abnormal_edges(m, sigma)


def poor_count(m: Multipole, sigma: Coloring) -> int:
    return sum(1 for e in m.edges if classify_edge(m, sigma, e.id) == POOR)


def rich_count(m: Multipole, sigma: Coloring) -> int:
    return sum(1 for e in m.edges if classify_edge(m, sigma, e.id) == RICH)


def scheme_of(m: Multipole, sigma: Coloring, sid: str) -> ColorScheme:
    """(color of s, other two colors at its end-vertex)."""
    s = m.semiedge(sid)
    if s.vertex is None:
        raise ValueError(f"semiedge {sid} belongs to an isolated edge, no scheme")
    others = [sigma[x] for x in m.elements_at(s.vertex) if x != sid]
    if len(others) != 2:
        raise ValueError(f"vertex {s.vertex} is not cubic")
    return ColorScheme(sigma[sid], frozenset(others))


def schemes_consistent(a: ColorScheme, b: ColorScheme) -> bool:
    """Equal leads and equal or complementary remainder pairs."""
    if a.lead != b.lead:
        return False
    complement = frozenset(COLORS) - ({b.lead} | b.pair)
    return a.pair == b.pair or a.pair == complement


def find_kempe_chain(
    m: Multipole, sigma: Coloring, start: str, colors: Tuple[int, int]
) -> Tuple[Tuple[str, ...], Optional[str]]:
    """Maximal alternating path of the two colors starting at a semiedge.

    Returns (element ids along the path, terminal semiedge id or None when
    the walk dead-ends at a vertex missing the alternate color). In a proper
    coloring each vertex holds at most one element of each color, so the walk
    is deterministic and cannot revisit a vertex.
    """
    i, j = colors
    if sigma[start] not in (i, j):
        raise ValueError(f"start semiedge color {sigma[start]} not in {colors}")
    s = m.semiedge(start)
    if s.vertex is None:
        return ((start,), None)
    path: List[str] = [start]
    prev_elem = start
    at = s.vertex
    want = j if sigma[start] == i else i
    while True:
        nxt = None
        for x in m.elements_at(at):
            if x != prev_elem and sigma[x] == want:
                nxt = x
                break
        if nxt is None:
            return (tuple(path), None)
        path.append(nxt)
        if m.is_semiedge(nxt):
            return (tuple(path), nxt)
        at = m.edge(nxt).other(at)
        prev_elem = nxt
        want = i if want == j else j


def kempe_swap(
    m: Multipole,
    sigma: Coloring,
    chain: Sequence[str],
    colors: Optional[Tuple[int, int]] = None,
) -> Coloring:
    """Exchange the two chain colors along the chain only; checks properness.

    `colors` pins the swapped pair; needed for one-element chains where the
    second color cannot be read off the chain itself.
    """
    if colors is None:
        found = sorted({sigma[x] for x in chain})
        if len(found) == 1:
            found = found * 2
        if len(found) != 2:
            raise ValueError(f"chain carries colors {found}, expected two")
        a, b = found
    else:
        a, b = colors
        off = [x for x in chain if sigma[x] not in (a, b)]
        if off:
            raise ValueError(f"chain elements {off[:3]} not colored {a}/{b}")
    out = dict(sigma)
    for x in chain:
        if x not in sigma:
            raise KeyError(f"stale chain element {x}")
        out[x] = b if sigma[x] == a else a
    if not is_proper(m, out):
        raise ValueError("kempe swap broke properness; chain was not maximal")
    return out


def permute_colors(sigma: Coloring, pi: Dict[int, int]) -> Coloring:
    """Compose a coloring with a permutation of {1..5}."""
    if sorted(pi) != list(COLORS) or sorted(pi.values()) != list(COLORS):
        raise ValueError(f"not a permutation of 1..5: {pi}")
    return {x: pi[c] for x, c in sigma.items()}


def restriction(sigma: Coloring, m: Multipole, msub: Multipole) -> Coloring:
    """Restrict a coloring of m to an induced submultipole of m.

    Kept elements keep their color; semiedges born from cut edges take the
    cut edge's color (their ids carry the source edge id).
    """
    out: Coloring = {}
    for e in msub.edges:
        if not m.has_edge_id(e.id):
            raise ValueError(f"{msub} is not induced from the host: unknown edge {e.id}")
        out[e.id] = sigma[e.id]
    for s in msub.semiedges:
        if s.id in sigma:
            out[s.id] = sigma[s.id]
        elif s.id.startswith("cut:"):
            src = s.id[len("cut:"):].rsplit("@", 1)[0]
            out[s.id] = sigma[src]
        else:
            raise ValueError(f"semiedge {s.id} unknown to the host coloring")
    return out

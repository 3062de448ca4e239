"""Input and output formats: graph6, JSON graphs/specs/colorings, DOT.

graph6 is implemented bit-exactly per the standard format (simple graphs up
to 258047 vertices, upper-triangle bits in column-major order, 6-bit groups
offset by 63, optional ">>graph6<<" header). JSON graphs allow multi-edges;
parallel edges get deterministic ids. Coloring files list edges by their
endpoint labels, so re-reading them onto a built graph needs no shared ids.
"""
from __future__ import annotations

import json
from typing import Dict, List, Optional, Sequence, Tuple

from .coloring import Coloring, classify_edge, POOR, RICH
from .multipole import Multipole, make_multipole
from .superposition import JunctionParams, SuperpositionSpec


class ParseError(ValueError):
    pass


GRAPH6_HEADER = ">>graph6<<"


def parse_graph6(text: str) -> Multipole:
    """Decode one graph6 line into a closed multipole with vertices v0..v{n-1}."""
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise ParseError("empty graph6 string")
    data = [ord(ch) - 63 for ch in s]
    if any(b < 0 or b > 63 for b in data):
        raise ParseError("graph6 byte out of range")
    if data[0] <= 62:
        n = data[0]
        body = data[1:]
    elif len(data) >= 4 and data[0] == 63 and data[1] <= 62:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        raise ParseError("unsupported graph6 size prefix")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise ParseError(f"graph6 body length {len(body)} wrong for n={n}")
    bits: List[int] = []
    for b in body:
        for k in range(5, -1, -1):
            bits.append((b >> k) & 1)
    vertices = [f"v{i}" for i in range(n)]
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((f"v{i}-v{j}", f"v{i}", f"v{j}"))
            idx += 1
    return make_multipole(vertices, edges)


def write_graph6(m: Multipole, order: Optional[Sequence[str]] = None) -> str:
    """Encode a closed simple graph as a graph6 string."""
    if not m.is_closed():
        raise ValueError("graph6 encodes closed graphs only")
    verts = list(order) if order is not None else sorted(m.vertices)
    vidx = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    pairs = set()
    for e in m.edges:
        key = (min(vidx[e.u], vidx[e.v]), max(vidx[e.u], vidx[e.v]))
        if key in pairs:
            raise ValueError("graph6 cannot encode parallel edges")
        pairs.add(key)
    if n <= 62:
        head = chr(n + 63)
    elif n <= 258047:
        head = chr(126) + chr(((n >> 12) & 63) + 63) + chr(((n >> 6) & 63) + 63) + chr((n & 63) + 63)
    else:
        raise ValueError("graph too large for this writer")
    bits: List[int] = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if (i, j) in pairs else 0)
    while len(bits) % 6:
        bits.append(0)
    body = "".join(
        chr(sum(bit << (5 - k) for k, bit in enumerate(bits[o:o + 6])) + 63)
        for o in range(0, len(bits), 6)
    )
    return head + body


def graph_from_json(obj: Dict) -> Multipole:
    """{"vertices": [...], "edges": [[a, b], ...]}; multi-edges allowed."""
    try:
        vertices = [str(v) for v in obj["vertices"]]
        raw_edges = obj["edges"]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"graph JSON needs 'vertices' and 'edges': {exc}")
    seen: Dict[Tuple[str, str], int] = {}
    edges = []
    for pair in raw_edges:
        if len(pair) != 2:
            raise ParseError(f"edge entry {pair} is not a pair")
        a, b = str(pair[0]), str(pair[1])
        key = (min(a, b), max(a, b))
        seen[key] = seen.get(key, 0) + 1
        eid = f"{key[0]}-{key[1]}" + (f"#{seen[key]}" if seen[key] > 1 else "")
        edges.append((eid, a, b))
    return make_multipole(vertices, edges)


def graph_to_json(m: Multipole) -> Dict:
    return {
        "vertices": sorted(m.vertices),
        "edges": sorted([sorted((e.u, e.v)) for e in m.edges]),
    }


def load_graph(text: str) -> Multipole:
    """Auto-detect JSON vs graph6."""
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON: {exc}")
        return graph_from_json(obj)
    lines = [ln for ln in stripped.splitlines() if ln.strip()]
    if len(lines) != 1:
        raise ParseError("expected one graph6 line or a JSON object")
    return parse_graph6(lines[0])


def spec_from_json(obj: Dict) -> SuperpositionSpec:
    """{"base": graph-JSON-or-graph6, "cycle": [...], "kinds": [...], "junctions": [...]}"""
    try:
        base_raw = obj["base"]
        cycle = tuple(str(v) for v in obj["cycle"])
        kinds = tuple(str(k) for k in obj["kinds"])
        junctions_raw = obj["junctions"]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"spec JSON missing field: {exc}")
    if isinstance(base_raw, str):
        base = parse_graph6(base_raw)
    elif isinstance(base_raw, dict):
        base = graph_from_json(base_raw)
    else:
        raise ParseError("spec 'base' must be a graph6 string or a graph object")
    junctions = []
    for j in junctions_raw:
        try:
            p = tuple(int(x) for x in j["p"])
            d = int(j["d"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad junction entry {j}: {exc}")
        try:
            junctions.append(JunctionParams(p, d))
        except ValueError as exc:
            raise ParseError(str(exc))
    return SuperpositionSpec(base=base, cycle=cycle, kinds=kinds, junctions=tuple(junctions))


def spec_to_json(spec: SuperpositionSpec) -> Dict:
    return {
        "base": graph_to_json(spec.base),
        "cycle": list(spec.cycle),
        "kinds": list(spec.kinds),
        "junctions": [{"p": list(j.p), "d": j.d} for j in spec.junctions],
    }


def coloring_to_json(m: Multipole, col: Coloring, extra: Optional[Dict] = None) -> Dict:
    """{"edges": [[labelA, labelB, color], ...], "poor": n, "rich": m, ...}"""
    entries = []
    poor = rich = 0
    normal = True
    for e in sorted(m.edges, key=lambda e: e.id):
        entries.append([e.u, e.v, col[e.id]])
        cls = classify_edge(m, col, e.id)
        if cls == POOR:
            poor += 1
        elif cls == RICH:
            rich += 1
        else:
            normal = False
    out = {"edges": entries, "poor": poor, "rich": rich, "normal": normal}
    if extra:
        out.update(extra)
    return out


def coloring_from_json(m: Multipole, obj: Dict) -> Coloring:
    """Re-attach a coloring file to a graph by endpoint labels.

    Parallel edges are matched positionally: listed colors for an endpoint
    pair are assigned to that pair's edges in sorted-id order.
    """
    try:
        entries = obj["edges"]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"coloring JSON needs 'edges': {exc}")
    groups: Dict[frozenset, List[int]] = {}
    for ent in entries:
        if len(ent) != 3:
            raise ParseError(f"coloring entry {ent} is not [a, b, color]")
        a, b, c = str(ent[0]), str(ent[1]), int(ent[2])
        groups.setdefault(frozenset((a, b)), []).append(c)
    col: Coloring = {}
    for key, colors in groups.items():
        pair = sorted(key)
        cands = sorted(m.edges_between(pair[0], pair[-1]), key=lambda e: e.id)
        if len(cands) != len(colors):
            raise ParseError(
                f"{len(colors)} colors for {len(cands)} edges between {sorted(key)}"
            )
        for e, c in zip(cands, colors):
            col[e.id] = c
    missing = [e.id for e in m.edges if e.id not in col]
    if missing:
        raise ParseError(f"coloring misses edges, e.g. {missing[:3]}")
    return col


def _dot_quote(s: str) -> str:
    return '"' + s.replace('"', '\\"') + '"'


def to_dot(m: Multipole, col: Optional[Coloring] = None, name: str = "G") -> str:
    """DOT emission; with a coloring, poor edges are drawn bold and red."""
    lines = [f"graph {name} {{", "  node [shape=point];"]
    for v in sorted(m.vertices):
        lines.append(f"  {_dot_quote(v)};")
    for e in sorted(m.edges, key=lambda e: e.id):
        attrs = []
        if col is not None:
            attrs.append(f'label="{col[e.id]}"')
            if classify_edge(m, col, e.id) == POOR:
                attrs.append("color=red")
                attrs.append("penwidth=2.0")
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f"  {_dot_quote(e.u)} -- {_dot_quote(e.v)}{suffix};")
    for s in m.semiedges:
        if s.vertex is not None:
            stub = f"stub_{s.id}"
            lines.append(f"  {_dot_quote(stub)} [style=invis];")
            attrs = f' [label="{col[s.id]}", style=dashed]' if col is not None else " [style=dashed]"
            lines.append(f"  {_dot_quote(s.vertex)} -- {_dot_quote(stub)}{attrs};")
    lines.append("}")
    return "\n".join(lines) + "\n"

"""JSON, CSV and DOT encodings."""

from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Dict, Iterable, List, Mapping, Optional, Union

from .colouring import ColouredTriangulation
from .flipgraph import Component, FlipGraph, graph_components
from .polygon import Triangulation, TriangulationError


class DataError(ValueError):
    """Input file could not be parsed; the message names the line or field."""


def _field(data: Mapping, name: str, where: str):
    if name not in data:
        raise DataError(f"{where}: field '{name}': missing")
    return data[name]


def parse_coloured(text: str, where: str = "<input>") -> ColouredTriangulation:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DataError(f"{where}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise DataError(f"{where}: expected a JSON object")
    n = _field(data, "n", where)
    diags = _field(data, "diagonals", where)
    colours = _field(data, "colours", where)
    m = data.get("m", 2)
    if not isinstance(n, int) or n < 3:
        raise DataError(f"{where}: field 'n': expected an integer >= 3, got {n!r}")
    if not isinstance(m, int) or m < 1:
        raise DataError(f"{where}: field 'm': expected an integer >= 1, got {m!r}")
    if not isinstance(diags, list) or not all(
            isinstance(d, list) and len(d) == 2 and all(isinstance(x, int) for x in d)
            for d in diags):
        raise DataError(f"{where}: field 'diagonals': expected a list of [a, b] integer pairs")
    if not isinstance(colours, list) or not all(isinstance(c, int) for c in colours):
        raise DataError(f"{where}: field 'colours': expected a list of integers")
    try:
        t = Triangulation(n, tuple(tuple(d) for d in diags))
    except TriangulationError as exc:
        raise DataError(f"{where}: field 'diagonals': {exc}") from None
    if len(colours) != n - 2:
        raise DataError(f"{where}: field 'colours': expected {n - 2} entries, got {len(colours)}")
    bad = [c for c in colours if not 0 <= c < m]
    if bad:
        raise DataError(f"{where}: field 'colours': {bad[0]} out of range 0..{m - 1}")
    return ColouredTriangulation(t, tuple(colours))


def load_coloured(path: Union[str, Path]) -> ColouredTriangulation:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise DataError(f"{path}: {exc.strerror}") from None
    return parse_coloured(text, str(path))


def dump_coloured(ct: ColouredTriangulation, m: int = 2) -> str:
    return json.dumps(ct.to_json(m), sort_keys=True) + "\n"


def dump_triangulation(t: Triangulation) -> str:
    return json.dumps(t.to_json(), sort_keys=True) + "\n"


def census_csv(hist: Mapping[int, int], header: bool = False) -> str:
    lines = ["size,count"] if header else []
    lines += [f"{s},{c}" for s, c in sorted(hist.items())]
    return "\n".join(lines) + "\n"


def census_json(hist: Mapping[int, int], n: int, m: int) -> str:
    rows = [{"size": s, "count": c} for s, c in sorted(hist.items())]
    return json.dumps({"n": n, "m": m, "census": rows}, indent=2) + "\n"


def _jsonable(x):
    if isinstance(x, float) and math.isinf(x):
        return None
    return x


def component_json(comp: Component) -> dict:
    stats = {k: _jsonable(v) for k, v in comp.stats().items()}
    return {
        "ids": comp.ids if comp.ids is not None else list(range(comp.size)),
        "members": comp.keys(),
        "edges": [list(e) for e in comp.edge_list()],
        "stats": stats,
    }


def _dot(name: str, keys: List[str], edges: Iterable[tuple]) -> str:
    out = [f"graph {name} {{"]
    for k in keys:
        out.append(f'  "{k}";')
    for u, v in edges:
        out.append(f'  "{u}" -- "{v}";')
    out.append("}")
    return "\n".join(out) + "\n"


def component_dot(comp: Component) -> str:
    keys = comp.keys()
    return _dot("component", keys, ((keys[u], keys[v]) for u, v in comp.edge_list()))


def graph_dot(graph: FlipGraph, drop_isolated: bool = False) -> str:
    keys = {}

    def key(i):
        if i not in keys:
            keys[i] = graph.node(i).key
        return keys[i]

    nodes = [key(i) for i in range(len(graph))
             if not (drop_isolated and not graph.adjacency[i])]
    edges = ((key(u), key(v)) for u in range(len(graph))
             for v in graph.adjacency[u] if u < v)
    return _dot("flipgraph", nodes, edges)


def graph_json(graph: FlipGraph, drop_isolated: bool = False) -> str:
    comps = []
    for comp in graph_components(graph):
        if drop_isolated and comp.size == 1:
            continue
        comps.append(component_json(comp))
    return json.dumps({"n": graph.n, "m": graph.scheme.m,
                       "sigma": list(graph.scheme.sigma), "components": comps}) + "\n"


def analysis_json(report: Dict) -> str:
    return json.dumps(report, indent=2) + "\n"

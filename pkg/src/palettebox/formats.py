"""JSON and DOT serialization plus the tiny graph-spec language of the CLI.

Graph JSON: {"n": int, "edges": [[u,v],...], "provenance": str?} with
edges sorted lexicographically.  Coloring JSON: {"graph": ..., "colors":
[[u,v,c],...]}.  Certificates, palette reports and torus decompositions
get their own shapes below.  Graph specs accept generator names like
"C5", "P4", "Q3", "K7", "petersen", or a path to a graph JSON file.
"""

from __future__ import annotations

import json
import os
import re
from typing import Optional

from palettebox.coloring import EdgeColoring, PaletteSummary, check_proper, palette_summary
from palettebox.graphs import Graph, build_generator, canonical_edge, petersen_graph
from palettebox.oracle import Certificate
from palettebox.torus import TorusDecomposition


def graph_to_json(graph: Graph) -> dict:
    out = {"n": graph.n, "edges": [list(e) for e in graph.edges]}
    if graph.provenance:
        out["provenance"] = graph.provenance
    return out


def graph_from_json(obj: dict) -> Graph:
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise ValueError("graph JSON needs 'n' and 'edges'")
    edges = [tuple(e) for e in obj["edges"]]
    return Graph.from_edges(int(obj["n"]), edges, obj.get("provenance", ""))


def coloring_to_json(coloring: EdgeColoring) -> dict:
    return {
        "graph": graph_to_json(coloring.graph),
        "colors": [[u, v, c] for (u, v), c in zip(coloring.graph.edges, coloring.colors)],
    }


def coloring_from_json(obj: dict, graph: Optional[Graph] = None) -> EdgeColoring:
    if graph is None:
        graph = graph_from_json(obj["graph"])
    mapping = {canonical_edge(u, v): c for u, v, c in obj["colors"]}
    return EdgeColoring.from_map(graph, mapping)


def palettes_to_json(summary: PaletteSummary) -> dict:
    return {
        "palettes": [sorted(p) for p in summary.distinct],
        "count": summary.count,
        "perVertex": {str(v): sorted(summary.palette_of(v))
                      for v in range(len(summary.per_vertex))},
    }


def certificate_to_json(cert: Certificate) -> dict:
    return {
        "lower": cert.lower,
        "upper": cert.upper,
        "exact": cert.exact,
        "rule": cert.rule,
        "witness": coloring_to_json(cert.witness) if cert.witness is not None else None,
    }


def torus_to_json(dec: TorusDecomposition) -> dict:
    z_sets = [[[e.kind, e.j, e.k] for e in walk] for walk in dec.z_sets]
    classes = [sorted(i for i in range(dec.t) if dec.class_of_walk(i) == c)
               for c in range(3)]
    return {"s": dec.s, "t": dec.t, "ell": dec.ell, "shift": dec.shift,
            "zSets": z_sets, "classes": classes}


def dump_json(obj, path: Optional[str] = None) -> str:
    text = json.dumps(obj, indent=2, sort_keys=True)
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    return text


_GENERATOR_SPEC = re.compile(r"^([PCKQ])(\d+)$", re.IGNORECASE)
_KIND = {"P": "path", "C": "cycle", "K": "complete", "Q": "hypercube"}


def parse_graph_spec(spec: str) -> Graph:
    """Turn "C5"/"P4"/"K7"/"Q3"/"petersen" or a JSON file path into a Graph."""
    spec = spec.strip()
    if spec.lower() == "petersen":
        return petersen_graph()
    m = _GENERATOR_SPEC.match(spec)
    if m:
        return build_generator(_KIND[m.group(1).upper()], int(m.group(2)))
    if os.path.exists(spec):
        with open(spec) as fh:
            return graph_from_json(json.load(fh))
    raise ValueError(
        f"unrecognized graph spec {spec!r}: use P<n>, C<n>, K<n>, Q<r>, petersen,"
        " or a path to a graph JSON file")


# fixed pen colors and line styles so figures are reproducible
_PEN_COLORS = (
    "#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e", "#e6ab02",
    "#a6761d", "#666666", "#1f78b4", "#b2182b", "#542788", "#35978f",
)
_STYLES = ("solid", "dashed", "dotted", "bold")


def default_style_map(colors) -> dict[int, tuple[str, str]]:
    """Assign each color index a (pen color, line style) pair, stably."""
    out = {}
    for i, c in enumerate(sorted(set(colors))):
        out[c] = (_PEN_COLORS[i % len(_PEN_COLORS)], _STYLES[i % len(_STYLES)])
    return out


def export_dot(coloring: EdgeColoring,
               style_map: Optional[dict[int, tuple[str, str]]] = None,
               name: str = "G") -> str:
    """Render a proper coloring as DOT with per-color edge styling."""
    ok, witness = check_proper(coloring)
    if not ok:
        v, e1, e2 = witness
        raise ValueError(f"improper coloring: edges {e1} and {e2} share a color at vertex {v}")
    if style_map is None:
        style_map = default_style_map(coloring.colors)
    lines = [f'graph "{name}" {{']
    for (u, v), c in zip(coloring.graph.edges, coloring.colors):
        pen, style = style_map[c]
        lines.append(f'  {u} -- {v} [label={c}, color="{pen}", style={style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def class_coloring(dec: TorusDecomposition) -> EdgeColoring:
    """Label every torus edge by its walk class (1..3) for figure export.

    Not proper in the edge-coloring sense; only used for styling, so the
    DOT export below bypasses the properness gate on purpose.
    """
    mapping = {}
    for i, walk in enumerate(dec.z_sets):
        c = dec.class_of_walk(i) + 1
        for e in walk:
            mapping[e.undirected(dec.s, dec.t)] = c
    return EdgeColoring.from_map(dec.graph, mapping)


def export_class_dot(dec: TorusDecomposition, name: str = "torus") -> str:
    """DOT of the even cycle decomposition, one line style per class."""
    col = class_coloring(dec)
    style_map = default_style_map(col.colors)
    lines = [f'graph "{name}" {{']
    for (u, v), c in zip(col.graph.edges, col.colors):
        pen, style = style_map[c]
        lines.append(f'  {u} -- {v} [label={c}, color="{pen}", style={style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"

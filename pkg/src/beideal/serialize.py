"""Graph ingestion and canonical report serialization.

Two input formats are supported.  The edge-list format is a line per edge
after a leading vertex count, with ``#`` comments::

    4          # vertex count
    1 2
    1 3
    1 4

The structured format is a JSON object ``{"n": ..., "edges": [[u, v], ...]}``
with an optional ``"name"``.  Both round-trip losslessly, and every emitted
document has a fixed field order so repeated runs are byte-identical.
"""

from __future__ import annotations

import json
from typing import Any, Optional

from .classify import ClassificationReport
from .errors import GraphInputError
from .graphs import Graph, build_graph
from .ideals import Decomposition

FORMATS = ("edgelist", "structured")


def parse_graph(data: str | bytes, fmt: str = "edgelist") -> Graph:
    """Parse a graph from text in the given format, with precise errors."""
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    if fmt == "edgelist":
        return _parse_edgelist(data)
    if fmt == "structured":
        return _parse_structured(data)
    raise GraphInputError(f"unknown graph format {fmt!r}; expected one of {FORMATS}")


def _parse_edgelist(text: str) -> Graph:
    n: Optional[int] = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 1:
                raise GraphInputError(
                    f"line {lineno}: expected the vertex count alone, got {line!r}"
                )
            n = _int_field(fields[0], lineno)
            continue
        if len(fields) != 2:
            raise GraphInputError(
                f"line {lineno}: expected an edge 'u v', got {line!r}"
            )
        edges.append((_int_field(fields[0], lineno), _int_field(fields[1], lineno)))
    if n is None:
        raise GraphInputError("empty input: the first line must hold the vertex count")
    try:
        return build_graph(n, edges)
    except GraphInputError as exc:
        raise GraphInputError(f"invalid edge list: {exc}") from None


def _int_field(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphInputError(f"line {lineno}: {token!r} is not an integer") from None


def _parse_structured(text: str) -> Graph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphInputError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise GraphInputError("structured input must be a JSON object")
    unknown = set(doc) - {"n", "edges", "name"}
    if unknown:
        raise GraphInputError(f"unknown fields in graph document: {sorted(unknown)}")
    if "n" not in doc or "edges" not in doc:
        raise GraphInputError("graph document needs both 'n' and 'edges'")
    n = doc["n"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise GraphInputError(f"'n' must be an integer, got {n!r}")
    raw_edges = doc["edges"]
    if not isinstance(raw_edges, list):
        raise GraphInputError("'edges' must be an array of pairs")
    edges: list[tuple[int, int]] = []
    for idx, pair in enumerate(raw_edges):
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in pair)
        ):
            raise GraphInputError(f"edges[{idx}] must be a pair of integers, got {pair!r}")
        edges.append((pair[0], pair[1]))
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise GraphInputError(f"'name' must be a string, got {name!r}")
    return build_graph(n, edges)


def graph_to_edgelist(graph: Graph, name: Optional[str] = None) -> str:
    """Serialize a graph in the edge-list format (newline-terminated)."""
    lines = []
    if name:
        lines.append(f"# {name}")
    lines.append(str(graph.n))
    lines.extend(f"{u} {v}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"


def graph_document(graph: Graph, name: Optional[str] = None) -> dict[str, Any]:
    doc: dict[str, Any] = {"n": graph.n, "edges": [list(e) for e in graph.edges]}
    if name:
        doc["name"] = name
    return doc


def graph_to_structured(graph: Graph, name: Optional[str] = None) -> str:
    """Serialize a graph as a JSON document (newline-terminated)."""
    return to_json(graph_document(graph, name))


def to_json(doc: dict[str, Any]) -> str:
    """Render a document with stable field order; output is byte-reproducible."""
    return json.dumps(doc, indent=2) + "\n"


def _family_field(report: ClassificationReport) -> Optional[dict[str, Any]]:
    if report.family is None:
        return None
    return {"kind": report.family.kind, "params": list(report.family.params)}


def classification_document(
    graph: Graph, report: ClassificationReport, name: Optional[str] = None
) -> dict[str, Any]:
    """Classification fields only, in stable order."""
    doc: dict[str, Any] = {}
    if name:
        doc["name"] = name
    doc.update(
        {
            "n": graph.n,
            "edges": [list(e) for e in graph.edges],
            "deviation": report.deviation,
            "complete_intersection": report.complete_intersection,
            "family": _family_field(report),
            "unmixed": report.unmixed,
            "cm_verdict": report.cohen_macaulay.value,
            "cm_reason": report.cm_reason,
            "reasons": list(report.reasons),
        }
    )
    return doc


def report_document(
    graph: Graph,
    decomposition: Decomposition,
    report: ClassificationReport,
    name: Optional[str] = None,
) -> dict[str, Any]:
    """Full report: cut sets, minimal primes and classification, stable order."""
    doc: dict[str, Any] = {}
    if name:
        doc["name"] = name
    doc.update(
        {
            "n": graph.n,
            "edges": [list(e) for e in graph.edges],
            "cut_sets": [list(t) for t in decomposition.cutsets],
            "components": [
                {
                    "killed": list(c.killed),
                    "blocks": [list(b) for b in c.blocks],
                    "height": c.height,
                }
                for c in decomposition.components
            ],
            "min_height": decomposition.min_height,
            "unmixed": decomposition.unmixed,
            "krull_dimension": decomposition.krull_dimension,
            "mu": decomposition.mu,
            "deviation": decomposition.deviation,
            "complete_intersection": report.complete_intersection,
            "family": _family_field(report),
            "cm_verdict": report.cohen_macaulay.value,
            "cm_reason": report.cm_reason,
            "reasons": list(report.reasons),
        }
    )
    return doc

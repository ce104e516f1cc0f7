"""
JSON encoding of instances and drawings.

Rationals travel as integer numerator/denominator pairs so that files are
bit-exact. Vertex ids are JSON object keys (strings) in ``positions`` and
``embedding``; routes are keyed ``"tail-head"``.
"""

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Sequence, Union

from ..exceptions import InstanceValidationError, ValidationReason
from .geometry import Point
from .graph import DirectedGraph, Edge, UpwardEmbedding
from .model import FullDrawing, PartialDrawing, Route, UpeInstance

PathLike = Union[str, Path]


def _malformed(message: str) -> InstanceValidationError:
    return InstanceValidationError(
        f"malformed document: {message}",
        engine_type="core",
        reason=ValidationReason.FILE_FORMAT,
    )


def fraction_pair(value: Fraction) -> List[int]:
    return [value.numerator, value.denominator]


def encode_point(p: Point) -> List[int]:
    return [p.x.numerator, p.x.denominator, p.y.numerator, p.y.denominator]


def decode_point(raw: Sequence[int]) -> Point:
    if len(raw) != 4:
        raise _malformed(f"point must be [xnum, xden, ynum, yden], got {raw!r}")
    xn, xd, yn, yd = (int(v) for v in raw)
    if xd == 0 or yd == 0:
        raise _malformed("zero denominator")
    return Point(Fraction(xn, xd), Fraction(yn, yd))


def edge_key(e: Edge) -> str:
    return f"{e[0]}-{e[1]}"


def parse_edge_key(key: str) -> Edge:
    try:
        tail, head = key.split("-")
        return (int(tail), int(head))
    except ValueError:
        raise _malformed(f"route key must be 'tail-head', got {key!r}") from None


def encode_routes(routes) -> Dict[str, List[List[int]]]:
    return {edge_key(e): [encode_point(p) for p in r] for e, r in sorted(routes.items())}


def decode_routes(raw: Dict[str, Any]) -> Dict[Edge, Route]:
    return {parse_edge_key(k): tuple(decode_point(p) for p in pts) for k, pts in raw.items()}


def embedding_from_dict(n: int, raw: Dict[str, Any]) -> UpwardEmbedding:
    succ = {int(k): v for k, v in raw.get("succ", {}).items()}
    pred = {int(k): v for k, v in raw.get("pred", {}).items()}
    return UpwardEmbedding.from_lists(n, succ, pred)


def instance_to_dict(inst: UpeInstance) -> Dict[str, Any]:
    doc: Dict[str, Any] = {
        "n": inst.n,
        "edges": [list(e) for e in inst.graph.edges],
        "H_vertices": sorted(inst.partial_vertices),
        "H_edges": [list(e) for e in sorted(inst.partial_edges)],
        "positions": {str(v): encode_point(p) for v, p in sorted(inst.drawing.vertex_pos.items())},
        "routes": encode_routes(inst.drawing.edge_routes),
    }
    if inst.embedding is not None:
        doc["embedding"] = inst.embedding.to_dict()
    return doc


def instance_from_dict(doc: Dict[str, Any]) -> UpeInstance:
    """Decode an instance document; structural problems raise InstanceValidationError"""
    try:
        n = int(doc["n"])
        graph = DirectedGraph.of(n, doc.get("edges", []))
        positions = {int(k): decode_point(v) for k, v in doc.get("positions", {}).items()}
        routes = decode_routes(doc.get("routes", {}))
        h_vertices = frozenset(int(v) for v in doc.get("H_vertices", positions.keys()))
        h_edges = frozenset((int(a), int(b)) for a, b in doc.get("H_edges", routes.keys()))
        embedding = embedding_from_dict(n, doc["embedding"]) if doc.get("embedding") else None
    except InstanceValidationError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise _malformed(str(exc)) from exc
    return UpeInstance(
        graph=graph,
        partial_vertices=h_vertices,
        partial_edges=h_edges,
        drawing=PartialDrawing(positions, routes),
        embedding=embedding,
    )


def drawing_to_dict(d: FullDrawing) -> Dict[str, Any]:
    return {
        "positions": {str(v): encode_point(p) for v, p in sorted(d.vertex_pos.items())},
        "routes": encode_routes(d.edge_routes),
    }


def drawing_from_dict(doc: Dict[str, Any]) -> FullDrawing:
    try:
        positions = {int(k): decode_point(v) for k, v in doc["positions"].items()}
        routes = decode_routes(doc["routes"])
    except InstanceValidationError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise _malformed(str(exc)) from exc
    return FullDrawing(positions, routes)


def read_json(path: PathLike) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise _malformed(f"{path}: {exc}") from exc


def write_json(doc: Any, path: PathLike) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(doc))


def dumps(doc: Any) -> str:
    """Canonical JSON text (sorted keys, trailing newline) for byte-stable files"""
    return json.dumps(doc, sort_keys=True, indent=1) + "\n"


def load_instance(path: PathLike) -> UpeInstance:
    return instance_from_dict(read_json(path))


def dump_instance(inst: UpeInstance, path: PathLike) -> None:
    write_json(instance_to_dict(inst), path)

"""
Certificates of extensibility and their checks.

A certificate fixes the vertical order of the vertices as an ordered
partition into classes V_1..V_k, each class lying on its own horizontal
line, and for every line the left-to-right order sigma_i of its vertices
and of the edges crossing it. The checks are local:

1. every edge goes from a lower class to a higher one
2. edges spanning two consecutive lines keep their order (ties only at a
   shared endpoint); asserted across every pair of lines they span
3. pinned vertices in lower classes have smaller pinned y
4. pinned vertices of one class share their pinned y
5. pinned vertices of one class appear in increasing x
6. an H-edge precedes a pinned vertex of the line iff it crosses the line
   left of it
7. two H-edges on a line with a pinned vertex appear in the order of their
   crossing points

With a prescribed embedding, an eighth check compares the order of each
vertex's outgoing (incoming) edges on the line above (below) with its
successor (predecessor) list.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple, Union

from ..core.geometry import route_x_at
from ..core.graph import Edge
from ..core.model import UpeInstance
from ..exceptions import CertificateReason, MalformedCertificateError
from ..logging import get_logger

logger = get_logger(__name__)

Element = Union[int, Edge]

EMBEDDING_CHECK = 8


@dataclass(frozen=True)
class Certificate:
    """
    Vertical classes and per-line orders.

    Attributes:
        y_assignment: Class label of every vertex, labels are 1..k
        sigma: For every class label, the left-to-right order of the line's
            vertices (ints) and crossing edges ((tail, head) tuples)
    """
    y_assignment: Mapping[int, int]
    sigma: Mapping[int, Tuple[Element, ...]]

    @property
    def class_count(self) -> int:
        return max(self.y_assignment.values(), default=0)

    def classes(self) -> List[List[int]]:
        out: List[List[int]] = [[] for _ in range(self.class_count)]
        for v, label in sorted(self.y_assignment.items()):
            out[label - 1].append(v)
        return out

    def lines(self) -> List[Tuple[Tuple[int, ...], Tuple[Element, ...]]]:
        """(class, sigma) pairs from the bottom line to the top one"""
        return [(tuple(cls), tuple(self.sigma.get(i, ()))) for i, cls in enumerate(self.classes(), start=1)]

    @classmethod
    def from_lines(cls, lines: Sequence[Tuple[Sequence[int], Sequence[Element]]]) -> "Certificate":
        """Build a certificate from (class, sigma) pairs listed bottom to top"""
        y: Dict[int, int] = {}
        sigma: Dict[int, Tuple[Element, ...]] = {}
        for i, (vertices, order) in enumerate(lines, start=1):
            for v in vertices:
                y[v] = i
            sigma[i] = tuple(order)
        return cls(y, sigma)

    def to_json(self) -> Dict[str, Any]:
        return {
            "y": {str(v): label for v, label in sorted(self.y_assignment.items())},
            "sigma": {
                str(i): [list(x) if isinstance(x, tuple) else x for x in order]
                for i, order in sorted(self.sigma.items())
            },
        }

    @classmethod
    def from_json(cls, doc: Mapping[str, Any]) -> "Certificate":
        try:
            y = {int(v): int(label) for v, label in doc["y"].items()}
            sigma = {
                int(i): tuple((int(x[0]), int(x[1])) if isinstance(x, list) else int(x) for x in order)
                for i, order in doc.get("sigma", {}).items()
            }
        except (KeyError, TypeError, ValueError, IndexError) as exc:
            raise MalformedCertificateError(
                f"malformed certificate document: {exc}",
                engine_name="oracle",
                engine_type="oracle",
                reason=CertificateReason.BAD_SIGMA,
            ) from exc
        return cls(y, sigma)


@dataclass
class CheckResult:
    """
    Outcome of check_certificate.

    ``failed_check`` is None on a pass, else 1..7 for the numbered checks
    and 8 for the embedding check.
    """
    passed: bool
    failed_check: Optional[int] = None
    detail: str = ""
    elements: Tuple[Any, ...] = field(default_factory=tuple)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "passed": self.passed,
            "failed_check": self.failed_check,
            "detail": self.detail,
            "elements": [list(e) if isinstance(e, tuple) else e for e in self.elements],
        }


def _malformed(message: str, reason: CertificateReason, element=None) -> MalformedCertificateError:
    return MalformedCertificateError(
        message, engine_name="oracle", engine_type="oracle", reason=reason, element=element,
    )


def crossing_edges(inst: UpeInstance, label: Mapping[int, int], i: int) -> List[Edge]:
    """Edges whose endpoints lie on opposite sides of line i"""
    out = []
    for u, v in inst.graph.edges:
        a, b = label[u], label[v]
        if min(a, b) < i < max(a, b):
            out.append((u, v))
    return out


def _check_shape(inst: UpeInstance, cert: Certificate) -> None:
    n = inst.n
    for v in cert.y_assignment:
        if not 0 <= v < n:
            raise _malformed(f"label for unknown vertex {v}", CertificateReason.UNKNOWN_VERTEX, v)
    for v in range(n):
        if v not in cert.y_assignment:
            raise _malformed(f"vertex {v} has no label", CertificateReason.MISSING_VERTEX, v)
    labels = set(cert.y_assignment.values())
    if labels != set(range(1, len(labels) + 1)) or max(labels, default=0) > max(n, 1):
        raise _malformed("labels must be exactly 1..k", CertificateReason.EMPTY_CLASS)
    classes = cert.classes()
    for i in range(1, len(classes) + 1):
        expected = sorted(classes[i - 1]) + sorted(crossing_edges(inst, cert.y_assignment, i))
        given = list(cert.sigma.get(i, ()))
        if len(given) != len(set(given)) or sorted(given, key=_element_key) != sorted(expected, key=_element_key):
            raise _malformed(
                f"sigma of line {i} must list its vertices and crossing edges once",
                CertificateReason.BAD_SIGMA,
                i,
            )
    extra = set(cert.sigma) - set(range(1, len(classes) + 1))
    if extra:
        raise _malformed(f"sigma for unknown line {min(extra)}", CertificateReason.BAD_SIGMA, min(extra))


def _element_key(x: Element):
    return (1, x) if isinstance(x, tuple) else (0, (x,))


def _representative(e: Edge, label: Mapping[int, int], i: int) -> Element:
    """Element of sigma_i standing for edge e (the edge or its endpoint on line i)"""
    if label[e[0]] == i:
        return e[0]
    if label[e[1]] == i:
        return e[1]
    return e


def check_certificate(inst: UpeInstance, cert: Certificate) -> CheckResult:
    """
    Run the seven checks (and the embedding check when inst has an embedding).

    Raises:
        MalformedCertificateError: the certificate does not describe the
            instance's vertices and crossing edges
    """
    _check_shape(inst, cert)
    g = inst.graph
    label = cert.y_assignment
    k = cert.class_count
    position: Dict[int, Dict[Element, int]] = {
        i: {x: p for p, x in enumerate(cert.sigma.get(i, ()))} for i in range(1, k + 1)
    }
    pos = inst.drawing.vertex_pos
    routes = inst.drawing.edge_routes
    pinned = sorted(inst.partial_vertices)

    def fail(check: int, detail: str, *elements) -> CheckResult:
        logger.debug(f"certificate fails check {check}: {detail}")
        return CheckResult(False, check, detail, tuple(elements))

    # 1
    for u, v in g.edges:
        if not label[u] < label[v]:
            return fail(1, f"edge {(u, v)} does not go upward", (u, v))

    # 2, across every pair of lines both edges span
    edges = list(g.edges)
    for a in range(len(edges)):
        e = edges[a]
        for b in range(a + 1, len(edges)):
            f = edges[b]
            lo = max(label[e[0]], label[f[0]])
            hi = min(label[e[1]], label[f[1]])
            sign = 0
            for i in range(lo, hi + 1):
                pe = position[i][_representative(e, label, i)]
                pf = position[i][_representative(f, label, i)]
                if pe == pf:
                    continue
                s = 1 if pe < pf else -1
                if sign and s != sign:
                    return fail(2, f"edges {e} and {f} swap between lines", e, f)
                sign = s

    # 3, 4
    for a in range(len(pinned)):
        u = pinned[a]
        for b in range(a + 1, len(pinned)):
            v = pinned[b]
            if label[u] != label[v]:
                lo, hi = (u, v) if label[u] < label[v] else (v, u)
                if not pos[lo].y < pos[hi].y:
                    return fail(3, f"vertices {lo} and {hi} are stacked against their pins", lo, hi)
            elif pos[u].y != pos[v].y:
                return fail(4, f"vertices {u} and {v} share a line but not a pinned y", u, v)

    # 5, 6, 7 on lines holding a pinned vertex
    for i in range(1, k + 1):
        line_pins = [v for v in cert.sigma[i] if isinstance(v, int) and v in inst.partial_vertices]
        if not line_pins:
            continue
        y = pos[line_pins[0]].y
        for u, v in zip(line_pins, line_pins[1:]):
            if not pos[u].x < pos[v].x:
                return fail(5, f"vertices {u} and {v} are out of x order", u, v)
        h_edges = [x for x in cert.sigma[i] if isinstance(x, tuple) and x in inst.partial_edges]
        cross_x: Dict[Edge, Fraction] = {e: route_x_at(routes[e], y) for e in h_edges}
        for u in line_pins:
            for e in h_edges:
                before = position[i][e] < position[i][u]
                if before != (cross_x[e] < pos[u].x):
                    return fail(6, f"H-edge {e} is on the wrong side of vertex {u}", e, u)
        for e, f in zip(h_edges, h_edges[1:]):
            if not cross_x[e] < cross_x[f]:
                return fail(7, f"H-edges {e} and {f} are out of order", e, f)

    if inst.embedding is not None:
        emb = inst.embedding
        for v in range(g.n):
            above, below = label[v] + 1, label[v] - 1
            outs = sorted(g.successors(v), key=lambda w: position[above][_representative((v, w), label, above)])
            ins = sorted(g.predecessors(v), key=lambda u: position[below][_representative((u, v), label, below)])
            if tuple(outs) != emb.succ[v]:
                return fail(EMBEDDING_CHECK, f"successor order at {v} differs from the embedding", v)
            if tuple(ins) != emb.pred[v]:
                return fail(EMBEDDING_CHECK, f"predecessor order at {v} differs from the embedding", v)

    return CheckResult(True)

"""Resolution graphs of rational surface singularities.

A dual graph is a tree of exceptional curves with self-intersection weights
at most -2 and a negative definite intersection form (diagonal = weights,
off-diagonal = 1 for adjacent curves).  The module computes fundamental
cycles by Laufer's algorithm, continued fraction expansions for cyclic
quotient singularities, ADE recognition of (-2)-subtrees, and the block
decompositions obtained by contracting a subset of (-2)-curves.

Text format for graph files ('#' starts a comment)::

    vertex 1 -2;
    vertex 2 -5;
    edge 1 2;

All arithmetic is exact (integers and fractions); no floating point.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, NamedTuple, Sequence

from .quiver import ParseError, SingcatError


class SurfaceError(SingcatError):
    pass


def intersection_matrix(
    vertices: Sequence[str],
    edges: Iterable[tuple[str, str]],
    weights: Mapping[str, int],
) -> list[list[int]]:
    index = {v: i for i, v in enumerate(vertices)}
    n = len(index)
    m = [[0] * n for _ in range(n)]
    for v in vertices:
        m[index[v]][index[v]] = weights[v]
    for u, v in edges:
        m[index[u]][index[v]] = 1
        m[index[v]][index[u]] = 1
    return m


def _leading_minors(matrix: list[list[int]]) -> list[int] | None:
    """All leading principal minors by fraction-free elimination.

    Returns None as soon as a zero minor shows up (the matrix is singular
    in some corner, hence not definite).
    """
    m = [row[:] for row in matrix]
    n = len(m)
    minors: list[int] = []
    prev = 1
    for k in range(n):
        pivot = m[k][k]
        if pivot == 0:
            return None
        minors.append(pivot)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (pivot * m[i][j] - m[i][k] * m[k][j]) // prev
        prev = pivot
    return minors


def is_negative_definite(
    vertices: Sequence[str],
    edges: Iterable[tuple[str, str]],
    weights: Mapping[str, int],
) -> bool:
    """Exact test: leading principal minors alternate in sign, starting < 0."""
    minors = _leading_minors(intersection_matrix(vertices, list(edges), weights))
    if minors is None:
        return False
    for k, d in enumerate(minors, start=1):
        if (d > 0) != (k % 2 == 0):
            return False
    return True


class DualGraph:
    """Validated resolution graph: a weighted negative definite tree."""

    def __init__(
        self,
        vertices: Sequence[str],
        edges: Iterable[tuple[str, str]],
        weights: Mapping[str, int],
    ):
        self.vertices: tuple[str, ...] = tuple(str(v) for v in vertices)
        self.edges: tuple[tuple[str, str], ...] = tuple(
            (str(u), str(v)) for u, v in edges
        )
        self.weights: dict[str, int] = {str(v): int(w) for v, w in weights.items()}
        self._validate()
        self.adjacency: dict[str, tuple[str, ...]] = {v: () for v in self.vertices}
        nbrs: dict[str, list[str]] = {v: [] for v in self.vertices}
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        self.adjacency = {v: tuple(ns) for v, ns in nbrs.items()}

    def _validate(self):
        vset = set(self.vertices)
        if len(vset) != len(self.vertices):
            raise SurfaceError(
                "duplicate vertex in dual graph",
                precondition="vertex names are distinct",
                witness={"vertices": list(self.vertices)},
            )
        if not self.vertices:
            raise SurfaceError(
                "dual graph needs at least one vertex",
                precondition="at least one exceptional curve",
            )
        seen = set()
        for u, v in self.edges:
            if u not in vset or v not in vset:
                raise SurfaceError(
                    f"edge ({u}, {v}) uses an undeclared vertex",
                    precondition="edge endpoints are declared vertices",
                    witness={"edge": [u, v]},
                )
            if u == v:
                raise SurfaceError(
                    f"self-loop at {u}",
                    precondition="the dual graph is a simple tree",
                    witness={"vertex": u},
                )
            key = frozenset((u, v))
            if key in seen:
                raise SurfaceError(
                    f"duplicate edge ({u}, {v})",
                    precondition="the dual graph is a simple tree",
                    witness={"edge": [u, v]},
                )
            seen.add(key)
        # tree: connected with |V| - 1 edges
        if len(self.edges) != len(self.vertices) - 1 or not self._connected():
            raise SurfaceError(
                "the dual graph is not a tree",
                precondition="the graph is connected and acyclic",
                witness={
                    "vertices": len(self.vertices),
                    "edges": len(self.edges),
                },
            )
        if set(self.weights) != vset:
            raise SurfaceError(
                "weights do not cover the vertex set exactly",
                precondition="every vertex has exactly one weight",
                witness={"weighted": sorted(self.weights), "vertices": sorted(vset)},
            )
        for v, w in self.weights.items():
            if w > -2:
                raise SurfaceError(
                    f"vertex {v} has weight {w}",
                    precondition="every self-intersection weight is at most -2",
                    witness={"vertex": v, "weight": w},
                )
        if not is_negative_definite(self.vertices, self.edges, self.weights):
            raise SurfaceError(
                "the intersection form is not negative definite",
                precondition="negative definite intersection form",
                witness={
                    "weights": {v: self.weights[v] for v in sorted(self.weights)}
                },
            )

    def _connected(self) -> bool:
        nbrs: dict[str, list[str]] = {v: [] for v in self.vertices}
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        stack = [self.vertices[0]]
        seen = {self.vertices[0]}
        while stack:
            for w in nbrs[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)

    def __eq__(self, other):
        return (
            isinstance(other, DualGraph)
            and self.vertices == other.vertices
            and self.edges == other.edges
            and self.weights == other.weights
        )

    def __repr__(self):
        return f"DualGraph({len(self.vertices)} vertices)"


# ---------------------------------------------------------------------------
# Laufer's algorithm


def _laufer(
    vertices: Sequence[str],
    adjacency: Mapping[str, Sequence[str]],
    weights: Mapping[str, int],
    rng: random.Random | None,
) -> dict[str, int]:
    z = {v: 1 for v in vertices}
    bound = 64 * len(vertices) + 64
    steps = 0
    while True:
        violators = [
            v
            for v in vertices
            if weights[v] * z[v] + sum(z[u] for u in adjacency[v]) > 0
        ]
        if not violators:
            return z
        pick = violators[0] if rng is None else rng.choice(violators)
        z[pick] += 1
        steps += 1
        if steps > bound:
            raise SurfaceError(
                "cycle computation did not stabilize; the intersection form "
                "is not negative definite",
                precondition="negative definite intersection form",
                witness={"iterations": steps},
            )


def fundamental_cycle(graph: DualGraph, seed: int | None = None) -> dict[str, int]:
    """Coefficients of the fundamental cycle, by Laufer's increment loop.

    The result does not depend on the choice of violated vertex; ``seed``
    randomizes that choice so callers can confirm it.
    """
    rng = None if seed is None else random.Random(seed)
    return _laufer(graph.vertices, graph.adjacency, graph.weights, rng)


def special_ranks(graph: DualGraph) -> dict[str, int]:
    """Rank of the special module attached to each curve: the fundamental
    cycle coefficient at that curve."""
    return fundamental_cycle(graph)


def canonical_syzygy_multiplicities(graph: DualGraph) -> dict[str, int]:
    """Multiplicity -2 - weight(v) for each curve (zero exactly at -2-curves)."""
    return {v: -2 - graph.weights[v] for v in graph.vertices}


@dataclass(frozen=True)
class ProjectiveInjectives:
    """Curves with weight below -2, plus the ever-present free module."""

    vertices: tuple[str, ...]
    includes_free_module: bool = True


def projective_injective_vertices(graph: DualGraph) -> ProjectiveInjectives:
    return ProjectiveInjectives(
        vertices=tuple(sorted(v for v in graph.vertices if graph.weights[v] < -2)),
        includes_free_module=True,
    )


# ---------------------------------------------------------------------------
# cyclic quotient singularities


def jung_hirzebruch(n: int, a: int) -> list[int]:
    """Ceiling continued fraction expansion of n/a.

    n/a = c1 - 1/(c2 - 1/(... - 1/ct)) with every ci >= 2; requires
    0 < a < n and gcd(n, a) = 1.
    """
    if not (isinstance(n, int) and isinstance(a, int)):
        raise SurfaceError(
            "expansion arguments must be integers",
            precondition="n and a are integers",
            witness={"n": repr(n), "a": repr(a)},
        )
    if not 0 < a < n:
        raise SurfaceError(
            f"need 0 < a < n, got n={n}, a={a}",
            precondition="0 < a < n",
            witness={"n": n, "a": a},
        )
    if gcd(n, a) != 1:
        raise SurfaceError(
            f"n and a are not coprime: gcd({n}, {a}) = {gcd(n, a)}",
            precondition="gcd(n, a) = 1",
            witness={"n": n, "a": a, "gcd": gcd(n, a)},
        )
    out: list[int] = []
    while a:
        c = -(-n // a)
        out.append(c)
        n, a = a, c * a - n
    return out


def evaluate_expansion(coefficients: Sequence[int]) -> Fraction:
    """Exact value c1 - 1/(c2 - 1/(...)) of a ceiling continued fraction."""
    if not coefficients:
        raise SurfaceError(
            "empty expansion",
            precondition="at least one coefficient",
        )
    for c in coefficients:
        if not isinstance(c, int) or c < 2:
            raise SurfaceError(
                f"invalid coefficient {c!r}",
                precondition="all coefficients are integers >= 2",
                witness={"coefficient": repr(c)},
            )
    value = Fraction(coefficients[-1])
    for c in reversed(coefficients[:-1]):
        value = c - 1 / value
    return value


def cyclic_dual_graph(n: int, a: int) -> DualGraph:
    """String of curves with weights -c1, ..., -ct from the expansion of n/a."""
    coeffs = jung_hirzebruch(n, a)
    vertices = [str(i + 1) for i in range(len(coeffs))]
    edges = [(vertices[i], vertices[i + 1]) for i in range(len(coeffs) - 1)]
    weights = {vertices[i]: -coeffs[i] for i in range(len(coeffs))}
    return DualGraph(vertices, edges, weights)


# ---------------------------------------------------------------------------
# ADE recognition and contraction decompositions


class ADEType(NamedTuple):
    family: str
    rank: int

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"


def ade_recognize(
    vertices: Sequence[str], edges: Iterable[tuple[str, str]]
) -> ADEType:
    """Recognize the shape of a connected tree of (-2)-curves.

    Paths are A_n, one degree-3 vertex with arm lengths (1, 1, k) is
    D_{k+3}, arm lengths (1, 2, 2), (1, 2, 3), (1, 2, 4) are E6, E7, E8.
    Anything else raises 'not ADE'.
    """
    vertices = [str(v) for v in vertices]
    edges = [(str(u), str(v)) for u, v in edges]
    vset = set(vertices)
    nbrs: dict[str, list[str]] = {v: [] for v in vertices}
    for u, v in edges:
        if u not in vset or v not in vset or u == v:
            raise SurfaceError(
                f"bad edge ({u}, {v})",
                precondition="edges join distinct declared vertices",
                witness={"edge": [u, v]},
            )
        nbrs[u].append(v)
        nbrs[v].append(u)
    n = len(vertices)
    if len(edges) != n - 1:
        raise SurfaceError(
            "shape is not a tree",
            precondition="the component is a tree",
            witness={"vertices": n, "edges": len(edges)},
        )
    stack, seen = [vertices[0]], {vertices[0]}
    while stack:
        for w in nbrs[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != n:
        raise SurfaceError(
            "shape is not connected",
            precondition="the component is connected",
            witness={"reached": len(seen), "vertices": n},
        )

    degrees = {v: len(nbrs[v]) for v in vertices}
    branch = [v for v in vertices if degrees[v] >= 3]
    if not branch:
        return ADEType("A", n)
    if len(branch) > 1 or degrees[branch[0]] > 3:
        raise SurfaceError(
            "not ADE: the tree is not a path or a single three-armed star",
            precondition="ADE shape",
            witness={"branch_vertices": sorted(branch)},
        )
    center = branch[0]
    arms = []
    for first in nbrs[center]:
        length = 1
        prev, cur = center, first
        while True:
            nxt = [w for w in nbrs[cur] if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    a, b, c = arms
    if (a, b) == (1, 1):
        return ADEType("D", c + 3)
    if (a, b) == (1, 2) and c in (2, 3, 4):
        return ADEType("E", c + 4)
    raise SurfaceError(
        f"not ADE: arm lengths {arms} match no Dynkin tree",
        precondition="ADE shape",
        witness={"arms": arms},
    )


@dataclass(frozen=True)
class Decomposition:
    """ADE blocks of the contraction along a set of (-2)-curves."""

    blocks: tuple[ADEType, ...]
    component_vertices: tuple[tuple[str, ...], ...]


def decompose(graph: DualGraph, contracted: Iterable[str]) -> Decomposition:
    """Connected components of the subgraph induced on ``contracted``,
    each recognized as an ADE tree.

    Every contracted vertex must be a (-2)-curve; the empty set gives the
    empty decomposition.
    """
    S = [str(v) for v in contracted]
    sset = set(S)
    if len(sset) != len(S):
        raise SurfaceError(
            "contracted set contains duplicates",
            precondition="contracted vertices are distinct",
            witness={"contracted": S},
        )
    for v in S:
        if v not in graph.weights:
            raise SurfaceError(
                f"unknown vertex {v!r} in contracted set",
                precondition="contracted vertices belong to the graph",
                witness={"vertex": v},
            )
        if graph.weights[v] != -2:
            raise SurfaceError(
                f"vertex {v} has weight {graph.weights[v]}; only (-2)-curves "
                "can be contracted",
                precondition="contracted vertices have weight -2",
                witness={"vertex": v, "weight": graph.weights[v]},
            )
    remaining = [v for v in graph.vertices if v in sset]
    seen: set[str] = set()
    pieces: list[tuple[ADEType, tuple[str, ...]]] = []
    for start in remaining:
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            for w in graph.adjacency[stack.pop()]:
                if w in sset and w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comp_vertices = tuple(v for v in graph.vertices if v in comp)
        comp_edges = [
            (u, v) for u, v in graph.edges if u in comp and v in comp
        ]
        pieces.append((ade_recognize(comp_vertices, comp_edges), comp_vertices))
    pieces.sort(key=lambda p: (p[0].family, p[0].rank, p[1]))
    return Decomposition(
        blocks=tuple(p[0] for p in pieces),
        component_vertices=tuple(p[1] for p in pieces),
    )


def all_minus_two(graph: DualGraph) -> list[str]:
    return [v for v in graph.vertices if graph.weights[v] == -2]


# ---------------------------------------------------------------------------
# text format


_VERTEX_RE = re.compile(r"^vertex\s+(\S+)\s+(-?\d+)$")
_EDGE_RE = re.compile(r"^edge\s+(\S+)\s+(\S+)$")


def parse_dual_graph(text: str) -> DualGraph:
    vertices: list[str] = []
    weights: dict[str, int] = {}
    edges: list[tuple[str, str]] = []
    line_no = 0
    for raw in text.splitlines():
        line_no += 1
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        for stmt in filter(None, (s.strip() for s in line.split(";"))):
            m = _VERTEX_RE.match(stmt)
            if m:
                name, w = m.group(1), int(m.group(2))
                if name in weights:
                    raise ParseError(f"duplicate vertex {name!r}", line_no, 1)
                vertices.append(name)
                weights[name] = w
                continue
            m = _EDGE_RE.match(stmt)
            if m:
                edges.append((m.group(1), m.group(2)))
                continue
            raise ParseError(
                f"cannot parse statement {stmt!r}; expected "
                "'vertex <id> <weight>' or 'edge <id> <id>'",
                line_no,
                1,
            )
        if line and not line.rstrip().endswith(";"):
            raise ParseError("statement is not terminated by ';'", line_no, len(raw))
    return DualGraph(vertices, edges, weights)


def serialize_dual_graph(graph: DualGraph) -> str:
    lines = [f"vertex {v} {graph.weights[v]};" for v in graph.vertices]
    lines += [f"edge {u} {v};" for u, v in graph.edges]
    return "\n".join(lines) + "\n"


def dual_graph_to_json(graph: DualGraph) -> dict:
    order = sorted(graph.vertices)
    return {
        "vertices": order,
        "weights": {v: graph.weights[v] for v in order},
        "edges": sorted(tuple(sorted(e)) for e in graph.edges),
    }

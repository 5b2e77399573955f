"""Shared fixtures and independent reference oracles for the test suite.

The oracle functions here are deliberately self-contained: they never call
into the package and use their own data representations (signs as +1/-1
integers, matrices as plain lists of Fractions), so agreement between the
library and an oracle is a genuine dual-route check rather than the same
code evaluated twice.
"""

from __future__ import annotations

from fractions import Fraction

from singcat.quiver import Presentation

# ---------------------------------------------------------------------------
# gentle presentation fixtures


def illustrative() -> Presentation:
    """Eight-vertex presentation with two critical cycles, jfe and kgh."""
    return Presentation(
        vertices=[str(i) for i in range(1, 9)],
        arrows=[
            ("a", "1", "2"),
            ("b", "2", "3"),
            ("c", "3", "4"),
            ("d", "5", "1"),
            ("e", "6", "2"),
            ("f", "2", "7"),
            ("g", "4", "7"),
            ("h", "8", "4"),
            ("j", "7", "6"),
            ("k", "7", "8"),
            ("i", "6", "5"),
        ],
        relations=[
            ("a", "b"),
            ("e", "f"),
            ("f", "j"),
            ("j", "e"),
            ("g", "k"),
            ("k", "h"),
            ("h", "g"),
        ],
    )


def lambda_n(n: int) -> Presentation:
    """Fan with a two-arrow source vertex 0 and n-1 paired two-cycles.

    Vertices 0..n; arrows g1: 0 -> 1, g2: 0 -> n, and for each rung
    i = 1..n-1 a forward arrow a_i: i -> i+1 and a backward arrow
    b_i: i+1 -> i, with both composites a_i b_i and b_i a_i zero.
    """
    vertices = [str(i) for i in range(n + 1)]
    arrows = [("g1", "0", "1"), ("g2", "0", str(n))]
    for i in range(1, n):
        arrows.append((f"a{i}", str(i), str(i + 1)))
        arrows.append((f"b{i}", str(i + 1), str(i)))
    relations = []
    for i in range(1, n):
        relations.append((f"b{i}", f"a{i}"))
        relations.append((f"a{i}", f"b{i}"))
    return Presentation(vertices, arrows, relations)


def hexagon() -> Presentation:
    """Oriented 3-cycle with every length-two composite zero."""
    return Presentation(
        vertices=["1", "2", "3"],
        arrows=[("x", "1", "2"), ("y", "2", "3"), ("z", "3", "1")],
        relations=[("x", "y"), ("y", "z"), ("z", "x")],
    )


def final_example() -> Presentation:
    """Nine-vertex presentation with cycles of lengths 1, 6 and 7."""
    arrows = [
        ("a1", "2", "3"),
        ("a2", "3", "5"),
        ("a3", "5", "6"),
        ("a4", "6", "7"),
        ("a5", "7", "1"),
        ("a6", "1", "2"),
        ("b1", "2", "3"),
        ("b2", "3", "6"),
        ("b3", "6", "7"),
        ("b4", "7", "8"),
        ("b5", "8", "9"),
        ("b6", "9", "10"),
        ("b7", "10", "2"),
        ("c", "8", "8"),
    ]
    a_cycle = [(f"a{i}", f"a{i + 1}") for i in range(1, 6)] + [("a6", "a1")]
    b_cycle = [(f"b{j}", f"b{j + 1}") for j in range(1, 7)] + [("b7", "b1")]
    return Presentation(
        vertices=["1", "2", "3", "5", "6", "7", "8", "9", "10"],
        arrows=arrows,
        relations=a_cycle + b_cycle + [("c", "c")],
    )


def loop_square() -> Presentation:
    """One loop with square zero: a single critical cycle of length 1."""
    return Presentation(["v"], [("b", "v", "v")], [("b", "b")])


def two_cycle() -> Presentation:
    """Two vertices joined both ways, both composites zero."""
    return Presentation(
        ["1", "2"],
        [("a", "1", "2"), ("b", "2", "1")],
        [("a", "b"), ("b", "a")],
    )


def two_loops_all_relations() -> Presentation:
    """Two loops with every length-two product zero; violates G3."""
    return Presentation(
        ["v"],
        [("x", "v", "v"), ("y", "v", "v")],
        [("x", "x"), ("y", "x"), ("x", "y"), ("y", "y")],
    )


def two_loops_mixed() -> Presentation:
    """Two loops with only the mixed products zero; infinite dimensional."""
    return Presentation(
        ["v"],
        [("x", "v", "v"), ("y", "v", "v")],
        [("y", "x"), ("x", "y")],
    )


def parallel_triple() -> Presentation:
    """Three parallel arrows; violates G1 at both endpoints."""
    return Presentation(
        ["1", "2"],
        [("x", "1", "2"), ("y", "1", "2"), ("z", "1", "2")],
        [],
    )


def a2_path() -> Presentation:
    """Hereditary two-vertex path; no relations, no critical cycles."""
    return Presentation(["1", "2"], [("a", "1", "2")], [])


def brute_force_critical_cycles(pres: Presentation) -> set[frozenset[str]]:
    """Cycle oracle by exhaustive search over repetition-free sequences.

    A critical cycle is a sequence of distinct arrows whose consecutive
    pairs, read cyclically in application order, are all relations.  The
    search is exponential in the number of arrows, so use it only on tiny
    presentations.
    """
    labels = [a.label for a in pres.arrows]
    rel = pres.relation_set
    found: set[frozenset[str]] = set()

    def extend(seq: list[str]) -> None:
        last = seq[-1]
        for b in labels:
            if b == seq[0] and (last, b) in rel:
                found.add(frozenset(seq))
            if b not in seq and (last, b) in rel:
                extend(seq + [b])

    for start in labels:
        extend([start])
    return found


# ---------------------------------------------------------------------------
# Hom dimension oracle for the nodal block
#
# Objects are plain tuples: ("P", s, p) is the shifted projective with sign
# s in {+1, -1} and shift p; ("S", s, l, p) is the shifted minimal string of
# length l.  The shift twist is the multiplication by (-1)**n instead of a
# parity branch.


def _twist(n: int, s: int) -> int:
    return s * (-1) ** (n % 2)


def oracle_hom(x: tuple, y: tuple) -> int:
    if x[0] == "P" and y[0] == "P":
        _, mu, p = x
        _, tau, q = y
        n = q - p
        return 1 if n <= 0 and mu == _twist(n, tau) else 0
    if x[0] == "P" and y[0] == "S":
        _, mu, p = x
        _, tau, l, q = y
        n = p - q
        return 1 if 0 <= n < l and mu == _twist(n, tau) else 0
    if x[0] == "S" and y[0] == "P":
        _, tau, l, p = x
        _, mu, q = y
        n = q - p
        return 1 if 2 <= n <= l + 1 and mu != _twist(n, tau) else 0
    _, tau, l, p = x
    _, mu, lp, q = y
    n = q - p
    if n <= 0 and 1 <= lp + n <= l and mu == _twist(n, tau):
        return 1
    if n >= 2 and 1 <= l + 2 - n <= lp and mu != _twist(n, tau):
        return 1
    return 0


def oracle_k0(sign: int, length: int, shift: int) -> tuple[int, int]:
    """Closed form for the class of a shifted string in the (plus, minus)
    basis, obtained by telescoping the alternating sum over its terms."""
    sigma = sign if length % 2 == 0 else -sign
    vec = {1: 0, -1: 0}
    vec[sign] += 1
    vec[sigma] += (-1) ** (length + 1)
    s = (-1) ** (shift % 2)
    return (s * vec[1], s * vec[-1])


def to_oracle(obj) -> tuple:
    """Convert a package-level nodal object to the oracle representation."""
    from singcat import nodal

    sign = 1 if obj.sign == nodal.PLUS else -1
    if isinstance(obj, nodal.NodalProjective):
        return ("P", sign, obj.shift)
    return ("S", sign, obj.length, obj.shift)


# ---------------------------------------------------------------------------
# negative definiteness oracle


def oracle_negative_definite(matrix: list[list[int]]) -> bool:
    """Gaussian elimination over exact fractions, no pivoting.

    A symmetric matrix is negative definite exactly when elimination
    produces a strictly negative pivot at every step; a zero or positive
    pivot disqualifies it immediately.
    """
    n = len(matrix)
    m = [[Fraction(x) for x in row] for row in matrix]
    for k in range(n):
        if m[k][k] >= 0:
            return False
        for i in range(k + 1, n):
            f = m[i][k] / m[k][k]
            for j in range(k, n):
                m[i][j] -= f * m[k][j]
    return True


# ---------------------------------------------------------------------------
# tree utilities for the exhaustive surface sweeps


def tree_shapes(n: int) -> list[list[tuple[int, int]]]:
    """Edge lists of all unlabeled trees on n vertices (nodes 0..n-1)."""
    if n == 1:
        return [[]]
    import networkx as nx

    return [
        [tuple(sorted(e)) for e in g.edges()] for g in nx.nonisomorphic_trees(n)
    ]


def adjacency_of(vertices, edges) -> dict:
    nbrs = {v: [] for v in vertices}
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    return nbrs


def violates_anti_nef(z, vertices, adjacency, weights) -> bool:
    """True when some curve meets the cycle positively."""
    return any(
        weights[v] * z[v] + sum(z[u] for u in adjacency[v]) > 0 for v in vertices
    )


# ---------------------------------------------------------------------------
# dual graph fixtures


def path_graph(weights):
    """Chain of curves 1 - 2 - ... - n carrying the given weights."""
    from singcat.surface import DualGraph

    names = [str(i + 1) for i in range(len(weights))]
    edges = [(names[i], names[i + 1]) for i in range(len(names) - 1)]
    return DualGraph(names, edges, dict(zip(names, weights)))


def star_parts(center_weight, leaf_count, leaf_weight=-2):
    """Raw (vertices, edges, weights) of a star, skipping all validation."""
    leaves = [f"l{i + 1}" for i in range(leaf_count)]
    vertices = ["c"] + leaves
    edges = [("c", leaf) for leaf in leaves]
    weights = {"c": center_weight, **{leaf: leaf_weight for leaf in leaves}}
    return vertices, edges, weights


def star_graph(center_weight, leaf_weights):
    """Validated star-shaped dual graph with center c and leaves l1, l2, ..."""
    from singcat.surface import DualGraph

    leaves = [f"l{i + 1}" for i in range(len(leaf_weights))]
    weights = {"c": center_weight}
    weights.update(dict(zip(leaves, leaf_weights)))
    return DualGraph(["c"] + leaves, [("c", leaf) for leaf in leaves], weights)


def m25_graph():
    return path_graph([-2, -5])


def g2719_graph():
    return path_graph([-2, -2, -5, -2, -2, -2])


def g5111_graph():
    return path_graph([-5, -3, -4])


def t13_graph():
    from singcat.surface import DualGraph

    vertices = [str(i) for i in range(1, 7)]
    edges = [("1", "2"), ("2", "3"), ("3", "4"), ("4", "5"), ("3", "6")]
    weights = {"1": -2, "2": -2, "3": -4, "4": -2, "5": -2, "6": -2}
    return DualGraph(vertices, edges, weights)

"""Graded quivers of dg-Auslander type for ADE configurations.

For each simply laced family and each parity of the ambient dimension there
is a graded quiver: solid arrows in degree 0, one broken arrow of degree -1
out of every vertex i, ending at the translate of i.  The differential of a
broken arrow is the mesh sum at its source, with all coefficients 1: for
every solid arrow a: i -> j it contains the composite b a, where b is the
unique solid arrow from j to the translate of i.  The quiver tables are
stored as data (vertex count, solid arrows, translation); differentials are
always recomputed from the mesh rule.

Odd parity quivers depend on the family in an irregular way (halved ranks,
ladders with a folded tail); even parity quivers are plain double quivers of
the Dynkin tree with identity translation.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .quiver import Arrow, SingcatError
from .surface import ADEType


class DGAError(SingcatError):
    pass


_PARITIES = ("even", "odd")


def knoerrer_parity(dimension: int) -> str:
    """Parity class of an ambient dimension d >= 0; periodicity two."""
    if not isinstance(dimension, int) or dimension < 0:
        raise DGAError(
            f"dimension must be a non-negative integer, got {dimension!r}",
            precondition="dimension >= 0",
            witness={"dimension": repr(dimension)},
        )
    return "even" if dimension % 2 == 0 else "odd"


def check_ade_type(ade) -> ADEType:
    if isinstance(ade, str):
        m = re.match(r"^([ADE])(\d+)$", ade)
        if not m:
            raise DGAError(
                f"cannot parse ADE type {ade!r}",
                precondition="type looks like A7, D4 or E8",
                witness={"type": ade},
            )
        ade = ADEType(m.group(1), int(m.group(2)))
    family, rank = ade
    ok = (
        (family == "A" and rank >= 1)
        or (family == "D" and rank >= 4)
        or (family == "E" and rank in (6, 7, 8))
    )
    if not ok:
        raise DGAError(
            f"no ADE diagram of type {family}{rank}",
            precondition="A_n (n>=1), D_n (n>=4) or E_6, E_7, E_8",
            witness={"family": family, "rank": rank},
        )
    return ADEType(family, rank)


@dataclass(frozen=True)
class GradedQuiver:
    """Vertices, degree-0 solid arrows, degree -1 broken arrows, translation."""

    family: str
    rank: int
    parity: str
    vertices: tuple[str, ...]
    solid: tuple[Arrow, ...]
    broken: tuple[Arrow, ...]
    translation: dict[str, str]

    def solid_from(self, vertex: str) -> list[Arrow]:
        return [a for a in self.solid if a.source == vertex]


def _alpha(i: int) -> str:
    return f"α_{i}"


def _alpha_star(i: int) -> str:
    return f"α_{i}*"


def _finish(family, rank, parity, vertices, solid, tau) -> GradedQuiver:
    names = tuple(str(v) for v in vertices)
    translation = {str(v): str(tau[v]) for v in vertices}
    broken = tuple(
        Arrow(f"ρ_{v}", str(v), translation[str(v)]) for v in vertices
    )
    solid_arrows = tuple(
        Arrow(lab, str(src), str(tgt)) for lab, src, tgt in solid
    )
    return GradedQuiver(family, rank, parity, names, solid_arrows, broken, translation)


def _pairs(edges):
    """Double quiver arrows for indexed tree edges (i, u, v)."""
    out = []
    for i, u, v in edges:
        out.append((_alpha(i), u, v))
        out.append((_alpha_star(i), v, u))
    return out


def _odd_A(n: int) -> GradedQuiver:
    if n == 1:
        tau = {1: 2, 2: 1}
        return _finish("A", 1, "odd", [1, 2], [], tau)
    if n % 2 == 0:
        m = n // 2
        vertices = list(range(1, m + 1))
        solid = _pairs([(i, i, i + 1) for i in range(1, m)])
        solid.append(("γ", m, m))
        tau = {v: v for v in vertices}
        return _finish("A", n, "odd", vertices, solid, tau)
    m = (n + 1) // 2
    vertices = list(range(1, m + 2))
    solid = _pairs([(1, 1, 3), (2, 2, 3)] + [(i, i, i + 1) for i in range(3, m + 1)])
    tau = {v: v for v in vertices}
    tau[1], tau[2] = 2, 1
    return _finish("A", n, "odd", vertices, solid, tau)


def _odd_D(n: int) -> GradedQuiver:
    if n % 2 == 1:
        m = (n - 1) // 2
        vertices = list(range(0, 4 * m - 1))
        solid = []
        for i in range(0, 4 * m - 4):
            solid.append((_alpha(i), i, i + 2))
        for i in range(0, 4 * m - 5, 2):
            solid.append((_alpha_star(i), i + 3, i))
        for i in range(1, 4 * m - 4, 2):
            solid.append((_alpha_star(i), i + 1, i))
        solid += [
            (_alpha(4 * m - 4), 4 * m - 2, 4 * m - 4),
            (_alpha_star(4 * m - 4), 4 * m - 4, 4 * m - 2),
            (_alpha(4 * m - 3), 4 * m - 3, 4 * m - 2),
            (_alpha_star(4 * m - 3), 4 * m - 2, 4 * m - 3),
        ]
        tau = {}
        for k in range(0, 2 * m - 1):
            tau[2 * k], tau[2 * k + 1] = 2 * k + 1, 2 * k
        tau[4 * m - 2] = 4 * m - 2
        return _finish("D", n, "odd", vertices, solid, tau)
    m = n // 2
    vertices = list(range(0, 4 * m))
    solid = []
    for i in range(0, 4 * m - 7, 2):
        solid.append((_alpha(i), i, i + 2))
    for i in range(1, 4 * m - 6, 2):
        solid.append((_alpha(i), i, i + 2))
    for i in range(0, 4 * m - 7, 2):
        solid.append((_alpha_star(i), i + 3, i))
    for i in range(1, 4 * m - 6, 2):
        solid.append((_alpha_star(i), i + 1, i))
    solid += [
        (_alpha_star(4 * m - 4), 4 * m - 5, 4 * m - 4),
        (_alpha(4 * m - 4), 4 * m - 4, 4 * m - 6),
        (_alpha_star(4 * m - 1), 4 * m - 6, 4 * m - 1),
        (_alpha(4 * m - 1), 4 * m - 1, 4 * m - 5),
        (_alpha(4 * m - 6), 4 * m - 6, 4 * m - 3),
        (_alpha(4 * m - 3), 4 * m - 3, 4 * m - 5),
        (_alpha(4 * m - 5), 4 * m - 5, 4 * m - 2),
        (_alpha(4 * m - 2), 4 * m - 2, 4 * m - 6),
    ]
    tau = {}
    for k in range(0, 2 * m):
        tau[2 * k], tau[2 * k + 1] = 2 * k + 1, 2 * k
    return _finish("D", n, "odd", vertices, solid, tau)


def _odd_E(n: int) -> GradedQuiver:
    if n == 6:
        vertices = list(range(1, 7))
        solid = [
            (_alpha_star(1), 3, 1),
            (_alpha_star(2), 4, 2),
            (_alpha(1), 1, 4),
            (_alpha(2), 2, 3),
            (_alpha(3), 3, 5),
            (_alpha_star(3), 5, 3),
            (_alpha(4), 4, 5),
            (_alpha_star(4), 5, 4),
            (_alpha(5), 5, 6),
            (_alpha_star(5), 6, 5),
        ]
        tau = {1: 2, 2: 1, 3: 4, 4: 3, 5: 5, 6: 6}
        return _finish("E", 6, "odd", vertices, solid, tau)
    # E7 and E8 share the ladder shape; the branch hangs off a middle rung.
    rungs = 5 if n == 7 else 6
    top = 2 * rungs + 1
    branch = (13, 14, 6, 5) if n == 7 else (15, 16, 10, 9)
    vertices = list(range(1, top + 2)) + list(branch[:2])
    solid = []
    for k in range(1, rungs + 1):
        solid.append((_alpha(2 * k - 1), 2 * k - 1, 2 * k + 2))
        solid.append((_alpha(2 * k), 2 * k, 2 * k + 1))
        solid.append((_alpha_star(2 * k - 1), 2 * k + 1, 2 * k - 1))
        solid.append((_alpha_star(2 * k), 2 * k + 2, 2 * k))
    b1, b2, down, up = branch
    solid.append((_alpha(b1), b1, down))
    solid.append((_alpha_star(b1), up, b1))
    solid.append((_alpha(b2), b2, up))
    solid.append((_alpha_star(b2), down, b2))
    tau = {}
    for k in range(1, rungs + 2):
        tau[2 * k - 1], tau[2 * k] = 2 * k, 2 * k - 1
    tau[b1], tau[b2] = b2, b1
    return _finish("E", n, "odd", vertices, solid, tau)


def _even(family: str, n: int) -> GradedQuiver:
    if family == "A":
        edges = [(i, i, i + 1) for i in range(1, n)]
    elif family == "D":
        edges = [(1, 1, 3), (2, 2, 3)] + [(i, i, i + 1) for i in range(3, n)]
    else:
        edges = [(1, 1, 4)] + [(i, i, i + 1) for i in range(2, n)]
    vertices = list(range(1, n + 1))
    tau = {v: v for v in vertices}
    return _finish(family, n, "even", vertices, _pairs(edges), tau)


def dg_auslander(ade, parity: str) -> GradedQuiver:
    """The graded quiver for an ADE type and a dimension parity."""
    ade = check_ade_type(ade)
    if parity not in _PARITIES:
        raise DGAError(
            f"unknown parity {parity!r}",
            precondition="parity is 'even' or 'odd'",
            witness={"parity": parity},
        )
    if parity == "even":
        return _even(ade.family, ade.rank)
    if ade.family == "A":
        return _odd_A(ade.rank)
    if ade.family == "D":
        return _odd_D(ade.rank)
    return _odd_E(ade.rank)


def k0_rank(quiver: GradedQuiver) -> int:
    """Rank of the Grothendieck group: one generator per vertex."""
    return len(quiver.vertices)


# ---------------------------------------------------------------------------
# mesh differential

_LABEL_RE = re.compile(r"^α_(\d+)(\*?)$")


def _label_key(label: str) -> tuple[int, int]:
    m = _LABEL_RE.match(label)
    if m:
        return (int(m.group(1)), 1 if m.group(2) else 0)
    return (10**9, 0)


def _term_key(term: tuple[str, str]):
    first, second = term
    ka, sa = _label_key(first)
    kb, sb = _label_key(second)
    if ka == kb and sa != sb:
        return (0, ka, sa)
    return (1, ka, sa, kb, sb)


def mesh_image(quiver: GradedQuiver, vertex: str) -> tuple[tuple[str, str], ...]:
    """Mesh sum at a vertex: application-order label pairs, sorted for display.

    For each solid a: vertex -> j the summand is (a, b) with b the unique
    solid arrow j -> translate(vertex); coefficients are all 1.
    """
    vertex = str(vertex)
    if vertex not in quiver.translation:
        raise DGAError(
            f"unknown vertex {vertex!r}",
            precondition="vertex belongs to the quiver",
            witness={"vertex": vertex},
        )
    inverse = {v: k for k, v in quiver.translation.items()}
    target = inverse[vertex]
    terms = []
    for a in quiver.solid_from(vertex):
        partners = [
            b for b in quiver.solid if b.source == a.target and b.target == target
        ]
        if len(partners) != 1:
            raise DGAError(
                f"mesh at {vertex} is not uniquely completable through "
                f"{a.label}: {len(partners)} candidates",
                precondition="each mesh summand completes uniquely",
                witness={
                    "vertex": vertex,
                    "arrow": a.label,
                    "candidates": [b.label for b in partners],
                },
            )
        terms.append((a.label, partners[0].label))
    terms.sort(key=_term_key)
    return tuple(terms)


def differential(quiver: GradedQuiver) -> dict[str, tuple[tuple[str, str], ...]]:
    """d of every broken arrow, keyed by its label, in vertex order."""
    return {rho.label: mesh_image(quiver, rho.source) for rho in quiver.broken}


def render_term(term: tuple[str, str]) -> str:
    first, second = term
    if first == second:
        return f"{first}^2"
    return second + first


def render_sum(terms) -> str:
    if not terms:
        return "0"
    return " + ".join(render_term(t) for t in terms)


# ---------------------------------------------------------------------------
# output formats


def serialize_graded_quiver(quiver: GradedQuiver) -> str:
    lines = ["vertices " + " ".join(quiver.vertices) + ";"]
    for a in quiver.solid:
        lines.append(f"arrow {a.label}: {a.source} -> {a.target} deg 0;")
    for a in quiver.broken:
        lines.append(f"arrow {a.label}: {a.source} --> {a.target} deg -1;")
    diff = differential(quiver)
    for rho in quiver.broken:
        lines.append(f"d({rho.label}) = {render_sum(diff[rho.label])};")
    return "\n".join(lines) + "\n"


def graded_quiver_to_json(quiver: GradedQuiver) -> dict:
    diff = differential(quiver)
    return {
        "family": quiver.family,
        "rank": quiver.rank,
        "parity": quiver.parity,
        "vertices": list(quiver.vertices),
        "solid_arrows": [
            {"label": a.label, "source": a.source, "target": a.target}
            for a in quiver.solid
        ],
        "broken_arrows": [
            {"label": a.label, "source": a.source, "target": a.target}
            for a in quiver.broken
        ],
        "translation": {v: quiver.translation[v] for v in quiver.vertices},
        "differential": {
            rho.label: [[second, first] for first, second in diff[rho.label]]
            for rho in quiver.broken
        },
    }

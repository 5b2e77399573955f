"""Gentle presentations: recognition, critical cycles, Gorenstein projectives.

For a gentle presentation the relation pairs define a partial successor map
on arrows (each arrow has at most one relation successor and at most one
relation predecessor), so the arrows whose products are all zero around a
loop form disjoint cycles.  These critical cycles govern the singularity
invariants computed here: each cycle contributes one factor, recorded by its
length, and each cycle arrow carries a string module obtained by walking the
unique relation-free continuation as far as it goes.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .quiver import Presentation, QuiverError


@dataclass(frozen=True)
class GentleViolation:
    condition: str
    location: str
    detail: str


@dataclass(frozen=True)
class GentleReport:
    is_gentle: bool
    violations: tuple[GentleViolation, ...]


def check_gentle(pres: Presentation) -> GentleReport:
    """Check the gentle conditions and report every violation found.

    (G1) each vertex has at most two incoming and two outgoing arrows;
    (G3) each arrow has at most one relation successor and at most one
         relation predecessor;
    (G4) each arrow has at most one relation-free composable successor and
         at most one relation-free composable predecessor.

    The condition that relations are pairs of arrows is built into the
    presentation type, so it can never be violated here.
    """
    violations: list[GentleViolation] = []
    for v in pres.vertices:
        outs = [a.label for a in pres.arrows_from(v)]
        ins = [a.label for a in pres.arrows_into(v)]
        if len(outs) > 2:
            violations.append(
                GentleViolation("G1", v, f"{len(outs)} arrows leave {v}: {outs}")
            )
        if len(ins) > 2:
            violations.append(
                GentleViolation("G1", v, f"{len(ins)} arrows enter {v}: {ins}")
            )
    rel = pres.relation_set
    for a in pres.arrows:
        succ_in = [b.label for b in pres.arrows_from(a.target) if (a.label, b.label) in rel]
        pred_in = [b.label for b in pres.arrows_into(a.source) if (b.label, a.label) in rel]
        succ_out = [b.label for b in pres.arrows_from(a.target) if (a.label, b.label) not in rel]
        pred_out = [b.label for b in pres.arrows_into(a.source) if (b.label, a.label) not in rel]
        if len(succ_in) > 1:
            violations.append(
                GentleViolation(
                    "G3", a.label, f"multiple relation successors of {a.label}: {succ_in}"
                )
            )
        if len(pred_in) > 1:
            violations.append(
                GentleViolation(
                    "G3", a.label, f"multiple relation predecessors of {a.label}: {pred_in}"
                )
            )
        if len(succ_out) > 1:
            violations.append(
                GentleViolation(
                    "G4",
                    a.label,
                    f"multiple relation-free successors of {a.label}: {succ_out}",
                )
            )
        if len(pred_out) > 1:
            violations.append(
                GentleViolation(
                    "G4",
                    a.label,
                    f"multiple relation-free predecessors of {a.label}: {pred_out}",
                )
            )
    return GentleReport(not violations, tuple(violations))


def _require_gentle(pres: Presentation) -> None:
    report = check_gentle(pres)
    if not report.is_gentle:
        first = report.violations[0]
        raise QuiverError(
            f"presentation is not gentle: {first.condition} fails at "
            f"{first.location} ({first.detail})",
            precondition="gentle presentation",
            witness=[
                {"condition": w.condition, "location": w.location, "detail": w.detail}
                for w in report.violations
            ],
        )


@dataclass(frozen=True)
class CriticalCycle:
    """A cycle of arrows whose consecutive products all lie in the ideal.

    ``arrows`` is the canonical rotation in traversal order; the canonical
    rotation is the one whose display tuple (labels reversed, the printed
    right-to-left order) is lexicographically greatest.
    """

    arrows: tuple[str, ...]

    @property
    def length(self) -> int:
        return len(self.arrows)

    @property
    def display(self) -> tuple[str, ...]:
        return tuple(reversed(self.arrows))

    @property
    def name(self) -> str:
        disp = self.display
        if all(len(lab) == 1 for lab in disp):
            return "".join(disp)
        return " ".join(disp)


def _canonical_rotation(arrows: tuple[str, ...]) -> tuple[str, ...]:
    rotations = [arrows[i:] + arrows[:i] for i in range(len(arrows))]
    return max(rotations, key=lambda rot: tuple(reversed(rot)))


def critical_cycles(pres: Presentation) -> list[CriticalCycle]:
    """All critical cycles, sorted by (length, display tuple)."""
    _require_gentle(pres)
    successor: dict[str, str] = {a: b for a, b in pres.relations}
    seen: set[frozenset[str]] = set()
    cycles: list[CriticalCycle] = []
    for start in (a.label for a in pres.arrows):
        chain = [start]
        cur = successor.get(start)
        while cur is not None and cur != start and len(chain) <= len(pres.arrows):
            chain.append(cur)
            cur = successor.get(cur)
        if cur != start:
            continue
        key = frozenset(chain)
        if key in seen:
            continue
        seen.add(key)
        cycles.append(CriticalCycle(_canonical_rotation(tuple(chain))))
    cycles.sort(key=lambda c: (c.length, c.display))
    return cycles


@dataclass(frozen=True)
class StringModule:
    """A string module given by a directed walk starting at its top vertex."""

    top: str
    arrows: tuple[str, ...]

    @property
    def is_simple(self) -> bool:
        return not self.arrows


def _radical_walk(pres: Presentation, cycle: CriticalCycle, first: str) -> StringModule:
    """Walk the unique relation-free continuation of the cycle arrow ``first``."""
    rel = pres.relation_set
    prev = first
    at = pres.target(first)
    walk: list[str] = []
    used: set[str] = set()
    while True:
        nxt = [b.label for b in pres.arrows_from(at) if (prev, b.label) not in rel]
        if not nxt:
            break
        step = nxt[0]
        if step in used:
            raise QuiverError(
                "the algebra is infinite dimensional: the relation-free walk "
                f"after {first!r} repeats the arrow {step!r}",
                precondition="finite-dimensional gentle algebra",
                witness={"cycle": cycle.name, "repeated_arrow": step},
            )
        used.add(step)
        walk.append(step)
        prev = step
        at = pres.target(step)
    return StringModule(pres.target(first), tuple(walk))


def radical_embeddings(
    pres: Presentation,
) -> dict[tuple[CriticalCycle, str], StringModule]:
    """String modules attached to cycle arrows, keyed by (cycle, source vertex)."""
    out: dict[tuple[CriticalCycle, str], StringModule] = {}
    for cycle in critical_cycles(pres):
        for label in cycle.arrows:
            key = (cycle, pres.source(label))
            if key in out:
                raise QuiverError(
                    f"cycle {cycle.name} passes through vertex "
                    f"{pres.source(label)!r} twice; its radical strings are "
                    "not indexed by vertices",
                    precondition="critical cycle visits each vertex once",
                    witness={"cycle": cycle.name, "vertex": pres.source(label)},
                )
            out[key] = _radical_walk(pres, cycle, label)
    return out


@dataclass(frozen=True)
class GPClassification:
    """Indecomposable Gorenstein projectives: all vertex projectives plus
    the radical strings of the critical cycles."""

    projectives: tuple[str, ...]
    radicals: dict[tuple[CriticalCycle, str], StringModule]


def gorenstein_projectives(pres: Presentation) -> GPClassification:
    return GPClassification(
        projectives=tuple(sorted(pres.vertices)),
        radicals=radical_embeddings(pres),
    )


@dataclass(frozen=True)
class SingularityDecomposition:
    """One block per critical cycle, recorded by the cycle's length."""

    factors: tuple[int, ...]
    cycle_of_factor: tuple[CriticalCycle, ...]


def singularity_category(pres: Presentation) -> SingularityDecomposition:
    cycles = critical_cycles(pres)
    return SingularityDecomposition(
        factors=tuple(c.length for c in cycles),
        cycle_of_factor=tuple(cycles),
    )


@dataclass(frozen=True)
class InvariantComparison:
    compatible: bool
    only_first: tuple[int, ...]
    only_second: tuple[int, ...]


def compare_invariant(
    first: Presentation, second: Presentation
) -> InvariantComparison:
    """Compare the block-length multisets of two presentations.

    Equality of the multisets is necessary for the singularity categories to
    be equivalent; it does not certify an equivalence on its own.
    """
    f1 = Counter(singularity_category(first).factors)
    f2 = Counter(singularity_category(second).factors)
    only_first = sorted((f1 - f2).elements())
    only_second = sorted((f2 - f1).elements())
    return InvariantComparison(
        compatible=not only_first and not only_second,
        only_first=tuple(only_first),
        only_second=tuple(only_second),
    )

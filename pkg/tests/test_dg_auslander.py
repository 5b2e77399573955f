"""Structural checks for the graded quivers attached to ADE configurations.

Every family and parity goes through the same invariant battery: one
degree -1 arrow per vertex matched to the translation, mesh differentials
that close up through unique partners, and the expected vertex and arrow
counts.  Rendered differentials of the small instances are pinned verbatim.
"""

from __future__ import annotations

import pytest

from singcat.dg_auslander import (
    DGAError,
    check_ade_type,
    dg_auslander,
    differential,
    graded_quiver_to_json,
    k0_rank,
    knoerrer_parity,
    mesh_image,
    render_sum,
    render_term,
    serialize_graded_quiver,
)
from singcat.surface import ADEType

ALL_TYPES = (
    [("A", r) for r in range(1, 9)]
    + [("D", r) for r in range(4, 9)]
    + [("E", r) for r in (6, 7, 8)]
)

# (family, rank, parity) -> (vertices, solid arrows, broken arrows)
EXPECTED_COUNTS = {
    ("A", 1, "odd"): (2, 0, 2),
    ("A", 2, "odd"): (1, 1, 1),
    ("A", 3, "odd"): (3, 4, 3),
    ("A", 4, "odd"): (2, 3, 2),
    ("A", 5, "odd"): (4, 6, 4),
    ("A", 6, "odd"): (3, 5, 3),
    ("A", 7, "odd"): (5, 8, 5),
    ("A", 8, "odd"): (4, 7, 4),
    ("D", 4, "odd"): (8, 12, 8),
    ("D", 5, "odd"): (7, 12, 7),
    ("D", 6, "odd"): (12, 20, 12),
    ("D", 7, "odd"): (11, 20, 11),
    ("D", 8, "odd"): (16, 28, 16),
    ("E", 6, "odd"): (6, 10, 6),
    ("E", 7, "odd"): (14, 24, 14),
    ("E", 8, "odd"): (16, 28, 16),
}
for _family, _rank in ALL_TYPES:
    EXPECTED_COUNTS[(_family, _rank, "even")] = (_rank, 2 * (_rank - 1), _rank)

ALL_INSTANCES = [
    (family, rank, parity)
    for family, rank in ALL_TYPES
    for parity in ("even", "odd")
]


def instance_id(case):
    family, rank, parity = case
    return f"{family}{rank}-{parity}"


@pytest.fixture(params=ALL_INSTANCES, ids=instance_id)
def quiver(request):
    family, rank, parity = request.param
    return dg_auslander(ADEType(family, rank), parity)


class TestStructuralInvariants:
    def test_vertices_are_distinct(self, quiver):
        assert len(set(quiver.vertices)) == len(quiver.vertices)

    def test_arrows_use_declared_vertices(self, quiver):
        vset = set(quiver.vertices)
        for arrow in quiver.solid + quiver.broken:
            assert arrow.source in vset and arrow.target in vset

    def test_labels_are_unique(self, quiver):
        labels = [a.label for a in quiver.solid + quiver.broken]
        assert len(set(labels)) == len(labels)

    def test_translation_is_an_involution(self, quiver):
        tau = quiver.translation
        assert sorted(tau) == sorted(quiver.vertices)
        assert sorted(tau.values()) == sorted(quiver.vertices)
        for v in quiver.vertices:
            assert tau[tau[v]] == v

    def test_one_broken_arrow_per_vertex_onto_the_translate(self, quiver):
        assert len(quiver.broken) == len(quiver.vertices)
        by_source = {a.source: a for a in quiver.broken}
        assert sorted(by_source) == sorted(quiver.vertices)
        for v, arrow in by_source.items():
            assert arrow.label == f"ρ_{v}"
            assert arrow.target == quiver.translation[v]

    def test_mesh_summands_close_up(self, quiver):
        solid_by_label = {a.label: a for a in quiver.solid}
        for v in quiver.vertices:
            terms = mesh_image(quiver, v)
            outgoing = quiver.solid_from(v)
            assert len(terms) == len(outgoing)
            assert sorted(first for first, _ in terms) == sorted(
                a.label for a in outgoing
            )
            for first, second in terms:
                a, b = solid_by_label[first], solid_by_label[second]
                assert a.source == v
                assert b.source == a.target
                assert b.target == quiver.translation[v]

    def test_differential_vanishes_exactly_at_sinks(self, quiver):
        diff = differential(quiver)
        assert sorted(diff) == sorted(a.label for a in quiver.broken)
        for rho in quiver.broken:
            is_zero = diff[rho.label] == ()
            assert is_zero == (quiver.solid_from(rho.source) == [])

    def test_counts_table(self, quiver):
        key = (quiver.family, quiver.rank, quiver.parity)
        assert (
            len(quiver.vertices),
            len(quiver.solid),
            len(quiver.broken),
        ) == EXPECTED_COUNTS[key]

    def test_k0_rank_is_the_vertex_count(self, quiver):
        assert k0_rank(quiver) == len(quiver.vertices)


def rendered(family, rank, parity) -> dict[str, str]:
    q = dg_auslander(ADEType(family, rank), parity)
    return {rho: render_sum(terms) for rho, terms in differential(q).items()}


class TestPinnedDifferentials:
    def test_odd_a1_is_formal(self):
        assert rendered("A", 1, "odd") == {"ρ_1": "0", "ρ_2": "0"}

    def test_odd_a2(self):
        assert rendered("A", 2, "odd") == {"ρ_1": "γ^2"}

    def test_odd_a3(self):
        assert rendered("A", 3, "odd") == {
            "ρ_1": "α_2*α_1",
            "ρ_2": "α_1*α_2",
            "ρ_3": "α_1α_1* + α_2α_2*",
        }

    def test_odd_a4(self):
        assert rendered("A", 4, "odd")["ρ_2"] == "α_1α_1* + γ^2"

    def test_odd_a5_center(self):
        assert rendered("A", 5, "odd")["ρ_3"] == "α_1α_1* + α_2α_2* + α_3*α_3"

    def test_odd_d4(self):
        assert rendered("D", 4, "odd")["ρ_2"] == "α_1α_1* + α_7α_7* + α_5α_2"

    def test_odd_d5(self):
        d = rendered("D", 5, "odd")
        assert d["ρ_0"] == "α_1*α_0"
        assert d["ρ_2"] == "α_1α_1* + α_3*α_2"
        assert d["ρ_6"] == "α_4*α_4 + α_5α_5*"

    def test_odd_e6(self):
        d = rendered("E", 6, "odd")
        assert d["ρ_1"] == "α_2*α_1"
        assert d["ρ_3"] == "α_1α_1* + α_4*α_3"
        assert d["ρ_5"] == "α_3α_3* + α_4α_4* + α_5*α_5"
        assert d["ρ_6"] == "α_5α_5*"

    def test_odd_e8_branch_foot(self):
        assert (
            rendered("E", 8, "odd")["ρ_10"] == "α_8α_8* + α_16α_16* + α_9*α_10"
        )

    def test_even_a2(self):
        assert rendered("A", 2, "even")["ρ_2"] == "α_1α_1*"

    @pytest.mark.parametrize("n", range(3, 9))
    def test_even_a_interior_vertex(self, n):
        assert rendered("A", n, "even")["ρ_2"] == "α_1α_1* + α_2*α_2"

    def test_even_mesh_at_an_end(self):
        q = dg_auslander("A3", "even")
        assert render_sum(mesh_image(q, "1")) == "α_1*α_1"

    def test_mesh_rejects_unknown_vertex(self):
        q = dg_auslander("A3", "even")
        with pytest.raises(DGAError, match="unknown vertex"):
            mesh_image(q, "9")


class TestRendering:
    def test_repeated_arrow_renders_as_a_square(self):
        assert render_term(("γ", "γ")) == "γ^2"

    def test_application_order_reverses_for_display(self):
        assert render_term(("α_1", "α_2*")) == "α_2*α_1"

    def test_empty_sum(self):
        assert render_sum(()) == "0"

    def test_serialized_odd_a2(self):
        text = serialize_graded_quiver(dg_auslander("A2", "odd"))
        assert text == (
            "vertices 1;\n"
            "arrow γ: 1 -> 1 deg 0;\n"
            "arrow ρ_1: 1 --> 1 deg -1;\n"
            "d(ρ_1) = γ^2;\n"
        )

    def test_serialized_even_a3_lines(self):
        text = serialize_graded_quiver(dg_auslander("A3", "even"))
        lines = text.splitlines()
        assert lines[0] == "vertices 1 2 3;"
        assert "arrow α_1: 1 -> 2 deg 0;" in lines
        assert "arrow ρ_1: 1 --> 1 deg -1;" in lines
        assert "d(ρ_2) = α_1α_1* + α_2*α_2;" in lines

    def test_json_payload(self):
        payload = graded_quiver_to_json(dg_auslander("A2", "odd"))
        assert payload == {
            "family": "A",
            "rank": 2,
            "parity": "odd",
            "vertices": ["1"],
            "solid_arrows": [{"label": "γ", "source": "1", "target": "1"}],
            "broken_arrows": [{"label": "ρ_1", "source": "1", "target": "1"}],
            "translation": {"1": "1"},
            "differential": {"ρ_1": [["γ", "γ"]]},
        }

    def test_json_pairs_are_in_display_order(self):
        payload = graded_quiver_to_json(dg_auslander("A2", "even"))
        # stored application-order pair (α_1*, α_1) flips for display
        assert payload["differential"]["ρ_2"] == [["α_1", "α_1*"]]


class TestTypeHandling:
    def test_parse_and_passthrough(self):
        assert check_ade_type("A7") == ADEType("A", 7)
        assert check_ade_type("D4") == ADEType("D", 4)
        assert check_ade_type(ADEType("E", 8)) == ADEType("E", 8)

    @pytest.mark.parametrize("bad", ["D3", "E9", "E5", "A0", "X5", "A-1", "A"])
    def test_rejected_types(self, bad):
        with pytest.raises(DGAError):
            check_ade_type(bad)

    def test_unknown_parity(self):
        with pytest.raises(DGAError, match="unknown parity"):
            dg_auslander("A2", "mixed")

    def test_knoerrer_parity_values(self):
        assert knoerrer_parity(0) == "even"
        assert knoerrer_parity(1) == "odd"
        assert knoerrer_parity(2) == "even"
        assert knoerrer_parity(3) == "odd"

    def test_knoerrer_parity_preconditions(self):
        with pytest.raises(DGAError, match="non-negative"):
            knoerrer_parity(-1)
        with pytest.raises(DGAError, match="non-negative"):
            knoerrer_parity(2.0)

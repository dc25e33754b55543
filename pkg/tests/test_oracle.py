"""Oracle module: exhaustive chromatic numbers, deficiency reports, stable
covers, switching ranges, and the constructive deficiency achiever."""

from __future__ import annotations

import pytest

from sigdef import (
    BoundExceededError,
    Coloration,
    NotThreeChromaticError,
    achieve_switching_deficiency,
    build_graph,
    chromatic_number,
    deficiency,
    deficiency_report,
    generate_general,
    is_proper,
    is_stable,
    covers_positive,
    max_deficiency_3chromatic,
    recolor_lone_negative,
    stable_positive_cover,
    switch,
    switching_report,
)

from conftest import WORKED_COVER


class TestChromaticNumber:
    def test_triangle(self, triangle):
        assert chromatic_number(triangle) == 3

    def test_single_negative_edge(self):
        # both endpoints colored 1 is proper over {+-1}; the 1-element set
        # {0} fails because 0 = -0
        assert chromatic_number(build_graph([("u", "v", "-")])) == 2

    def test_worked_example(self, worked_example):
        # despite appearances this graph is antibalanced: coloring each of
        # a1 a2 a3 a4 b5 b6 a7 with 1 and the rest with -1 is proper
        assert chromatic_number(worked_example, bound=14) == 2

    def test_empty_and_edgeless(self):
        assert chromatic_number(build_graph([])) == 0
        assert chromatic_number(build_graph([], vertices=["x", "y"])) == 1

    def test_opposite_pair_needs_three(self):
        g = build_graph([("u", "v", "+"), ("u", "v", "-")])
        assert chromatic_number(g) == 3

    def test_bound_refusal(self, worked_example):
        with pytest.raises(BoundExceededError):
            chromatic_number(worked_example, bound=12)


class TestDeficiencyReport:
    def test_triangle(self, triangle):
        rep = deficiency_report(triangle)
        assert rep.chi == 3
        assert rep.range == frozenset({0, 1})
        assert rep.max_deficiency == 1 and rep.min_deficiency == 0

    def test_single_positive_edge(self):
        rep = deficiency_report(build_graph([("u", "v", "+")]))
        assert rep.range == frozenset({0})

    def test_connected_all_negative_path(self):
        g = build_graph([("u", "v", "-"), ("v", "w", "-")])
        rep = deficiency_report(g)
        assert rep.chi == 2
        assert rep.range == frozenset({1})

    def test_witnesses_are_proper_and_minimal(self, triangle):
        rep = deficiency_report(triangle)
        for d, kap in rep.per_deficiency.items():
            assert is_proper(triangle, kap)
            assert kap.size == rep.chi
            assert deficiency(kap)[0] == d

    def test_early_stop_matches_full_enumeration(self):
        for seed in range(30):
            g = generate_general(6, 0.5, 0.5, seed, double_prob=0.1)
            fast = deficiency_report(g, early_stop=True)
            full = deficiency_report(g, early_stop=False)
            assert fast.range == full.range
            assert fast.per_deficiency == full.per_deficiency

    def test_deterministic_witnesses(self, triangle):
        a = deficiency_report(triangle)
        b = deficiency_report(triangle)
        assert a.witness_max == b.witness_max
        assert a.witness_min == b.witness_min


class TestStablePositiveCover:
    def test_worked_example_has_cover(self, worked_example):
        cover = stable_positive_cover(worked_example)
        assert cover is not None
        assert is_stable(worked_example, cover)
        assert covers_positive(worked_example, cover)
        # the reference cover is valid too
        ids = worked_example.ids_of(WORKED_COVER)
        assert is_stable(worked_example, ids)
        assert covers_positive(worked_example, ids)

    def test_all_positive_triangle_has_none(self, all_positive_triangle):
        assert stable_positive_cover(all_positive_triangle) is None

    def test_single_positive_edge_lex_least(self):
        g = build_graph([("u", "v", "+")])
        assert stable_positive_cover(g) == frozenset({0})

    def test_matched_mode_agrees_with_subset_mode(self):
        from sigdef import generate_matched

        for seed in range(25):
            g = generate_matched(5, 0.3, seed)
            matched = stable_positive_cover(g)
            subset = stable_positive_cover(g, pair_bound=0, vertex_bound=10)
            assert (matched is None) == (subset is None)
            if matched is not None:
                assert matched == subset

    def test_bound_refusal(self):
        from sigdef import generate_matched

        g = generate_matched(25, 0.1, 3)
        with pytest.raises(BoundExceededError):
            stable_positive_cover(g, pair_bound=20, vertex_bound=12)


class TestMaxDeficiency3Chromatic:
    def test_triangle(self, triangle):
        assert max_deficiency_3chromatic(triangle) == 1

    def test_worked_example_refused_but_cover_exists(self, worked_example):
        # the 7-pair fixture is 2-chromatic, so the 3-chromatic oracle
        # refuses it; a stable cover of its positive edges still exists,
        # which is what the decision procedure reports
        with pytest.raises(NotThreeChromaticError):
            max_deficiency_3chromatic(worked_example, bound=14)
        assert stable_positive_cover(worked_example) is not None

    def test_positive_triangle_with_pendant_negative(self, all_positive_triangle):
        g = build_graph(
            [("x", "y", "+"), ("y", "z", "+"), ("x", "z", "+"), ("x", "p", "-")]
        )
        assert max_deficiency_3chromatic(g) == 0
        assert deficiency_report(g).max_deficiency == 0

    def test_refusal_names_chi(self):
        g = build_graph([("u", "v", "+")])
        with pytest.raises(NotThreeChromaticError, match="2-chromatic"):
            max_deficiency_3chromatic(g)


class TestSwitchingReport:
    def test_two_chromatic_graph(self):
        rep = switching_report(build_graph([("u", "v", "-")]))
        assert rep.chi == 2
        assert rep.range == frozenset({0, 1})

    def test_triangle(self, triangle):
        rep = switching_report(triangle)
        assert rep.range == frozenset({0, 1})

    def test_single_vertex(self):
        rep = switching_report(build_graph([], vertices=["x"]))
        assert rep.chi == 1
        assert rep.range == frozenset({0})

    def test_witnesses_verify(self, triangle):
        rep = switching_report(triangle)
        for d, (A, kap) in rep.witnesses.items():
            assert is_proper(switch(triangle, A), kap)
            assert deficiency(kap)[0] == d

    def test_range_full_on_eight_vertices(self):
        for seed in range(8):
            g = generate_general(8, 0.5, 0.5, seed)
            rep = switching_report(g)
            assert rep.range == frozenset(range(rep.chi // 2 + 1))

    def test_bound_refusal(self):
        g = generate_general(11, 0.3, 0.5, 1)
        with pytest.raises(BoundExceededError):
            switching_report(g)


# 4-chromatic fixture: two matched pairs with all four cross negatives.
FOUR_CHROMATIC = [("a1", "b1", "+"), ("a2", "b2", "+")] + [
    (a, b, "-") for a, b in [("a1", "a2"), ("a1", "b2"), ("b1", "a2"), ("b1", "b2")]
]


class TestAchieveSwitchingDeficiency:
    def test_identity_at_zero(self, triangle):
        kap = Coloration.from_labels(
            triangle, {"u": 1, "v": -1, "w": 0}, k=1, uses_zero=True
        )
        A, out = achieve_switching_deficiency(triangle, kap, 0)
        assert A == frozenset()
        assert out == kap

    def test_triangle_maximum(self, triangle):
        # switching the single negatively colored vertex leaves {0, 1} used
        kap = Coloration.from_labels(
            triangle, {"u": 1, "v": -1, "w": 0}, k=1, uses_zero=True
        )
        A, out = achieve_switching_deficiency(triangle, kap, 1)
        assert A == frozenset({triangle.id_of("v")})
        assert out.colors == (1, 1, 0)
        assert out.used() == frozenset({0, 1})
        assert deficiency(out)[0] == 1
        assert is_proper(switch(triangle, A), out)

    def test_four_chromatic_all_targets(self):
        g = build_graph(FOUR_CHROMATIC)
        assert chromatic_number(g) == 4
        kappa = deficiency_report(g).witness_min
        for r in range(0, 2 + 1):
            A, out = achieve_switching_deficiency(g, kappa, r)
            assert is_proper(switch(g, A), out)
            assert deficiency(out)[0] == r

    def test_r_out_of_range(self, triangle):
        kap = deficiency_report(triangle).witness_min
        with pytest.raises(ValueError, match="outside"):
            achieve_switching_deficiency(triangle, kap, 2)

    def test_non_minimal_rejected(self, triangle):
        fat = Coloration.from_labels(
            triangle, {"u": 1, "v": -1, "w": 0}, k=2, uses_zero=True
        )
        with pytest.raises(ValueError, match="not minimal"):
            achieve_switching_deficiency(triangle, fat, 0)


class TestRecolorLoneNegative:
    def test_positive_edge_with_zero(self):
        # (0, -1) over {0, +-1} leaves 1 unused with a lone -1 vertex; the
        # recoloring produces a proper 2-color coloration, certifying chi <= 2
        g = build_graph([("u", "v", "+")])
        kap = Coloration.from_labels(g, {"u": 0, "v": -1}, k=1, uses_zero=True)
        out = recolor_lone_negative(g, kap, 1)
        assert out.colors == (1, -1)
        assert not out.uses_zero
        assert is_proper(g, out)

    def test_non_adjacent_zero_goes_negative(self):
        g = build_graph([("u", "v", "+")], vertices=["u", "v", "x"])
        kap = Coloration.from_labels(
            g, {"u": 0, "v": -1, "x": 0}, k=1, uses_zero=True
        )
        out = recolor_lone_negative(g, kap, 1)
        assert out.colors == (1, -1, -1)
        assert is_proper(g, out)

    def test_requires_lone_vertex(self, triangle):
        kap = Coloration.from_labels(
            triangle, {"u": 1, "v": 0, "w": 1}, k=1, uses_zero=True
        )
        with pytest.raises(ValueError, match="exactly one"):
            recolor_lone_negative(triangle, kap, -1)

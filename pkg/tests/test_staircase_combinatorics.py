"""Tests for staircase plane partitions, the two lattice-path encodings, and
determinant versus brute-force counting."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shifted_hankel.hankel_identities import hankel_det, product_poly_H
from shifted_hankel.ortho_moments import MomentSequence, sequence_term
from shifted_hankel.staircase_combinatorics import (
    LatticePath,
    PathFamily,
    PlanePartition,
    count_nonintersecting_brute,
    count_pp,
    count_pp_vs_formulas,
    dyck_endpoints,
    dyck_to_pp,
    enumerate_pp,
    hv_endpoints,
    hv_to_pp,
    lgv_count,
    partition_from_text,
    partition_to_text,
    path_from_text,
    path_to_text,
    pp_to_dyck,
    pp_to_hv,
)

CATALAN = MomentSequence("catalan")

STAIR_EXAMPLE = PlanePartition(
    6, 5, ((5, 5, 5, 3, 2), (5, 4, 3, 3), (2, 2, 2), (2, 1), (0,))
)


@st.composite
def staircase_partitions(draw, n_max=4, k_max=3):
    n = draw(st.integers(1, n_max))
    k = draw(st.integers(0, k_max))
    rows = []
    for i in range(n - 1):
        row = []
        for j in range(n - 1 - i):
            bound = k if i == 0 else rows[i - 1][j]
            if j > 0:
                bound = min(bound, row[j - 1])
            row.append(draw(st.integers(0, bound)))
        rows.append(tuple(row))
    return PlanePartition(n, k, tuple(rows))


class TestPlanePartition:
    def test_wide_example_is_valid(self):
        assert STAIR_EXAMPLE.n == 6
        assert STAIR_EXAMPLE.k == 5

    def test_empty_shape(self):
        p = PlanePartition(1, 7, ())
        assert p.rows == ()

    def test_bound_violation(self):
        with pytest.raises(ValueError, match="bound"):
            PlanePartition(2, 1, ((2,),))

    def test_row_must_decrease(self):
        with pytest.raises(ValueError, match="row"):
            PlanePartition(3, 2, ((1, 2), (1,)))

    def test_column_must_decrease(self):
        with pytest.raises(ValueError, match="column"):
            PlanePartition(3, 2, ((1, 1), (2,)))

    def test_shape_mismatch(self):
        with pytest.raises(ValueError, match="shape"):
            PlanePartition(3, 2, ((1, 1, 1), (1,)))
        with pytest.raises(ValueError, match="shape"):
            PlanePartition(3, 2, ((1, 1),))

    def test_negative_entry(self):
        with pytest.raises(ValueError, match="negative"):
            PlanePartition(2, 3, ((-1,),))


class TestTextFormats:
    def test_partition_round_trip(self):
        text = "5,5,5,3,2;5,4,3,3;2,2,2;2,1;0"
        assert partition_to_text(STAIR_EXAMPLE) == text
        assert partition_from_text(text, 5) == STAIR_EXAMPLE

    def test_empty_partition_text(self):
        p = PlanePartition(1, 3, ())
        assert partition_to_text(p) == ""
        assert partition_from_text("", 3) == p

    def test_single_cell(self):
        p = PlanePartition(2, 2, ((1,),))
        assert partition_to_text(p) == "1"
        assert partition_from_text("1", 2) == p

    def test_hv_path_round_trip(self):
        path = LatticePath((-1, 4), ("H", "V", "V", "H", "V"), "hv")
        assert path_to_text(path) == "(-1,4) HVVHV"
        assert path_from_text("(-1,4) HVVHV", "hv") == path

    def test_dyck_path_round_trip(self):
        path = LatticePath((0, 0), ("U", "U", "D", "D"), "dyck")
        assert path_to_text(path) == "(0,0) UUDD"
        assert path_from_text("(0,0) UUDD", "dyck") == path

    def test_empty_path_text(self):
        path = LatticePath((-1, -1), (), "hv")
        assert path_to_text(path) == "(-1,-1)"
        assert path_from_text("(-1,-1)", "hv") == path

    def test_malformed_path_text(self):
        with pytest.raises(ValueError, match="path text"):
            path_from_text("UUDD", "dyck")


class TestLatticePath:
    def test_dyck_must_stay_nonnegative(self):
        with pytest.raises(ValueError, match="axis"):
            LatticePath((0, 0), ("D", "U"), "dyck")

    def test_dyck_must_return_to_axis(self):
        with pytest.raises(ValueError, match="axis"):
            LatticePath((0, 0), ("U", "U"), "dyck")

    def test_alphabet_checked(self):
        with pytest.raises(ValueError, match="step"):
            LatticePath((0, 0), ("U", "H"), "dyck")
        with pytest.raises(ValueError, match="model"):
            LatticePath((0, 0), ("U", "D"), "diagonal")

    def test_vertices(self):
        path = LatticePath((0, 0), ("U", "D"), "dyck")
        assert path.vertices() == ((0, 0), (1, 1), (2, 0))
        assert path.end == (2, 0)

    def test_hv_vertices(self):
        path = LatticePath((-1, 1), ("H", "V"), "hv")
        assert path.vertices() == ((-1, 1), (0, 1), (0, 0))


class TestPathFamily:
    def test_disjoint_family_accepted(self):
        fam = PathFamily(
            (
                LatticePath((0, 0), ("U", "D"), "dyck"),
                LatticePath((-2, 0), ("U",) * 3 + ("D",) * 3, "dyck"),
            )
        )
        assert len(fam.paths) == 2

    def test_crossing_family_rejected(self):
        with pytest.raises(ValueError, match="share"):
            PathFamily(
                (
                    LatticePath((0, 0), ("U", "D", "U", "D"), "dyck"),
                    LatticePath((0, 0), ("U", "U", "D", "D"), "dyck"),
                )
            )

    def test_mixed_models_rejected(self):
        with pytest.raises(ValueError, match="model"):
            PathFamily(
                (
                    LatticePath((0, 0), ("U", "D"), "dyck"),
                    LatticePath((5, 1), ("H", "V"), "hv"),
                )
            )


class TestEnumerate:
    def test_tiny_counts(self):
        assert count_pp(2, 1) == 2
        assert count_pp(3, 1) == 5
        assert count_pp(1, 9) == 1
        assert count_pp(3, 2) == 14

    def test_bound_one_gives_catalan(self):
        for n in range(1, 6):
            assert count_pp(n, 1) == sequence_term("catalan", n)

    def test_zero_bound(self):
        assert count_pp(4, 0) == 1

    def test_lexicographic_stream(self):
        stream = list(enumerate_pp(3, 1))
        assert stream[0].rows == ((0, 0), (0,))
        assert stream[-1].rows == ((1, 1), (1,))
        flat = [sum(sum(r) for r in p.rows) for p in stream]
        assert len(stream) == len(set(p.rows for p in stream)) == 5
        assert flat[0] == 0 and flat[-1] == 3

    def test_larger_grid_matches_closed_form(self):
        for n in range(1, 5):
            for k in range(4):
                assert count_pp(n, k) == product_poly_H(n).subs(x=k)

    def test_monotone_in_both_arguments(self):
        for n in range(1, 4):
            for k in range(3):
                assert count_pp(n, k) <= count_pp(n, k + 1)
                assert count_pp(n, k) <= count_pp(n + 1, k)

    def test_invalid_arguments(self):
        with pytest.raises(ValueError):
            list(enumerate_pp(0, 1))
        with pytest.raises(ValueError):
            list(enumerate_pp(2, -1))


class TestCountVsFormulas:
    def test_known_cell(self):
        report = count_pp_vs_formulas(4, 1)
        assert report.passed
        assert report.grid["values"]["enumeration"] == "14"

    def test_empty_shape(self):
        report = count_pp_vs_formulas(1, 9)
        assert report.passed
        assert report.grid["values"]["enumeration"] == "1"

    def test_interior_cell(self):
        assert count_pp_vs_formulas(3, 2).grid["values"]["hankel"] == "14"

    def test_all_four_routes_agree_on_grid(self):
        for n in range(1, 5):
            for k in range(4):
                assert count_pp_vs_formulas(n, k).passed


class TestDyckEncoding:
    def test_two_partitions_map_to_the_two_paths(self):
        images = set()
        for p in enumerate_pp(2, 1):
            fam = pp_to_dyck(p)
            assert len(fam.paths) == 1
            images.add("".join(fam.paths[0].steps))
        assert images == {"UUDD", "UDUD"}

    def test_trivial_shape_gives_nested_arcs(self):
        fam = pp_to_dyck(PlanePartition(1, 2, ()))
        assert [p.start for p in fam.paths] == [(0, 0), (-2, 0)]
        assert "".join(fam.paths[0].steps) == "UD"
        assert "".join(fam.paths[1].steps) == "UUUDDD"

    def test_prescribed_endpoints(self):
        starts, ends = dyck_endpoints(3, 2)
        for p in enumerate_pp(3, 2):
            fam = pp_to_dyck(p)
            assert [q.start for q in fam.paths] == starts
            assert [q.end for q in fam.paths] == ends

    def test_injective_and_complete(self):
        images = {pp_to_dyck(p) for p in enumerate_pp(3, 2)}
        assert len(images) == 14
        starts, ends = dyck_endpoints(3, 2)
        assert lgv_count(starts, ends, "dyck") == 14

    def test_round_trip_small(self):
        for p in enumerate_pp(3, 1):
            assert dyck_to_pp(pp_to_dyck(p)) == p

    def test_round_trip_wider(self):
        seen = 0
        for p in enumerate_pp(4, 3):
            assert dyck_to_pp(pp_to_dyck(p)) == p
            seen += 1
        assert seen == 330

    def test_foreign_start_points_rejected(self):
        fam = PathFamily(
            (
                LatticePath((0, 0), ("U", "D", "U", "D"), "dyck"),
                LatticePath((-8, 0), ("U",) * 3 + ("D",) * 3, "dyck"),
            )
        )
        with pytest.raises(ValueError, match="level-curve"):
            dyck_to_pp(fam)

    def test_inconsistent_lengths_rejected(self):
        fam = PathFamily(
            (
                LatticePath((0, 0), ("U", "D"), "dyck"),
                LatticePath(
                    (-2, 0), ("U", "U", "U", "U", "D", "D", "D", "D"), "dyck"
                ),
            )
        )
        with pytest.raises(ValueError, match="level-curve"):
            dyck_to_pp(fam)

    def test_empty_family_cannot_infer_shape(self):
        with pytest.raises(ValueError, match="empty"):
            dyck_to_pp(PathFamily(()))


class TestHvEncoding:
    def test_step_counts_match_endpoints(self):
        for p in enumerate_pp(3, 2):
            fam = pp_to_hv(p)
            for i, path in enumerate(fam.paths):
                assert sum(1 for s in path.steps if s == "H") == 2 * i
                assert sum(1 for s in path.steps if s == "V") == 2

    def test_prescribed_endpoints(self):
        starts, ends = hv_endpoints(3, 2)
        assert starts == [(-1, 1), (-1, 2), (-1, 3)]
        assert ends == [(-1, -1), (1, 0), (3, 1)]
        fam = pp_to_hv(next(enumerate_pp(3, 2)))
        assert [q.start for q in fam.paths] == starts
        assert [q.end for q in fam.paths] == ends

    def test_injective_and_complete(self):
        images = {pp_to_hv(p) for p in enumerate_pp(2, 2)}
        assert len(images) == 3
        images = {pp_to_hv(p) for p in enumerate_pp(3, 1)}
        assert len(images) == 5

    def test_round_trip_exhaustive(self):
        for p in enumerate_pp(3, 2):
            assert hv_to_pp(pp_to_hv(p)) == p
        for p in enumerate_pp(4, 2):
            assert hv_to_pp(pp_to_hv(p)) == p

    def test_round_trip_zero_bound(self):
        p = PlanePartition(3, 0, ((0, 0), (0,)))
        assert hv_to_pp(pp_to_hv(p)) == p

    def test_wrong_endpoints_rejected(self):
        fam = PathFamily((LatticePath((-1, 1), ("H", "V", "V"), "hv"),))
        with pytest.raises(ValueError, match="row-height"):
            hv_to_pp(fam)


class TestRoundTripProperties:
    @settings(max_examples=60, deadline=None)
    @given(p=staircase_partitions())
    def test_both_encodings_invert(self, p):
        if p.k >= 1:
            assert dyck_to_pp(pp_to_dyck(p)) == p
        assert hv_to_pp(pp_to_hv(p)) == p


class TestLgvCount:
    def test_dyck_configuration(self):
        starts, ends = dyck_endpoints(2, 2)
        assert lgv_count(starts, ends, "dyck") == 3

    def test_hv_configuration(self):
        starts, ends = hv_endpoints(2, 2)
        assert lgv_count(starts, ends, "hv") == 3

    def test_single_path_is_plain_count(self):
        assert lgv_count([(0, 0)], [(6, 0)], "dyck") == 5
        assert lgv_count([(-1, 3)], [(1, 1)], "hv") == 6

    def test_unreachable_endpoint_counts_zero(self):
        assert lgv_count([(0, 0)], [(3, 0)], "dyck") == 0
        assert lgv_count([(0, 0)], [(-2, 0)], "hv") == 0

    def test_matches_closed_form_on_grid(self):
        for n in range(1, 5):
            for k in range(4):
                expected = product_poly_H(n).subs(x=k)
                assert lgv_count(*dyck_endpoints(n, k), "dyck") == expected
                assert lgv_count(*hv_endpoints(n, k), "hv") == expected

    def test_matches_hankel_table(self):
        for n in range(1, 5):
            for k in range(4):
                starts, ends = dyck_endpoints(n, k)
                assert lgv_count(starts, ends, "dyck") == hankel_det(
                    CATALAN, n, k
                )

    def test_unknown_model(self):
        with pytest.raises(ValueError, match="model"):
            lgv_count([(0, 0)], [(2, 0)], "diagonal")


class TestBruteForce:
    def test_dyck_small(self):
        starts, ends = dyck_endpoints(2, 2)
        assert count_nonintersecting_brute(starts, ends, "dyck") == 3

    def test_hv_small(self):
        starts, ends = hv_endpoints(3, 1)
        assert count_nonintersecting_brute(starts, ends, "hv") == 5

    def test_single_path_unconstrained(self):
        assert count_nonintersecting_brute([(0, 0)], [(4, 0)], "dyck") == 2

    def test_agrees_with_determinant(self):
        for n in range(1, 4):
            for k in range(3):
                for model, pts in (
                    ("dyck", dyck_endpoints(n, k)),
                    ("hv", hv_endpoints(n, k)),
                ):
                    starts, ends = pts
                    assert count_nonintersecting_brute(
                        starts, ends, model
                    ) == lgv_count(starts, ends, model)

    def test_cap_enforced(self):
        starts, ends = dyck_endpoints(3, 3)
        with pytest.raises(ValueError, match="cap"):
            count_nonintersecting_brute(starts, ends, "dyck", cap=10)

"""Enumeration against a brute-force reference, and the filter pipeline."""

import itertools
from fractions import Fraction

import pytest

from drglab import (
    BiggsClass,
    IntersectionArray,
    QueryTooLarge,
    ScanQuery,
    enumerate_arrays,
    estimate_candidates,
    evaluate_array,
    parse_intersection_array,
    scan,
    validate_basic,
)


def brute_force_box(k: int, D: int) -> list[IntersectionArray]:
    """Filter the full monotone product space; deliberately naive."""
    found = []
    for b_tail in itertools.product(range(1, k), repeat=D - 1):
        b = (k,) + b_tail
        if any(b[i] < b[i + 1] for i in range(D - 1)):
            continue
        for c_tail in itertools.product(range(1, k + 1), repeat=D - 1):
            c = (1,) + c_tail
            arr = IntersectionArray(b, c)
            if validate_basic(arr).overall:
                found.append(arr)
    return found


class TestEnumeration:
    @pytest.mark.parametrize("k,D", [(3, 2), (3, 3), (3, 5), (4, 2), (4, 3), (5, 3), (5, 4), (6, 3)])
    def test_matches_brute_force(self, k, D):
        produced = list(enumerate_arrays(ScanQuery(k, k, D, D)))
        assert produced == sorted(brute_force_box(k, D), key=lambda a: (a.b, a.c))
        assert len(produced) == len(set(produced))

    def test_k3_d2_count_and_order(self):
        arrays = [str(a) for a in enumerate_arrays(ScanQuery(3, 3, 2, 2))]
        assert arrays == [
            "(3,1;1,1)",
            "(3,1;1,2)",
            "(3,1;1,3)",
            "(3,2;1,1)",
            "(3,2;1,2)",
            "(3,2;1,3)",
        ]

    def test_diameter_one(self):
        assert [str(a) for a in enumerate_arrays(ScanQuery(3, 3, 1, 1))] == ["(3;1)"]

    def test_known_counts(self):
        # frozen from the naive reference enumeration
        for (k, D), count in {(3, 3): 11, (4, 3): 38, (5, 4): 292, (4, 7): 451}.items():
            assert sum(1 for _ in enumerate_arrays(ScanQuery(k, k, D, D))) == count

    def test_lexicographic_over_k_and_d(self):
        arrays = list(enumerate_arrays(ScanQuery(3, 4, 1, 2)))
        keys = [(a.k, a.D, a.b, a.c) for a in arrays]
        assert keys == sorted(keys)

    def test_everything_validates(self):
        for arr in enumerate_arrays(ScanQuery(3, 5, 1, 4)):
            assert validate_basic(arr).overall


class TestQueryLimits:
    def test_query_too_large(self):
        with pytest.raises(QueryTooLarge):
            enumerate_arrays(ScanQuery(3, 12, 2, 12))

    def test_custom_budget(self):
        with pytest.raises(QueryTooLarge):
            enumerate_arrays(ScanQuery(3, 3, 2, 2, budget=5))

    def test_estimate_dominates_actual(self):
        q = ScanQuery(3, 4, 2, 4)
        assert estimate_candidates(q) >= sum(1 for _ in enumerate_arrays(q))

    def test_low_valency_rejected(self):
        with pytest.raises(ValueError):
            ScanQuery(2, 3, 1, 2)

    def test_empty_ranges_rejected(self):
        with pytest.raises(ValueError):
            ScanQuery(4, 3, 1, 2)
        with pytest.raises(ValueError):
            ScanQuery(3, 3, 3, 2)

    def test_unknown_filter_rejected(self):
        with pytest.raises(ValueError):
            ScanQuery(3, 3, 1, 1, filters=("basic", "parity"))


class TestPipeline:
    def test_petersen_passes(self):
        record = evaluate_array(parse_intersection_array("(3,2;1,1)"))
        assert record.first_failing_check == "pass"
        assert record.verdict.category is BiggsClass.PASS_STRICT
        assert record.n == 10

    def test_integrality_failure(self):
        # k_2 = 3/2 is not a shell size
        record = evaluate_array(parse_intersection_array("(3,1;1,2)"))
        assert record.first_failing_check == "integrality"
        assert record.ratio is None

    def test_half_integral_edge_count_is_not_an_integrality_failure(self):
        # whole shells with odd n*k: the screen lets it through to the
        # resistance stage on purpose
        record = evaluate_array(parse_intersection_array("(3,1;1,1)"))
        assert record.first_failing_check != "integrality"

    def test_basic_failure(self):
        record = evaluate_array(parse_intersection_array("(3,2,3;1,1,3)"))
        assert record.first_failing_check == "basic"

    def test_n_max_failure_sits_after_integrality(self):
        record = evaluate_array(parse_intersection_array("(3,2;1,3)"), n_max=5)
        assert record.first_failing_check == "n_max"
        assert record.n == 6

    def test_divisibility_failure(self):
        # whole shells (1,7,28,16), c2 = 1, b1 = 4, and 3 does not divide 7
        record = evaluate_array(parse_intersection_array("(7,4,4;1,1,7)"))
        assert record.first_failing_check == "divisibility"

    def test_head_bound_failure(self):
        record = evaluate_array(parse_intersection_array("(4,1,1,1;1,1,1,1)"))
        assert record.first_failing_check == "head_bound"

    def test_extremal_array_passes(self):
        record = evaluate_array(parse_intersection_array("(3,2,2,2,1,1,1;1,1,1,1,1,1,3)"))
        assert record.first_failing_check == "pass"
        assert record.verdict.category is BiggsClass.EXTREMAL

    @pytest.mark.parametrize(
        "text,ratio",
        [
            ("(3,2,2,1,1,1,1;1,1,1,1,1,1,3)", Fraction(64, 61)),
            ("(5,2,2,1,1,1,1;1,1,1,1,1,1,4)", Fraction(83, 80)),
            ("(8,3,3,3,3,3,3,3,2,2,1;1,2,2,3,3,3,3,3,3,3,8)", Fraction(1259, 1341)),
        ],
    )
    def test_ruled_out_only_by_resistance(self, text, ratio):
        record = evaluate_array(parse_intersection_array(text))
        assert record.first_failing_check == "biggs_violation"
        assert record.ruled_out_by_biggs_alone
        assert record.ratio == ratio

    def test_filter_subset_respected(self):
        # with the resistance filter disabled a violating array sails through
        record = evaluate_array(
            parse_intersection_array("(3,2,2,1,1,1,1;1,1,1,1,1,1,3)"),
            filters=("basic", "integrality", "divisibility", "head_bound"),
        )
        assert record.first_failing_check == "pass"
        assert record.verdict is None
        assert record.ratio == Fraction(64, 61)  # still reported


class TestScan:
    def test_scan_finds_section5_arrays(self):
        records = scan(ScanQuery(3, 3, 7, 7))
        by_text = {str(r.array): r for r in records}
        target = by_text["(3,2,2,1,1,1,1;1,1,1,1,1,1,3)"]
        assert target.first_failing_check == "biggs_violation"
        assert target.n == 62

        records5 = scan(ScanQuery(5, 5, 7, 7))
        target5 = {str(r.array): r for r in records5}["(5,2,2,1,1,1,1;1,1,1,1,1,1,4)"]
        assert target5.first_failing_check == "biggs_violation"
        assert target5.n == 101

    def test_records_in_canonical_order(self):
        records = scan(ScanQuery(3, 4, 2, 4))
        keys = [(r.array.k, r.array.D, r.array.b, r.array.c) for r in records]
        assert keys == sorted(keys)

    def test_identical_across_runs(self):
        q = ScanQuery(3, 4, 2, 5, n_max=100)
        assert scan(q) == scan(q)

    def test_parallel_scan_matches_serial(self):
        q = ScanQuery(3, 4, 2, 4)
        assert scan(q, jobs=2) == scan(q, jobs=1)

    def test_biggs_alone_records(self):
        records = scan(ScanQuery(3, 3, 6, 6))
        flagged = [r for r in records if r.ruled_out_by_biggs_alone]
        for record in flagged:
            assert record.ratio >= Fraction(87, 100)
            assert record.verdict.category is BiggsClass.VIOLATION

    def test_capped_degree3_scan(self):
        records = scan(ScanQuery(3, 3, 2, 7, n_max=110))
        by_text = {str(r.array): r for r in records}
        target = by_text["(3,2,2,1,1,1,1;1,1,1,1,1,1,3)"]
        assert target.first_failing_check == "biggs_violation"
        assert target.ratio == Fraction(64, 61)
        big = by_text["(3,2,2,2,2,2;1,1,1,1,1,3)"]  # 126 vertices
        assert big.first_failing_check == "n_max"


class TestBulkInvariants:
    def test_profile_identities_over_enumeration(self):
        # d_D/d_1 = 1 + ratio and strict monotonicity wherever shells are whole
        from drglab import compute_distance_distribution, resistance_profile

        checked = 0
        for arr in enumerate_arrays(ScanQuery(3, 5, 2, 5)):
            if not compute_distance_distribution(arr).shells_integral:
                continue
            profile = resistance_profile(arr)
            assert profile.d[-1] / profile.d[0] == 1 + profile.ratio
            assert all(a < b for a, b in zip(profile.d, profile.d[1:]))
            checked += 1
        assert checked > 300

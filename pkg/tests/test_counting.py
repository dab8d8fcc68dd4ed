"""Counting formulas, string statistics, and the exponent census."""

from collections import Counter

import pytest

from companion_exponents import (
    CensusRecord,
    CompanionSpec,
    companion_matrix,
    block_prefix_upper_count,
    census,
    count_imprimitive,
    count_positive_trace_with_exponent,
    count_primitive,
    exponent,
    f_strings,
    gap_progression_exponent_claim,
    is_primitive,
    list_imprimitive,
    longest_run,
    membership,
    oracle_exponent,
    string_count_table,
    t_runs,
    two_coprime_exponent_claim,
    vertex_partition,
)
from helpers import binary_strings, irreducible_rows, longest_zero_run

KNOWN_IMPRIMITIVE_TAILS_8 = {
    "0000000", "0100000", "0001000", "0000010",
    "0101000", "0100010", "0001010", "0101010",
}


class TestImprimitiveCounts:
    def test_inclusion_exclusion_values(self):
        assert count_imprimitive(8) == 8
        assert count_imprimitive(10) == 17
        assert count_imprimitive(7) == 1

    def test_rejects_small_order(self):
        with pytest.raises(ValueError):
            count_imprimitive(2)

    def test_list_order_eight(self):
        rows = list_imprimitive(8)
        assert len(rows) == 8
        assert all(row.startswith("1") for row in rows)
        assert {row[1:] for row in rows} == KNOWN_IMPRIMITIVE_TAILS_8

    def test_list_order_seven(self):
        assert list_imprimitive(7) == ["1000000"]

    def test_list_matches_formula(self):
        for n in range(3, 15):
            assert len(list_imprimitive(n)) == count_imprimitive(n)

    def test_count_primitive(self):
        assert count_primitive(8) == 120
        assert count_primitive(10) == 495
        assert count_primitive(3) == 3


class TestStringCounts:
    def test_exact_set_worked_example(self):
        members = {s for s in binary_strings(6)
                   if s.count("0") == 4 and longest_zero_run(s) == 2}
        assert members == {"100100", "010100", "010010", "001100", "001010", "001001"}
        assert f_strings(6, 4, 2) == 6

    def test_all_ones_bucket(self):
        assert f_strings(6, 0, 0) == 1
        assert f_strings(0, 0, 0) == 1

    def test_out_of_range_zero(self):
        assert f_strings(-1, 0, 0) == 0
        assert f_strings(6, 7, 2) == 0
        assert f_strings(6, 2, 3) == 0
        assert f_strings(6, 3, -1) == 0

    def test_sums_to_power_of_two(self):
        for n in range(0, 13):
            table = string_count_table(n)
            total = sum(table.count(x, k) for x in range(n + 1) for k in range(n + 1))
            assert total == 1 << n

    def test_matches_enumeration(self):
        for n in range(0, 13):
            brute = Counter(
                (s.count("0"), longest_zero_run(s)) for s in binary_strings(n)
            )
            for x in range(n + 1):
                for k in range(x + 1):
                    assert f_strings(n, x, k) == brute.get((x, k), 0)


class TestRunAvoidance:
    def test_exact_set_worked_example(self):
        members = {s for s in binary_strings(3) if "11" not in s}
        assert members == {"000", "101", "001", "100", "010"}
        assert t_runs(2, 3) == 5

    def test_fibonacci_step(self):
        assert t_runs(2, 4) == 8

    def test_short_strings_unconstrained(self):
        for r in range(2, 6):
            for n in range(0, r):
                assert t_runs(r, n) == 1 << n

    def test_rejects_run_below_two(self):
        with pytest.raises(ValueError):
            t_runs(1, 5)

    def test_matches_enumeration(self):
        for r in range(2, 6):
            for n in range(0, 12):
                brute = sum(1 for s in binary_strings(n) if "1" * r not in s)
                assert t_runs(r, n) == brute


class TestPositiveTraceCounts:
    def test_worked_example(self):
        assert count_positive_trace_with_exponent(8, 11) == 12
        assert sum(f_strings(6, x, 3) for x in range(3, 7)) == 12

    def test_minimum_exponent_unique(self):
        for n in range(3, 9):
            assert count_positive_trace_with_exponent(n, n) == 1

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            count_positive_trace_with_exponent(8, 15)
        with pytest.raises(ValueError):
            count_positive_trace_with_exponent(8, 7)

    def test_matches_census_slice(self, census_cache):
        for n in range(3, 11):
            actual = Counter(
                exponent(spec).value
                for spec in (CompanionSpec(n, row) for row in irreducible_rows(n))
                if spec.row[-1] == 1 and is_primitive(spec)
            )
            for t in range(n, 2 * (n - 1) + 1):
                assert count_positive_trace_with_exponent(n, t) == actual.get(t, 0)
            assert sum(actual.values()) == sum(
                count_positive_trace_with_exponent(n, t)
                for t in range(n, 2 * (n - 1) + 1)
            )


class TestBlockPrefixUpperCount:
    def test_order_three_single_term(self):
        assert block_prefix_upper_count(3) == 1

    def test_bounds_enumeration(self):
        # the sum stays an upper bound; it is not attained even at prime
        # orders because it ignores the fixed zero at vertex n
        for n in range(5, 12):
            qualifying = 0
            for row in irreducible_rows(n):
                spec = CompanionSpec(n, row)
                if not is_primitive(spec) or spec.row[-1] != 0:
                    continue
                part = vertex_partition(spec)
                run = longest_run(part.zeros)
                if all(v in part.zeros for v in range(2, run + 2)):
                    qualifying += 1
            assert block_prefix_upper_count(n) >= qualifying

    def test_known_values(self):
        assert block_prefix_upper_count(7) == 13
        assert block_prefix_upper_count(8) == 23


class TestCensus:
    def test_order_three(self, census_cache):
        record = census_cache(3)
        assert record.exponent_set == (3, 4, 5)
        assert record.histogram == {3: 1, 4: 1, 5: 1}
        assert record.primitive_count == 3
        assert record.imprimitive_count == 1

    def test_order_eight_totals(self, census_cache):
        record = census_cache(8)
        assert record.primitive_count == 120
        assert record.imprimitive_count == 8
        assert record.total_irreducible == 128
        assert record.histogram[50] == 1
        assert record.witnesses[50] == "11000000"
        assert record.histogram[8] == 1
        assert record.witnesses[8] == "11111111"

    def test_histogram_accounts_for_everything(self, census_cache):
        for n in (5, 8, 10):
            record = census_cache(n)
            assert record.primitive_count + record.imprimitive_count == 1 << (n - 1)
            assert record.reducible_count == 1 << (n - 1)
            assert record.exponent_set[0] == n

    def test_witnesses_attain_their_exponent(self, census_cache):
        record = census_cache(8)
        for value, row in record.witnesses.items():
            assert oracle_exponent(companion_matrix(CompanionSpec(8, row))) == value

    def test_witnesses_are_lexicographic_minima(self, census_cache):
        record = census_cache(6)
        by_value: dict[int, str] = {}
        for row in irreducible_rows(6):
            spec = CompanionSpec(6, row)
            if not is_primitive(spec):
                continue
            value = exponent(spec).value
            by_value.setdefault(value, row)
        assert record.witnesses == by_value

    def test_membership(self, census_cache):
        record = census_cache(10)
        assert membership(record, 10) == (True, "1111111111")
        assert membership(record, 20) == (False, None)
        assert membership(record, 82) == (True, "1100000000")
        assert membership(record, 83) == (False, None)

    def test_order_bounds(self):
        with pytest.raises(ValueError):
            census(2)
        with pytest.raises(ValueError):
            census(21)

    def test_check_oracle_passes(self):
        census(7, check_oracle=True)

    def test_parallel_matches_sequential(self, census_cache):
        record = census_cache(10)
        parallel = census(10, jobs=2)
        assert parallel == record
        assert parallel.to_csv() == record.to_csv()
        assert parallel.to_json() == record.to_json()


class TestCensusSerialization:
    def test_csv_schema(self, census_cache):
        record = census_cache(6)
        lines = record.to_csv().splitlines()
        assert lines[0] == "n,exponent,count,witness_row"
        assert lines[1] == "6,6,1,111111"
        assert lines[-1] == "6,26,1,110000"
        exponents = [int(line.split(",")[1]) for line in lines[1:]]
        assert exponents == sorted(exponents)

    def test_csv_deterministic(self, census_cache):
        assert census(6).to_csv() == census_cache(6).to_csv()

    def test_json_round_trip(self, census_cache):
        record = census_cache(6)
        text = record.to_json()
        assert text.endswith("\n")
        restored = CensusRecord.from_json(text)
        assert restored == record

    def test_json_fields(self, census_cache):
        import json

        data = json.loads(census_cache(6).to_json())
        assert set(data) == {
            "n", "total_irreducible", "imprimitive_count", "histogram",
            "exponent_set", "witnesses", "tool_version",
        }
        assert data["n"] == 6
        assert data["total_irreducible"] == 32
        assert data["histogram"]["26"] == 1


class TestMembershipClaims:
    def test_two_coprime_values(self):
        assert two_coprime_exponent_claim(10, 4, 3) == 21
        assert two_coprime_exponent_claim(12, 5, 2) == 22
        assert two_coprime_exponent_claim(11, 4, 3) == 23

    def test_two_coprime_preconditions(self):
        with pytest.raises(ValueError):
            two_coprime_exponent_claim(10, 4, 2)          # not coprime
        with pytest.raises(ValueError):
            two_coprime_exponent_claim(10, 5, 4)          # n - s does not dominate
        with pytest.raises(ValueError):
            two_coprime_exponent_claim(10, 4, 5)          # s <= t

    def test_gap_progression_values(self):
        assert gap_progression_exponent_claim(10, 4, 5) == 21

    def test_gap_progression_preconditions(self):
        with pytest.raises(ValueError):
            gap_progression_exponent_claim(10, 4, 4)      # start below smallest cycle + 1
        with pytest.raises(ValueError):
            gap_progression_exponent_claim(10, 4, 7)      # divisor would vanish

    def test_claims_are_census_members(self, census_cache):
        assert two_coprime_exponent_claim(10, 4, 3) in census_cache(10).histogram
        assert two_coprime_exponent_claim(11, 4, 3) in census_cache(11).histogram
        assert two_coprime_exponent_claim(12, 5, 2) in census_cache(12).histogram
        assert gap_progression_exponent_claim(10, 4, 5) in census_cache(10).histogram

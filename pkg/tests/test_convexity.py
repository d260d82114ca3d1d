import pytest

from digiconvex.convexity import (
    DOWNWARD,
    UPWARD,
    is_balanced,
    is_digitally_convex,
    mfw_balanced,
    mfw_dc,
    mfw_of_word,
)
from digiconvex.counting import totient
from digiconvex.errors import ContractError
from digiconvex.lyndon import is_lyndon
from digiconvex.words import complement, reverse
from oracles import (
    all_words,
    geometric_convex_down,
    geometric_convex_up,
    naive_balanced,
    naive_mfw,
)


class TestBalance:
    def test_examples(self):
        assert not is_balanced("0101000")
        assert is_balanced("00100100101")
        assert not is_balanced("000101")
        assert all(is_balanced(f) for f in proper_factors("000101"))
        # this often-quoted convex word is in fact balanced under the
        # sliding-window definition
        assert is_balanced("0101001001")

    def test_trivial(self):
        assert is_balanced("")
        assert is_balanced("0")
        assert is_balanced("11")

    def test_against_factor_set_oracle(self):
        for n in range(14):
            for w in all_words(n):
                assert is_balanced(w) == naive_balanced(w)


def proper_factors(w):
    n = len(w)
    return {w[i:j] for i in range(n + 1) for j in range(i, n + 1) if j - i < n}


class TestDigitalConvexity:
    def test_examples(self):
        assert is_digitally_convex("0101001001").convex
        report = is_digitally_convex("0011")
        assert not report.convex
        assert report.witness.factor == "0011"
        assert (report.witness.start, report.witness.end) == (0, 4)
        assert not is_balanced(report.witness.factor)
        assert is_digitally_convex("1100").convex
        assert is_digitally_convex("").convex
        assert is_digitally_convex("0101000").convex  # convex but unbalanced

    def test_downward_direction(self):
        assert is_digitally_convex("1001010010", DOWNWARD).convex
        assert not is_digitally_convex("1100", DOWNWARD).convex

    def test_unknown_direction(self):
        with pytest.raises(ValueError):
            is_digitally_convex("01", "sideways")

    def test_witness_iff_not_convex(self):
        for n in range(11):
            for w in all_words(n):
                for direction in (UPWARD, DOWNWARD):
                    report = is_digitally_convex(w, direction)
                    assert report.convex == (report.witness is None)
                    if report.witness is not None:
                        occurrence = w[report.witness.start : report.witness.end]
                        assert occurrence == report.witness.factor
                        assert not is_balanced(report.witness.factor)

    def test_against_geometric_oracle(self):
        for n in range(13):
            for w in all_words(n):
                assert is_digitally_convex(w, UPWARD).convex == geometric_convex_up(w)
                assert is_digitally_convex(w, DOWNWARD).convex == geometric_convex_down(w)

    def test_reverse_and_complement_swap_directions(self):
        for n in range(15):
            for w in all_words(n):
                up = is_digitally_convex(w, UPWARD).convex
                assert up == is_digitally_convex(reverse(w), DOWNWARD).convex
                assert up == is_digitally_convex(complement(w), DOWNWARD).convex

    def test_balance_is_convexity_in_both_directions(self):
        for n in range(13):
            for w in all_words(n):
                balanced = is_balanced(w)
                up = is_digitally_convex(w, UPWARD).convex
                down = is_digitally_convex(w, DOWNWARD).convex
                assert balanced == (up and down)
                assert balanced == (up and is_digitally_convex(reverse(w), UPWARD).convex)
                assert balanced == (up and is_digitally_convex(complement(w), UPWARD).convex)

    def test_factor_closure(self):
        # a factorial property only needs the two one-letter removals
        for n in range(15):
            table = {}
            for m in (n - 1, n):
                if m >= 0:
                    for w in all_words(m):
                        table.setdefault(w, is_digitally_convex(w).convex)
            for w in all_words(n):
                if n and table[w]:
                    assert table[w[1:]] and table[w[:-1]]

    def test_balance_is_factorial(self):
        for n in range(15):
            table = {}
            for m in (n - 1, n):
                if m >= 0:
                    for w in all_words(m):
                        table.setdefault(w, is_balanced(w))
            for w in all_words(n):
                if n and table[w]:
                    assert table[w[1:]] and table[w[:-1]]


class TestMfwOfWord:
    def test_examples(self):
        assert mfw_of_word("01001") == ["000", "0010", "101", "11"]
        assert mfw_of_word("0") == ["00", "1"]
        assert mfw_of_word("") == ["0", "1"]

    def test_max_len_truncates(self):
        assert mfw_of_word("01001", max_len=3) == ["000", "101", "11"]
        with pytest.raises(ContractError):
            mfw_of_word("01001", max_len=0)

    def test_against_proper_factor_scan(self):
        for n in range(0, 9):
            for w in all_words(n):
                factors = proper_factors(w) | {w}
                expected = []
                for m in range(1, n + 2):
                    for cand in all_words(m):
                        if cand in factors:
                            continue
                        if all(
                            f in factors
                            for f in proper_factors(cand)
                        ):
                            expected.append(cand)
                assert mfw_of_word(w) == sorted(expected)


class TestMfwBalanced:
    def test_examples(self):
        assert "000101" in mfw_balanced(6)
        assert mfw_balanced(4) == ["0011", "1100"]
        assert mfw_balanced(2) == []
        assert mfw_balanced(3) == []
        with pytest.raises(ContractError):
            mfw_balanced(1)

    def test_against_brute_force(self):
        for n in range(2, 13):
            assert mfw_balanced(n) == naive_mfw(naive_balanced, n)

    def test_counts(self):
        for n in range(2, 41):
            assert len(mfw_balanced(n)) == 2 * (n - 1 - totient(n))

    def test_zero_start_half_equals_dc_mfw(self):
        for n in range(2, 21):
            zero_start = [w for w in mfw_balanced(n) if w.startswith("0")]
            assert zero_start == mfw_dc(n)


class TestMfwDc:
    def test_examples(self):
        assert mfw_dc(4) == ["0011"]
        assert mfw_dc(5) == []
        six = mfw_dc(6)
        assert len(six) == 3
        assert "000101" in six

    def test_constructions_agree(self):
        for n in range(2, 41):
            assert mfw_dc(n, "complement") == mfw_dc(n, "provencal")

    def test_against_brute_force(self):
        for n in range(2, 13):
            assert mfw_dc(n) == naive_mfw(lambda w: geometric_convex_up(w), n)

    def test_members_are_lyndon(self):
        for n in range(2, 31):
            for w in mfw_dc(n):
                assert is_lyndon(w)

    def test_count_formula(self):
        for n in range(2, 65):
            assert len(mfw_dc(n)) == n - 1 - totient(n)

    def test_bad_construction_name(self):
        with pytest.raises(ValueError):
            mfw_dc(6, "sideways")

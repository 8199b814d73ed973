"""
Unit tests for fold words, folding systems and the fold expander.
"""

import pytest

from app.errors import LengthCapExceeded, WordParseError
from app.models.fold_letter import FoldLetter
from app.models.fold_word import FoldingSystem, FoldWord
from app.words.expander import Expander, expand_fold
from app.words.fold_words import complement_reverse, parse_fold_word
from tests.helpers import valid_fold_words

CATALOG_SIGMAS = [
    "A-B",
    "A-B+A-B+A+B-A+B+A",
    "B+A-B-A+B+A+B-A+B+A-B-A-B+A-B+A+B",
    "B+A+B-A-B-A+B+A+B-A",
    "A+B-A-B+A+B+A-B",
    "A+B+A-B-A",
]


class TestParseFoldWord:
    """Parsing and validation of words over A, B, + and -."""

    @pytest.mark.unit
    @pytest.mark.parametrize("text", ["A", "B", "A-B", "B+A-B"] + CATALOG_SIGMAS)
    def test_valid_words(self, text):
        """Valid words keep their text."""
        assert parse_fold_word(text).text == text

    @pytest.mark.unit
    @pytest.mark.parametrize(
        "text, position, reason",
        [
            ("AB", 2, "turn letter expected"),
            ("A+A", 3, "adjacent move letters equal"),
            ("", 1, "empty word"),
            ("A+", 2, "word must end with a move letter"),
            ("AxB", 2, "unknown character 'x'"),
            ("+A", 1, "move letter expected"),
        ],
    )
    def test_invalid_words(self, text, position, reason):
        """Errors name the offending 1-based position."""
        with pytest.raises(WordParseError) as excinfo:
            parse_fold_word(text)
        assert excinfo.value.position == position
        assert excinfo.value.reason == reason
        assert f"{reason} at position {position}" in str(excinfo.value)

    @pytest.mark.unit
    def test_parse_error_is_value_error(self):
        with pytest.raises(ValueError):
            FoldWord("AA")

    @pytest.mark.unit
    def test_letters_and_moves(self):
        word = FoldWord("A-B+A")
        assert word.move_count == 3
        assert word.first_move is FoldLetter.MOVE_A
        assert word.last_move is FoldLetter.MOVE_A
        assert word.letters[1] is FoldLetter.TURN_MINUS
        assert len(word) == 5


class TestComplementReverse:
    """The map used to build sigma(B) from sigma(A)."""

    @pytest.mark.unit
    @pytest.mark.parametrize(
        "text, expected",
        [("A-B", "A+B"), ("A", "B"), ("A+B-A", "B+A-B"), ("B+A+B", "A-B-A")],
    )
    def test_examples(self, text, expected):
        assert complement_reverse(FoldWord(text)).text == expected

    @pytest.mark.unit
    @pytest.mark.parametrize("text", valid_fold_words(7))
    def test_involution(self, text):
        word = FoldWord(text)
        assert complement_reverse(complement_reverse(word)) == word

    @pytest.mark.unit
    def test_folding_system_derives_b(self):
        system = FoldingSystem.from_sigma("A-B")
        assert system.prod_b.text == "A+B"
        assert system.production(FoldLetter.MOVE_B) == system.prod_b
        with pytest.raises(ValueError):
            system.production(FoldLetter.TURN_PLUS)


class TestExpandFold:
    """Parallel rewriting of fold words."""

    @pytest.fixture
    def heighway(self):
        return FoldingSystem.from_sigma("A-B")

    @pytest.mark.unit
    def test_level_zero_is_axiom(self, heighway):
        assert expand_fold(heighway, FoldLetter.MOVE_A, 0).text == "A"
        assert expand_fold(heighway, FoldLetter.MOVE_B, 0).text == "B"

    @pytest.mark.unit
    def test_heighway_level_two(self, heighway):
        assert expand_fold(heighway, FoldLetter.MOVE_A, 2).text == "A-B-A+B"

    @pytest.mark.unit
    @pytest.mark.parametrize("sigma", CATALOG_SIGMAS)
    @pytest.mark.parametrize("n", range(5))
    def test_move_count_and_alternation(self, sigma, n):
        """m**n moves and m**n - 1 turns; construction re-validates alternation."""
        system = FoldingSystem.from_sigma(sigma)
        m = system.move_count
        word = expand_fold(system, FoldLetter.MOVE_A, n)
        assert word.move_count == m**n
        assert len(word) - word.move_count == m**n - 1

    @pytest.mark.unit
    @pytest.mark.parametrize("sigma", CATALOG_SIGMAS)
    def test_b_expansion_is_complement_reverse(self, sigma):
        system = FoldingSystem.from_sigma(sigma)
        a = expand_fold(system, FoldLetter.MOVE_A, 3)
        b = expand_fold(system, FoldLetter.MOVE_B, 3)
        assert b == a.complement_reverse()

    @pytest.mark.unit
    def test_cap_is_checked_before_expanding(self, heighway):
        with pytest.raises(LengthCapExceeded) as excinfo:
            Expander(cap=10).expand_fold(heighway, FoldLetter.MOVE_A, 3)
        assert excinfo.value.length == 15
        assert excinfo.value.cap == 10

    @pytest.mark.unit
    def test_cap_allows_exact_length(self, heighway):
        assert len(Expander(cap=15).expand_fold(heighway, FoldLetter.MOVE_A, 3)) == 15

    @pytest.mark.unit
    def test_turn_axiom_rejected(self, heighway):
        with pytest.raises(ValueError):
            expand_fold(heighway, FoldLetter.TURN_PLUS, 1)

    @pytest.mark.unit
    def test_negative_level_rejected(self, heighway):
        with pytest.raises(ValueError):
            expand_fold(heighway, FoldLetter.MOVE_A, -1)

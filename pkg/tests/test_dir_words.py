"""
Unit tests for boundary words, the parity law and boundary systems.
"""

import pytest

from app.errors import InvalidBoundarySystemError, LengthCapExceeded, WordParseError
from app.models.dir_word import KEY_ORDER, BoundarySystem, DirLetter, DirWord
from app.models.direction import Direction, Parity
from app.words.dir_words import check_parity_law, parse_dir_word
from app.words.expander import Expander, expand_boundary

HEIGHWAY_TAU = "L=Ll,R=S,l=S,r=Rr,S=Lr,s=Rl"


class TestParseDirWord:
    """Raw and finished boundary words."""

    @pytest.mark.unit
    def test_finished_word(self):
        word = parse_dir_word("LrSRrLslLrL")
        assert len(word) == 11
        assert word.letters[0] == DirLetter(Direction.TURN_LEFT, Parity.EVEN)
        assert word.letters[1] == DirLetter(Direction.TURN_RIGHT, Parity.ODD)
        assert word.letters[6] == DirLetter(Direction.STRAIGHT, Parity.ODD)

    @pytest.mark.unit
    def test_raw_word(self):
        word = parse_dir_word("RsLvL", finished=False)
        assert word.has_reverse
        assert word.directions[3] is Direction.REVERSE
        assert word.letters[1].parity is None

    @pytest.mark.unit
    @pytest.mark.parametrize(
        "text, finished, position",
        [("LX", True, 2), ("Lv", True, 2), ("LS", False, 2), ("l", False, 1)],
    )
    def test_unknown_letters(self, text, finished, position):
        with pytest.raises(WordParseError) as excinfo:
            parse_dir_word(text, finished)
        assert excinfo.value.position == position

    @pytest.mark.unit
    def test_skeleton_strips_parity(self):
        assert DirWord("lrSLRs").skeleton() == DirWord.raw("LRsLRs")

    @pytest.mark.unit
    def test_inverted(self):
        assert DirWord("LlS").inverted().text == "SrR"

    @pytest.mark.unit
    def test_mixed_concatenation_rejected(self):
        with pytest.raises(ValueError):
            DirWord("L") + DirWord.raw("L")

    @pytest.mark.unit
    def test_from_letters_round_trip(self):
        word = DirWord("RrLsS")
        assert DirWord.from_letters(word.letters) == word


class TestParityLaw:
    """A turn flips the parity of the next letter, a straight keeps it."""

    @pytest.mark.unit
    @pytest.mark.parametrize(
        "text", ["Ll", "LlS", "SSRsrR", "rLsr", "LrSRrLslLrL", "S"]
    )
    def test_words_obeying_the_law(self, text):
        assert check_parity_law(DirWord(text)) is None

    @pytest.mark.unit
    @pytest.mark.parametrize(
        "text, index", [("LL", 1), ("Ss", 1), ("LlSs", 3), ("rRL", 2)]
    )
    def test_violations(self, text, index):
        assert check_parity_law(DirWord(text)) == index

    @pytest.mark.unit
    def test_raw_words_always_pass(self):
        assert check_parity_law(DirWord.raw("LLss")) is None


class TestBoundarySystem:
    """The six productions and their text format."""

    @pytest.mark.unit
    def test_text_round_trip(self):
        assert BoundarySystem.from_text(HEIGHWAY_TAU).to_text() == HEIGHWAY_TAU

    @pytest.mark.unit
    def test_to_text_uses_table_order(self):
        shuffled = "s=Rl,S=Lr,r=Rr,l=S,R=S,L=Ll"
        assert BoundarySystem.from_text(shuffled).to_text() == HEIGHWAY_TAU
        assert [key for key, _ in BoundarySystem.from_text(shuffled).items()] == list(
            KEY_ORDER
        )

    @pytest.mark.unit
    def test_production_lookup(self):
        tau = BoundarySystem.from_text(HEIGHWAY_TAU)
        assert tau.production(Direction.TURN_RIGHT, Parity.ODD).text == "Rr"
        assert tau.production(Direction.STRAIGHT, Parity.EVEN).text == "Lr"
        assert tau["L"].text == "Ll"

    @pytest.mark.unit
    @pytest.mark.parametrize(
        "text",
        [
            "L=Ll,R=S,l=S,r=Rr,S=Lr",
            "L=LL,R=S,l=S,r=Rr,S=Lr,s=Rl",
            "L=,R=S,l=S,r=Rr,S=Lr,s=Rl",
            "L=Ll,R=S,l=S,r=Rr,S=Lr,x=Rl",
            "L=Ll,R=S,l=S,r=Rr,S=Lr,s",
        ],
    )
    def test_invalid_systems(self, text):
        with pytest.raises(InvalidBoundarySystemError):
            BoundarySystem.from_text(text)

    @pytest.mark.unit
    def test_unknown_letter_in_production(self):
        with pytest.raises(WordParseError) as excinfo:
            BoundarySystem.from_text("L=Lx,R=S,l=S,r=Rr,S=Lr,s=Rl")
        assert excinfo.value.position == 2

    @pytest.mark.unit
    def test_raw_production_rejected(self):
        productions = {key: DirWord("S") for key in KEY_ORDER}
        productions["L"] = DirWord.raw("s")
        with pytest.raises(InvalidBoundarySystemError):
            BoundarySystem(productions)


class TestExpandBoundary:
    """Parallel rewriting with tau."""

    @pytest.fixture
    def tau(self):
        return BoundarySystem.from_text(HEIGHWAY_TAU)

    @pytest.mark.unit
    @pytest.mark.parametrize(
        "axiom, n, expected",
        [("R", 1, "S"), ("L", 2, "LlS"), ("LrS", 0, "LrS"), ("R", 3, "LlRr")],
    )
    def test_examples(self, tau, axiom, n, expected):
        assert expand_boundary(tau, DirWord(axiom), n).text == expected

    @pytest.mark.unit
    def test_raw_word_rejected(self, tau):
        with pytest.raises(ValueError):
            expand_boundary(tau, DirWord.raw("L"), 1)

    @pytest.mark.unit
    def test_cap(self, tau):
        with pytest.raises(LengthCapExceeded):
            Expander(cap=8).expand_boundary(tau, DirWord("L"), 6)

    @pytest.mark.unit
    def test_parity_violating_word_still_expands(self, tau):
        """The rewriter is total; the law is checked separately."""
        word = DirWord("LL")
        assert check_parity_law(word) == 1
        assert expand_boundary(tau, word, 1).text == "LlLl"

    @pytest.mark.unit
    @pytest.mark.parametrize("axiom", ["R", "L", "S", "r", "l", "s"])
    @pytest.mark.parametrize("n", range(5))
    def test_expansion_preserves_parity_law(self, catalog_records, axiom, n):
        for record in catalog_records:
            tau = record.expected_system()
            word = expand_boundary(tau, DirWord(axiom), n)
            assert check_parity_law(word) is None, record.name

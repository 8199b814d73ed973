"""Derivation of the boundary L-system tau from a folding rule sigma.

The left side of a single move A is traced by one right turn R and the right
side by one left turn L, so the image of R under tau is the left boundary of
sigma(A) and the image of L is its right boundary. Both are first written with
backtracking, reduced, thinned and finally given square parities.
"""

import logging
from dataclasses import dataclass

from app.derivation.reducer import LEFTMOST, reduce_word
from app.errors import InvalidFoldingCurveError, ReductionError, ThinningError
from app.geometry.self_avoidance import check_self_avoiding
from app.geometry.turtle import render_fold
from app.models.dir_word import BoundarySystem, DirLetter, DirWord
from app.models.direction import Direction, Parity
from app.models.fold_letter import FoldLetter
from app.models.fold_word import FoldingSystem, FoldWord
from app.models.lattice import GridPoint, Heading

log = logging.getLogger(__name__)

_LEFT_TABLE = str.maketrans("AB+-", "RRsv")
_RIGHT_TABLE = str.maketrans("AB+-", "LLvs")


def create_left(word: FoldWord) -> DirWord:
    """Left boundary of ``word`` with backtracking: A, B, +, - become R, R, s, v."""
    return DirWord.raw(word.text.translate(_LEFT_TABLE))


def create_right(word: FoldWord) -> DirWord:
    """Right boundary of ``word`` with backtracking: A, B, +, - become L, L, v, s."""
    return DirWord.raw(word.text.translate(_RIGHT_TABLE))


def thin(word: DirWord) -> DirWord:
    """Keep the letters at odd 1-based positions, dropping the placeholders."""
    if word.finished:
        raise ThinningError(f"cannot thin finished word {word}")
    text = word.text
    if "v" in text:
        raise ThinningError(f"reverse left in {text!r} at index {text.index('v')}")
    for index in range(1, len(text), 2):
        if text[index] != "s":
            raise ThinningError(
                f"turn {text[index]!r} at even position {index + 1} of {text!r}"
            )
    return DirWord.raw(text[0::2])


def invert(word: DirWord) -> DirWord:
    """Reverse the word and swap left and right turns."""
    if word.has_reverse:
        raise ValueError(f"cannot invert {word}: it still contains a reverse letter")
    return word.inverted()


def make_straight_words(
    left_word: DirWord, right_word: DirWord, order: str = LEFTMOST
) -> tuple[DirWord, DirWord]:
    """Reduced, unthinned raw words for tau(S) and tau(s).

    A straight letter is a right turn followed by a reversed left turn (or the
    other way round), so both words glue the left boundary to the inverted right
    boundary through a reverse letter.
    """
    reverse = DirWord.raw("v")
    inverted_right = invert(right_word)
    raw_even = reduce_word(left_word + reverse + inverted_right, order)
    raw_odd = reduce_word(inverted_right + reverse + left_word, order)
    return raw_even, raw_odd


def case_for_upper(word: FoldWord) -> Parity:
    return Parity.EVEN if word.first_move is FoldLetter.MOVE_A else Parity.ODD


def case_for_lower(word: FoldWord) -> Parity:
    return Parity.ODD if word.last_move is FoldLetter.MOVE_A else Parity.EVEN


def alternate_cases(word: DirWord, initial: Parity) -> DirWord:
    """Assign parities: a turn flips the next parity, a straight keeps it."""
    if word.has_reverse:
        raise ValueError(f"cannot assign parities to {word}: it contains a reverse")
    parity = initial
    letters = []
    for letter in word.skeleton().letters:
        letters.append(DirLetter(letter.direction, parity))
        if letter.direction is not Direction.STRAIGHT:
            parity = parity.opposite
    return DirWord.from_letters(letters)


@dataclass(frozen=True)
class DerivationTrace:
    """Every intermediate word produced while deriving tau from sigma(A)."""

    sigma: FoldWord
    left_raw: DirWord
    left_reduced: DirWord
    right_raw: DirWord
    right_reduced: DirWord
    straight_even_raw: DirWord
    straight_even_reduced: DirWord
    straight_odd_raw: DirWord
    straight_odd_reduced: DirWord
    system: BoundarySystem

    def reductions(self) -> list[tuple[DirWord, DirWord]]:
        """(before, after) pairs for every reduction in the pipeline."""
        return [
            (self.left_raw, self.left_reduced),
            (self.right_raw, self.right_reduced),
            (self.straight_even_raw, self.straight_even_reduced),
            (self.straight_odd_raw, self.straight_odd_reduced),
        ]


def trace_derivation(system: FoldingSystem, order: str = LEFTMOST) -> DerivationTrace:
    sigma = system.prod_a
    report = check_self_avoiding(render_fold(sigma, GridPoint(0, 0), Heading.EAST))
    if not report.ok:
        raise InvalidFoldingCurveError(
            f"input not a valid folding curve: sigma(A)={sigma} {report.describe()}"
        )

    left_raw, right_raw = create_left(sigma), create_right(sigma)
    reverse = DirWord.raw("v")
    try:
        left_reduced = reduce_word(left_raw, order)
        right_reduced = reduce_word(right_raw, order)
        straight_even, straight_odd = make_straight_words(
            left_reduced, right_reduced, order
        )
    except ReductionError as e:
        raise InvalidFoldingCurveError(
            f"input not a valid folding curve: sigma(A)={sigma} ({e})"
        ) from e

    upper, lower = case_for_upper(sigma), case_for_lower(sigma)
    productions = {
        "R": alternate_cases(thin(left_reduced), upper),
        "L": alternate_cases(thin(right_reduced), upper),
        "r": alternate_cases(thin(invert(right_reduced)), lower),
        "l": alternate_cases(thin(invert(left_reduced)), lower),
        "S": alternate_cases(thin(straight_even), upper),
        "s": alternate_cases(thin(straight_odd), lower),
    }
    tau = BoundarySystem(productions)
    log.info("derived tau for sigma(A)=%s: %s", sigma, tau.to_text())

    inverted_right = invert(right_reduced)
    return DerivationTrace(
        sigma=sigma,
        left_raw=left_raw,
        left_reduced=left_reduced,
        right_raw=right_raw,
        right_reduced=right_reduced,
        straight_even_raw=left_reduced + reverse + inverted_right,
        straight_even_reduced=straight_even,
        straight_odd_raw=inverted_right + reverse + left_reduced,
        straight_odd_reduced=straight_odd,
        system=tau,
    )


def derive_boundary_system(system: FoldingSystem) -> BoundarySystem:
    return trace_derivation(system).system

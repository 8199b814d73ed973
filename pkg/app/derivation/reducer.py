import logging

from app.errors import ReductionError
from app.models.dir_word import DirWord

log = logging.getLogger(__name__)

# (X, Z) -> W for each window X v Z; s is the straight placeholder, v reverse.
REDUCTION_RULES = {
    ("R", "R"): "s",
    ("s", "R"): "L",
    ("R", "s"): "L",
    ("L", "L"): "s",
    ("s", "L"): "R",
    ("L", "s"): "R",
    ("R", "L"): "v",
    ("s", "s"): "v",
    ("L", "R"): "v",
}

LEFTMOST = "leftmost"
RIGHTMOST = "rightmost"


def reduce_word(word: DirWord, order: str = LEFTMOST) -> DirWord:
    """Remove backtracking by rewriting windows X v Z until no v is left.

    Each rewrite preserves the start point, end point and final heading of the
    rendered path. A v at either end of the word, or two adjacent v letters,
    cannot be rewritten and means the folding curve crosses itself.
    """
    if order not in (LEFTMOST, RIGHTMOST):
        raise ValueError(f"unknown reduction order {order!r}")
    letters = list(word.skeleton().text)
    if not letters:
        raise ReductionError(word.text, 0, "empty word")

    while "v" in letters:
        if order == LEFTMOST:
            j = letters.index("v")
        else:
            j = len(letters) - 1 - letters[::-1].index("v")
        current = "".join(letters)
        if j == 0 or j == len(letters) - 1:
            raise ReductionError(current, j, "reverse at the end of the word")
        window = (letters[j - 1], letters[j + 1])
        if "v" in window:
            raise ReductionError(current, j, "adjacent reverse letters")
        letters[j - 1 : j + 2] = [REDUCTION_RULES[window]]
        log.debug("reduce %s -> %s", current, "".join(letters))

    return DirWord.raw("".join(letters))

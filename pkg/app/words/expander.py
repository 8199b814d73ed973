import logging
from collections import Counter
from typing import Optional

from app.config import get_settings
from app.errors import LengthCapExceeded
from app.models.dir_word import KEY_ORDER, BoundarySystem, DirWord
from app.models.fold_letter import FoldLetter
from app.models.fold_word import FoldingSystem, FoldWord

log = logging.getLogger(__name__)


class Expander:
    """Parallel letter-wise rewriting for both L-systems, bounded by a length cap."""

    def __init__(self, cap: Optional[int] = None):
        self.cap = cap if cap is not None else get_settings().length_cap

    def expand_fold(
        self, system: FoldingSystem, start: FoldLetter, n: int
    ) -> FoldWord:
        if not start.is_move:
            raise ValueError(f"axiom must be a move letter, got {start}")
        if n < 0:
            raise ValueError("number of iterations must be nonnegative")
        length = 2 * system.move_count**n - 1
        if length > self.cap:
            raise LengthCapExceeded(self.cap, length)

        table = str.maketrans({"A": system.prod_a.text, "B": system.prod_b.text})
        text = start.value
        for _ in range(n):
            text = text.translate(table)
        log.debug("sigma^%d(%s) has %d letters", n, start, len(text))
        return FoldWord(text)

    def expand_boundary(self, tau: BoundarySystem, word: DirWord, n: int) -> DirWord:
        if not word.finished:
            raise ValueError("only finished words can be expanded")
        if n < 0:
            raise ValueError("number of iterations must be nonnegative")
        self._check_boundary_length(tau, word, n)

        table = str.maketrans({key: tau[key].text for key in KEY_ORDER})
        text = word.text
        for _ in range(n):
            text = text.translate(table)
        log.debug("tau^%d(%s) has %d letters", n, word, len(text))
        return DirWord(text)

    def _check_boundary_length(
        self, tau: BoundarySystem, word: DirWord, n: int
    ) -> None:
        letter_counts = {key: Counter(tau[key].text) for key in KEY_ORDER}
        counts = Counter(word.text)
        for _ in range(n):
            expanded = Counter()
            for symbol, count in counts.items():
                for produced, times in letter_counts[symbol].items():
                    expanded[produced] += count * times
            counts = expanded
            length = sum(counts.values())
            if length > self.cap:
                raise LengthCapExceeded(self.cap, length)


def expand_fold(
    system: FoldingSystem, start: FoldLetter, n: int, cap: Optional[int] = None
) -> FoldWord:
    return Expander(cap).expand_fold(system, start, n)


def expand_boundary(
    tau: BoundarySystem, word: DirWord, n: int, cap: Optional[int] = None
) -> DirWord:
    return Expander(cap).expand_boundary(tau, word, n)

from dataclasses import dataclass
from typing import NamedTuple, Optional

from app.errors import InvalidBoundarySystemError, WordParseError
from app.models.direction import Direction, Parity

RAW_SYMBOLS = frozenset("LRsv")
FINISHED_SYMBOLS = frozenset("LRSlrs")
TURN_SYMBOLS = frozenset("LRlr")

# Order in which boundary systems list their productions.
KEY_ORDER = ("L", "R", "l", "r", "S", "s")

_INVERT_TABLE = str.maketrans("LRlr", "RLrl")
_SKELETON_TABLE = str.maketrans("lrS", "LRs")

_RAW_DIRECTIONS = {
    "L": Direction.TURN_LEFT,
    "R": Direction.TURN_RIGHT,
    "s": Direction.STRAIGHT,
    "v": Direction.REVERSE,
}
_RAW_SYMBOLS_BY_DIRECTION = {value: key for key, value in _RAW_DIRECTIONS.items()}


class DirLetter(NamedTuple):
    direction: Direction
    parity: Optional[Parity] = None

    @property
    def symbol(self) -> str:
        if self.parity is None:
            return _RAW_SYMBOLS_BY_DIRECTION[self.direction]
        if self.direction is Direction.REVERSE:
            raise ValueError("a reverse letter carries no parity")
        upper = self.direction.value
        return upper if self.parity is Parity.EVEN else upper.lower()

    @classmethod
    def from_symbol(cls, symbol: str, finished: bool) -> "DirLetter":
        if not finished:
            return cls(_RAW_DIRECTIONS[symbol])
        parity = Parity.EVEN if symbol.isupper() else Parity.ODD
        return cls(Direction(symbol.upper()), parity)


@dataclass(frozen=True, slots=True)
class DirWord:
    """A word over boundary directions.

    Raw words carry no parity and are written with ``L R s v`` (``s`` is the
    straight placeholder, ``v`` the reverse marker). Finished words carry a
    parity on every letter and are written with ``L R S`` for even squares and
    ``l r s`` for odd squares.
    """

    text: str
    finished: bool = True

    def __post_init__(self):
        alphabet = FINISHED_SYMBOLS if self.finished else RAW_SYMBOLS
        if not set(self.text) <= alphabet:
            for position, ch in enumerate(self.text, start=1):
                if ch not in alphabet:
                    kind = "finished" if self.finished else "raw"
                    raise WordParseError(
                        self.text, position, f"unknown {kind} boundary letter {ch!r}"
                    )

    @classmethod
    def parse(cls, text: str, finished: bool = True) -> "DirWord":
        return cls(text, finished)

    @classmethod
    def raw(cls, text: str) -> "DirWord":
        return cls(text, finished=False)

    @classmethod
    def from_letters(cls, letters) -> "DirWord":
        letters = tuple(letters)
        with_parity = {letter.parity is not None for letter in letters}
        if len(with_parity) > 1:
            raise ValueError("letters must all carry a parity or none may")
        finished = with_parity != {False}
        return cls("".join(letter.symbol for letter in letters), finished)

    @property
    def letters(self) -> tuple[DirLetter, ...]:
        return tuple(DirLetter.from_symbol(ch, self.finished) for ch in self.text)

    @property
    def directions(self) -> tuple[Direction, ...]:
        return tuple(letter.direction for letter in self.letters)

    @property
    def has_reverse(self) -> bool:
        return not self.finished and "v" in self.text

    def skeleton(self) -> "DirWord":
        """The raw word with the same directions, parity stripped."""
        if not self.finished:
            return self
        return DirWord(self.text.translate(_SKELETON_TABLE), finished=False)

    def inverted(self) -> "DirWord":
        return DirWord(self.text[::-1].translate(_INVERT_TABLE), self.finished)

    def __add__(self, other: "DirWord") -> "DirWord":
        if self.finished != other.finished:
            raise ValueError("cannot concatenate raw and finished words")
        return DirWord(self.text + other.text, self.finished)

    def __len__(self) -> int:
        return len(self.text)

    def __str__(self) -> str:
        return self.text


def parity_violation(word: DirWord) -> Optional[int]:
    """Index of the first letter breaking the parity alternation law, if any.

    After a turn the next letter starts in the other square parity, after a
    straight letter the parity carries over.
    """
    text = word.text
    for index in range(1, len(text)):
        previous, current = text[index - 1], text[index]
        same_parity = previous.isupper() == current.isupper()
        if (previous in TURN_SYMBOLS) == same_parity:
            return index
    return None


@dataclass(frozen=True)
class BoundarySystem:
    """The six productions tau(L), tau(R), tau(l), tau(r), tau(S), tau(s)."""

    productions: dict[str, DirWord]

    def __post_init__(self):
        if sorted(self.productions) != sorted(KEY_ORDER):
            raise InvalidBoundarySystemError(
                f"expected productions for {', '.join(KEY_ORDER)}, "
                f"got {', '.join(sorted(self.productions))}"
            )
        for key, word in self.productions.items():
            if not word.finished:
                raise InvalidBoundarySystemError(f"tau({key}) is not a finished word")
            if not word.text:
                raise InvalidBoundarySystemError(f"tau({key}) is empty")
            index = parity_violation(word)
            if index is not None:
                raise InvalidBoundarySystemError(
                    f"tau({key})={word} breaks the parity law at index {index}"
                )

    @classmethod
    def from_text(cls, text: str) -> "BoundarySystem":
        productions = {}
        for item in text.split(","):
            key, sep, value = item.strip().partition("=")
            if not sep or key.strip() not in KEY_ORDER:
                raise InvalidBoundarySystemError(f"malformed production {item!r}")
            productions[key.strip()] = DirWord.parse(value.strip())
        return cls(productions)

    def to_text(self) -> str:
        return ",".join(f"{key}={self.productions[key]}" for key in KEY_ORDER)

    def production(self, direction: Direction, parity: Parity) -> DirWord:
        return self.productions[DirLetter(direction, parity).symbol]

    def __getitem__(self, symbol: str) -> DirWord:
        return self.productions[symbol]

    def items(self):
        return ((key, self.productions[key]) for key in KEY_ORDER)

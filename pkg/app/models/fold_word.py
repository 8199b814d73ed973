from dataclasses import dataclass, field

from app.errors import WordParseError
from app.models.fold_letter import FoldLetter

MOVES = frozenset("AB")
TURNS = frozenset("+-")

_COMPLEMENT_TABLE = str.maketrans("AB+-", "BA-+")


@dataclass(frozen=True, slots=True)
class FoldWord:
    """A word X_1 s_1 X_2 ... s_{n-1} X_n over A, B, + and -.

    Moves sit at the odd 1-based positions and alternate between A and B,
    turns sit at the even positions. The text is validated on construction.
    """

    text: str

    def __post_init__(self):
        _validate(self.text)

    @classmethod
    def parse(cls, text: str) -> "FoldWord":
        return cls(text)

    @property
    def letters(self) -> tuple[FoldLetter, ...]:
        return tuple(FoldLetter(ch) for ch in self.text)

    @property
    def move_count(self) -> int:
        return (len(self.text) + 1) // 2

    @property
    def first_move(self) -> FoldLetter:
        return FoldLetter(self.text[0])

    @property
    def last_move(self) -> FoldLetter:
        return FoldLetter(self.text[-1])

    def complement_reverse(self) -> "FoldWord":
        return FoldWord(self.text[::-1].translate(_COMPLEMENT_TABLE))

    def __len__(self) -> int:
        return len(self.text)

    def __str__(self) -> str:
        return self.text


@dataclass(frozen=True, slots=True)
class FoldingSystem:
    """The folding rule A -> sigma(A), B -> sigma(B), + -> +, - -> -."""

    prod_a: FoldWord
    prod_b: FoldWord = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "prod_b", self.prod_a.complement_reverse())

    @classmethod
    def from_sigma(cls, text: str) -> "FoldingSystem":
        return cls(FoldWord(text))

    @property
    def move_count(self) -> int:
        return self.prod_a.move_count

    def production(self, letter: FoldLetter) -> FoldWord:
        if letter is FoldLetter.MOVE_A:
            return self.prod_a
        if letter is FoldLetter.MOVE_B:
            return self.prod_b
        raise ValueError(f"turn letter {letter} rewrites to itself")

    def __str__(self) -> str:
        return f"A->{self.prod_a} B->{self.prod_b}"


def _validate(text: str) -> None:
    moves, turns = text[0::2], text[1::2]
    if (
        text
        and len(text) % 2 == 1
        and set(moves) <= MOVES
        and set(turns) <= TURNS
        and moves == _alternating(moves[0], len(moves))
    ):
        return
    _locate_error(text)


def _alternating(first: str, length: int) -> str:
    other = "B" if first == "A" else "A"
    return ((first + other) * (length // 2 + 1))[:length]


def _locate_error(text: str) -> None:
    if not text:
        raise WordParseError(text, 1, "empty word")
    previous_move = None
    for position, ch in enumerate(text, start=1):
        if ch not in MOVES and ch not in TURNS:
            raise WordParseError(text, position, f"unknown character {ch!r}")
        if position % 2 == 1:
            if ch not in MOVES:
                raise WordParseError(text, position, "move letter expected")
            if ch == previous_move:
                raise WordParseError(text, position, "adjacent move letters equal")
            previous_move = ch
        elif ch not in TURNS:
            raise WordParseError(text, position, "turn letter expected")
    raise WordParseError(text, len(text), "word must end with a move letter")

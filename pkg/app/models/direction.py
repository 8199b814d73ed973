from enum import Enum


class Direction(Enum):
    TURN_LEFT = "L"
    TURN_RIGHT = "R"
    STRAIGHT = "S"
    REVERSE = "V"

    @property
    def quarter_turns(self) -> int:
        """Counterclockwise quarter turns applied at a letter with this direction."""
        return _QUARTER_TURNS[self]


class Parity(Enum):
    EVEN = "even"
    ODD = "odd"

    @property
    def opposite(self) -> "Parity":
        return Parity.ODD if self is Parity.EVEN else Parity.EVEN


_QUARTER_TURNS = {
    Direction.TURN_LEFT: 1,
    Direction.TURN_RIGHT: -1,
    Direction.STRAIGHT: 0,
    Direction.REVERSE: 2,
}

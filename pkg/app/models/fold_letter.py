from enum import Enum


class FoldLetter(Enum):
    MOVE_A = "A"
    MOVE_B = "B"
    TURN_PLUS = "+"
    TURN_MINUS = "-"

    @property
    def is_move(self) -> bool:
        return self in (FoldLetter.MOVE_A, FoldLetter.MOVE_B)

    def __str__(self) -> str:
        return self.value

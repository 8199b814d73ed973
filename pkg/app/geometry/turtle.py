from app.models.dir_word import DirWord
from app.models.direction import Direction
from app.models.fold_word import FoldWord
from app.models.lattice import GridPoint, Heading, LatticePath

# Quarter turns applied by each letter; + turns right, - turns left.
FOLD_TURNS = {"+": -1, "-": 1}
BOUNDARY_TURNS = {ch: Direction(ch.upper()).quarter_turns for ch in "LRSlrsv"}


class LatticeTurtle:
    """Turtle on the doubled integer lattice."""

    def __init__(self, start: GridPoint, heading: Heading):
        self.position = start
        self.heading = heading
        self.vertices = [start]

    def forward(self, units: int) -> None:
        dx, dy = self.heading.vector
        self.position = self.position.moved(units * dx, units * dy)
        self.vertices.append(self.position)

    def turn(self, quarter_turns: int) -> None:
        if quarter_turns:
            self.heading = self.heading.turned(quarter_turns)

    def path(self, start: GridPoint, initial_heading: Heading) -> LatticePath:
        return LatticePath(start, initial_heading, tuple(self.vertices), self.heading)


def render_fold(word: FoldWord, start: GridPoint, heading: Heading) -> LatticePath:
    """A and B advance one grid unit (2 doubled units), + and - turn."""
    if not heading.is_axial:
        raise ValueError(f"fold paths start on an axis heading, got {heading.name}")
    turtle = LatticeTurtle(start, heading)
    for ch in word.text:
        if ch in FOLD_TURNS:
            turtle.turn(FOLD_TURNS[ch])
        else:
            turtle.forward(2)
    return turtle.path(start, heading)


def render_boundary(word: DirWord, start: GridPoint, heading: Heading) -> LatticePath:
    """Each letter moves half a unit, turns as indicated, and moves half a unit.

    A half unit is one diagonal step (+-1, +-1); parity does not affect geometry.
    """
    if heading.is_axial:
        raise ValueError(f"boundary paths start on a diagonal, got {heading.name}")
    turtle = LatticeTurtle(start, heading)
    for ch in word.text:
        turtle.forward(1)
        turtle.turn(BOUNDARY_TURNS[ch])
        turtle.forward(1)
    return turtle.path(start, heading)


def boundary_start_headings(fold_heading: Heading) -> tuple[Heading, Heading]:
    """Headings of the left (tau^n(R)) and right (tau^n(L)) boundary curves."""
    if not fold_heading.is_axial:
        raise ValueError(f"expected an axis heading, got {fold_heading.name}")
    return fold_heading.rotated(1), fold_heading.rotated(-1)

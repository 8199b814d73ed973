from dataclasses import dataclass
from enum import IntEnum
from typing import NamedTuple


class GridPoint(NamedTuple):
    """A point in doubled coordinates: square centres sit at even-even points."""

    x: int
    y: int

    def moved(self, dx: int, dy: int) -> "GridPoint":
        return GridPoint(self.x + dx, self.y + dy)


Segment = tuple[GridPoint, GridPoint]


def segment(p: GridPoint, q: GridPoint) -> Segment:
    """Undirected segment in canonical (sorted) form."""
    return (p, q) if p <= q else (q, p)


class Heading(IntEnum):
    """Compass headings in eighths of a turn, counterclockwise from east."""

    EAST = 0
    NORTH_EAST = 1
    NORTH = 2
    NORTH_WEST = 3
    WEST = 4
    SOUTH_WEST = 5
    SOUTH = 6
    SOUTH_EAST = 7

    @property
    def vector(self) -> tuple[int, int]:
        return _VECTORS[self]

    @property
    def is_axial(self) -> bool:
        return self % 2 == 0

    def rotated(self, eighths: int) -> "Heading":
        return Heading((self + eighths) % 8)

    def turned(self, quarter_turns: int) -> "Heading":
        return self.rotated(2 * quarter_turns)


_VECTORS = {
    Heading.EAST: (1, 0),
    Heading.NORTH_EAST: (1, 1),
    Heading.NORTH: (0, 1),
    Heading.NORTH_WEST: (-1, 1),
    Heading.WEST: (-1, 0),
    Heading.SOUTH_WEST: (-1, -1),
    Heading.SOUTH: (0, -1),
    Heading.SOUTH_EAST: (1, -1),
}


@dataclass(frozen=True, slots=True)
class LatticePath:
    start: GridPoint
    initial_heading: Heading
    vertices: tuple[GridPoint, ...]
    final_heading: Heading

    @property
    def end(self) -> GridPoint:
        return self.vertices[-1]

    @property
    def edge_count(self) -> int:
        return len(self.vertices) - 1

    def segments(self) -> list[Segment]:
        vertices = self.vertices
        return [segment(vertices[i], vertices[i + 1]) for i in range(len(vertices) - 1)]

"""The region swept by a folding path: one diamond per edge.

The diamond of an edge is the square with the edge as one diagonal. In rotated
coordinates u = x + y, v = x - y the diamonds are the unit cells of an axis
aligned grid of side 2, so an edge with midpoint (x, y) owns cell
((u - 1) // 2, (v - 1) // 2).
"""

from dataclasses import dataclass

from app.errors import RegionError
from app.models.lattice import GridPoint, LatticePath, Segment, segment

Cell = tuple[int, int]


@dataclass(frozen=True)
class DiamondRegion:
    cells: frozenset[Cell]

    def __len__(self) -> int:
        return len(self.cells)


def cell_of_edge(p: GridPoint, q: GridPoint) -> Cell:
    u, v = (p.x + q.x) // 2 + (p.y + q.y) // 2, (p.x + q.x) // 2 - (p.y + q.y) // 2
    return (u - 1) // 2, (v - 1) // 2


def cell_corners(cell: Cell) -> tuple[GridPoint, GridPoint, GridPoint, GridPoint]:
    """Corners in doubled coordinates, counterclockwise from the westmost one."""
    i, j = cell
    x, y = i + j, i - j
    return (
        GridPoint(x, y),
        GridPoint(x + 1, y - 1),
        GridPoint(x + 2, y),
        GridPoint(x + 1, y + 1),
    )


def cell_edges(cell: Cell) -> list[Segment]:
    corners = cell_corners(cell)
    return [segment(corners[k], corners[(k + 1) % 4]) for k in range(4)]


def diamonds_of_path(path: LatticePath) -> DiamondRegion:
    cells = set()
    vertices = path.vertices
    for index in range(len(vertices) - 1):
        cell = cell_of_edge(vertices[index], vertices[index + 1])
        if cell in cells:
            raise RegionError(
                f"edge {index} maps to an occupied cell {cell}: "
                "path is not self-avoiding"
            )
        cells.add(cell)
    return DiamondRegion(frozenset(cells))

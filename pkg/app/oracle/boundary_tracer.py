import logging
from collections import defaultdict
from dataclasses import dataclass

from app.models.lattice import GridPoint, Segment, segment
from app.oracle.diamond_region import DiamondRegion, cell_edges

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class BoundaryLoop:
    """Closed walk along region boundary segments; the first point is not repeated."""

    points: tuple[GridPoint, ...]

    def __len__(self) -> int:
        return len(self.points)

    def segments(self) -> list[Segment]:
        points = self.points
        count = len(points)
        return [segment(points[k], points[(k + 1) % count]) for k in range(count)]

    def doubled_area(self) -> int:
        points = self.points
        total = 0
        for k in range(len(points)):
            (x0, y0), (x1, y1) = points[k], points[(k + 1) % len(points)]
            total += x0 * y1 - x1 * y0
        return total


def boundary_segments(region: DiamondRegion) -> set[Segment]:
    """Cell edges with exactly one adjacent cell in the region.

    Edges shared by two cells are toggled twice and cancel.
    """
    boundary: set[Segment] = set()
    for cell in region.cells:
        for edge in cell_edges(cell):
            if edge in boundary:
                boundary.remove(edge)
            else:
                boundary.add(edge)
    return boundary


def _closed_walk(start: GridPoint, adjacency: dict, unused: set) -> list[GridPoint]:
    """Hierholzer walk over every unused segment reachable from ``start``."""
    stack = [start]
    walk = []
    while stack:
        here = stack[-1]
        neighbours = adjacency[here]
        while neighbours and segment(here, neighbours[-1]) not in unused:
            neighbours.pop()
        if neighbours:
            there = neighbours.pop()
            unused.discard(segment(here, there))
            stack.append(there)
        else:
            walk.append(stack.pop())
    walk.reverse()
    return walk[:-1]


def trace_boundary(region: DiamondRegion) -> tuple[BoundaryLoop, ...]:
    """Link the region's boundary into closed loops, outer loop first.

    Each loop is one connected component of the boundary, so diamonds meeting
    at a single corner stay on the same loop. The outer loop is the one through
    the lowest-leftmost boundary vertex; every loop is oriented counterclockwise.
    """
    if not region.cells:
        raise ValueError("cannot trace the boundary of an empty region")
    unused = boundary_segments(region)
    adjacency: dict[GridPoint, list[GridPoint]] = defaultdict(list)
    for p, q in unused:
        adjacency[p].append(q)
        adjacency[q].append(p)
    for neighbours in adjacency.values():
        neighbours.sort(reverse=True)

    loops = []
    for start in sorted(adjacency):
        if not adjacency[start]:
            continue
        points = _closed_walk(start, adjacency, unused)
        if not points:
            continue
        loop = BoundaryLoop(tuple(points))
        if loop.doubled_area() < 0:
            loop = BoundaryLoop((points[0],) + tuple(reversed(points[1:])))
        loops.append(loop)
    log.debug("traced %d boundary loop(s) around %d cells", len(loops), len(region))
    return tuple(loops)

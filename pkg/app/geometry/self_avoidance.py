from dataclasses import dataclass
from typing import Optional

from app.models.lattice import GridPoint, LatticePath, segment


@dataclass(frozen=True)
class SelfAvoidanceReport:
    ok: bool
    index: Optional[int] = None
    vertex: Optional[GridPoint] = None
    reason: Optional[str] = None

    def describe(self) -> str:
        if self.ok:
            return "self-avoiding"
        return f"{self.reason} at edge {self.index}, vertex {tuple(self.vertex)}"


def _angle(center: GridPoint, other: GridPoint) -> int:
    """Quadrant (0..3, counterclockwise from east) of ``other`` around ``center``."""
    dx, dy = other.x - center.x, other.y - center.y
    if dy == 0:
        return 0 if dx > 0 else 2
    return 1 if dy > 0 else 3


def _interleaved(first: tuple[int, int], second: tuple[int, int]) -> bool:
    a, b = sorted(first)
    inside = [a < angle < b for angle in second]
    return inside[0] != inside[1]


def check_self_avoiding(path: LatticePath) -> SelfAvoidanceReport:
    """Check that no edge is used twice and that no revisit crosses an earlier pass.

    ``index`` in a failing report is the 0-based number of the offending edge.
    """
    vertices = path.vertices
    seen_edges: dict = {}
    visits: dict[GridPoint, list[tuple[int, ...]]] = {vertices[0]: []}
    if len(vertices) > 1:
        visits[vertices[0]].append((_angle(vertices[0], vertices[1]),))

    for index in range(len(vertices) - 1):
        edge = segment(vertices[index], vertices[index + 1])
        if edge in seen_edges:
            return SelfAvoidanceReport(False, index, vertices[index], "edge reused")
        seen_edges[edge] = index

        here = vertices[index + 1]
        angles = [_angle(here, vertices[index])]
        if index + 2 < len(vertices):
            angles.append(_angle(here, vertices[index + 2]))
        visit = tuple(angles)
        for earlier in visits.get(here, []):
            if len(visit) == 2 and len(earlier) == 2 and _interleaved(earlier, visit):
                return SelfAvoidanceReport(False, index, here, "path crosses itself")
        visits.setdefault(here, []).append(visit)

    return SelfAvoidanceReport(True)

import logging
from typing import Optional

from app.errors import LengthCapExceeded
from app.geometry.self_avoidance import check_self_avoiding
from app.geometry.turtle import boundary_start_headings, render_boundary, render_fold
from app.models.dir_word import BoundarySystem, DirWord
from app.models.fold_letter import FoldLetter
from app.models.fold_word import FoldingSystem
from app.models.lattice import GridPoint, Heading, LatticePath, Segment
from app.models.verification_report import VerificationReport
from app.oracle.boundary_tracer import trace_boundary
from app.oracle.diamond_region import diamonds_of_path
from app.words.expander import Expander

log = logging.getLogger(__name__)

ORIGIN = GridPoint(0, 0)


def _format_segment(seg: Segment) -> str:
    (x0, y0), (x1, y1) = seg
    return f"({x0},{y0})-({x1},{y1})"


def _first_repeated(path: LatticePath) -> Optional[Segment]:
    seen = set()
    for seg in path.segments():
        if seg in seen:
            return seg
        seen.add(seg)
    return None


class BoundaryVerifier:
    """Compare rendered boundary words with the traced boundary of the swept region."""

    def __init__(
        self,
        system: FoldingSystem,
        tau: BoundarySystem,
        name: Optional[str] = None,
        cap: Optional[int] = None,
    ):
        self.system = system
        self.tau = tau
        self.name = name or str(system.prod_a)
        self.expander = Expander(cap)

    def verify(self, level: int) -> VerificationReport:
        fold = self.expander.expand_fold(self.system, FoldLetter.MOVE_A, level)
        left_word = self.expander.expand_boundary(self.tau, DirWord("R"), level)
        right_word = self.expander.expand_boundary(self.tau, DirWord("L"), level)

        path = render_fold(fold, ORIGIN, Heading.EAST)
        avoidance = check_self_avoiding(path)
        if not avoidance.ok:
            return self._report(level, 0, f"folding path: {avoidance.describe()}")

        region = diamonds_of_path(path)
        loops = trace_boundary(region)
        outer = loops[0]
        if len(loops) > 1:
            return self._report(
                level, len(outer), f"region not simply connected ({len(loops)} loops)"
            )
        if len(outer) % 2 or len(outer) < 4 or len(outer) > 4 * len(region):
            return self._report(
                level, len(outer), f"inconsistent outer loop of {len(outer)} segments"
            )

        left_heading, right_heading = boundary_start_headings(Heading.EAST)
        left = render_boundary(left_word, ORIGIN, left_heading)
        right = render_boundary(right_word, ORIGIN, right_heading)
        mismatch = self._compare(set(outer.segments()), left, right, path.end)
        log.info(
            "%s level %d: %s",
            self.name,
            level,
            "PASS" if mismatch is None else mismatch,
        )
        return self._report(level, len(outer), mismatch)

    def verify_levels(self, max_level: int) -> list[VerificationReport]:
        """Verify levels 0..max_level, stopping early at the length cap.

        Raises ``LengthCapExceeded`` when not even level 0 fits under the cap.
        """
        if max_level < 0:
            raise ValueError("max level must be nonnegative")
        reports = []
        for level in range(max_level + 1):
            try:
                reports.append(self.verify(level))
            except LengthCapExceeded as e:
                if not reports:
                    raise
                log.info("%s: stopping before level %d, %s", self.name, level, e)
                break
        return reports

    def _compare(
        self,
        outer: set[Segment],
        left: LatticePath,
        right: LatticePath,
        fold_end: GridPoint,
    ) -> Optional[str]:
        traced = set(left.segments()) | set(right.segments())
        missing = sorted(outer - traced)
        if missing:
            return f"boundary segment {_format_segment(missing[0])} not traced by tau"
        extra = sorted(traced - outer)
        if extra:
            return f"tau segment {_format_segment(extra[0])} not on the region boundary"
        for side, path in (("left", left), ("right", right)):
            if path.end != fold_end:
                return (
                    f"{side} boundary ends at {tuple(path.end)}, "
                    f"folding path ends at {tuple(fold_end)}"
                )
            repeated = _first_repeated(path)
            if repeated is not None:
                return f"{side} boundary repeats segment {_format_segment(repeated)}"
        return None

    def _report(
        self, level: int, segments: int, mismatch: Optional[str]
    ) -> VerificationReport:
        return VerificationReport(
            system=self.name,
            level=level,
            passed=mismatch is None,
            segments=segments,
            mismatch=mismatch,
        )


def verify_boundary(
    system: FoldingSystem,
    tau: BoundarySystem,
    n: int,
    name: Optional[str] = None,
    cap: Optional[int] = None,
) -> VerificationReport:
    return BoundaryVerifier(system, tau, name, cap).verify(n)

import os
import sys
from pathlib import Path

from dotenv import load_dotenv
from pydantic import TypeAdapter

# Add parent directory to Python path to find the app package
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from app.checkers.catalog_checker import CatalogChecker  # noqa: E402
from app.derivation.boundary_deriver import derive_boundary_system  # noqa: E402
from app.extractors.catalog_extractor import CatalogExtractor  # noqa: E402
from app.geometry.turtle import (  # noqa: E402
    boundary_start_headings,
    render_boundary,
    render_fold,
)
from app.models.dir_word import DirWord  # noqa: E402
from app.models.fold_letter import FoldLetter  # noqa: E402
from app.models.lattice import GridPoint, Heading  # noqa: E402
from app.models.verification_report import CatalogResult  # noqa: E402
from app.renderers.svg_renderer import (  # noqa: E402
    FOLD_COLOR,
    LEFT_BOUNDARY_COLOR,
    RIGHT_BOUNDARY_COLOR,
    SvgRenderer,
)
from app.words.expander import Expander  # noqa: E402

load_dotenv()

output_dir = Path(os.getenv("SWEEP_OUTPUT_DIR", "./data"))
# Drawings past a few thousand edges are unreadable, verification still runs to the cap.
svg_max_level = int(os.getenv("SWEEP_SVG_MAX_LEVEL", "6"))

output_dir.mkdir(parents=True, exist_ok=True)
records = CatalogExtractor().extract()
results = CatalogChecker().check_all(records)

renderer = SvgRenderer()
expander = Expander()
origin = GridPoint(0, 0)
left_heading, right_heading = boundary_start_headings(Heading.EAST)

for record, result in zip(records, results):
    if result.error is not None:
        continue
    system = record.folding_system()
    tau = derive_boundary_system(system)
    for report in result.levels[: svg_max_level + 1]:
        fold = expander.expand_fold(system, FoldLetter.MOVE_A, report.level)
        left = expander.expand_boundary(tau, DirWord("R"), report.level)
        right = expander.expand_boundary(tau, DirWord("L"), report.level)
        svg = renderer.render(
            [
                (render_fold(fold, origin, Heading.EAST), FOLD_COLOR),
                (render_boundary(left, origin, left_heading), LEFT_BOUNDARY_COLOR),
                (render_boundary(right, origin, right_heading), RIGHT_BOUNDARY_COLOR),
            ]
        )
        svg_path = output_dir / f"{record.name}-{report.level}.svg"
        svg_path.write_text(svg, encoding="utf-8")

summary = TypeAdapter(list[CatalogResult]).dump_json(
    results, by_alias=True, exclude_none=True, indent=2
)
(output_dir / "catalog_sweep.json").write_bytes(summary)

print(CatalogChecker.to_frame(results).to_markdown(index=False))

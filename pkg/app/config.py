import os
from functools import lru_cache
from pathlib import Path

from pydantic import BaseModel, Field

BUNDLED_CATALOG = Path(__file__).parent / "data" / "catalog.tsv"

# Only load .env file if not running in Docker
if not os.getenv("DOCKER_ENV"):
    from dotenv import load_dotenv

    load_dotenv()


class Settings(BaseModel):
    length_cap: int = Field(default=1_000_000, gt=0, description="Expansion cap")
    log_level: str = Field(default="WARNING", description="CLI log level")
    svg_scale: int = Field(default=10, gt=0, description="SVG units per grid unit")
    catalog: Path = Field(default=BUNDLED_CATALOG, description="Catalog file")

    @classmethod
    def from_env(cls) -> "Settings":
        values = {
            "length_cap": os.getenv("FOLDBOUND_LENGTH_CAP"),
            "log_level": os.getenv("FOLDBOUND_LOG_LEVEL"),
            "svg_scale": os.getenv("FOLDBOUND_SVG_SCALE"),
            "catalog": os.getenv("FOLDBOUND_CATALOG"),
        }
        return cls(**{key: value for key, value in values.items() if value})


@lru_cache
def get_settings() -> Settings:
    return Settings.from_env()

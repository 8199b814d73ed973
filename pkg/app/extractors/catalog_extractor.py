import logging
from pathlib import Path
from typing import Optional, Union

import pandas as pd
from pydantic import ValidationError

from app.config import get_settings
from app.errors import CatalogFormatError
from app.models.system_record import SystemRecord

log = logging.getLogger(__name__)


class CatalogExtractor:
    COLUMNS = ["name", "sigma_a", "expected_tau"]

    def __init__(self, path: Optional[Union[str, Path]] = None):
        self.path = Path(path) if path is not None else get_settings().catalog

    def extract(self) -> list[SystemRecord]:
        data = self._read()
        records = []
        for number, row in enumerate(data.to_dict("records"), start=1):
            records.append(self._to_record(number, row))
        log.info("loaded %d system(s) from %s", len(records), self.path)
        return records

    def get_record(self, name: str) -> SystemRecord:
        for record in self.extract():
            if record.name == name:
                return record
        raise KeyError(f"no system named {name!r} in {self.path}")

    def _read(self) -> pd.DataFrame:
        try:
            data = pd.read_csv(
                self.path,
                sep="\t",
                header=None,
                names=self.COLUMNS,
                dtype=str,
                comment="#",
                keep_default_na=False,
                skip_blank_lines=True,
                encoding="utf-8",
            )
        except pd.errors.EmptyDataError:
            return pd.DataFrame(columns=self.COLUMNS)
        except pd.errors.ParserError as e:
            raise CatalogFormatError(0, str(e)) from e
        return data

    def _to_record(self, number: int, row: dict) -> SystemRecord:
        tau = row.get("expected_tau")
        if tau is None or pd.isna(tau) or not str(tau).strip():
            tau = None
        try:
            return SystemRecord(
                name=str(row["name"]).strip(),
                sigma_a=str(row["sigma_a"]).strip(),
                expected_tau=tau,
            )
        except (KeyError, ValidationError) as e:
            raise CatalogFormatError(number, str(e)) from e

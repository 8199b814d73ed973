import pytest

from app.extractors.catalog_extractor import CatalogExtractor


@pytest.fixture(scope="session")
def catalog_records():
    """The bundled catalog of folding systems and their published boundary systems."""
    return CatalogExtractor().extract()

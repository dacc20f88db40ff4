import pytest

from colsym.cache import cached_provider


@pytest.fixture(scope="session")
def provider(tmp_path_factory):
    """Shared class-list provider so each group is enumerated once per run."""
    cache_dir = tmp_path_factory.mktemp("cache")
    return cached_provider(str(cache_dir))

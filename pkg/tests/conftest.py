import os

import pytest

from catcomp.config import default_settings


@pytest.fixture(autouse=True)
def _isolate_settings(monkeypatch):
    # Settings come from config/catcomp.json only; no CATCOMP_* leaks in from the shell.
    for key in list(os.environ):
        if key.startswith("CATCOMP_"):
            monkeypatch.delenv(key, raising=False)
    default_settings.cache_clear()
    yield
    default_settings.cache_clear()

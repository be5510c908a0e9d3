"""Settings for search budgets and fixture bounds, loaded from config/ and CATCOMP_* env vars."""

from __future__ import annotations

import dataclasses
import json
import os
from collections.abc import Mapping
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

import jsonschema

from catcomp.errors import ConfigError

_ENV_PREFIX = "CATCOMP_"


@dataclass(frozen=True)
class Settings:
    adjoint_budget: int = 64
    algebra_budget: int = 4096
    validation_budget: int = 2_000_000
    pred_max_universe: int = 4
    rel_max_universe: int = 3
    rel_full_max_universe: int = 2
    pow_max_universe: int = 3
    max_witnesses: int = 20
    log_level: str = "WARNING"

    def with_overrides(self, **changes: object) -> Settings:
        return dataclasses.replace(self, **{k: v for k, v in changes.items() if v is not None})


def repo_root() -> Path:
    return Path(__file__).resolve().parents[2]


def default_settings_path() -> Path:
    return repo_root() / "config" / "catcomp.json"


def default_schema_path() -> Path:
    return repo_root() / "config" / "catcomp.schema.json"


def _load_schema(path: Path) -> dict:
    try:
        return json.loads(path.read_text(encoding="utf-8"))
    except Exception as exc:
        raise ConfigError(f"settings schema is not readable JSON: {path}") from exc


def _validate_payload(payload: object, schema: dict, source: str) -> None:
    try:
        jsonschema.validate(instance=payload, schema=schema)
    except jsonschema.ValidationError as exc:
        location = "/".join(str(part) for part in exc.absolute_path) or "<root>"
        raise ConfigError(f"invalid settings in {source} at {location}: {exc.message}") from exc


def _env_overrides(env: Mapping[str, str]) -> dict[str, object]:
    out: dict[str, object] = {}
    for field in dataclasses.fields(Settings):
        raw = env.get(_ENV_PREFIX + field.name.upper())
        if raw is None or not raw.strip():
            continue
        if field.type in ("int", int):
            try:
                out[field.name] = int(raw.strip())
            except ValueError as exc:
                raise ConfigError(f"{_ENV_PREFIX}{field.name.upper()} must be an integer: {raw!r}") from exc
        else:
            out[field.name] = raw.strip().upper()
    return out


def load_settings(
    settings_path: Path | None = None,
    env: Mapping[str, str] | None = None,
) -> Settings:
    """Load settings from JSON (if present), validate them, then apply CATCOMP_* overrides."""
    path = (settings_path or default_settings_path()).resolve()
    schema = _load_schema(default_schema_path())

    payload: dict[str, object] = {}
    if path.exists():
        try:
            loaded = json.loads(path.read_text(encoding="utf-8"))
        except Exception as exc:
            raise ConfigError(f"settings file is not valid JSON: {path}") from exc
        _validate_payload(loaded, schema, str(path))
        payload.update(loaded)

    overrides = _env_overrides(os.environ if env is None else env)
    if overrides:
        _validate_payload({**payload, **overrides}, schema, "environment")
    payload.update(overrides)
    return Settings(**payload)


@lru_cache(maxsize=1)
def default_settings() -> Settings:
    return load_settings()

from __future__ import annotations

import os
from pathlib import Path
from typing import Literal

from dotenv import find_dotenv, load_dotenv
from pydantic import BaseModel, ConfigDict, field_validator, model_validator


class Config(BaseModel):
    model_config = ConfigDict(extra="ignore")

    order: int = 1000
    scan_order: int | None = None
    concurrency: int = 4
    executor: Literal["thread", "process"] = "thread"
    cache_dir: Path | None = None

    prove: bool = True
    out: Path | None = None
    json_output: bool = False
    verbose: bool = False

    @model_validator(mode="before")
    @classmethod
    def apply_env_defaults(cls, data: object) -> object:
        load_dotenv(find_dotenv(usecwd=True), override=False)
        values = dict(data) if isinstance(data, dict) else {}

        env_map = {
            "order": "QDISSECT_ORDER",
            "scan_order": "QDISSECT_SCAN_ORDER",
            "concurrency": "QDISSECT_CONCURRENCY",
            "executor": "QDISSECT_EXECUTOR",
            "cache_dir": "QDISSECT_CACHE_DIR",
        }
        for field_name, env_name in env_map.items():
            if field_name not in values or values[field_name] is None:
                env_value = os.getenv(env_name)
                if env_value not in (None, ""):
                    values[field_name] = env_value
        return values

    @field_validator("order")
    @classmethod
    def validate_order(cls, value: int) -> int:
        if value < 1:
            raise ValueError("order must be >= 1")
        return value

    @field_validator("scan_order")
    @classmethod
    def validate_scan_order(cls, value: int | None) -> int | None:
        if value is not None and value < 200:
            raise ValueError("scan_order must be >= 200")
        return value

    @field_validator("concurrency")
    @classmethod
    def validate_concurrency(cls, value: int) -> int:
        if value < 1:
            raise ValueError("concurrency must be >= 1")
        return value

    @field_validator("cache_dir", mode="before")
    @classmethod
    def expand_cache_dir(cls, value: str | Path | None) -> Path | None:
        if value is None:
            return None
        return Path(value).expanduser()

    @field_validator("out", mode="before")
    @classmethod
    def normalize_out(cls, value: str | Path | None) -> Path | None:
        return None if value is None else Path(value)

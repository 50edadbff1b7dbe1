from __future__ import annotations

import hashlib
import json
import logging
from pathlib import Path

from qdissect.models import ProductSpec
from qdissect.series.core import Series, SeriesError
from qdissect.spec_parser import format_spec

logger = logging.getLogger(__name__)


class FileCache:
    namespaces = ("series",)

    def __init__(self, cache_dir: Path) -> None:
        self.cache_dir = cache_dir.expanduser()
        for namespace in self.namespaces:
            (self.cache_dir / namespace).mkdir(parents=True, exist_ok=True)

    @staticmethod
    def cache_key(text: str, discriminator: str = "") -> str:
        raw = f"{text}{discriminator}"
        return hashlib.sha256(raw.encode("utf-8")).hexdigest()

    def _path_for(self, spec: ProductSpec, order: int) -> Path:
        key = self.cache_key(format_spec(spec), str(order))
        return self.cache_dir / "series" / f"{key}.json"

    def get_series(self, spec: ProductSpec, order: int) -> Series | None:
        path = self._path_for(spec, order)
        if not path.exists():
            return None
        try:
            return Series.from_json(json.loads(path.read_text(encoding="utf-8")))
        except (OSError, ValueError, KeyError, TypeError, SeriesError) as exc:
            logger.warning("ignoring unreadable cache entry %s: %s", path, exc)
            return None

    def put_series(self, spec: ProductSpec, order: int, series: Series) -> None:
        path = self._path_for(spec, order)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(json.dumps(series.to_json()), encoding="utf-8")
        except OSError as exc:
            logger.warning("could not write cache entry %s: %s", path, exc)

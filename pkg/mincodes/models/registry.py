import logging
import threading

from mincodes.models.field import FieldSpec

logger = logging.getLogger("mincodes.registry")


class FieldRegistry:
    """Process-wide cache of constructed fields, keyed by (p, m)."""

    _inst = None
    _inst_lock = threading.Lock()

    def __init__(self):
        self.fields: dict[tuple[int, int], FieldSpec] = {}
        self._rw = threading.RLock()

    # ---------- Singleton ----------
    @classmethod
    def instance(cls) -> "FieldRegistry":
        """Return the global singleton instance of FieldRegistry."""
        with cls._inst_lock:
            if cls._inst is None:
                cls._inst = FieldRegistry()
        return cls._inst

    # ---------- Lookup ----------
    def get(self, p: int, m: int) -> FieldSpec | None:
        with self._rw:
            return self.fields.get((p, m))

    def put(self, spec: FieldSpec) -> FieldSpec:
        """Store `spec` unless an equal key is already present; return the stored one."""
        with self._rw:
            existing = self.fields.get((spec.p, spec.m))
            if existing is not None:
                return existing
            self.fields[(spec.p, spec.m)] = spec
            logger.info("cached GF(%d^%d), %d fields held", spec.p, spec.m, len(self.fields))
            return spec

    def clear(self) -> None:
        with self._rw:
            self.fields.clear()

    def __len__(self) -> int:
        return len(self.fields)

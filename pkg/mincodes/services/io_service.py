"""
Defining-set files and result records.

File format: optional '#' comment lines, then a header `q k n` (q written
as 'p^m', or a plain integer for prime fields), then n lines of k
space-separated element encodings. Diagnostics use 1-based line and column
numbers as an editor shows them.
"""

from __future__ import annotations

import json
import logging
from datetime import datetime, timezone
from pathlib import Path
from typing import Iterable, TextIO

from jinja2 import Environment, FileSystemLoader

from mincodes.exceptions import (
    BadElementEncodingError,
    DomainError,
    LengthMismatchError,
    MalformedHeaderError,
)
from mincodes.models.code import DefiningSet
from mincodes.models.vector import Vector
from mincodes.services.field_service import FieldService
from mincodes.utils.constants import OutputFormat
from mincodes.utils.filters import fmt_iso_local, fmt_seconds, fmt_vector

logger = logging.getLogger("mincodes.io")

TEMPLATE_DIR = Path(__file__).resolve().parents[1] / "templates"

_env: Environment | None = None


def _jinja() -> Environment:
    global _env
    if _env is None:
        _env = Environment(
            loader=FileSystemLoader(str(TEMPLATE_DIR)),
            keep_trailing_newline=True,
            trim_blocks=True,
            lstrip_blocks=True,
        )
        _env.filters["fmt_vector"] = fmt_vector
        _env.filters["fmt_seconds"] = fmt_seconds
        _env.filters["fmt_iso_local"] = fmt_iso_local
    return _env


def _lines(stream: TextIO | str | Iterable[str]) -> list[str]:
    if isinstance(stream, str):
        return stream.splitlines()
    return [line.rstrip("\n") for line in stream]


class IOService:

    @staticmethod
    def parse_defining_set(stream) -> DefiningSet:
        """Parse and range-check a defining-set file; rank is left to the caller."""
        body = [
            (no, line.strip())
            for no, line in enumerate(_lines(stream), start=1)
            if line.strip() and not line.lstrip().startswith("#")
        ]
        if not body:
            raise MalformedHeaderError("Error: empty defining-set file")

        header_no, header = body[0]
        parts = header.split()
        if len(parts) != 3:
            raise MalformedHeaderError(f"Error: malformed header at line {header_no} (expected `q k n`)")
        try:
            k, n = int(parts[1]), int(parts[2])
        except ValueError:
            raise MalformedHeaderError(f"Error: non-integer k or n at line {header_no}") from None
        if k < 1 or n < k:
            raise MalformedHeaderError(f"Error: header needs n >= k >= 1 (got k={k}, n={n})")
        try:
            spec = FieldService.parse_field_label(parts[0])
        except DomainError as e:
            raise MalformedHeaderError(f"Error: bad field '{parts[0]}' at line {header_no}: {e.message}") from None

        rows = body[1:]
        if len(rows) != n:
            last = rows[-1][0] if rows else header_no
            where = rows[n][0] if len(rows) > n else last + 1
            raise LengthMismatchError(where, f"Error: expected {n} column lines, found {len(rows)} (line {where})")

        columns = []
        for no, line in rows:
            tokens = line.split()
            if len(tokens) != k:
                raise LengthMismatchError(no, f"Error: line {no} has {len(tokens)} coordinates, expected {k}")
            coords = []
            for col, tok in enumerate(tokens, start=1):
                try:
                    value = int(tok)
                except ValueError:
                    raise BadElementEncodingError(no, col) from None
                if not 0 <= value < spec.q:
                    raise BadElementEncodingError(
                        no, col, f"Error: element {value} at line {no}, column {col} is outside 0..{spec.q - 1}"
                    )
                coords.append(value)
            columns.append(Vector(tuple(coords), spec))
        return DefiningSet(tuple(columns), spec, k)

    @staticmethod
    def read_defining_set(path: str | Path) -> DefiningSet:
        with open(path, "r", encoding="utf-8") as f:
            return IOService.parse_defining_set(f)

    @staticmethod
    def serialize_defining_set(D: DefiningSet, manifest: dict | None = None) -> str:
        lines = []
        for key, value in (manifest or {}).items():
            if isinstance(value, dict):
                value = " ".join(f"{k}={v}" for k, v in value.items())
            lines.append(f"# {key}: {value}")
        lines.append(f"{D.field.label} {D.k} {D.n}")
        lines.extend(col.encode() for col in D.columns)
        return "\n".join(lines) + "\n"

    @staticmethod
    def write_defining_set(D: DefiningSet, path: str | Path, manifest: dict | None = None) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(IOService.serialize_defining_set(D, manifest), encoding="utf-8")
        return path

    @staticmethod
    def render_record(record: dict, fmt: str = OutputFormat.STRUCTURED, tz_name: str = "UTC",
                      now: datetime | None = None) -> str:
        """
        One result as a JSON line (stable key order, no timestamps) or as a
        text report from templates/<record>.txt.j2.
        """
        if fmt == OutputFormat.STRUCTURED:
            return json.dumps(record, separators=(", ", ": ")) + "\n"
        template = _jinja().get_template(f"{record['record']}.txt.j2")
        generated = now or datetime.now(timezone.utc)
        return template.render(r=record, generated=generated, tz_name=tz_name)

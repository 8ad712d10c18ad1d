"""Jinja filters used by the text report templates."""
from datetime import datetime, timezone

import pytz


def fmt_vector(value) -> str:
    """Render a coordinate list as '(1 0 2)'; None renders as '-'."""
    if value is None:
        return "-"
    return "(" + " ".join(str(c) for c in value) + ")"


def fmt_seconds(value) -> str:
    """Seconds with millisecond precision; missing values render as '-'."""
    try:
        return f"{float(value):.3f}s"
    except Exception:
        return "-"


def fmt_iso_local(value, tz_name: str = "UTC") -> str:
    """
    Format a datetime (or ISO string) in the configured timezone as
    'YYYY-MM-DD HH:MM TZ'. Naive values are taken as UTC; an unknown zone
    falls back to UTC and an unparseable string is returned as given.
    """
    if value is None:
        return ""
    if isinstance(value, datetime):
        dt = value
    else:
        s = str(value).strip()
        if not s:
            return ""
        if s.endswith("Z"):
            s = s[:-1] + "+00:00"
        try:
            dt = datetime.fromisoformat(s)
        except ValueError:
            return str(value)

    if dt.tzinfo is None:
        dt = dt.replace(tzinfo=timezone.utc)

    try:
        tz = pytz.timezone(tz_name or "UTC")
    except pytz.UnknownTimeZoneError:
        tz = pytz.utc
    return dt.astimezone(tz).strftime("%Y-%m-%d %H:%M %Z")

"""Worker-count selection for parallel verification checks."""

from __future__ import annotations

import os


def thread_count(default: int | None = None) -> int:
    """Workers to use: SUPERMIN_THREADS when set, else a modest default."""
    env = os.environ.get("SUPERMIN_THREADS", "").strip()
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass  # unparseable values fall through to the default
    if default is not None:
        return max(1, default)
    return min(8, os.cpu_count() or 1)

"""CSV and aligned Markdown table output with atomic writes.

House numeric style: metric values at 4 decimals, percentages at 2,
similarities at 3, and inverse-square expectations as round-to-3 floats
("27.75", "12.333", "6.2"). Every file starts with a header line recording
the run seed.
"""

from __future__ import annotations

import hashlib
import os
import tempfile
from typing import Sequence


def fmt4(x: float) -> str:
    return f"{x:.4f}"


def fmt3(x: float) -> str:
    return f"{x:.3f}"


def fmt_percent(x: float | None) -> str:
    return "NaN" if x is None else f"{x:.2f}%"


def fmt_lotka(x: float) -> str:
    return repr(round(x, 3))


def atomic_write_text(path: str, text: str) -> None:
    """Write via a temp file in the same directory, then rename."""
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def render_csv(header: Sequence[str], rows: Sequence[Sequence[str]], seed: int | None = None) -> str:
    lines = []
    if seed is not None:
        lines.append(f"# seed={seed}")
    lines.append(",".join(header))
    for row in rows:
        lines.append(",".join(_csv_escape(cell) for cell in row))
    return "\n".join(lines) + "\n"


def _csv_escape(cell: str) -> str:
    if any(ch in cell for ch in ',"\n'):
        return '"' + cell.replace('"', '""') + '"'
    return cell


def render_markdown(header: Sequence[str], rows: Sequence[Sequence[str]], seed: int | None = None) -> str:
    table = [list(header)] + [list(r) for r in rows]
    widths = [max(len(row[i]) for row in table) for i in range(len(header))]
    lines = []
    if seed is not None:
        lines.append(f"Seed: {seed}")
        lines.append("")
    lines.append("| " + " | ".join(h.ljust(w) for h, w in zip(header, widths)) + " |")
    lines.append("|" + "|".join("-" * (w + 2) for w in widths) + "|")
    for row in rows:
        lines.append("| " + " | ".join(c.ljust(w) for c, w in zip(row, widths)) + " |")
    return "\n".join(lines) + "\n"


def write_table(
    basepath: str,
    header: Sequence[str],
    rows: Sequence[Sequence[str]],
    seed: int | None = None,
) -> list[str]:
    """Write ``basepath``.csv and ``basepath``.md; returns the paths written."""
    csv_path = basepath + ".csv"
    md_path = basepath + ".md"
    atomic_write_text(csv_path, render_csv(header, rows, seed))
    atomic_write_text(md_path, render_markdown(header, rows, seed))
    return [csv_path, md_path]


def file_sha256(path: str) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as fh:
        for block in iter(lambda: fh.read(65536), b""):
            digest.update(block)
    return digest.hexdigest()

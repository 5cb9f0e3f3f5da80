"""Reading and writing leaf files.

One chord per line as ``p/q r/s``, a point as ``p/q``.  Lines starting with
``#`` are comments.  Leaves are sorted by (first endpoint, second endpoint);
a ``# period n`` comment starts a new section, and the order is checked
within each section.  Readers reject crossing leaves.
"""

from __future__ import annotations

import os
import re

from .lamination import Chord, CrossingError, Lamination, find_crossing

_SECTION = re.compile(r"#\s*period\s+\d+\s*$")


class LeafFileError(ValueError):
    pass


def parse_leaves(text: str, source: str = "<text>") -> list:
    """Chords of a leaf file, in file order, including points."""
    out = []
    seen = set()
    prev = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if _SECTION.match(line):
                prev = None
            continue
        parts = line.split()
        if len(parts) not in (1, 2):
            raise LeafFileError(f"{source}:{lineno}: expected one or two angles")
        try:
            c = Chord(*parts)
        except (ValueError, ZeroDivisionError) as e:
            raise LeafFileError(f"{source}:{lineno}: {e}") from None
        if prev is not None and c <= prev:
            raise LeafFileError(f"{source}:{lineno}: leaves are not sorted")
        if c in seen:
            raise LeafFileError(f"{source}:{lineno}: duplicate leaf {c}")
        seen.add(c)
        prev = c
        out.append(c)
    bad = find_crossing(out)
    if bad is not None:
        raise CrossingError(*bad)
    return out


def read_leaves(path) -> list:
    with open(path, encoding="utf-8") as f:
        return parse_leaves(f.read(), os.fspath(path))


def read_lamination(path, label: str = "") -> Lamination:
    return Lamination(read_leaves(path), label=label or os.path.basename(os.fspath(path)))


def format_leaves(chords, header: str = "") -> str:
    lines = [f"# {h}" for h in header.splitlines()] if header else []
    lines += [str(c) for c in sorted(chords)]
    return "\n".join(lines) + "\n"


def format_sections(sections, header: str = "") -> str:
    """``sections`` maps a period to its chords; each becomes a sorted block."""
    lines = [f"# {h}" for h in header.splitlines()] if header else []
    for n in sorted(sections):
        lines.append(f"# period {n}")
        lines += [str(c) for c in sorted(sections[n])]
    return "\n".join(lines) + "\n"


def write_text(path, text: str):
    with open(path, "w", encoding="utf-8") as f:
        f.write(text)

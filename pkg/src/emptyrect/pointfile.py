"""Plain-text point files: one point per line, whitespace separated, ``#`` comments."""

from __future__ import annotations

from pathlib import Path


class PointFileError(ValueError):
    def __init__(self, message, line=None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


def parse_points(text: str, dim: int | None = None) -> list[tuple[float, ...]]:
    """Parse point-file text; ``dim=None`` accepts 2 or 3 columns (consistently)."""
    points = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        try:
            coords = tuple(float(f) for f in fields)
        except ValueError:
            raise PointFileError(f"non-numeric field in {raw.strip()!r}", lineno) from None
        want = dim if dim is not None else (len(points[0]) if points else None)
        if want is None and len(coords) not in (2, 3):
            raise PointFileError(f"expected 2 or 3 coordinates, got {len(coords)}", lineno)
        if want is not None and len(coords) != want:
            raise PointFileError(f"expected {want} coordinates, got {len(coords)}", lineno)
        points.append(tuple(int(c) if c.is_integer() else c for c in coords))
    return points


def read_points(path, dim: int | None = None) -> list[tuple[float, ...]]:
    return parse_points(Path(path).read_text(encoding="utf-8"), dim)


def format_points(points, header: str | None = None) -> str:
    lines = []
    if header:
        lines.extend("# " + h for h in header.splitlines())
    lines.extend(" ".join(str(c) for c in p) for p in points)
    return "\n".join(lines) + "\n"


def write_points(path, points, header: str | None = None) -> None:
    Path(path).write_text(format_points(points, header), encoding="utf-8")

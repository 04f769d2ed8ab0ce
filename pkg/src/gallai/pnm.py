"""Plain-text portable pixmaps (P2 graymap, P3 pixmap) as grid colorings."""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .errors import MalformedImage, TooManyColors
from .lattice import GridColoring

MAX_COLORS = 16


def parse_pnm(text: str, max_colors: int = MAX_COLORS) -> GridColoring:
    """Pixel (column x, row y) becomes cell [x, y]; colors in first-appearance order."""
    tokens: list[str] = []
    for line in text.splitlines():
        tokens.extend(line.split("#", 1)[0].split())
    if not tokens or tokens[0] not in ("P2", "P3"):
        raise MalformedImage("expected a P2 or P3 header")
    per_pixel = 1 if tokens[0] == "P2" else 3
    try:
        width, height, maxval = (int(t) for t in tokens[1:4])
        values = [int(t) for t in tokens[4:]]
    except ValueError as exc:
        raise MalformedImage(f"non-integer token: {exc}") from exc
    if width < 1 or height < 1 or maxval < 1:
        raise MalformedImage("image dimensions and maxval must be positive")
    need = width * height * per_pixel
    if len(values) != need:
        raise MalformedImage(f"expected {need} samples, found {len(values)}")
    if any(v < 0 or v > maxval for v in values):
        raise MalformedImage(f"sample outside [0, {maxval}]")
    palette: dict[tuple[int, ...], int] = {}
    cells = np.empty((width, height), dtype=np.int64)
    for i in range(width * height):
        px = tuple(values[i * per_pixel : (i + 1) * per_pixel])
        if px not in palette:
            if len(palette) == max_colors:
                raise TooManyColors(f"more than {max_colors} distinct pixel values")
            palette[px] = len(palette)
        row, col = divmod(i, width)
        cells[col, row] = palette[px]
    return GridColoring(cells, len(palette))


def load_grid_image(path: str | Path, max_colors: int = MAX_COLORS) -> GridColoring:
    try:
        text = Path(path).read_text()
    except UnicodeDecodeError as exc:
        raise MalformedImage("only plain-text P2/P3 files are supported") from exc
    return parse_pnm(text, max_colors)

"""Grayscale image and watermark-pattern file I/O, block tiling, padding.

The only native image format is PGM, chosen because round trips are
trivially bit-exact.  Both binary (P5) and plain (P2) files are read;
writing always emits P5 with maxval 255, a single space between width and
height, and a newline-terminated header:

    P5\\n<width> <height>\\n255\\n<width*height raw bytes>

Watermark patterns use the same container with maxval 2; every sample
must be a GF(3) value in {0, 1, 2}.  Images are numpy uint8 arrays of
shape (height, width).
"""

import re
from dataclasses import dataclass

import numpy as np

_WHITESPACE = b" \t\r\n\x0b\x0c"
_COMMENT_RE = re.compile(rb"#[^\n]*")


def as_gray(image) -> np.ndarray:
    """Validate an array-like as a grayscale image and return it as uint8."""
    arr = np.asarray(image)
    if arr.ndim != 2 or arr.size == 0:
        raise ValueError("image must be a non-empty 2-D array, got shape %s" % (arr.shape,))
    if not np.issubdtype(arr.dtype, np.integer):
        raise ValueError("image pixels must be integers, got dtype %s" % arr.dtype)
    if arr.dtype != np.uint8 and (arr.min() < 0 or arr.max() > 255):
        raise ValueError("image pixels must be in [0, 255]")
    return arr.astype(np.uint8, copy=False)


def _next_token(data: bytes, pos: int) -> tuple[bytes, int]:
    n = len(data)
    while pos < n:
        c = data[pos]
        if c in _WHITESPACE:
            pos += 1
        elif c == 0x23:  # '#' comment runs to end of line
            nl = data.find(b"\n", pos)
            pos = n if nl < 0 else nl + 1
        else:
            break
    if pos >= n:
        raise ValueError("truncated PGM header")
    start = pos
    while pos < n and data[pos] not in _WHITESPACE and data[pos] != 0x23:
        pos += 1
    return data[start:pos], pos


def _header_int(data: bytes, pos: int, name: str) -> tuple[int, int]:
    token, pos = _next_token(data, pos)
    try:
        return int(token), pos
    except ValueError:
        raise ValueError("malformed PGM header: bad %s %r" % (name, token)) from None


def read_pgm(data: bytes) -> np.ndarray:
    """Parse a binary (P5) or plain (P2) PGM with maxval <= 255."""
    magic, pos = _next_token(data, 0)
    if magic not in (b"P2", b"P5"):
        raise ValueError("not a PGM image (expected P2 or P5 magic, got %r)" % magic)
    width, pos = _header_int(data, pos, "width")
    height, pos = _header_int(data, pos, "height")
    maxval, pos = _header_int(data, pos, "maxval")
    if width <= 0 or height <= 0:
        raise ValueError("invalid PGM dimensions %dx%d" % (width, height))
    if maxval > 255:
        raise ValueError("unsupported PGM maxval %d (only <= 255 handled)" % maxval)
    if maxval <= 0:
        raise ValueError("invalid PGM maxval %d" % maxval)
    count = width * height

    if magic == b"P5":
        # exactly one whitespace byte separates the header from the raster
        if pos >= len(data) or data[pos] not in _WHITESPACE:
            raise ValueError("malformed PGM header: missing separator before pixel data")
        pos += 1
        raster = data[pos : pos + count]
        if len(raster) < count:
            raise ValueError("truncated PGM pixel data: expected %d bytes, got %d" % (count, len(raster)))
        if data[pos + count :].strip(_WHITESPACE):
            raise ValueError("trailing data after PGM raster")
        return np.frombuffer(raster, dtype=np.uint8).reshape(height, width).copy()

    tokens = _COMMENT_RE.sub(b"", data[pos:]).split()
    if len(tokens) != count:
        raise ValueError("expected %d pixel values in plain PGM, found %d" % (count, len(tokens)))
    try:
        values = [int(t) for t in tokens]
    except ValueError:
        raise ValueError("malformed plain PGM pixel value") from None
    if any(v < 0 or v > maxval for v in values):
        raise ValueError("plain PGM pixel value out of range [0, %d]" % maxval)
    return np.array(values, dtype=np.uint8).reshape(height, width)


def write_pgm(image) -> bytes:
    """Serialize an image as binary PGM (P5, maxval 255)."""
    img = as_gray(image)
    height, width = img.shape
    return b"P5\n%d %d\n255\n" % (width, height) + img.tobytes()


def read_watermark(data: bytes) -> np.ndarray:
    """Parse a ternary watermark pattern from a PGM file.

    The pattern is either a single 4x4 cell (tiled over the image at use
    time) or a full per-block grid; both mean dimensions must be
    multiples of 4, and every value must be in {0, 1, 2}.
    """
    arr = read_pgm(data)
    if arr.max() > 2:
        raise ValueError("watermark values must be in {0, 1, 2}, found %d" % arr.max())
    h, w = arr.shape
    if h % 4 or w % 4:
        raise ValueError("watermark dimensions %dx%d are not multiples of 4" % (w, h))
    return arr


def write_watermark(pattern) -> bytes:
    """Serialize a ternary pattern as binary PGM with maxval 2."""
    arr = np.asarray(pattern)
    if arr.ndim != 2 or arr.size == 0 or not np.issubdtype(arr.dtype, np.integer):
        raise ValueError("watermark pattern must be a non-empty 2-D integer array")
    if arr.min() < 0 or arr.max() > 2:
        raise ValueError("watermark values must be in {0, 1, 2}")
    h, w = arr.shape
    if h % 4 or w % 4:
        raise ValueError("watermark dimensions %dx%d are not multiples of 4" % (w, h))
    return b"P5\n%d %d\n2\n" % (w, h) + arr.astype(np.uint8).tobytes()


def load_pgm(path) -> np.ndarray:
    with open(path, "rb") as fh:
        return read_pgm(fh.read())


def save_pgm(path, image) -> None:
    with open(path, "wb") as fh:
        fh.write(write_pgm(image))


def load_watermark(path) -> np.ndarray:
    with open(path, "rb") as fh:
        return read_watermark(fh.read())


def save_watermark(path, pattern) -> None:
    with open(path, "wb") as fh:
        fh.write(write_watermark(pattern))


@dataclass(frozen=True)
class BlockGrid:
    """Shape of a 4x4 block tiling, including padding added on the way in."""

    blocks_x: int
    blocks_y: int
    pad_right: int = 0
    pad_bottom: int = 0

    @property
    def width(self) -> int:
        return self.blocks_x * 4 - self.pad_right

    @property
    def height(self) -> int:
        return self.blocks_y * 4 - self.pad_bottom


def pad_to_multiple(image) -> np.ndarray:
    """Grow an image to multiple-of-4 dimensions by replicating edges."""
    img = as_gray(image)
    h, w = img.shape
    pad_bottom = (-h) % 4
    pad_right = (-w) % 4
    if pad_bottom == 0 and pad_right == 0:
        return img
    return np.pad(img, ((0, pad_bottom), (0, pad_right)), mode="edge")


def tile(image, pad: bool = False) -> tuple[list[np.ndarray], BlockGrid]:
    """Split an image into row-major 4x4 blocks.

    With pad=True, non-multiple-of-4 images are edge-padded first and the
    padding amounts are recorded in the returned grid so untile can crop
    them away again.
    """
    src = as_gray(image)
    h, w = src.shape
    if pad:
        padded = pad_to_multiple(src)
    else:
        if h % 4 or w % 4:
            raise ValueError("image dimensions %dx%d are not multiples of 4 (pass pad=True)" % (w, h))
        padded = src
    ph, pw = padded.shape
    grid = BlockGrid(blocks_x=pw // 4, blocks_y=ph // 4, pad_right=pw - w, pad_bottom=ph - h)
    blocks = [
        padded[y * 4 : y * 4 + 4, x * 4 : x * 4 + 4].copy()
        for y in range(grid.blocks_y)
        for x in range(grid.blocks_x)
    ]
    return blocks, grid


def untile(blocks, grid: BlockGrid) -> np.ndarray:
    """Reassemble row-major 4x4 blocks and crop any recorded padding."""
    expected = grid.blocks_x * grid.blocks_y
    if len(blocks) != expected:
        raise ValueError("expected %d blocks for a %dx%d grid, got %d"
                         % (expected, grid.blocks_x, grid.blocks_y, len(blocks)))
    out = np.empty((grid.blocks_y * 4, grid.blocks_x * 4), dtype=np.uint8)
    i = 0
    for y in range(grid.blocks_y):
        for x in range(grid.blocks_x):
            block = as_gray(blocks[i])
            if block.shape != (4, 4):
                raise ValueError("block %d has shape %s, expected (4, 4)" % (i, block.shape))
            out[y * 4 : y * 4 + 4, x * 4 : x * 4 + 4] = block
            i += 1
    return out[: grid.height, : grid.width].copy()

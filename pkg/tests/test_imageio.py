"""PGM parsing/serialization, watermark files, tiling and padding."""

import numpy as np
import pytest

from hnttmark.imageio import (
    BlockGrid,
    pad_to_multiple,
    read_pgm,
    read_watermark,
    tile,
    untile,
    write_pgm,
    write_watermark,
)
from hnttmark.watermark import checkerboard_cell, embed_image, extract_image, verify


def test_write_minimal_image():
    assert write_pgm(np.zeros((1, 1), dtype=np.uint8)) == b"P5\n1 1\n255\n\x00"


def test_round_trip_random_images():
    rng = np.random.RandomState(0)
    for _ in range(100):
        img = rng.randint(0, 256, (64, 64), dtype=np.uint8)
        assert np.array_equal(read_pgm(write_pgm(img)), img)


def test_round_trip_odd_shapes():
    rng = np.random.RandomState(1)
    for shape in ((1, 1), (3, 5), (17, 2), (5, 31)):
        img = rng.randint(0, 256, shape, dtype=np.uint8)
        assert np.array_equal(read_pgm(write_pgm(img)), img)


def test_plain_pgm_equals_binary():
    rng = np.random.RandomState(2)
    img = rng.randint(0, 256, (7, 5), dtype=np.uint8)
    plain = b"P2\n5 7\n255\n" + " ".join(str(v) for v in img.ravel()).encode()
    assert np.array_equal(read_pgm(plain), img)


def test_header_comments_are_skipped():
    data = b"P5 # magic\n# a comment line\n2 1\n# another\n255\n\x01\x02"
    assert read_pgm(data).tolist() == [[1, 2]]
    plain = b"P2\n#c\n2 2 # inline\n3\n0 1\n2 3\n"
    assert read_pgm(plain).tolist() == [[0, 1], [2, 3]]


def test_malformed_inputs():
    with pytest.raises(ValueError):
        read_pgm(b"P6\n1 1\n255\n\x00")  # wrong magic
    with pytest.raises(ValueError):
        read_pgm(b"P5\n1 1\n65535\n\x00\x00")  # maxval too large
    with pytest.raises(ValueError):
        read_pgm(b"P5\n2 2\n255\n\x00\x00")  # truncated raster
    with pytest.raises(ValueError):
        read_pgm(b"P5\n2 2\n255\n" + b"\x00" * 5)  # trailing junk
    with pytest.raises(ValueError):
        read_pgm(b"P5\nx 1\n255\n\x00")  # non-numeric width
    with pytest.raises(ValueError):
        read_pgm(b"P2\n2 1\n255\n7")  # too few plain samples
    with pytest.raises(ValueError):
        read_pgm(b"P2\n1 1\n10\n11")  # sample above maxval
    with pytest.raises(ValueError):
        read_pgm(b"P5\n1 1\n0\n\x00")  # maxval zero
    with pytest.raises(ValueError):
        read_pgm(b"P5\n1 1\n255")  # header ends before the raster
    with pytest.raises(ValueError):
        read_pgm(b"P5\n-1 1\n255\n\x00")  # negative width


def test_image_validation():
    with pytest.raises(ValueError):
        write_pgm(np.zeros((2, 2), dtype=np.float64))  # non-integer pixels
    with pytest.raises(ValueError):
        write_pgm(np.zeros((4,), dtype=np.uint8))  # not 2-D
    with pytest.raises(ValueError):
        write_pgm(np.full((2, 2), 300))  # out of 8-bit range
    with pytest.raises(ValueError):
        write_pgm(np.zeros((0, 4), dtype=np.uint8))  # empty


def test_watermark_round_trip():
    cell = checkerboard_cell()
    assert np.array_equal(read_watermark(write_watermark(cell)), cell)
    data = write_watermark(cell)
    assert data.startswith(b"P5\n4 4\n2\n")
    rng = np.random.RandomState(3)
    grid = rng.randint(0, 3, (16, 8), dtype=np.uint8)
    assert np.array_equal(read_watermark(write_watermark(grid)), grid)


def test_watermark_validation():
    bad_value = b"P5\n4 4\n2\n" + bytes([0, 1, 2, 3] * 4)
    with pytest.raises(ValueError):
        read_watermark(bad_value)
    bad_dims = b"P5\n5 4\n2\n" + bytes(20)
    with pytest.raises(ValueError):
        read_watermark(bad_dims)
    with pytest.raises(ValueError):
        write_watermark(np.full((4, 4), 3, dtype=np.uint8))
    with pytest.raises(ValueError):
        write_watermark(np.zeros((4, 5), dtype=np.uint8))


def test_tile_8x8_no_padding():
    img = np.arange(64, dtype=np.uint8).reshape(8, 8)
    blocks, grid = tile(img)
    assert grid == BlockGrid(blocks_x=2, blocks_y=2, pad_right=0, pad_bottom=0)
    assert len(blocks) == 4
    # row-major ordering
    assert np.array_equal(blocks[0], img[0:4, 0:4])
    assert np.array_equal(blocks[1], img[0:4, 4:8])
    assert np.array_equal(blocks[2], img[4:8, 0:4])
    assert np.array_equal(blocks[3], img[4:8, 4:8])
    assert np.array_equal(untile(blocks, grid), img)


def test_tile_with_padding_round_trip():
    rng = np.random.RandomState(4)
    img = rng.randint(0, 256, (5, 5), dtype=np.uint8)
    blocks, grid = tile(img, pad=True)
    assert grid.blocks_x == 2 and grid.blocks_y == 2
    assert grid.pad_right == 3 and grid.pad_bottom == 3
    assert grid.width == 5 and grid.height == 5
    assert np.array_equal(untile(blocks, grid), img)


def test_tile_rejects_unpadded_odd_size():
    with pytest.raises(ValueError):
        tile(np.zeros((5, 5), dtype=np.uint8))


def test_untile_validation():
    blocks, grid = tile(np.zeros((8, 8), dtype=np.uint8))
    with pytest.raises(ValueError):
        untile(blocks[:3], grid)
    with pytest.raises(ValueError):
        untile([np.zeros((2, 2), dtype=np.uint8)] * 4, grid)


def test_pad_to_multiple_edge_replication():
    img = np.array([[1, 2], [3, 4]], dtype=np.uint8)
    padded = pad_to_multiple(img)
    assert padded.shape == (4, 4)
    assert padded[0].tolist() == [1, 2, 2, 2]
    assert padded[3].tolist() == [3, 4, 4, 4]
    exact = np.zeros((8, 8), dtype=np.uint8)
    assert pad_to_multiple(exact) is exact


def test_padded_pipeline_raises_no_false_flags():
    # padding the original and the watermarked copy consistently must
    # verify clean everywhere, boundary blocks included
    rng = np.random.RandomState(5)
    img = rng.randint(0, 256, (13, 11), dtype=np.uint8)
    padded = pad_to_multiple(img)
    cell = checkerboard_cell()
    marked = embed_image(padded, cell)
    report = verify(padded, marked, cell)
    assert report.total_tampered == 0
    extracted = extract_image(padded, marked)
    assert np.array_equal(extracted, np.tile(cell, (4, 3)))

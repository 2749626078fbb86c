import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from oracles import (
    GOLDEN_INPUT,
    GOLDEN_OUTPUT,
    TABLE2_ROWS,
    letter_position,
    naive_block,
    naive_ct3,
    naive_ct4,
)

from census4x4 import (
    GrayImage,
    GroupSelector,
    TransformKind,
    census_bits,
    ct3_transform,
    ct4_transform,
    group_for,
    group_neighbor_positions,
    transform,
    transform_block_4x4,
)

blocks = arrays(np.uint8, (4, 4))
small_images = st.tuples(st.integers(1, 20), st.integers(1, 20)).flatmap(
    lambda hw: arrays(np.uint8, hw)).map(GrayImage)


@pytest.mark.parametrize("ref, neighbours, expected", [
    (11, [10, 8, 7, 6, 12, 14, 15, 1], 14),
    (16, [2, 3, 5, 11, 10, 9, 7, 6], 0),
    (2, [3, 13, 11, 10, 8, 7, 6, 12], 255),
    (7, [7] * 8, 255),
])
def test_census_bits_examples(ref, neighbours, expected):
    assert census_bits(ref, neighbours) == expected


def test_census_bits_msb_first():
    # only the first neighbour is not below the reference
    assert census_bits(100, [200] + [0] * 7) == 0b10000000
    assert census_bits(100, [0] * 7 + [200]) == 0b00000001


@pytest.mark.parametrize("n", [0, 7, 9])
def test_census_bits_wrong_count(n):
    with pytest.raises(ValueError):
        census_bits(5, [1] * n)


def test_census_bits_range():
    with pytest.raises(ValueError):
        census_bits(256, [0] * 8)


@pytest.mark.parametrize("letter, ref, neighbours, bits, code", TABLE2_ROWS)
def test_table2_row(letter, ref, neighbours, bits, code):
    r, c = letter_position(letter)
    assert GOLDEN_INPUT[r][c] == ref
    got = [GOLDEN_INPUT[rr][cc] for rr, cc in group_neighbor_positions(r, c)]
    assert got == neighbours
    assert census_bits(ref, got) == code
    assert format(code, "08b") == bits


def test_group_neighbours_examples():
    assert group_neighbor_positions(1, 1) == ((1, 2), (1, 3), (2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3))
    assert group_neighbor_positions(0, 0) == ((0, 1), (0, 2), (1, 0), (1, 1), (1, 2), (2, 0), (2, 1), (2, 2))
    assert group_neighbor_positions(3, 2) == ((1, 0), (1, 1), (1, 2), (2, 0), (2, 1), (2, 2), (3, 0), (3, 1))


def test_group_parity_rule():
    assert group_for(0, 0) is GroupSelector.TL
    assert group_for(0, 3) is GroupSelector.TR
    assert group_for(3, 0) is GroupSelector.BL
    assert group_for(1, 1) is GroupSelector.BR
    assert group_for(2, 1) is GroupSelector.TR


def test_each_group_used_by_four_positions():
    counts = {}
    for r in range(4):
        for c in range(4):
            g = group_for(r, c)
            assert (r, c) in g.members()
            counts[g] = counts.get(g, 0) + 1
    assert counts == {g: 4 for g in GroupSelector}


@pytest.mark.parametrize("pos", [(-1, 0), (4, 0), (0, 4)])
def test_group_out_of_range(pos):
    with pytest.raises(ValueError):
        group_neighbor_positions(*pos)


def test_golden_block():
    assert transform_block_4x4(GOLDEN_INPUT).tolist() == GOLDEN_OUTPUT


def test_constant_block():
    assert transform_block_4x4(np.full((4, 4), 42)).tolist() == [[255] * 4] * 4


def test_block_rejects_wrong_size():
    with pytest.raises(ValueError):
        transform_block_4x4(np.zeros((3, 3)))


def test_blocks_match_oracle_1000():
    rng = np.random.default_rng(7)
    for _ in range(1000):
        b = rng.integers(0, 256, size=(4, 4))
        assert transform_block_4x4(b).tolist() == naive_block(b.tolist())


def test_ct4_golden_image(golden_image):
    assert ct4_transform(golden_image).tolist() == GOLDEN_OUTPUT


def test_ct4_constant_17x9():
    img = GrayImage(np.full((9, 17), 3, dtype=np.uint8))
    out = ct4_transform(img)
    assert (out.width, out.height) == (17, 9)
    assert np.all(out.pixels == 255)


def test_ct4_tiles_are_independent():
    rng = np.random.default_rng(8)
    a, b = rng.integers(0, 256, size=(2, 4, 4))
    row = np.hstack([a, b])
    img = GrayImage(np.vstack([row, row]))
    out = ct4_transform(img).pixels
    ta, tb = transform_block_4x4(a), transform_block_4x4(b)
    for y0 in (0, 4):
        assert np.array_equal(out[y0:y0 + 4, 0:4], ta)
        assert np.array_equal(out[y0:y0 + 4, 4:8], tb)


def test_ct3_examples():
    assert ct3_transform(GrayImage.from_rows([[9]])).tolist() == [[255]]
    assert ct3_transform(GrayImage.from_rows([[10, 20], [30, 40]])).tolist() == [[255, 111], [31, 11]]
    assert np.all(ct3_transform(GrayImage(np.full((5, 7), 200, dtype=np.uint8))).pixels == 255)


def test_dispatch(golden_image):
    assert transform(golden_image, TransformKind.CT4X4).tolist() == GOLDEN_OUTPUT
    assert transform(golden_image, "4x4") == ct4_transform(golden_image)
    assert transform(golden_image, "3x3") == ct3_transform(golden_image)


@settings(max_examples=60, deadline=None)
@given(small_images)
def test_ct4_matches_oracle(img):
    assert ct4_transform(img).tolist() == naive_ct4(img.tolist())


@settings(max_examples=60, deadline=None)
@given(small_images)
def test_ct3_matches_oracle(img):
    assert ct3_transform(img).tolist() == naive_ct3(img.tolist())


@settings(deadline=None)
@given(small_images, st.sampled_from(list(TransformKind)))
def test_output_dimensions_preserved(img, kind):
    out = transform(img, kind)
    assert out.pixels.shape == img.pixels.shape
    assert out.pixels.dtype == np.uint8


@settings(deadline=None)
@given(small_images, st.sampled_from(list(TransformKind)), st.data())
def test_monotone_invariance(img, kind, data):
    # strictly increasing on the intensities present; a bijection of all of [0, 255] would be identity
    present = np.unique(img.pixels)
    targets = sorted(data.draw(st.sets(st.integers(0, 255), min_size=len(present), max_size=len(present))))
    table = np.zeros(256, dtype=np.uint8)
    table[present] = targets
    remapped = GrayImage(table[img.pixels])
    assert transform(remapped, kind) == transform(img, kind)


@given(blocks)
def test_extremal_codes(b):
    if len(np.unique(b)) != 16:
        return
    out = transform_block_4x4(b)
    for r in range(4):
        for c in range(4):
            group = [b[p] for p in group_for(r, c).members()]
            assert (out[r, c] == 0) == (b[r, c] == max(group))
            assert (out[r, c] == 255) == (b[r, c] == min(group))


@given(blocks, st.integers(0, 3), st.integers(0, 3), st.integers(0, 3), st.integers(0, 3),
       st.integers(0, 255))
def test_locality(b, r, c, pr, pc, value):
    members = set(group_for(r, c).members())
    if (pr, pc) in members:
        return
    mutated = b.copy()
    mutated[pr, pc] = value
    assert transform_block_4x4(mutated)[r, c] == transform_block_4x4(b)[r, c]


def test_crossing_reference_value_changes_output():
    b = np.array(GOLDEN_INPUT)
    for r in range(4):
        for c in range(4):
            for p in group_neighbor_positions(r, c):
                ref, old = b[r, c], b[p]
                mutated = b.copy()
                # move the neighbour to the other side of the reference
                mutated[p] = ref - 1 if old >= ref else ref
                if not 0 <= mutated[p] <= 255:
                    continue
                assert transform_block_4x4(mutated)[r, c] != transform_block_4x4(b)[r, c]


@pytest.mark.parametrize("kind", list(TransformKind))
@pytest.mark.parametrize("threads", [2, 3, 8])
def test_threads_bit_identical(kind, threads):
    img = GrayImage(np.random.default_rng(9).integers(0, 256, size=(37, 53), dtype=np.uint8))
    assert transform(img, kind, threads=threads) == transform(img, kind)

import pytest
from hypothesis import given, strategies as st

from shapewilf import (
    Filling,
    FullRookPlacement,
    InvalidPattern,
    NotFerrers,
    ShapeMismatch,
    border_path,
    column_heights,
    direct_sum,
    filling_content,
    format_patterns,
    format_shape,
    format_word,
    make_shape,
    parse_patterns,
    parse_shape,
    parse_word,
    validate_pattern,
    word_to_filling,
)
from worked_example import CONTENT, FILLING, SHAPE


@st.composite
def shapes(draw, max_cols=7, max_rows=5):
    n_rows = draw(st.integers(1, max_rows))
    rows = []
    cap = draw(st.integers(1, max_cols))
    for _ in range(n_rows):
        cap = draw(st.integers(1, cap))
        rows.append(cap)
    return make_shape(rows)


words = st.lists(st.integers(1, 6), min_size=1, max_size=8).map(tuple)


def test_make_shape_accepts_weakly_decreasing_rows():
    shape = make_shape((10, 10, 10, 7, 4, 4))
    assert shape.rows == (10, 10, 10, 7, 4, 4)
    assert shape.heights == (6, 6, 6, 6, 4, 4, 4, 3, 3, 3)
    assert make_shape((1,)).rows == (1,)


@pytest.mark.parametrize("rows", [(4, 5), (2, 3, 1), (1, 0), (-1,), ()])
def test_make_shape_rejects_non_shapes(rows):
    with pytest.raises(NotFerrers):
        make_shape(rows)


def test_column_heights():
    assert column_heights(make_shape((5, 5, 4))) == (3, 3, 3, 3, 2)
    assert column_heights(make_shape((1,))) == (1,)
    assert column_heights(make_shape((10, 10, 10, 7, 4, 4))) == (6, 6, 6, 6, 4, 4, 4, 3, 3, 3)


@given(shapes())
def test_column_heights_decrease_and_cover_all_cells(shape):
    heights = column_heights(shape)
    assert all(a >= b for a, b in zip(heights, heights[1:]))
    assert sum(heights) == shape.n_cells


def test_word_to_filling():
    filling = word_to_filling(parse_word("213314242"))
    assert filling.shape.rows == (9, 9, 9, 9)
    assert filling.col_to_row == (2, 1, 3, 3, 1, 4, 2, 4, 2)
    assert word_to_filling((1,)).shape.rows == (1,)
    assert word_to_filling((1, 1)).col_to_row == (1, 1)


@given(words)
def test_word_to_filling_content_counts_letters(word):
    content = filling_content(word_to_filling(word))
    assert content == tuple(word.count(v) for v in range(1, max(word) + 1))


@given(words, words)
def test_word_to_filling_injective(u, v):
    if u != v:
        fu, fv = word_to_filling(u), word_to_filling(v)
        assert (fu.shape, fu.col_to_row) != (fv.shape, fv.col_to_row)


def test_filling_content_with_empty_rows():
    assert filling_content(Filling(SHAPE, FILLING)) == CONTENT
    assert filling_content(word_to_filling((1, 2, 3))) == (1, 1, 1)
    assert filling_content(word_to_filling((1, 1, 1))) == (3,)
    # an unused top row shows up as 0
    assert filling_content(Filling(make_shape((2, 2)), (1, 1))) == (2, 0)


def test_direct_sum():
    assert direct_sum((2, 3, 1), (1, 2)) == (2, 3, 1, 4, 5)
    assert direct_sum((2, 3, 1), (1,)) == (2, 3, 1, 4)
    assert direct_sum((2, 3, 1), ()) == (2, 3, 1)
    assert direct_sum((), (2, 1)) == (2, 1)


@given(words, words, words)
def test_direct_sum_associative_with_additive_max(x, y, z):
    assert direct_sum(direct_sum(x, y), z) == direct_sum(x, direct_sum(y, z))
    assert max(direct_sum(x, y)) == max(x) + max(y)


def test_border_path_small_cases():
    assert border_path(make_shape((2, 1))) == ((0, 2), (1, 2), (1, 1), (2, 1), (2, 0))
    assert border_path(make_shape((1,))) == ((0, 1), (1, 1), (1, 0))
    assert len(border_path(make_shape((10,) * 7 + (7, 4, 4)))) == 21


@given(shapes())
def test_border_path_steps(shape):
    path = border_path(shape)
    assert len(path) == shape.n_rows + shape.width + 1
    assert path[0] == (0, shape.n_rows)
    assert path[-1] == (shape.width, 0)
    steps = [(b[0] - a[0], b[1] - a[1]) for a, b in zip(path, path[1:])]
    assert steps.count((1, 0)) == shape.width
    assert steps.count((0, -1)) == shape.n_rows


def test_filling_must_stay_inside_shape():
    shape = make_shape((2, 1))
    assert Filling(shape, (2, 1)).col_to_row == (2, 1)
    with pytest.raises(ShapeMismatch):
        Filling(shape, (1, 2))  # column 2 has height 1
    with pytest.raises(ShapeMismatch):
        Filling(shape, (1,))  # one entry per column


def test_full_rook_placement_validation():
    square = make_shape((2, 2))
    assert FullRookPlacement(Filling(square, (2, 1))).col_to_row == (2, 1)
    # staircase shapes admit full placements too
    assert FullRookPlacement(Filling(make_shape((2, 1)), (2, 1))).shape.rows == (2, 1)
    with pytest.raises(ShapeMismatch):
        FullRookPlacement(Filling(square, (1, 1)))  # row 1 used twice
    with pytest.raises(ShapeMismatch):
        FullRookPlacement(Filling(make_shape((3, 1)), (2, 1, 1)))  # 2 rows, 3 columns


def test_pattern_validation():
    assert validate_pattern((2, 3, 1)) == (2, 3, 1)
    assert validate_pattern((1, 1)) == (1, 1)
    with pytest.raises(InvalidPattern):
        validate_pattern((1, 3))  # gap: no 2
    with pytest.raises(InvalidPattern):
        validate_pattern(())
    with pytest.raises(InvalidPattern):
        validate_pattern((0, 1))


def test_text_encodings_round_trip():
    assert format_shape(parse_shape("10,10,10,7,4,4")) == "10,10,10,7,4,4"
    assert parse_word("231") == (2, 3, 1)
    assert parse_word("10,9,2") == (10, 9, 2)
    assert format_word((10, 9, 2)) == "10,9,2"
    assert format_word((2, 3, 1)) == "231"
    assert parse_patterns("231+221") == ((2, 3, 1), (2, 2, 1))
    assert parse_patterns("") == ()
    assert format_patterns(((2, 3, 1), (2, 2, 1))) == "231+221"
    with pytest.raises(InvalidPattern):
        parse_patterns("13")
    with pytest.raises(ValueError):
        parse_shape("5,x")

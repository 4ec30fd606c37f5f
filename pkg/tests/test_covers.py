import pytest
from conftest import BINOMIAL, TRINOMIAL, random_poly_matrix
from conftest import poly_matrix as pm

from qcldpc.covers import (
    CoverSplit,
    SplitError,
    block_to_interleaved,
    build_cover_block,
    build_cover_interleaved,
    cover_distance_bounds,
    cover_vertex_maps,
    is_cover_map,
    read_split,
    shuffle_index,
    split_auto,
    split_from_part1,
    verify_cover_projection,
)
from qcldpc.cycles import build_tanner
from qcldpc.distance import code_dimension, dmin_exhaustive, gf2_rank
from qcldpc.matrix import PolyMatrix, ScalarMatrix, expand_scalar, parse_matrix, regularity
from qcldpc.ring import RingPoly

# interleaved double cover of the binomial code, entry by entry
BINOMIAL_COVER = [
    [1, 2, None, None, 4, None, 8, None],
    [2, 1, None, None, None, 4, None, 8],
    [5, None, 9, None, 10, 20, None, None],
    [None, 5, None, 9, 20, 10, None, None],
    [None, None, 25, 19, None, None, 7, 14],
    [None, None, 19, 25, None, None, 14, 7],
]


def test_auto_split_of_binomial_code():
    s = split_auto(pm(46, BINOMIAL))
    assert s.part1[0, 0] == RingPoly(46, (1,)) and s.part2[0, 0] == RingPoly(46, (2,))
    assert s.part1[0, 2] == RingPoly(46, (4,)) and s.part2[0, 2].is_zero()
    assert s.part1[0, 1].is_zero() and s.part2[0, 1].is_zero()
    assert s.combined() == pm(46, BINOMIAL)


def test_interleaved_cover_matches_displayed_matrix():
    cover = build_cover_interleaved(split_auto(pm(46, BINOMIAL)))
    expected = PolyMatrix.from_exponents(46, BINOMIAL_COVER)
    # the displayed pairing puts x^25 first in the (2,1) block; the auto split puts x^19 first
    assert cover.shape == expected.shape
    for j in range(6):
        for i in range(8):
            if (j // 2, i // 2) == (2, 1):
                continue
            assert cover[j, i] == expected[j, i], (j, i)
    assert cover[4, 2] == expected[4, 3] and cover[4, 3] == expected[4, 2]


def test_split_file_reproduces_displayed_pairing():
    H = pm(46, BINOMIAL)
    part1 = parse_matrix("r 46\n1 - 4 8\n5 9 10 -\n- 25 - 7\n")
    cover = build_cover_interleaved(split_from_part1(H, part1))
    assert cover == PolyMatrix.from_exponents(46, BINOMIAL_COVER)


def test_binomial_cover_parameters():
    H = pm(46, BINOMIAL)
    cover = build_cover_block(split_auto(H))
    assert cover.shape == (6, 8)
    assert code_dimension(cover) == (368, 93)
    assert regularity(cover.weight_matrix()) == (3, 4)
    assert cover.weight_matrix().max_entry() == 1
    assert verify_cover_projection(cover, H)
    assert cover_distance_bounds(32) == (32, 64)


def test_one_by_one_cover():
    H = PolyMatrix.from_exponents(9, [[(2, 5)]])
    s = split_auto(H)
    block = build_cover_block(s)
    assert block == PolyMatrix.from_exponents(9, [[2, 5], [5, 2]])
    assert build_cover_interleaved(s) == block


def test_monomial_split_is_block_diagonal(rng):
    H = random_poly_matrix(rng, 2, 3, 5, p_zero=0.0)
    s = split_auto(H)
    assert all(p.is_zero() for row in s.part2.entries for p in row)
    cover = build_cover_block(s)
    n, k = code_dimension(H)
    assert code_dimension(cover) == (2 * n, 2 * k)
    assert dmin_exhaustive(cover).dmin == dmin_exhaustive(H).dmin
    assert verify_cover_projection(cover, H)


def test_trinomial_needs_split_file(tmp_path):
    H = pm(31, TRINOMIAL)
    with pytest.raises(SplitError, match="--split-file"):
        split_auto(H)
    f = tmp_path / "split.qcpm"
    f.write_text("r 31\n2,4 - - 1\n- 9 - 5\n- - 7,14 25\n")
    s = read_split(H, f)
    assert s.part2[0, 0] == RingPoly(31, (8,))
    assert s.part2[1, 1] == RingPoly(31, (10, 20))
    assert verify_cover_projection(build_cover_block(s), H)


def test_split_validation():
    H = pm(46, BINOMIAL)
    with pytest.raises(SplitError):
        split_from_part1(H, parse_matrix("r 46\n3 - 4 8\n5 9 10 -\n- 19 - 7\n"))
    with pytest.raises(SplitError):
        split_from_part1(H, parse_matrix("r 45\n1 - 4 8\n5 9 10 -\n- 19 - 7\n"))
    with pytest.raises(SplitError):
        CoverSplit(PolyMatrix.from_exponents(5, [[1]]), PolyMatrix.from_exponents(5, [[(1, 2)]]))


def test_shuffle_relates_layouts(rng):
    for _ in range(40):
        J, L = rng.randint(1, 3), rng.randint(1, 4)
        H = random_poly_matrix(rng, J, L, rng.randint(2, 9), max_weight=2)
        s = split_auto(H)
        block, inter = build_cover_block(s), build_cover_interleaved(s)
        assert block_to_interleaved(block, J, L) == inter
        assert gf2_rank(expand_scalar(block)) == gf2_rank(expand_scalar(inter))
    assert [shuffle_index(a, 3) for a in range(6)] == [0, 2, 4, 1, 3, 5]


def test_projection_holds_for_both_layouts(rng):
    for _ in range(40):
        H = random_poly_matrix(rng, rng.randint(1, 3), rng.randint(1, 4), rng.randint(2, 9), max_weight=2)
        s = split_auto(H)
        assert verify_cover_projection(build_cover_block(s), H, layout="block")
        assert verify_cover_projection(build_cover_interleaved(s), H, layout="interleaved")


def test_rewired_edge_breaks_projection():
    H = pm(46, BINOMIAL)
    cover = build_cover_block(split_auto(H))
    Hs = expand_scalar(cover)
    var_map, chk_map = cover_vertex_maps(cover, H)
    base = build_tanner(expand_scalar(H))
    assert is_cover_map(build_tanner(Hs), base, var_map, chk_map)
    v = next(v for v in range(Hs.n_cols) if not Hs.bit(0, v))
    rows = list(Hs.rows)
    rows[0] ^= 1 << v
    broken = ScalarMatrix(Hs.n_rows, Hs.n_cols, tuple(rows))
    assert not is_cover_map(build_tanner(broken), base, var_map, chk_map)


def test_projection_shape_checks():
    H = pm(46, BINOMIAL)
    with pytest.raises(ValueError):
        verify_cover_projection(H, H)
    with pytest.raises(ValueError):
        verify_cover_projection(build_cover_block(split_auto(H)), H, fold=3)
    with pytest.raises(ValueError):
        verify_cover_projection(build_cover_block(split_auto(H)), H, layout="zigzag")


def test_sandwich_bounds_values():
    assert cover_distance_bounds(1) == (1, 2)
    with pytest.raises(ValueError):
        cover_distance_bounds(0)


def test_sandwich_on_small_codes(rng):
    checked = 0
    while checked < 25:
        J = rng.randint(1, 2)
        H = random_poly_matrix(rng, J, J + rng.randint(1, 2), rng.randint(3, 6), max_weight=2, p_zero=0.1)
        cover = build_cover_block(split_auto(H))
        base = dmin_exhaustive(H, max_dim=20)
        top = dmin_exhaustive(cover, max_dim=20)
        if base.dmin is None or top.dmin is None:
            continue
        checked += 1
        lo, hi = cover_distance_bounds(base.dmin)
        assert lo <= top.dmin <= hi


def test_cover_preserves_degree_profile(rng):
    for _ in range(30):
        H = random_poly_matrix(rng, rng.randint(1, 3), rng.randint(1, 4), rng.randint(2, 9), max_weight=2)
        A = H.weight_matrix()
        C = build_cover_block(split_auto(H)).weight_matrix()
        assert C.row_sums() == A.row_sums() * 2
        assert C.col_sums() == A.col_sums() * 2

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from coxmackey.arrangement import Arrangement, arrangement_of
from coxmackey.repdata import adjoint, rep_gl_standard, rep_torus

from oracles import first_cell_on_segment, fubini, grid_sign_vectors, random_normals, seeded


@pytest.fixture(scope="module")
def gl2():
    return arrangement_of(rep_gl_standard(2))


@pytest.fixture(scope="module")
def gl3():
    return arrangement_of(rep_gl_standard(3))


def signs_by_weight(arr, lam):
    return {a: arr.cell_of(lam).sign_of(a) for a in [(1, 0), (0, 1), (1, -1)]}


# ---------------------------------------------------------------------------
# cells of points


def test_cell_of_origin(gl2):
    assert not any(gl2.cell_of((0, 0)).signs)


def test_cell_of_points(gl2):
    assert signs_by_weight(gl2, (-2, -1)) == {(1, 0): -1, (0, 1): -1, (1, -1): -1}
    assert signs_by_weight(gl2, (1, 0)) == {(1, 0): 1, (0, 1): 0, (1, -1): 1}


def test_cell_of_dimension_mismatch(gl2):
    with pytest.raises(ValueError):
        gl2.cell_of((1, 2, 3))


def test_witness_must_realize_signs(gl2):
    from coxmackey.arrangement import Cell
    with pytest.raises(ValueError):
        Cell(gl2, (1, 1, 1), (-1, -1))


def test_sign_of_negated_weight(gl2):
    c = gl2.cell_of((-2, -1))
    for a in [(1, 0), (0, 1), (1, -1)]:
        assert c.sign_of(tuple(-v for v in a)) == -c.sign_of(a)


# ---------------------------------------------------------------------------
# enumeration counts; braid arrangements count weak orders of {0, x1, .., xn}


@pytest.mark.parametrize("n,cells,flats", [(1, 3, 2), (2, 13, 5), (3, 75, 15)])
def test_gl_counts_match_weak_orders(n, cells, flats):
    arr = arrangement_of(rep_gl_standard(n))
    assert cells == fubini(n + 1)
    assert len(arr.cells()) == cells
    assert len(arr.flats()) == flats
    assert {c.signs for c in arr.cells()} == grid_sign_vectors(arr.normals, n, n)


def test_torus_gl1_counts():
    arr = arrangement_of(rep_torus([(1,)]))
    assert (len(arr.cells()), len(arr.flats())) == (3, 2)


def test_gl2_adjoint_counts():
    arr = arrangement_of(adjoint(rep_gl_standard(2)))
    # one line: two open half-planes and the line itself
    assert len(arr.normals) == 1
    assert (len(arr.cells()), len(arr.flats())) == (3, 2)


def test_rank2_torus_counts():
    arr = arrangement_of(rep_torus([(1, 0), (0, 1)]))
    assert (len(arr.cells()), len(arr.flats())) == (9, 4)


def test_no_weights_single_cell():
    arr = Arrangement(2, [])
    assert len(arr.cells()) == 1 and len(arr.flats()) == 1


def test_rays_deduplicated():
    arr = Arrangement(2, [(1, 0), (2, 0), (-1, 0), (0, 3)])
    assert len(arr.normals) == 2


@pytest.mark.parametrize("seed", range(6))
def test_random_rank3_cells_match_grid(seed):
    rng = random.Random(seed)
    normals = random_normals(rng, 3, rng.randint(3, 6), bound=1)
    arr = Arrangement(3, normals)
    enumerated = {c.signs for c in arr.cells()}
    assert grid_sign_vectors(arr.normals, 3, 4) <= enumerated
    assert len(enumerated) == len(arr.cells())


def test_partition_by_random_points(gl3):
    rng = seeded("partition")
    cells = set(gl3.cells())
    seen = {}
    for _ in range(200):
        lam = tuple(Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(3))
        c = gl3.cell_of(lam)
        assert c in cells
        seen.setdefault(c.signs, c)
    assert len(seen) == len(set(seen.values()))


# ---------------------------------------------------------------------------
# flats


def test_gl2_flats(gl2):
    dims = sorted(f.dim for f in gl2.flats())
    assert dims == [0, 1, 1, 1, 2]


def test_flats_saturated(gl3):
    for f in gl3.flats():
        assert f.vanishing == {h for h, a in enumerate(gl3.normals) if f.vanishes(a)}
        for b in f.basis:
            assert f.contains_point(b)


def test_span_flat_examples(gl2):
    assert gl2.span_flat(gl2.cell_of((1, -1))).dim == 2
    assert gl2.span_flat(gl2.cell_of((1, -1))).vanishing == frozenset()
    assert gl2.span_flat(gl2.cell_of((0, 0))) == gl2.origin_flat()
    line = gl2.span_flat(gl2.cell_of((1, 0)))
    assert line.dim == 1 and line.vanishes((0, 1)) and not line.vanishes((1, 0))


def test_span_flat_is_largest(gl3):
    for c in gl3.cells():
        s = gl3.span_flat(c)
        above = [f for f in gl3.flats() if gl3.cell_leq_flat(c, f)]
        assert s in above
        assert all(gl3.flat_leq(s, f) for f in above)


def test_generic_point(gl2):
    diag = gl2.flat_of_cocharacter((1, 1))
    assert gl2.generic_point(diag) == (1, 1) or gl2.generic_point(diag) == (-1, -1)
    assert gl2.generic_point(gl2.origin_flat()) == (0, 0)
    p = gl2.generic_point(gl2.ambient())
    assert gl2.cell_of(p).is_chamber()


def test_generic_point_avoids_other_hyperplanes(gl3):
    for f in gl3.flats():
        p = gl3.generic_point(f)
        assert f.contains_point(p)
        assert gl3.cell_of(p).zero_set() == f.vanishing


# ---------------------------------------------------------------------------
# order


def test_order_examples(gl2):
    o = gl2.origin_cell()
    for c in gl2.cells():
        assert gl2.cell_leq(c, o)
        assert gl2.flat_leq(gl2.ambient(), gl2.span_flat(c))
    assert gl2.cell_leq(gl2.cell_of((1, -1)), gl2.cell_of((1, 0)))
    assert not gl2.cell_leq(gl2.cell_of((1, 0)), gl2.cell_of((1, -1)))


def test_order_is_partial(gl3):
    cells = gl3.cells()
    for a in cells:
        assert gl3.cell_leq(a, a)
        for b in cells:
            if a != b and gl3.cell_leq(a, b):
                assert not gl3.cell_leq(b, a)


def test_mismatched_arrangements(gl2, gl3):
    with pytest.raises(ValueError):
        gl2.tits(gl2.origin_cell(), gl3.origin_cell())


# ---------------------------------------------------------------------------
# Tits product


def test_tits_worked_example(gl2):
    a, b = gl2.cell_of((-1, -2)), gl2.cell_of((-2, -1))
    assert gl2.tits(a, b) == a
    assert gl2.tits(b, a) == b


def test_tits_identities(gl3):
    o = gl3.origin_cell()
    for c in gl3.cells():
        assert gl3.tits(c, c) == c
        assert gl3.tits(o, c) == c
        assert gl3.tits(c, o) == c


def test_tits_matches_segment_oracle(gl3):
    for c in gl3.cells():
        for d in gl3.cells():
            p = gl3.tits(c, d)
            assert p.signs == first_cell_on_segment(gl3.normals, c.witness, d.witness)
            assert gl3.cell_leq(p, c)


def test_tits_associative_gl2(gl2):
    cs = gl2.cells()
    for a in cs:
        for b in cs:
            for c in cs:
                assert gl2.tits(gl2.tits(a, b), c) == gl2.tits(a, gl2.tits(b, c))


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6), st.integers(2, 7))
def test_tits_oracle_random_arrangements(seed, count):
    rng = random.Random(seed)
    arr = Arrangement(3, random_normals(rng, 3, count))
    cs = arr.cells()
    for _ in range(20):
        c, d = rng.choice(cs), rng.choice(cs)
        p = arr.tits(c, d)
        assert p.signs == first_cell_on_segment(arr.normals, c.witness, d.witness)
        assert arr.tits(arr.tits(c, d), p) == arr.tits(c, arr.tits(d, p))

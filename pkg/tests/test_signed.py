import random

import pytest

from colourflip.colouring import (
    ColourScheme,
    ColouredTriangulation,
    coloured_flip_with_map,
    enumerate_coloured,
    flippable_diagonals,
    is_frozen,
)
from colourflip.polygon import Triangulation, fan, triangulation_table
from colourflip.signed import (
    SignError,
    boundary_neighbours_agree,
    canonical_colouring,
    colouring,
    colouring_from_valuation,
    decide_equivalence,
    ear_vertices,
    is_alternating,
    is_proper,
    same_coloured_neighbour_pairs,
    signed_class,
    signs_from_valuation,
    signs_from_weighting,
    uses_four_colours,
    valuation,
    valuation_from_colouring,
    weighting,
)

TWO = ColourScheme.cyclic(2)


def ct_of(n, diags, colours):
    return ColouredTriangulation(Triangulation(n, tuple(diags)), tuple(colours))


# figure examples
HEPT_A1 = ct_of(7, [(1, 3), (1, 5), (1, 6), (3, 5)], [1, 0, 0, 0, 1])
HEPT_A2 = ct_of(7, [(1, 4), (1, 6), (2, 4), (4, 6)], [0, 1, 1, 0, 1])
HEX_LEFT = ct_of(6, [(0, 2), (0, 4), (2, 4)], [1, 0, 1, 1])
HEX_RIGHT = ct_of(6, [(1, 3), (1, 5), (3, 5)], [1, 1, 0, 1])


def all_signed(n):
    return enumerate_coloured(n, 2)


def test_square_weighting():
    plus = ct_of(4, [(0, 2)], [0, 0])
    assert weighting(plus) == (-1, 1, -1, 1)
    assert weighting(plus.swapped()) == (1, -1, 1, -1)
    assert valuation(plus) == (0,)
    assert colouring(plus) == tuple("abcd")


def test_heptagon_signed_example():
    assert HEPT_A1.faces == ((0, 1, 6), (1, 2, 3), (1, 3, 5), (1, 5, 6), (3, 4, 5))
    assert weighting(HEPT_A1) == (-1, -1, 1, 1, -1, 1, 0)
    assert valuation(HEPT_A1) == (0, 0, 1, 1)
    assert colouring(HEPT_A1) == tuple("abcdbac")


def test_heptagon_flip_example():
    assert weighting(HEPT_A2) == (1, -1, 0, 1, 1, -1, -1)
    out, new, _ = coloured_flip_with_map(HEPT_A2, (4, 6), TWO)
    assert new == (1, 5)
    assert out.colour_of((1, 4, 5)) == 0 and out.colour_of((1, 5, 6)) == 0
    assert weighting(out) == weighting(HEPT_A2)
    assert colouring(HEPT_A2) == colouring(out) == tuple("abcbacd")


def test_alternating_hexagons_are_not_equivalent():
    for ct in (HEX_LEFT, HEX_RIGHT):
        assert is_alternating(ct) and is_frozen(ct)
        assert weighting(ct) == (-1,) * 6
        assert colouring(ct) == tuple("abcabc")
        assert not uses_four_colours(colouring(ct))
    assert not decide_equivalence(HEX_LEFT, HEX_RIGHT)


def test_decide_equivalence_examples():
    a = ct_of(4, [(0, 2)], [0, 0])
    b = ct_of(4, [(1, 3)], [1, 1])
    assert decide_equivalence(a, b)
    assert decide_equivalence(a, a.swapped())
    assert decide_equivalence(HEX_LEFT, HEX_LEFT)
    assert not decide_equivalence(a, ct_of(4, [(0, 2)], [0, 1]))
    with pytest.raises(SignError):
        decide_equivalence(a, HEX_LEFT)


def test_signed_class_representative():
    assert signed_class(HEX_LEFT).colours == (0, 1, 0, 0)
    assert signed_class(signed_class(HEX_LEFT).swapped()) == signed_class(HEX_LEFT)
    with pytest.raises(SignError):
        signed_class(ct_of(4, [(0, 2)], [2, 0]))


def test_canonical_colouring():
    assert canonical_colouring("dcbd") == tuple("abca")
    assert canonical_colouring(tuple("abca")) == tuple("abca")


@pytest.mark.parametrize("n", range(3, 8))
def test_round_trips(n):
    for ct in all_signed(n):
        t = ct.triangulation
        v = valuation(ct)
        s, s_bar = signs_from_valuation(t, v)
        assert ct.colours in (s, s_bar) and s[0] == 0
        col = colouring_from_valuation(t, v)
        assert is_proper(t, col)
        assert valuation_from_colouring(t, col) == v
        assert signs_from_weighting(t, weighting(ct)) == ct.colours


def test_weighting_reconstruction_can_fail():
    t = fan(5, 0)
    assert signs_from_weighting(t, (0, 0, 0, 0, 0)) is None
    with pytest.raises(SignError):
        signs_from_weighting(t, (1, 1))


@pytest.mark.parametrize("n", range(4, 8))
def test_zero_weight_iff_boundary_neighbours_agree(n):
    for ct in all_signed(n):
        p, col = weighting(ct), colouring(ct)
        for x in range(n):
            assert (p[x] == 0) == boundary_neighbours_agree(col, x)


@pytest.mark.parametrize("n", range(4, 8))
def test_degree_facts(n):
    for ct in all_signed(n):
        t = ct.triangulation
        p, col = weighting(ct), colouring(ct)
        for x in range(n):
            pairs = same_coloured_neighbour_pairs(t, col, x)
            boundary = tuple(sorted(((x - 1) % n, (x + 1) % n)))
            if pairs == [boundary]:
                assert t.degree(x) in (3, 4) and p[x] == 0
            if not pairs:
                assert t.degree(x) in (2, 3) and p[x] != 0


def _check_flip_effects(ct):
    t = ct.triangulation
    v = dict(zip(ct.diagonals, valuation(ct)))
    for d in flippable_diagonals(ct):
        out, new, _ = coloured_flip_with_map(ct, d, TWO)
        v2 = dict(zip(out.diagonals, valuation(out)))
        assert v2[new] == 0
        quad = set(t.faces[t.incident_faces[d][0]]) | set(t.faces[t.incident_faces[d][1]])
        for e in ct.diagonals:
            if e == d:
                continue
            on_boundary = set(e) <= quad
            assert v2[e] == (1 - v[e] if on_boundary else v[e])
        assert weighting(out) == weighting(ct)
        assert colouring(out) == colouring(ct)


@pytest.mark.parametrize("n", range(4, 8))
def test_flip_effects_exhaustive(n):
    for ct in all_signed(n):
        _check_flip_effects(ct)


@pytest.mark.parametrize("n", [8, 9])
def test_flip_effects_random(n):
    rng = random.Random(n)
    tris = triangulation_table(n).triangulations
    for _ in range(400):
        ct = ColouredTriangulation(rng.choice(tris), tuple(rng.randrange(2) for _ in range(n - 2)))
        _check_flip_effects(ct)


@pytest.mark.parametrize("n", range(5, 9))
def test_seed_does_not_matter(n):
    rng = random.Random(n)
    states = list(all_signed(n))
    for ct in rng.sample(states, min(200, len(states))):
        t, v = ct.triangulation, valuation(ct)
        results = {colouring_from_valuation(t, v, seed=x) for x in ear_vertices(t)}
        assert len(results) == 1


def test_seed_must_be_ear():
    with pytest.raises(SignError):
        colouring_from_valuation(fan(6, 0), (0, 0, 0), seed=0)


@pytest.mark.parametrize("n", range(4, 8))
def test_non_frozen_uses_four_colours(n):
    for ct in all_signed(n):
        assert is_frozen(ct) == is_alternating(ct)
        if not is_frozen(ct):
            assert uses_four_colours(colouring(ct))
        else:
            assert len(set(colouring(ct))) == 3


def test_rejects_extra_colours():
    with pytest.raises(SignError):
        weighting(ct_of(4, [(0, 2)], [0, 2]))

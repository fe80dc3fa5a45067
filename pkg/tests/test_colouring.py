import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from colourflip.colouring import (
    ColourScheme,
    ColouredTriangulation,
    FlipError,
    FlipSequence,
    SequenceError,
    apply_sequence,
    coloured_flip,
    coloured_flip_with_map,
    count_coloured,
    count_frozen,
    cycle_regions,
    enumerate_coloured,
    face_cycle_labels,
    flippable_diagonals,
    greedy_sequence,
    is_frozen,
    is_single_cycle,
    trace_sequence,
    translate_sequence,
)
from colourflip.checks import fan_path_start
from colourflip.polygon import Triangulation, fan, triangulation_table

from oracles import brute_coloured_flip

SQUARE = Triangulation(4, ((0, 2),))


def test_square_flip_changes_colour():
    two = ColourScheme.cyclic(2)
    ct = ColouredTriangulation(SQUARE, (0, 0))
    out = coloured_flip(ct, (0, 2), two)
    assert out.diagonals == ((1, 3),) and out.colours == (1, 1)
    back = coloured_flip(out, (1, 3), two)
    assert back.colours == (0, 0) and back.diagonals == ((0, 2),)


def test_mixed_square_is_frozen():
    ct = ColouredTriangulation(SQUARE, (0, 1))
    assert is_frozen(ct)
    with pytest.raises(FlipError, match="not flippable"):
        coloured_flip(ct, (0, 2), ColourScheme.cyclic(2))


def test_four_colour_cycle_returns_after_four_flips():
    four = ColourScheme.cyclic(4)
    ct = ColouredTriangulation(SQUARE, (2, 2))
    states = [ct]
    d = (0, 2)
    for _ in range(4):
        nxt, d, _ = coloured_flip_with_map(states[-1], d, four)
        states.append(nxt)
    assert [s.colours[0] for s in states] == [2, 3, 0, 1, 2]
    assert states[-1] == ct


def test_face_map_on_hexagon_fan():
    two = ColourScheme.cyclic(2)
    ct = ColouredTriangulation(fan(6, 0), (0, 1, 1, 0))
    out, new, src = coloured_flip_with_map(ct, (0, 3), two)
    assert new == (2, 4)
    # (0,2,4) continues (0,2,3) and (2,3,4) continues (0,3,4)
    assert out.faces == ((0, 1, 2), (0, 2, 4), (0, 4, 5), (2, 3, 4))
    assert out.colours == (0, 0, 0, 0)
    assert src == (0, 1, 3, 2)


def test_flippable_examples():
    ct = ColouredTriangulation(fan(6, 0), (0, 0, 1, 0))
    assert flippable_diagonals(ct) == [(0, 2)]
    ct = ColouredTriangulation(fan(6, 0), (1, 1, 1, 1))
    assert flippable_diagonals(ct) == [(0, 2), (0, 3), (0, 4)]


@pytest.mark.parametrize("n", range(4, 8))
@pytest.mark.parametrize("m", [2, 3])
def test_flip_matches_brute_force(n, m):
    scheme = ColourScheme.cyclic(m)
    for ct in enumerate_coloured(n, m):
        for d in ct.diagonals:
            ref = brute_coloured_flip(n, ct.diagonals, ct.colours, d, scheme.sigma)
            if ref is None:
                assert d not in flippable_diagonals(ct)
                continue
            out = coloured_flip(ct, d, scheme)
            assert (out.diagonals, out.colours) == ref


@pytest.mark.parametrize("n, m", [(n, m) for n in range(3, 10) for m in (1, 2, 3)
                                  if m < 3 or n <= 7])
def test_counts_against_enumeration(n, m):
    states = list(enumerate_coloured(n, m))
    assert len(states) == count_coloured(n, m)
    assert sum(is_frozen(ct) for ct in states) == count_frozen(n, m)


def test_frozen_counts_known_values():
    assert [count_frozen(n, 2) for n in range(4, 10)] == [4, 10, 28, 84, 264, 858]
    assert count_coloured(8, 2) == 8448 and count_coloured(9, 2) == 54912


def test_apply_sequence_reports_failing_step():
    two = ColourScheme.cyclic(2)
    ct = ColouredTriangulation(fan(6, 0), (0, 0, 0, 0))
    assert apply_sequence(ct, [(0, 2), (1, 3)], two) == ct
    with pytest.raises(SequenceError) as info:
        apply_sequence(ct, FlipSequence(((0, 3), (0, 3))), two)
    assert info.value.index == 1 and "unknown diagonal" in info.value.reason


def test_sequence_error_on_unflippable_step():
    two = ColourScheme.cyclic(2)
    ct = ColouredTriangulation(fan(6, 0), (0, 0, 1, 0))
    with pytest.raises(SequenceError) as info:
        apply_sequence(ct, [(0, 2), (0, 4)], two)
    assert info.value.index == 1 and "not flippable" in info.value.reason


def test_fan_path_greedy_walk():
    two = ColourScheme.cyclic(2)
    start = fan_path_start(6)
    assert start.colours == (0, 0, 1, 0)
    seq = greedy_sequence(start, two)
    states = trace_sequence(start, seq, two)
    assert len(states) == 4 and len(set(states)) == 4
    assert is_frozen(start) is False


def test_translate_examples():
    ct = ColouredTriangulation(SQUARE, (0, 0))
    assert translate_sequence(ct, [(0, 2)], 4).steps == ((0, 2),)
    ct = ColouredTriangulation(SQUARE, (1, 1))
    assert translate_sequence(ct, [(0, 2)], 4).steps == ((0, 2), (1, 3), (0, 2))
    assert translate_sequence(ct, [(0, 2)], 2).steps == ((0, 2),)
    with pytest.raises(ValueError):
        translate_sequence(ct, [(0, 2)], 3)


@st.composite
def walks(draw):
    n = draw(st.integers(4, 9))
    t = draw(st.sampled_from(triangulation_table(n).triangulations))
    colours = draw(st.lists(st.integers(0, 1), min_size=n - 2, max_size=n - 2))
    ct = ColouredTriangulation(t, tuple(colours))
    rng = random.Random(draw(st.integers(0, 10 ** 6)))
    two = ColourScheme.cyclic(2)
    steps, state = [], ct
    for _ in range(draw(st.integers(0, 12))):
        options = flippable_diagonals(state)
        if not options:
            break
        d = rng.choice(options)
        steps.append(d)
        state = coloured_flip(state, d, two)
    return ct, steps, state


@given(walks(), st.sampled_from([2, 4, 6]))
@settings(max_examples=80, deadline=None)
def test_translated_walk_lands_on_same_state(walk, m):
    ct, steps, end = walk
    seq = translate_sequence(ct, steps, m)
    assert apply_sequence(ct, seq, ColourScheme.cyclic(m)) == end


def test_odd_colour_count_returns_to_old_diagonal():
    # m - 1 flips of one quadrilateral land back on the original diagonal when m is odd
    three = ColourScheme.cyclic(3)
    ct = ColouredTriangulation(SQUARE, (1, 1))
    out = apply_sequence(ct, [(0, 2), (1, 3)], three)
    assert out.diagonals == ((0, 2),) and out.colours == (0, 0)


def test_cycle_structure():
    assert ColourScheme.cyclic(4).is_single_cycle()
    swap = ColourScheme(4, (1, 0, 3, 2))
    assert swap.cycles() == [(0, 1), (2, 3)]
    assert not is_single_cycle(swap.sigma)
    assert ColourScheme.parse("1,0,3,2", 4) == swap
    with pytest.raises(ValueError):
        ColourScheme.parse("0,0,1,2", 4)


def test_cycle_regions_preserved_by_flips():
    swap = ColourScheme(4, (1, 0, 3, 2))
    rng = random.Random(7)
    for _ in range(50):
        t = rng.choice(triangulation_table(8).triangulations)
        ct = ColouredTriangulation(t, tuple(rng.randrange(4) for _ in range(6)))
        before = sorted((k, len(v)) for k, v in cycle_regions(ct, swap).items())
        for _ in range(10):
            opts = flippable_diagonals(ct)
            if not opts:
                break
            ct, _, src = coloured_flip_with_map(ct, rng.choice(opts), swap)
        after = sorted((k, len(v)) for k, v in cycle_regions(ct, swap).items())
        assert before == after
        assert sorted(face_cycle_labels(ct, swap)) == sorted(
            k for k, size in before for _ in range(size))


def test_key_round_trip():
    ct = ColouredTriangulation(fan(7, 2), (0, 1, 1, 0, 1))
    assert ColouredTriangulation.from_key(ct.key) == ct
    assert ct.key == "7;0-2,2-4,2-5,2-6;01101"
    assert ColouredTriangulation.from_json(ct.to_json()) == ct

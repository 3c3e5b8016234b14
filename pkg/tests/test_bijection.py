"""The forward map, the arc-stretching inverse, and their traces."""

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ncpseq import (
    ArcDiagram,
    CatSeq,
    DiffSeq,
    GoverningState,
    StretchError,
    ValidationError,
    decompose_pieces,
    difference_sequence,
    enumerate_special,
    format_partition,
    forward,
    from_arcs,
    generate_all,
    governing_bounds,
    initial_diagram,
    inverse,
    inverse_trace,
    is_special,
    parse_partition,
    parse_sequence,
    set_value,
    stretch_step,
    to_arcs,
    validate_sequence,
)

PART_13 = "1,13|2,4,6,12|3|5|7,11|8,10|9"
LONG_SEQ = "1 1 1 4 1 2 1 4"
LONG_PART = "1,9,17|2,4,8|3|5,7|6|10,12,14,16|11|13|15"


@st.composite
def members(draw, n_max=14):
    """A uniform-ish member of S_n drawn through the governing machinery."""
    n = draw(st.integers(0, n_max))
    state = GoverningState.initial(n)
    while not state.is_complete:
        limit = governing_bounds(state)[state.cursor - 1]
        state = set_value(state, draw(st.integers(1, limit)))
    return state.sequence()


def test_difference_sequence_examples():
    assert difference_sequence(parse_partition(PART_13)).diffs == (
        12, 2, 0, 2, 0, 6, 4, 2, 0, 0, 0, 0, 0,
    )
    assert difference_sequence(parse_partition("1")).diffs == (0,)
    assert difference_sequence(parse_partition("1,3,5|2|4")).diffs == (2, 0, 2, 0, 0)


def test_difference_sequence_needs_special():
    with pytest.raises(ValidationError, match="crossing"):
        difference_sequence(parse_partition("1,3|2,4|5"))


def test_diffseq_invariants():
    DiffSeq((2, 0, 2, 0, 0))
    with pytest.raises(ValidationError):
        DiffSeq((2, 0, 2, 0))  # even length
    with pytest.raises(ValidationError):
        DiffSeq((2, 0, 0, 0, 0))  # four zeros where three belong
    with pytest.raises(ValidationError):
        DiffSeq((3, 0, 2, 0, 0, 0, 0))  # odd difference
    with pytest.raises(ValidationError):
        DiffSeq((2, 0, 4, 0, 0))  # 3 + 4 runs past the ground set


@pytest.mark.parametrize("n", range(8))
def test_diffseq_structure_over_all_special(n):
    for p in enumerate_special(n):
        d = difference_sequence(p)
        assert len(d.diffs) == 2 * n + 1
        assert sum(1 for x in d.diffs if x == 0) == n + 1
        assert all(x % 2 == 0 for x in d.diffs)


def test_forward_examples():
    assert forward(parse_partition(PART_13)).entries == (1, 2, 3, 1, 1, 6)
    assert forward(parse_partition("1,5|2,4|3")).entries == (1, 2)
    assert forward(parse_partition("1,3,5,7|2|4|6")).entries == (1, 1, 1)
    assert forward(parse_partition("1")).entries == ()


@pytest.mark.parametrize("n", range(8))
def test_forward_lands_in_s_n(n):
    for p in enumerate_special(n):
        assert validate_sequence(forward(p).entries)


def test_initial_diagram():
    assert initial_diagram(0) == ArcDiagram(1, ())
    assert initial_diagram(2).arcs == ((1, 3), (3, 5))
    d6 = initial_diagram(6)
    assert d6.point_count == 13 and len(d6.arcs) == 6
    assert is_special(from_arcs(d6))
    assert forward(from_arcs(d6)).entries == (1,) * 6


def test_stretch_replacement_list():
    d = stretch_step(initial_diagram(8), 1, 4)
    assert (1, 9) in d.arcs
    for gone in ((1, 3), (3, 5), (5, 7), (7, 9)):
        assert gone not in d.arcs
    for moved in ((2, 4), (4, 6), (6, 8)):
        assert moved in d.arcs


def test_stretch_identity_and_small_case():
    d = initial_diagram(3)
    assert stretch_step(d, 2, 1) == d
    assert stretch_step(initial_diagram(2), 1, 2).arcs == ((1, 5), (2, 4))
    assert format_partition(from_arcs(stretch_step(initial_diagram(2), 1, 2))) == (
        "1,5|2,4|3"
    )


def test_stretch_rejects_structural_misuse():
    d = initial_diagram(3)
    with pytest.raises(StretchError):
        stretch_step(d, 0, 1)
    with pytest.raises(StretchError):
        stretch_step(d, 4, 1)
    with pytest.raises(StretchError):
        stretch_step(d, 2, 0)
    with pytest.raises(StretchError):
        stretch_step(d, 2, 3)  # only one arc follows
    wide = stretch_step(d, 1, 2)
    with pytest.raises(StretchError):
        stretch_step(wide, 1, 2)  # first arc no longer has span two
    assert issubclass(StretchError, ValidationError)


@pytest.mark.parametrize("n", range(1, 6))
def test_stretch_legality_equals_governing_bound(n):
    """A stretch succeeds exactly when the governing bound allows the choice.

    Replays every member of S_n step by step, keeping the diagram and
    the bounds state in lockstep, and probes every candidate value at
    every step on both sides.
    """
    for s in generate_all(n):
        diagram = initial_diagram(n)
        state = GoverningState.initial(n)
        for i in range(1, n + 1):
            bound = governing_bounds(state)[state.cursor - 1]
            for probe in range(1, n + 3):
                try:
                    stretch_step(diagram, i, probe)
                    allowed = True
                except StretchError:
                    allowed = False
                assert allowed == (probe <= bound)
            v = s.entries[n - i]
            diagram = stretch_step(diagram, i, v)
            state = set_value(state, v)


def test_inverse_examples():
    assert format_partition(inverse(parse_sequence("1 2 3 1 1 6"))) == PART_13
    assert format_partition(inverse(CatSeq(()))) == "1"
    assert format_partition(inverse(parse_sequence(LONG_SEQ))) == LONG_PART


def test_seventeen_trace():
    trace = inverse_trace(parse_sequence(LONG_SEQ))
    diagrams = trace.diagrams()
    assert len(diagrams) == 9
    assert diagrams[5] == diagrams[6] == diagrams[7] == diagrams[8]
    assert len(trace.distinct_diagrams()) == 4
    assert format_partition(trace.final_partition()) == LONG_PART
    assert forward(trace.final_partition()).entries == (1, 1, 1, 4, 1, 2, 1, 4)


def test_trace_of_all_ones_never_moves():
    trace = inverse_trace(CatSeq((1, 1, 1, 1)))
    assert len(trace.distinct_diagrams()) == 1
    assert all(d == trace.start for d in trace.diagrams())


def test_trace_two_step_example():
    trace = inverse_trace(CatSeq((1, 2)))
    assert len(trace.steps) == 2
    assert trace.steps[0].arc_before != trace.steps[0].arc_after
    assert trace.steps[1].arc_before == trace.steps[1].arc_after
    assert len(trace.distinct_diagrams()) == 2


@pytest.mark.parametrize("n", range(7))
def test_step_is_noop_exactly_on_ones(n):
    for s in generate_all(n):
        trace = inverse_trace(s)
        previous = trace.start
        for i, step in enumerate(trace.steps, start=1):
            assert (step.diagram == previous) == (s.entries[n - i] == 1)
            previous = step.diagram


@pytest.mark.parametrize("n", range(7))
def test_intermediate_diagrams_stay_special_one_piece(n):
    for s in generate_all(n):
        for d in inverse_trace(s).diagrams():
            p = from_arcs(d)
            assert p.block_count == n + 1
            assert is_special(p)
            assert len(decompose_pieces(p)) == 1


def test_trace_text_serialization():
    trace = inverse_trace(parse_sequence(LONG_SEQ))
    lines = trace.to_text().splitlines()
    assert len(lines) == 8
    assert lines[0] == (
        "step 1: (1,3)->(1,9); shifted (3,5)->(2,4), (5,7)->(4,6), (7,9)->(6,8); "
        "1,9,11,13,15,17|2,4,6,8|3|5|7|10|12|14|16"
    )
    assert lines[1].endswith("; shifted -; 1,9,11,13,15,17|2,4,6,8|3|5|7|10|12|14|16")


def test_trace_json_serialization():
    trace = inverse_trace(CatSeq((1, 2)))
    records = json.loads(trace.to_json())
    assert [r["step"] for r in records] == [1, 2]
    assert records[0]["before"] == [1, 3]
    assert records[0]["after"] == [1, 5]
    assert records[0]["shifted"] == [[[3, 5], [2, 4]]]
    assert records[-1]["partition"] == format_partition(inverse(CatSeq((1, 2))))


@pytest.mark.parametrize("n", range(8))
def test_round_trip_partition_side(n):
    for p in enumerate_special(n):
        assert inverse(forward(p)) == p


@pytest.mark.parametrize("n", range(8))
def test_round_trip_sequence_side(n):
    for s in generate_all(n):
        assert forward(inverse(s)) == s


def test_inverse_image_equals_enumeration():
    """The inverse of S_n and the independent enumerator agree as sets."""
    for n in range(7):
        via_inverse = {format_partition(inverse(s)) for s in generate_all(n)}
        direct = {format_partition(p) for p in enumerate_special(n)}
        assert via_inverse == direct


@given(members())
@settings(max_examples=150, deadline=None)
def test_round_trip_beyond_exhaustive_range(s):
    assert forward(inverse(s)) == s

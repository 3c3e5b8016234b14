"""The bijection between special partitions and Catalan sequences.

Forward: under each element i of a special partition of [2n+1], write
the distance d_i to the next element of its block (0 when i closes the
block).  Exactly n of the d_i are nonzero and all of those are even;
listing them in position order, reversing, and halving gives a member
of S_n.

Inverse: start from the chain diagram with arcs (1,3),(3,5),..,
(2n-1,2n+1) and consume s from the right.  Step i stretches the i-th
arc in left-endpoint order from (p, p+2) to (p, p+2v), where
v = s_{n-i+1}, sliding the v-1 span-2 arcs chained after it one point
to the left.  After n steps the arcs spell out the partition whose
forward image is s.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from ncpseq.errors import StretchError, ValidationError
from ncpseq.partitions import (
    Arc,
    ArcDiagram,
    Partition,
    format_partition,
    from_arcs,
    special_violation,
)
from ncpseq.sequences import CatSeq


@dataclass(frozen=True)
class DiffSeq:
    """Gaps to the next block element, one per position of [2n+1]."""

    diffs: tuple[int, ...]

    def __post_init__(self) -> None:
        diffs = tuple(self.diffs)
        object.__setattr__(self, "diffs", diffs)
        if len(diffs) % 2 == 0:
            raise ValidationError("difference sequences have odd length 2n+1")
        n = len(diffs) // 2
        zeros = sum(1 for d in diffs if d == 0)
        if zeros != n + 1:
            raise ValidationError(f"{zeros} zeros where {n + 1} are required")
        for i, d in enumerate(diffs, start=1):
            if not isinstance(d, int) or isinstance(d, bool) or d < 0 or d % 2:
                raise ValidationError(f"d_{i} = {d!r} is not an even gap")
            if d and i + d > len(diffs):
                raise ValidationError(f"d_{i} = {d} points past the ground set")


def difference_sequence(p: Partition) -> DiffSeq:
    """Distance from each element to the next member of its block."""
    reason = special_violation(p)
    if reason is not None:
        raise ValidationError(f"difference sequence needs a special partition ({reason})")
    diffs = [0] * p.ground_size
    for block in p.blocks:
        for x, y in zip(block, block[1:]):
            diffs[x - 1] = y - x
    return DiffSeq(tuple(diffs))


def forward(p: Partition) -> CatSeq:
    """Map a special partition of [2n+1] to its sequence in S_n."""
    diffs = difference_sequence(p).diffs
    nonzero = [d for d in diffs if d]
    return CatSeq(tuple(d // 2 for d in reversed(nonzero)))


def initial_diagram(n: int) -> ArcDiagram:
    """Chain diagram on 2n+1 points: arcs (1,3),(3,5),..,(2n-1,2n+1)."""
    if n < 0:
        raise ValidationError("n must be >= 0")
    arcs = tuple((2 * i - 1, 2 * i + 1) for i in range(1, n + 1))
    return ArcDiagram(2 * n + 1, arcs)


def _stretch(
    d: ArcDiagram, i: int, v: int
) -> tuple[ArcDiagram, Arc, Arc, tuple[tuple[Arc, Arc], ...]]:
    if not isinstance(v, int) or isinstance(v, bool) or v < 1:
        raise StretchError(f"stretch width {v!r} is not a positive integer")
    if not 1 <= i <= len(d.arcs):
        raise StretchError(f"no arc {i} in a diagram with {len(d.arcs)} arcs")
    arcs = list(d.arcs)
    before = arcs[i - 1]
    if v == 1:
        return d, before, before, ()
    p = before[0]
    if before[1] != p + 2:
        raise StretchError(f"arc {i} spans {before}, expected ({p},{p + 2})")
    if i - 1 + v > len(arcs):
        raise StretchError(f"only {len(arcs) - i} arcs follow arc {i}, need {v - 1}")
    for k in range(1, v):
        want = (p + 2 * k, p + 2 * k + 2)
        if arcs[i - 1 + k] != want:
            raise StretchError(f"arc {i + k} is {arcs[i - 1 + k]}, expected {want}")
    after = (p, p + 2 * v)
    arcs[i - 1] = after
    shifted = []
    for k in range(1, v):
        q = p + 2 * k
        arcs[i - 1 + k] = (q - 1, q + 1)
        shifted.append(((q, q + 2), (q - 1, q + 1)))
    return ArcDiagram(d.point_count, tuple(arcs)), before, after, tuple(shifted)


def stretch_step(d: ArcDiagram, i: int, v: int) -> ArcDiagram:
    """Stretch the i-th arc (left-endpoint order) across v - 1 chained arcs.

    The i-th arc must look like (p, p+2) and be followed, in that same
    order, by (p+2, p+4), .., (p+2(v-1), p+2v).  It becomes (p, p+2v)
    and each covered arc slides one point left, which preserves the
    block count.  v = 1 changes nothing.

    Raises StretchError when the required shape is absent; during the
    inverse construction that happens exactly when v exceeds the
    governing bound for the step.
    """
    return _stretch(d, i, v)[0]


@dataclass(frozen=True)
class TraceStep:
    """One stretch: which arc grew, what slid underneath, the result."""

    index: int
    arc_before: Arc
    arc_after: Arc
    shifted: tuple[tuple[Arc, Arc], ...]
    diagram: ArcDiagram


@dataclass(frozen=True)
class ConstructionTrace:
    """The inverse construction, one diagram per step plus the start."""

    start: ArcDiagram
    steps: tuple[TraceStep, ...]

    def diagrams(self) -> tuple[ArcDiagram, ...]:
        """D_1 .. D_{n+1}: the start diagram, then one result per step."""
        return (self.start,) + tuple(step.diagram for step in self.steps)

    def distinct_diagrams(self) -> tuple[ArcDiagram, ...]:
        """Stages in first-appearance order; repeats of the previous stage drop out."""
        out = [self.start]
        for step in self.steps:
            if step.diagram != out[-1]:
                out.append(step.diagram)
        return tuple(out)

    def final_partition(self) -> Partition:
        return from_arcs(self.diagrams()[-1])

    def to_text(self) -> str:
        """One line per step: index, stretched arc, slid arcs, resulting partition."""
        lines = []
        for st in self.steps:
            if st.shifted:
                moved = ", ".join(
                    f"({a[0]},{a[1]})->({b[0]},{b[1]})" for a, b in st.shifted
                )
            else:
                moved = "-"
            lines.append(
                f"step {st.index}: ({st.arc_before[0]},{st.arc_before[1]})"
                f"->({st.arc_after[0]},{st.arc_after[1]}); shifted {moved}; "
                f"{format_partition(from_arcs(st.diagram))}"
            )
        return "\n".join(lines)

    def to_json(self) -> str:
        """The same step records as a JSON array."""
        records = [
            {
                "step": st.index,
                "before": list(st.arc_before),
                "after": list(st.arc_after),
                "shifted": [[list(a), list(b)] for a, b in st.shifted],
                "partition": format_partition(from_arcs(st.diagram)),
            }
            for st in self.steps
        ]
        return json.dumps(records)


def inverse_trace(s: CatSeq) -> ConstructionTrace:
    """Run the arc-stretching construction for s, recording every step."""
    n = len(s.entries)
    diagram = initial_diagram(n)
    start = diagram
    steps = []
    for i in range(1, n + 1):
        diagram, before, after, shifted = _stretch(diagram, i, s.entries[n - i])
        steps.append(TraceStep(i, before, after, shifted, diagram))
    return ConstructionTrace(start, tuple(steps))


def inverse(s: CatSeq) -> Partition:
    """The special partition whose forward image is s."""
    n = len(s.entries)
    diagram = initial_diagram(n)
    for i in range(1, n + 1):
        diagram = stretch_step(diagram, i, s.entries[n - i])
    return from_arcs(diagram)

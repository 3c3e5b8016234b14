"""Catalan sequences and the right-to-left construction generating them.

S_n holds the integer sequences s_1..s_n satisfying

  (i)  1 <= s_i <= i, and
  (ii) s_i = j implies s_{i-r} <= j - r for 1 <= r <= j - 1,

and |S_n| is the n-th Catalan number.  Members are built by fixing
positions n, n-1, .., 1 in that order.  Alongside the values, the
construction keeps a bounds sequence g: at a still-unset position q,

  g_q = min(q, min over set positions p > q of s_p - (p - q)),

where terms that drop below 1 impose nothing; at a set position, g_q
is the chosen value.  Every choice 1 <= m <= g_q at the cursor keeps
the run completable, and distinct choice runs give distinct sequences.

Text form: space-separated decimal integers; the empty string is the
unique n = 0 sequence.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from ncpseq._backend import kernels
from ncpseq.errors import ParseError, ValidationError


def sequence_violation(entries: Sequence[int]) -> str | None:
    """Name the first broken membership condition, or None if s is in S_n."""
    for i, v in enumerate(entries, start=1):
        if not isinstance(v, int) or isinstance(v, bool):
            return f"entry {i} is not an integer"
        if not 1 <= v <= i:
            return f"s_{i} = {v} outside 1..{i}"
    for i, v in enumerate(entries, start=1):
        for r in range(1, v):
            if entries[i - r - 1] > v - r:
                return (
                    f"s_{i} = {v} forces s_{i - r} <= {v - r}, "
                    f"found {entries[i - r - 1]}"
                )
    return None


def validate_sequence(entries: Sequence[int]) -> bool:
    """True iff conditions (i) and (ii) hold at every index."""
    return sequence_violation(entries) is None


@dataclass(frozen=True)
class CatSeq:
    """A member of S_n; construction rejects anything else."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        entries = tuple(self.entries)
        object.__setattr__(self, "entries", entries)
        reason = sequence_violation(entries)
        if reason is not None:
            raise ValidationError(reason)

    def __str__(self) -> str:
        return format_sequence(self)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


def parse_sequence(text: str) -> CatSeq:
    """Parse space-separated entries; the empty string is the n=0 sequence.

    Raises ParseError on non-integer tokens and ValidationError when
    the entries fall outside S_n.
    """
    entries = []
    for token in text.split():
        if not token.isdigit():
            raise ParseError(f"expected a positive integer, got {token!r}")
        entries.append(int(token))
    return CatSeq(tuple(entries))


def format_sequence(s: CatSeq) -> str:
    """Canonical text: entries joined by single spaces."""
    return " ".join(str(v) for v in s.entries)


@dataclass(frozen=True)
class GoverningState:
    """Partially built sequence plus per-position bounds, cursor counting down.

    values holds 1 at unset positions (everything at or before the
    cursor); bounds holds the largest legal choice at unset positions
    and the chosen value at set ones.
    """

    values: tuple[int, ...]
    bounds: tuple[int, ...]
    cursor: int

    def __post_init__(self) -> None:
        values = tuple(self.values)
        bounds = tuple(self.bounds)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "bounds", bounds)
        if len(bounds) != len(values) or not 0 <= self.cursor <= len(values):
            raise ValidationError("state lengths and cursor do not agree")
        if any(v != 1 for v in values[: self.cursor]):
            raise ValidationError("unset positions must hold the placeholder 1")

    @classmethod
    def initial(cls, n: int) -> GoverningState:
        """All-ones values, bounds 1..n, cursor at position n."""
        if n < 0:
            raise ValidationError("n must be >= 0")
        return cls((1,) * n, tuple(range(1, n + 1)), n)

    @property
    def length(self) -> int:
        return len(self.values)

    @property
    def is_complete(self) -> bool:
        return self.cursor == 0

    def sequence(self) -> CatSeq:
        """The finished sequence; only complete states have one."""
        if not self.is_complete:
            raise ValidationError(f"{self.cursor} positions are still unset")
        return CatSeq(self.values)


def governing_bounds(state: GoverningState) -> tuple[int, ...]:
    """The bounds sequence g; at the cursor it caps the next choice."""
    return state.bounds


def set_value(state: GoverningState, m: int) -> GoverningState:
    """Fix the cursor position to m and tighten the bounds below it.

    After position q takes m, an earlier position p can afford at most
    m - (q - p); bounds that were already smaller stay.  Raises
    ValidationError when the state is complete or m is outside 1..g_q.
    """
    if state.is_complete:
        raise ValidationError("every position is already set")
    q = state.cursor
    limit = state.bounds[q - 1]
    if not isinstance(m, int) or isinstance(m, bool) or not 1 <= m <= limit:
        raise ValidationError(f"m = {m} outside 1..{limit} at position {q}")
    values = list(state.values)
    bounds = list(state.bounds)
    values[q - 1] = m
    bounds[q - 1] = m
    for p in range(max(1, q - m + 1), q):
        cap = m - (q - p)
        if cap < bounds[p - 1]:
            bounds[p - 1] = cap
    return GoverningState(tuple(values), tuple(bounds), q - 1)


def bounds_from_scratch(values: Sequence[int], cursor: int) -> tuple[int, ...]:
    """Bounds recomputed from their definition, ignoring any running state.

    Reference used to cross-check the incremental updates in set_value.
    """
    n = len(values)
    out = []
    for q in range(1, n + 1):
        if q > cursor:
            out.append(values[q - 1])
            continue
        g = q
        for p in range(cursor + 1, n + 1):
            cap = values[p - 1] - (p - q)
            if 1 <= cap < g:
                g = cap
        out.append(g)
    return tuple(out)


def generate_all(n: int) -> Iterator[CatSeq]:
    """Yield every member of S_n, depth-first with smaller choices first."""
    if n < 0:
        raise ValidationError("n must be >= 0")
    for entries in kernels.catalan_sequences(n):
        yield CatSeq(entries)


def count_all(n: int) -> int:
    """|S_n|, counted by the same walk that backs generate_all."""
    if n < 0:
        raise ValidationError("n must be >= 0")
    return kernels.count_catalan_sequences(n)

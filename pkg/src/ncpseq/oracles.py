"""Independent enumerators and executable checks for the structural claims.

Everything here counts or verifies by direct search.  The enumerators
build partitions element by element and never consult the bijection,
so they can referee it; the checks re-derive each structural fact over
a full enumeration range and report the first counterexample in
canonical text, smallest first.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Iterator

from ncpseq._backend import kernels
from ncpseq.errors import ValidationError
from ncpseq.partitions import (
    Partition,
    decompose_pieces,
    format_partition,
    is_special,
    subpartition,
)


def catalan(n: int) -> int:
    """The n-th Catalan number binom(2n, n) / (n + 1), exact."""
    if n < 0:
        raise ValidationError("n must be >= 0")
    return math.comb(2 * n, n) // (n + 1)


def enumerate_special(n: int) -> Iterator[Partition]:
    """Every special partition of [2n+1], by canonical text order."""
    if n < 0:
        raise ValidationError("n must be >= 0")
    parts = [Partition(2 * n + 1, blocks) for blocks in kernels.special_partitions(n)]
    parts.sort(key=format_partition)
    return iter(parts)


def count_special(n: int) -> int:
    """Number of special partitions of [2n+1], without materializing them."""
    if n < 0:
        raise ValidationError("n must be >= 0")
    return kernels.count_special_partitions(n)


def enumerate_ssp(m: int) -> Iterator[Partition]:
    """Every semi-special partition of [m], by canonical text order."""
    if m < 1:
        raise ValidationError("m must be >= 1")
    parts = [Partition(m, blocks) for blocks in kernels.ssp_partitions(m)]
    parts.sort(key=format_partition)
    return iter(parts)


def count_ssp(m: int) -> int:
    """Number of semi-special partitions of [m]."""
    if m < 1:
        raise ValidationError("m must be >= 1")
    return kernels.count_ssp_partitions(m)


def min_ssp_blocks(m: int) -> int:
    """Minimum block count over all semi-special partitions of [m].

    Found by branch-and-bound over the enumeration walk; the answer is
    floor(m/2) + 1, and the checks compare against exactly that.
    """
    if m < 1:
        raise ValidationError("m must be >= 1")
    return kernels.ssp_min_blocks(m)


@dataclass(frozen=True)
class Composition:
    """An ordered list of positive parts; n is their sum."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise ValidationError("a composition needs at least one part")
        for x in parts:
            if not isinstance(x, int) or isinstance(x, bool) or x < 1:
                raise ValidationError(f"part {x!r} is not a positive integer")

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.parts)

    @property
    def total(self) -> int:
        return sum(self.parts)


def compositions(n: int) -> Iterator[Composition]:
    """All 2^(n-1) compositions of n, first parts ascending."""
    if n < 1:
        raise ValidationError("compositions need n >= 1")

    def rec(remaining: int, prefix: list[int]) -> Iterator[Composition]:
        if remaining == 0:
            yield Composition(tuple(prefix))
            return
        for part in range(1, remaining + 1):
            prefix.append(part)
            yield from rec(remaining - part, prefix)
            prefix.pop()

    return rec(n, [])


def check_floor_sum(c: Composition) -> bool:
    """True iff sum of floor(x_j / 2) plus the part count reaches floor(n/2) + 1."""
    n = c.total
    return sum(x // 2 for x in c.parts) + len(c.parts) >= n // 2 + 1


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one exhaustive claim check."""

    claim: str
    range_checked: str
    passed: bool
    count_checked: int
    elapsed_ms: float
    counterexample: str | None = None

    def __post_init__(self) -> None:
        if not self.passed and self.counterexample is None:
            raise ValidationError("failing reports must carry a counterexample")

    def to_dict(self) -> dict:
        """JSON layout: claim, range, status, counterexample?, count_checked, elapsed_ms."""
        out: dict = {
            "claim": self.claim,
            "range": self.range_checked,
            "status": "pass" if self.passed else "fail",
        }
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        out["count_checked"] = self.count_checked
        out["elapsed_ms"] = self.elapsed_ms
        return out


def _structure_violation(p: Partition, top: int) -> str | None:
    if p.blocks[0][-1] != top:
        return f"1 and {top} in different blocks"
    for b in p.blocks:
        for x, y in zip(b, b[1:]):
            if (y - x) % 2:
                return f"odd gap between {x} and {y}"
    for bi, b in enumerate(p.blocks, start=1):
        for gi in range(1, len(b)):
            if not is_special(subpartition(p, bi, gi)):
                return f"subpartition at block {bi}, gap {gi} is not special"
    if len(decompose_pieces(p)) != 1:
        return "more than one piece"
    return None


def check_special_structure(n: int) -> CheckReport:
    """Re-check the structural facts over every special partition of [2n+1].

    For each one: 1 and 2n+1 share a block; consecutive elements of a
    block differ by an even amount; every subpartition is special; the
    piece decomposition is a single piece.
    """
    started = time.perf_counter()
    checked = 0
    failure = None
    for p in enumerate_special(n):
        checked += 1
        reason = _structure_violation(p, 2 * n + 1)
        if reason is not None:
            failure = f"{format_partition(p)}: {reason}"
            break
    elapsed = round((time.perf_counter() - started) * 1000.0, 3)
    return CheckReport(
        "special-structure", f"n={n}", failure is None, checked, elapsed, failure
    )


def check_max_ground(b: int) -> bool:
    """Largest ground set carrying an SSP with at most b+1 blocks is [2b+1].

    Confirms that [2b+1] reaches block count b+1 exactly and that
    neither [2b+2] nor [2b+3] admits any SSP with b+1 blocks or fewer.
    """
    if b < 0:
        raise ValidationError("b must be >= 0")
    if min_ssp_blocks(2 * b + 1) != b + 1:
        return False
    return all(min_ssp_blocks(2 * b + 1 + extra) > b + 1 for extra in (1, 2))

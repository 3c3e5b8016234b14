"""Set partitions of {1..m}, their arc diagrams, and piece structure.

A partition is stored as blocks sorted by minimum element, each block
ascending; the canonical text joins elements with "," and blocks with
"|", as in "1,5|2,4|3".  A partition is non-crossing when there are no
positions a < b < c < d with a, c in one block and b, d in another.

Two restricted families recur throughout the package:

* semi-special: non-crossing, and no block contains two consecutive
  integers;
* special: semi-special on an odd ground set 2n+1 with exactly n+1
  blocks.  Special partitions of [2n+1] are counted by the Catalan
  number C_n.

The arc diagram of a non-crossing partition joins each pair of
consecutive elements of a block by an arc over the number line.  In a
valid diagram left endpoints are pairwise distinct, right endpoints are
pairwise distinct, and no two arcs cross (sharing an endpoint is fine);
blocks are exactly the maximal chains of arcs linked by shared
endpoints.
"""

from __future__ import annotations

from dataclasses import dataclass

from ncpseq.errors import ParseError, ValidationError

Block = tuple[int, ...]
Arc = tuple[int, int]

BLOCK_SEP = "|"
ELEMENT_SEP = ","


@dataclass(frozen=True)
class Partition:
    """A set partition of {1..ground_size} in canonical block order."""

    ground_size: int
    blocks: tuple[Block, ...]

    def __post_init__(self) -> None:
        norm = tuple(sorted(tuple(sorted(b)) for b in self.blocks))
        object.__setattr__(self, "blocks", norm)
        _check_partition(self.ground_size, norm)

    def __str__(self) -> str:
        return format_partition(self)

    @property
    def block_count(self) -> int:
        return len(self.blocks)


def _check_partition(m: int, blocks: tuple[Block, ...]) -> None:
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise ValidationError("ground size must be a positive integer")
    if not blocks:
        raise ValidationError("a partition needs at least one block")
    seen: set[int] = set()
    for block in blocks:
        if not block:
            raise ValidationError("empty block")
        for x in block:
            if not isinstance(x, int) or isinstance(x, bool):
                raise ValidationError(f"element {x!r} is not an integer")
            if not 1 <= x <= m:
                raise ValidationError(f"element {x} outside 1..{m}")
            if x in seen:
                raise ValidationError(f"duplicate element {x}")
            seen.add(x)
    if len(seen) != m:
        missing = min(set(range(1, m + 1)) - seen)
        raise ValidationError(f"element {missing} missing from the partition")


def parse_partition(text: str) -> Partition:
    """Parse canonical block text like "1,5|2,4|3"; spaces are tolerated.

    Raises ParseError when the text breaks the grammar and
    ValidationError when the parsed blocks are not a partition of
    {1..max element}.
    """
    blocks = []
    for chunk in text.split(BLOCK_SEP):
        elems = []
        for token in chunk.split(ELEMENT_SEP):
            token = token.strip()
            if not token.isdigit():
                raise ParseError(f"expected a positive integer, got {token!r}")
            value = int(token)
            if value == 0:
                raise ParseError("elements are 1-based, got 0")
            elems.append(value)
        blocks.append(tuple(elems))
    ground = max(max(b) for b in blocks)
    return Partition(ground, tuple(blocks))


def format_partition(p: Partition) -> str:
    """Canonical text: blocks joined by "|", elements by ",", no spaces."""
    return BLOCK_SEP.join(ELEMENT_SEP.join(str(x) for x in b) for b in p.blocks)


def is_noncrossing(p: Partition) -> bool:
    """True iff no a < b < c < d puts a, c in one block and b, d in another.

    Single left-to-right scan: a block must sit on top of the stack of
    open blocks whenever one of its later elements arrives, otherwise
    some still-open block weaves through it.
    """
    owner = [0] * (p.ground_size + 1)
    for idx, block in enumerate(p.blocks):
        for x in block:
            owner[x] = idx
    first = [b[0] for b in p.blocks]
    last = [b[-1] for b in p.blocks]
    stack: list[int] = []
    for e in range(1, p.ground_size + 1):
        b = owner[e]
        if e == first[b]:
            stack.append(b)
        elif stack[-1] != b:
            return False
        if e == last[b]:
            stack.pop()
    return True


def _adjacent_pair(p: Partition) -> tuple[int, int] | None:
    for block in p.blocks:
        for x, y in zip(block, block[1:]):
            if y == x + 1:
                return x, y
    return None


def is_semi_special(p: Partition) -> bool:
    """Non-crossing with no block containing both i and i+1."""
    return is_noncrossing(p) and _adjacent_pair(p) is None


def special_violation(p: Partition) -> str | None:
    """Name the first special-partition condition p breaks, or None.

    Checks in definition order: odd ground size 2n+1, exactly n+1
    blocks, non-crossing, no two consecutive integers in a block.
    """
    if p.ground_size % 2 == 0:
        return f"even ground size {p.ground_size}"
    want = (p.ground_size + 1) // 2
    if len(p.blocks) != want:
        return f"{len(p.blocks)} blocks where {want} are required"
    if not is_noncrossing(p):
        return "crossing blocks"
    adjacent = _adjacent_pair(p)
    if adjacent is not None:
        return f"consecutive integers {adjacent[0]},{adjacent[1]} in one block"
    return None


def is_special(p: Partition) -> bool:
    """Non-crossing partition of [2n+1] into n+1 blocks, no consecutive pair."""
    return special_violation(p) is None


@dataclass(frozen=True)
class PieceList:
    """Blocks of a partition grouped into contiguous-interval pieces."""

    pieces: tuple[tuple[Block, ...], ...]

    def __post_init__(self) -> None:
        norm = tuple(tuple(tuple(b) for b in piece) for piece in self.pieces)
        object.__setattr__(self, "pieces", norm)
        pos = 1
        for piece in norm:
            if not piece or piece[0][0] != pos:
                raise ValidationError("piece supports must chain contiguously from 1")
            pos = max(b[-1] for b in piece) + 1

    def __len__(self) -> int:
        return len(self.pieces)

    def __iter__(self):
        return iter(self.pieces)

    @property
    def supports(self) -> tuple[tuple[int, int], ...]:
        """The (min, max) interval covered by each piece, in order."""
        return tuple(
            (piece[0][0], max(b[-1] for b in piece)) for piece in self.pieces
        )


def decompose_pieces(p: Partition) -> PieceList:
    """Split p into pieces: minimal block runs covering contiguous intervals.

    Scanning blocks by minimum element, a piece opens at the first
    uncovered element and absorbs every block starting under the span
    of its opening block; non-crossing guarantees those blocks also end
    inside that span, so each piece covers an interval with no holes.

    Raises ValidationError for crossing partitions, where the notion is
    not defined.
    """
    if not is_noncrossing(p):
        raise ValidationError("pieces are only defined for non-crossing partitions")
    blocks = p.blocks
    pieces = []
    i = 0
    while i < len(blocks):
        end = blocks[i][-1]
        j = i + 1
        while j < len(blocks) and blocks[j][0] < end:
            j += 1
        pieces.append(blocks[i:j])
        i = j
    return PieceList(tuple(pieces))


def subpartition(p: Partition, block_index: int, gap_index: int) -> Partition:
    """Partition trapped between consecutive elements of one block, relabeled.

    block_index picks a block of p (1-based, canonical order) and
    gap_index the gap between its gap_index-th and following element.
    The elements strictly between them form complete blocks of p; they
    are shifted down to start at 1.

    Raises ValidationError unless p is special and both indices address
    a real gap.
    """
    reason = special_violation(p)
    if reason is not None:
        raise ValidationError(f"subpartitions need a special partition ({reason})")
    if not 1 <= block_index <= len(p.blocks):
        raise ValidationError(f"block index {block_index} out of range")
    block = p.blocks[block_index - 1]
    if len(block) < 2:
        raise ValidationError("the chosen block has no gap")
    if not 1 <= gap_index < len(block):
        raise ValidationError(f"gap index {gap_index} out of range")
    lo, hi = block[gap_index - 1], block[gap_index]
    inner = tuple(
        tuple(x - lo for x in b) for b in p.blocks if lo < b[0] < hi
    )
    return Partition(hi - lo - 1, inner)


@dataclass(frozen=True)
class ArcDiagram:
    """Arcs (left, right) over points 1..point_count, sorted by left end."""

    point_count: int
    arcs: tuple[Arc, ...]

    def __post_init__(self) -> None:
        norm = tuple(sorted(tuple(a) for a in self.arcs))
        object.__setattr__(self, "arcs", norm)
        _check_arcs(self.point_count, norm)


def _check_arcs(m: int, arcs: tuple[Arc, ...]) -> None:
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise ValidationError("point count must be a positive integer")
    ends: dict[int, int] = {}
    lefts: set[int] = set()
    for arc in arcs:
        if len(arc) != 2:
            raise ValidationError(f"arc {arc!r} is not a pair")
        l, r = arc
        ok = isinstance(l, int) and isinstance(r, int)
        if not ok or not 1 <= l < r <= m:
            raise ValidationError(f"arc ({l},{r}) outside 1 <= left < right <= {m}")
        if l in lefts:
            raise ValidationError(f"two arcs share left endpoint {l}")
        if r in ends:
            raise ValidationError(f"two arcs share right endpoint {r}")
        lefts.add(l)
        ends[r] = l
    stack: list[int] = []
    for x in range(1, m + 1):
        if x in ends:
            if stack[-1] != ends[x]:
                raise ValidationError("crossing arcs")
            stack.pop()
        if x in lefts:
            stack.append(x)


def to_arcs(p: Partition) -> ArcDiagram:
    """Join consecutive elements of every block; arc count = m - blocks.

    Raises ValidationError for crossing partitions, whose arcs would
    cross.
    """
    if not is_noncrossing(p):
        raise ValidationError("cannot draw arcs for a crossing partition")
    arcs = tuple((x, y) for b in p.blocks for x, y in zip(b, b[1:]))
    return ArcDiagram(p.ground_size, arcs)


def from_arcs(d: ArcDiagram) -> Partition:
    """Blocks are the maximal chains of points linked by arcs."""
    succ = dict(d.arcs)
    right_ends = {r for _, r in d.arcs}
    blocks = []
    for start in range(1, d.point_count + 1):
        if start in right_ends:
            continue
        chain = [start]
        while chain[-1] in succ:
            chain.append(succ[chain[-1]])
        blocks.append(tuple(chain))
    return Partition(d.point_count, tuple(blocks))


def arc_nesting_depths(d: ArcDiagram) -> dict[Arc, int]:
    """Number of arcs strictly containing each arc.

    (c,d) lies inside (a,b) exactly when a < c and d < b, so arcs that
    share an endpoint never nest.
    """
    return {
        (l1, r1): sum(1 for l2, r2 in d.arcs if l2 < l1 and r1 < r2)
        for l1, r1 in d.arcs
    }

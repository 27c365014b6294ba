"""Two-row set partitions in canonical form.

A partition has k upper points and l lower points, decomposed into blocks.
It is stored as the tuple of counts plus a block-label vector of length
k + l (upper row first, then lower row): two points belong to the same
block exactly when their labels are equal.

Every public constructor relabels to the canonical form, where labels read
1, 2, 3, ... in first-occurrence order. Equal canonical form is therefore
the same thing as partition equivalence, so values can be compared with
`==` and stored in sets and dicts directly.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence


def canonical_labels(labels: Iterable[int], table: Mapping | None = None) -> tuple[int, ...]:
    """Relabel a sequence so labels read 1, 2, 3, ... in first-occurrence order.

    A single left-to-right pass over an associative table; at most two table
    accesses per element. A custom mutable mapping may be supplied as
    `table`, e.g. to count accesses or to continue an existing numbering.
    """
    if table is None:
        table = {}
    nxt = len(table) + 1
    out = []
    append = out.append
    get = table.get
    for x in labels:
        y = get(x)
        if y is None:
            table[x] = y = nxt
            nxt += 1
        append(y)
    return tuple(out)


class Partition:
    """A two-row set partition, canonical and immutable.

    Built from two label sequences, one per row. Input labels may be any
    non-negative integers; they are relabeled on construction:

    >>> Partition([2, 4], [4, 99])
    Partition([1, 2], [2, 3])
    """

    __slots__ = ("upper_count", "lower_count", "blocks", "_hash")

    def __init__(self, upper: Sequence[int] = (), lower: Sequence[int] = ()):
        upper = tuple(upper)
        lower = tuple(lower)
        for row in (upper, lower):
            for x in row:
                if not isinstance(x, int) or x < 0:
                    raise ValueError(f"labels must be non-negative integers, got {x!r}")
        self.upper_count = len(upper)
        self.lower_count = len(lower)
        self.blocks = canonical_labels(upper + lower)
        self._hash = hash((self.upper_count, self.lower_count, self.blocks))

    @classmethod
    def _from_raw(cls, upper_count: int, lower_count: int, blocks: tuple[int, ...]) -> "Partition":
        # Internal: trusts `blocks` as given. Used for vectors that are
        # already canonical and for label-shifted intermediates.
        p = object.__new__(cls)
        p.upper_count = upper_count
        p.lower_count = lower_count
        p.blocks = blocks
        p._hash = hash((upper_count, lower_count, blocks))
        return p

    @property
    def upper(self) -> tuple[int, ...]:
        """Labels of the upper row."""
        return self.blocks[: self.upper_count]

    @property
    def lower(self) -> tuple[int, ...]:
        """Labels of the lower row."""
        return self.blocks[self.upper_count :]

    @property
    def size(self) -> int:
        """Total number of points (upper plus lower)."""
        return self.upper_count + self.lower_count

    @property
    def num_blocks(self) -> int:
        return len(set(self.blocks))

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return (
            self.upper_count == other.upper_count
            and self.lower_count == other.lower_count
            and self.blocks == other.blocks
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Partition({list(self.upper)}, {list(self.lower)})"

    def __str__(self):
        up = ",".join(map(str, self.upper))
        lo = ",".join(map(str, self.lower))
        return f"{up}|{lo}"


#: The one-upper/one-lower single-block partition.
IDENTITY = Partition((1,), (1,))

#: The no-upper/two-lower single-block partition.
PAIR = Partition((), (1, 1))


def normalize(p: Partition) -> Partition:
    """Return the canonical representative of `p`.

    Public values are already canonical; this matters for the label-shifted
    intermediates produced by :func:`make_disjoint`.
    """
    return Partition._from_raw(p.upper_count, p.lower_count, canonical_labels(p.blocks))


def equivalent(p: Partition, q: Partition) -> bool:
    """True when `p` and `q` differ only by a relabeling of their blocks."""
    return (
        p.upper_count == q.upper_count
        and p.lower_count == q.lower_count
        and canonical_labels(p.blocks) == canonical_labels(q.blocks)
    )


def make_disjoint(p: Partition, q: Partition) -> Partition:
    """Shift every label of `p` above the labels of `q`.

    The result is equivalent to `p` and shares no label with `q`. The shift
    is 1 + max label of `q`, or 1 when `q` has no points. Note the result is
    deliberately not renormalized; it is the standard preparation step
    before label arithmetic on a pair of partitions.
    """
    t = max(q.blocks) + 1 if q.blocks else 1
    return Partition._from_raw(
        p.upper_count, p.lower_count, tuple(x + t for x in p.blocks)
    )


def kernel_partition(values: Sequence[int]) -> Partition:
    """Partition with no upper points grouping equal entries of `values`.

    Lower points s and t share a block exactly when values[s] == values[t].
    """
    return Partition((), tuple(values))


def canonical_sort_key(p: Partition):
    """Deterministic ordering used for emitted partition lists."""
    return (p.size, p.upper_count, p.blocks)

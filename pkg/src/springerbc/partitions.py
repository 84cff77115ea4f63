"""Integer partitions and the exact part-level operations used everywhere else.

A partition is a weakly decreasing tuple of positive integers; the empty
tuple is the unique partition of 0.  Indexing beyond the length reads as 0
(use ``part_at``).  All operations return new, canonically sorted values.
"""

from collections import Counter

from .errors import NegativePart, OldsNotPresent


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    The constructor accepts any iterable of nonnegative integers, sorts it
    descending and drops zeros, so every stored value is canonical.
    """

    def __new__(cls, parts=()):
        parts = sorted((int(x) for x in parts), reverse=True)
        while parts and parts[-1] == 0:
            parts.pop()
        if parts and parts[-1] < 0:
            raise NegativePart(f"negative part in {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self):
        return sum(self)

    @property
    def length(self):
        return len(self)

    def part_at(self, i):
        """1-indexed part, 0 beyond the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def __repr__(self):
        return f"Partition({list(self)})"

    def __str__(self):
        return partition_to_text(self)


EMPTY = Partition()


def partition_to_text(p):
    """Bracketed comma-separated text form, "[]" for the empty partition."""
    return "[" + ",".join(str(x) for x in p) + "]"


def partition_from_text(text):
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ValueError(f"partition text must look like [3,1], got {text!r}")
    body = text[1:-1].strip()
    if not body:
        return EMPTY
    parts = [int(tok) for tok in body.split(",")]
    if any(x < 1 for x in parts):
        raise ValueError(f"partition parts must be positive: {text!r}")
    if parts != sorted(parts, reverse=True):
        raise ValueError(f"partition parts must be weakly decreasing: {text!r}")
    return Partition(parts)


def multiplicity(p, r, mode="eq"):
    """Number of parts of p equal to r, or in the given relation to r.

    ``mode`` is one of "eq", "geq", "gt", "leq", "lt".
    """
    if r < 1:
        raise ValueError(f"part value must be >= 1, got {r}")
    if mode == "eq":
        return sum(1 for x in p if x == r)
    if mode == "geq":
        return sum(1 for x in p if x >= r)
    if mode == "gt":
        return sum(1 for x in p if x > r)
    if mode == "leq":
        return sum(1 for x in p if x <= r)
    if mode == "lt":
        return sum(1 for x in p if x < r)
    raise ValueError(f"unknown multiplicity mode {mode!r}")


def underlying_set(p):
    """Distinct part values, as a tuple in decreasing order."""
    return tuple(sorted(set(p), reverse=True))


def union_partitions(a, b):
    """Multiset union: multiplicities add."""
    return Partition(tuple(a) + tuple(b))


def sum_partitions(a, b):
    """Componentwise sum, shorter argument padded with zeros."""
    n = max(len(a), len(b))
    return Partition(a.part_at(i) + b.part_at(i) for i in range(1, n + 1))


def substitute(p, olds, news):
    """Replace the multiset ``olds`` of parts by ``news`` (zeros dropped)."""
    olds = list(olds)
    news = list(news)
    if len(olds) != len(news):
        raise ValueError("olds and news must have the same cardinality")
    if any(x < 0 for x in news):
        raise NegativePart(f"substitute target below zero: {news}")
    have = Counter(p)
    need = Counter(olds)
    if any(have[k] < v for k, v in need.items()):
        raise OldsNotPresent(f"{sorted(olds, reverse=True)} not contained in {p}")
    have.subtract(need)
    rest = [x for x, m in have.items() for _ in range(m)]
    return Partition(rest + news)


def shift(p, direction, a, b):
    """Add or subtract 1 on the parts indexed a..b (1-based, inclusive).

    ``direction`` is "up" or "down".  An empty interval (b < a) is the
    identity.  Up-shifts may extend the partition with new parts equal
    to 1; down-shifts must stay within the current length and may turn
    parts equal to 1 into zeros, which are dropped.
    """
    if direction not in ("up", "down"):
        raise ValueError(f"direction must be 'up' or 'down', got {direction!r}")
    if a < 1:
        raise ValueError(f"shift interval must start at >= 1, got {a}")
    if b < a:
        return p
    if direction == "down" and b > len(p):
        raise NegativePart(f"down-shift [{a},{b}] exceeds length {len(p)} of {p}")
    step = 1 if direction == "up" else -1
    parts = list(p) + [0] * max(0, b - len(p))
    for i in range(a - 1, b):
        parts[i] += step
        if parts[i] < 0:
            raise NegativePart(f"down-shift made part {i + 1} negative in {p}")
    return Partition(parts)


def partitions_of(n, max_part=None):
    """Yield all partitions of n (as tuples) in descending lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest

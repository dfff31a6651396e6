"""Integer partitions with conjugation and the dominance order."""

from functools import lru_cache
from itertools import accumulate
from typing import Iterable, Iterator, List, Tuple

from .errors import PartitionError, SizeMismatchError


class Partition:
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are stripped on construction, so ``Partition([4, 2, 0])``
    and ``Partition([4, 2])`` are the same value.  Instances are immutable
    and hashable.
    """

    __slots__ = ("_parts", "_n")

    def __init__(self, parts: Iterable[int] = ()):
        parts = list(parts)
        while parts and parts[-1] == 0:
            parts.pop()
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool):
                raise PartitionError(f"parts must be integers, got {p!r}")
            if p <= 0:
                raise PartitionError(f"parts must be positive, got {tuple(parts)}")
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise PartitionError(f"parts must be weakly decreasing, got {tuple(parts)}")
        self._parts = tuple(parts)
        self._n = sum(parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"4,3,1,1"``; whitespace and trailing zeros are accepted."""
        text = text.strip()
        if not text:
            return cls(())
        try:
            values = [int(tok) for tok in text.split(",")]
        except ValueError:
            raise PartitionError(f"malformed partition string {text!r}") from None
        return cls(values)

    @property
    def parts(self) -> Tuple[int, ...]:
        return self._parts

    @property
    def n(self) -> int:
        return self._n

    def padded(self, length: int) -> Tuple[int, ...]:
        if length < len(self._parts):
            raise PartitionError(f"{self} has more than {length} parts")
        return self._parts + (0,) * (length - len(self._parts))

    def multiplicities(self) -> dict:
        out: dict = {}
        for p in self._parts:
            out[p] = out.get(p, 0) + 1
        return out

    def to_json(self) -> List[int]:
        return list(self._parts)

    def __len__(self) -> int:
        return len(self._parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self._parts)

    def __getitem__(self, i):
        return self._parts[i]

    def __eq__(self, other) -> bool:
        if isinstance(other, Partition):
            return self._parts == other._parts
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("Partition", self._parts))

    def __repr__(self) -> str:
        return f"Partition({list(self._parts)})"

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self._parts)) + ")"


def as_partition(value) -> Partition:
    if isinstance(value, Partition):
        return value
    if isinstance(value, str):
        return Partition.parse(value)
    return Partition(value)


def conjugate(lam) -> Partition:
    """Column lengths of the Young diagram of ``lam``."""
    lam = as_partition(lam)
    if not lam.parts:
        return lam
    return Partition(sum(1 for p in lam.parts if p > j) for j in range(lam.parts[0]))


def _check_same_size(lam: Partition, mu: Partition) -> None:
    if lam.n != mu.n:
        raise SizeMismatchError(f"{lam} is a partition of {lam.n} but {mu} is a partition of {mu.n}")


def dominates(lam, mu) -> bool:
    """True iff ``lam`` is weakly above ``mu`` in the dominance order."""
    lam, mu = as_partition(lam), as_partition(mu)
    _check_same_size(lam, mu)
    length = max(len(lam), len(mu))
    prefix_lam = accumulate(lam.padded(length))
    prefix_mu = accumulate(mu.padded(length))
    return all(a >= b for a, b in zip(prefix_lam, prefix_mu))


def covers(lam, mu) -> bool:
    """True iff ``lam`` covers ``mu`` in the dominance order.

    Uses the box-moving characterisation: ``lam`` arises from ``mu`` by moving
    one box from row k up to row i < k, where k = i + 1 or mu_i = mu_k.
    """
    lam, mu = as_partition(lam), as_partition(mu)
    _check_same_size(lam, mu)
    length = max(len(lam), len(mu))
    a, b = lam.padded(length), mu.padded(length)
    diff = [i for i in range(length) if a[i] != b[i]]
    if len(diff) != 2:
        return False
    i, k = diff
    if a[i] != b[i] + 1 or a[k] != b[k] - 1:
        return False
    return k == i + 1 or b[i] == b[k]


def _partitions(n: int, max_part: int, max_parts: int) -> Iterator[Tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(min(n, max_part), 0, -1):
        # the remaining parts cannot absorb more than first * (max_parts - 1)
        if first * max_parts < n:
            break
        for rest in _partitions(n - first, first, max_parts - 1):
            yield (first,) + rest


def iter_partitions(n: int, max_parts: int = None) -> Iterator[Partition]:
    """Yield partitions of ``n`` in reverse-lexicographic order: (n) first, (1^n) last."""
    if n < 0:
        raise PartitionError(f"cannot partition a negative number ({n})")
    if max_parts is None:
        max_parts = n
    for parts in _partitions(n, n, max_parts):
        yield Partition(parts)


def enumerate_partitions(n: int) -> List[Partition]:
    return list(iter_partitions(n))


def enumerate_partitions_bounded(total: int, max_parts: int) -> List[Partition]:
    """Partitions of ``total`` with at most ``max_parts`` parts, reverse-lex order."""
    if max_parts < 1:
        raise PartitionError("max_parts must be positive")
    return list(iter_partitions(total, max_parts))


@lru_cache(maxsize=None)
def _partition_counts(limit: int) -> Tuple[int, ...]:
    # Euler's pentagonal number recurrence
    counts = [1] + [0] * limit
    for m in range(1, limit + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * counts[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sign * counts[m - g2]
            k += 1
        counts[m] = total
    return tuple(counts)


def partition_counts(limit: int) -> Tuple[int, ...]:
    """``(P(0), P(1), ..., P(limit))``."""
    if limit < 0:
        raise PartitionError("limit must be non-negative")
    # round the cache key up so nearby requests share one table
    size = max(64, 1 << (limit.bit_length()))
    return _partition_counts(size)[: limit + 1]


def partition_count(n: int) -> int:
    if n < 0:
        raise PartitionError(f"P(n) is undefined for negative n ({n})")
    return partition_counts(n)[n]


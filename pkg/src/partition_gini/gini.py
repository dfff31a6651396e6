"""The Gini index of a partition and the statistics it is built from."""

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Tuple

from .errors import DomainError, SizeMismatchError, TooManyPartsError
from .partitions import Partition, as_partition


def e2(lam) -> int:
    """Second elementary symmetric polynomial of the parts.

    Computed as ``C(n,2) - sum C(part,2)``; equal to the sum of pairwise
    products of parts.
    """
    lam = as_partition(lam)
    return comb(lam.n, 2) - sum(comb(p, 2) for p in lam)


def e2_pairwise(lam) -> int:
    parts = as_partition(lam).parts
    return sum(parts[i] * parts[j] for i in range(len(parts)) for j in range(i + 1, len(parts)))


def b_stat(lam, pad_to: int = None) -> int:
    """``sum (i-1) * lam_i``.  Zero padding never changes the value."""
    lam = as_partition(lam)
    if pad_to is not None and len(lam) > pad_to:
        raise TooManyPartsError(f"{lam} has more than {pad_to} parts")
    return sum(i * p for i, p in enumerate(lam))


def gini(lam) -> int:
    lam = as_partition(lam)
    return comb(lam.n, 2) - b_stat(lam)


def _check_nk(lam: Partition, n: int, k: int) -> None:
    if n < 1 or k < 1:
        raise DomainError("n and k must be positive")
    if lam.n != n * k:
        raise SizeMismatchError(f"{lam} is a partition of {lam.n}, expected n*k = {n * k}")
    if len(lam) > n:
        raise TooManyPartsError(f"{lam} has more than n = {n} parts")


def gini_nk(lam, n: int, k: int) -> int:
    """Gini index of ``lam`` viewed as ``n*k`` units shared among ``n`` people."""
    lam = as_partition(lam)
    _check_nk(lam, n, k)
    return b_stat(Partition([k] * n)) - b_stat(lam, n)


def normalized_gini(lam) -> Fraction:
    lam = as_partition(lam)
    if lam.n < 2:
        raise DomainError("normalized Gini index needs n >= 2")
    return Fraction(gini(lam), comb(lam.n, 2))


@dataclass(frozen=True)
class LorenzSample:
    """Breakpoints of a Lorenz step curve and of its line of equality.

    ``points[x]`` and ``equality[x]`` are ``(x, y)`` pairs for ``x = 0..population``;
    both curves are constant on every interval ``(x-1, x]``.
    """

    points: Tuple[Tuple[int, int], ...]
    equality: Tuple[Tuple[int, int], ...]
    population: int
    total: int

    def gap_area(self) -> int:
        return sum(e - y for (_, e), (_, y) in zip(self.equality[1:], self.points[1:]))

    def rows(self):
        """``(x, equality_y, lorenz_y)`` triples, one per breakpoint."""
        return [(x, e, y) for (x, e), (_, y) in zip(self.equality, self.points)]


def lorenz_points(lam, n: int, k: int = 1) -> LorenzSample:
    """Lorenz curve of ``lam`` among ``n`` people, poorest first."""
    lam = as_partition(lam)
    _check_nk(lam, n, k)
    padded = lam.padded(n)
    points = [(0, 0)]
    acc = 0
    for x in range(1, n + 1):
        acc += padded[n - x]
        points.append((x, acc))
    equality = tuple((x, k * x) for x in range(n + 1))
    return LorenzSample(tuple(points), equality, n, n * k)

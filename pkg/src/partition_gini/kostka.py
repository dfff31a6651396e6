"""Kostka numbers and charge-based Kostka-Foulkes polynomials."""

from functools import lru_cache

from .errors import SizeMismatchError
from .partitions import Partition, as_partition
from .polynomial import IntPolynomial
from .tableaux import charge_tableau, iter_ssyt


def _pair(shape, weight):
    shape, weight = as_partition(shape), as_partition(weight)
    if shape.n != weight.n:
        raise SizeMismatchError(f"shape {shape} and weight {weight} have different sizes")
    return shape, weight


def kostka_number(shape, weight) -> int:
    """Number of semistandard tableaux of ``shape`` and ``weight``."""
    shape, weight = _pair(shape, weight)
    return sum(1 for _ in iter_ssyt(shape, weight.parts))


@lru_cache(maxsize=4096)
def _kostka_foulkes(shape: Partition, weight: Partition) -> IntPolynomial:
    return IntPolynomial.from_exponents(charge_tableau(T) for T in iter_ssyt(shape, weight.parts))


def kostka_foulkes(shape, weight, cache: bool = True) -> IntPolynomial:
    """``K_{shape,weight}(t)``: the sum of ``t**charge(T)`` over SSYT(shape, weight).

    The zero polynomial is returned when ``shape`` does not dominate ``weight``.
    """
    shape, weight = _pair(shape, weight)
    if cache:
        return _kostka_foulkes(shape, weight)
    return _kostka_foulkes.__wrapped__(shape, weight)

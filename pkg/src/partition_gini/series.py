"""Counting partitions by Gini index, and the expected value of the index."""

from collections import Counter
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from functools import lru_cache
from math import comb, isqrt
from typing import List, Tuple

from .errors import ConsistencyError, DomainError
from .gini import gini
from .partitions import iter_partitions, partition_count, partition_counts
from .polynomial import IntPolynomial


@lru_cache(maxsize=None)
def _genfun_table(limit: int) -> Tuple[Tuple[int, ...], ...]:
    """Expand prod_{m>=1} 1/(1 - q^C(m+1,2) x^m) through x^limit.

    Entry ``d`` holds the dense q-coefficients of ``x^d``; no q-power above
    C(limit+1, 2) can occur.
    """
    qmax = comb(limit + 1, 2)
    table = [[0] * (qmax + 1) for _ in range(limit + 1)]
    table[0][0] = 1
    for m in range(1, limit + 1):
        shift = comb(m + 1, 2)
        # multiplying by the geometric series in q^shift x^m is an unbounded knapsack step
        for d in range(m, limit + 1):
            src, dst = table[d - m], table[d]
            for e in range(qmax + 1 - shift):
                c = src[e]
                if c:
                    dst[e + shift] += c
    return tuple(tuple(row) for row in table)


def genfun_coefficient(n: int) -> IntPolynomial:
    """Coefficient of ``x^n`` in the product expansion, as a polynomial in ``q``."""
    if n < 1:
        raise DomainError("n must be positive")
    size = max(16, 1 << (n - 1).bit_length())
    return IntPolynomial(_genfun_table(size)[n])


def genfun_by_enumeration(n: int) -> IntPolynomial:
    """``sum over partitions of n of q^(C(n+1,2) - g)``."""
    top = comb(n + 1, 2)
    return IntPolynomial.from_exponents(top - gini(lam) for lam in iter_partitions(n))


def gini_level_sets(n: int) -> Counter:
    return Counter(gini(lam) for lam in iter_partitions(n))


def max_level_set_size(n: int) -> int:
    """Largest number of partitions of ``n`` sharing one Gini value.

    Read off the generating function and checked against a direct count.
    """
    if n < 1:
        raise DomainError("n must be positive")
    from_series = max(genfun_coefficient(n).coeffs)
    direct = max(gini_level_sets(n).values())
    if from_series != direct:
        raise ConsistencyError(f"level set size mismatch at n={n}: {from_series} vs {direct}")
    return from_series


def antichain_lower_bound(n: int) -> Fraction:
    """``P(n) / C(n, 2)``, a lower bound for the largest level set for n >= 3."""
    if n <= 1:
        raise DomainError("the bound needs n > 1")
    return Fraction(partition_count(n), comb(n, 2))


def divisor_sum(x: int, n: int) -> int:
    """``sum of d**x over the divisors d of n``."""
    if n < 1:
        raise DomainError("n must be positive")
    total = 0
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            total += d ** x
            e = n // d
            if e != d:
                total += e ** x
    return total


def _sigma12(limit: int) -> List[int]:
    """``sigma_1(m) + sigma_2(m)`` for m = 0..limit by a divisor sieve."""
    out = [0] * (limit + 1)
    for d in range(1, limit + 1):
        w = d + d * d
        for m in range(d, limit + 1, d):
            out[m] += w
    return out


def gini_sum(n: int) -> int:
    """Sum of ``g`` over all partitions of ``n``, in closed form."""
    if n < 1:
        raise DomainError("n must be positive")
    return _gini_sums(n)[n]


def _gini_sums(limit: int) -> List[int]:
    P = partition_counts(limit)
    s = _sigma12(limit)
    out = [0] * (limit + 1)
    for n in range(1, limit + 1):
        conv = sum(P[i] * s[n - i] for i in range(n))
        twice = P[n] * (n * n + n) - conv
        assert twice % 2 == 0
        out[n] = twice // 2
    return out


def gini_sum_by_enumeration(n: int) -> int:
    return sum(gini(lam) for lam in iter_partitions(n))


def expected_value(n: int) -> Fraction:
    """Mean of ``g`` over the partitions of ``n``."""
    if n <= 1:
        raise DomainError("expected value needs n > 1")
    return Fraction(gini_sum(n), partition_count(n))


def expected_value_normalized(n: int) -> Fraction:
    """Mean of ``g / C(n, 2)`` over the partitions of ``n``."""
    if n <= 1:
        raise DomainError("expected value needs n > 1")
    value = Fraction(gini_sum(n), comb(n, 2) * partition_count(n))
    if value != expected_value_normalized_closed_form(n):
        raise ConsistencyError(f"closed forms disagree at n={n}")
    return value


def expected_value_normalized_closed_form(n: int) -> Fraction:
    """``(n+1)/(n-1) - sum_i P(i)(sigma_1 + sigma_2)(n-i) / (P(n)(n^2-n))``."""
    if n <= 1:
        raise DomainError("expected value needs n > 1")
    P = partition_counts(n)
    s = _sigma12(n)
    conv = sum(P[i] * s[n - i] for i in range(n))
    return Fraction(n + 1, n - 1) - Fraction(conv, P[n] * (n * n - n))


def expected_values_normalized(limit: int) -> List[Fraction]:
    """Normalized expected values for n = 2..limit, sharing one sieve."""
    sums = _gini_sums(limit)
    P = partition_counts(limit)
    return [Fraction(sums[n], comb(n, 2) * P[n]) for n in range(2, limit + 1)]


def to_decimal(value: Fraction, places: int = 4) -> Decimal:
    """Round an exact rational half-to-even at ``places`` decimal places."""
    with localcontext() as ctx:
        ctx.prec = max(50, places + len(str(value.numerator)) + 5)
        d = Decimal(value.numerator) / Decimal(value.denominator)
        return d.quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_EVEN)


def trend_report(limit: int) -> dict:
    """Normalized expected values up to ``limit`` with a monotonicity check.

    Any decrease is reported, never hidden.
    """
    values = expected_values_normalized(limit)
    drops = [n for n, (a, b) in enumerate(zip(values, values[1:]), start=3) if b <= a]
    return {
        "max_n": limit,
        "monotone_increasing": not drops,
        "violations": drops,
        "last": str(to_decimal(values[-1])) if values else None,
    }

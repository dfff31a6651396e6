"""Exact arithmetic in Z[x]/(x^n - 1), read at a primitive n-th root of unity."""

from functools import lru_cache
from typing import Sequence, Tuple

from .errors import ConsistencyError
from .polynomial import IntPolynomial


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> IntPolynomial:
    """``Phi_n``: x^n - 1 divided by Phi_d for every proper divisor d of n."""
    poly = IntPolynomial([-1] + [0] * (n - 1) + [1])
    for d in range(1, n):
        if n % d == 0:
            poly = poly.exact_div(cyclotomic_polynomial(d))
    return poly


class CyclotomicElement:
    """``sum residues[a] * zeta**a`` for a primitive ``n``-th root of unity ``zeta``.

    Arithmetic is done modulo ``x**n - 1``, so several residue vectors can
    name the same number; compare values with :meth:`rational_value` or
    :meth:`is_zero`, not with ``==`` on residues.
    """

    __slots__ = ("n", "residues")

    def __init__(self, n: int, residues: Sequence[int]):
        if len(residues) != n:
            raise ValueError(f"expected {n} residues, got {len(residues)}")
        self.n = n
        self.residues: Tuple[int, ...] = tuple(int(r) for r in residues)

    @classmethod
    def zero(cls, n: int) -> "CyclotomicElement":
        return cls(n, [0] * n)

    @classmethod
    def integer(cls, n: int, value: int) -> "CyclotomicElement":
        return cls(n, [value] + [0] * (n - 1))

    @classmethod
    def root_power(cls, n: int, a: int, coeff: int = 1) -> "CyclotomicElement":
        """``coeff * zeta**a``."""
        res = [0] * n
        res[a % n] = coeff
        return cls(n, res)

    def _check(self, other: "CyclotomicElement") -> None:
        if other.n != self.n:
            raise ValueError("elements of different cyclotomic rings")

    def __add__(self, other):
        if isinstance(other, int):
            other = CyclotomicElement.integer(self.n, other)
        self._check(other)
        return CyclotomicElement(self.n, [a + b for a, b in zip(self.residues, other.residues)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicElement(self.n, [-a for a in self.residues])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return CyclotomicElement(self.n, [a * other for a in self.residues])
        self._check(other)
        n = self.n
        out = [0] * n
        # cyclic convolution
        for i, a in enumerate(self.residues):
            if a:
                for j, b in enumerate(other.residues):
                    if b:
                        out[(i + j) % n] += a * b
        return CyclotomicElement(n, out)

    __rmul__ = __mul__

    def conjugate(self) -> "CyclotomicElement":
        """Complex conjugate: ``zeta**a -> zeta**(-a)``."""
        n = self.n
        out = [0] * n
        for a, c in enumerate(self.residues):
            out[(-a) % n] += c
        return CyclotomicElement(n, out)

    def has_equal_tail(self) -> bool:
        """Cheap sufficient test for rationality: residues 1..n-1 all equal."""
        tail = self.residues[1:]
        return all(r == tail[0] for r in tail) if tail else True

    def reduced(self) -> IntPolynomial:
        """Canonical representative: the residue polynomial modulo ``Phi_n``."""
        _, rem = IntPolynomial(self.residues).divmod(cyclotomic_polynomial(self.n))
        return rem

    def is_rational(self) -> bool:
        if self.has_equal_tail():
            return True
        return (self.reduced().degree or 0) == 0

    def rational_value(self) -> int:
        """The integer this element equals; raises if it is not rational.

        Uses ``1 + zeta + ... + zeta**(n-1) = 0`` when the tail is constant and
        falls back to reduction modulo ``Phi_n`` otherwise.
        """
        if self.has_equal_tail():
            return self.residues[0] - (self.residues[1] if self.n > 1 else 0)
        rem = self.reduced()
        if (rem.degree or 0) != 0:
            raise ConsistencyError(f"cyclotomic value is not rational: residues {self.residues}")
        return rem[0]

    def is_zero(self) -> bool:
        return self.reduced().is_zero()

    def __repr__(self) -> str:
        return f"CyclotomicElement({self.n}, {list(self.residues)})"


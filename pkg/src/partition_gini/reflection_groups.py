"""Graded multiplicities and Gini indices of group representations.

Symmetric groups and GL_n reduce to Kostka-Foulkes polynomials.  Dihedral
groups are handled directly by an exact Molien-type sum over the group.
"""

import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

from .cyclotomic import CyclotomicElement
from .errors import CharacterError, ConsistencyError, DomainError
from .partitions import Partition, as_partition, conjugate
from .polynomial import IntPolynomial
from .kostka import kostka_foulkes

NEG_INF = -math.inf

# -- symmetric groups -------------------------------------------------------


def sym_graded_multiplicity(lam) -> IntPolynomial:
    """Graded multiplicity of the Specht module ``S^lam`` in the coinvariants."""
    lam = as_partition(lam)
    return kostka_foulkes(conjugate(lam), Partition([1] * lam.n))


def sym_gini(lam) -> int:
    """Degree of the graded multiplicity of the conjugate module, i.e. deg K_{lam,(1^n)}."""
    lam = as_partition(lam)
    return sym_graded_multiplicity(conjugate(lam)).degree


# -- dihedral groups --------------------------------------------------------

KINDS = ("chi1", "chi2", "chi3", "chi4", "rho")


@dataclass(frozen=True)
class DihedralCharacter:
    """An irreducible character of the dihedral group of order ``2n``."""

    kind: str
    n: int
    j: Optional[int] = None

    def __post_init__(self):
        if self.n < 3:
            raise CharacterError("dihedral groups need n >= 3")
        if self.kind not in KINDS:
            raise CharacterError(f"unknown character kind {self.kind!r}")
        if self.kind in ("chi3", "chi4") and self.n % 2:
            raise CharacterError(f"{self.kind} exists only for even n")
        if self.kind == "rho":
            if self.j is None or not 0 < 2 * self.j < self.n:
                raise CharacterError(f"rho needs 0 < j < n/2, got j={self.j}")
        elif self.j is not None:
            raise CharacterError(f"{self.kind} takes no j")

    @property
    def dimension(self) -> int:
        return 2 if self.kind == "rho" else 1

    def __str__(self) -> str:
        return f"rho_{self.j}" if self.kind == "rho" else self.kind


def dihedral_characters(n: int) -> List[DihedralCharacter]:
    kinds = ["chi1", "chi2"] + (["chi3", "chi4"] if n % 2 == 0 else [])
    out = [DihedralCharacter(k, n) for k in kinds]
    out += [DihedralCharacter("rho", n, j) for j in range(1, (n + 1) // 2) if 2 * j < n]
    return out


Matrix = Tuple[Tuple[CyclotomicElement, CyclotomicElement], Tuple[CyclotomicElement, CyclotomicElement]]


def _rho_matrix(n: int, j: int, k: int, reflection: bool) -> Matrix:
    z = CyclotomicElement.zero(n)
    up = CyclotomicElement.root_power(n, j * k)
    down = CyclotomicElement.root_power(n, -j * k)
    if reflection:
        return ((z, down), (up, z))
    return ((up, z), (z, down))


def dihedral_elements(n: int):
    """Yield ``(k, is_reflection, matrix)`` for r^k and s r^k with k = 1..n, in the faithful 2-d representation."""
    for k in range(1, n + 1):
        yield k, False, _rho_matrix(n, 1, k, False)
    for k in range(1, n + 1):
        yield k, True, _rho_matrix(n, 1, k, True)


def char_poly_coefficients(m: Matrix) -> Tuple[CyclotomicElement, CyclotomicElement]:
    """``(trace, det)`` so that det(I - tM) = 1 - trace t + det t^2."""
    (a, b), (c, d) = m
    return a + d, a * d - b * c


def character_value(chi: DihedralCharacter, k: int, reflection: bool) -> CyclotomicElement:
    n = chi.n
    sign = 1 if k % 2 == 0 else -1
    if chi.kind == "chi1":
        return CyclotomicElement.integer(n, 1)
    if chi.kind == "chi2":
        return CyclotomicElement.integer(n, -1 if reflection else 1)
    if chi.kind == "chi3":
        return CyclotomicElement.integer(n, sign)
    if chi.kind == "chi4":
        return CyclotomicElement.integer(n, -sign if reflection else sign)
    trace, _ = char_poly_coefficients(_rho_matrix(n, chi.j, k, reflection))
    return trace


def _inverse_series(trace: CyclotomicElement, det: CyclotomicElement, terms: int) -> List[CyclotomicElement]:
    """Power series of 1 / (1 - trace t + det t^2) through ``t**(terms-1)``."""
    n = trace.n
    out = [CyclotomicElement.integer(n, 1)]
    if terms > 1:
        out.append(trace * out[0])
    for d in range(2, terms):
        out.append(trace * out[d - 1] - det * out[d - 2])
    return out[:terms]


def dihedral_graded_multiplicity(n: int, chi: Union[DihedralCharacter, str], j: Optional[int] = None) -> IntPolynomial:
    """Graded multiplicity of an irreducible representation of the dihedral group of order 2n.

    Evaluates (1/2n) (1 - t^2)(1 - t^n) sum_T conj(chi(T)) / det(I - tT) as a
    power series through degree n + 1, using the invariant degrees 2 and n.
    """
    if not isinstance(chi, DihedralCharacter):
        chi = DihedralCharacter(chi, n, j)
    if chi.n != n:
        raise CharacterError(f"character belongs to n={chi.n}, not n={n}")
    terms = n + 2
    total = [CyclotomicElement.zero(n) for _ in range(terms)]
    for k, reflection, m in dihedral_elements(n):
        weight = character_value(chi, k, reflection).conjugate()
        trace, det = char_poly_coefficients(m)
        for d, c in enumerate(_inverse_series(trace, det, terms)):
            total[d] = total[d] + weight * c
    # multiply by (1 - t^2)(1 - t^n), truncated
    factor = {0: 1, 2: -1, n: -1, n + 2: 1}
    product = [CyclotomicElement.zero(n) for _ in range(terms)]
    for shift, sgn in factor.items():
        for d in range(terms - shift):
            product[d + shift] = product[d + shift] + total[d] * sgn
    coeffs = []
    for d, c in enumerate(product):
        value = c.rational_value()
        q, r = divmod(value, 2 * n)
        if r:
            raise ConsistencyError(f"coefficient of t^{d} is {value}/{2 * n}, not an integer")
        coeffs.append(q)
    if coeffs[-1] != 0:
        raise ConsistencyError(f"graded multiplicity has a term beyond degree {n}")
    return IntPolynomial(coeffs)


def dihedral_gini(n: int, chi: Union[DihedralCharacter, str], j: Optional[int] = None) -> int:
    return dihedral_graded_multiplicity(n, chi, j).degree


# -- GL_n -------------------------------------------------------------------


class DominantWeight:
    """A weakly decreasing integer vector, the highest weight of a GL_n irrep."""

    __slots__ = ("entries",)

    def __init__(self, entries: Sequence[int]):
        entries = tuple(int(e) for e in entries)
        if not entries:
            raise DomainError("a dominant weight needs at least one entry")
        if any(a < b for a, b in zip(entries, entries[1:])):
            raise DomainError(f"weight {entries} is not weakly decreasing")
        self.entries = entries

    @classmethod
    def parse(cls, text: str) -> "DominantWeight":
        try:
            return cls(int(tok) for tok in text.split(","))
        except ValueError:
            raise DomainError(f"malformed weight {text!r}") from None

    @property
    def n(self) -> int:
        return len(self.entries)

    def default_shift(self) -> int:
        """Smallest k >= 1 with k >= -alpha_n."""
        return max(1, -self.entries[-1])

    def shifted(self, k: int) -> Partition:
        if k < -self.entries[-1]:
            raise DomainError(f"shift {k} leaves a negative entry")
        return Partition(e + k for e in self.entries)

    def __repr__(self) -> str:
        return f"DominantWeight({list(self.entries)})"


def _as_weight(alpha) -> DominantWeight:
    if isinstance(alpha, DominantWeight):
        return alpha
    if isinstance(alpha, str):
        return DominantWeight.parse(alpha)
    return DominantWeight(alpha)


def gl_graded_multiplicity(alpha, k: Optional[int] = None) -> IntPolynomial:
    """``K_{alpha + (k^n), (k^n)}(t)`` for a zero-sum dominant weight."""
    alpha = _as_weight(alpha)
    if sum(alpha.entries) != 0:
        raise DomainError(f"weight {alpha.entries} does not sum to zero")
    if k is None:
        k = alpha.default_shift()
    if k < 1:
        raise DomainError("shift must be positive")
    lam = alpha.shifted(k)
    return kostka_foulkes(lam, Partition([k] * alpha.n))


def gl_gini(alpha) -> Union[int, float]:
    """Degree of the graded multiplicity; ``-inf`` when the weight sum is nonzero."""
    alpha = _as_weight(alpha)
    if sum(alpha.entries) != 0:
        return NEG_INF
    degree = gl_graded_multiplicity(alpha).degree
    return NEG_INF if degree is None else degree

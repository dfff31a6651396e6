"""Symmetric polynomials in finitely many variables, with coefficients in Z[t].

This module is an independent route to Kostka-Foulkes polynomials: they are
recovered as the coefficients expressing a Schur polynomial in the
Hall-Littlewood basis, with every basis expanded into monomials.  It shares
no code with the charge computation in :mod:`partition_gini.kostka`, and is
meant for small sizes only (at most six variables).
"""

from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import comb
from typing import Dict, Iterator, List, Optional, Tuple

from .errors import ConsistencyError, DomainError, SizeMismatchError, TooManyPartsError
from .partitions import Partition, as_partition, iter_partitions
from .polynomial import IntPolynomial

MAX_HL_VARIABLES = 6

Exponent = Tuple[int, ...]


class MultiPoly:
    """Polynomial in ``x_1..x_nvars`` and ``t`` with rational coefficients.

    Keys of ``terms`` are exponent vectors of length ``nvars + 1``; the last
    slot is the power of ``t``.  Zero coefficients are never stored.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Optional[Dict[Exponent, Fraction]] = None):
        self.nvars = nvars
        self.terms: Dict[Exponent, Fraction] = {}
        for exp, c in (terms or {}).items():
            if len(exp) != nvars + 1:
                raise ValueError(f"exponent {exp} does not have length {nvars + 1}")
            if c:
                self.terms[tuple(exp)] = Fraction(c)

    @classmethod
    def from_x_terms(cls, nvars: int, terms: Dict[Exponent, int]) -> "MultiPoly":
        """Build a ``t``-free polynomial from ``{x_exponent: coeff}``."""
        return cls(nvars, {exp + (0,): c for exp, c in terms.items()})

    def _check(self, other: "MultiPoly") -> None:
        if other.nvars != self.nvars:
            raise ValueError("variable counts differ")

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(self.nvars, out)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return MultiPoly(self.nvars, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        out: Dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly(self.nvars, out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        return f"MultiPoly({self.nvars}, {len(self.terms)} terms)"

    def permute(self, perm: Tuple[int, ...]) -> "MultiPoly":
        """Substitute ``x_i -> x_{perm[i]}``."""
        out = {}
        for e, c in self.terms.items():
            new = [0] * self.nvars
            for i, p in enumerate(perm):
                new[p] = e[i]
            out[tuple(new) + (e[-1],)] = c
        return MultiPoly(self.nvars, out)

    def swap(self, i: int, j: int) -> "MultiPoly":
        perm = list(range(self.nvars))
        perm[i], perm[j] = j, i
        return self.permute(tuple(perm))

    def is_symmetric(self) -> bool:
        return all(self.swap(i, i + 1) == self for i in range(self.nvars - 1))

    def specialize_t(self, value) -> "MultiPoly":
        out: Dict[Exponent, Fraction] = {}
        for e, c in self.terms.items():
            key = e[:-1] + (0,)
            out[key] = out.get(key, 0) + c * Fraction(value) ** e[-1]
        return MultiPoly(self.nvars, out)

    def t_coefficient(self, x_exp: Exponent) -> IntPolynomial:
        """Coefficient of ``x^x_exp`` as a polynomial in ``t`` (must be integral)."""
        coeffs: Dict[int, Fraction] = {}
        for e, c in self.terms.items():
            if e[:-1] == tuple(x_exp):
                coeffs[e[-1]] = c
        if not coeffs:
            return IntPolynomial()
        dense = [coeffs.get(i, 0) for i in range(max(coeffs) + 1)]
        if any(Fraction(c).denominator != 1 for c in dense):
            raise ConsistencyError(f"non-integral coefficient at {x_exp}")
        return IntPolynomial(int(c) for c in dense)


def _padded(lam: Partition, nvars: int) -> Exponent:
    if len(lam) > nvars:
        raise TooManyPartsError(f"{lam} has more than {nvars} parts")
    return lam.padded(nvars)


def monomial_sym(lam, nvars: int) -> MultiPoly:
    """Sum of the distinct monomials whose exponents rearrange ``lam``."""
    lam = as_partition(lam)
    exps = set(permutations(_padded(lam, nvars)))
    return MultiPoly.from_x_terms(nvars, {e: 1 for e in exps})


def _fillings(shape: Tuple[int, ...], max_entry: int) -> Iterator[List[List[int]]]:
    """Semistandard fillings with entries in ``1..max_entry``, one cell at a time."""
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    grid = [[0] * length for length in shape]
    heights = [sum(1 for length in shape if length > c) for c in range(shape[0] if shape else 0)]

    def rec(k: int):
        if k == len(cells):
            yield grid
            return
        r, c = cells[k]
        lo = 1
        if c > 0:
            lo = max(lo, grid[r][c - 1])
        if r > 0:
            lo = max(lo, grid[r - 1][c] + 1)
        # leave room for the strictly increasing entries below in this column
        hi = max_entry - (heights[c] - 1 - r)
        for v in range(lo, hi + 1):
            grid[r][c] = v
            yield from rec(k + 1)
        grid[r][c] = 0

    yield from rec(0)


def schur(lam, nvars: int) -> MultiPoly:
    """Schur polynomial as the generating function of semistandard fillings."""
    lam = as_partition(lam)
    _padded(lam, nvars)
    terms: Dict[Exponent, int] = {}
    for grid in _fillings(lam.parts, nvars):
        exp = [0] * nvars
        for row in grid:
            for v in row:
                exp[v - 1] += 1
        key = tuple(exp)
        terms[key] = terms.get(key, 0) + 1
    return MultiPoly.from_x_terms(nvars, terms)


# -- Hall-Littlewood polynomials -------------------------------------------
#
# Internally polynomials are dicts {(x_1..x_n, t): int}.  The symmetrised
# sum is computed as an antisymmetrisation divided by the Vandermonde
# product, and the division is carried out one linear factor at a time.

def _mul_terms(a: Dict[Exponent, int], b: Dict[Exponent, int]) -> Dict[Exponent, int]:
    out: Dict[Exponent, int] = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def _perm_sign(perm: Tuple[int, ...]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _sort_sign(alpha: Exponent) -> Tuple[int, Exponent]:
    """Sign of the permutation sorting distinct ``alpha`` decreasingly, and the result."""
    order = sorted(range(len(alpha)), key=lambda i: -alpha[i])
    return _perm_sign(tuple(order)), tuple(alpha[i] for i in order)


def _antisymmetrize(f: Dict[Exponent, int], nvars: int) -> Dict[Exponent, int]:
    # group by strictly decreasing exponent first; x^alpha with a repeated
    # entry antisymmetrises to zero
    by_beta: Dict[Exponent, Dict[int, int]] = {}
    for exp, c in f.items():
        alpha, te = exp[:-1], exp[-1]
        if len(set(alpha)) < nvars:
            continue
        sign, beta = _sort_sign(alpha)
        slot = by_beta.setdefault(beta, {})
        slot[te] = slot.get(te, 0) + sign * c
    perms = [(p, _perm_sign(p)) for p in permutations(range(nvars))]
    out: Dict[Exponent, int] = {}
    for beta, tpoly in by_beta.items():
        tpoly = {te: c for te, c in tpoly.items() if c}
        if not tpoly:
            continue
        for p, sign in perms:
            x = [0] * nvars
            for i, pi in enumerate(p):
                x[pi] = beta[i]
            x = tuple(x)
            for te, c in tpoly.items():
                key = x + (te,)
                out[key] = out.get(key, 0) + sign * c
    return {e: c for e, c in out.items() if c}


def _divide_by_difference(f: Dict[Exponent, int], i: int, j: int) -> Dict[Exponent, int]:
    """Exact quotient of ``f`` by ``x_i - x_j``; a nonzero remainder is an error."""
    # for fixed other exponents and fixed d = e_i + e_j the part of f is a
    # binary form sum_a c_a x_i^a x_j^(d-a); divide it by synthetic division
    groups: Dict[Tuple, Dict[int, int]] = {}
    for e, c in f.items():
        rest = e[:i] + (None,) + e[i + 1:j] + (None,) + e[j + 1:]
        key = (rest, e[i] + e[j])
        groups.setdefault(key, {})[e[i]] = c
    out: Dict[Exponent, int] = {}
    for (rest, d), form in groups.items():
        carry = 0
        for a in range(d, 0, -1):
            carry += form.get(a, 0)
            if carry:
                e = list(rest)
                e[i], e[j] = a - 1, d - a
                out[tuple(e)] = carry
        if carry + form.get(0, 0) != 0:
            raise ConsistencyError("antisymmetrised numerator is not divisible by the Vandermonde product")
    return out


def _v_factor(lam: Partition, nvars: int) -> IntPolynomial:
    """prod over part sizes i (zero included) of prod_{j<=m_i} (1 - t^j)/(1 - t)."""
    mult = lam.multiplicities()
    zeros = nvars - len(lam)
    if zeros:
        mult[0] = zeros
    v = IntPolynomial([1])
    for m in mult.values():
        for j in range(1, m + 1):
            v = v * IntPolynomial([1] * j)
    return v


@lru_cache(maxsize=None)
def _hall_littlewood(lam: Partition, nvars: int) -> Dict[Exponent, int]:
    n = nvars
    f: Dict[Exponent, int] = {lam.padded(n) + (0,): 1}
    for i in range(n):
        for j in range(i + 1, n):
            xi = [0] * (n + 1)
            xi[i] = 1
            txj = [0] * (n + 1)
            txj[j] = 1
            txj[n] = 1
            f = _mul_terms(f, {tuple(xi): 1, tuple(txj): -1})
    num = _antisymmetrize(f, n)
    for i in range(n):
        for j in range(i + 1, n):
            num = _divide_by_difference(num, i, j)
    v = _v_factor(lam, n)
    by_x: Dict[Exponent, Dict[int, int]] = {}
    for e, c in num.items():
        by_x.setdefault(e[:-1], {})[e[-1]] = c
    out: Dict[Exponent, int] = {}
    for x, tp in by_x.items():
        poly = IntPolynomial([tp.get(k, 0) for k in range(max(tp) + 1)])
        try:
            q = poly.exact_div(v)
        except ArithmeticError:
            raise ConsistencyError(f"symmetrised sum at {x} not divisible by {v}") from None
        for k, c in enumerate(q.coeffs):
            if c:
                out[x + (k,)] = c
    return out


def hall_littlewood(lam, nvars: int) -> MultiPoly:
    """Hall-Littlewood polynomial ``P_lam(x_1..x_nvars; t)``.

    Normalised by ``v_lam(t) = prod_i prod_{j=1}^{m_i} (1 - t^j) / (1 - t)``,
    where ``m_i`` counts parts equal to ``i`` after padding with zeros.
    """
    lam = as_partition(lam)
    _padded(lam, nvars)
    if nvars > MAX_HL_VARIABLES:
        raise DomainError(f"Hall-Littlewood oracle is limited to {MAX_HL_VARIABLES} variables")
    return MultiPoly(nvars, _hall_littlewood(lam, nvars))


def monomial_coefficients(poly: MultiPoly, n: int) -> Dict[Partition, IntPolynomial]:
    """Coefficients of a symmetric polynomial of degree ``n`` in the monomial basis."""
    out = {}
    for mu in iter_partitions(n, poly.nvars):
        c = poly.t_coefficient(mu.padded(poly.nvars))
        if not c.is_zero():
            out[mu] = c
    return out


@lru_cache(maxsize=None)
def _transition_row(shape: Partition) -> Dict[Partition, IntPolynomial]:
    n = shape.n
    nvars = n
    residual: Dict[Exponent, IntPolynomial] = {}
    for e, c in schur(shape, nvars).terms.items():
        residual[e[:-1]] = IntPolynomial([int(c)])
    row: Dict[Partition, IntPolynomial] = {}
    # reverse-lex order refines dominance, and P_mu = m_mu + (lower terms)
    for mu in iter_partitions(n):
        key = mu.padded(nvars)
        k = residual.get(key, IntPolynomial())
        if k.is_zero():
            continue
        row[mu] = k
        p_mu = _hall_littlewood(mu, nvars)
        lead = IntPolynomial()
        for e, c in p_mu.items():
            x = e[:-1]
            term = IntPolynomial.monomial(e[-1], c) * k
            residual[x] = residual.get(x, IntPolynomial()) - term
            if x == key:
                lead = lead + IntPolynomial.monomial(e[-1], c)
        if lead != IntPolynomial([1]):
            raise ConsistencyError(f"P_{mu} is not unitriangular in the monomial basis")
    leftover = {x: p for x, p in residual.items() if not p.is_zero()}
    if leftover:
        raise ConsistencyError(f"transition system for s_{shape} is inconsistent")
    return row


def kostka_foulkes_via_transition(shape, weight, t_degree_bound: int = None) -> IntPolynomial:
    """``K_{shape,weight}(t)`` from ``s_shape = sum_mu K_{shape,mu}(t) P_mu``."""
    shape, weight = as_partition(shape), as_partition(weight)
    if shape.n != weight.n:
        raise SizeMismatchError(f"shape {shape} and weight {weight} have different sizes")
    if shape.n > MAX_HL_VARIABLES:
        raise DomainError(f"transition oracle is limited to n <= {MAX_HL_VARIABLES}")
    result = _transition_row(shape).get(weight, IntPolynomial())
    bound = comb(shape.n, 2) if t_degree_bound is None else t_degree_bound
    if result.degree is not None and result.degree > bound:
        raise ConsistencyError(f"K_{shape},{weight}(t) exceeds degree bound {bound}")
    return result

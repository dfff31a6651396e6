"""Young tableaux and the charge statistic on their reading words."""

from math import factorial
from typing import Iterator, List, Sequence, Tuple

from .errors import ChargeError, PartitionError, SizeMismatchError
from .partitions import Partition, as_partition, conjugate


class Tableau:
    """A filling of a Young diagram by positive integers, stored row by row."""

    __slots__ = ("rows", "shape")

    def __init__(self, rows: Sequence[Sequence[int]]):
        self.rows: Tuple[Tuple[int, ...], ...] = tuple(tuple(r) for r in rows if len(r))
        self.shape = Partition(len(r) for r in self.rows)

    @property
    def weight(self) -> Tuple[int, ...]:
        """Occurrence counts of 1, 2, ..., max entry."""
        top = max((x for r in self.rows for x in r), default=0)
        counts = [0] * top
        for r in self.rows:
            for x in r:
                counts[x - 1] += 1
        return tuple(counts)

    def is_semistandard(self) -> bool:
        for r in self.rows:
            if any(x < 1 for x in r):
                return False
            if any(a > b for a, b in zip(r, r[1:])):
                return False
        for upper, lower in zip(self.rows, self.rows[1:]):
            if any(a >= b for a, b in zip(upper, lower)):
                return False
        return True

    def is_standard(self) -> bool:
        return self.is_semistandard() and all(c == 1 for c in self.weight)

    def entries(self) -> Tuple[int, ...]:
        return tuple(x for r in self.rows for x in r)

    def to_json(self) -> List[List[int]]:
        return [list(r) for r in self.rows]

    def __eq__(self, other) -> bool:
        if isinstance(other, Tableau):
            return self.rows == other.rows
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"Tableau({self.to_json()})"


def _horizontal_strips(inner: Tuple[int, ...], size: int, limit: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
    """Shapes ``outer`` inside ``limit`` with ``outer / inner`` a horizontal strip of ``size`` boxes.

    ``inner`` and ``limit`` are zero padded to the same length.  A horizontal
    strip puts at most one box in each column, which amounts to
    ``inner[i] <= outer[i] <= inner[i-1]``.
    """
    rows = len(limit)

    def rec(i: int, left: int, acc: Tuple[int, ...]):
        if i == rows:
            if left == 0:
                yield acc
            return
        cap = limit[i] if i == 0 else min(limit[i], inner[i - 1])
        room = cap - inner[i]
        # rows below i can absorb at most this many more boxes
        below = sum(min(limit[r], inner[r - 1]) - inner[r] for r in range(i + 1, rows))
        lo = max(0, left - below)
        for add in range(min(room, left), lo - 1, -1):
            yield from rec(i + 1, left - add, acc + (inner[i] + add,))

    yield from rec(0, size, ())


def iter_ssyt(shape, content: Sequence[int]) -> Iterator[Tableau]:
    """Semistandard tableaux of ``shape`` in which letter ``i+1`` occurs ``content[i]`` times.

    ``content`` may be any composition; letters are placed one at a time as
    horizontal strips.
    """
    shape = as_partition(shape)
    if sum(content) != shape.n:
        raise SizeMismatchError(f"content {tuple(content)} does not fill shape {shape}")
    limit = shape.parts
    rows = len(limit)

    def rec(letter: int, inner: Tuple[int, ...], chain: List[Tuple[int, ...]]):
        if letter == len(content):
            if inner == limit:
                yield list(chain)
            return
        for outer in _horizontal_strips(inner, content[letter], limit):
            chain.append(outer)
            yield from rec(letter + 1, outer, chain)
            chain.pop()

    for chain in rec(0, (0,) * rows, []):
        filling = [[0] * p for p in limit]
        prev = (0,) * rows
        for letter, outer in enumerate(chain, start=1):
            for r in range(rows):
                for c in range(prev[r], outer[r]):
                    filling[r][c] = letter
            prev = outer
        yield Tableau(filling)


def enumerate_ssyt(shape, weight) -> List[Tableau]:
    """All semistandard tableaux of the given shape and partition weight.

    Sorted lexicographically by concatenated rows.  Empty unless the shape
    dominates the weight.
    """
    shape, weight = as_partition(shape), as_partition(weight)
    if shape.n != weight.n:
        raise SizeMismatchError(f"shape {shape} and weight {weight} have different sizes")
    return sorted(iter_ssyt(shape, weight.parts), key=Tableau.entries)


def enumerate_standard(shape) -> List[Tableau]:
    shape = as_partition(shape)
    return sorted(iter_ssyt(shape, [1] * shape.n), key=Tableau.entries)


def hook_lengths(shape) -> List[List[int]]:
    shape = as_partition(shape)
    cols = conjugate(shape).parts
    return [[shape[i] - j + cols[j] - i - 1 for j in range(shape[i])] for i in range(len(shape))]


def hook_product(shape) -> int:
    prod = 1
    for row in hook_lengths(shape):
        for h in row:
            prod *= h
    return prod


def standard_count(shape) -> int:
    """Number of standard tableaux, by the hook length formula."""
    shape = as_partition(shape)
    q, r = divmod(factorial(shape.n), hook_product(shape))
    assert r == 0
    return q


def reading_word(tableau: Tableau) -> Tuple[int, ...]:
    """Rows read right to left, top row first."""
    return tuple(x for row in tableau.rows for x in reversed(row))


def _check_charge_word(word: Sequence[int]) -> int:
    top = max(word, default=0)
    counts = [0] * top
    for x in word:
        if not isinstance(x, int) or x < 1:
            raise ChargeError(f"letters must be positive integers, got {x!r}")
        counts[x - 1] += 1
    if any(a < b for a, b in zip(counts, counts[1:])) or (counts and counts[-1] == 0):
        raise ChargeError(f"letter multiplicities {tuple(counts)} do not form a partition")
    return top


def standard_subwords(word: Sequence[int]) -> List[Tuple[int, ...]]:
    """Split a partition-weight word into standard subwords.

    Take the first 1, then the first 2 to its right (wrapping around to the
    start if needed), and so on up to the largest remaining letter.  The
    underlined letters, in word order, form a subword; repeat on what is left.
    """
    _check_charge_word(word)
    return [tuple(word[p] for p in positions) for positions, _ in _extract(list(word))]


def _extract(word: List[int]):
    """Yield ``(positions, charge)`` for each standard subword, positions sorted."""
    alive = list(range(len(word)))
    while alive:
        top = max(word[p] for p in alive)
        picked = []
        index = 0
        charge = 0
        current = None
        for letter in range(1, top + 1):
            candidates = [p for p in alive if word[p] == letter]
            # the partition-weight precondition guarantees every letter is still present
            assert candidates, "letter missing during subword extraction"
            if current is None:
                nxt = candidates[0]
            else:
                right = [p for p in candidates if p > current]
                if right:
                    nxt = right[0]
                else:
                    nxt = candidates[0]
                    index += 1
            charge += index
            picked.append(nxt)
            current = nxt
        chosen = set(picked)
        alive = [p for p in alive if p not in chosen]
        yield sorted(picked), charge


def charge(word: Sequence[int]) -> int:
    """Charge of a word whose letter multiplicities form a partition."""
    word = list(word)
    _check_charge_word(word)
    return sum(c for _, c in _extract(word))


def charge_tableau(tableau: Tableau) -> int:
    return charge(reading_word(tableau))


def parse_word(text: str) -> Tuple[int, ...]:
    """``"2111423"`` or ``"2,1,1,1,4,2,3"`` -> letters."""
    text = text.strip()
    try:
        if "," in text:
            return tuple(int(tok) for tok in text.split(","))
        return tuple(int(ch) for ch in text)
    except ValueError:
        raise PartitionError(f"malformed word {text!r}") from None

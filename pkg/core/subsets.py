"""
Subset algebra over the ground set N = {x_1, ..., x_n}.

Element x_i occupies bit i-1 of a Python int, so masks are unbounded in n.
Lexicographic rank reverses that layout (x_1 is the most significant
position), which is the row/column order of the dense Fourier matrices.
Hot paths work on raw ints and on packed uint64 word matrices; SubsetMask
is the validated value type used at the API surface.
"""

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Sequence, Tuple

import numpy as np

from .exceptions import InvalidInputError

# Pairwise kernels process at most this many uint64 words per chunk
_CHUNK_WORDS = 1 << 22


def popcount(bits: int) -> int:
    return bits.bit_count()


def full_bits(n: int) -> int:
    return (1 << n) - 1


def lex_rank(bits: int, n: int) -> int:
    """Index of the set in lexicographic indicator order (x_1 most significant)."""
    if n == 0:
        return 0
    return int(format(bits, f"0{n}b")[::-1], 2)


def from_lex_rank(rank: int, n: int) -> int:
    """Inverse of lex_rank; the bit reversal is an involution."""
    return lex_rank(rank, n)


def order_key(bits: int, n: int) -> Tuple[int, int]:
    """(cardinality, rank) order; extends subset inclusion linearly."""
    return popcount(bits), lex_rank(bits, n)


def elements_of(bits: int) -> List[int]:
    """Sorted 1-based element indices of a mask."""
    out = []
    index = 1
    while bits:
        if bits & 1:
            out.append(index)
        bits >>= 1
        index += 1
    return out


def bits_from_elements(elements: Iterable[int], n: int) -> int:
    bits = 0
    for element in elements:
        if not 1 <= int(element) <= n:
            raise InvalidInputError(f"Element index {element} outside 1..{n}")
        bits |= 1 << (int(element) - 1)
    return bits


def check_bits(bits: int, n: int) -> int:
    """Validate a raw mask against n and return it."""
    if n < 1:
        raise InvalidInputError(f"Ground set size must be positive, got {n}")
    if bits < 0 or bits >> n:
        raise InvalidInputError(f"Mask {bits:#x} has bits outside the ground set of size {n}")
    return bits


def word_count(n: int) -> int:
    return max(1, (n + 63) // 64)


def masks_to_words(masks: Sequence[int], n: int) -> np.ndarray:
    """Pack masks into a (len(masks), W) little-endian uint64 matrix."""
    w = word_count(n)
    buffer = b"".join(int(m).to_bytes(8 * w, "little") for m in masks)
    return np.frombuffer(buffer, dtype="<u8").reshape(len(masks), w)


def indicators_to_words(indicators: np.ndarray) -> np.ndarray:
    """Pack an (S, n) boolean membership matrix into (S, W) uint64 words."""
    indicators = np.asarray(indicators, dtype=bool)
    w = word_count(indicators.shape[1])
    packed = np.packbits(indicators, axis=1, bitorder="little")
    pad = 8 * w - packed.shape[1]
    if pad:
        packed = np.pad(packed, ((0, 0), (0, pad)))
    return np.ascontiguousarray(packed).view("<u8")


def indicators_to_masks(indicators: np.ndarray) -> List[int]:
    packed = np.packbits(np.asarray(indicators, dtype=bool), axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


def masks_to_indicators(masks: Sequence[int], n: int) -> np.ndarray:
    words = masks_to_words(masks, n)
    bits = np.unpackbits(words.view(np.uint8), axis=1, bitorder="little")
    return bits[:, :n].astype(bool)


def lex_indicators(n: int, start: int = 0, stop: int = None) -> np.ndarray:
    """Membership matrix of the sets with rank in [start, stop), one row per rank."""
    stop = (1 << n) if stop is None else stop
    ranks = np.arange(start, stop, dtype=np.int64)
    shifts = np.arange(n - 1, -1, -1, dtype=np.int64)
    return ((ranks[:, None] >> shifts[None, :]) & 1).astype(bool)


def _pairwise(rows: np.ndarray, cols: np.ndarray, kernel) -> np.ndarray:
    n_rows, n_cols = rows.shape[0], cols.shape[0]
    out = np.empty((n_rows, n_cols), dtype=bool)
    if n_rows == 0 or n_cols == 0:
        return out
    step = max(1, _CHUNK_WORDS // max(1, n_cols * rows.shape[1]))
    for start in range(0, n_rows, step):
        block = rows[start:start + step]
        out[start:start + step] = kernel(block[:, None, :], cols[None, :, :])
    return out


def subset_matrix(rows: np.ndarray, cols: np.ndarray) -> np.ndarray:
    """Entry [j, l] is True iff cols[l] is a subset of rows[j]."""
    return _pairwise(rows, cols, lambda r, c: ((c & ~r) == 0).all(axis=2))


def disjoint_matrix(rows: np.ndarray, cols: np.ndarray) -> np.ndarray:
    """Entry [j, l] is True iff rows[j] and cols[l] share no element."""
    return _pairwise(rows, cols, lambda r, c: ((r & c) == 0).all(axis=2))


def _parity_kernel(r: np.ndarray, c: np.ndarray) -> np.ndarray:
    folded = np.bitwise_xor.reduce(r & c, axis=2)
    for shift in (32, 16, 8, 4, 2, 1):
        folded = folded ^ (folded >> np.uint64(shift))
    return (folded & np.uint64(1)).astype(bool)


def parity_matrix(rows: np.ndarray, cols: np.ndarray) -> np.ndarray:
    """Entry [j, l] is True iff |rows[j] & cols[l]| is odd."""
    return _pairwise(rows, cols, _parity_kernel)


def random_indicators(rng: np.random.Generator, count: int, n: int) -> np.ndarray:
    """count uniformly random subsets of N as a membership matrix."""
    return rng.integers(0, 2, size=(count, n), dtype=np.uint8).astype(bool)


def sample_distinct_masks(rng: np.random.Generator, n_bits: int, count: int) -> List[int]:
    """count distinct uniformly random subsets of {x_1, ..., x_n_bits}."""
    total = 1 << n_bits
    if count > total:
        raise InvalidInputError(f"Cannot draw {count} distinct subsets from {total}")
    if total <= max(4 * count, 64):
        return [int(p) for p in rng.choice(total, size=count, replace=False)]

    seen = set()
    out: List[int] = []
    while len(out) < count:
        draw = random_indicators(rng, count - len(out), n_bits)
        for mask in indicators_to_masks(draw):
            if mask not in seen:
                seen.add(mask)
                out.append(mask)
    return out


@dataclass(frozen=True)
class SubsetMask:
    """A subset of the ground set, stored as bits with x_i at bit i-1."""

    bits: int
    n: int

    def __post_init__(self):
        check_bits(self.bits, self.n)

    @classmethod
    def empty(cls, n: int) -> "SubsetMask":
        return cls(0, n)

    @classmethod
    def full(cls, n: int) -> "SubsetMask":
        return cls(full_bits(n), n)

    @classmethod
    def from_elements(cls, elements: Iterable[int], n: int) -> "SubsetMask":
        """Build from 1-based element indices."""
        return cls(bits_from_elements(elements, n), n)

    @classmethod
    def from_rank(cls, rank: int, n: int) -> "SubsetMask":
        if not 0 <= rank < (1 << n):
            raise InvalidInputError(f"Rank {rank} outside 0..2^{n}-1")
        return cls(from_lex_rank(rank, n), n)

    def _other(self, other: "SubsetMask") -> int:
        if not isinstance(other, SubsetMask):
            raise InvalidInputError(f"Expected SubsetMask, got {type(other).__name__}")
        if other.n != self.n:
            raise InvalidInputError(f"Ground set mismatch: n={self.n} vs n={other.n}")
        return other.bits

    def union(self, other: "SubsetMask") -> "SubsetMask":
        return SubsetMask(self.bits | self._other(other), self.n)

    def intersection(self, other: "SubsetMask") -> "SubsetMask":
        return SubsetMask(self.bits & self._other(other), self.n)

    def difference(self, other: "SubsetMask") -> "SubsetMask":
        return SubsetMask(self.bits & ~self._other(other), self.n)

    def symmetric_difference(self, other: "SubsetMask") -> "SubsetMask":
        return SubsetMask(self.bits ^ self._other(other), self.n)

    def complement(self) -> "SubsetMask":
        return SubsetMask(full_bits(self.n) & ~self.bits, self.n)

    def is_subset(self, other: "SubsetMask") -> bool:
        return self.bits & ~self._other(other) == 0

    @property
    def cardinality(self) -> int:
        return popcount(self.bits)

    @property
    def rank(self) -> int:
        return lex_rank(self.bits, self.n)

    @property
    def elements(self) -> List[int]:
        return elements_of(self.bits)

    __or__ = union
    __and__ = intersection
    __sub__ = difference
    __xor__ = symmetric_difference
    __invert__ = complement
    __le__ = is_subset

    def __len__(self) -> int:
        return self.cardinality

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, element: int) -> bool:
        return 1 <= element <= self.n and bool(self.bits >> (element - 1) & 1)

    def __str__(self) -> str:
        if not self.bits:
            return "{}"
        return "{" + ",".join(f"x{i}" for i in self.elements) + "}"


def as_bits(mask, n: int) -> int:
    """Accept a SubsetMask or a raw int and return validated bits."""
    if isinstance(mask, SubsetMask):
        if mask.n != n:
            raise InvalidInputError(f"Mask is over n={mask.n}, expected n={n}")
        return mask.bits
    if isinstance(mask, (int, np.integer)) and not isinstance(mask, bool):
        return check_bits(int(mask), n)
    raise InvalidInputError(f"Cannot interpret {mask!r} as a subset mask")

"""Fixed-capacity bit vectors over local vertex ids.

All candidate-set algebra during a traversal (P, X_P) runs on these.
The backing store is a single Python integer; ``words`` exposes the
equivalent 64-bit word layout for layout-sensitive checks.
"""

from __future__ import annotations

from typing import Iterable, Iterator

WORD_BITS = 64


def round_up_capacity(nbits: int) -> int:
    """Round a bit count up to a whole number of 64-bit words (minimum one)."""
    words = max(1, -(-nbits // WORD_BITS))
    return words * WORD_BITS


class Bitset:
    """A set of small non-negative integers packed into machine words.

    ``capacity`` is fixed at construction; bits at or above it are never
    set. Binary operations require equal capacities.
    """

    __slots__ = ("bits", "capacity")

    def __init__(self, capacity: int, members: Iterable[int] = ()) -> None:
        if capacity < 0:
            raise ValueError("capacity must be non-negative")
        self.capacity = capacity
        bits = 0
        for m in members:
            if not 0 <= m < capacity:
                raise ValueError(f"member {m} outside capacity {capacity}")
            bits |= 1 << m
        self.bits = bits

    @classmethod
    def from_bits(cls, capacity: int, bits: int) -> "Bitset":
        if bits < 0 or bits >> capacity:
            raise ValueError("bits outside capacity")
        s = cls(capacity)
        s.bits = bits
        return s

    @property
    def words(self) -> list[int]:
        """The 64-bit word layout, least-significant word first."""
        n = max(1, -(-self.capacity // WORD_BITS))
        mask = (1 << WORD_BITS) - 1
        return [(self.bits >> (WORD_BITS * i)) & mask for i in range(n)]

    def _check(self, other: "Bitset") -> None:
        if self.capacity != other.capacity:
            raise ValueError(
                f"capacity mismatch: {self.capacity} vs {other.capacity}"
            )

    def intersect(self, other: "Bitset") -> "Bitset":
        self._check(other)
        return Bitset.from_bits(self.capacity, self.bits & other.bits)

    def subtract(self, other: "Bitset") -> "Bitset":
        self._check(other)
        return Bitset.from_bits(self.capacity, self.bits & ~other.bits)

    def union(self, other: "Bitset") -> "Bitset":
        self._check(other)
        return Bitset.from_bits(self.capacity, self.bits | other.bits)

    __and__ = intersect
    __sub__ = subtract
    __or__ = union

    def popcount(self) -> int:
        return self.bits.bit_count()

    __len__ = popcount

    def add(self, member: int) -> None:
        if not 0 <= member < self.capacity:
            raise ValueError(f"member {member} outside capacity {self.capacity}")
        self.bits |= 1 << member

    def discard(self, member: int) -> None:
        self.bits &= ~(1 << member)

    def __contains__(self, member: int) -> bool:
        return 0 <= member < self.capacity and (self.bits >> member) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __bool__(self) -> bool:
        return self.bits != 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Bitset):
            return NotImplemented
        return self.capacity == other.capacity and self.bits == other.bits

    def __hash__(self) -> int:
        return hash((self.capacity, self.bits))

    def __repr__(self) -> str:
        return f"Bitset({self.capacity}, {sorted(self)})"


def iter_bits(bits: int) -> Iterator[int]:
    """Yield the set bit positions of a non-negative integer, ascending."""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low

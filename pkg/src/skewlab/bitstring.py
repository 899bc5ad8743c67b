"""Fixed-length binary strings and the elementary relations on them.

A string of length n (1 <= n <= 64) fits in one machine word. In the
literal form ("0110") the first character is position 1; internally
position i sits at bit (n - i), so the integer ``bits`` of two strings of
equal length compares exactly like their literals compare lexicographically.

The raw-integer kernels (``influence_bits`` and friends) are shared by the
counting and search modules, which iterate over millions of strings and
cannot afford object wrappers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_LENGTH = 64


class LengthMismatchError(ValueError):
    """Raised when two strings of different lengths are combined."""


def influence_bits(bits: int, n: int) -> int:
    """Raw-integer influence: bit j is set iff ``bits`` has a set neighbor."""
    return ((bits << 1) | (bits >> 1)) & ((1 << n) - 1)


def gamma_bits(bits: int, n: int) -> int:
    """Raw-integer gamma: weight of the string plus weight of its influence."""
    return bits.bit_count() + influence_bits(bits, n).bit_count()


def skewincident_bits(x: int, y: int) -> bool:
    """Raw-integer skewincidence test for two equal-length strings."""
    return (((x >> 1) & y) | (x & (y >> 1))) != 0


@dataclass(frozen=True)
class BitString:
    """An immutable binary word of fixed length."""

    length: int
    bits: int

    def __post_init__(self) -> None:
        if not 1 <= self.length <= MAX_LENGTH:
            raise ValueError(f"length must be in [1, {MAX_LENGTH}], got {self.length}")
        if not 0 <= self.bits < 1 << self.length:
            raise ValueError(f"bits 0b{self.bits:b} out of range for length {self.length}")

    @classmethod
    def from_string(cls, literal: str) -> BitString:
        """Parse a literal such as "0110"; the first character is position 1."""
        if not literal or literal.strip("01"):
            raise ValueError(f"not a binary literal: {literal!r}")
        return cls(len(literal), int(literal, 2))

    def __str__(self) -> str:
        return format(self.bits, f"0{self.length}b")

    def get(self, position: int) -> int:
        """Bit value at a 1-based position."""
        self._check_position(position)
        return self.bits >> (self.length - position) & 1

    def flip(self, position: int) -> BitString:
        """Copy of this string with the bit at a 1-based position inverted."""
        self._check_position(position)
        return BitString(self.length, self.bits ^ (1 << (self.length - position)))

    def reverse(self) -> BitString:
        """Copy with the positions read right to left."""
        rev = 0
        b = self.bits
        for _ in range(self.length):
            rev = (rev << 1) | (b & 1)
            b >>= 1
        return BitString(self.length, rev)

    def _check_position(self, position: int) -> None:
        if not 1 <= position <= self.length:
            raise ValueError(f"position {position} out of [1, {self.length}]")


def _check_same_length(x: BitString, y: BitString) -> None:
    if x.length != y.length:
        raise LengthMismatchError(
            f"incompatible operands: lengths {x.length} and {y.length}"
        )


def weight(x: BitString) -> int:
    """Number of set positions."""
    return x.bits.bit_count()


def support(x: BitString) -> frozenset[int]:
    """Set of 1-based positions carrying a 1."""
    return frozenset(i for i in range(1, x.length + 1) if x.get(i))


def influence(x: BitString) -> BitString:
    """String with a 1 wherever ``x`` has a 1 in an adjacent position.

    Position j of the result is set iff position j-1 or j+1 of ``x`` is set;
    out-of-range neighbors count as 0.
    """
    return BitString(x.length, influence_bits(x.bits, x.length))


def gamma(x: BitString) -> int:
    """weight(x) + weight(influence(x)); ranges over [0, 2n]."""
    return gamma_bits(x.bits, x.length)


def skewincident(x: BitString, y: BitString) -> bool:
    """True iff some position i has x_i = y_{i+1} = 1 or x_{i+1} = y_i = 1.

    Symmetric in its arguments; always false for length-1 strings.
    """
    _check_same_length(x, y)
    return skewincident_bits(x.bits, y.bits)


def leq(x: BitString, y: BitString) -> bool:
    """Coordinatewise dominance: every set position of x is set in y."""
    _check_same_length(x, y)
    return x.bits & ~y.bits == 0


def comparable(x: BitString, y: BitString) -> bool:
    """True iff x <= y coordinatewise or y <= x coordinatewise."""
    _check_same_length(x, y)
    return x.bits & ~y.bits == 0 or y.bits & ~x.bits == 0


def is_fibonacci(x: BitString) -> bool:
    """True iff no two consecutive positions are both 1."""
    return x.bits & (x.bits >> 1) == 0


def all_strings(n: int) -> Iterator[BitString]:
    """All length-n strings in lexicographic order."""
    if not 1 <= n <= MAX_LENGTH:
        raise ValueError(f"length must be in [1, {MAX_LENGTH}], got {n}")
    for bits in range(1 << n):
        yield BitString(n, bits)


@dataclass(frozen=True)
class Family:
    """A set of distinct binary strings of one common length."""

    length: int
    members: frozenset[BitString]

    def __post_init__(self) -> None:
        if not 1 <= self.length <= MAX_LENGTH:
            raise ValueError(f"length must be in [1, {MAX_LENGTH}], got {self.length}")
        for m in self.members:
            if m.length != self.length:
                raise ValueError(
                    f"member {m} has length {m.length}, family has {self.length}"
                )

    @classmethod
    def of(cls, length: int, members: Iterable[BitString]) -> Family:
        return cls(length, frozenset(members))

    @classmethod
    def from_literals(cls, literals: list[str], length: int | None = None) -> Family:
        members = frozenset(BitString.from_string(s) for s in literals)
        if length is None:
            if not members:
                raise ValueError("cannot infer length of an empty family")
            length = next(iter(members)).length
        return cls(length, members)

    def sorted_members(self) -> list[BitString]:
        """Members in lexicographic order."""
        return sorted(self.members, key=lambda b: b.bits)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, item: object) -> bool:
        return item in self.members

    def __iter__(self) -> Iterator[BitString]:
        return iter(self.sorted_members())

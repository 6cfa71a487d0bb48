"""Core pieces of the matching game: bit strings, instances, round scoring.

One round: Alice holds an m-bit string x and answers with an n-bit string a,
where n = ceil(log2 m).  Bob holds a perfect matching y on {0..m-1} and
answers with an edge {i, j} of y plus an n-bit string b2.  The round is won
exactly when the edge belongs to y and

    x_i xor x_j  ==  dot(enc(i) xor enc(j), a xor b2)

with enc(k) the big-endian n-bit binary form of k and dot the GF(2) inner
product.  Everything here is immutable and pure, so values can be shared
freely across threads.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterator

from .errors import ValidationError

if TYPE_CHECKING:
    from .matchings import PerfectMatching

__all__ = [
    "BitString",
    "Edge",
    "GameInstance",
    "Question",
    "Answer",
    "encode_index",
    "dot",
    "wins_round",
]


@dataclass(frozen=True, slots=True)
class BitString:
    """Fixed-width binary word, most significant bit first.

    The textual form is the plain run of 0/1 characters, e.g. ``"0110"``.
    Indexing follows the text: ``b[0]`` is the leftmost (most significant)
    bit.  Width is fixed at construction and preserved by xor.
    """

    value: int
    length: int

    def __post_init__(self):
        if self.length < 1:
            raise ValidationError("bit string length must be positive")
        if not 0 <= self.value < (1 << self.length):
            raise ValidationError(
                f"value {self.value} does not fit in {self.length} bits"
            )

    @classmethod
    def parse(cls, text: str) -> "BitString":
        if not text or any(ch not in "01" for ch in text):
            raise ValidationError(f"not a bit string: {text!r}")
        return cls(int(text, 2), len(text))

    @classmethod
    def from_bits(cls, bits) -> "BitString":
        value = 0
        count = 0
        for b in bits:
            if b not in (0, 1):
                raise ValidationError(f"bit must be 0 or 1, got {b!r}")
            value = (value << 1) | b
            count += 1
        return cls(value, count)

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple(
            (self.value >> (self.length - 1 - i)) & 1 for i in range(self.length)
        )

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(f"bit index {i} out of range for length {self.length}")
        return (self.value >> (self.length - 1 - i)) & 1

    def __len__(self) -> int:
        return self.length

    def __iter__(self) -> Iterator[int]:
        return iter(self.bits)

    def __xor__(self, other: "BitString") -> "BitString":
        if not isinstance(other, BitString):
            return NotImplemented
        if other.length != self.length:
            raise ValidationError(
                f"length mismatch: {self.length} vs {other.length}"
            )
        return BitString(self.value ^ other.value, self.length)

    def complement(self) -> "BitString":
        return BitString(self.value ^ ((1 << self.length) - 1), self.length)

    def __str__(self) -> str:
        return format(self.value, f"0{self.length}b")


@dataclass(frozen=True, slots=True)
class Edge:
    """Unordered pair of distinct nonnegative indices, stored with i < j.

    Textual form: ``"i-j"`` in decimal with i < j.
    """

    i: int
    j: int

    def __post_init__(self):
        if self.i == self.j:
            raise ValidationError(f"edge endpoints must differ, got {self.i}-{self.j}")
        if self.i < 0 or self.j < 0:
            raise ValidationError("edge endpoints must be nonnegative")
        if self.i > self.j:
            lo, hi = self.j, self.i
            object.__setattr__(self, "i", lo)
            object.__setattr__(self, "j", hi)

    @classmethod
    def parse(cls, text: str) -> "Edge":
        match = re.fullmatch(r"(\d+)-(\d+)", text)
        if not match:
            raise ValidationError(f"not an edge: {text!r} (expected 'i-j')")
        i, j = int(match.group(1)), int(match.group(2))
        if i >= j:
            raise ValidationError(f"edge must be written with i < j: {text!r}")
        return cls(i, j)

    def __iter__(self) -> Iterator[int]:
        yield self.i
        yield self.j

    def __str__(self) -> str:
        return f"{self.i}-{self.j}"


@dataclass(frozen=True, slots=True)
class GameInstance:
    """One game size: inputs have m bits, answers have n = ceil(log2 m) bits."""

    m: int

    def __post_init__(self):
        if self.m < 2 or self.m % 2:
            raise ValidationError(f"m must be an even integer >= 2, got {self.m}")

    @property
    def n(self) -> int:
        return (self.m - 1).bit_length()


@dataclass(frozen=True, slots=True)
class Question:
    """One question (x, y): Alice's bit string and Bob's matching."""

    x: BitString
    y: "PerfectMatching"


@dataclass(frozen=True, slots=True)
class Answer:
    """One answer: Bob's edge and b2 together with Alice's a."""

    edge: Edge
    a: BitString
    b2: BitString


def encode_index(i: int, inst: GameInstance) -> BitString:
    """Big-endian binary form of an index, zero-padded on the left to n bits."""
    if not 0 <= i < inst.m:
        raise ValidationError(f"index {i} out of range for m={inst.m}")
    return BitString(i, inst.n)


def dot(u: BitString, v: BitString) -> int:
    """GF(2) inner product: xor over the positionwise ands."""
    if u.length != v.length:
        raise ValidationError(f"length mismatch: {u.length} vs {v.length}")
    return (u.value & v.value).bit_count() & 1


def _edge_condition(m: int, x_value: int, i: int, j: int, ab_value: int) -> bool:
    """Parity equality for edge {i, j}, given a xor b2 as an integer.

    Callers guarantee 0 <= i, j < m.  Index k of the zero-padded binary form
    of k is k itself, so enc(i) xor enc(j) is just i ^ j.
    """
    lhs = ((x_value >> (m - 1 - i)) ^ (x_value >> (m - 1 - j))) & 1
    return lhs == (((i ^ j) & ab_value).bit_count() & 1)


def wins_round(inst: GameInstance, question: Question, answer: Answer) -> bool:
    """Adjudicate one round.

    True exactly when the answered edge lies in y and the parity rule holds.
    The promise covers every (x, y) pair, so there is no vacuous-win clause.
    """
    x, y = question.x, question.y
    if x.length != inst.m:
        raise ValidationError(f"x has {x.length} bits, expected {inst.m}")
    if y.m != inst.m:
        raise ValidationError(f"matching covers {y.m} vertices, expected {inst.m}")
    a, b2, edge = answer.a, answer.b2, answer.edge
    if a.length != inst.n:
        raise ValidationError(f"a has {a.length} bits, expected {inst.n}")
    if b2.length != inst.n:
        raise ValidationError(f"b2 has {b2.length} bits, expected {inst.n}")
    if edge.j >= inst.m:
        raise ValidationError(f"edge {edge} out of range for m={inst.m}")
    if edge not in y:
        return False
    return _edge_condition(inst.m, x.value, edge.i, edge.j, a.value ^ b2.value)

"""Projective Pauli operators on n qubits, stored as paired GF(2) bit vectors.

The X and Z supports are integer bitmasks: qubit q carries I/X/Z/Y according
to (x bit, z bit) = (0,0)/(1,0)/(0,1)/(1,1).  Global phase is not tracked, so
composition is plain bitwise XOR of the two supports and every operator is its
own inverse.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

_LETTER_OF_BITS = {(0, 0): "I", (1, 0): "X", (0, 1): "Z", (1, 1): "Y"}
_BITS_OF_LETTER = {"I": (0, 0), "X": (1, 0), "Z": (0, 1), "Y": (1, 1)}


class ErrorModel(enum.Enum):
    """Weight accounting for error operators.

    FULL charges 1 per non-identity site.  XZ_ONLY charges 1 for X, 1 for Z
    and 2 for Y, i.e. a Y counts as an X error plus a Z error on one qubit.
    """

    FULL = "full"
    XZ_ONLY = "xz"


@dataclass(frozen=True)
class PauliOperator:
    """An n-qubit Pauli up to phase."""

    n: int
    xpart: int
    zpart: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("operator needs at least one qubit")
        mask = (1 << self.n) - 1
        if not 0 <= self.xpart <= mask or not 0 <= self.zpart <= mask:
            raise ValueError("support bits out of range for %d qubits" % self.n)

    def letter(self, q: int) -> str:
        """Single-qubit letter at position q."""
        return _LETTER_OF_BITS[(self.xpart >> q) & 1, (self.zpart >> q) & 1]

    def support(self) -> tuple[int, ...]:
        """Indices of all non-identity sites, ascending."""
        both = self.xpart | self.zpart
        return tuple(q for q in range(self.n) if (both >> q) & 1)

    def is_identity(self) -> bool:
        return self.xpart == 0 and self.zpart == 0

    def __str__(self) -> str:
        return format_pauli(self)


def identity(n: int) -> PauliOperator:
    return PauliOperator(n, 0, 0)


def from_letters(n: int, letters: dict[int, str]) -> PauliOperator:
    """Build an operator from a sparse {qubit: letter} mapping."""
    x = z = 0
    for q, letter in letters.items():
        if not 0 <= q < n:
            raise ValueError(f"qubit {q} out of range for n={n}")
        try:
            xb, zb = _BITS_OF_LETTER[letter]
        except KeyError:
            raise ValueError(f"unknown Pauli letter {letter!r}") from None
        x |= xb << q
        z |= zb << q
    return PauliOperator(n, x, z)


def parse_pauli(text: str) -> PauliOperator:
    """Parse a string of I/X/Y/Z letters; `_` is accepted as identity."""
    if not text:
        raise ValueError("empty Pauli string")
    x = z = 0
    for q, ch in enumerate(text):
        if ch == "_":
            continue
        if ch not in _BITS_OF_LETTER:
            raise ValueError(f"invalid Pauli letter {ch!r} at position {q}")
        xb, zb = _BITS_OF_LETTER[ch]
        x |= xb << q
        z |= zb << q
    return PauliOperator(len(text), x, z)


def format_pauli(p: PauliOperator) -> str:
    """Inverse of parse_pauli (identity renders as 'I')."""
    return "".join(p.letter(q) for q in range(p.n))


def compose(p: PauliOperator, q: PauliOperator) -> PauliOperator:
    """Projective product: XOR of X supports and of Z supports."""
    if p.n != q.n:
        raise ValueError(f"length mismatch: {p.n} vs {q.n}")
    return PauliOperator(p.n, p.xpart ^ q.xpart, p.zpart ^ q.zpart)


def commutes(p: PauliOperator, q: PauliOperator) -> bool:
    """Symplectic-form test: even number of anticommuting sites."""
    if p.n != q.n:
        raise ValueError(f"length mismatch: {p.n} vs {q.n}")
    return ((p.xpart & q.zpart).bit_count() + (p.zpart & q.xpart).bit_count()) % 2 == 0


def weight(p: PauliOperator, model: ErrorModel) -> int:
    """Model weight of an operator (see ErrorModel)."""
    if model is ErrorModel.FULL:
        return (p.xpart | p.zpart).bit_count()
    return p.xpart.bit_count() + p.zpart.bit_count()

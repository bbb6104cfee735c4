"""Stabilizer-group validation, encoded-qubit counting, logical extraction,
and classification of Pauli errors against a code.

All operations are pure; the elimination forms derived from a code are cached
on the (immutable, hashable) code object and shared between calls.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass
from typing import TYPE_CHECKING

from . import gf2
from .pauli import PauliOperator, commutes

if TYPE_CHECKING:  # pragma: no cover
    from .lattice import StabilizerCode


class CodeError(ValueError):
    """Raised when an operation is applied to an unusable code."""


@dataclass(frozen=True)
class LogicalPair:
    """Anticommuting logical pair for one encoded qubit.

    Representatives are canonical for a fixed code description (fixed pivot
    order) but only their commutation pattern is contractual.
    """

    xbar: PauliOperator
    zbar: PauliOperator
    index: int


class ErrorKind(enum.Enum):
    DETECTED = "detected"
    STABILIZER = "stabilizer"
    LOGICAL = "logical"


@dataclass(frozen=True)
class ErrorClass:
    """Classification of a Pauli error.

    logical_action is set only for LOGICAL errors: one (anticommutes with
    xbar, anticommutes with zbar) pair per encoded qubit.
    """

    variant: ErrorKind
    logical_action: tuple[tuple[bool, bool], ...] | None = None

    def acts_on(self, index: int) -> bool:
        if self.logical_action is None:
            return False
        ax, az = self.logical_action[index]
        return ax or az


@dataclass(frozen=True)
class ValidationReport:
    n: int
    num_generators: int
    commuting: bool
    rank: int
    offending: tuple[tuple[int, int], ...]

    @property
    def ok(self) -> bool:
        return self.commuting

    @property
    def logical_count(self) -> int:
        return self.n - self.rank

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "num_generators": self.num_generators,
            "commuting": self.commuting,
            "rank": self.rank,
            "logical_count": self.logical_count,
            "offending_pairs": [list(p) for p in self.offending],
        }

    def to_text(self) -> str:
        lines = [
            f"n                = {self.n}",
            f"generators       = {self.num_generators}",
            f"all pairs commute: {'yes' if self.commuting else 'NO'}",
            f"symplectic rank  = {self.rank}",
            f"encoded qubits k = {self.logical_count}",
        ]
        for i, j in self.offending:
            lines.append(f"  anticommuting pair: generator {i} vs {j}")
        return "\n".join(lines)


class _Algebra:
    """Cached elimination forms for one code."""

    def __init__(self, code: "StabilizerCode") -> None:
        n = code.n
        self.n = n
        self.gens = [g for g, _ in code.generators]
        self.stab_rows = [g.xpart | (g.zpart << n) for g in self.gens]
        self.basis, self.pivots = gf2.row_reduce(self.stab_rows)
        self.rank = len(self.basis)
        # Rows of the symplectic-form map e -> (<e, g>)_g; its kernel is the
        # normalizer of the stabilizer group.
        flip_rows = [g.zpart | (g.xpart << n) for g in self.gens]
        self.normalizer = gf2.kernel(flip_rows, 2 * n)
        self._pairs: list[tuple[int, int]] | None = None

    def sym(self, a: int, b: int) -> int:
        n = self.n
        mask = (1 << n) - 1
        bx, bz = b & mask, b >> n
        return ((a & (bz | (bx << n))).bit_count()) & 1

    def logical_pairs(self) -> list[tuple[int, int]]:
        if self._pairs is not None:
            return self._pairs
        basis = list(self.basis)
        pivots = list(self.pivots)
        cands: list[int] = []
        for v in self.normalizer:
            r = gf2.reduce_against(v, basis, pivots)
            if r == 0:
                continue
            piv = r.bit_length() - 1
            for i, b in enumerate(basis):
                if (b >> piv) & 1:
                    basis[i] = b ^ r
            basis.append(r)
            pivots.append(piv)
            cands.append(r)
        pairs: list[tuple[int, int]] = []
        rem = cands
        while rem:
            u = rem[0]
            j = next(i for i in range(1, len(rem)) if self.sym(u, rem[i]) == 1)
            w = rem[j]
            rest = [v for i, v in enumerate(rem) if i not in (0, j)]
            rem = []
            for v in rest:
                if self.sym(v, w):
                    v ^= u
                if self.sym(v, u):
                    v ^= w
                rem.append(v)
            pairs.append((u, w))
        self._pairs = pairs
        return pairs


@functools.lru_cache(maxsize=64)
def _algebra(code: "StabilizerCode") -> _Algebra:
    return _Algebra(code)


def validate(code: "StabilizerCode") -> ValidationReport:
    """All-pairs commutation check plus GF(2) symplectic rank."""
    gens = [g for g, _ in code.generators]
    offending = []
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            if not commutes(gens[i], gens[j]):
                offending.append((i, j))
    alg = _algebra(code)
    return ValidationReport(
        n=code.n,
        num_generators=len(gens),
        commuting=not offending,
        rank=alg.rank,
        offending=tuple(offending),
    )


def _require_valid(code: "StabilizerCode") -> _Algebra:
    report = validate(code)
    if not report.ok:
        raise CodeError(f"generators do not commute: pairs {report.offending[:4]}")
    return _algebra(code)


def logical_count(code: "StabilizerCode") -> int:
    """k = n - rank(generators)."""
    alg = _require_valid(code)
    return code.n - alg.rank


def extract_logicals(code: "StabilizerCode") -> list[LogicalPair]:
    """Anticommuting logical pairs, one per encoded qubit.

    Found as a basis of the normalizer modulo the stabilizer row space,
    paired by symplectic Gram-Schmidt.  Deterministic for a fixed code.
    """
    alg = _require_valid(code)
    k = code.n - alg.rank
    if k == 0:
        raise CodeError("code encodes no qubits (k = 0)")
    n = code.n
    mask = (1 << n) - 1
    out = []
    for idx, (u, w) in enumerate(alg.logical_pairs()):
        xbar = PauliOperator(n, u & mask, u >> n)
        zbar = PauliOperator(n, w & mask, w >> n)
        out.append(LogicalPair(xbar=xbar, zbar=zbar, index=idx))
    assert len(out) == k
    return out


def syndrome(code: "StabilizerCode", e: PauliOperator) -> int:
    """Bitmask with bit i set iff e anticommutes with generator i."""
    if e.n != code.n:
        raise ValueError(f"length mismatch: {e.n} vs {code.n}")
    s = 0
    for i, (g, _) in enumerate(code.generators):
        anti = ((e.xpart & g.zpart).bit_count() + (e.zpart & g.xpart).bit_count()) & 1
        s |= anti << i
    return s


def classify(code: "StabilizerCode", e: PauliOperator) -> ErrorClass:
    """DETECTED / STABILIZER / LOGICAL split of an arbitrary error."""
    alg = _require_valid(code)
    if e.n != code.n:
        raise ValueError(f"length mismatch: {e.n} vs {code.n}")
    if syndrome(code, e) != 0:
        return ErrorClass(ErrorKind.DETECTED)
    vec = e.xpart | (e.zpart << code.n)
    if gf2.in_rowspace(vec, alg.basis, alg.pivots):
        return ErrorClass(ErrorKind.STABILIZER)
    action = []
    for u, w in alg.logical_pairs():
        action.append((alg.sym(vec, u) == 1, alg.sym(vec, w) == 1))
    return ErrorClass(ErrorKind.LOGICAL, tuple(action))

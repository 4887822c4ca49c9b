"""Dense linear algebra over GF(p): echelon forms, rank, nullspace, fixed points.

Pivoting always takes the first nonzero entry, so bases are reproducible.
Over GF(2) rows are packed into Python integers and eliminated with XOR.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np


@dataclass(frozen=True, eq=False)
class GFpMatrix:
    p: int
    entries: np.ndarray

    def __post_init__(self) -> None:
        if self.p < 2:
            raise ValueError("p must be at least 2")
        arr = np.array(self.entries, dtype=np.int64, copy=True)
        if arr.ndim != 2:
            arr = arr.reshape(len(arr), -1) if arr.size else np.zeros((len(arr), 0), dtype=np.int64)
        arr %= self.p
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], p: int, cols: int | None = None) -> "GFpMatrix":
        rows = [list(r) for r in rows]
        if not rows:
            return cls(p, np.zeros((0, cols or 0), dtype=np.int64))
        if cols is not None and any(len(r) != cols for r in rows):
            raise ValueError("row length does not match cols")
        if len({len(r) for r in rows}) > 1:
            raise ValueError("ragged rows")
        return cls(p, np.array(rows, dtype=np.int64))

    @classmethod
    def identity(cls, n: int, p: int) -> "GFpMatrix":
        return cls(p, np.eye(n, dtype=np.int64))

    @classmethod
    def zeros(cls, rows: int, cols: int, p: int) -> "GFpMatrix":
        return cls(p, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def from_permutation(cls, images: Sequence[int], p: int) -> "GFpMatrix":
        """Matrix sending basis vector i to basis vector images[i] (0-based)."""
        n = len(images)
        arr = np.zeros((n, n), dtype=np.int64)
        arr[list(images), range(n)] = 1
        return cls(p, arr)

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def _check_same_field(self, other: "GFpMatrix") -> None:
        if self.p != other.p:
            raise ValueError(f"field mismatch: GF({self.p}) vs GF({other.p})")

    def __matmul__(self, other: "GFpMatrix") -> "GFpMatrix":
        self._check_same_field(other)
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        return GFpMatrix(self.p, self.entries @ other.entries)

    def __add__(self, other: "GFpMatrix") -> "GFpMatrix":
        self._check_same_field(other)
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} + {other.shape}")
        return GFpMatrix(self.p, self.entries + other.entries)

    def __sub__(self, other: "GFpMatrix") -> "GFpMatrix":
        self._check_same_field(other)
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} - {other.shape}")
        return GFpMatrix(self.p, self.entries - other.entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GFpMatrix):
            return NotImplemented
        return self.p == other.p and self.shape == other.shape and bool((self.entries == other.entries).all())

    def __hash__(self) -> int:
        return hash((self.p, self.shape, self.entries.tobytes()))

    def apply(self, vector: Sequence[int]) -> tuple[int, ...]:
        return tuple(int(x) for x in (self.entries @ np.asarray(vector, dtype=np.int64)) % self.p)

    def tolist(self) -> list[list[int]]:
        return self.entries.tolist()

    def __repr__(self) -> str:
        return f"GFpMatrix(p={self.p}, shape={self.shape})"


def _rref_gf2(matrix: GFpMatrix) -> tuple[np.ndarray, list[int]]:
    cols = matrix.cols
    # bit c of a packed row holds column c
    packed = [int("".join(map(str, row[::-1])), 2) if cols else 0 for row in matrix.entries.tolist()]
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        bit = 1 << c
        k = next((i for i in range(r, len(packed)) if packed[i] & bit), None)
        if k is None:
            continue
        packed[r], packed[k] = packed[k], packed[r]
        pivot_row = packed[r]
        for i in range(len(packed)):
            if i != r and packed[i] & bit:
                packed[i] ^= pivot_row
        pivots.append(c)
        r += 1
        if r == len(packed):
            break
    out = np.zeros((r, cols), dtype=np.int64)
    for i in range(r):
        word = packed[i]
        for c in range(cols):
            out[i, c] = (word >> c) & 1
    return out, pivots


def _rref_gfp(matrix: GFpMatrix) -> tuple[np.ndarray, list[int]]:
    p = matrix.p
    a = matrix.entries.copy()
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nonzero = np.flatnonzero(a[r:, c])
        if not nonzero.size:
            continue
        k = r + int(nonzero[0])
        if k != r:
            a[[r, k]] = a[[k, r]]
        a[r] = a[r] * pow(int(a[r, c]), -1, p) % p
        column = a[:, c].copy()
        column[r] = 0
        hit = np.flatnonzero(column)
        if hit.size:
            a[hit] = (a[hit] - np.outer(column[hit], a[r])) % p
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rref(matrix: GFpMatrix) -> tuple[GFpMatrix, list[int]]:
    """Reduced row echelon form (nonzero rows only) and pivot columns."""
    reduced, pivots = _rref_gf2(matrix) if matrix.p == 2 else _rref_gfp(matrix)
    if not reduced.size:
        reduced = np.zeros((0, matrix.cols), dtype=np.int64)
    return GFpMatrix(matrix.p, reduced), pivots


def rank(matrix: GFpMatrix) -> int:
    return len(rref(matrix)[1])


def nullspace(matrix: GFpMatrix) -> GFpMatrix:
    """Basis of {x : Mx = 0}, one vector per row, one per free column."""
    reduced, pivots = rref(matrix)
    p, cols = matrix.p, matrix.cols
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, c in enumerate(pivots):
            basis[k, c] = -reduced.entries[i, f] % p
    return GFpMatrix(p, basis)


def fixed_subspace(actions: Sequence[GFpMatrix], dim: int | None = None, p: int | None = None) -> GFpMatrix:
    """Basis of the vectors fixed by every action (common kernel of g - 1).

    With no actions, ``dim`` and ``p`` describe the ambient space.
    """
    actions = list(actions)
    if not actions:
        if dim is None or p is None:
            raise ValueError("dim and p are required when no actions are given")
        return GFpMatrix.identity(dim, p)
    p = actions[0].p
    dim = actions[0].rows
    for g in actions:
        if g.p != p or g.shape != (dim, dim):
            raise ValueError(f"actions must be square {dim}x{dim} over GF({p}), got {g.shape} over GF({g.p})")
    one = GFpMatrix.identity(dim, p)
    stacked = np.vstack([(g - one).entries for g in actions])
    return nullspace(GFpMatrix(p, stacked))


def span_contains(basis: GFpMatrix, vector: Sequence[int]) -> bool:
    extended = GFpMatrix(basis.p, np.vstack([basis.entries, np.asarray(vector, dtype=np.int64)[None, :]]))
    return rank(extended) == rank(basis)


__all__ = ["GFpMatrix", "fixed_subspace", "nullspace", "rank", "rref", "span_contains"]

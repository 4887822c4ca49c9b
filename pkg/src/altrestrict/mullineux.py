"""The Mullineux bijection via rim symbols, with a crystal cross-check."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .nodes import Node, f_tilde, epsilon, good_node, remove_node
from .partitions import Partition, is_p_regular


@dataclass(frozen=True)
class MullineuxSymbol:
    """Columns (a_j, r_j): rim size and row count of the j-th iterate."""

    columns: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        cols = tuple((int(a), int(r)) for a, r in self.columns)
        if any(a < 1 or r < 1 for a, r in cols):
            raise ValueError(f"symbol entries must be positive: {cols}")
        object.__setattr__(self, "columns", cols)

    @property
    def n(self) -> int:
        return sum(a for a, _ in self.columns)

    def __str__(self) -> str:
        top = " ".join(str(a) for a, _ in self.columns)
        bottom = " ".join(str(r) for _, r in self.columns)
        return f"{top}\n{bottom}"


def _rim_rows(lam: Sequence[int], p: int) -> list[int]:
    """How many nodes the p-rim takes from each row."""
    h = len(lam)
    taken = [0] * h
    row = 1
    while True:
        r, c = row, lam[row - 1]
        size = 0
        while True:
            taken[r - 1] += 1
            size += 1
            if size == p:
                break
            below = lam[r] if r < h else 0
            if c - 1 >= max(below, 1):
                c -= 1
            elif r < h:
                r += 1
            else:
                break
        if r >= h:
            return taken
        row = r + 1


def p_rim(lam: Sequence[int], p: int) -> tuple[set[Node], int]:
    if not lam:
        raise ValueError("the empty partition has no rim")
    taken = _rim_rows(lam, p)
    nodes = {
        Node(r, c)
        for r, (part, k) in enumerate(zip(lam, taken), 1)
        for c in range(part - k + 1, part + 1)
    }
    return nodes, len(nodes)


def _strip_rim(lam: Sequence[int], p: int) -> tuple[Partition, int]:
    taken = _rim_rows(lam, p)
    return Partition(x - k for x, k in zip(lam, taken)), sum(taken)


@lru_cache(maxsize=1 << 15)
def _symbol_columns(lam: tuple, p: int) -> tuple[tuple[int, int], ...]:
    columns = []
    while lam:
        rest, size = _strip_rim(lam, p)
        columns.append((size, len(lam)))
        lam = tuple(rest)
    return tuple(columns)


def mullineux_symbol(lam: Sequence[int], p: int) -> MullineuxSymbol:
    return MullineuxSymbol(_symbol_columns(tuple(lam), p))


def _extensions(mu: Sequence[int], size: int, rows: int, p: int) -> Iterator[tuple[int, ...]]:
    """Shapes lam with `rows` rows containing mu, |lam/mu| = size, lam/mu inside the rim.

    Each row of a p-rim holds at most p nodes, and lam/mu avoids 2x2 squares,
    so lam_i <= min(mu_i + p, mu_{i-1} + 1, lam_{i-1}).
    """
    base = list(mu) + [0] * (rows - len(mu))

    def rec(i: int, left: int, prev: int) -> Iterator[tuple[int, ...]]:
        if i == rows:
            if left == 0:
                yield ()
            return
        lo = base[i]
        hi = base[i] + min(p, left)
        if i > 0:
            hi = min(hi, base[i - 1] + 1, prev)
        if i == rows - 1:
            lo = max(lo, 1, base[i] + left)
        for value in range(lo, hi + 1):
            for tail in rec(i + 1, left - (value - base[i]), value):
                yield (value,) + tail

    return rec(0, size, 0)


def partition_from_symbol(symbol: MullineuxSymbol, p: int) -> Partition:
    """Invert iterated rim removal, working from the last column back."""
    lam: Partition = Partition(())
    for size, rows in reversed(symbol.columns):
        if len(lam) > rows:
            raise ValueError(f"inconsistent symbol {symbol.columns}")
        found = [
            cand
            for cand in _extensions(lam, size, rows, p)
            if is_p_regular(cand, p) and _strip_rim(cand, p) == (lam, size)
        ]
        if len(found) != 1:
            raise ValueError(f"inconsistent symbol {symbol.columns}")
        lam = Partition(found[0])
    return lam


def _twisted_columns(columns: Sequence[tuple[int, int]], p: int) -> tuple[tuple[int, int], ...]:
    return tuple((a, a - r + (1 if a % p else 0)) for a, r in columns)


def _check_regular(lam: Sequence[int], p: int) -> None:
    if not is_p_regular(lam, p):
        raise ValueError(f"{tuple(lam)} is not {p}-regular")


def mullineux_map(lam: Sequence[int], p: int) -> Partition:
    _check_regular(lam, p)
    if p == 2:
        return Partition(lam)
    twisted = _twisted_columns(_symbol_columns(tuple(lam), p), p)
    return partition_from_symbol(MullineuxSymbol(twisted), p)


def good_node_history(lam: Sequence[int], p: int) -> list[int]:
    """Residues of good nodes removed one by one until the empty partition."""
    history = []
    current = Partition(lam)
    while current:
        i = next(i for i in range(p) if epsilon(current, i, p))
        history.append(i)
        current = remove_node(current, good_node(current, i, p))
    return history


def mullineux_map_crystal(lam: Sequence[int], p: int) -> Partition:
    """Negate every residue of the good-node history and rebuild."""
    _check_regular(lam, p)
    image = Partition(())
    for i in reversed(good_node_history(lam, p)):
        image = f_tilde(image, (-i) % p, p)
        if image is None:
            raise RuntimeError(f"crystal rebuild failed for {tuple(lam)}")
    return image


def is_mullineux_fixed(lam: Sequence[int], p: int) -> bool:
    """Fixed points are read off the symbol, since symbols determine partitions."""
    _check_regular(lam, p)
    if p == 2:
        return True
    columns = _symbol_columns(tuple(lam), p)
    return _twisted_columns(columns, p) == columns


__all__ = [
    "MullineuxSymbol",
    "good_node_history",
    "is_mullineux_fixed",
    "mullineux_map",
    "mullineux_map_crystal",
    "mullineux_symbol",
    "p_rim",
    "partition_from_symbol",
]

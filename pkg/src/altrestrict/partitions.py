"""Partitions, compositions, p-regularity and the splitting class."""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Iterable, Iterator


class Partition(tuple):
    """Weakly decreasing tuple of positive parts; trailing zeros are stripped."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        values = [int(x) for x in parts]
        while values and values[-1] == 0:
            values.pop()
        for a, b in zip(values, values[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {values}")
        if values and values[-1] < 0:
            raise ValueError(f"parts must be positive: {values}")
        return super().__new__(cls, values)

    @property
    def n(self) -> int:
        return sum(self)

    @property
    def h(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """The i-th part with 1-based indexing, zero beyond the last row."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def __str__(self) -> str:
        return ",".join(map(str, self)) if self else "0"

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"


class Composition(tuple):
    """Finite sequence of positive integers, in any order."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Composition":
        values = [int(x) for x in parts]
        if any(x <= 0 for x in values):
            raise ValueError(f"composition parts must be positive: {values}")
        return super().__new__(cls, values)

    @property
    def n(self) -> int:
        return sum(self)

    @property
    def h(self) -> int:
        return len(self)

    def __str__(self) -> str:
        return ",".join(map(str, self))

    def __repr__(self) -> str:
        return f"Composition({tuple(self)!r})"


def _parse_parts(text: str) -> list[int]:
    text = text.strip()
    if text in ("", "0"):
        return []
    parts = []
    for token in text.split(","):
        token = token.strip()
        if not token.isdigit() or int(token) == 0:
            raise ValueError(f"malformed part {token!r} in {text!r}")
        parts.append(int(token))
    return parts


def parse_partition(text: str) -> Partition:
    """Parse ``"5,3,1"``; "0" or the empty string give the empty partition."""
    return Partition(_parse_parts(text))


def parse_composition(text: str) -> Composition:
    return Composition(_parse_parts(text))


def is_p_regular(lam: Iterable[int], p: int) -> bool:
    if p < 2:
        raise ValueError("p must be at least 2")
    return all(count < p for count in Counter(lam).values())


def beta(n: int) -> Partition:
    """The basic spin label: two parts as equal as the parity of n allows."""
    if n < 1:
        raise ValueError("beta is defined for n >= 1")
    if n % 2 == 0:
        return Partition((n // 2 + 1, n // 2 - 1))
    return Partition(((n + 1) // 2, (n - 1) // 2))


def double(lam: Iterable[int]) -> Composition:
    """Concatenate beta of every part."""
    out: list[int] = []
    for part in lam:
        out.extend(beta(part))
    return Composition(out)


def undouble(lam: Iterable[int]) -> Partition | None:
    """The admissible preimage of ``lam`` under ``double``, if any.

    Admissible means 2-regular with no part congruent to 2 mod 4. Such a
    preimage never contains 2, so beta of each part except a final 1 has two
    rows and the preimage is read off by pairing consecutive parts.
    """
    parts = list(lam)
    mu = []
    for i in range(0, len(parts) - 1, 2):
        a, b = parts[i], parts[i + 1]
        if a - b not in (1, 2):
            return None
        mu.append(a + b)
    if len(parts) % 2:
        if parts[-1] != 1:
            return None
        mu.append(1)
    if any(m % 4 == 2 for m in mu):
        return None
    return Partition(mu)


def in_splitting_class(lam: Partition, p: int) -> bool:
    """Whether D^lam splits on restriction to the alternating group."""
    if not is_p_regular(lam, p):
        raise ValueError(f"{lam} is not {p}-regular")
    if p == 2:
        return undouble(lam) is not None
    from .mullineux import is_mullineux_fixed

    return is_mullineux_fixed(lam, p)


def _descending(n: int, largest: int, p: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for reps in range(1, min(p - 1, n // first) + 1):
            for rest in _descending(n - first * reps, first - 1, p):
                yield (first,) * reps + rest


@lru_cache(maxsize=None)
def _p_regular_tuple(n: int, p: int) -> tuple[Partition, ...]:
    return tuple(sorted(Partition(t) for t in _descending(n, n, p)))


def enumerate_p_regular(n: int, p: int) -> list[Partition]:
    """All p-regular partitions of n in lexicographic order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if p < 2:
        raise ValueError("p must be at least 2")
    return list(_p_regular_tuple(n, p))


def enumerate_splitting(n: int, p: int) -> list[Partition]:
    return [lam for lam in enumerate_p_regular(n, p) if in_splitting_class(lam, p)]


__all__ = [
    "Composition",
    "Partition",
    "beta",
    "double",
    "enumerate_p_regular",
    "enumerate_splitting",
    "in_splitting_class",
    "is_p_regular",
    "parse_composition",
    "parse_partition",
    "undouble",
]

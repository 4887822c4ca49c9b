"""Permutation modules on k-subsets, the quotients S1* and S2*, and subgroup generators.

Permutations are tuples of 0-based images: ``g[i]`` is the image of point
``i + 1`` minus one.  Products compose right to left, ``(g * h)(x) = g(h(x))``.
Subsets, blocks and cycles are written 1-based everywhere else.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence, Union

import numpy as np

from .gfp_linalg import GFpMatrix, fixed_subspace
from .partitions import Composition

Perm = tuple


# -- permutations ------------------------------------------------------------


def identity_perm(n: int) -> Perm:
    return tuple(range(n))


def perm_from_cycles(n: int, *cycles: Sequence[int]) -> Perm:
    images = list(range(n))
    for cycle in cycles:
        if len(set(cycle)) != len(cycle) or any(not 1 <= x <= n for x in cycle):
            raise ValueError(f"cycle {tuple(cycle)} is not a cycle on 1..{n}")
        for a, b in zip(cycle, cycle[1:] + type(cycle)(cycle[:1])):
            images[a - 1] = b - 1
    return tuple(images)


def compose(g: Perm, h: Perm) -> Perm:
    """g after h."""
    return tuple(g[x] for x in h)


def perm_sign(g: Perm) -> int:
    seen = [False] * len(g)
    sign = 1
    for start in range(len(g)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = g[x]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def perm_inverse(g: Perm) -> Perm:
    out = [0] * len(g)
    for i, x in enumerate(g):
        out[x] = i
    return tuple(out)


def point_orbits(gens: Iterable[Perm], n: int) -> list[list[int]]:
    """Orbits on {1..n}, each sorted, ordered by smallest point."""
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for i, j in enumerate(g):
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i + 1)
    return [groups[k] for k in sorted(groups)]


# -- subgroup descriptors ----------------------------------------------------


@dataclass(frozen=True)
class PointStabilizer:
    """A_{n-1}, fixing the point n."""

    def composition(self, n: int) -> Composition:
        return Composition((n - 1, 1))

    def __str__(self) -> str:
        return "point-stabilizer"


@dataclass(frozen=True)
class FullAlternating:
    def composition(self, n: int) -> Composition:
        return Composition((n,))

    def __str__(self) -> str:
        return "alternating"


@dataclass(frozen=True)
class YoungAlternating:
    """S_nu intersected with A_n; block r occupies consecutive points."""

    parts: Composition

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", Composition(self.parts))

    def composition(self, n: int) -> Composition:
        if self.parts.n != n:
            raise ValueError(f"composition {self.parts} does not sum to {n}")
        return self.parts

    def __str__(self) -> str:
        return f"young:{self.parts}"


@dataclass(frozen=True)
class MaxIntransitive:
    """A_{n-k,k}: the first n-k points and the last k points."""

    rest: int
    k: int

    def __post_init__(self) -> None:
        if self.rest < 1 or self.k < 1:
            raise ValueError("both orbits must be non-empty")

    def composition(self, n: int) -> Composition:
        if self.rest + self.k != n:
            raise ValueError(f"{self.rest}+{self.k} != {n}")
        return Composition((self.rest, self.k))

    def __str__(self) -> str:
        return f"intransitive:{self.rest},{self.k}"


@dataclass(frozen=True)
class WreathAlternating:
    """G_{a,b}: b blocks of a consecutive points, intersected with A_n."""

    a: int
    b: int

    def __post_init__(self) -> None:
        if self.a < 2 or self.b < 2:
            raise ValueError("wreath descriptor needs a, b >= 2")

    def __str__(self) -> str:
        return f"wreath:{self.a}x{self.b}"


@dataclass(frozen=True)
class Primitive:
    """A primitive subgroup; no generators are constructed for it."""

    def __str__(self) -> str:
        return "primitive"


SubgroupDescriptor = Union[
    PointStabilizer, FullAlternating, YoungAlternating, MaxIntransitive, WreathAlternating, Primitive
]
YOUNG_KINDS = (PointStabilizer, FullAlternating, YoungAlternating, MaxIntransitive)


def parse_descriptor(text: str) -> SubgroupDescriptor:
    """Parse ``point-stabilizer``, ``young:5,3,1``, ``intransitive:13,3``, ``wreath:4x3``, ``primitive``."""
    text = text.strip()
    kind, _, arg = text.partition(":")
    try:
        if kind == "point-stabilizer" and not arg:
            return PointStabilizer()
        if kind in ("alternating", "full") and not arg:
            return FullAlternating()
        if kind == "primitive" and not arg:
            return Primitive()
        if kind == "young" and arg:
            return YoungAlternating(Composition(int(x) for x in arg.split(",")))
        if kind == "intransitive" and arg:
            rest, k = (int(x) for x in arg.split(","))
            return MaxIntransitive(rest, k)
        if kind == "wreath" and arg:
            a, b = (int(x) for x in arg.lower().split("x"))
            return WreathAlternating(a, b)
    except ValueError as exc:
        raise ValueError(f"malformed subgroup descriptor {text!r}: {exc}") from exc
    raise ValueError(f"unknown subgroup descriptor {text!r}")


def _blocks(parts: Sequence[int]) -> list[list[int]]:
    out, start = [], 1
    for size in parts:
        out.append(list(range(start, start + size)))
        start += size
    return out


def _young_generators(parts: Sequence[int], n: int) -> list[Perm]:
    blocks = _blocks(parts)
    gens = []
    for block in blocks:
        for x in block[2:]:
            gens.append(perm_from_cycles(n, (block[0], block[1], x)))
    swaps = [(block[0], block[1]) for block in blocks if len(block) >= 2]
    for other in swaps[1:]:
        gens.append(perm_from_cycles(n, swaps[0], other))
    return gens


def _wreath_generators(a: int, b: int) -> list[Perm]:
    n = a * b
    t = perm_from_cycles(n, (1, 2))
    base = [
        t,
        perm_from_cycles(n, tuple(range(1, a + 1))),
        perm_from_cycles(n, *((i, a + i) for i in range(1, a + 1))),
        perm_from_cycles(n, *(tuple(r * a + i for r in range(b)) for i in range(1, a + 1))),
    ]
    # Schreier generators of the even part, with coset representatives {1, t}
    gens = []
    for x in base:
        if perm_sign(x) == 1:
            candidates = [x, compose(t, compose(x, t))]
        else:
            candidates = [compose(x, t), compose(t, x)]
        gens.extend(c for c in candidates if c != identity_perm(n))
    return list(dict.fromkeys(gens))


def generators(d: SubgroupDescriptor, n: int) -> list[Perm]:
    """A generating set of the described subgroup of A_n (possibly empty for trivial groups)."""
    if isinstance(d, Primitive):
        raise ValueError("primitive subgroups have no canonical generators")
    if isinstance(d, WreathAlternating):
        if d.a * d.b != n:
            raise ValueError(f"{d.a}x{d.b} != {n}")
        return _wreath_generators(d.a, d.b)
    if isinstance(d, YOUNG_KINDS):
        return _young_generators(d.composition(n), n)
    raise TypeError(f"not a subgroup descriptor: {d!r}")


def group_order(d: SubgroupDescriptor, n: int) -> int:
    if isinstance(d, WreathAlternating):
        return math.factorial(d.a) ** d.b * math.factorial(d.b) // 2
    if isinstance(d, YOUNG_KINDS):
        full = math.prod(math.factorial(x) for x in d.composition(n))
        return full // 2 if any(x >= 2 for x in d.composition(n)) else full
    raise ValueError(f"no order formula for {d}")


# -- k-subsets and modules ---------------------------------------------------


@lru_cache(maxsize=None)
def _omega(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    return tuple(combinations(range(1, n + 1), k))


def omega_k(n: int, k: int) -> list[frozenset[int]]:
    """All k-subsets of {1..n}, lexicographic."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    return [frozenset(s) for s in _omega(n, k)]


def orbit_count(d: SubgroupDescriptor, n: int, k: int) -> int:
    """Orbits of the generated group on k-subsets."""
    subsets = _omega(n, k)
    index = {s: i for i, s in enumerate(subsets)}
    gens = generators(d, n)
    actions = [[index[tuple(sorted(g[x - 1] + 1 for x in s))] for s in subsets] for g in gens]
    parent = list(range(len(subsets)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for action in actions:
        for i, j in enumerate(action):
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)
    return sum(1 for i in range(len(subsets)) if find(i) == i)


class ModuleKind(enum.Enum):
    M = "M"
    S1STAR = "S1star"
    S2STAR = "S2star"


@dataclass(frozen=True)
class ModuleSpec:
    kind: ModuleKind
    n: int
    p: int
    k: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", ModuleKind(self.kind))
        if self.kind is ModuleKind.M and not 0 <= self.k <= self.n / 2:
            raise ValueError(f"M(k) needs 0 <= k <= n/2, got k={self.k}")
        if self.kind is ModuleKind.S2STAR and self.n < 5:
            raise ValueError("S2star needs n >= 5")
        if self.kind is ModuleKind.S1STAR and self.n < 2:
            raise ValueError("S1star needs n >= 2")

    @property
    def dim(self) -> int:
        if self.kind is ModuleKind.M:
            return math.comb(self.n, self.k)
        if self.kind is ModuleKind.S1STAR:
            return self.n - 1
        return self.n * (self.n - 3) // 2


class S2StarBasis:
    """The basis {v_A : A a pair in [1, n-2]} followed by {v_{i,n-1} : i <= n-3}.

    ``express(i, j)`` writes the image of any pair v_{i,j} in this basis via
    the four rewriting rules for pairs that meet {n-1, n}.
    """

    def __init__(self, n: int) -> None:
        if n < 5:
            raise ValueError("S2star needs n >= 5")
        self.n = n
        self.pairs = list(_omega(n - 2, 2))
        self.index = {pair: i for i, pair in enumerate(self.pairs)}
        offset = len(self.pairs)
        for i in range(1, n - 2):
            self.index[(i, n - 1)] = offset + i - 1
        self.dim = offset + n - 3

    def labels(self) -> list[tuple[int, int]]:
        return sorted(self.index, key=self.index.get)

    @lru_cache(maxsize=None)
    def express(self, i: int, j: int) -> tuple[tuple[int, int], ...]:
        """Sparse coefficients (basis index, integer coefficient) of v_{i,j}."""
        n = self.n
        i, j = min(i, j), max(i, j)
        if (i, j) in self.index:
            return ((self.index[(i, j)], 1),)
        coeffs: dict[int, int] = {}

        def add(pair: tuple[int, int], c: int) -> None:
            k = self.index[pair]
            coeffs[k] = coeffs.get(k, 0) + c

        lower = [pair for pair in self.pairs]
        tail = [(x, n - 1) for x in range(1, n - 2)]
        if j == n and i <= n - 3:
            for other in range(1, n):
                if other != i:
                    for k, c in self.express(i, other):
                        coeffs[k] = coeffs.get(k, 0) - c
        elif (i, j) == (n - 2, n - 1):
            for pair in lower + tail:
                add(pair, -1)
        elif (i, j) == (n - 2, n):
            for pair in _omega(n - 3, 2):
                add(pair, 1)
            for pair in tail:
                add(pair, 1)
        elif (i, j) == (n - 1, n):
            for pair in lower:
                add(pair, 1)
        else:
            raise ValueError(f"({i},{j}) is not a pair in 1..{n}")
        return tuple(sorted((k, c) for k, c in coeffs.items() if c))

    def vector(self, i: int, j: int, p: int) -> np.ndarray:
        out = np.zeros(self.dim, dtype=np.int64)
        for k, c in self.express(i, j):
            out[k] = c
        return out % p


def _m_action(g: Perm, n: int, k: int, p: int) -> GFpMatrix:
    subsets = _omega(n, k)
    index = {s: i for i, s in enumerate(subsets)}
    images = [index[tuple(sorted(g[x - 1] + 1 for x in s))] for s in subsets]
    return GFpMatrix.from_permutation(images, p)


def _s1_action(g: Perm, n: int, p: int) -> GFpMatrix:
    arr = np.zeros((n - 1, n - 1), dtype=np.int64)
    for x in range(n - 1):
        y = g[x]
        if y == n - 1:
            arr[:, x] = -1  # v_n = -(v_1 + ... + v_{n-1})
        else:
            arr[y, x] = 1
    return GFpMatrix(p, arr)


def _s2_action(g: Perm, basis: S2StarBasis, p: int) -> GFpMatrix:
    arr = np.zeros((basis.dim, basis.dim), dtype=np.int64)
    for (i, j), col in basis.index.items():
        for k, c in basis.express(g[i - 1] + 1, g[j - 1] + 1):
            arr[k, col] += c
    return GFpMatrix(p, arr)


def action_matrices(spec: ModuleSpec, gens: Sequence[Perm]) -> list[GFpMatrix]:
    n, p = spec.n, spec.p
    if spec.kind is ModuleKind.M:
        return [_m_action(g, n, spec.k, p) for g in gens]
    if spec.kind is ModuleKind.S1STAR:
        return [_s1_action(g, n, p) for g in gens]
    basis = S2StarBasis(n)
    return [_s2_action(g, basis, p) for g in gens]


def module_matrices(spec: ModuleSpec, d: SubgroupDescriptor) -> list[GFpMatrix]:
    """Action matrices of generators(d) on the module's basis."""
    return action_matrices(spec, generators(d, spec.n))


def invariant_space(spec: ModuleSpec, gens: Sequence[Perm]) -> GFpMatrix:
    return fixed_subspace(action_matrices(spec, gens), dim=spec.dim, p=spec.p)


def invariant_dim(spec: ModuleSpec, d: SubgroupDescriptor) -> int:
    return invariant_space(spec, generators(d, spec.n)).rows


# -- containing family of an arbitrary permutation group ---------------------


def _finest_blocks(gens: Sequence[Perm], n: int, seed: int) -> list[list[int]]:
    """Smallest block system in which points 1 and seed share a block."""
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> bool:
        rx, ry = find(x), find(y)
        if rx == ry:
            return False
        parent[max(rx, ry)] = min(rx, ry)
        return True

    union(0, seed - 1)
    queue = [(0, seed - 1)]
    while queue:
        x, y = queue.pop()
        for g in gens:
            gx, gy = g[x], g[y]
            if union(gx, gy):
                queue.append((gx, gy))
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i + 1)
    return list(groups.values())


def containing_family(gens: Sequence[Perm], n: int) -> SubgroupDescriptor:
    """A named maximal family containing the group generated by ``gens``."""
    gens = [tuple(g) for g in gens]
    if any(sorted(g) != list(range(n)) for g in gens):
        raise ValueError(f"generators must be permutations of {n} points")
    if any(perm_sign(g) == -1 for g in gens):
        raise ValueError("generators must be even permutations")
    orbits = point_orbits(gens, n)
    if len(orbits) > 1:
        sizes = sorted((len(o) for o in orbits), reverse=True)
        return YoungAlternating(Composition(sizes))
    for seed in range(2, n + 1):
        blocks = _finest_blocks(gens, n, seed)
        if 1 < len(blocks) < n:
            size = len(blocks[0])
            return WreathAlternating(size, n // size)
    return FullAlternating() if _is_full(gens, n) else Primitive()


def _is_full(gens: Sequence[Perm], n: int) -> bool:
    """Whether the group is all of A_n, decided by orbit-stabilizer on small n."""
    if n > 9:
        return False
    seen = {identity_perm(n)}
    frontier = [identity_perm(n)]
    target = math.factorial(n) // 2
    while frontier and len(seen) < target:
        following = []
        for h in frontier:
            for g in gens:
                gh = compose(g, h)
                if gh not in seen:
                    seen.add(gh)
                    following.append(gh)
        frontier = following
    return len(seen) == target


__all__ = [
    "FullAlternating",
    "MaxIntransitive",
    "ModuleKind",
    "ModuleSpec",
    "Perm",
    "PointStabilizer",
    "Primitive",
    "S2StarBasis",
    "SubgroupDescriptor",
    "WreathAlternating",
    "YoungAlternating",
    "action_matrices",
    "compose",
    "containing_family",
    "generators",
    "group_order",
    "identity_perm",
    "invariant_dim",
    "invariant_space",
    "module_matrices",
    "omega_k",
    "orbit_count",
    "parse_descriptor",
    "perm_from_cycles",
    "perm_inverse",
    "perm_sign",
    "point_orbits",
]

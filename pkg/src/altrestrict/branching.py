"""Composition-factor certificates for restrictions D^lam to smaller symmetric groups.

Every certificate here is a chain of normal-node removals through p-regular
partitions: removing a normal node A from lam yields a composition factor
D^{lam_A} of the restriction to S_{n-1}, so chains certify factors further
down.  Absence of a certificate is never a disproof.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .mullineux import is_mullineux_fixed
from .nodes import Node, all_normal_nodes, is_JS, normal_nodes, remove_node, residue
from .partitions import (
    Partition,
    beta,
    double,
    enumerate_p_regular,
    enumerate_splitting,
    in_splitting_class,
    is_p_regular,
)


class HypothesisViolation(ValueError):
    """Raised when an input fails the hypotheses of a certificate lemma."""


@dataclass(frozen=True)
class RemovalSequence:
    origin: Partition
    steps: tuple[tuple[Node, Partition], ...] = ()

    @property
    def end(self) -> Partition:
        return self.steps[-1][1] if self.steps else self.origin

    def validate(self, p: int) -> bool:
        current = self.origin
        for node, after in self.steps:
            if node not in normal_nodes(current, residue(node, p), p):
                return False
            current = remove_node(current, node)
            if current != after or not is_p_regular(current, p):
                return False
        return True


@dataclass(frozen=True)
class ReachableSet:
    origin: Partition
    p: int
    m: int
    members: dict = field(default_factory=dict)

    def __contains__(self, mu) -> bool:
        return Partition(mu) in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(sorted(self.members))

    def witness(self, mu) -> RemovalSequence:
        return self.members[Partition(mu)]


@lru_cache(maxsize=1 << 16)
def normal_removals(lam: Partition, p: int) -> tuple[tuple[Node, Partition], ...]:
    """(A, lam_A) for every normal node A with lam_A p-regular."""
    out = []
    for node in all_normal_nodes(lam, p):
        smaller = remove_node(lam, node)
        if is_p_regular(smaller, p):
            out.append((node, smaller))
    return tuple(out)


def reachable(lam: Sequence[int], p: int, m: int) -> ReachableSet:
    """All p-regular mu of size m reachable from lam by normal-node removals."""
    lam = Partition(lam)
    if not 0 <= m <= lam.n:
        raise ValueError(f"target size {m} outside 0..{lam.n}")
    if not is_p_regular(lam, p):
        raise ValueError(f"{lam} is not {p}-regular")
    parents: dict[Partition, tuple[Partition, Node] | None] = {lam: None}
    level = [lam]
    for _ in range(lam.n - m):
        following: list[Partition] = []
        for mu in level:
            for node, smaller in normal_removals(mu, p):
                if smaller not in parents:
                    parents[smaller] = (mu, node)
                    following.append(smaller)
        level = following
    members = {}
    for mu in level:
        steps = []
        cursor = mu
        while parents[cursor] is not None:
            parent, node = parents[cursor]
            steps.append((node, cursor))
            cursor = parent
        members[mu] = RemovalSequence(lam, tuple(reversed(steps)))
    return ReachableSet(lam, p, m, members)


def distinct_factor_certificate(
    lam: Sequence[int], p: int, m: int, target: int
) -> list[Partition] | None:
    """At least `target` certified distinct factors at S_m, or None."""
    found = list(reachable(lam, p, m))
    return found if len(found) >= target else None


# -- JS truncation (p = 2) ------------------------------------------------


def js_truncation_chain(lam: Sequence[int]) -> list[Partition]:
    """The intermediate partitions of the staircase truncation, first to last."""
    lam = Partition(lam)
    if not is_p_regular(lam, 2):
        raise ValueError(f"{lam} is not 2-regular")
    chain = [lam]
    parts = list(lam)
    r = 1
    while r < len(parts) and parts[r] > 0:
        if (parts[r] - parts[r - 1]) % 2:
            # rows r+1..l (1-based) form the staircase block below row r
            l = r + 1
            while l < len(parts) and parts[l] >= parts[l - 1] - 1:
                l += 1
            for row in range(r, l):
                parts[row] -= 1
            while parts and parts[-1] == 0:
                parts.pop()
        chain.append(Partition(parts))
        r += 1
    return chain


def js_truncation(lam: Sequence[int]) -> Partition:
    return js_truncation_chain(lam)[-1]


def js_truncation_properties(lam: Sequence[int], *, with_reachability: bool = True) -> dict[str, bool]:
    """Evaluate the eight structural properties of the JS truncation of lam.

    Keys are "i" through "viii".  Row indices use h = h(lam^JS).  The
    reachability clause ("ii") is the expensive one and can be skipped.
    """
    lam = Partition(lam)
    js = js_truncation(lam)
    n, h = lam.n, js.h
    part, trunc = lam.part, js.part
    rows = range(1, lam.h + 1)
    k = max((i for i in range(1, lam.h + 2) if part(2 * i - 1) > 0), default=0)
    out = {
        "i": is_JS(js, 2) and (js == lam) == is_JS(lam, 2),
        "ii": (js in reachable(lam, 2, js.n)) if with_reachability else True,
        "iii": all(trunc(j) - trunc(j + 1) <= 2 * -(-(part(j) - part(j + 1)) // 2) for j in rows),
        "iv": all(0 <= part(j) - trunc(j) <= j - 1 for j in rows) and part(h + 1) <= h,
        "v": 2 * js.n >= n + k,
        "vi": trunc(h) < 3 or part(h + 1) == 0 or (part(h + 1) == 1 and part(1) % 2 == 0),
        "vii": not (trunc(h) == 2 and trunc(h - 1) >= 6) or part(h) <= 3,
        "viii": not (trunc(h) == 1 and trunc(h - 1) >= 5) or part(h) <= 2,
    }
    return out


# -- removal-sequence certificate ----------------------------------------


def _blocks(lam: Partition) -> list[int]:
    """Cumulative block ends h_1 < h_2 < ... for the runs of equal parts."""
    ends = []
    for r in range(1, lam.h + 1):
        if r == lam.h or lam[r] != lam[r - 1]:
            ends.append(r)
    return ends


def removal_sequence_check(
    lam: Sequence[int], nu: Sequence[int], j: int, p: int
) -> RemovalSequence | None:
    """Certify D^{lam - nu} inside the restriction by the staircase removal order.

    ``nu`` has one entry per row 1..h_j (shorter input is padded with zeros).
    Raises HypothesisViolation when the lemma's hypotheses fail; returns None
    if the prescribed removal order does not validate.
    """
    lam = Partition(lam)
    ends = _blocks(lam)
    if not 1 <= j <= len(ends):
        raise HypothesisViolation(f"j={j} outside 1..{len(ends)}")
    height = ends[j - 1]
    nu = [int(x) for x in nu]
    if len(nu) > height or any(x < 0 for x in nu):
        raise HypothesisViolation(f"nu must have at most {height} non-negative entries")
    nu += [0] * (height - len(nu))
    mu_parts = [lam.part(r) - (nu[r - 1] if r <= height else 0) for r in range(1, lam.h + 1)]
    try:
        mu = Partition(mu_parts)
    except ValueError as exc:
        raise HypothesisViolation(f"lam - nu is not a partition: {mu_parts}") from exc
    if not is_p_regular(mu, p):
        raise HypothesisViolation(f"{mu} is not {p}-regular")
    if not is_JS(lam[:height], p):
        raise HypothesisViolation(f"{tuple(lam[:height])} is not JS")
    starts = [0] + ends[: j - 1]
    previous_min = None
    for r, (start, end) in enumerate(zip(starts, ends), 1):
        block = nu[start:end]
        if any(a > b for a, b in zip(block, block[1:])):
            raise HypothesisViolation(f"nu not weakly increasing down block {r}")
        if previous_min is not None and block[-1] > previous_min:
            raise HypothesisViolation(f"nu block {r} exceeds the previous block")
        previous_min = block[0]
        if block[-1] > block[0] + p - (end - start):
            raise HypothesisViolation(f"nu spread too large in block {r}")
    order = [row for start, end in zip(starts, ends) for row in range(end, start, -1)]
    current = lam
    remaining = dict(enumerate(nu, 1))
    steps = []
    while any(remaining.values()):
        for row in order:
            if remaining[row]:
                node = Node(row, current[row - 1])
                if node not in normal_nodes(current, residue(node, p), p):
                    return None
                current = remove_node(current, node)
                if not is_p_regular(current, p):
                    return None
                remaining[row] -= 1
                steps.append((node, current))
    return RemovalSequence(lam, tuple(steps))


# -- half-size and JS-size lemma (p = 2) --------------------------------

SIZE_GAP_EXCEPTION_PREIMAGES: tuple[tuple[int, ...], ...] = (
    (11, 1), (9, 3), (9, 5), (11, 5), (11, 7), (13, 8, 3), (13, 9, 4), (13, 9, 5, 1),
    (15, 11, 5, 1), (15, 11, 7, 1), (15, 11, 7, 3), (17, 13, 9, 3), (17, 13, 9, 5),
    (19, 15, 11, 7), (21, 17, 13, 9, 4), (21, 17, 13, 9, 5, 1), (23, 19, 15, 11, 7, 1),
    (23, 19, 15, 11, 7, 3), (25, 21, 17, 13, 9, 5), (29, 25, 21, 17, 13, 9, 5, 1),
    (31, 27, 23, 19, 15, 11, 7, 3),
)
SIZE_GAP_EXCEPTIONS: frozenset = frozenset(Partition(double(mu)) for mu in SIZE_GAP_EXCEPTION_PREIMAGES)


def js_size_gap_holds(lam: Sequence[int]) -> bool:
    """|lam^JS| >= n/2 + 5 and every odd-indexed gap of lam^JS is at most 2."""
    lam = Partition(lam)
    if lam.n % 2 or not in_splitting_class(lam, 2):
        raise ValueError(f"{lam} is not an even-size member of the p=2 splitting class")
    js = js_truncation(lam)
    size_ok = js.n >= lam.n // 2 + 5
    gaps_ok = all(js.part(2 * i - 1) - js.part(2 * i) <= 2 for i in range(1, js.h // 2 + 2))
    return size_ok and gaps_ok


# -- explicit pair lemma (p = 2) -----------------------------------------


def explicit_pair_base(n: int) -> Partition:
    q = n // 4
    return Partition((q + 2, q + 1, q - 1, q - 2))


def explicit_pair(n: int, k: int) -> tuple[Partition, Partition]:
    """The two certified factors at S_{n-k} of D^(n/4+2, n/4+1, n/4-1, n/4-2)."""
    if n % 4 or n < 12:
        raise ValueError("n must be a multiple of 4 and at least 12")
    if not 2 <= k <= n - 9:
        raise ValueError(f"k={k} outside 2..{n - 9}")
    q = n // 4
    m, r = divmod(k, 4)
    offsets = {
        0: ((2, 1, -1, -2), (3, 1, -1, -3)),
        1: ((2, 0, -1, -2), (2, 1, -1, -3)),
        2: ((2, 0, -1, -3), (1, 0, -1, -2)),
        3: ((1, 0, -1, -3), (2, 0, -2, -3)),
    }[r]
    mu, nu = ([q - m + d for d in shift] for shift in offsets)
    return Partition(mu), Partition(nu)


# -- p = 3 JS families ----------------------------------------------------


class JSFamily(enum.Enum):
    I = "I"
    II = "II"
    III = "III"
    IV = "IV-list"


JS3_LISTED: tuple[Partition, ...] = tuple(
    Partition(x)
    for x in (
        (1,), (4, 1, 1), (7, 3, 2), (10, 4, 4), (13, 6, 5), (7, 3, 2, 1), (10, 4, 4, 1),
        (13, 6, 5, 1), (10, 6, 3, 3, 1, 1), (13, 6, 5, 4, 1, 1), (13, 9, 5, 4, 3, 2, 1),
    )
)


def js3_families(lam: Sequence[int]) -> list[JSFamily]:
    """Every family whose defining conditions hold for lam."""
    lam = Partition(lam)
    n, h, part = lam.n, lam.h, lam.part
    out = []
    if part(1) >= part(2) + 9 and part(3) >= 7 and 2 * part(1) <= n + 2 and n >= 4 * h:
        out.append(JSFamily.I)
    head = 2 * (part(1) + part(2)) <= n + 8 and h >= 6 and n >= 6 * h
    if head and part(1) >= part(2) + 7 and part(2) + 7 >= part(3) + 10 and part(4) >= 6:
        out.append(JSFamily.II)
    if head and part(1) >= part(2) + 4 and part(2) + 4 >= part(3) + 8 and part(4) >= 4:
        out.append(JSFamily.III)
    if lam in JS3_LISTED:
        out.append(JSFamily.IV)
    return out


def js3_family(lam: Sequence[int]) -> JSFamily:
    lam = Partition(lam)
    if not is_p_regular(lam, 3) or not is_mullineux_fixed(lam, 3):
        raise ValueError(f"{lam} is not in the p=3 splitting class")
    if not is_JS(lam, 3):
        raise ValueError(f"{lam} is not JS")
    families = js3_families(lam)
    if not families:
        raise RuntimeError(f"{lam} lies in no family")
    return families[0]


# -- exceptional families of the distinct-factor lemmas ------------------


def _eq(lam: Partition, parts: Iterable[int]) -> bool:
    return lam == Partition(parts) if all(x >= 0 for x in parts) else False


def half_restriction_exception(lam: Sequence[int]) -> str | None:
    """Label of the exceptional form (p = 2, even n, restriction to S_{n/2}), if any."""
    lam = Partition(lam)
    n = lam.n
    if n % 4 == 0 and lam == beta(n):
        return "i"
    if n >= 2 and lam == Partition(tuple(beta(n - 1)) + (1,)):
        return "ii"
    q = n // 4
    if n >= 24 and n % 8 == 0 and _eq(lam, (q + 3, q + 1, q - 1, q - 3)):
        return "iii"
    if n >= 10 and n % 4 == 2 and _eq(lam, ((n + 6) // 4, (n + 2) // 4, (n - 2) // 4, (n - 6) // 4)):
        return "iv"
    if n >= 24 and n % 4 == 0 and _eq(lam, (q + 2, q + 1, q - 1, q - 2)):
        return "v"
    if n >= 14 and n % 4 == 2 and _eq(lam, ((n + 10) // 4, (n + 6) // 4, (n - 6) // 4, (n - 10) // 4)):
        return "vi"
    return None


HALF_TABLE_DOUBLES: frozenset = frozenset(
    Partition(double(mu)) for mu in SIZE_GAP_EXCEPTION_PREIMAGES if mu not in ((11, 1), (9, 5), (11, 7))
)
HALF_TABLE_NEAR_STAIRCASE: frozenset = frozenset(
    Partition(x)
    for x in (
        (7, 5, 4, 3, 2, 1), (7, 6, 5, 3, 1), (8, 7, 5, 3, 2, 1), (8, 7, 5, 4, 3, 1),
        (8, 7, 5, 4, 3, 2, 1), (8, 7, 6, 5, 3, 1), (8, 7, 6, 5, 3, 2, 1),
        (8, 7, 6, 5, 4, 3, 1), (8, 7, 6, 5, 4, 3, 2, 1),
    )
)
HALF_TABLE_SMALL: frozenset = frozenset(
    Partition(x) for x in ((7, 5, 3, 1), (7, 5, 3, 2, 1), (7, 6, 2, 1), (8, 7, 5, 3, 1), (9, 7, 3, 2, 1))
)


def js_three_factor_exception(lam: Sequence[int], k: int) -> str | None:
    """Which listed exception (p = 2 JS lam, restriction to S_{n-k}) applies, if any."""
    lam = Partition(lam)
    n, h, part = lam.n, lam.h, lam.part
    checks = [
        ("(n)", lam == Partition((n,))),
        ("(n-1,1)", n % 2 == 0 and _eq(lam, (n - 1, 1))),
        ("(n/2+2,n/2-2)", n % 2 == 0 and _eq(lam, (n // 2 + 2, n // 2 - 2))),
        ("(n/2+1,n/2-1)", n % 2 == 0 and _eq(lam, (n // 2 + 1, n // 2 - 1))),
        ("((n+1)/2,(n-3)/2,1)", n % 2 == 1 and _eq(lam, ((n + 1) // 2, (n - 3) // 2, 1))),
        ("(n/3+2,n/3,n/3-2)", n % 3 == 0 and _eq(lam, (n // 3 + 2, n // 3, n // 3 - 2))),
        (
            "((n-2)/3+4,(n-2)/3,(n-2)/3-2), k=1 mod 3",
            n >= 14 and n % 3 == 2 and k % 3 == 1
            and _eq(lam, ((n - 2) // 3 + 4, (n - 2) // 3, (n - 2) // 3 - 2)),
        ),
        (
            "((n+2)/3+2,(n+2)/3,(n+2)/3-4), k=2 mod 3",
            n >= 19 and n % 3 == 1 and k % 3 == 2
            and _eq(lam, ((n + 2) // 3 + 2, (n + 2) // 3, (n + 2) // 3 - 4)),
        ),
        ("h=3, l1=l2+2, l2>=l3+4, k=5", h == 3 and part(1) == part(2) + 2 and part(2) >= part(3) + 4 and k == 5),
        (
            "((n-1)/3+2,(n-1)/3,(n-1)/3-2,1), k!=0 mod 3",
            n >= 22 and n % 6 == 4 and k % 3 != 0
            and _eq(lam, ((n - 1) // 3 + 2, (n - 1) // 3, (n - 1) // 3 - 2, 1)),
        ),
        ("(l1,l1-2,l1-4,l4), k=5", h == 4 and part(2) == part(1) - 2 and part(3) == part(1) - 4 and k == 5),
        (
            "(n/4+3,n/4+1,n/4-1,n/4-3)",
            n >= 20 and n % 4 == 0 and _eq(lam, (n // 4 + 3, n // 4 + 1, n // 4 - 1, n // 4 - 3)),
        ),
    ]
    for label, hit in checks:
        if hit:
            return label
    return None


# Cases that need characteristic-zero branching and decomposition tables;
# normal-node chains alone do not reach the bound.
JS_THREE_FACTOR_TABLE_CASES: frozenset = frozenset(
    {(Partition((8, 6, 2)), 8), (Partition((7, 5, 3, 1)), 8), (Partition((9, 7, 5, 3, 1)), 12)}
)
P3_FIVE_FACTOR_TABLE_CASES: frozenset = frozenset({Partition((7, 3, 2))})


HALF_TABLE_CASES: frozenset = HALF_TABLE_DOUBLES | HALF_TABLE_NEAR_STAIRCASE | HALF_TABLE_SMALL


@dataclass(frozen=True)
class FactorAudit:
    """One distinct-factor claim checked against the normal-removal oracle.

    status is "certified", "exception" (the claim excludes lam), "table"
    (settled only with decomposition tables) or "uncertified".
    """

    lam: Partition
    m: int
    needed: int
    found: int
    status: str
    note: str = ""


def _audit(lam: Partition, p: int, m: int, needed: int, exception: str | None, table: str | None) -> FactorAudit:
    found = len(reachable(lam, p, m))
    if found >= needed:
        return FactorAudit(lam, m, needed, found, "certified")
    if exception:
        return FactorAudit(lam, m, needed, found, "exception", exception)
    if table:
        return FactorAudit(lam, m, needed, found, "table", table)
    return FactorAudit(lam, m, needed, found, "uncertified")


def audit_half_restriction(n: int) -> list[FactorAudit]:
    """At least 3 factors at S_{n/2} for every lam in the p=2 splitting class."""
    if n % 2:
        raise ValueError("n must be even")
    out = []
    for lam in enumerate_splitting(n, 2):
        js = js_truncation(lam)
        if lam in HALF_TABLE_CASES:
            table = "listed"
        elif js in HALF_TABLE_CASES:
            table = f"truncation {js} listed"
        else:
            table = None
        out.append(_audit(lam, 2, n // 2, 3, half_restriction_exception(lam), table))
    return out


def audit_js_three_factor(n: int) -> list[FactorAudit]:
    """At least 3 factors at S_{n-k}, 5 <= k <= n/2, for 2-regular JS lam."""
    out = []
    for lam in enumerate_p_regular(n, 2):
        if not is_JS(lam, 2):
            continue
        for k in range(5, n // 2 + 1):
            if (lam, k) in JS_THREE_FACTOR_TABLE_CASES:
                table = "listed"
            elif lam in HALF_TABLE_CASES:
                table = "listed for half restriction"
            else:
                table = None
            out.append(_audit(lam, 2, n - k, 3, js_three_factor_exception(lam, k), table))
    return out


def audit_p3_five_factor(n: int) -> list[FactorAudit]:
    """At least 5 factors at S_{n/2} for JS lam in the p=3 splitting class, lam != (4,1,1)."""
    if n % 2:
        raise ValueError("n must be even")
    out = []
    for lam in enumerate_splitting(n, 3):
        if not is_JS(lam, 3):
            continue
        exception = "(4,1,1)" if lam == (4, 1, 1) else None
        table = "listed" if lam in P3_FIVE_FACTOR_TABLE_CASES else None
        out.append(_audit(lam, 3, n // 2, 5, exception, table))
    return out


__all__ = [
    "FactorAudit",
    "HALF_TABLE_CASES",
    "audit_half_restriction",
    "audit_js_three_factor",
    "audit_p3_five_factor",
    "HALF_TABLE_DOUBLES",
    "HALF_TABLE_NEAR_STAIRCASE",
    "HALF_TABLE_SMALL",
    "HypothesisViolation",
    "JS3_LISTED",
    "JSFamily",
    "JS_THREE_FACTOR_TABLE_CASES",
    "SIZE_GAP_EXCEPTIONS",
    "SIZE_GAP_EXCEPTION_PREIMAGES",
    "P3_FIVE_FACTOR_TABLE_CASES",
    "ReachableSet",
    "RemovalSequence",
    "distinct_factor_certificate",
    "half_restriction_exception",
    "js3_families",
    "js3_family",
    "js_three_factor_exception",
    "js_truncation",
    "js_truncation_chain",
    "js_truncation_properties",
    "js_size_gap_holds",
    "explicit_pair_base",
    "explicit_pair",
    "normal_removals",
    "reachable",
    "removal_sequence_check",
]

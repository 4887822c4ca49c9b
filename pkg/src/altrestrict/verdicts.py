"""Decision procedures for irreducible restrictions of E^lam_(+-) to subgroups of A_n.

Each procedure returns a Verdict naming the theorem clause that decided it.
Intransitive subgroups are handled by monotone containment: a Young subgroup
inherits reducibility from any maximal intransitive overgroup A_{n-k,k}.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any, Sequence

from .nodes import all_normal_nodes, e_tilde, is_JS
from .partitions import Composition, Partition, beta, in_splitting_class, is_p_regular
from .permmod import (
    FullAlternating,
    MaxIntransitive,
    PointStabilizer,
    Primitive,
    SubgroupDescriptor,
    WreathAlternating,
    YoungAlternating,
    group_order,
)


class Outcome(enum.Enum):
    IRREDUCIBLE = "irreducible"
    REDUCIBLE = "reducible"
    OUT_OF_SCOPE_PRIMITIVE = "out-of-scope-primitive"
    NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class Verdict:
    outcome: Outcome
    clause: str | None = None
    evidence: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.outcome in (Outcome.IRREDUCIBLE, Outcome.REDUCIBLE) and not self.clause:
            raise ValueError("a decided verdict needs a clause")

    @property
    def irreducible(self) -> bool:
        return self.outcome is Outcome.IRREDUCIBLE

    def to_dict(self) -> dict[str, Any]:
        return {"outcome": self.outcome.value, "clause": self.clause, "evidence": self.evidence}


@dataclass(frozen=True)
class RestrictionQuery:
    p: int
    lam: Partition
    subgroup: SubgroupDescriptor

    def __post_init__(self) -> None:
        object.__setattr__(self, "lam", Partition(self.lam))
        if isinstance(self.subgroup, YoungAlternating) and self.subgroup.parts.n != self.lam.n:
            raise ValueError(f"composition {self.subgroup.parts} does not sum to {self.lam.n}")
        if isinstance(self.subgroup, MaxIntransitive) and self.subgroup.rest + self.subgroup.k != self.lam.n:
            raise ValueError(f"{self.subgroup} does not match n = {self.lam.n}")
        if isinstance(self.subgroup, WreathAlternating) and self.subgroup.a * self.subgroup.b != self.lam.n:
            raise ValueError(f"{self.subgroup} does not match n = {self.lam.n}")

    @property
    def n(self) -> int:
        return self.lam.n


def _not_applicable(reason: str) -> Verdict:
    return Verdict(Outcome.NOT_APPLICABLE, None, {"reason": reason})


def _check_splitting(lam: Partition, p: int) -> Verdict | None:
    if lam.n < 5:
        return _not_applicable("n must be at least 5")
    if not is_p_regular(lam, p):
        return _not_applicable(f"{lam} is not {p}-regular")
    if not in_splitting_class(lam, p):
        return _not_applicable(f"D^{lam} does not split over A_n")
    return None


def _node_evidence(lam: Partition, p: int) -> list[list[int]]:
    return [[a.row, a.col, a.residue(p)] for a in all_normal_nodes(lam, p)]


# -- point stabilizer and two-point stabilizer -----------------------------


def classify_point_stabilizer(lam: Sequence[int], p: int) -> Verdict:
    lam = Partition(lam)
    if (bad := _check_splitting(lam, p)) is not None:
        return bad
    normal = all_normal_nodes(lam, p)
    evidence = {"normal_nodes": _node_evidence(lam, p), "js": len(normal) == 1}
    if len(normal) == 1:
        return Verdict(Outcome.IRREDUCIBLE, "Theorem B(a)", evidence)
    if len(normal) == 2 and all(a.residue(p) != 0 for a in normal):
        return Verdict(Outcome.IRREDUCIBLE, "Theorem B(b)", evidence)
    return Verdict(Outcome.REDUCIBLE, "Theorem B", evidence)


def point_stabilizer_parity_form(lam: Sequence[int]) -> bool:
    """The p = 2 criterion: JS, or two normal nodes with lam_1 = lam_2 + 1 and lam_1 even."""
    lam = Partition(lam)
    normal = all_normal_nodes(lam, 2)
    if len(normal) == 1:
        return True
    return len(normal) == 2 and lam.part(1) == lam.part(2) + 1 and lam.part(1) % 2 == 0


def two_point_label(lam: Sequence[int]) -> Partition:
    """e_{1-i} e_i lam for p = 2, where i is the residue of the node (1, lam_1)."""
    lam = Partition(lam)
    i = (lam[0] - 1) % 2
    once = e_tilde(lam, i, 2)
    twice = e_tilde(once, 1 - i, 2) if once is not None else None
    if twice is None:
        raise ValueError(f"{lam} has no two-step good-node removal with residues {i}, {1 - i}")
    return twice


def classify_two_point(lam: Sequence[int], p: int) -> Verdict:
    """Restriction to A_{n-2,2}, equivalently to A_{n-2}."""
    lam = Partition(lam)
    if (bad := _check_splitting(lam, p)) is not None:
        return bad
    if p == 2 and lam == beta(lam.n):
        return _not_applicable("basic spin is decided by Theorem D")
    js = is_JS(lam, p)
    evidence: dict[str, Any] = {"normal_nodes": _node_evidence(lam, p), "js": js}
    if not js:
        return Verdict(Outcome.REDUCIBLE, "Theorem C", evidence)
    if p == 2:
        evidence["restriction_label"] = str(two_point_label(lam))
    return Verdict(Outcome.IRREDUCIBLE, "Theorem C", evidence)


# -- small cases -----------------------------------------------------------

# dim E^lam_(+-) = dim D^lam / 2 for the splitting partitions that the
# main procedures leave open at n <= 8
SMALL_DIMENSIONS: dict[tuple[int, Partition], int] = {
    (2, Partition((3, 2, 1))): 8,
    (3, Partition((4, 1, 1))): 3,
    (3, Partition((4, 2, 1))): 10,
    (2, Partition((4, 3, 1))): 20,
}


@dataclass(frozen=True)
class SmallCase:
    n: int
    p: int
    lam: Partition
    subgroup: SubgroupDescriptor
    outcome: Outcome
    justification: str
    verified: bool = True


def _sqrt_bound(p: int, lam: Partition, d: SubgroupDescriptor) -> str | None:
    """An irreducible module of a nontrivial group G has dim^2 < |G|."""
    dim = SMALL_DIMENSIONS.get((p, lam))
    if dim is None:
        return None
    order = group_order(d, lam.n)
    if dim * dim >= order:
        return f"sqrt bound: |G| = {order} <= {dim}^2 = dim(E)^2"
    return None


def _small_case_rows() -> list[SmallCase]:
    rows = []
    red, irr = Outcome.REDUCIBLE, Outcome.IRREDUCIBLE
    for d in (MaxIntransitive(3, 3), WreathAlternating(2, 3), WreathAlternating(3, 2)):
        rows.append(SmallCase(6, 2, Partition((3, 2, 1)), d, red, _sqrt_bound(2, Partition((3, 2, 1)), d)))
    o3 = "normal 3-subgroup: O_3(G) != 1 acts trivially on an irreducible restriction of a faithful module"
    rows.append(SmallCase(6, 3, Partition((4, 1, 1)), MaxIntransitive(3, 3), red, o3))
    rows.append(SmallCase(6, 3, Partition((4, 1, 1)), WreathAlternating(3, 2), red, o3))
    rows.append(
        SmallCase(
            6, 3, Partition((4, 1, 1)), WreathAlternating(2, 3), red,
            "Theorem A; sqrt bound fails (|G| = 24 > 9) and no independent argument is implemented",
            verified=False,
        )
    )
    rows.append(SmallCase(7, 3, Partition((4, 2, 1)), MaxIntransitive(4, 3), red,
                          _sqrt_bound(3, Partition((4, 2, 1)), MaxIntransitive(4, 3))))
    lam = Partition((4, 3, 1))
    rows.append(SmallCase(8, 2, lam, PointStabilizer(), irr, "Theorem B(b)"))
    rows.append(SmallCase(8, 2, lam, MaxIntransitive(6, 2), red, "Theorem C: (4,3,1) is not JS"))
    for d in (MaxIntransitive(5, 3), MaxIntransitive(4, 4), WreathAlternating(2, 4)):
        rows.append(SmallCase(8, 2, lam, d, red, _sqrt_bound(2, lam, d)))
    rows.append(SmallCase(8, 2, lam, WreathAlternating(4, 2), red,
                          "(beta_{n-1},1) lemma for G_{n/2,2}: (4,3,1) = (beta_7,1)"))
    return rows


SMALL_CASES: tuple[SmallCase, ...] = tuple(_small_case_rows())


def _small_case(lam: Partition, p: int, d: SubgroupDescriptor) -> SmallCase | None:
    for row in SMALL_CASES:
        if row.p == p and row.lam == lam and row.subgroup == d:
            return row
    return None


# -- intransitive ------------------------------------------------------------


def _subset_sums(parts: Sequence[int]) -> set[int]:
    sums = {0}
    for x in parts:
        sums |= {s + x for s in sums}
    return sums


def _classify_maximal_intransitive(lam: Partition, p: int, k: int) -> Verdict:
    n = lam.n
    if k == 1:
        return classify_point_stabilizer(lam, p)
    if k == 2:
        return classify_two_point(lam, p)
    row = _small_case(lam, p, MaxIntransitive(n - k, k))
    if row is not None:
        return Verdict(row.outcome, "Theorem A", {"small_case": row.justification, "verified": row.verified})
    return Verdict(Outcome.REDUCIBLE, "Theorem A", {"reason": f"A_{{{n - k},{k}}} with k >= 3"})


def classify_intransitive(lam: Sequence[int], p: int, nu: Sequence[int]) -> Verdict:
    """Restriction to A_nu for a proper composition nu of n."""
    lam = Partition(lam)
    nu = Composition(nu)
    n = lam.n
    if nu.n != n or nu.h < 2:
        raise ValueError(f"{nu} is not a proper composition of {n}")
    if p == 2 and lam == beta(n):
        return classify_basic_spin_intransitive(n, nu)
    if (bad := _check_splitting(lam, p)) is not None:
        return bad
    parts = sorted(nu, reverse=True)
    ks = sorted({min(s, n - s) for s in _subset_sums(parts) if 0 < s < n})
    overgroups = {k: _classify_maximal_intransitive(lam, p, k) for k in ks}
    for k in sorted(ks, reverse=True):
        verdict = overgroups[k]
        if verdict.outcome is Outcome.REDUCIBLE:
            if len(parts) == 2:
                return verdict
            evidence = dict(verdict.evidence, overgroup=str(MaxIntransitive(n - k, k)))
            return Verdict(Outcome.REDUCIBLE, verdict.clause, evidence)
    if len(parts) == 2:
        return overgroups[parts[1]]
    if parts == [n - 2, 1, 1]:
        verdict = overgroups[2]
        return Verdict(verdict.outcome, "Theorem C(ii)", verdict.evidence)
    d = YoungAlternating(nu)
    reason = _sqrt_bound(p, lam, d)
    if reason is not None:
        return Verdict(Outcome.REDUCIBLE, "Theorem A", {"small_case": reason})
    return _not_applicable(f"no implemented argument decides A_{{{nu}}}")


# -- wreath ------------------------------------------------------------------


def classify_wreath(lam: Sequence[int], p: int, a: int, b: int) -> Verdict:
    lam = Partition(lam)
    n = lam.n
    if a < 2 or b < 2 or a * b != n:
        raise ValueError(f"need a, b >= 2 with a*b = {n}")
    if p == 2 and lam == beta(n):
        return classify_basic_spin_wreath(n, a, b)
    if (bad := _check_splitting(lam, p)) is not None:
        return bad
    row = _small_case(lam, p, WreathAlternating(a, b))
    if row is not None:
        return Verdict(row.outcome, "Theorem A", {"small_case": row.justification, "verified": row.verified})
    return Verdict(Outcome.REDUCIBLE, "Theorem A", {"reason": f"G_{{{a},{b}}} is transitive imprimitive"})


# -- basic spin --------------------------------------------------------------


def basic_spin_dim(n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    return 2 ** ((n - 1) // 2)


def spin_multiplicity_intransitive(n: int, nu: Sequence[int]) -> int:
    """Exponent e with [D^{beta_n} restricted to S_nu : outer product of D^{beta_{n_r}}] = 2^e."""
    nu = Composition(nu)
    if nu.n != n:
        raise ValueError(f"{nu} is not a composition of {n}")
    return (n - 1) // 2 - sum((x - 1) // 2 for x in nu)


def spin_multiplicity_wreath(a: int, b: int) -> int:
    """Exponent e with [D^{beta_ab} restricted to S_a wr S_b : D^{beta_a} wr D^{beta_b}] = 2^e."""
    if a % 2:
        return 0
    return b // 2 if b % 2 == 0 else (b - 1) // 2


def classify_basic_spin_intransitive(n: int, nu: Sequence[int]) -> Verdict:
    nu = Composition(nu)
    if nu.n != n or nu.h < 2:
        raise ValueError(f"{nu} is not a proper composition of {n}")
    evidence = {"multiplicity_exponent": spin_multiplicity_intransitive(n, nu), "split": n % 4 != 2}
    mod4 = [x % 4 for x in nu]
    odd = sum(1 for x in nu if x % 2)
    if n % 4 == 0 and nu.h == 3 and mod4.count(2) == 1 and odd == 2:
        return Verdict(Outcome.IRREDUCIBLE, "Theorem D(ii)", dict(evidence, condition=1))
    if n % 4 == 0 and nu.h == 2 and odd == 2:
        return Verdict(Outcome.IRREDUCIBLE, "Theorem D(ii)", dict(evidence, condition=2))
    if n % 4 != 2 and nu.h == 2 and 2 in mod4:
        return Verdict(Outcome.IRREDUCIBLE, "Theorem D(ii)", dict(evidence, condition=3))
    return Verdict(Outcome.REDUCIBLE, "Theorem D", evidence)


def theorem_d_intransitive(n: int, k: int) -> bool:
    """The clause for A_{n-k,k}, read symmetrically in k and n-k."""
    if n % 4 == 2:
        raise ValueError("beta_n does not split when n = 2 mod 4")
    return any((n % 4 == 0 and j % 2 == 1) or j % 4 == 2 for j in (k, n - k))


def classify_basic_spin_wreath(n: int, a: int, b: int) -> Verdict:
    if a < 2 or b < 2 or a * b != n:
        raise ValueError(f"need a, b >= 2 with a*b = {n}")
    evidence = {"multiplicity_exponent": spin_multiplicity_wreath(a, b), "split": n % 4 != 2}
    if a % 2:
        return Verdict(Outcome.IRREDUCIBLE, "Theorem D(iii)", dict(evidence, condition="a odd"))
    if n % 4 != 2 and a % 4 == 2 and b == 2:
        return Verdict(Outcome.IRREDUCIBLE, "Theorem D(iii)", dict(evidence, condition="a = 2 mod 4, b = 2"))
    return Verdict(Outcome.REDUCIBLE, "Theorem D", evidence)


# -- umbrella --------------------------------------------------------------


def classify(q: RestrictionQuery) -> Verdict:
    lam, p, d, n = q.lam, q.p, q.subgroup, q.n
    if isinstance(d, Primitive):
        return Verdict(Outcome.OUT_OF_SCOPE_PRIMITIVE, "Theorem A(i)", {"reason": "primitive subgroups are deferred"})
    if isinstance(d, FullAlternating):
        return Verdict(Outcome.IRREDUCIBLE, "G = A_n", {})
    if isinstance(d, WreathAlternating):
        return classify_wreath(lam, p, d.a, d.b)
    nu = d.composition(n)
    if p == 2 and lam == beta(n):
        return classify_basic_spin_intransitive(n, nu)
    if isinstance(d, PointStabilizer):
        return classify_point_stabilizer(lam, p)
    return classify_intransitive(lam, p, nu)


__all__ = [
    "Outcome",
    "RestrictionQuery",
    "SMALL_CASES",
    "SMALL_DIMENSIONS",
    "SmallCase",
    "Verdict",
    "basic_spin_dim",
    "classify",
    "classify_basic_spin_intransitive",
    "classify_basic_spin_wreath",
    "classify_intransitive",
    "classify_point_stabilizer",
    "classify_two_point",
    "classify_wreath",
    "point_stabilizer_parity_form",
    "spin_multiplicity_intransitive",
    "spin_multiplicity_wreath",
    "theorem_d_intransitive",
    "two_point_label",
]

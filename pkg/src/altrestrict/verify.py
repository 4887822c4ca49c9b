"""Named desk-scale checks, each reporting items checked, listed exceptions and failures.

Every suite splits its range into independent work items so the harness can
fan out over processes; results are merged in item order, so the report does
not depend on the degree of parallelism.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import Any, Callable, Iterable

from .branching import (
    JS3_LISTED,
    SIZE_GAP_EXCEPTIONS,
    audit_half_restriction,
    audit_js_three_factor,
    audit_p3_five_factor,
    js3_families,
    js_truncation,
    js_truncation_properties,
    js_size_gap_holds,
    explicit_pair_base,
    explicit_pair,
    reachable,
)
from .mullineux import is_mullineux_fixed, mullineux_map, mullineux_map_crystal
from .nodes import (
    MINUS,
    e_tilde,
    epsilon,
    f_tilde,
    is_JS,
    phi,
    signature,
)
from .partitions import Partition, beta, enumerate_p_regular, enumerate_splitting, in_splitting_class, is_p_regular
from .permmod import MaxIntransitive, ModuleKind, ModuleSpec, WreathAlternating, invariant_dim, orbit_count
from .verdicts import (
    SMALL_CASES,
    RestrictionQuery,
    basic_spin_dim,
    classify,
    classify_basic_spin_intransitive,
    classify_point_stabilizer,
    classify_two_point,
    point_stabilizer_parity_form,
    spin_multiplicity_intransitive,
    theorem_d_intransitive,
    two_point_label,
)


@dataclass
class ItemResult:
    checked: int = 0
    exceptions: list[str] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)

    def check(self, ok: bool, label: str) -> None:
        self.checked += 1
        if not ok:
            self.failures.append(label)


@dataclass(frozen=True)
class Suite:
    name: str
    claim: str
    default_max_n: int
    primes: tuple[int, ...]
    items: Callable[[int, int, tuple[int, ...]], list[tuple]]
    run_item: Callable[..., ItemResult]
    min_n: int = 5


# -- crystal and Mullineux ---------------------------------------------------


def _reduced_by_cancellation(lam: Partition, i: int, p: int) -> tuple[int, int]:
    word = "".join("-" if sign == MINUS else "+" for sign, _ in signature(lam, i, p).entries)
    while "+-" in word:
        word = word.replace("+-", "")
    return word.count("-"), word.count("+")


def _crystal(n: int, p: int) -> ItemResult:
    out = ItemResult()
    for lam in enumerate_p_regular(n, p):
        for i in range(p):
            down = e_tilde(lam, i, p)
            if down is not None:
                out.check(is_p_regular(down, p) and f_tilde(down, i, p) == lam, f"e{i} {lam}")
            up = f_tilde(lam, i, p)
            if up is not None:
                out.check(e_tilde(up, i, p) == lam, f"f{i} {lam}")
            out.check(_reduced_by_cancellation(lam, i, p) == (epsilon(lam, i, p), phi(lam, i, p)), f"sig{i} {lam}")
    return out


def _mullineux(n: int, p: int) -> ItemResult:
    out = ItemResult()
    for lam in enumerate_p_regular(n, p):
        image = mullineux_map(lam, p)
        ok = image.n == n and mullineux_map(image, p) == lam and image == mullineux_map_crystal(lam, p)
        if p == 2:
            ok = ok and image == lam
        out.check(ok, str(lam))
    if p == 3:
        for lam in JS3_LISTED:
            if lam.n == n:
                out.check(is_mullineux_fixed(lam, 3) and is_JS(lam, 3), f"listed {lam}")
    return out


def _js_parity(n: int, p: int) -> ItemResult:
    out = ItemResult()
    for lam in enumerate_p_regular(n, 2):
        out.check(is_JS(lam, 2) == (len({x % 2 for x in lam}) <= 1), str(lam))
    return out


def _splitting(n: int, p: int) -> ItemResult:
    out = ItemResult()
    if p == 2:
        out.check(in_splitting_class(beta(n), 2) == (n % 4 != 2), f"beta_{n}")
        if n == 8:
            out.check(set(enumerate_splitting(8, 2)) == {Partition((5, 3)), Partition((4, 3, 1))}, "n=8")
    if 5 <= n <= 30:
        for lam in enumerate_splitting(n, p):
            out.check(lam.h >= 3 or (p == 2 and lam == beta(n)), str(lam))
    return out


# -- JS truncation and reachability -------------------------------------------


def _jstrunc(n: int, p: int) -> ItemResult:
    out = ItemResult()
    for lam in enumerate_p_regular(n, 2):
        props = js_truncation_properties(lam, with_reachability=n <= 24)
        for key, ok in props.items():
            out.check(ok, f"{lam} ({key})")
    return out


def _size_gap(n: int, p: int) -> ItemResult:
    out = ItemResult()
    if n % 2 or n < 12:
        return out
    for lam in enumerate_splitting(n, 2):
        if lam in SIZE_GAP_EXCEPTIONS:
            out.exceptions.append(str(lam))
            continue
        out.check(js_size_gap_holds(lam), str(lam))
    return out


def _reachability(n: int, p: int) -> ItemResult:
    out = ItemResult()
    for lam in enumerate_p_regular(n, 2):
        js = js_truncation(lam)
        found = reachable(lam, 2, js.n)
        out.check(js in found, f"{lam} -> {js}")
        for mu in found:
            witness = found.witness(mu)
            out.check(witness.end == mu and witness.validate(2), f"witness {lam} -> {mu}")
    if n % 4 == 0 and n >= 12:
        base = explicit_pair_base(n)
        for k in range(2, min(12, n - 9) + 1):
            found = reachable(base, 2, n - k)
            out.check(all(mu in found for mu in explicit_pair(n, k)), f"pair n={n} k={k}")
    return out


def _audit_result(audits) -> ItemResult:
    out = ItemResult()
    for a in audits:
        label = f"{a.lam} at S_{a.m}: {a.found}/{a.needed}"
        if a.status in ("exception", "table"):
            out.exceptions.append(f"{label} {a.status} {a.note}".strip())
        else:
            out.check(a.status == "certified", label)
    return out


def _half_restriction(n: int, p: int) -> ItemResult:
    return _audit_result(audit_half_restriction(n)) if n % 2 == 0 else ItemResult()


def _js_three_factor(n: int, p: int) -> ItemResult:
    return _audit_result(audit_js_three_factor(n))


def _p3_five_factor(n: int, p: int) -> ItemResult:
    return _audit_result(audit_p3_five_factor(n)) if n % 2 == 0 else ItemResult()


def _js3_families(n: int, p: int) -> ItemResult:
    out = ItemResult()
    for lam in enumerate_splitting(n, 3):
        if is_JS(lam, 3):
            out.check(len(js3_families(lam)) == 1, str(lam))
    return out


# -- permutation modules --------------------------------------------------------


def _orbit_counts(n: int, p: int) -> ItemResult:
    out = ItemResult()
    for k in range(1, n // 2 + 1):
        d = MaxIntransitive(n - k, k)
        expected = {1: [2, 2, 2], 2: [2, 3, 3]}.get(k, [2, 3, 4])
        for j in range(1, min(3, n // 2) + 1):
            got = orbit_count(d, n, j)
            out.check(got == expected[j - 1], f"{d} i_{j}={got}")
            out.check(got == invariant_dim(ModuleSpec(ModuleKind.M, n, p, j), d), f"{d} M_{j}")
    return out


def _invariants_young(n: int, p: int) -> ItemResult:
    out = ItemResult()
    for k in range(1, n // 2 + 1):
        d = MaxIntransitive(n - k, k)
        s1 = invariant_dim(ModuleSpec(ModuleKind.S1STAR, n, p), d)
        s2 = invariant_dim(ModuleSpec(ModuleKind.S2STAR, n, p), d)
        out.check(s1 == 1, f"{d} S1*={s1}")
        out.check(s2 == (0 if k == 1 else 1), f"{d} S2*={s2}")
    return out


def _invariants_wreath(n: int, p: int) -> ItemResult:
    out = ItemResult()
    for a in range(2, n // 2 + 1):
        if n % a:
            continue
        b = n // a
        d = WreathAlternating(a, b)
        s1 = invariant_dim(ModuleSpec(ModuleKind.S1STAR, n, p), d)
        out.check((s1 != 0) if (p == 2 and b == 2) else (s1 == 0), f"{d} S1*={s1}")
        if a >= 3 and b >= 3:
            s2 = invariant_dim(ModuleSpec(ModuleKind.S2STAR, n, p), d)
            out.check(s2 == 1, f"{d} S2*={s2}")
    return out


# -- decision procedures -----------------------------------------------------------


def _theorem_b(n: int, p: int) -> ItemResult:
    out = ItemResult()
    for lam in enumerate_splitting(n, 2):
        out.check(classify_point_stabilizer(lam, 2).irreducible == point_stabilizer_parity_form(lam), str(lam))
    return out


def _theorem_c(n: int, p: int) -> ItemResult:
    out = ItemResult()
    for lam in enumerate_splitting(n, p):
        if p == 2 and lam == beta(n):
            continue
        v = classify_two_point(lam, p)
        ok = v.irreducible == is_JS(lam, p)
        if ok and v.irreducible and p == 2:
            expected = Partition(x for x in (lam[0] - 1, lam[1] - 1, *lam[2:]) if x)
            ok = v.evidence["restriction_label"] == str(expected) == str(two_point_label(lam))
        out.check(ok, str(lam))
    return out


def _theorem_d(n: int, p: int) -> ItemResult:
    out = ItemResult()
    if n % 4 == 2:
        return out
    for k in range(1, n // 2 + 1):
        v = classify(RestrictionQuery(2, beta(n), MaxIntransitive(n - k, k)))
        two_part = classify_basic_spin_intransitive(n, (n - k, k))
        out.check(v.irreducible == theorem_d_intransitive(n, k) == two_part.irreducible, f"k={k}")
    return out


def _partitions_of(n: int) -> Iterable[tuple[int, ...]]:
    def go(rest: int, top: int):
        if rest == 0:
            yield ()
            return
        for x in range(min(rest, top), 0, -1):
            for tail in go(rest - x, x):
                yield (x, *tail)

    return go(n, n)


def _spin_dim(n: int, p: int) -> ItemResult:
    out = ItemResult()
    for nu in _partitions_of(n):
        e = spin_multiplicity_intransitive(n, nu)
        total = 2**e
        for x in nu:
            total *= basic_spin_dim(x)
        out.check(e >= 0 and total == basic_spin_dim(n), str(nu))
    return out


def _small_cases(n: int, p: int) -> ItemResult:
    out = ItemResult()
    for row in SMALL_CASES:
        if (row.n, row.p) != (n, p):
            continue
        v = classify(RestrictionQuery(row.p, row.lam, row.subgroup))
        out.check(v.outcome is row.outcome, f"{row.lam} on {row.subgroup}")
        if not row.verified:
            out.exceptions.append(f"{row.lam} on {row.subgroup}: unverified")
    return out


def _per_n(step: int = 1) -> Callable[[int, int, tuple[int, ...]], list[tuple]]:
    def items(lo: int, hi: int, primes: tuple[int, ...]) -> list[tuple]:
        start = lo + (-lo) % step if step > 1 else lo
        return [(n, p) for p in primes for n in range(start, hi + 1, step)]

    return items


def _suite(name, claim, default_max_n, primes, run, min_n=5, step=1) -> Suite:
    return Suite(name, claim, default_max_n, primes, _per_n(step), run, min_n)


SUITES: dict[str, Suite] = {
    s.name: s
    for s in (
        _suite("crystal", "crystal round trips, epsilon/phi from reduced signatures", 25, (2, 3, 5), _crystal, 0),
        _suite("js-parity", "p=2: JS iff all parts have the same parity", 30, (2,), _js_parity, 1),
        _suite("mullineux-involution", "Mullineux map: involution, size, p=2 identity, symbol = crystal", 20, (2, 3, 5), _mullineux, 0),
        _suite("splitting", "beta_n splits iff n != 2 mod 4; splitting lam have >= 3 rows unless basic spin", 40, (2, 3), _splitting),
        _suite("jstrunc", "eight properties of the JS truncation", 26, (2,), _jstrunc, 1),
        _suite("size-gap", "|lam^JS| >= n/2 + 5 and gap <= 2, listed doubles exempt", 30, (2,), _size_gap, 12, 2),
        _suite("reachability", "witnesses re-validate; lam^JS reachable; explicit pairs reachable", 24, (2,), _reachability, 1),
        _suite("half-restriction", ">= 3 certified factors at S_{n/2}", 20, (2,), _half_restriction, 6, 2),
        _suite("js-three-factor", ">= 3 certified factors at S_{n-k}, 5 <= k <= n/2, JS lam", 20, (2,), _js_three_factor, 10),
        _suite("p3-five-factor", ">= 5 certified factors at S_{n/2}, p=3 JS lam", 30, (3,), _p3_five_factor, 6, 2),
        _suite("js3-families", "p=3 JS splitting lam lie in exactly one family", 45, (3,), _js3_families, 1),
        _suite("orbit-counts", "i_1 = 2, i_2 = 3, i_3 in {3, 4}; dim M_k^G = i_k(G)", 14, (2, 3), _orbit_counts),
        _suite("invariants-young", "dim (S_1*)^G = dim (S_2*)^G = 1 for A_{n-k,k}; (S_2*)^{A_{n-1}} = 0", 14, (2, 3), _invariants_young),
        _suite("invariants-wreath", "(S_1*)^G = 0 unless p = b = 2; dim (S_2*)^G = 1 for a, b >= 3", 18, (2, 3), _invariants_wreath, 6),
        _suite("theorem-b", "p=2 point stabilizer: residue form = parity form", 30, (2,), _theorem_b),
        _suite("theorem-c", "two-point stabilizer irreducible iff JS, with the p=2 label", 30, (2, 3), _theorem_c),
        _suite("theorem-d", "basic spin on A_{n-k,k}: clause table = two-part proposition", 40, (2,), _theorem_d),
        _suite("spin-dim", "2^e times the product of part dimensions = dim of the basic spin module", 40, (2,), _spin_dim, 1),
        _suite("small-cases", "small-n table reproduced by the dispatcher", 8, (2, 3), _small_cases),
    )
}


# short names kept for scripts that predate the descriptive ones
ALIASES: dict[str, str] = {"l1": "size-gap"}


def _run_item(suite_name: str, item: tuple) -> ItemResult:
    return SUITES[suite_name].run_item(*item)


def verify_suite(
    name: str,
    *,
    max_n: int | None = None,
    min_n: int | None = None,
    primes: Iterable[int] | None = None,
    threads: int = 1,
) -> dict[str, Any]:
    """Run one suite and return a JSON-ready report."""
    name = ALIASES.get(name, name)
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; known: {', '.join(sorted(SUITES))}")
    suite = SUITES[name]
    hi = suite.default_max_n if max_n is None else max_n
    lo = suite.min_n if min_n is None else min_n
    chosen = tuple(primes) if primes else suite.primes
    if bad := [p for p in chosen if p not in suite.primes]:
        raise ValueError(f"suite {name} supports p in {suite.primes}, got {bad}")
    items = suite.items(lo, hi, chosen)
    work = partial(_run_item, name)
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(work, items))
    else:
        results = [work(item) for item in items]
    report: dict[str, Any] = {
        "suite": name,
        "claim": suite.claim,
        "bounds": {"min_n": lo, "max_n": hi, "p": list(chosen)},
        "checked": 0,
        "exceptions": [],
        "failures": [],
    }
    for (n, p), result in zip(items, results):
        report["checked"] += result.checked
        report["exceptions"] += [f"n={n} p={p}: {e}" for e in result.exceptions]
        report["failures"] += [f"n={n} p={p}: {f}" for f in result.failures]
    report["passed"] = not report["failures"]
    return report


__all__ = ["ALIASES", "ItemResult", "SUITES", "Suite", "verify_suite"]

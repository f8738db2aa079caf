"""Exhaustive cross-checks between formulas and enumeration.

Each suite returns a list of `CheckResult` rows, one per (check, t), and
keeps the first few counterexamples of every failing row.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .errors import DomainError, ResourceLimitError
from .hypercube import (
    MIN_T,
    Tope,
    decompose,
    mask_members,
    predicted_q_size,
    q_size,
    recompose,
)
from .identities import (
    norm_of_disjoint_union,
    x_closed_form,
    x_of_disjoint_union,
    x_superset_delta,
)
from .smirnov import (
    THETA,
    Letter,
    gf_coefficient,
    smirnov_count_closed,
    smirnov_count_dp,
    smirnov_enumerate,
)
from .statistics import (
    BoundaryCase,
    brute_force_pairs,
    brute_force_topes,
    count_pairs_case,
    count_pairs_case_structural,
    count_topes_with_negpart_and_qsize,
    count_topes_with_qsize,
    pair_queries,
)

SUITES = ("decomp", "identities", "smirnov", "pairs")
CAP_2T = 16
CAP_3T = 14
MAX_COUNTEREXAMPLES = 10


@dataclass
class CheckResult:
    suite: str
    check: str
    t: int
    passed: int = 0
    failed: int = 0
    note: str = ""
    counterexamples: list[str] = field(default_factory=list)

    def record(self, ok: bool, detail) -> None:
        if ok:
            self.passed += 1
            return
        self.failed += 1
        if len(self.counterexamples) < MAX_COUNTEREXAMPLES:
            self.counterexamples.append(detail() if callable(detail) else str(detail))


@dataclass
class _CaseRow(CheckResult):
    pairs: int = 0


def check_caps(suite: str, t_max: int, unsafe: bool = False) -> None:
    if t_max < MIN_T:
        raise DomainError(f"t-max={t_max} is below {MIN_T}")
    if unsafe:
        return
    caps = {"decomp": CAP_2T, "identities": CAP_3T, "smirnov": CAP_3T, "pairs": CAP_3T}
    names = SUITES if suite == "all" else (suite,)
    for name in names:
        if t_max > caps[name]:
            raise ResourceLimitError(
                f"suite {name} is capped at t={caps[name]}; got t-max={t_max} (see --unsafe-cap)"
            )


def suite_decomp(t: int) -> list[CheckResult]:
    recon = CheckResult("decomp", "reconstruction", t)
    norm = CheckResult("decomp", "odd_support_norm", t)
    runs = CheckResult("decomp", "predicted_q_size", t)
    closed = CheckResult("decomp", "x_closed_form", t)
    for mask in range(1 << t):
        tope = Tope(t, mask)
        x = decompose(tope)
        recon.record(recompose(x, t) == tope, lambda: f"t={t} T={tope} x={x}")
        support = sum(1 for v in x if v)
        ok = set(x) <= {-1, 0, 1} and support % 2 == 1 and support == sum(v * v for v in x)
        norm.record(ok, lambda: f"t={t} T={tope} x={x}")
        a = sorted(mask_members(mask))
        runs.record(predicted_q_size(a, t) == q_size(tope), lambda: f"t={t} A={a}")
        closed.record(x_closed_form(a, t) == x, lambda: f"t={t} A={a} x={x}")

    topes = CheckResult("decomp", "tope_counts", t)
    table = brute_force_topes(t)
    for ell in range(1, t + 1, 2):
        total = sum(v for (j, l), v in table.items() if l == ell)
        want = count_topes_with_qsize(t, ell)
        topes.record(total == want, lambda: f"t={t} ell={ell} brute={total} formula={want}")
        for j in range(1, t):
            got = table.get((j, ell), 0)
            want = count_topes_with_negpart_and_qsize(t, j, ell)
            topes.record(got == want, lambda: f"t={t} j={j} ell={ell} brute={got} formula={want}")
    return [recon, norm, runs, closed, topes]


def suite_identities(t: int) -> list[CheckResult]:
    union = CheckResult("identities", "disjoint_union", t)
    norm = CheckResult("identities", "union_norm", t)
    nested = CheckResult("identities", "superset_delta", t)
    xs = [decompose(Tope(t, m)) for m in range(1 << t)]
    qs = [sum(1 for v in x if v) for x in xs]
    full = (1 << t) - 1
    for a in range(1 << t):
        rest = full ^ a
        b = rest
        while True:
            got = x_of_disjoint_union(xs[a], xs[b])
            union.record(got == xs[a | b], lambda: f"t={t} A={sorted(mask_members(a))} B={sorted(mask_members(b))}")
            n = norm_of_disjoint_union(xs[a], xs[b])
            norm.record(n == qs[a | b], lambda: f"t={t} A={sorted(mask_members(a))} B={sorted(mask_members(b))}")
            # C = A u B runs over every superset of A exactly once
            a_set, c_set = mask_members(a), mask_members(a | b)
            got = x_superset_delta(xs[a], a_set, c_set, t)
            nested.record(got == xs[a | b], lambda: f"t={t} A={sorted(a_set)} C={sorted(c_set)}")
            if b == 0:
                break
            b = (b - 1) & rest
    return [union, norm, nested]


def suite_smirnov(total: int) -> list[CheckResult]:
    """Words of exactly `total` letters."""
    dp_enum = CheckResult("smirnov", "dp_vs_enumeration", total)
    closed = CheckResult("smirnov", "closed_vs_dp", total)
    gf = CheckResult("smirnov", "gf_vs_dp", total)
    for k in range(total + 1):
        for i in range(total - k + 1):
            counts = (k, i, total - k - i)
            words = smirnov_enumerate(counts, cap=max(total, 1))
            for s, e in product(Letter, repeat=2):
                brute = sum(1 for w in words if w[0] is s and w[-1] is e)
                dp = smirnov_count_dp(s, e, counts)
                dp_enum.record(dp == brute, lambda: f"T({s.value},{e.value};{counts}) dp={dp} enum={brute}")
                c = smirnov_count_closed(s, e, counts)
                closed.record(c == dp, lambda: f"T({s.value},{e.value};{counts}) closed={c} dp={dp}")
            for e in Letter:
                g = gf_coefficient(e, *counts, cap=max(total, 1))
                dp = smirnov_count_dp(THETA, e, counts)
                gf.record(g == dp, lambda: f"[u^{k} v^{i} w^{total - k - i}] f_{e.value}={g} dp={dp}")
    return [dp_enum, closed, gf]


def suite_pairs(t: int, workers: int = 1) -> list[CheckResult]:
    brute = brute_force_pairs(t, cap=max(t, CAP_3T), workers=workers)
    rows = {c: _CaseRow("pairs", f"case_{c.value}", t) for c in BoundaryCase}
    structural = CheckResult("pairs", "closed_vs_structural", t)
    seen = 0
    for q in pair_queries(t):
        for case in BoundaryCase:
            want = brute.get((*q.key, case), 0)
            seen += want
            got = count_pairs_case(q, case)
            rows[case].record(got == want, lambda: f"t={t} {q.key} case {case.value}: closed={got} brute={want}")
            st = count_pairs_case_structural(q, case)
            structural.record(st == got, lambda: f"t={t} {q.key} case {case.value}: structural={st} closed={got}")
    for key, n in brute.items():
        rows[key[5]].pairs += n
    for row in rows.values():
        row.note = f"pairs={row.pairs}"
    coverage = CheckResult("pairs", "classified_all", t)
    coverage.record(seen == sum(brute.values()), f"t={t} tallies with ell > t")
    return [*rows.values(), structural, coverage]


def run_suite(suite: str, t_max: int, workers: int = 1, unsafe: bool = False) -> list[CheckResult]:
    if suite != "all" and suite not in SUITES:
        raise DomainError(f"unknown suite {suite!r}")
    check_caps(suite, t_max, unsafe)
    names = SUITES if suite == "all" else (suite,)
    results: list[CheckResult] = []
    for name in names:
        start = 1 if name == "smirnov" else MIN_T
        for t in range(start, t_max + 1):
            if name == "decomp":
                results += suite_decomp(t)
            elif name == "identities":
                results += suite_identities(t)
            elif name == "smirnov":
                results += suite_smirnov(t)
            else:
                results += suite_pairs(t, workers)
    return results

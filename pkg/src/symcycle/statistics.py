"""Counting statistics on topes and on ordered pairs of disjoint subsets.

The pair family for ground size t consists of ordered pairs (A, B) of
disjoint nonempty subsets of [t] with |A| + |B| < t.  Each pair carries
the decomposition sizes

    ell_prime        = |Q(-A T+)|
    ell_double_prime = |Q(-B T+)|
    ell              = |Q(-(A u B) T+)|

and one of nine boundary cases given by (A cap {1,t}, B cap {1,t}).
Every count here is an exact Python int.
"""

from __future__ import annotations

import enum
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .errors import DomainError, ResourceLimitError
from .hypercube import Tope, check_ground_size, q_size, subset_mask
from .identities import BoundaryType
from .smirnov import ALPHA, BETA, THETA, Letter, binom, composition_count, smirnov_count_closed

TOPE_ENUMERATION_CAP = 20
PAIR_ENUMERATION_CAP = 14


class BoundaryCase(enum.Enum):
    I = "i"
    II = "ii"
    III = "iii"
    IV = "iv"
    V = "v"
    VI = "vi"
    VII = "vii"
    VIII = "viii"
    IX = "ix"

    @classmethod
    def parse(cls, token: str) -> "BoundaryCase":
        try:
            return cls(token.strip().lower())
        except ValueError:
            raise DomainError(f"unknown case {token!r}; expected one of i..ix") from None


_N, _L, _R, _B = BoundaryType.NONE, BoundaryType.LEFT, BoundaryType.RIGHT, BoundaryType.BOTH

CASE_OF_BOUNDARIES: dict[tuple[BoundaryType, BoundaryType], BoundaryCase] = {
    (_N, _N): BoundaryCase.I,
    (_B, _N): BoundaryCase.II,
    (_N, _R): BoundaryCase.III,
    (_L, _N): BoundaryCase.IV,
    (_L, _R): BoundaryCase.V,
    (_N, _B): BoundaryCase.VI,
    (_R, _N): BoundaryCase.VII,
    (_N, _L): BoundaryCase.VIII,
    (_R, _L): BoundaryCase.IX,
}


@dataclass(frozen=True)
class PairQuery:
    t: int
    j_prime: int
    j_double_prime: int
    ell_prime: int
    ell_double_prime: int
    ell: int

    def __post_init__(self) -> None:
        check_ground_size(self.t)
        t, jp, jpp = self.t, self.j_prime, self.j_double_prime
        if not (0 < jp < t and 0 < jpp < t and jp + jpp < t):
            raise DomainError(f"need 0 < j', j'' and j' + j'' < t; got j'={jp}, j''={jpp}, t={t}")
        for name in ("ell_prime", "ell_double_prime", "ell"):
            v = getattr(self, name)
            if v < 1 or v % 2 == 0:
                raise DomainError(f"{name}={v} must be a positive odd integer")

    @property
    def key(self) -> tuple[int, int, int, int, int]:
        return (self.j_prime, self.j_double_prime, self.ell_prime, self.ell_double_prime, self.ell)


# ---------------------------------------------------------------------------
# tope counts

def _check_odd_ell(t: int, ell: int) -> None:
    if ell % 2 == 0 or not 1 <= ell <= t:
        raise DomainError(f"ell={ell} must be odd and in [1, {t}]")


def count_topes_with_qsize(t: int, ell: int) -> int:
    """Number of topes T with |Q(T, R)| = ell."""
    check_ground_size(t)
    _check_odd_ell(t, ell)
    return 2 * binom(t, ell)


def count_topes_with_negpart_and_qsize(t: int, j: int, ell: int) -> int:
    """Number of topes with |T^-| = j and |Q(T, R)| = ell, for 1 <= j <= t-1."""
    check_ground_size(t)
    _check_odd_ell(t, ell)
    if not 1 <= j <= t - 1:
        raise DomainError(f"j={j} outside [1, {t - 1}]")
    h = (ell - 1) // 2
    if j < h or j > t - h:
        return 0
    return binom(j - 1, h) * binom(t - j, h) + binom(t - j - 1, h) * binom(j, h)


def brute_force_topes(t: int, cap: int = TOPE_ENUMERATION_CAP) -> dict[tuple[int, int], int]:
    """Tally (|T^-|, |Q(T, R)|) over all 2^t topes."""
    check_ground_size(t)
    if t > cap:
        raise ResourceLimitError(f"t={t} exceeds the 2^t enumeration cap {cap}")
    tally: Counter = Counter()
    for mask in range(1 << t):
        tally[(mask.bit_count(), q_size(Tope(t, mask)))] += 1
    return dict(sorted(tally.items()))


# ---------------------------------------------------------------------------
# pair classification

def boundary_case_of(a: Iterable[int], b: Iterable[int], t: int) -> BoundaryCase:
    check_ground_size(t)
    ma, mb = subset_mask(a, t), subset_mask(b, t)
    if ma & mb:
        raise DomainError("A and B are not disjoint")
    return CASE_OF_BOUNDARIES[(BoundaryType._from_mask(ma, t), BoundaryType._from_mask(mb, t))]


# ---------------------------------------------------------------------------
# closed forms, one per boundary case

def _h(n: int) -> int:
    q, r = divmod(n, 2)
    assert r == 0, f"half of odd {n}"
    return q


def _q(n: int) -> int:
    q, r = divmod(n, 4)
    assert r == 0, f"parity branch gave non-integral exponent {n}/4"
    return q


def _one_term(top: int, d: int, s: int, bottom: int, *, weighted: bool) -> int:
    """C(top, (d -+ 1)/4) C((s - 7 or 9)/4, bottom), the shape of cases I, II, VI.

    `d` is the signed combination (e.g. ell + ell' - ell''), `s` the sum
    ell + ell' + ell''.
    """
    if weighted:
        return _h(d + 1) * binom(top, _q(d + 1)) * binom(_q(s - 9), bottom)
    return binom(top, _q(d - 1)) * binom(_q(s - 7), bottom)


def _two_term(top: int, d: int, s: int, *, odd: bool) -> int:
    """The shape of cases III, IV, V, VII, VIII, IX."""
    if odd:
        return _h(d + 3) * binom(top, _q(d + 1)) * binom(_q(s - 5), top)
    return (
        binom(top, _q(d - 1)) * binom(_q(s - 3), top)
        + _h(d + 3) * binom(top, _q(d + 3)) * binom(_q(s - 7), top)
    )


def count_pairs_case(q: PairQuery, case: BoundaryCase) -> int:
    """Closed-form count of family pairs (A, B) in one boundary case."""
    t, jp, jpp = q.t, q.j_prime, q.j_double_prime
    lp, lpp, l = q.ell_prime, q.ell_double_prime, q.ell
    free = t - (jp + jpp)
    s = l + lp + lpp
    minus_odd = _h(s - 1) % 2 == 1  # (ell + ell' + ell'' - 1)/2 odd
    plus_odd = _h(s + 1) % 2 == 1  # (ell + ell' + ell'' + 1)/2 odd

    if case is BoundaryCase.I:
        pre = binom(free - 1, _h(l - 1)) * binom(jp - 1, _h(lp - 3)) * binom(jpp - 1, _h(lpp - 3))
        return pre * _one_term(_h(l - 1), l + lp - lpp, s, _h(l - 3), weighted=not minus_odd)
    if case is BoundaryCase.II:
        pre = binom(free - 1, _h(l - 3)) * binom(jp - 1, _h(lp - 1)) * binom(jpp - 1, _h(lpp - 3))
        return pre * _one_term(_h(lp - 1), l + lp - lpp, s, _h(lp - 3), weighted=not minus_odd)
    if case is BoundaryCase.VI:
        pre = binom(free - 1, _h(l - 3)) * binom(jp - 1, _h(lp - 3)) * binom(jpp - 1, _h(lpp - 1))
        return pre * _one_term(_h(lpp - 1), l + lpp - lp, s, _h(lpp - 3), weighted=not minus_odd)
    if case is BoundaryCase.III:
        pre = binom(free - 1, _h(l - 1)) * binom(jp - 1, _h(lp - 3)) * binom(jpp - 1, _h(lpp - 1))
        return pre * _two_term(_h(l - 1), l + lpp - lp, s, odd=plus_odd)
    if case is BoundaryCase.IV:
        pre = binom(free - 1, _h(l - 1)) * binom(jp - 1, _h(lp - 1)) * binom(jpp - 1, _h(lpp - 3))
        return pre * _two_term(_h(lp - 1), l + lp - lpp, s, odd=plus_odd)
    if case is BoundaryCase.V:
        pre = binom(free - 1, _h(l - 3)) * binom(jp - 1, _h(lp - 1)) * binom(jpp - 1, _h(lpp - 1))
        return pre * _two_term(_h(lp - 1), lp + lpp - l, s, odd=plus_odd)
    if case is BoundaryCase.VII:
        pre = binom(free - 1, _h(l - 1)) * binom(jp - 1, _h(lp - 1)) * binom(jpp - 1, _h(lpp - 3))
        return pre * _two_term(_h(l - 1), l + lp - lpp, s, odd=plus_odd)
    if case is BoundaryCase.VIII:
        pre = binom(free - 1, _h(l - 1)) * binom(jp - 1, _h(lp - 3)) * binom(jpp - 1, _h(lpp - 1))
        return pre * _two_term(_h(lpp - 1), l + lpp - lp, s, odd=plus_odd)
    if case is BoundaryCase.IX:
        pre = binom(free - 1, _h(l - 3)) * binom(jp - 1, _h(lp - 1)) * binom(jpp - 1, _h(lpp - 1))
        return pre * _two_term(_h(lpp - 1), lp + lpp - l, s, odd=plus_odd)
    raise DomainError(f"unknown case {case!r}")


# (first letter, last letter, theta offset, alpha offset, beta offset);
# a letter count is (ell_x + offset) / 2 for the matching ell
STRUCTURE: dict[BoundaryCase, tuple[Letter, Letter, int, int, int]] = {
    BoundaryCase.I: (THETA, THETA, +1, -1, -1),
    BoundaryCase.II: (ALPHA, ALPHA, -1, +1, -1),
    BoundaryCase.III: (THETA, BETA, +1, -1, +1),
    BoundaryCase.IV: (ALPHA, THETA, +1, +1, -1),
    BoundaryCase.V: (ALPHA, BETA, -1, +1, +1),
    BoundaryCase.VI: (BETA, BETA, -1, -1, +1),
    BoundaryCase.VII: (THETA, ALPHA, +1, +1, -1),
    BoundaryCase.VIII: (BETA, THETA, +1, -1, +1),
    BoundaryCase.IX: (BETA, ALPHA, -1, +1, +1),
}


def run_counts(q: PairQuery, case: BoundaryCase) -> tuple[Letter, Letter, tuple[int, int, int]]:
    """First letter, last letter and letter counts of the run word of a case."""
    first, last, ot, oa, ob = STRUCTURE[case]
    counts = (_h(q.ell + ot), _h(q.ell_prime + oa), _h(q.ell_double_prime + ob))
    return first, last, counts


def count_pairs_case_structural(
    q: PairQuery,
    case: BoundaryCase,
    counter: Callable[[Letter, Letter, Sequence[int]], int] = smirnov_count_closed,
) -> int:
    """Run-word count times the three composition counts.

    `counter` evaluates the number of Smirnov words; it defaults to the
    closed forms and may be swapped for the recursion.
    """
    first, last, (nt, na, nb) = run_counts(q, case)
    words = counter(first, last, (nt, na, nb))
    free = q.t - q.j_prime - q.j_double_prime
    return (
        words
        * composition_count(nt, free)
        * composition_count(na, q.j_prime)
        * composition_count(nb, q.j_double_prime)
    )


def count_pairs_total(q: PairQuery) -> int:
    return sum(count_pairs_case(q, case) for case in BoundaryCase)


def pair_queries(t: int) -> Iterable[PairQuery]:
    """Every valid query for ground size t with ell values in [1, t]."""
    odds = range(1, t + 1, 2)
    for jp in range(1, t):
        for jpp in range(1, t - jp):
            for lp in odds:
                for lpp in odds:
                    for l in odds:
                        yield PairQuery(t, jp, jpp, lp, lpp, l)


# ---------------------------------------------------------------------------
# exhaustive pair enumeration

PairKey = tuple[int, int, int, int, int, BoundaryCase]


def _q_table(t: int) -> list[int]:
    return [q_size(Tope(t, m)) for m in range(1 << t)]


def _case_table(t: int) -> dict[tuple[int, int], BoundaryCase]:
    ends = 1 | (1 << (t - 1))
    out = {}
    for ea in (0, 1, 1 << (t - 1), ends):
        for eb in (0, 1, 1 << (t - 1), ends):
            if ea & eb:
                continue
            out[(ea, eb)] = CASE_OF_BOUNDARIES[
                (BoundaryType._from_mask(ea, t), BoundaryType._from_mask(eb, t))
            ]
    return out


def _tally_range(t: int, a_lo: int, a_hi: int) -> Counter:
    full = (1 << t) - 1
    ends = 1 | (1 << (t - 1))
    qs = _q_table(t)
    cases = _case_table(t)
    tally: Counter = Counter()
    for a in range(max(a_lo, 1), a_hi):
        if a == full:
            continue
        rest = full ^ a
        qa, ja, ea = qs[a], a.bit_count(), a & ends
        b = rest
        while b:
            u = a | b
            if u != full:
                key = (ja, b.bit_count(), qa, qs[b], qs[u], cases[(ea, b & ends)])
                tally[key] += 1
            b = (b - 1) & rest
    return tally


def _case_order(key: PairKey) -> tuple:
    return (*key[:5], list(BoundaryCase).index(key[5]))


def brute_force_pairs(
    t: int, cap: int = PAIR_ENUMERATION_CAP, workers: int = 1
) -> dict[PairKey, int]:
    """Exhaustive tally of the pair family keyed by (j', j'', ell', ell'', ell, case).

    With workers > 1 the range of A masks is split into contiguous chunks
    and the partial tallies are summed; the result does not depend on the
    number of workers.
    """
    check_ground_size(t)
    if t > cap:
        raise ResourceLimitError(f"t={t} exceeds the 3^t enumeration cap {cap}")
    if workers < 1:
        raise DomainError(f"workers={workers} must be positive")
    n = 1 << t
    if workers == 1:
        tally = _tally_range(t, 0, n)
    else:
        bounds = [n * w // workers for w in range(workers + 1)]
        tally = Counter()
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(_tally_range, t, bounds[w], bounds[w + 1]) for w in range(workers)
            ]
            for f in futures:
                tally.update(f.result())
    return {k: tally[k] for k in sorted(tally, key=_case_order)}

"""Ternary Smirnov words over the alphabet {theta, alpha, beta}.

A Smirnov word has no two equal adjacent letters.  Counts are indexed by
(first letter, last letter, letter multiplicities); multiplicities are
always given in the order (theta, alpha, beta).

Three independent routes are provided: a memoized recursion, closed
forms, and coefficient extraction from the trivariate generating
functions f_theta, f_alpha, f_beta of words starting with theta.
"""

from __future__ import annotations

import enum
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import DomainError, ResourceLimitError
from .hypercube import check_ground_size, subset_mask

ENUMERATION_CAP = 14
SERIES_CAP = 16


class Letter(enum.Enum):
    THETA = "theta"
    ALPHA = "alpha"
    BETA = "beta"

    @property
    def symbol(self) -> str:
        return _SYMBOLS[self]

    @classmethod
    def parse(cls, token: str) -> "Letter":
        token = token.strip().lower()
        for letter in cls:
            if token in (letter.value, letter.symbol):
                return letter
        raise DomainError(f"unknown letter {token!r}; expected theta, alpha or beta")


THETA, ALPHA, BETA = Letter.THETA, Letter.ALPHA, Letter.BETA
_SYMBOLS = {THETA: "θ", ALPHA: "α", BETA: "β"}
_INDEX = {THETA: 0, ALPHA: 1, BETA: 2}
# lexicographic order of words follows the letter names
LEX_ORDER = (ALPHA, BETA, THETA)

SmirnovWord = tuple[Letter, ...]


class LetterCounts(NamedTuple):
    theta: int
    alpha: int
    beta: int

    @property
    def total(self) -> int:
        return self.theta + self.alpha + self.beta

    def of(self, letter: Letter) -> int:
        return self[_INDEX[letter]]


class CompositionTriple(NamedTuple):
    """Run lengths of the theta, alpha and beta blocks, in scan order."""

    theta: tuple[int, ...]
    alpha: tuple[int, ...]
    beta: tuple[int, ...]

    def of(self, letter: Letter) -> tuple[int, ...]:
        return self[_INDEX[letter]]


def word_str(word: Iterable[Letter]) -> str:
    return "".join(letter.symbol for letter in word)


def parse_word(text: str) -> SmirnovWord:
    """Parse 'θαβθ' or 'theta,alpha,beta,theta'."""
    if "," in text:
        return tuple(Letter.parse(tok) for tok in text.split(","))
    return tuple(Letter.parse(ch) for ch in text)


def is_smirnov(word: Sequence[Letter]) -> bool:
    return len(word) > 0 and all(a is not b for a, b in zip(word, word[1:]))


def letter_counts(word: Iterable[Letter]) -> LetterCounts:
    c = [0, 0, 0]
    for letter in word:
        c[_INDEX[letter]] += 1
    return LetterCounts(*c)


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero when k < 0, k > n or n < 0."""
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


def composition_count(m: int, n: int) -> int:
    """Number of compositions of n into m positive parts."""
    return binom(n - 1, m - 1)


def compositions(m: int, n: int) -> Iterator[tuple[int, ...]]:
    """Compositions of n into m positive parts, lexicographically."""
    if m <= 0 or n < m:
        return
    if m == 1:
        yield (n,)
        return
    for first in range(1, n - m + 2):
        for rest in compositions(m - 1, n - first):
            yield (first, *rest)


# ---------------------------------------------------------------------------
# memoized recursion

@lru_cache(maxsize=None)
def _tails(rem: tuple[int, int, int], last: int, end: int) -> int:
    if rem == (0, 0, 0):
        return 1 if last == end else 0
    total = 0
    for nxt in range(3):
        if nxt != last and rem[nxt]:
            r = list(rem)
            r[nxt] -= 1
            total += _tails(tuple(r), nxt, end)
    return total


def smirnov_count_dp(start: Letter, end: Letter, counts: Sequence[int]) -> int:
    counts = LetterCounts(*counts)
    if min(counts) < 0 or counts.total == 0:
        return 0
    s = _INDEX[start]
    if counts[s] == 0:
        return 0
    rem = list(counts)
    rem[s] -= 1
    return _tails(tuple(rem), s, _INDEX[end])


# ---------------------------------------------------------------------------
# closed forms

class _Degenerate(Exception):
    """A closed form would leave its valid domain; use the recursion."""


def _b(n: int, k: int) -> int:
    if n < 0:
        raise _Degenerate
    return binom(n, k)


def _half(n: int) -> int:
    q, r = divmod(n, 2)
    assert r == 0, f"odd numerator {n} in a parity branch"
    return q


def _t_theta_theta(k: int, i: int, j: int) -> int:
    n = k + i + j
    if n % 2:
        return _b(k - 1, _half(k + i - j - 1)) * _b(_half(n - 3), k - 2)
    return (k + i - j) * _b(k - 1, _half(k + i - j)) * _b(_half(n) - 2, k - 2)


def _t_theta_beta(k: int, i: int, j: int) -> int:
    n = k + i + j
    if n % 2:
        return (k + j - i) * _b(k - 1, _half(k + j - i - 1)) * _b(_half(n - 3), k - 1)
    return (
        _b(k - 1, _half(k + j - i) - 1) * _b(_half(n) - 1, k - 1)
        + (k + j - i) * _b(k - 1, _half(k + j - i)) * _b(_half(n) - 2, k - 1)
    )


def _t_alpha_alpha(nt: int, na: int, nb: int) -> int:
    n = nt + na + nb
    if n % 2:
        return _b(na - 1, _half(na + nt - nb - 1)) * _b(_half(n - 3), na - 2)
    return (na + nt - nb) * _b(na - 1, _half(na + nt - nb)) * _b(_half(n) - 2, na - 2)


def _t_alpha_theta(nt: int, na: int, nb: int) -> int:
    n = nt + na + nb
    d = na + nt - nb
    if n % 2:
        return d * _b(na - 1, _half(d - 1)) * _b(_half(n - 3), na - 1)
    return (
        _b(na - 1, _half(d) - 1) * _b(_half(n) - 1, na - 1)
        + d * _b(na - 1, _half(d)) * _b(_half(n) - 2, na - 1)
    )


def _t_alpha_beta(nt: int, na: int, nb: int) -> int:
    n = nt + na + nb
    d = na + nb - nt
    if n % 2:
        return d * _b(na - 1, _half(d - 1)) * _b(_half(n - 3), na - 1)
    return (
        _b(na - 1, _half(d) - 1) * _b(_half(n) - 1, na - 1)
        + d * _b(na - 1, _half(d)) * _b(_half(n) - 2, na - 1)
    )


_PUBLISHED = {
    (THETA, THETA): _t_theta_theta,
    (THETA, BETA): _t_theta_beta,
    (ALPHA, ALPHA): _t_alpha_alpha,
    (ALPHA, THETA): _t_alpha_theta,
    (ALPHA, BETA): _t_alpha_beta,
}
_SWAP = {THETA: THETA, ALPHA: BETA, BETA: ALPHA}


def canonical_pair(
    start: Letter, end: Letter, counts: Sequence[int]
) -> tuple[Letter, Letter, LetterCounts]:
    """Map an endpoint pair onto one with a published closed form.

    Swapping alpha and beta (letters and their multiplicities together)
    preserves counts; it takes each of the four unpublished pairs onto a
    published one.
    """
    counts = LetterCounts(*counts)
    if (start, end) in _PUBLISHED:
        return start, end, counts
    return _SWAP[start], _SWAP[end], LetterCounts(counts.theta, counts.beta, counts.alpha)


def closed_form_applies(start: Letter, end: Letter, counts: Sequence[int]) -> bool:
    counts = LetterCounts(*counts)
    if min(counts) < 0 or counts.total <= 1:
        return False
    s, e, c = canonical_pair(start, end, counts)
    try:
        _PUBLISHED[(s, e)](*c)
    except _Degenerate:
        return False
    return True


def smirnov_count_closed(start: Letter, end: Letter, counts: Sequence[int]) -> int:
    """Closed-form count, falling back to the recursion on degenerate input."""
    counts = LetterCounts(*counts)
    if min(counts) < 0 or counts.total <= 1:
        return smirnov_count_dp(start, end, counts)
    s, e, c = canonical_pair(start, end, counts)
    try:
        return _PUBLISHED[(s, e)](*c)
    except _Degenerate:
        return smirnov_count_dp(start, end, counts)


# ---------------------------------------------------------------------------
# explicit enumeration

def smirnov_enumerate(counts: Sequence[int], cap: int = ENUMERATION_CAP) -> list[SmirnovWord]:
    """All Smirnov words with the given multiplicities, in lexicographic order."""
    counts = LetterCounts(*counts)
    if min(counts) < 0:
        raise DomainError(f"negative letter count in {tuple(counts)}")
    if counts.total > cap:
        raise ResourceLimitError(f"word length {counts.total} exceeds cap {cap}")
    rem = list(counts)
    out: list[SmirnovWord] = []
    word: list[Letter] = []

    def extend() -> None:
        if len(word) == counts.total:
            if word:
                out.append(tuple(word))
            return
        for letter in LEX_ORDER:
            idx = _INDEX[letter]
            if rem[idx] and (not word or word[-1] is not letter):
                rem[idx] -= 1
                word.append(letter)
                extend()
                word.pop()
                rem[idx] += 1

    extend()
    return out


# ---------------------------------------------------------------------------
# truncated trivariate series in u (theta), v (alpha), w (beta)

Series = dict[tuple[int, int, int], int]


def series_mul(p: Series, q: Series, cap: int) -> Series:
    out: Series = {}
    for (a1, b1, c1), x in p.items():
        d1 = a1 + b1 + c1
        for (a2, b2, c2), y in q.items():
            if d1 + a2 + b2 + c2 > cap:
                continue
            key = (a1 + a2, b1 + b2, c1 + c2)
            out[key] = out.get(key, 0) + x * y
    return {k: v for k, v in out.items() if v}


def geometric(d: Series, cap: int) -> Series:
    """1 / (1 - d) truncated at total degree `cap`; d has no constant term."""
    assert (0, 0, 0) not in d
    result: Series = {(0, 0, 0): 1}
    power: Series = {(0, 0, 0): 1}
    while True:
        power = series_mul(power, d, cap)
        if not power:
            return result
        for k, v in power.items():
            result[k] = result.get(k, 0) + v


_DENOMINATOR_TAIL: Series = {(1, 1, 0): 1, (1, 0, 1): 1, (0, 1, 1): 1, (1, 1, 1): 2}
_NUMERATORS: dict[Letter, Series] = {
    THETA: {(1, 0, 0): 1, (1, 1, 1): -1},  # u (1 - v w)
    ALPHA: {(1, 1, 0): 1, (1, 1, 1): 1},  # u v (1 + w)
    BETA: {(1, 0, 1): 1, (1, 1, 1): 1},  # u w (1 + v)
}


@lru_cache(maxsize=None)
def _gf_series(end: Letter, cap: int) -> tuple[tuple[tuple[int, int, int], int], ...]:
    s = series_mul(_NUMERATORS[end], geometric(_DENOMINATOR_TAIL, cap), cap)
    return tuple(sorted(s.items()))


def gf_series(end: Letter, cap: int = SERIES_CAP) -> Series:
    """Expansion of f_end up to total degree `cap`."""
    return dict(_gf_series(end, cap))


def gf_coefficient(end: Letter, k: int, i: int, j: int, cap: int = SERIES_CAP) -> int:
    """[u^k v^i w^j] f_end: words starting with theta and ending with `end`."""
    if min(k, i, j) < 0:
        raise DomainError(f"negative exponent in {(k, i, j)}")
    if k + i + j > cap:
        raise ResourceLimitError(f"total degree {k + i + j} exceeds series cap {cap}")
    return dict(_gf_series(end, cap)).get((k, i, j), 0)


# ---------------------------------------------------------------------------
# pairs of disjoint subsets <-> (word, run lengths)

def encode_pair(a: Iterable[int], b: Iterable[int], t: int) -> tuple[SmirnovWord, CompositionTriple]:
    """Collapse the class sequence of 1..t into its run-letter word.

    Each element is classed theta (outside A u B), alpha (in A) or beta
    (in B); every maximal run of one class becomes one letter, and the run
    lengths are collected per letter in left-to-right order.
    """
    check_ground_size(t)
    ma, mb = subset_mask(a, t), subset_mask(b, t)
    if not ma or not mb:
        raise DomainError("A and B must be nonempty")
    if ma & mb:
        raise DomainError("A and B must be disjoint")
    if ma | mb == (1 << t) - 1:
        raise DomainError("A u B must be a proper subset of the ground set")
    word: list[Letter] = []
    parts: dict[Letter, list[int]] = {THETA: [], ALPHA: [], BETA: []}
    for e in range(t):
        if (ma >> e) & 1:
            letter = ALPHA
        elif (mb >> e) & 1:
            letter = BETA
        else:
            letter = THETA
        if word and word[-1] is letter:
            parts[letter][-1] += 1
        else:
            word.append(letter)
            parts[letter].append(1)
    comps = CompositionTriple(tuple(parts[THETA]), tuple(parts[ALPHA]), tuple(parts[BETA]))
    return tuple(word), comps


def decode_pair(
    word: Sequence[Letter], comps: CompositionTriple, t: int
) -> tuple[frozenset[int], frozenset[int]]:
    check_ground_size(t)
    word = tuple(word)
    comps = CompositionTriple(*(tuple(p) for p in comps))
    if not is_smirnov(word):
        raise DomainError(f"{word_str(word)!r} is not a Smirnov word")
    counts = letter_counts(word)
    for letter in Letter:
        parts = comps.of(letter)
        if len(parts) != counts.of(letter):
            raise DomainError(
                f"{len(parts)} {letter.value} parts for {counts.of(letter)} letters"
            )
        if any(p <= 0 for p in parts):
            raise DomainError(f"non-positive part in {parts}")
    if sum(map(sum, comps)) != t:
        raise DomainError(f"parts sum to {sum(map(sum, comps))}, expected t={t}")
    cursor = {THETA: 0, ALPHA: 0, BETA: 0}
    a: list[int] = []
    b: list[int] = []
    e = 1
    for letter in word:
        size = comps.of(letter)[cursor[letter]]
        cursor[letter] += 1
        block = range(e, e + size)
        if letter is ALPHA:
            a.extend(block)
        elif letter is BETA:
            b.extend(block)
        e += size
    return frozenset(a), frozenset(b)

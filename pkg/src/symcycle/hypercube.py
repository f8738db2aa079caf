"""Topes of the hypercube graph H(t, 2) and their decompositions.

A tope is a sign vector in {1, -1}^t.  The distinguished symmetric
2t-cycle R has vertices

    R^0 = (1, ..., 1),    R^s = R^0 with coordinates 1..s negated,
    R^(k+t) = -R^k,

and (R^0, ..., R^(t-1)) is a basis of R^t.  Every tope T has a unique
coordinate vector x in {-1, 0, 1}^t with T = sum_i x_i * R^(i-1); the
signed basis vectors with x_i != 0 form the set Q(T, R).

Ground-set elements are 1-based everywhere in the public interface.
Internally a tope is a bitmask with bit e-1 set iff coordinate e is -1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import DimensionError, DomainError, InvalidDecompositionError

MIN_T = 3
MAX_T = 64  # width of the bitmask representation

DecompVector = tuple[int, ...]


def check_ground_size(t: int) -> int:
    if isinstance(t, bool) or not isinstance(t, int):
        raise DomainError(f"ground size must be an integer, got {t!r}")
    if not MIN_T <= t <= MAX_T:
        raise DomainError(f"ground size t={t} outside [{MIN_T}, {MAX_T}]")
    return t


def subset_mask(members: Iterable[int], t: int) -> int:
    """Bitmask of a subset of [t]; raises if a member is outside [1, t]."""
    mask = 0
    for e in members:
        if isinstance(e, bool) or not isinstance(e, int) or not 1 <= e <= t:
            raise DomainError(f"element {e!r} outside the ground set [1, {t}]")
        mask |= 1 << (e - 1)
    return mask


def mask_members(mask: int) -> frozenset[int]:
    out = []
    e = 1
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return frozenset(out)


@dataclass(frozen=True, slots=True)
class Tope:
    """A vertex of H(t, 2), stored as the bitmask of its negative part."""

    t: int
    mask: int

    def __post_init__(self) -> None:
        check_ground_size(self.t)
        if not 0 <= self.mask < (1 << self.t):
            raise DomainError(f"mask {self.mask:#x} does not fit t={self.t}")

    @classmethod
    def from_signs(cls, signs: Sequence[int]) -> "Tope":
        mask = 0
        for e, s in enumerate(signs):
            if s == -1:
                mask |= 1 << e
            elif s != 1:
                raise DomainError(f"tope entry {s!r} is not +1 or -1")
        return cls(len(signs), mask)

    @property
    def signs(self) -> tuple[int, ...]:
        return tuple(-1 if (self.mask >> e) & 1 else 1 for e in range(self.t))

    def __getitem__(self, e: int) -> int:
        """Sign of coordinate e (1-based)."""
        if not 1 <= e <= self.t:
            raise IndexError(e)
        return -1 if (self.mask >> (e - 1)) & 1 else 1

    def __neg__(self) -> "Tope":
        return Tope(self.t, self.mask ^ ((1 << self.t) - 1))

    def __len__(self) -> int:
        return self.t

    def __repr__(self) -> str:
        body = ",".join("+" if s == 1 else "-" for s in self.signs)
        return f"Tope({body})"


class IntervalRun(NamedTuple):
    lo: int
    hi: int


class QTerm(NamedTuple):
    """One signed cycle vertex coefficient * R^index of Q(T, R)."""

    coefficient: int
    index: int


def positive_tope(t: int) -> Tope:
    return Tope(t, 0)


def negative_tope(t: int) -> Tope:
    return Tope(t, (1 << check_ground_size(t)) - 1)


def cycle_vertex(t: int, k: int) -> Tope:
    """Vertex R^k of the distinguished symmetric cycle, 0 <= k <= 2t-1."""
    check_ground_size(t)
    if not 0 <= k < 2 * t:
        raise DomainError(f"cycle index k={k} outside [0, {2 * t - 1}]")
    if k < t:
        return Tope(t, (1 << k) - 1)
    return -cycle_vertex(t, k - t)


def tope_from_negative_set(t: int, negative: Iterable[int]) -> Tope:
    """The tope whose negative part is the given subset of [t]."""
    check_ground_size(t)
    return Tope(t, subset_mask(negative, t))


def negative_part(tope: Tope) -> frozenset[int]:
    return mask_members(tope.mask)


def decompose(tope: Tope) -> DecompVector:
    """Coordinates of `tope` in the basis (R^0, ..., R^(t-1)).

    Coordinate e of T = sum x_i R^(i-1) reads
    T(e) = sum_{i<=e} x_i - sum_{i>e} x_i, so consecutive differences give
    x_2..x_t directly and T(t) = sum x_i fixes x_1.
    """
    s = tope.signs
    x = [0] * tope.t
    for e in range(1, tope.t):
        x[e] = (s[e] - s[e - 1]) // 2
    x[0] = s[-1] - sum(x[1:])
    return tuple(x)


def _check_decomp_vector(x: Sequence[int], t: int) -> None:
    if len(x) != t:
        raise DimensionError(f"vector of length {len(x)} for t={t}")
    if any(v not in (-1, 0, 1) for v in x):
        raise InvalidDecompositionError(f"entries of {tuple(x)} not in {{-1, 0, 1}}")
    if sum(1 for v in x if v) % 2 == 0:
        raise InvalidDecompositionError(f"support of {tuple(x)} is not odd")


def recompose(x: Sequence[int], t: int) -> Tope:
    """The sign vector sum_i x_i * R^(i-1)."""
    check_ground_size(t)
    _check_decomp_vector(x, t)
    total = sum(x)
    prefix = 0
    signs = []
    for e in range(t):
        prefix += x[e]
        # sum_{i<=e} x_i - sum_{i>e} x_i
        signs.append(2 * prefix - total)
    if any(v not in (1, -1) for v in signs):
        raise InvalidDecompositionError(f"{tuple(x)} sums to {tuple(signs)}, not a tope")
    return Tope.from_signs(signs)


def q_set(tope: Tope) -> list[QTerm]:
    return [QTerm(v, i) for i, v in enumerate(decompose(tope)) if v]


def q_size(tope: Tope) -> int:
    """|Q(T, R)|, the number of nonzero decomposition coordinates."""
    return sum(1 for v in decompose(tope) if v)


def separation_set(first: Tope, second: Tope) -> frozenset[int]:
    """Coordinates on which the two topes disagree."""
    if first.t != second.t:
        raise DimensionError(f"topes of lengths {first.t} and {second.t}")
    return mask_members(first.mask ^ second.mask)


def interval_runs(members: Iterable[int], t: int) -> list[IntervalRun]:
    """Maximal runs of consecutive elements, in ascending order."""
    mask = subset_mask(members, t)
    runs = []
    e = 1
    while e <= t:
        if (mask >> (e - 1)) & 1:
            lo = e
            while e < t and (mask >> e) & 1:
                e += 1
            runs.append(IntervalRun(lo, e))
        e += 1
    return runs


def rho(members: Iterable[int], t: int) -> int:
    return len(interval_runs(members, t))


def predicted_q_size(members: Iterable[int], t: int) -> int:
    """|Q| of the tope with negative part `members`, read off its runs.

    Interior sets give 2*rho + 1, sets touching 1 or t give 2*rho - 1;
    the empty set gives 1.
    """
    check_ground_size(t)
    mask = subset_mask(members, t)
    runs = rho(mask_members(mask), t)
    if mask & 1 or (mask >> (t - 1)) & 1:
        return 2 * runs - 1
    return 2 * runs + 1

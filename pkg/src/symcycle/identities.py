"""Decomposition identities for unions and nested negative parts.

`sigma(s, t)` is the standard basis vector with a one in position s
(1-based).  All vectors are plain integer tuples of length t.
"""

from __future__ import annotations

import enum
from typing import Iterable, Sequence

from .errors import DimensionError, DomainError, InvalidDecompositionError
from .hypercube import DecompVector, check_ground_size, mask_members, subset_mask


class BoundaryType(enum.Enum):
    """Which of the end elements 1 and t a subset of [t] contains."""

    NONE = "none"
    LEFT = "left"
    RIGHT = "right"
    BOTH = "both"

    @classmethod
    def of(cls, members: Iterable[int], t: int) -> "BoundaryType":
        mask = subset_mask(members, t)
        return cls._from_mask(mask, t)

    @classmethod
    def _from_mask(cls, mask: int, t: int) -> "BoundaryType":
        left = bool(mask & 1)
        right = bool((mask >> (t - 1)) & 1)
        if left and right:
            return cls.BOTH
        if left:
            return cls.LEFT
        if right:
            return cls.RIGHT
        return cls.NONE


class SupersetCase(enum.Enum):
    """The four correction patterns for passing from A to a superset C."""

    SAME_ENDS = "i"
    ADDS_RIGHT = "ii"
    ADDS_LEFT = "iii"
    ADDS_BOTH = "iv"


# (A cap {1,t}, C cap {1,t}) -> case; the nine pairs allowed by A <= C
SUPERSET_DISPATCH: dict[tuple[BoundaryType, BoundaryType], SupersetCase] = {
    (BoundaryType.NONE, BoundaryType.NONE): SupersetCase.SAME_ENDS,
    (BoundaryType.LEFT, BoundaryType.LEFT): SupersetCase.SAME_ENDS,
    (BoundaryType.RIGHT, BoundaryType.RIGHT): SupersetCase.SAME_ENDS,
    (BoundaryType.BOTH, BoundaryType.BOTH): SupersetCase.SAME_ENDS,
    (BoundaryType.LEFT, BoundaryType.BOTH): SupersetCase.ADDS_RIGHT,
    (BoundaryType.NONE, BoundaryType.RIGHT): SupersetCase.ADDS_RIGHT,
    (BoundaryType.NONE, BoundaryType.LEFT): SupersetCase.ADDS_LEFT,
    (BoundaryType.RIGHT, BoundaryType.BOTH): SupersetCase.ADDS_LEFT,
    (BoundaryType.NONE, BoundaryType.BOTH): SupersetCase.ADDS_BOTH,
}


def sigma(s: int, t: int) -> DecompVector:
    v = [0] * t
    v[s - 1] = 1
    return tuple(v)


def _axpy(acc: list[int], coef: int, s: int) -> None:
    acc[s - 1] += coef


def _subtract_steps(acc: list[int], members: Iterable[int]) -> None:
    """acc -= sum_{i in members} (sigma(i) - sigma(i+1))."""
    for i in members:
        acc[i - 1] -= 1
        acc[i] += 1


def x_of_disjoint_union(xa: Sequence[int], xb: Sequence[int]) -> DecompVector:
    """x of the tope with negative part A u B, from x(A) and x(B).

    Raises InvalidDecompositionError when the result leaves {-1, 0, 1},
    which happens in particular when A and B overlap.
    """
    if len(xa) != len(xb):
        raise DimensionError(f"vectors of lengths {len(xa)} and {len(xb)}")
    out = [a + b for a, b in zip(xa, xb)]
    out[0] -= 1
    if any(v not in (-1, 0, 1) for v in out):
        raise InvalidDecompositionError(
            f"{tuple(out)} is not a decomposition vector; are the sets disjoint?"
        )
    return tuple(out)


def norm_of_disjoint_union(xa: Sequence[int], xb: Sequence[int]) -> int:
    """|Q| of the union tope, expanded as a quadratic form in x(A), x(B)."""
    if len(xa) != len(xb):
        raise DimensionError(f"vectors of lengths {len(xa)} and {len(xb)}")
    na = sum(v * v for v in xa)
    nb = sum(v * v for v in xb)
    dot = sum(a * b for a, b in zip(xa, xb))
    return na + nb + 2 * dot - 2 * xa[0] - 2 * xb[0] + 1


def x_closed_form(members: Iterable[int], t: int) -> DecompVector:
    """x of the tope with negative part A, by the boundary type of A."""
    check_ground_size(t)
    mask = subset_mask(members, t)
    kind = BoundaryType._from_mask(mask, t)
    acc = [0] * t
    inner = mask_members(mask) - {1, t}
    if kind is BoundaryType.NONE:
        _axpy(acc, 1, 1)
    elif kind is BoundaryType.LEFT:
        _axpy(acc, 1, 2)
    elif kind is BoundaryType.RIGHT:
        _axpy(acc, -1, t)
    else:
        _axpy(acc, -1, 1)
        _axpy(acc, 1, 2)
        _axpy(acc, -1, t)
    _subtract_steps(acc, sorted(inner))
    return tuple(acc)


def superset_case(a: Iterable[int], c: Iterable[int], t: int) -> SupersetCase:
    ma, mc = subset_mask(a, t), subset_mask(c, t)
    if ma & ~mc:
        raise DomainError("A is not contained in C")
    return SUPERSET_DISPATCH[(BoundaryType._from_mask(ma, t), BoundaryType._from_mask(mc, t))]


def x_superset_delta(
    xa: Sequence[int], a: Iterable[int], c: Iterable[int], t: int
) -> DecompVector:
    """x of the tope with negative part C, obtained from x(A) for A <= C."""
    check_ground_size(t)
    if len(xa) != t:
        raise DimensionError(f"vector of length {len(xa)} for t={t}")
    a_set = mask_members(subset_mask(a, t))
    c_set = mask_members(subset_mask(c, t))
    case = superset_case(a_set, c_set, t)
    acc = list(xa)
    if case is SupersetCase.SAME_ENDS:
        diff = c_set - a_set
    elif case is SupersetCase.ADDS_RIGHT:
        _axpy(acc, -1, 1)
        _axpy(acc, -1, t)
        diff = c_set - a_set - {t}
    elif case is SupersetCase.ADDS_LEFT:
        _axpy(acc, -1, 1)
        _axpy(acc, 1, 2)
        diff = c_set - a_set - {1}
    else:
        _axpy(acc, -2, 1)
        _axpy(acc, 1, 2)
        _axpy(acc, -1, t)
        diff = c_set - a_set - {1, t}
    _subtract_steps(acc, sorted(diff))
    return tuple(acc)

"""Exact solvers for subset sum with target zero.

A solution is a *nonempty* subset summing to 0.  Three engines:

``solve_structured``
    Split enumeration for :class:`StructuredInstance`: a table of all
    subset sums of the negatives, probed with the negation of every
    subset sum of the small positives.  Large positives are never
    enumerated, since each exceeds the magnitude of any sum of negatives.
``solve_mitm``
    Generic meet in the middle over an arbitrary set of integers.
``solve_dp``
    Generic pseudo-polynomial reachability table with back-pointers.

``solve_structured`` and ``solve_mitm`` report the same canonical witness:
values sorted ascending are read as bits of a binary counter (smallest
value is the low bit) and the first nonempty zero-sum subset in counter
order wins.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import TooLarge
from .instances import StructuredInstance

MITM_MAX_VALUES = 40
DP_MAX_TOTAL = 10**7


class Status(str, enum.Enum):
    FOUND = "found"
    NONE = "none"
    TRIVIAL_ZERO = "trivial_zero"


@dataclass(frozen=True)
class SolveResult:
    status: Status
    witness: Optional[tuple[int, ...]] = None
    sums_enumerated: int = 0
    comparisons: int = 0

    def to_json(self) -> str:
        return json.dumps(
            {
                "status": self.status.value,
                "witness": None if self.witness is None else sorted(self.witness),
                "sums_enumerated": self.sums_enumerated,
                "comparisons": self.comparisons,
            },
            separators=(",", ":"),
        )


def verify_witness(values: Iterable[int], witness: Optional[Iterable[int]]) -> bool:
    if witness is None:
        return False
    w = list(witness)
    return bool(w) and len(set(w)) == len(w) and set(w) <= set(values) and sum(w) == 0


def _subset_sums(vals: Sequence[int]) -> list[int]:
    """Sums of all subsets, indexed by bitmask (bit i selects ``vals[i]``)."""
    sums = [0]
    for v in vals:
        sums += [s + v for s in sums]
    return sums


def _pick(vals: Sequence[int], mask: int) -> tuple[int, ...]:
    return tuple(v for i, v in enumerate(vals) if mask >> i & 1)


def _first_mask_by_sum(sums: Sequence[int]) -> dict[int, int]:
    table: dict[int, int] = {}
    for mask, s in enumerate(sums):
        table.setdefault(s, mask)
    return table


def bound_comparisons(k: int, p: int, t: int) -> int:
    """``2**(k**k) * (p**k)**t``."""
    return 2 ** (k**k) * (p**k) ** t


def bound_sums(k: int, p: int, t: int) -> int:
    """``2**(k**k) + (p**k)**t``."""
    return 2 ** (k**k) + (p**k) ** t


def solve_structured(inst: StructuredInstance) -> SolveResult:
    inst.validate()
    neg = inst.negatives
    pos = inst.small_positives
    neg_sums = _subset_sums(neg)
    table = _first_mask_by_sum(neg_sums)
    pos_sums = _subset_sums(pos)
    enumerated = len(neg_sums) + len(pos_sums)
    # ascending positive mask, then least negative mask: the counter order over neg + pos
    for pmask in range(1, len(pos_sums)):
        nmask = table.get(-pos_sums[pmask])
        if nmask is not None:
            result = SolveResult(
                Status.FOUND, _pick(neg, nmask) + _pick(pos, pmask), enumerated, pmask
            )
            break
    else:
        result = SolveResult(Status.NONE, None, enumerated, len(pos_sums) - 1)
    k, p, t = inst.k, inst.p, inst.t
    assert result.comparisons <= bound_comparisons(k, p, t)
    assert result.sums_enumerated <= bound_sums(k, p, t)
    return result


def _prune(vals: list[int]) -> list[int]:
    """Drop values that cannot be in any zero-sum subset.

    A positive value larger than the total magnitude of the negatives can
    never be cancelled, and symmetrically for negatives; repeat to a
    fixed point.
    """
    while True:
        neg_mass = -sum(v for v in vals if v < 0)
        pos_mass = sum(v for v in vals if v > 0)
        kept = [v for v in vals if (v > 0 and v <= neg_mass) or (v < 0 and -v <= pos_mass)]
        if len(kept) == len(vals):
            return kept
        vals = kept


def solve_mitm(values: Iterable[int], prune: bool = True) -> SolveResult:
    """Meet in the middle on at most MITM_MAX_VALUES values.

    With `prune`, values that provably cannot take part in a solution are
    removed first and the guard applies to what remains.
    """
    vals = sorted(set(values))
    if 0 in vals:
        return SolveResult(Status.TRIVIAL_ZERO, (0,))
    if prune:
        vals = _prune(vals)
    if len(vals) > MITM_MAX_VALUES:
        raise TooLarge(f"{len(vals)} values exceed the meet-in-the-middle guard of {MITM_MAX_VALUES}")
    half = len(vals) // 2
    low, high = vals[:half], vals[half:]
    low_sums = _subset_sums(low)
    high_sums = _subset_sums(high)
    enumerated = len(low_sums) + len(high_sums)
    table = _first_mask_by_sum(low_sums)
    comparisons = 0
    # the high mask is the more significant half of the counter
    zero_low = next((m for m in range(1, len(low_sums)) if low_sums[m] == 0), None)
    if zero_low is not None:
        return SolveResult(Status.FOUND, _pick(low, zero_low), enumerated, comparisons)
    for hmask in range(1, len(high_sums)):
        comparisons += 1
        lmask = table.get(-high_sums[hmask])
        if lmask is not None:
            witness = _pick(low, lmask) + _pick(high, hmask)
            return SolveResult(Status.FOUND, witness, enumerated, comparisons)
    return SolveResult(Status.NONE, None, enumerated, comparisons)


def solve_dp(values: Iterable[int]) -> SolveResult:
    """Reachability over shifted sums ``[-neg_mass, pos_mass]``.

    ``first[s]`` records the index of the item that first made sum ``s``
    reachable; following ``s -> s - vals[first[s]]`` walks back to 0 through
    strictly earlier items.
    """
    vals = sorted(set(values))
    if 0 in vals:
        return SolveResult(Status.TRIVIAL_ZERO, (0,))
    total = sum(abs(v) for v in vals)
    if total > DP_MAX_TOTAL:
        raise TooLarge(f"sum of magnitudes {total} exceeds the table guard of {DP_MAX_TOTAL}")
    offset = -sum(v for v in vals if v < 0)
    width = total + 1
    EMPTY, START = -2, -1
    first = np.full(width, EMPTY, dtype=np.int64)
    first[offset] = START
    for i, v in enumerate(vals):
        reached = first != EMPTY
        target = offset - v
        if 0 <= target < width and reached[target]:
            witness = [v]
            s = target
            while first[s] != START:
                j = int(first[s])
                witness.append(vals[j])
                s -= vals[j]
            return SolveResult(Status.FOUND, tuple(sorted(witness)), int(reached.sum()), i + 1)
        if v > 0:
            fresh = reached[: width - v] & ~reached[v:]
            first[v:][fresh] = i
        else:
            fresh = reached[-v:] & ~reached[: width + v]
            first[: width + v][fresh] = i
    return SolveResult(Status.NONE, None, int((first != EMPTY).sum()), len(vals))


def solve_values(values: Iterable[int], engine: str) -> SolveResult:
    if engine == "mitm":
        return solve_mitm(values)
    if engine == "dp":
        return solve_dp(values)
    raise ValueError(f"unknown generic engine {engine!r}")

"""Subset-sum instances assembled from a function and a grid.

The three blocks of ``E^k`` map to integer terms:

* ``E0``: ``f(x) - min(E)``   (negative once ``f`` maps into N)
* ``E1``: ``gamma(x)``        (arbitrary integers)
* ``E2``: ``rho(x) - min(x)`` (nonnegative offsets)

A :class:`StructuredInstance` is the solver-ready form for a regressively
regular ``f``: ``E1`` is empty, negatives lie in ``[-e0, 0)``, and positive
offsets are split at ``e0 * k**k`` into small and large terms.  Values are
kept as sets of distinct integers.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Mapping

from .errors import (
    InfeasibleSmallRange,
    InvariantViolation,
    NegativeOutOfRange,
    NotRegular,
    NotTLogBounded,
    TrivialZero,
)
from .families import FiniteFn
from .ordertype import KTuple, class_count
from .regularity import GridE, check_regressively_regular, partition_blocks


def tlog_cap(p: int, k: int, t: int) -> int:
    """``floor(t * log2(p**k))``, computed exactly as the largest m with ``2**m <= (p**k)**t``."""
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    return ((p**k) ** t).bit_length() - 1


def threshold(e0: int, k: int) -> int:
    """Offsets at or above ``e0 * k**k`` dominate every sum of negatives."""
    return e0 * k**k


class _GridMap:
    __slots__ = ("grid", "_values")

    def __init__(self, grid: GridE, values: Mapping[KTuple, int]):
        vals = {tuple(x): v for x, v in values.items()}
        points = set(grid.points())
        if set(vals) != points:
            raise ValueError("map must be defined on exactly E^k")
        for v in vals.values():
            if isinstance(v, bool) or not isinstance(v, int):
                raise TypeError(f"values must be ints, got {v!r}")
        self.grid = grid
        self._values = vals

    def __call__(self, x) -> int:
        return self._values[tuple(x)]

    def items(self):
        return sorted(self._values.items())

    def __eq__(self, other):
        return type(self) is type(other) and self.grid == other.grid and self._values == other._values

    def __repr__(self):
        return f"{type(self).__name__}(E={self.grid.E}, k={self.grid.k})"


class RhoFn(_GridMap):
    """``rho: E^k -> N`` with ``rho(x) >= min(x)``."""

    __slots__ = ()

    def __init__(self, grid: GridE, values: Mapping[KTuple, int]):
        super().__init__(grid, values)
        for x, v in self._values.items():
            if v < min(x):
                raise ValueError(f"rho{x} = {v} is below min(x) = {min(x)}")

    @classmethod
    def from_offsets(cls, grid: GridE, offsets: Mapping[KTuple, int]) -> "RhoFn":
        return cls(grid, {tuple(x): min(x) + c for x, c in offsets.items()})

    def offsets(self) -> dict[KTuple, int]:
        return {x: v - min(x) for x, v in self._values.items()}


class GammaFn(_GridMap):
    """Unrestricted ``gamma: E^k -> Z``."""

    __slots__ = ()


def gen_rho_tlog(grid: GridE, t: int, seed: int, *, strict: bool = True) -> RhoFn:
    """Seeded t-log-bounded ``rho``.

    ``min(cap, p**k)`` tuples, picked by a seeded shuffle, get distinct
    offsets in ``(0, e0*k**k)``; every other tuple gets a distinct offset
    at or above the threshold.  When fewer than that many small values
    exist, `strict` raises InfeasibleSmallRange; otherwise the small count
    is clamped to what fits, which keeps the bound.
    """
    n = grid.size
    T = threshold(grid.e0, grid.k)
    m = min(tlog_cap(grid.p, grid.k, t), n)
    if T - 1 < m:
        if strict:
            raise InfeasibleSmallRange(
                f"need {m} distinct offsets in (0, {T}) but only {max(T - 1, 0)} exist"
            )
        m = max(T - 1, 0)
    rng = random.Random(seed)
    points = list(grid.points())
    rng.shuffle(points)
    small = rng.sample(range(1, T), m)
    large = rng.sample(range(T, 2 * T + 4 * n), n - m)
    offsets = dict(zip(points, small + large))
    return RhoFn.from_offsets(grid, offsets)


def gen_gamma(grid: GridE, seed: int, bound: int) -> GammaFn:
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    rng = random.Random(seed)
    return GammaFn(grid, {x: rng.randint(-bound, bound) for x in grid.points()})


def gen_regular_fn(grid: GridE, seed: int, below_prob: float = 0.5) -> FiniteFn:
    """Seeded reflexive function regressively regular over `grid`.

    Each order-type class is independently made constant below ``min(E)``
    (with probability `below_prob`) or mapped into ``E`` at or above
    ``min(x)``.  Constants below ``min(E)`` are made reflexive by adding
    the diagonal tuple ``(v, ..., v)`` to the domain.
    """
    rng = random.Random(seed)
    values: dict[KTuple, int] = {}
    for sig, members in sorted(grid.classes().items()):
        if grid.e0 > 0 and rng.random() < below_prob:
            v = rng.randrange(grid.e0)
            for x in members:
                values[x] = v
            values.setdefault((v,) * grid.k, v)
        else:
            for x in members:
                values[x] = rng.choice([e for e in grid.E if e >= min(x)])
    return FiniteFn(values)


def check_tlog_bounded(rho: RhoFn, grid: GridE, t: int) -> bool:
    T = threshold(grid.e0, grid.k)
    small = {rho(x) - min(x) for x in grid.points()} & set(range(1, T))
    return len(small) <= tlog_cap(grid.p, grid.k, t)


def build_deltas(
    f: FiniteFn, grid: GridE, rho: RhoFn, gamma: GammaFn
) -> tuple[frozenset[int], frozenset[int], frozenset[int]]:
    blocks = partition_blocks(f, grid)
    return (
        frozenset(f(x) - grid.e0 for x in blocks.E0),
        frozenset(gamma(x) for x in blocks.E1),
        frozenset(rho(x) - min(x) for x in blocks.E2),
    )


@dataclass(frozen=True)
class StructuredInstance:
    k: int
    p: int
    t: int
    e0: int
    negatives: tuple[int, ...]
    small_positives: tuple[int, ...]
    large_positives: tuple[int, ...]
    dropped_zeros: int = 0

    def __post_init__(self):
        for name in ("negatives", "small_positives", "large_positives"):
            object.__setattr__(self, name, tuple(sorted(set(getattr(self, name)))))

    @property
    def threshold(self) -> int:
        return threshold(self.e0, self.k)

    def values(self) -> tuple[int, ...]:
        return self.negatives + self.small_positives + self.large_positives

    def validate(self) -> None:
        """Raise InvariantViolation unless counts and value ranges hold."""
        k, p, t, e0 = self.k, self.p, self.t, self.e0
        for name, v in (("k", k), ("p", p), ("t", t), ("e0", e0), ("dropped_zeros", self.dropped_zeros)):
            if isinstance(v, bool) or not isinstance(v, int):
                raise InvariantViolation(f"{name} must be an int")
        if k < 2 or p < 2 or t < 1 or e0 < 0 or self.dropped_zeros < 0:
            raise InvariantViolation(f"bad parameters k={k} p={p} t={t} e0={e0}")
        for v in self.values():
            if isinstance(v, bool) or not isinstance(v, int):
                raise InvariantViolation(f"instance values must be ints, got {v!r}")
        T = self.threshold
        # f(x) = 0 is allowed on E0, hence the closed end at -e0
        if any(not -e0 <= v < 0 for v in self.negatives):
            raise InvariantViolation(f"negatives must lie in [{-e0}, 0)")
        if any(not 0 < v < T for v in self.small_positives):
            raise InvariantViolation(f"small positives must lie in (0, {T})")
        if any(v < T for v in self.large_positives):
            raise InvariantViolation(f"large positives must be >= {T}")
        if len(self.negatives) > class_count(k):
            raise InvariantViolation(
                f"{len(self.negatives)} negatives exceed the {class_count(k)} order-type classes"
            )
        if len(self.small_positives) > tlog_cap(p, k, t):
            raise InvariantViolation(
                f"{len(self.small_positives)} small positives exceed cap {tlog_cap(p, k, t)}"
            )

    def to_json(self) -> str:
        obj = {
            "k": self.k,
            "p": self.p,
            "t": self.t,
            "e0": self.e0,
            "negatives": list(self.negatives),
            "small_positives": list(self.small_positives),
            "large_positives": list(self.large_positives),
            "dropped_zeros": self.dropped_zeros,
        }
        return json.dumps(obj, separators=(",", ":")) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "StructuredInstance":
        """Parse and validate; malformed input raises InvariantViolation."""
        try:
            obj = json.loads(text)
            inst = cls(
                k=obj["k"],
                p=obj["p"],
                t=obj["t"],
                e0=obj["e0"],
                negatives=obj["negatives"],
                small_positives=obj["small_positives"],
                large_positives=obj["large_positives"],
                dropped_zeros=obj["dropped_zeros"],
            )
        except (ValueError, KeyError, TypeError) as exc:
            raise InvariantViolation(f"malformed instance: {exc}") from exc
        inst.validate()
        return inst


def build_structured(
    f: FiniteFn, grid: GridE, rho: RhoFn, t: int, keep_zeros: bool = False
) -> StructuredInstance:
    """Assemble ``H_p`` for a regular ``f`` into solver-ready form.

    Zero offsets are dropped and counted.  With `keep_zeros`, a zero
    raises TrivialZero since ``{0}`` already solves the instance.
    """
    if not check_regressively_regular(f, grid).is_regular:
        raise NotRegular(f"f is not regressively regular over E={grid.E}, k={grid.k}")
    if not check_tlog_bounded(rho, grid, t):
        raise NotTLogBounded(f"rho is not {t}-log bounded over E={grid.E}, k={grid.k}")
    blocks = partition_blocks(f, grid)
    assert not blocks.E1, "regularity empties E1"
    e0 = grid.e0
    d0 = {f(x) - e0 for x in blocks.E0}
    d2 = {rho(x) - min(x) for x in blocks.E2}
    bad = sorted(v for v in d0 if v < -e0)
    if bad:
        raise NegativeOutOfRange(f"negative terms {bad} are below -e0 = {-e0}")
    if 0 in d2 and keep_zeros:
        raise TrivialZero("rho(x) = min(x) for some x in E2; {0} sums to 0")
    zeros = sum(1 for x in blocks.E2 if rho(x) == min(x))
    T = threshold(e0, grid.k)
    inst = StructuredInstance(
        k=grid.k,
        p=grid.p,
        t=t,
        e0=e0,
        negatives=tuple(d0),
        small_positives=tuple(v for v in d2 if 0 < v < T),
        large_positives=tuple(v for v in d2 if v >= T),
        dropped_zeros=zeros,
    )
    inst.validate()
    return inst

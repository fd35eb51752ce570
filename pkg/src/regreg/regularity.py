"""Block partitions of ``E^k`` and regressive regularity.

For a grid ``E^k`` inside the domain of ``f`` every tuple falls in exactly
one block:

* ``E0``: ``f(x) < min(E)``
* ``E1``: ``min(E) <= f(x) < min(x)``
* ``E2``: ``f(x) >= min(x)``

``f`` is regressively regular over ``E`` when every order-type class of
``E^k`` is either constant with a value below ``min(E)`` or lies entirely
in ``E2``.  Regularity empties ``E1`` and leaves at most one regressive
value per class.
"""
from __future__ import annotations

import enum
import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .errors import MissingDomain
from .families import FamilySpec, FiniteFn, make_fn
from .ordertype import KTuple, OrderTypeSig, sig_key, signature


@dataclass(frozen=True)
class GridE:
    """The Cartesian power ``E^k`` of a finite set of naturals."""

    E: tuple[int, ...]
    k: int

    def __post_init__(self):
        E = tuple(sorted(set(self.E)))
        if len(E) < 2:
            raise ValueError(f"|E| must be >= 2, got {E}")
        if any(isinstance(e, bool) or not isinstance(e, int) or e < 0 for e in E):
            raise ValueError(f"E must contain naturals, got {E}")
        if self.k < 2:
            raise ValueError(f"k must be >= 2, got {self.k}")
        object.__setattr__(self, "E", E)

    @property
    def p(self) -> int:
        return len(self.E)

    @property
    def e0(self) -> int:
        return self.E[0]

    @property
    def size(self) -> int:
        return self.p**self.k

    def points(self) -> Iterator[KTuple]:
        """Tuples of ``E^k`` in lexicographic order."""
        return itertools.product(self.E, repeat=self.k)

    def classes(self) -> dict[OrderTypeSig, list[KTuple]]:
        out: dict[OrderTypeSig, list[KTuple]] = {}
        for x in self.points():
            out.setdefault(signature(x), []).append(x)
        return out


def _require_domain(f: FiniteFn, X: Iterable[KTuple]) -> None:
    for x in X:
        if x not in f:
            raise MissingDomain(x)


@dataclass(frozen=True)
class BlockPartition:
    E0: frozenset[KTuple]
    E1: frozenset[KTuple]
    E2: frozenset[KTuple]


def partition_blocks(f: FiniteFn, grid: GridE) -> BlockPartition:
    _require_domain(f, grid.points())
    blocks: tuple[list, list, list] = ([], [], [])
    for x in grid.points():
        v = f(x)
        if v < grid.e0:
            blocks[0].append(x)
        elif v < min(x):
            blocks[1].append(x)
        else:
            blocks[2].append(x)
    return BlockPartition(*(frozenset(b) for b in blocks))


class VerdictKind(str, enum.Enum):
    CONSTANT_BELOW_MIN = "constant_below_min"
    GEQ_MIN = "geq_min"
    FAIL = "fail"


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    value: Optional[int] = None
    witness: Optional[tuple[KTuple, ...]] = None

    def to_dict(self) -> dict:
        d: dict = {"verdict": self.kind.value}
        if self.value is not None:
            d["value"] = self.value
        if self.witness is not None:
            d["witness"] = [list(x) for x in self.witness]
        return d


@dataclass(frozen=True)
class RegRegReport:
    is_regular: bool
    verdicts: dict[OrderTypeSig, Verdict]
    regressive_value_count: int

    def to_json(self) -> str:
        classes = {sig_key(s): self.verdicts[s].to_dict() for s in sorted(self.verdicts)}
        return json.dumps(
            {
                "is_regular": self.is_regular,
                "regressive_value_count": self.regressive_value_count,
                "classes": classes,
            },
            separators=(",", ":"),
        )


def _class_verdict(f: FiniteFn, members: list[KTuple], e0: int) -> Verdict:
    values = [f(x) for x in members]
    if len(set(values)) == 1 and values[0] < e0:
        return Verdict(VerdictKind.CONSTANT_BELOW_MIN, value=values[0])
    low = [x for x, v in zip(members, values) if v < min(x)]
    if not low:
        return Verdict(VerdictKind.GEQ_MIN)
    # x rules out GEQ_MIN; pair it with whatever rules out the constant case
    x = low[0]
    if f(x) >= e0:
        return Verdict(VerdictKind.FAIL, witness=(x,))
    y = next(y for y in members if f(y) != f(x))
    return Verdict(VerdictKind.FAIL, witness=(x, y))


def regressive_values(f: FiniteFn, X: Iterable[KTuple]) -> frozenset[int]:
    X = [tuple(x) for x in X]
    _require_domain(f, X)
    return frozenset(f(x) for x in X if f(x) < min(x))


def check_regressively_regular(f: FiniteFn, grid: GridE) -> RegRegReport:
    _require_domain(f, grid.points())
    verdicts = {
        sig: _class_verdict(f, members, grid.e0) for sig, members in grid.classes().items()
    }
    return RegRegReport(
        is_regular=all(v.kind is not VerdictKind.FAIL for v in verdicts.values()),
        verdicts=verdicts,
        regressive_value_count=len(regressive_values(f, grid.points())),
    )


def find_regressively_regular(
    spec: FamilySpec, k: int, p: int, ground: Iterable[int], budget: int
) -> Optional[tuple[FiniteFn, GridE]]:
    """Search p-subsets of `ground` in lexicographic order for a regular grid.

    ``f`` is built by the family on exactly ``E^k``.  At most `budget`
    candidate sets are tried; returns None when none of them is regular.
    """
    ground = sorted(set(ground))
    if len(ground) < p:
        raise ValueError(f"ground set has {len(ground)} elements, need at least p={p}")
    if budget < 1:
        raise ValueError("budget must be >= 1")
    for E in itertools.islice(itertools.combinations(ground, p), budget):
        grid = GridE(E, k)
        f = make_fn(spec, grid.points())
        if check_regressively_regular(f, grid).is_regular:
            return f, grid
    return None

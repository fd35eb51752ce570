"""Finite reflexive functions on N^k and concrete families of them.

A :class:`FiniteFn` is a function with a finite domain ``D`` of k-tuples and
integer values.  The built-in families pick one such function for every
finite ``D``:

``MIN``
    ``f_D(x) = min(x)``.
``MIN_FIELD``
    ``f_D(x) = min(field(D_x | {x}))``, the least coordinate seen at or
    below the level of ``x``.
``MAX_MIN``
    ``f_D(x) = max(min(z) for z in D_x)``, or ``min(x)`` when ``D_x`` is
    empty.  It is not jump free and serves as a negative control.

``D_x`` is the part of ``D`` whose tuples have a strictly smaller maximum
than ``x``.  ``MIN`` and ``MIN_FIELD`` are full (the rule is total on every
finite ``D``) and jump free: enlarging ``D_x`` can only add coordinates,
which never raises a minimum.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Mapping, Optional

from .ordertype import KTuple, ktuple


class Family(str, enum.Enum):
    MIN = "MIN"
    MIN_FIELD = "MIN_FIELD"
    MAX_MIN = "MAX_MIN"
    CUSTOM = "CUSTOM"


Rule = Callable[[frozenset, KTuple], int]


@dataclass(frozen=True)
class FamilySpec:
    family_id: Family
    rule: Optional[Rule] = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "family_id", Family(self.family_id))
        if self.family_id is Family.CUSTOM and self.rule is None:
            raise ValueError("CUSTOM family requires a rule")


class FiniteFn:
    """Immutable finite-domain function ``D -> Z`` with ``D`` a set of k-tuples."""

    __slots__ = ("k", "_values")

    def __init__(self, values: Mapping[Iterable[int], int], k: Optional[int] = None):
        table = {}
        for x, v in values.items():
            x = ktuple(x)
            if isinstance(v, bool) or not isinstance(v, int):
                raise TypeError(f"value at {x} must be an int, got {v!r}")
            table[x] = v
        if not table:
            raise ValueError("domain must be nonempty")
        arities = {len(x) for x in table}
        if len(arities) != 1:
            raise ValueError(f"mixed arities in domain: {sorted(arities)}")
        (arity,) = arities
        if k is not None and k != arity:
            raise ValueError(f"declared k={k} but tuples have arity {arity}")
        object.__setattr__(self, "k", arity)
        object.__setattr__(self, "_values", table)

    def __setattr__(self, name, value):
        raise AttributeError("FiniteFn is immutable")

    @property
    def domain(self) -> frozenset[KTuple]:
        return frozenset(self._values)

    def __call__(self, x) -> int:
        return self._values[tuple(x)]

    def __contains__(self, x) -> bool:
        return tuple(x) in self._values

    def __iter__(self) -> Iterator[KTuple]:
        return iter(sorted(self._values))

    def __len__(self) -> int:
        return len(self._values)

    def items(self):
        return sorted(self._values.items())

    def range(self) -> frozenset[int]:
        return frozenset(self._values.values())

    def __eq__(self, other):
        if not isinstance(other, FiniteFn):
            return NotImplemented
        return self._values == other._values

    def __hash__(self):
        return hash(frozenset(self._values.items()))

    def __repr__(self):
        return f"FiniteFn(k={self.k}, |D|={len(self)})"

    def to_json(self) -> str:
        entries = [{"x": list(x), "v": v} for x, v in self.items()]
        return json.dumps({"k": self.k, "entries": entries}, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "FiniteFn":
        obj = json.loads(text)
        return cls({tuple(e["x"]): e["v"] for e in obj["entries"]}, k=obj["k"])


def field_of(A: Iterable[KTuple]) -> frozenset[int]:
    return frozenset(c for x in A for c in x)


def restricted_domain(D: Iterable[KTuple], x: KTuple) -> frozenset[KTuple]:
    """``D_x``: the tuples of `D` whose maximum is strictly below ``max(x)``."""
    top = max(x)
    out = []
    for z in D:
        if len(z) != len(x):
            raise ValueError(f"arity mismatch between {z} and {x}")
        if max(z) < top:
            out.append(tuple(z))
    return frozenset(out)


def _min_rule(D, x):
    return min(x)


def _min_field_rule(D, x):
    return min(field_of(restricted_domain(D, x)) | set(x))


def _max_min_rule(D, x):
    below = restricted_domain(D, x)
    if not below:
        return min(x)
    return max(min(z) for z in below)


_RULES: dict[Family, Rule] = {
    Family.MIN: _min_rule,
    Family.MIN_FIELD: _min_field_rule,
    Family.MAX_MIN: _max_min_rule,
}


def make_fn(spec: FamilySpec, D: Iterable[Iterable[int]]) -> FiniteFn:
    D = frozenset(ktuple(x) for x in D)
    if not D:
        raise ValueError("domain must be nonempty")
    if len({len(x) for x in D}) != 1:
        raise ValueError("mixed arities in domain")
    rule = spec.rule if spec.family_id is Family.CUSTOM else _RULES[spec.family_id]
    return FiniteFn({x: rule(D, x) for x in D})


def check_reflexive(f: FiniteFn) -> bool:
    return f.range() <= field_of(f.domain)


@dataclass(frozen=True)
class Violation:
    """A tuple ``x`` at which the jump-free implication fails for ``(fA, fB)``."""

    x: KTuple
    value_a: int
    value_b: int


def jump_free_violations(fA: FiniteFn, fB: FiniteFn) -> Iterator[Violation]:
    if fA.k != fB.k:
        raise ValueError(f"arity mismatch: {fA.k} vs {fB.k}")
    A, B = fA.domain, fB.domain
    for x in sorted(A & B):
        Ax = restricted_domain(A, x)
        if not Ax <= restricted_domain(B, x):
            continue
        if any(fA(y) != fB(y) for y in Ax):
            continue
        if fA(x) < fB(x):
            yield Violation(x, fA(x), fB(x))


def check_jump_free_pair(fA: FiniteFn, fB: FiniteFn) -> Optional[Violation]:
    """First violation in lexicographic order of ``x``, or None if the pair passes."""
    return next(jump_free_violations(fA, fB), None)


def check_full_sample(spec: FamilySpec, domains: Iterable[Iterable[KTuple]]) -> bool:
    """Sampled surrogate for fullness: the rule yields a reflexive function on each domain."""
    for D in domains:
        D = list(D)
        try:
            f = make_fn(spec, D)
        except Exception:
            return False
        if f.domain != frozenset(map(tuple, D)) or not check_reflexive(f):
            return False
    return True

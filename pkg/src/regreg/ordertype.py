"""Order types of k-tuples of naturals.

Two tuples are order equivalent when they agree on which coordinate pairs
are strictly increasing and which are equal.  The canonical representative
of a class is the dense rank vector: ``ranks[i]`` counts the distinct
coordinate values strictly below ``x[i]``.

    >>> signature((10, 30, 20))
    (0, 2, 1)
    >>> len(enumerate_classes(3))
    13
"""
from __future__ import annotations

import itertools
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence

KTuple = tuple[int, ...]
OrderTypeSig = tuple[int, ...]


def ktuple(coords: Iterable[int]) -> KTuple:
    """Validate `coords` as an element of N^k (k >= 2) and return it as a tuple."""
    x = tuple(coords)
    if len(x) < 2:
        raise ValueError(f"a k-tuple needs k >= 2 coordinates, got {x!r}")
    for c in x:
        if isinstance(c, bool) or not isinstance(c, int) or c < 0:
            raise ValueError(f"coordinates must be naturals, got {x!r}")
    return x


def signature(x: Sequence[int]) -> OrderTypeSig:
    distinct = sorted(set(x))
    rank = {v: i for i, v in enumerate(distinct)}
    return tuple(rank[c] for c in x)


def sig_key(sig: OrderTypeSig) -> str:
    """String form used as a JSON key, e.g. ``"0,2,1"``."""
    return ",".join(map(str, sig))


def enumerate_classes(k: int) -> frozenset[OrderTypeSig]:
    """All order-type signatures of k-tuples.

    Every pattern of ``<``/``=`` among k coordinates is realised over the
    alphabet ``{0, ..., k-1}``, so exhaustive enumeration of that cube
    finds them all.
    """
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    return frozenset(signature(x) for x in itertools.product(range(k), repeat=k))


@lru_cache(maxsize=None)
def surjections(n: int, j: int) -> int:
    """Number of surjections from an n-set onto a j-set (inclusion-exclusion)."""
    if n < 0 or j < 0:
        raise ValueError("n and j must be nonnegative")
    return sum((-1) ** i * comb(j, i) * (j - i) ** n for i in range(j + 1))


def class_count(k: int) -> int:
    """Sum over j of surjections(k, j): the ordered set partition count of a k-set."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    return sum(surjections(k, j) for j in range(1, k + 1))


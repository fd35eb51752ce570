"""Independent oracles shared by the test modules.

Nothing here imports the code paths it is used to check.
"""
import itertools
import random


def relation_sets(x):
    """The two index-pair sets whose equality defines order equivalence."""
    k = len(x)
    less = frozenset((i, j) for i in range(k) for j in range(k) if x[i] < x[j])
    equal = frozenset((i, j) for i in range(k) for j in range(k) if x[i] == x[j])
    return less, equal


def fubini(n):
    """Ordered set partitions of an n-set by the recurrence a(n) = sum C(n,i) a(n-i)."""
    from math import comb

    a = [1]
    for m in range(1, n + 1):
        a.append(sum(comb(m, i) * a[m - i] for i in range(1, m + 1)))
    return a[n]


def brute_zero_subset(values):
    """First nonempty zero-sum subset in binary-counter order over ascending values."""
    vals = sorted(set(values))
    for mask in range(1, 2 ** len(vals)):
        pick = [v for i, v in enumerate(vals) if mask >> i & 1]
        if sum(pick) == 0:
            return tuple(pick)
    return None


def grid_points(E, k):
    return list(itertools.product(sorted(E), repeat=k))


def block_of(v, e0, x):
    if v < e0:
        return 0
    if v < min(x):
        return 1
    return 2


def below(D, x):
    return {z for z in D if max(z) < max(x)}


def premises_hold(fA, fB, x):
    """Re-derive the three jump-free premises at x from raw dicts."""
    A, B = set(fA), set(fB)
    Ax, Bx = below(A, x), below(B, x)
    return x in A and x in B and Ax <= Bx and all(fA[y] == fB[y] for y in Ax)


def random_domain(rng, k, size, hi):
    return {tuple(rng.randrange(hi) for _ in range(k)) for _ in range(size)}


def random_domain_pairs(seed, count, ks=(2, 3), hi=8, max_size=12):
    """Nested and overlapping domain pairs; every other pair is nested."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        k = rng.choice(ks)
        if i % 2 == 0:
            B = random_domain(rng, k, rng.randint(2, max_size), hi)
            A = set(rng.sample(sorted(B), rng.randint(1, len(B))))
        else:
            common = random_domain(rng, k, rng.randint(1, max_size // 2), hi)
            A = common | random_domain(rng, k, rng.randint(0, max_size // 2), hi)
            B = common | random_domain(rng, k, rng.randint(0, max_size // 2), hi)
        out.append((k, A, B))
    return out

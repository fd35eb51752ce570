import random

import pytest
from hypothesis import given, strategies as st

from helpers import below, premises_hold, random_domain, random_domain_pairs
from regreg.families import (
    Family,
    FamilySpec,
    FiniteFn,
    check_full_sample,
    check_jump_free_pair,
    check_reflexive,
    field_of,
    jump_free_violations,
    make_fn,
    restricted_domain,
)

MIN = FamilySpec(Family.MIN)
MIN_FIELD = FamilySpec(Family.MIN_FIELD)
MAX_MIN = FamilySpec(Family.MAX_MIN)


def test_field_of():
    assert field_of({(1, 2), (5, 2)}) == {1, 2, 5}
    assert field_of(set()) == frozenset()
    assert field_of({(3, 3)}) == {3}


@pytest.mark.parametrize(
    "D, x, expected",
    [
        ({(0, 0), (1, 2), (3, 1)}, (1, 2), {(0, 0)}),
        ({(0, 0)}, (0, 0), set()),
        ({(0, 0), (2, 2), (3, 4)}, (3, 4), {(0, 0), (2, 2)}),
    ],
)
def test_restricted_domain(D, x, expected):
    assert restricted_domain(D, x) == expected


@given(
    st.sets(st.tuples(st.integers(0, 7), st.integers(0, 7)), max_size=12),
    st.sets(st.tuples(st.integers(0, 7), st.integers(0, 7)), max_size=12),
    st.tuples(st.integers(0, 7), st.integers(0, 7)),
)
def test_restricted_domain_monotone(A, extra, x):
    B = A | extra
    assert restricted_domain(A, x) <= restricted_domain(B, x)


def test_make_fn_examples():
    assert make_fn(MIN, {(3, 5)})((3, 5)) == 3
    # D_x of (1,2) is {(0,0)}, field {0,1,2}
    assert make_fn(MIN_FIELD, {(0, 0), (1, 2)})((1, 2)) == 0
    assert make_fn(MAX_MIN, {(3, 4), (0, 0)})((3, 4)) == 0


def test_make_fn_rejects_mixed_arity():
    with pytest.raises(ValueError):
        make_fn(MIN, {(1, 2), (1, 2, 3)})


def test_custom_family_requires_rule():
    with pytest.raises(ValueError):
        FamilySpec(Family.CUSTOM)
    spec = FamilySpec(Family.CUSTOM, rule=lambda D, x: max(x))
    assert make_fn(spec, {(1, 4)})((1, 4)) == 4


def test_check_reflexive():
    assert not check_reflexive(FiniteFn({(1, 2): 7}))
    rng = random.Random(11)
    for _ in range(100):
        D = random_domain(rng, rng.choice([2, 3]), rng.randint(1, 12), 10)
        assert check_reflexive(make_fn(MIN, D))
        assert check_reflexive(make_fn(MIN_FIELD, D))


def test_finite_fn_contract():
    f = FiniteFn({(1, 2): 1, (0, 0): 0})
    assert f.k == 2 and f.domain == {(1, 2), (0, 0)}
    assert (1, 2) in f and (2, 1) not in f
    with pytest.raises(AttributeError):
        f.k = 3
    with pytest.raises(ValueError):
        FiniteFn({})
    with pytest.raises(ValueError):
        FiniteFn({(1, 2): 1, (1, 2, 3): 1})


def test_finite_fn_json_roundtrip_is_sorted_and_stable():
    f = FiniteFn({(3, 1): -4, (0, 2): 5, (0, 1): 0})
    text = f.to_json()
    assert text == '{"k":2,"entries":[{"x":[0,1],"v":0},{"x":[0,2],"v":5},{"x":[3,1],"v":-4}]}'
    g = FiniteFn.from_json(text)
    assert g == f and g.to_json() == text


def test_jump_free_min_on_nested_domains():
    A = {(1, 1), (2, 3)}
    B = A | {(0, 5), (4, 4)}
    assert check_jump_free_pair(make_fn(MIN, A), make_fn(MIN, B)) is None


def test_jump_free_max_min_documented_witness():
    A = {(3, 4), (0, 0)}
    B = A | {(2, 2)}
    v = check_jump_free_pair(make_fn(MAX_MIN, A), make_fn(MAX_MIN, B))
    assert v is not None
    assert (v.x, v.value_a, v.value_b) == ((3, 4), 0, 2)


def test_jump_free_disjoint_domains_pass():
    fA = make_fn(MAX_MIN, {(0, 0), (3, 4)})
    fB = make_fn(MAX_MIN, {(1, 1), (2, 5)})
    assert check_jump_free_pair(fA, fB) is None


def test_jump_free_arity_mismatch():
    with pytest.raises(ValueError):
        check_jump_free_pair(make_fn(MIN, {(1, 2)}), make_fn(MIN, {(1, 2, 3)}))


def _raw(spec, D):
    return dict(make_fn(spec, D).items())


@pytest.mark.parametrize("spec", [MIN, MIN_FIELD], ids=["MIN", "MIN_FIELD"])
def test_jump_free_families_pass_random_pairs(spec):
    for k, A, B in random_domain_pairs(seed=5, count=200):
        fA, fB = make_fn(spec, A), make_fn(spec, B)
        assert check_jump_free_pair(fA, fB) is None
        assert check_jump_free_pair(fB, fA) is None


def test_max_min_violations_reverify():
    seen = 0
    for k, A, B in random_domain_pairs(seed=9, count=200):
        fA, fB = make_fn(MAX_MIN, A), make_fn(MAX_MIN, B)
        rawA, rawB = dict(fA.items()), dict(fB.items())
        for v in jump_free_violations(fA, fB):
            seen += 1
            assert premises_hold(rawA, rawB, v.x)
            assert rawA[v.x] == v.value_a < v.value_b == rawB[v.x]
    assert seen > 0


def test_violation_checker_finds_every_brute_force_violation():
    for k, A, B in random_domain_pairs(seed=13, count=100):
        rawA, rawB = _raw(MAX_MIN, A), _raw(MAX_MIN, B)
        expected = {
            x for x in set(A) & set(B) if premises_hold(rawA, rawB, x) and rawA[x] < rawB[x]
        }
        got = {v.x for v in jump_free_violations(make_fn(MAX_MIN, A), make_fn(MAX_MIN, B))}
        assert got == expected


def test_below_helper_matches():
    D = {(0, 0), (1, 2), (3, 1)}
    assert below(D, (1, 2)) == restricted_domain(D, (1, 2))


def test_full_sample():
    rng = random.Random(3)
    domains = [random_domain(rng, rng.choice([2, 3]), rng.randint(1, 10), 8) for _ in range(100)]
    assert check_full_sample(MIN, domains)
    assert check_full_sample(MIN_FIELD, domains)

    def partial(D, x):
        if len(D) == 1:
            raise ValueError("undefined on singletons")
        return min(x)

    assert not check_full_sample(FamilySpec(Family.CUSTOM, rule=partial), [{(1, 2)}])
    not_reflexive = FamilySpec(Family.CUSTOM, rule=lambda D, x: max(x) + 100)
    assert not check_full_sample(not_reflexive, [{(1, 2)}])

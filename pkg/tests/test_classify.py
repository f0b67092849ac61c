import pytest
from hypothesis import given
from hypothesis import strategies as st

from isopar.arith import delta
from isopar.classify import (
    CASE_G,
    Case,
    DimensionTriple,
    StolzReason,
    StolzVariant,
    enumerate_fkm,
    munzner_g,
    stolz,
    theorem_a,
)

T = DimensionTriple

THEOREM_A_EXAMPLES = [
    ((3, 1, 1), True, {Case.OneThird}),
    ((24, 8, 8), True, {Case.OneThird}),
    ((8, 1, 1), False, set()),
    ((12, 4, 2), False, set()),
    ((8, 2, 2), True, {Case.OneQuarter}),
    ((5, 5, 5), True, {Case.EqualN}),
    ((10, 4, 1), True, {Case.RatioTwo}),
]


@pytest.mark.parametrize("triple, admissible, cases", THEOREM_A_EXAMPLES)
def test_theorem_a_examples(triple, admissible, cases):
    v = theorem_a(T(*triple))
    assert v.admissible is admissible
    assert set(v.cases) == cases


def test_overlapping_bullets_all_reported():
    v = theorem_a(T(4, 1, 1))
    assert set(v.cases) == {Case.OneQuarter, Case.RatioTwo}
    assert v.g == 4


def test_point_pair_forces_equal():
    # one normal sphere of dimension n without the other is never admissible
    for n in range(1, 30):
        for b in range(1, n):
            assert not theorem_a(T(n, n, b)).admissible


def test_invalid_triples():
    with pytest.raises(ValueError):
        T(0, 1, 1)
    with pytest.raises(ValueError):
        T(3, 4, 1)


triples = st.builds(
    lambda n, a, b: T(n, min(a, n), min(b, n)),
    st.integers(1, 200),
    st.integers(1, 200),
    st.integers(1, 200),
)


@given(triples)
def test_symmetry(t):
    assert theorem_a(t) == theorem_a(t.swapped())


@given(triples)
def test_g_assignment(t):
    v = theorem_a(t)
    assert v.admissible == bool(v.cases)
    if v.admissible:
        assert 2 * t.n == v.g * (t.m_plus + t.m_minus)
        assert {CASE_G[c] for c in v.cases} == {v.g}
        assert munzner_g(t) == v.g
    else:
        assert v.g is None


@given(triples)
def test_munzner_g_contract(t):
    g = munzner_g(t)
    if g is not None:
        assert 2 * t.n == g * (t.m_plus + t.m_minus)
        if g % 2:
            assert t.m_plus == t.m_minus


def test_unit_multiplicities_force_small_n():
    admissible = {n for n in range(1, 101) if theorem_a(T(n, 1, 1)).admissible}
    assert admissible == {1, 2, 3, 4, 6}


@pytest.mark.parametrize("triple, g", [((4, 1, 1), 4), ((24, 8, 8), 3), ((12, 4, 2), 4), ((7, 2, 1), None)])
def test_munzner_g_examples(triple, g):
    assert munzner_g(T(*triple)) == g


@pytest.mark.parametrize(
    "args, admissible, reason",
    [
        ((5, 4, "HomotopySphere"), True, StolzReason.ExceptionalPair),
        ((2, 2, "Dupin"), True, StolzReason.ExceptionalPair),
        ((5, 4, "Dupin"), True, StolzReason.ExceptionalPair),
        ((4, 3, "HomotopySphere"), True, StolzReason.Divisibility),
        ((5, 3, "HomotopySphere"), False, StolzReason.Fails),
        ((3, 3, "Dupin"), False, StolzReason.Fails),
        ((9, 1, "Dupin"), True, StolzReason.Divisibility),
    ],
)
def test_stolz_examples(args, admissible, reason):
    v = stolz(*args)
    assert (v.admissible, v.reason) == (admissible, reason)


@pytest.mark.parametrize(
    "args, fragment",
    [
        ((5, 1, StolzVariant.HomotopySphere), "min"),
        ((4, 4, StolzVariant.HomotopySphere), "m_minus < m_plus"),
        ((3, 5, StolzVariant.Dupin), "m_minus <= m_plus"),
    ],
)
def test_stolz_preconditions(args, fragment):
    with pytest.raises(ValueError, match=fragment):
        stolz(*args)


@pytest.mark.parametrize(
    "m, k, n, pair",
    [(1, 3, 4, (1, 1)), (2, 2, 6, (2, 1)), (4, 2, 14, (4, 3))],
)
def test_enumerate_fkm_examples(m, k, n, pair):
    entries = {(e.m, e.k): e for e in enumerate_fkm(n + 1)}
    e = entries[(m, k)]
    assert (e.n, e.pair) == (n, pair)


def test_enumerate_fkm_bounds():
    with pytest.raises(ValueError):
        enumerate_fkm(3)
    for e in enumerate_fkm(256):
        ell = e.k * delta(e.m)
        assert e.n + 2 == 2 * ell <= 257
        assert min(e.pair) >= 1
        assert sorted(e.pair) == sorted((e.m, ell - e.m - 1))


def test_enumerate_fkm_is_complete():
    # brute force over (m, k) directly
    got = {(e.m, e.k) for e in enumerate_fkm(64)}
    want = {
        (m, k)
        for m in range(1, 70)
        for k in range(1, 70)
        if 2 * k * delta(m) <= 65 and k * delta(m) - m - 1 >= 1
    }
    assert got == want


def test_fkm_triples_satisfy_theorem_a_and_stolz():
    for e in enumerate_fkm(256):
        v = theorem_a(e.triple)
        assert Case.RatioTwo in v.cases, e
        hi, lo = e.pair
        if lo >= 2:
            assert (hi + lo) % 2 == 1
            if lo < hi:
                assert stolz(hi, lo, "HomotopySphere").admissible, e
        assert stolz(hi, lo, "Dupin").admissible, e

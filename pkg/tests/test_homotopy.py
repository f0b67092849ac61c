import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from isopar.homotopy import (
    AbelianGroup,
    AmSpace,
    FiberConfig,
    FundamentalGroup,
    LoopSphere,
    NamedQuotient,
    Sphere,
    fiber_homology,
    fundamental_group,
    legal_configs,
    poincare_series,
    prod,
    rational_type,
    row_modulus,
    table_consistency,
)


def am_betti_oracle(m, k):
    """Betti numbers of Q[x, y]/(x^m, x^2 + c y^2) by ranks of ideal pieces, |x| = |y| = k."""
    c = 3 if m in (3, 6) else 1
    x, y = sp.symbols("x y")
    gens = [x**m, x**2 + c * y**2]
    betti = {}
    for d in range(0, m + 3):
        mons = [x ** (d - j) * y**j for j in range(d + 1)]
        spanning = []
        for g in gens:
            gd = sp.Poly(g, x, y).total_degree()
            if gd > d:
                continue
            for j in range(d - gd + 1):
                spanning.append(sp.Poly(sp.expand(g * x ** (d - gd - j) * y**j), x, y))
        if spanning:
            rows = [[p.coeff_monomial(mon) for mon in mons] for p in spanning]
            rank = sp.Matrix(rows).rank()
        else:
            rank = 0
        if len(mons) - rank:
            betti[d * k] = len(mons) - rank
    return betti


@pytest.mark.parametrize("m", [1, 2, 3, 4, 6])
@pytest.mark.parametrize("k", [2, 4])
def test_am_series_matches_ideal_ranks(m, k):
    series = poincare_series(AmSpace(m, k), m * k + 4 * k)
    got = {i: b for i, b in enumerate(series) if b}
    assert got == am_betti_oracle(m, k)


def test_a2_is_product_of_spheres():
    for k in (2, 4, 6):
        assert poincare_series(AmSpace(2, k), 30) == poincare_series(prod(Sphere(k), Sphere(k)), 30)


def test_sphere_series():
    assert poincare_series(Sphere(5), 12) == [1, 0, 0, 0, 0, 1] + [0] * 7


def test_frozen_series_s4_s3_loop_s8():
    rt = prod(Sphere(4), Sphere(3), LoopSphere(8))
    assert poincare_series(rt, 14) == [1, 0, 0, 1, 1, 0, 0, 2, 0, 0, 1, 1, 0, 0, 2]


def test_even_loop_sphere_splitting():
    # Loop(S^2j) ~_Q S^(2j-1) x Loop(S^(4j-1))
    for j in (1, 2, 3):
        assert poincare_series(LoopSphere(2 * j), 40) == poincare_series(prod(Sphere(2 * j - 1), LoopSphere(4 * j - 1)), 40)


def test_named_quotients_resolve():
    assert poincare_series(NamedQuotient("Sp(3)/Sp(1)^3"), 20) == poincare_series(AmSpace(3, 4), 20)
    with pytest.raises(ValueError):
        poincare_series(NamedQuotient("nope"), 4)
    with pytest.raises(ValueError):
        poincare_series(LoopSphere(1), 4)


@pytest.mark.parametrize(
    "cfg, group",
    [
        ((4, 3, False, False), FundamentalGroup.Trivial),
        ((3, 1, False, False), FundamentalGroup.Z),
        ((3, 1, True, False), FundamentalGroup.Z),
        ((1, 1, False, False), FundamentalGroup.ZxZ),
        ((1, 1, True, False), FundamentalGroup.ZxZ2),
        ((1, 1, False, True), FundamentalGroup.ZxZ2),
        ((1, 1, True, True), FundamentalGroup.Q8),
    ],
)
def test_fundamental_group(cfg, group):
    assert fundamental_group(FiberConfig(*cfg)) is group


@pytest.mark.parametrize(
    "cfg, i, group",
    [
        ((4, 3, False, False), 7, AbelianGroup(2)),
        ((4, 3, False, False), 4, AbelianGroup(1)),
        ((4, 3, False, False), 5, AbelianGroup(0)),
        ((3, 1, True, False), 3, AbelianGroup(0, (2,))),
        ((3, 1, True, False), 4, AbelianGroup(0, (2,))),
        ((3, 1, True, False), 7, AbelianGroup(1)),
        ((1, 1, True, False), 2, AbelianGroup(0, (2,))),
        ((1, 1, True, False), 5, AbelianGroup(1, (2,))),
        ((1, 1, True, True), 1, AbelianGroup(0, (2, 2))),
        ((1, 1, True, True), 2, AbelianGroup(0)),
        ((2, 2, False, False), 4, AbelianGroup(2)),
    ],
)
def test_fiber_homology_rows(cfg, i, group):
    assert fiber_homology(FiberConfig(*cfg), i) == group


@pytest.mark.parametrize("bad", [(3, 2, True, False), (2, 1, False, True), (1, 2, False, False), (2, 0, False, False)])
def test_illegal_configs(bad):
    with pytest.raises(ValueError):
        FiberConfig(*bad)


def test_abelian_group_canonical():
    g = AbelianGroup(1, (4, 2))
    assert g.torsion == (2, 4)
    assert str(g) == "Z + Z_2 + Z_4"
    assert str(AbelianGroup(0)) == "0"
    assert g.to_dict() == {"rank": 1, "torsion": [2, 4]}


def test_rational_type_examples():
    assert [str(t) for t in rational_type(FiberConfig(4, 3))] == ["S^4 x S^3 x Loop(S^8)"]
    assert [str(t) for t in rational_type(FiberConfig(3, 1, True))] == ["S^1 x S^7 x Loop(S^9)"]
    alts = {str(t) for t in rational_type(FiberConfig(4, 4), homotopy_sphere_context=True)}
    assert "A_4(4) x Loop(S^17)" not in alts
    assert "A_6(4) x Loop(S^25)" not in alts
    assert "Sp(3)/Sp(1)^3 x Loop(S^13)" in alts
    full = {str(t) for t in rational_type(FiberConfig(4, 4))}
    assert {"A_4(4) x Loop(S^17)", "A_6(4) x Loop(S^25)"} <= full


def test_exceptional_alternatives_listed():
    assert len(rational_type(FiberConfig(2, 2))) == 5
    assert "F4/Spin(8) x Loop(S^25)" in {str(t) for t in rational_type(FiberConfig(8, 8))}


ALL_CONFIGS = [c for a in range(1, 11) for b in range(1, a + 1) for c in legal_configs(a, b)]


@pytest.mark.parametrize("cfg", ALL_CONFIGS, ids=str)
@pytest.mark.parametrize("hs", [False, True])
def test_table_consistency(cfg, hs):
    assert table_consistency(cfg, 60, hs) == []


@pytest.mark.parametrize("cfg", ALL_CONFIGS, ids=str)
def test_alternatives_share_series(cfg):
    series = {tuple(poincare_series(t, 60)) for t in rational_type(cfg)}
    assert len(series) == 1


configs = st.sampled_from(ALL_CONFIGS)


@given(configs, st.integers(1, 200))
def test_periodicity(cfg, i):
    p = row_modulus(cfg)
    assert fiber_homology(cfg, i) == fiber_homology(cfg, i + p)


@given(configs)
def test_h0(cfg):
    assert fiber_homology(cfg, 0) == AbelianGroup(1)


def test_negative_degree():
    with pytest.raises(ValueError):
        fiber_homology(FiberConfig(2, 1), -1)
    with pytest.raises(ValueError):
        poincare_series(Sphere(2), -1)

import pytest

from unitri.autgroup import UniAut, group_commutator, parse_aut, random_aut_rng
from unitri.central import (
    CentralizerClass,
    OrdinalLevel,
    commutes,
    u2_center_test,
    u2_centralizer_classify,
    u2_hypercenter_level,
    u3_hypercenter_level_truncated,
    un_center_test,
)
from unitri.freealg import NcPoly, c_generator, ring_commutator
from unitri.invariants import CapViolationError, PitConfig, s_layer_basis
from unitri.verdict import FAILS, HOLDS, PROBABLY_HOLDS, Verdict

from conftest import rand_poly

CFG = PitConfig(seed=5, trials=20, subst_degree=2, height=6)


def test_ordinal_level_order_and_str():
    levels = [OrdinalLevel(0, 0), OrdinalLevel(0, 4), OrdinalLevel(1, 0),
              OrdinalLevel(1, 1), OrdinalLevel(2, 2), OrdinalLevel(3, 1)]
    assert levels == sorted(levels)
    assert [str(l) for l in levels] == ["0", "4", "w", "w+1", "2w+2", "3w+1"]
    for l in levels:
        assert OrdinalLevel.parse(str(l)) == l


def test_ordinal_level_validation():
    with pytest.raises(ValueError):
        OrdinalLevel(-1, 0)


def test_verdict_fails_needs_witness():
    with pytest.raises(ValueError):
        Verdict(FAILS)
    v = Verdict.fails(UniAut.identity(2))
    assert not v.is_positive()
    assert Verdict.holds().is_positive()
    assert Verdict.probably_holds(7).trials == 7


def test_u2_center_test_examples():
    assert u2_center_test(parse_aut("x1 + 3; x2"))
    assert not u2_center_test(parse_aut("x1 + x2; x2"))
    assert not u2_center_test(parse_aut("x1; x2 + 1"))


def test_u2_centralizer_classes():
    assert u2_centralizer_classify(parse_aut("x1 + x2^2; x2")) is CentralizerClass.FIRST_ROW
    assert u2_centralizer_classify(parse_aut("x1; x2 + 1")) is CentralizerClass.CONSTANT_PAIRS
    assert u2_centralizer_classify(UniAut.identity(2)) is CentralizerClass.WHOLE_GROUP
    # a zero shift makes the element central, not a constant-pairs case
    assert u2_centralizer_classify(parse_aut("x1 + 2; x2")) is CentralizerClass.WHOLE_GROUP
    assert u2_centralizer_classify(parse_aut("x1 + x2; x2 + 1")) is CentralizerClass.GENERIC


def test_commutes_examples():
    assert commutes(parse_aut("x1 + x2^2; x2"), parse_aut("x1 + x2^3; x2"))
    assert not commutes(parse_aut("x1 + x2^2; x2"), parse_aut("x1; x2 + 1"))
    assert commutes(parse_aut("x1 + x2^2; x2 + 1"), UniAut.identity(2))


def test_u2_hypercenter_level_examples():
    assert u2_hypercenter_level(parse_aut("x1 + x2^3 + 2*x2; x2")) == OrdinalLevel(0, 4)
    assert u2_hypercenter_level(parse_aut("x1 + 5; x2")) == OrdinalLevel(0, 1)
    assert u2_hypercenter_level(parse_aut("x1; x2 + 1")) == OrdinalLevel(1, 1)
    assert u2_hypercenter_level(UniAut.identity(2)) == OrdinalLevel(0, 0)


def test_hypercenter_descent(rng):
    for _ in range(30):
        deg = rng.randint(1, 5)
        f = rand_poly(rng, 2, deg, vars_from=2)
        while f.degree() < 1:
            f = rand_poly(rng, 2, deg, vars_from=2)
        phi = UniAut(2, [f, NcPoly.zero(2)])
        level = u2_hypercenter_level(phi)
        for _ in range(20):
            psi = UniAut(2, [rand_poly(rng, 2, 3, vars_from=2),
                             NcPoly.constant(rng.randint(-4, 4), 2)])
            assert u2_hypercenter_level(group_commutator(phi, psi)) < level


def test_centralizer_classes_match_commutes(rng):
    first_row = parse_aut("x1 + x2^2; x2")
    translation = parse_aut("x1; x2 + 3")
    for _ in range(30):
        h = rand_poly(rng, 2, 3, vars_from=2)
        row = UniAut(2, [h, NcPoly.zero(2)])
        assert commutes(first_row, row)
        const_pair = UniAut(2, [NcPoly.constant(rng.randint(-4, 4), 2),
                                NcPoly.constant(rng.randint(-4, 4), 2)])
        assert commutes(translation, const_pair)


def test_un_center_test_holds_on_c_generators():
    for k in (1, 2, 3, 4):
        phi = UniAut(3, [c_generator(k, 2, 3, rank=3), NcPoly.zero(3), NcPoly.zero(3)])
        assert un_center_test(phi, CFG).kind == HOLDS


def test_un_center_test_fails_with_replayable_witness():
    phi = UniAut(3, [NcPoly.variable(2, 3), NcPoly.zero(3), NcPoly.zero(3)])
    verdict = un_center_test(phi, CFG)
    assert verdict.kind == FAILS
    assert not commutes(phi, verdict.witness)
    assert verdict.witness.apply(phi.offsets[0]) != phi.offsets[0]


def test_un_center_test_fails_on_shape():
    phi = parse_aut("x1; x2; x3 + 1")
    verdict = un_center_test(phi, CFG)
    assert verdict.kind == FAILS
    assert not commutes(phi, verdict.witness)


def test_un_center_test_rank4():
    c1 = c_generator(1, 3, 4, rank=4)
    offs = [NcPoly.zero(4)] * 4
    offs[0] = c1 * c1 + 3
    assert un_center_test(UniAut(4, offs), CFG).kind == HOLDS
    offs = [NcPoly.zero(4)] * 4
    offs[0] = NcPoly.variable(3, 4)
    verdict = un_center_test(UniAut(4, offs), CFG)
    assert verdict.kind == FAILS
    assert not commutes(UniAut(4, offs), verdict.witness)


def test_un_center_test_requires_rank3():
    with pytest.raises(ValueError):
        un_center_test(UniAut.identity(2), CFG)


def test_u3_classifier_bands():
    lvl, v = u3_hypercenter_level_truncated(parse_aut("x1; x2; x3 + 1"), 6, CFG)
    assert (lvl, v.kind) == (OrdinalLevel(3, 1), HOLDS)
    lvl, v = u3_hypercenter_level_truncated(parse_aut("x1; x2 + x3^2; x3"), 6, CFG)
    assert (lvl, v.kind) == (OrdinalLevel(2, 2), HOLDS)
    # constant x2-shifts sit at the first level of the upper band
    lvl, v = u3_hypercenter_level_truncated(parse_aut("x1; x2 + 5; x3"), 6, CFG)
    assert (lvl, v.kind) == (OrdinalLevel(2, 1), HOLDS)
    lvl, v = u3_hypercenter_level_truncated(UniAut.identity(3), 6, CFG)
    assert (lvl, v.kind) == (OrdinalLevel(0, 0), HOLDS)


def test_u3_classifier_center():
    phi = UniAut(3, [c_generator(1, 2, 3, rank=3), NcPoly.zero(3), NcPoly.zero(3)])
    lvl, v = u3_hypercenter_level_truncated(phi, 6, CFG)
    assert (lvl, v.kind) == (OrdinalLevel(0, 1), HOLDS)


def test_u3_classifier_finite_levels_are_least():
    x3 = NcPoly.variable(3, 3)
    cases = [
        (x3, 2),
        (x3 * c_generator(1, 2, 3, rank=3), 2),
        (x3 ** 2, 3),
    ]
    for f1, expected in cases:
        phi = UniAut(3, [f1, NcPoly.zero(3), NcPoly.zero(3)])
        lvl, v = u3_hypercenter_level_truncated(phi, 6, CFG)
        assert lvl == OrdinalLevel(0, expected)
        assert v.kind in (HOLDS, PROBABLY_HOLDS)
        # least level: the layer below must not contain the offset
        below = s_layer_basis(expected - 1, max(int(f1.degree()), 1), CFG)
        assert not below.contains(f1)


def test_u3_classifier_band_fallback():
    # x2 abelianizes with x2-degree 1: only the band w+2 is consistent
    phi = UniAut(3, [NcPoly.variable(2, 3), NcPoly.zero(3), NcPoly.zero(3)])
    lvl, v = u3_hypercenter_level_truncated(phi, 6, CFG)
    assert lvl == OrdinalLevel(1, 2)
    assert v.kind == PROBABLY_HOLDS
    # a commutator image that never certifies a finite level within the bound
    v1 = ring_commutator(c_generator(1, 2, 3, rank=3), NcPoly.variable(2, 3))
    phi = UniAut(3, [v1, NcPoly.zero(3), NcPoly.zero(3)])
    lvl, verdict = u3_hypercenter_level_truncated(phi, 6, CFG, max_level=2)
    assert lvl == OrdinalLevel(1, 1)
    assert verdict.kind == PROBABLY_HOLDS


def test_u3_classifier_cap_exceeded():
    phi = UniAut(3, [NcPoly.variable(3, 3) ** 7, NcPoly.zero(3), NcPoly.zero(3)])
    with pytest.raises(CapViolationError):
        u3_hypercenter_level_truncated(phi, 5, CFG)


def test_center_test_agrees_with_commuting_oracle(rng):
    # the randomized test never returns holds on an element some probe moves
    for _ in range(20):
        phi_offs = [rand_poly(rng, 3, 2, vars_from=2, max_terms=2),
                    NcPoly.zero(3), NcPoly.zero(3)]
        phi = UniAut(3, phi_offs)
        verdict = un_center_test(phi, CFG)
        if verdict.kind == FAILS:
            assert not commutes(phi, verdict.witness)
        probes = [random_aut_rng(rng, 3, 2, 5, first_zero=True) for _ in range(10)]
        if any(not commutes(phi, p) for p in probes):
            assert verdict.kind == FAILS

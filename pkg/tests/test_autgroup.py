from fractions import Fraction

import pytest

from unitri.autgroup import (
    ElementarySpec,
    NonConstantLastError,
    UniAut,
    VariableLeakError,
    aut_from_json,
    aut_to_json,
    compose_chain,
    conjugate,
    derived_level_shape,
    difference_preimage,
    factor_semidirect,
    format_aut,
    group_commutator,
    parse_aut,
    random_aut,
    random_aut_rng,
)
from unitri.freealg import NcPoly, c_generator, parse_poly, ring_commutator

from conftest import rand_poly


def y_poly(s):
    return parse_poly(s, 2)


def u2(f_text, b):
    return UniAut(2, [y_poly(f_text), NcPoly.constant(b, 2)])


def test_aut_new_valid():
    phi = u2("x2^2", 1)
    assert phi.offsets[0] == y_poly("x2^2")


def test_aut_new_variable_leak():
    with pytest.raises(VariableLeakError) as err:
        UniAut(2, [parse_poly("x1*x2", 2), NcPoly.zero(2)])
    assert err.value.index == 1


def test_aut_new_nonconstant_last():
    with pytest.raises(NonConstantLastError):
        UniAut(3, [NcPoly.zero(3), NcPoly.zero(3), NcPoly.variable(3, 3)])


def test_apply_reads_offset():
    phi = u2("x2^2", 1)
    assert phi.apply(NcPoly.variable(1, 2)) == parse_poly("x1 + x2^2", 2)


def test_apply_identity():
    p = parse_poly("x1*x2 - 3", 2)
    assert UniAut.identity(2).apply(p) == p


@pytest.mark.parametrize("n", [2, 3, 4])
def test_apply_shift_of_bracket(n):
    # (x1, x2 + x3^n, x3) moves [c1, x2] by sum of x3^p c2 x3^q, p+q = n-1
    x2 = NcPoly.variable(2, 3)
    x3 = NcPoly.variable(3, 3)
    phi = UniAut(3, [NcPoly.zero(3), x3 ** n, NcPoly.zero(3)])
    v = ring_commutator(c_generator(1, 2, 3), x2)
    c2 = c_generator(2, 2, 3)
    expected = NcPoly.zero(3)
    for p in range(n):
        expected = expected + x3 ** p * c2 * x3 ** (n - 1 - p)
    assert phi.apply(v) - v == expected


def test_compose_with_identity():
    phi = u2("x2^3 - x2", 2)
    assert phi * UniAut.identity(2) == phi
    assert UniAut.identity(2) * phi == phi


def test_compose_one_step_by_hand():
    a = parse_aut("x1 + x2; x2")
    b = parse_aut("x1; x2 + 1")
    assert a * b == parse_aut("x1 + x2 + 1; x2 + 1")


def test_conjugation_closed_form_instance():
    # f = y^2, h = y^3, b = 1, c = 2: psi^-1 phi psi = (x + h(y) - h(y+1) + f(y+2), y+1)
    phi = u2("x2^2", 1)
    psi = u2("x2^3", 2)
    x1 = NcPoly.variable(1, 2)
    y = NcPoly.variable(2, 2)
    h = y ** 3
    f = y ** 2
    shift = lambda p, t: p.substitute([x1, y + t])
    expected = UniAut(2, [h - shift(h, 1) + shift(f, 2), NcPoly.one(2)])
    assert conjugate(phi, psi) == expected
    assert psi.invert() * phi * psi == expected


def test_invert_closed_form_instance():
    # (x + y^2, y + 1)^-1 = (x - (y-1)^2, y - 1)
    phi = u2("x2^2", 1)
    y = NcPoly.variable(2, 2)
    expected = UniAut(2, [-((y - 1) ** 2), NcPoly.constant(-1, 2)])
    assert phi.invert() == expected


def test_invert_identity():
    assert UniAut.identity(3).invert().is_identity()


def test_invert_rank3_round_trip():
    phi = parse_aut("x1 + x2*x3; x2 + x3^2; x3 + 1")
    assert (phi * phi.invert()).is_identity()
    assert (phi.invert() * phi).is_identity()


def test_conjugate_by_identity():
    phi = u2("x2^2 - 2*x2", 3)
    assert conjugate(phi, UniAut.identity(2)) == phi


def test_center_elements_conjugation_invariant(rng):
    center = u2("5", 0)
    for _ in range(20):
        psi = UniAut(2, [rand_poly(rng, 2, 3, vars_from=2),
                         NcPoly.constant(rng.randint(-3, 3), 2)])
        assert conjugate(center, psi) == center


def test_commutator_with_self_is_identity():
    phi = u2("x2^2", 1)
    assert group_commutator(phi, phi).is_identity()


def test_commutator_closed_form_instance():
    # [(x+y^2, y+1), (x+y^3, y+2)] = (x + y^3 - (y+1)^3 + (y+2)^2 - y^2, y)
    phi = u2("x2^2", 1)
    psi = u2("x2^3", 2)
    x1 = NcPoly.variable(1, 2)
    y = NcPoly.variable(2, 2)
    shift = lambda p, t: p.substitute([x1, y + t])
    expected_offset = y ** 3 - shift(y ** 3, 1) + shift(y ** 2, 2) - y ** 2
    assert group_commutator(phi, psi) == UniAut(2, [expected_offset, NcPoly.zero(2)])


def test_commutator_lands_in_center():
    phi = u2("x2", 0)
    psi = u2("0", 1)
    assert group_commutator(phi, psi) == u2("1", 0)


def test_factor_identity():
    assert all(g.is_identity() for g in factor_semidirect(UniAut.identity(3)))


def test_factor_rank3_recomposes():
    phi = parse_aut("x1 + x2*x3; x2 + x3^2; x3 + 1")
    factors = factor_semidirect(phi)
    assert len(factors) == 3
    assert compose_chain(list(reversed(factors))) == phi


def test_factor_rank2_order():
    phi = u2("x2^2 + x2", 3)
    g1, g2 = factor_semidirect(phi)
    assert g1 == u2("x2^2 + x2", 0)
    assert g2 == u2("0", 3)
    assert g2 * g1 == phi


def test_derived_level_shape_values():
    phi = UniAut(3, [parse_poly("x2*x3", 3), NcPoly.zero(3), NcPoly.zero(3)])
    assert derived_level_shape(phi) == 2
    assert derived_level_shape(UniAut.identity(3)) == 3
    assert derived_level_shape(parse_aut("x1; x2; x3 + 1")) == 0


def test_random_aut_deterministic():
    a = random_aut(3, 3, 10, seed=42)
    b = random_aut(3, 3, 10, seed=42)
    assert a == b
    assert a != random_aut(3, 3, 10, seed=43)


def test_random_aut_respects_bounds():
    for seed in range(30):
        phi = random_aut(4, 3, 10, seed=seed)
        for f in phi.offsets:
            assert f.degree() <= 3
        assert phi.offsets[-1].degree() <= 0


# -- group laws on random samples ----------------------------------------------


def test_group_axioms(rng):
    for _ in range(60):
        rank = rng.randint(2, 4)
        a = random_aut_rng(rng, rank, 3, 8)
        b = random_aut_rng(rng, rank, 3, 8)
        c = random_aut_rng(rng, rank, 3, 8)
        assert (a * b) * c == a * (b * c)
        assert (a * a.invert()).is_identity()
        assert (a.invert() * a).is_identity()


def test_lemma1_closed_forms_random(rng):
    x1 = NcPoly.variable(1, 2)
    y = NcPoly.variable(2, 2)

    def shift(p, t):
        return p.substitute([x1, y + NcPoly.constant(t, 2)])

    for _ in range(30):
        f = rand_poly(rng, 2, 4, vars_from=2)
        h = rand_poly(rng, 2, 4, vars_from=2)
        b = Fraction(rng.randint(-5, 5), rng.randint(1, 5))
        c = Fraction(rng.randint(-5, 5), rng.randint(1, 5))
        phi = UniAut(2, [f, NcPoly.constant(b, 2)])
        psi = UniAut(2, [h, NcPoly.constant(c, 2)])
        assert phi.invert() == UniAut(2, [-shift(f, -b), NcPoly.constant(-b, 2)])
        assert conjugate(phi, psi) == UniAut(
            2, [h - shift(h, b) + shift(f, c), NcPoly.constant(b, 2)])
        assert group_commutator(phi, psi) == UniAut(
            2, [h - shift(h, b) + shift(f, c) - f, NcPoly.zero(2)])


def test_u2_commutators_fix_y(rng):
    for _ in range(50):
        phi = UniAut(2, [rand_poly(rng, 2, 3, vars_from=2),
                         NcPoly.constant(rng.randint(-4, 4), 2)])
        psi = UniAut(2, [rand_poly(rng, 2, 3, vars_from=2),
                         NcPoly.constant(rng.randint(-4, 4), 2)])
        assert group_commutator(phi, psi).offsets[1].is_zero()


def test_difference_preimage_solves(rng):
    x1 = NcPoly.variable(1, 2)
    y = NcPoly.variable(2, 2)
    for _ in range(30):
        target = rand_poly(rng, 2, 4, vars_from=2)
        r = difference_preimage(target, 1)
        assert r.substitute([x1, y + 1]) - r == target


def test_any_first_row_element_is_a_commutator():
    target = y_poly("x2^4 - 1/2*x2^2 + 3")
    r = difference_preimage(target, 1)
    phi = u2("0", 1)
    psi = UniAut(2, [-r, NcPoly.zero(2)])
    assert group_commutator(phi, psi) == UniAut(2, [target, NcPoly.zero(2)])


def test_commutators_have_shape_at_least_one(rng):
    for _ in range(40):
        rank = rng.randint(2, 4)
        phi = random_aut_rng(rng, rank, 2, 6)
        psi = random_aut_rng(rng, rank, 2, 6)
        assert derived_level_shape(group_commutator(phi, psi)) >= 1


def test_factor_recomposes_random(rng):
    for _ in range(60):
        rank = rng.randint(2, 4)
        phi = random_aut_rng(rng, rank, 3, 8)
        assert compose_chain(list(reversed(factor_semidirect(phi)))) == phi


# -- text and JSON forms --------------------------------------------------------


def test_parse_format_round_trip(rng):
    for _ in range(40):
        rank = rng.randint(2, 4)
        phi = random_aut_rng(rng, rank, 3, 6)
        assert parse_aut(format_aut(phi)) == phi


def test_format_splices_signs():
    phi = UniAut(2, [y_poly("-x2^2"), NcPoly.zero(2)])
    assert format_aut(phi) == "x1 - x2^2; x2"


def test_parse_aut_rejects_scaled_images():
    with pytest.raises(VariableLeakError):
        parse_aut("2*x1; x2 + 1")


def test_json_round_trip():
    phi = parse_aut("x1 + x2*x3; x2 + x3^2; x3 + 1")
    assert aut_from_json(aut_to_json(phi)) == phi


def test_elementary_spec():
    offset = parse_poly("x3^2", 3)
    spec = ElementarySpec(2, 1, offset)
    assert spec.as_unitriangular() == UniAut(
        3, [NcPoly.zero(3), offset, NcPoly.zero(3)])
    with pytest.raises(ValueError):
        ElementarySpec(2, 0, offset)
    with pytest.raises(VariableLeakError):
        ElementarySpec(3, 1, offset)
    scaled = ElementarySpec(2, 2, offset)
    with pytest.raises(ValueError):
        scaled.as_unitriangular()

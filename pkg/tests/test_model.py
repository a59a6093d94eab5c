from fractions import Fraction

import pytest

from hardlef import Form, StructureModel, Vector, extend_differential, \
    lie_derivative, wedge
from hardlef.errors import ValidationError

from conftest import random_form, random_model, random_vector


@pytest.fixture
def kt4():
    return StructureModel.from_salamon("(0,0,12,0)", name="kt4")


def test_defining_data(kt4):
    assert kt4.d(Form.generator(4, 3)) == Form.monomial(4, (1, 2))
    for i in (1, 2, 4):
        assert kt4.d(Form.generator(4, i)).is_zero()


def test_antiderivation_rule(kt4):
    e3e4 = wedge(Form.generator(4, 3), Form.generator(4, 4))
    assert kt4.d(e3e4) == Form.monomial(4, (1, 2, 4))
    e4e3 = wedge(Form.generator(4, 4), Form.generator(4, 3))
    assert kt4.d(e4e3) == -Form.monomial(4, (1, 2, 4))


def test_d_of_functions_vanishes(kt4):
    assert kt4.d(Form.constant(4, 7)).is_zero()


def test_d_squared_zero_on_random_forms(rng):
    for _ in range(40):
        m = random_model(rng)
        k = rng.randint(0, m.n_gen - 1)
        f = random_form(rng, m.n_gen, k)
        assert m.d(m.d(f)).is_zero()


def test_constructor_accepts_any_iterable():
    diffs = (f for f in [Form.zero(3, 2), Form.zero(3, 2),
                         Form.monomial(3, (1, 2))])
    m = StructureModel(diffs)
    assert m.n_gen == 3
    assert m.structure_string() == "(0,0,12)"


def test_jacobi_violation_rejected():
    with pytest.raises(ValidationError):
        StructureModel.from_salamon("(0,0,12,34)")


def test_salamon_coefficients():
    m = StructureModel.from_salamon(["0", "0", "12-1/2*13", "2*12"])
    assert m.d1[2] == Form.monomial(4, (1, 2)) + \
        Form.monomial(4, (1, 3), Fraction(-1, 2))
    assert m.d1[3] == Form.monomial(4, (1, 2), 2)
    assert m.structure_string() == "(0,0,12-1/2*13,2*12)"


def test_salamon_rejects_bad_terms():
    with pytest.raises(ValueError):
        StructureModel.from_salamon("(0,0,123)")
    with pytest.raises(ValueError):
        StructureModel.from_salamon("(0,0,11)")


def test_from_brackets_matches_structure_equations(kt4):
    m = StructureModel.from_brackets(4, {(1, 2): {3: -1}})
    assert m == kt4


def test_bracket_readoff(kt4):
    b = kt4.bracket(Vector.basis(4, 1), Vector.basis(4, 2))
    assert b == Vector([0, 0, -1, 0])
    assert kt4.bracket(Vector.basis(4, 1), Vector.basis(4, 4)).is_zero()


def test_lie_derivative_examples(kt4):
    e3 = Form.generator(4, 3)
    assert lie_derivative(kt4, Vector.basis(4, 4), e3).is_zero()
    assert lie_derivative(kt4, Vector.basis(4, 1), e3) == Form.generator(4, 2)


def test_lie_derivative_closed_and_killed(rng):
    # closed forms annihilated by i_v have vanishing Lie derivative
    m = StructureModel.from_salamon("(0,0,12,0)")
    v = Vector.basis(4, 4)
    f = Form.monomial(4, (1, 2))
    assert lie_derivative(m, v, f).is_zero()


def test_lie_derivative_is_derivation(rng):
    for _ in range(30):
        m = random_model(rng)
        v = random_vector(rng, m.n_gen)
        a = random_form(rng, m.n_gen, rng.randint(0, 2))
        b = random_form(rng, m.n_gen, rng.randint(0, 2))
        lhs = m.lie_derivative(v, wedge(a, b))
        rhs = wedge(m.lie_derivative(v, a), b) + wedge(a, m.lie_derivative(v, b))
        assert lhs == rhs


def test_lie_derivative_commutes_with_d(rng):
    for _ in range(30):
        m = random_model(rng)
        v = random_vector(rng, m.n_gen)
        a = random_form(rng, m.n_gen, rng.randint(0, m.n_gen - 1))
        assert m.d(m.lie_derivative(v, a)) == m.lie_derivative(v, m.d(a))


def test_extend_differential_alias(kt4):
    f = Form.generator(4, 3)
    assert extend_differential(kt4, f) == kt4.d(f)


def test_nilpotent_and_unimodular_flags(kt4):
    assert kt4.is_nilpotent and kt4.is_unimodular
    solvable = StructureModel.from_salamon("(0,12)")
    assert not solvable.is_nilpotent
    assert not solvable.is_unimodular
    h5 = StructureModel.from_salamon("(0,0,0,0,12+34)")
    assert h5.is_nilpotent and h5.is_unimodular

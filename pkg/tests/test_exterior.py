from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from hardlef import Form, Vector, contract, top_coefficient, wedge, wedge_power
from hardlef.errors import DegreeError, ModelMismatchError

from conftest import random_form, random_vector


def e(i, n=4):
    return Form.generator(n, i)


def test_wedge_basis_product():
    assert wedge(e(1), e(2)) == Form.monomial(4, (1, 2))


def test_wedge_graded_commutativity_on_generators():
    assert wedge(e(2), e(1)) == -Form.monomial(4, (1, 2))


def test_wedge_bilinear_expansion():
    a = e(1) + e(2)
    b = e(1) - e(2)
    assert wedge(a, b) == Form.monomial(4, (1, 2), -2)


def test_wedge_above_top_degree_is_zero():
    top = Form.monomial(3, (1, 2, 3))
    assert wedge(top, e(1, 3)).is_zero()
    assert wedge(top, e(1, 3)).degree == 4


def test_contract_dual_pairing():
    assert contract(Vector.basis(4, 1), Form.monomial(4, (1, 2))) == e(2)
    assert contract(Vector.basis(4, 3), Form.monomial(4, (1, 2))).is_zero()


def test_contract_antiderivation_signs():
    vol = Form.monomial(4, (1, 2, 3))
    assert contract(Vector.basis(4, 1), vol) == Form.monomial(4, (2, 3))
    assert contract(Vector.basis(4, 2), vol) == -Form.monomial(4, (1, 3))


def test_contract_zero_form():
    assert contract(Vector.basis(4, 1), Form.constant(4, 5)).is_zero()


def test_top_coefficient():
    assert top_coefficient(Form.monomial(4, (1, 2, 3, 4), 5)) == 5
    assert top_coefficient(Form.monomial(4, (2, 1, 3, 4))) == -1
    with pytest.raises(DegreeError):
        top_coefficient(Form.monomial(4, (1, 2)))


def test_mismatched_frames_rejected():
    with pytest.raises(ModelMismatchError):
        wedge(e(1, 3), e(1, 4))
    with pytest.raises(ModelMismatchError):
        contract(Vector.basis(3, 1), e(1, 4))


def test_add_requires_equal_degree():
    with pytest.raises(DegreeError):
        e(1) + Form.monomial(4, (1, 2))


def test_no_zero_coefficients_stored():
    diff = e(1) - e(1)
    assert diff.terms == {}
    prod = wedge(e(1) + e(2), e(1) + e(2))
    assert all(prod.terms.values())


def test_float_coefficients_rejected():
    with pytest.raises(TypeError):
        Form.monomial(4, (1,), 0.5)


def test_vector_pairing():
    v = Vector([1, 0, 2, 0])
    assert v.pair(e(3) * Fraction(1, 2)) == 1
    with pytest.raises(DegreeError):
        v.pair(Form.monomial(4, (1, 2)))


def test_equality_ignores_degree_of_zero_forms():
    assert Form.zero(4, 2) == Form.zero(4, 3)
    assert Form.zero(4, 2) != Form.zero(3, 2)


def test_wedge_power():
    f = Form.monomial(5, (1, 2)) + Form.monomial(5, (3, 4))
    assert wedge_power(f, 0) == Form.constant(5, 1)
    assert wedge_power(f, 2) == Form.monomial(5, (1, 2, 3, 4), 2)


# ----- property tests --------------------------------------------------------

def _forms(n_gen, degree, max_terms=3):
    masks = list(combinations(range(1, n_gen + 1), degree))
    coeff = st.fractions(min_value=-6, max_value=6, max_denominator=4)
    if not masks:
        return st.just(Form.zero(n_gen, degree))
    term = st.tuples(st.sampled_from(masks), coeff)
    def build(terms):
        out = Form.zero(n_gen, degree)
        for idx, c in terms:
            out = out + Form.monomial(n_gen, idx, c)
        return out
    return st.lists(term, max_size=max_terms).map(build)


def _vectors(n_gen):
    coeff = st.fractions(min_value=-4, max_value=4, max_denominator=3)
    return st.lists(coeff, min_size=n_gen, max_size=n_gen).map(Vector)


@settings(max_examples=120, derandomize=True)
@given(a=_forms(5, 1), b=_forms(5, 2), c=_forms(5, 1))
def test_wedge_associative(a, b, c):
    assert wedge(wedge(a, b), c) == wedge(a, wedge(b, c))


@settings(max_examples=120, derandomize=True)
@given(a=_forms(5, 2), b=_forms(5, 3))
def test_wedge_graded_commutative(a, b):
    sign = (-1) ** (a.degree * b.degree)
    assert wedge(a, b) == sign * wedge(b, a)


@settings(max_examples=120, derandomize=True)
@given(v=_vectors(5), a=_forms(5, 2), b=_forms(5, 2))
def test_contract_antiderivation(v, a, b):
    lhs = contract(v, wedge(a, b))
    rhs = wedge(contract(v, a), b) + (-1) ** a.degree * wedge(a, contract(v, b))
    assert lhs == rhs
    assert contract(v, contract(v, wedge(a, b))).is_zero()


@settings(max_examples=120, derandomize=True)
@given(a=_forms(4, 2), b=_forms(4, 2), s=st.fractions(min_value=-5,
                                                      max_value=5,
                                                      max_denominator=3))
def test_top_coefficient_bilinear(a, b, s):
    c = Form.monomial(4, (3, 4))
    lhs = top_coefficient(wedge(a + s * b, c))
    assert lhs == top_coefficient(wedge(a, c)) + s * top_coefficient(wedge(b, c))


def test_random_form_helper_canonical(rng):
    for _ in range(50):
        f = random_form(rng, 5, 2)
        assert all(mask.bit_count() == 2 for mask in f.terms)
        assert all(f.terms.values())
        v = random_vector(rng, 5)
        assert contract(v, contract(v, f)).is_zero()

"""Binary cubic forms attached to a pair, and their unimodular transforms."""

import pytest
from hypothesis import given, strategies as st

from planebundles.chern import ChernPair, twist
from planebundles.cubic import (
    BinaryCubicForm,
    UnimodularMatrix,
    cubic_discriminant_standard,
    form_eval,
    picard_cubic,
    picard_discriminant,
    transform_form,
)
from planebundles.errors import DomainError

pairs = st.builds(
    ChernPair,
    st.integers(min_value=-20, max_value=20),
    st.integers(min_value=-20, max_value=20),
)
entries = st.integers(min_value=-6, max_value=6)


def some_unimodulars():
    mats = [
        UnimodularMatrix.identity(),
        UnimodularMatrix(0, 1, 1, 0),
        UnimodularMatrix(1, 1, 0, 1),
        UnimodularMatrix(1, -1, 0, 1),
        UnimodularMatrix(0, -1, 1, 0),
        UnimodularMatrix(2, 1, 1, 1),
        UnimodularMatrix(3, 2, 1, 1),
        UnimodularMatrix(-1, 2, 1, -3),
        UnimodularMatrix(5, 2, 2, 1),
    ]
    return st.sampled_from(mats)


def test_picard_cubic_examples():
    assert picard_cubic(ChernPair(0, 0)).coeffs == (0, 3, 0, 0)
    assert picard_cubic(ChernPair(2, 1)).coeffs == (0, 3, -6, 3)
    assert picard_cubic(ChernPair(-1, 0)).coeffs == (0, 3, 3, 1)


def test_cubic_discriminant_standard_examples():
    assert cubic_discriminant_standard(BinaryCubicForm(0, 3, -3, 0)) == 81
    assert cubic_discriminant_standard(BinaryCubicForm(1, 0, 0, 1)) == -27


def test_picard_discriminant_reconciliation():
    p = ChernPair(0, 1)
    assert picard_discriminant(p) == -4
    assert cubic_discriminant_standard(picard_cubic(p)) == -27 * -4 == 108


@given(pairs)
def test_picard_discriminant_is_the_pair_discriminant(p):
    value = picard_discriminant(p)
    assert value == p.c1 * p.c1 - 4 * p.c2
    assert cubic_discriminant_standard(picard_cubic(p)) == -27 * value


def test_unimodular_matrix_validation():
    with pytest.raises(DomainError):
        UnimodularMatrix(1, 0, 0, 2)
    with pytest.raises(DomainError):
        UnimodularMatrix(2, 0, 0, 2)
    with pytest.raises(DomainError):
        UnimodularMatrix(1, 1, 1, 1)


def test_unimodular_matmul_is_the_matrix_product():
    g = UnimodularMatrix(1, 1, 0, 1)
    h = UnimodularMatrix(0, -1, 1, 0)
    gh = g @ h
    assert gh.entries == (1, -1, 1, 0)


def test_transform_by_identity_is_trivial():
    f = BinaryCubicForm(2, -5, 1, 7)
    assert transform_form(f, UnimodularMatrix.identity()) == f


@given(st.builds(BinaryCubicForm, entries, entries, entries, entries),
       some_unimodulars(), some_unimodulars())
def test_transform_composes_contravariantly_with_substitution(f, g, h):
    assert transform_form(f, g @ h) == transform_form(transform_form(f, g), h)


@given(st.builds(BinaryCubicForm, entries, entries, entries, entries),
       some_unimodulars(), entries, entries)
def test_transform_is_substitution(f, m, a, b):
    m00, m01, m10, m11 = m.entries
    expected = form_eval(f, m00 * a + m01 * b, m10 * a + m11 * b)
    assert form_eval(transform_form(f, m), a, b) == expected


@given(st.builds(BinaryCubicForm, entries, entries, entries, entries),
       some_unimodulars())
def test_discriminant_is_a_transform_invariant(f, m):
    assert cubic_discriminant_standard(transform_form(f, m)) == (
        cubic_discriminant_standard(f)
    )


@given(pairs, st.integers(min_value=-8, max_value=8))
def test_twist_acts_on_the_cubic_by_a_unipotent(p, l):
    m = UnimodularMatrix(1, -l, 0, 1)
    assert picard_cubic(twist(p, l)) == transform_form(picard_cubic(p), m)


def test_form_eval_example():
    f = picard_cubic(ChernPair(0, 0))
    assert form_eval(f, 2, 5) == 3 * 4 * 5


def test_form_string_rendering():
    f = picard_cubic(ChernPair(1, 1))
    assert str(f) == "3*a^2*b - 3*a*b^2"
    g = BinaryCubicForm(1, 0, 0, -1)
    assert str(g) == "a^3 - b^3"
    assert str(BinaryCubicForm(0, 0, 0, 0)) == "0"


def test_form_json_shape():
    f = picard_cubic(ChernPair(2, 1))
    assert f.to_json() == {"coeffs": [0, 3, -6, 3], "vars": ["a", "b"]}

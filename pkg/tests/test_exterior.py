import itertools

import pytest
from hypothesis import given, settings

from multitoric.exterior import (
    ExteriorError,
    Form,
    VectorField,
    contract,
    d,
    hodge,
    one_form,
    solve_potential,
    sort_with_sign,
    wedge,
)
from multitoric.poly import Poly

from conftest import N, fields, forms, polys
from oracles import wedge_oracle

LAW = settings(max_examples=500, deadline=None, derandomize=True)


def test_sort_with_sign():
    assert sort_with_sign((2, 0, 1)) == (1, (0, 1, 2))
    assert sort_with_sign((1, 0)) == (-1, (0, 1))
    assert sort_with_sign((1, 1))[0] == 0


def test_basis_normalisation():
    assert Form.basis(4, 1, 0) == -Form.basis(4, 0, 1)
    assert Form.basis(4, 2, 2).is_zero()


def test_degree_errors():
    with pytest.raises(ExteriorError):
        wedge(Form.basis(4, 0, 1, 2), Form.basis(4, 1, 3))
    with pytest.raises(ExteriorError):
        Form.basis(4, 0) + Form.basis(4, 0, 1)
    with pytest.raises(ExteriorError):
        Form.basis(3, 0) + Form.basis(4, 0)


@settings(max_examples=150, deadline=None, derandomize=True)
@given(forms(constant=True), forms(constant=True))
def test_wedge_matches_alternation_oracle(a, b):
    if a.degree + b.degree > N:
        return
    w = wedge(a, b)
    for idx in itertools.combinations(range(N), a.degree + b.degree):
        assert w[idx].constant_term() == wedge_oracle(a, b, idx)


@LAW
@given(forms(), forms())
def test_graded_commutativity(a, b):
    if a.degree + b.degree > N:
        return
    assert wedge(a, b) == wedge(b, a) * (-1) ** (a.degree * b.degree)


@LAW
@given(forms())
def test_d_squared_zero(a):
    if a.degree + 2 > N:
        return
    assert d(d(a)).is_zero()


@LAW
@given(forms(), forms())
def test_leibniz(a, b):
    if a.degree + b.degree + 1 > N:
        return
    lhs = d(wedge(a, b))
    rhs = Form.zero(N, a.degree + b.degree + 1)
    if a.degree + 1 + b.degree <= N:
        rhs = wedge(d(a), b) + wedge(a, d(b)) * (-1) ** a.degree
    assert lhs == rhs


@LAW
@given(fields(), forms(), forms())
def test_interior_antiderivation(X, a, b):
    if a.degree + b.degree > N or a.degree + b.degree == 0:
        return
    lhs = contract(X, wedge(a, b))
    rhs = Form.zero(N, a.degree + b.degree - 1)
    if a.degree:
        rhs = rhs + wedge(contract(X, a), b)
    if b.degree:
        rhs = rhs + wedge(a, contract(X, b)) * (-1) ** a.degree
    assert lhs == rhs


@LAW
@given(forms(constant=True))
def test_hodge_involution_sign(a):
    p = a.degree
    assert hodge(hodge(a)) == a * (-1) ** (p * (N - p))


@settings(max_examples=100, deadline=None, derandomize=True)
@given(forms(constant=True), forms(constant=True))
def test_hodge_defining_relation(a, b):
    if a.degree != b.degree:
        return
    inner = sum((a[k] * b[k]).constant_term() for k in itertools.combinations(range(N), a.degree))
    vol = Form.basis(N, *range(N))
    assert wedge(a, hodge(b)) == vol * inner


def test_hodge_subframe_orientation():
    # frame (1, 0) means vol = e1 ^ e0
    a = Form.basis(3, 1)
    star = hodge(a, frame=(1, 0))
    assert wedge(a, star) == Form.basis(3, 1, 0)


def test_hodge_rejects_nonconstant():
    x = Poly.var(4, 0)
    with pytest.raises(ExteriorError):
        hodge(Form(4, 1, {(0,): x}))


@settings(max_examples=200, deadline=None, derandomize=True)
@given(polys())
def test_potential_inverts_d(f):
    g = solve_potential(one_form(f))
    assert one_form(g) == one_form(f)
    assert g(*([0] * N)) == 0


def test_potential_rejects_non_closed():
    x0 = Poly.var(N, 0)
    with pytest.raises(ExteriorError):
        solve_potential(Form(N, 1, {(1,): x0}))


def test_linear_field_matrix():
    X = VectorField.linear([[0, -1], [1, 0]])
    assert X.linear_matrix() == [[0, -1], [1, 0]]
    # rotation field: i_X(dx ^ dy) = -d(r^2 / 2)
    assert contract(X, Form.basis(2, 0, 1)) == -one_form(
        (Poly.var(2, 0) ** 2 + Poly.var(2, 1) ** 2) / 2)

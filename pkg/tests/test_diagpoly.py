import itertools

import pytest

from mfhh.charlat import build_character_lattice
from mfhh.diagpoly import (
    DiagonalPolynomial,
    jacobi_basis,
    jacobi_dimension,
    milnor_number,
    restrict,
    transpose,
)
from mfhh.intlat import IntegerOverflowError


@pytest.fixture(scope="module")
def lat2235():
    return build_character_lattice((2, 2, 3, 5), True)


def test_transpose_is_identity_on_diagonal_polynomials():
    for exps in [(2, 2, 3, 5), (2,), (7,)]:
        p = DiagonalPolynomial(exps, stabilized=True)
        assert transpose(p) == p
        assert transpose(transpose(p)) == p


def test_milnor_numbers():
    assert milnor_number(DiagonalPolynomial((2, 2, 3, 5), True)) == 8
    assert milnor_number(DiagonalPolynomial((2, 2))) == 1
    assert milnor_number(DiagonalPolynomial((2, 2, 3, 5, 7), True)) == 48


def test_milnor_overflow():
    huge = 2**40
    with pytest.raises(IntegerOverflowError):
        milnor_number(DiagonalPolynomial((huge, huge)))


def test_variables_order():
    assert DiagonalPolynomial((2, 2, 3), True).variables == (0, 1, 2, 3)
    assert DiagonalPolynomial((2, 2, 3), False).variables == (1, 2, 3)


def test_restrict_identity(lat2235):
    p = DiagonalPolynomial((2, 2, 3, 5), True)
    identity = lat2235.enumerate_ker_chi()[0]
    r = restrict(p, identity)
    assert r.fixed_vars == (1, 2, 3, 4)
    assert r.exponents == {1: 2, 2: 2, 3: 3, 4: 5}
    assert r.z0_fixed


def test_restrict_fixed_point_free(lat2235):
    p = DiagonalPolynomial((2, 2, 3, 5), True)
    gamma = next(g for g in lat2235.enumerate_ker_chi() if not g.fixed)
    r = restrict(p, gamma)
    assert r.fixed_vars == ()
    assert r.exponents == {}
    assert not r.z0_fixed


def test_restrict_double_sign_flip(lat2235):
    p = DiagonalPolynomial((2, 2, 3, 5), True)
    gamma = next(g for g in lat2235.enumerate_ker_chi()
                 if g.fixed == frozenset({0, 3, 4}))
    r = restrict(p, gamma)
    assert r.fixed_vars == (3, 4)
    assert r.exponents == {3: 3, 4: 5}
    assert r.z0_fixed


def test_jacobi_basis_empty_subset(lat2235):
    basis = jacobi_basis(lat2235, {})
    assert len(basis) == 1
    assert basis[0].exponents == ()
    assert basis[0].weight.is_zero()


def test_jacobi_basis_two_variables(lat2235):
    basis = jacobi_basis(lat2235, {3: 3, 4: 5})
    assert len(basis) == 8 == (3 - 1) * (5 - 1)
    for elem in basis:
        exps = elem.exponent_map()
        assert 0 <= exps[3] <= 1
        assert 0 <= exps[4] <= 3
        assert elem.weight == lat2235.weight_of_monomial(exps)
    # deterministic lexicographic order
    vectors = [tuple(a for _, a in elem.exponents) for elem in basis]
    assert vectors == sorted(vectors)
    assert len(set(vectors)) == len(vectors)


def test_jacobi_basis_quadratic_variable(lat2235):
    basis = jacobi_basis(lat2235, {1: 2})
    assert len(basis) == 1
    assert basis[0].exponent_map() == {1: 0}


def test_jacobi_basis_rejects_stabilizer(lat2235):
    with pytest.raises(ValueError):
        jacobi_basis(lat2235, {0: 2, 3: 3})


def test_jacobi_basis_sizes_over_all_subsets(lat2235):
    p = DiagonalPolynomial((2, 2, 3, 5), True)
    for size in range(5):
        for subset in itertools.combinations(range(1, 5), size):
            exps = {i: p.exponent_of(i) for i in subset}
            assert len(jacobi_basis(lat2235, exps)) == jacobi_dimension(exps)


def test_milnor_equals_full_jacobi_dimension(lat2235):
    p = DiagonalPolynomial((2, 2, 3, 5), True)
    full = {i: p.exponent_of(i) for i in range(1, 5)}
    assert milnor_number(p) == len(jacobi_basis(lat2235, full))


def test_polynomial_validation():
    with pytest.raises(ValueError):
        DiagonalPolynomial(())
    with pytest.raises(ValueError):
        DiagonalPolynomial((2, 1))
    with pytest.raises(ValueError):
        DiagonalPolynomial((2, 2)).exponent_of(3)

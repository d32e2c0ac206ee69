"""Derivation kernels, tangency descent, lifting, and symmetrization."""

import random
from fractions import Fraction

import pytest

from nakaicheck import (
    Derivation,
    DerivationTuple,
    GroebnerBasis,
    NotADerivationError,
    NotInJacobianError,
    NotLiftableError,
    Ring,
    artinian_quotient,
    check_descent,
    component_ideal,
    congruence_quotient,
    contains,
    der1_kernel,
    euler_hamiltonian,
    euler_vector,
    hamiltonian_pair,
    hess_kernel,
    jacobian,
    lift_derivation,
    parse_poly,
    predicted_component_ideal,
    symmetrize_tuple,
)
from nakaicheck.linalg import SpanQ

R2 = Ring(["x", "y"])
R3 = Ring(["x", "y", "z"])


def kernel_span(quotient, kernel):
    span = SpanQ(quotient.dim * quotient.ring.n)
    for d in kernel:
        vec = []
        for c in d.coeffs:
            vec.extend(quotient.coords(c))
        span.add(vec)
    return span


def in_kernel_span(quotient, kernel, cand):
    vec = []
    for c in cand:
        vec.extend(quotient.coords(c))
    return kernel_span(quotient, kernel).contains(vec)


def test_maximal_ideal_has_no_derivations():
    gens = [R2.var("x"), R2.var("y")]
    q = artinian_quotient(R2, gens)
    assert der1_kernel(q, gens) == []


def test_dimension_five_algebra_kernel():
    gens = [parse_poly(R2, "4*x^3 + y^2"), parse_poly(R2, "x*y")]
    q = artinian_quotient(R2, gens)
    ker = der1_kernel(q, gens)
    assert len(ker) == 5
    # every kernel element preserves the defining ideal
    for d in ker:
        for g in gens:
            assert d.apply(g).is_zero()
    # the weighted radial field is in the span
    cand = [Fraction(2, 3) * R2.var("x"), R2.var("y")]
    assert in_kernel_span(q, ker, cand)


def test_monomial_complete_intersection_kernel():
    gens = [parse_poly(R2, "x^3"), parse_poly(R2, "y^5")]
    q = artinian_quotient(R2, gens)
    ker = der1_kernel(q, gens)
    x, y = R2.var("x"), R2.var("y")
    assert in_kernel_span(q, ker, [x, R2.zero()])
    assert in_kernel_span(q, ker, [R2.zero(), y])
    assert not in_kernel_span(q, ker, [R2.one(), R2.zero()])


F12 = "x^3 + y^7 + x*y^5"


def test_hessian_kernel_dimension_and_member():
    f = parse_poly(R2, F12)
    t = artinian_quotient(R2, [f] + jacobian(f))
    ker = hess_kernel(t, f)
    assert len(ker) == 14
    cand = [R2.var("y") ** 4, Fraction(-6, 5) * R2.var("x")]
    assert in_kernel_span(t, ker, cand)


def test_component_generators_have_no_units():
    f = parse_poly(R2, F12)
    t = artinian_quotient(R2, [f] + jacobian(f))
    ker = hess_kernel(t, f)
    from nakaicheck import Ideal

    base = Ideal(R2, [f] + jacobian(f))
    for i in range(2):
        comp = component_ideal(ker, i, base)
        assert comp.index == i
        for g in comp.generators:
            assert g.constant_term() == 0


def test_component_bound_three_variables():
    # x^3+y^4+yz^2+xy^3: the x-components of the Hessian kernel all fall
    # into (z^2, y^3, xz, xy) + (f, J(f))
    f = parse_poly(R3, "x^3 + y^4 + y*z^2 + x*y^3")
    t = artinian_quotient(R3, [f] + jacobian(f))
    assert t.dim == 9
    ker = hess_kernel(t, f)
    assert len(ker) == 13
    from nakaicheck import Ideal

    base = Ideal(R3, [f] + jacobian(f))
    comp = component_ideal(ker, 0, base)
    bound = Ideal(
        R3,
        [
            parse_poly(R3, "z^2"),
            parse_poly(R3, "y^3"),
            parse_poly(R3, "x*z"),
            parse_poly(R3, "x*y"),
        ]
        + base.generators,
    )
    for g in comp.generators:
        assert contains(bound, g)


# ------------------------------------------------- distinguished fields


def test_euler_identity_is_exact():
    f = parse_poly(R2, "x^3 + y^2")
    w = [Fraction(1, 3), Fraction(1, 2)]
    vec = euler_vector(f, w)
    lhs = R2.zero()
    for c, g in zip(vec, jacobian(f)):
        lhs = lhs + c * g
    assert lhs == f


def test_hamiltonian_annihilates_f():
    f = parse_poly(R3, "x^3 + y^3 + z^3 + x*y*z")
    grad = jacobian(f)
    for i in range(3):
        for j in range(3):
            if i == j:
                continue
            vec = hamiltonian_pair(f, i, j)
            lhs = R3.zero()
            for c, g in zip(vec, grad):
                lhs = lhs + c * g
            assert lhs.is_zero()
    with pytest.raises(ValueError):
        hamiltonian_pair(f, 1, 1)


def test_euler_hamiltonian_family():
    f = parse_poly(R3, "x^3 + y^3 + z^3 + x*y*z")
    w = [Fraction(1, 3)] * 3
    fields = euler_hamiltonian(f, w)
    assert len(fields) == 4
    for d in fields:
        assert d.apply(f).is_zero()
    g = parse_poly(R3, "x^3 + y^3 + z^3 + x^2*y*z")
    with pytest.raises(ValueError):
        euler_hamiltonian(g, w)


# -------------------------------------------------------- descent and lift


def test_descent_accepts_tangent_fields():
    f = parse_poly(R2, F12)
    fx, fy = jacobian(f)
    # the hamiltonian field annihilates f outright
    assert check_descent([-fy, fx], f)
    # multiples of f are tangent and their descent images stay in (f)
    assert check_descent([f, R2.var("x") * f], f)
    with pytest.raises(NotADerivationError):
        check_descent([R2.one(), R2.zero()], f)


def test_lift_of_jacobian_row_is_clean():
    f = parse_poly(R2, F12)
    fx = f.derivative(0)
    q = congruence_quotient(f)
    adj = lift_derivation([fx, R2.zero()], f, q)
    assert all(a.is_zero() for a in adj)


def test_lift_certificate_re_expands():
    f = parse_poly(R2, F12)
    fx = f.derivative(0)
    q = congruence_quotient(f)
    coeffs = [fx + f, R2.var("y") * fx]
    adj = lift_derivation(coeffs, f, q)
    # tangency up to the quotient's truncation order, then full descent
    assert check_descent(adj, f, precision=q.degree)
    # the adjustment stays within J(f)
    jac = GroebnerBasis(R2, jacobian(f), degree_bound=q.degree)
    for before, after in zip(coeffs, adj):
        assert jac.nf(before - after).is_zero()


def test_obstructed_field_is_rejected():
    f = parse_poly(R2, F12)
    coeffs = [Fraction(1, 3) * R2.var("x"), Fraction(1, 7) * R2.var("y")]
    with pytest.raises(NotLiftableError):
        lift_derivation(coeffs, f)


# ----------------------------------------------------------- symmetrization


def test_symmetrize_two_variable_example():
    f = parse_poly(R2, "x^3 + y^4")
    q = congruence_quotient(f)
    fx, fy = jacobian(f)
    t = DerivationTuple(
        [Derivation(q, [R2.zero(), fx]), Derivation(q, [R2.zero(), R2.zero()])]
    )
    assert not t.is_symmetric()
    out = symmetrize_tuple(t, f)
    assert out.is_symmetric()
    assert out.entries[0].coeffs[0] == q.nf(fy)
    assert out.entries[0].coeffs[1].is_zero()
    assert all(c.is_zero() for c in out.entries[1].coeffs)


def test_symmetrize_rejects_bad_defect():
    f = parse_poly(R2, "x^3 + y^4")
    q = congruence_quotient(f)
    t = DerivationTuple(
        [Derivation(q, [R2.zero(), R2.one()]), Derivation(q, [R2.zero(), R2.zero()])]
    )
    with pytest.raises(NotInJacobianError):
        symmetrize_tuple(t, f)


def test_symmetrize_randomized_defect_injection():
    f = parse_poly(R3, "x^3 + y^3 + z^3 + x*y*z")
    q = congruence_quotient(f)
    grad = jacobian(f)
    rng = random.Random(7)
    mons = [m for m in R3.monomials_below_degree(3) if sum(m) > 0]

    def rand_poly():
        out = R3.zero()
        for m in rng.sample(mons, 3):
            out = out + R3.monomial(m, Fraction(rng.randint(-4, 4)))
        return out

    for _ in range(10):
        # symmetric base: rows of a random symmetric coefficient matrix
        sym = [[rand_poly() for _ in range(3)] for _ in range(3)]
        for i in range(3):
            for j in range(i):
                sym[i][j] = sym[j][i]
        entries = [Derivation(q, row) for row in sym]
        # inject admissible defects: multiples of f and of the gradient
        defect = rng.choice(grad) * rand_poly() + f * Fraction(rng.randint(-2, 2))
        i, j = rng.sample(range(3), 2)
        bumped = list(entries[i].coeffs)
        bumped[j] = bumped[j] + defect
        entries[i] = Derivation(q, bumped)
        t = DerivationTuple(entries)
        out = symmetrize_tuple(t, f)
        assert out.is_symmetric()

"""Divided-power operators: composition, second-order modules, readoffs."""

import random
from fractions import Fraction
from math import comb

import pytest

from nakaicheck import (
    DiffOperator,
    Polynomial,
    Ring,
    artinian_quotient,
    commutator,
    compose,
    d2_compatible,
    der1_kernel,
    der2_span,
    derivation_operator,
    divided_derivative,
    in_der2,
    multiplication_operator,
    operator_matrix,
    parse_poly,
    phi,
    shift,
    solve_der_m,
    theta2,
)
from nakaicheck.derivations import NotADerivationError
from nakaicheck.operators import _matmul

R2 = Ring(["x", "y"])


def dim5():
    gens = [parse_poly(R2, "4*x^3 + y^2"), parse_poly(R2, "x*y")]
    return artinian_quotient(R2, gens), gens


def test_divided_derivative_binomials():
    p = parse_poly(R2, "x^3*y^2")
    assert divided_derivative(p, (2, 1)) == parse_poly(R2, "6*x*y")
    assert divided_derivative(p, (0, 0)) == p
    assert divided_derivative(p, (4, 0)).is_zero()


def test_divided_derivative_composition_factor():
    rng = random.Random(3)
    mons = [(i, j) for i in range(5) for j in range(5)]
    p = Polynomial(
        R2, {m: Fraction(rng.randint(-6, 6)) for m in rng.sample(mons, 6)}
    )
    for a in [(1, 0), (0, 2), (1, 1)]:
        for b in [(2, 0), (0, 1), (1, 1)]:
            k = comb(a[0] + b[0], b[0]) * comb(a[1] + b[1], b[1])
            s = tuple(u + v for u, v in zip(a, b))
            assert divided_derivative(divided_derivative(p, b), a) == (
                divided_derivative(p, s) * k
            )


def test_weyl_relation():
    q, _ = dim5()
    dx = DiffOperator(q, {(1, 0): R2.one()}, 1)
    mx = multiplication_operator(q, R2.var("x"))
    w = commutator(dx, mx)
    assert w.order == 0
    assert w == multiplication_operator(q, R2.one())


def test_first_order_solve_matches_derivation_kernel():
    q, gens = dim5()
    ops = solve_der_m(q, gens, 1)
    ker = der1_kernel(q, gens)
    assert len(ops) == len(ker) == 5
    for op, d in zip(ops, ker):
        assert op == derivation_operator(d)


def test_solve_rejects_unsupported_order():
    q, gens = dim5()
    with pytest.raises(ValueError):
        solve_der_m(q, gens, 3)


def test_operator_matrix_convention():
    q, _ = dim5()
    dx = DiffOperator(q, {(1, 0): R2.one()}, 1)
    m = operator_matrix(dx)
    p = parse_poly(R2, "x^2 + 3*y")
    lhs = [sum(row[c] * v for c, v in enumerate(q.coords(p))) for row in m]
    assert lhs == q.coords(dx.apply(p).representative)


def test_matrix_is_linear():
    q, _ = dim5()
    a = DiffOperator(q, {(1, 0): R2.var("y"), (0, 1): R2.one()}, 1)
    b = DiffOperator(q, {(0, 2): R2.var("x")}, 2)
    ma, mb = operator_matrix(a), operator_matrix(b)
    ms = operator_matrix(a + b)
    for i in range(q.dim):
        for j in range(q.dim):
            assert ms[i][j] == ma[i][j] + mb[i][j]


def test_matrix_equality_sees_through_truncation():
    q, _ = dim5()
    # third derivatives kill every standard monomial here, so this operator
    # induces the zero map even though its term dict is nonempty
    high = DiffOperator(q, {(3, 0): R2.one()}, 3)
    assert not high.is_zero()
    assert high == DiffOperator(q, {}, 0)


def test_compose_matrix_coherence_for_ideal_preserving_factors():
    q, gens = dim5()
    ops = solve_der_m(q, gens, 1)
    mx = multiplication_operator(q, R2.var("x"))
    rng = random.Random(11)
    pool = ops + [mx]
    for _ in range(20):
        a, b = rng.choice(pool), rng.choice(pool)
        assert operator_matrix(compose(a, b)) == _matmul(
            operator_matrix(a), operator_matrix(b)
        )
    # and associativity holds at the matrix level
    a, b, c = ops[0], ops[1], mx
    assert compose(compose(a, b), c) == compose(a, compose(b, c))


def test_commutator_of_derivations_is_a_derivation():
    q, gens = dim5()
    ops = solve_der_m(q, gens, 1)
    for a in ops[:3]:
        for b in ops[:3]:
            c = commutator(a, b)
            assert c.order <= 1
            assert (0, 0) not in c.terms
            for g in gens:
                assert c.apply(g).is_zero()


def test_shift_composes_and_phi_strips_constant():
    q, _ = dim5()
    d = DiffOperator(
        q, {(2, 1): R2.var("y"), (1, 0): R2.one(), (0, 0): R2.var("x")}, 3
    )
    s = shift(shift(d, (1, 0)), (1, 1))
    assert s.terms == shift(d, (2, 1)).terms
    p = phi(d, (1, 0))
    assert (0, 0) not in p.terms
    with pytest.raises(ValueError):
        phi(d, (4, 0))


# ------------------------------------------------- second-order structure


def test_second_order_module_of_dimension_five_algebra():
    q, gens = dim5()
    span = der2_span(q, gens)
    assert span.dim == 8
    ops1 = solve_der_m(q, gens, 1)
    for op in ops1:
        assert in_der2(op, span)


def test_radial_polynomial_escapes_second_order_module():
    q, gens = dim5()
    x, y = R2.var("x"), R2.var("y")
    e = DiffOperator(q, {(1, 0): Fraction(2, 3) * x, (0, 1): y}, 1)
    # eigenvalues of the radial field on the standard monomials
    eig = {}
    for b in q.basis_polys():
        v = q.coords(e.apply(b).representative)
        k = q.coords(b).index(1)
        eig[str(b)] = v[k]
    assert eig == {
        "1": 0,
        "y": 1,
        "x": Fraction(2, 3),
        "y^2": 2,
        "x^2": Fraction(4, 3),
    }
    e2 = compose(e, e)
    e4 = compose(e2, e2)
    qe = 9 * e4 + (-36) * compose(e2, e) + 41 * e2 + (-14) * e
    # second-order diagonal form: -4(y^2 d_y^2 + (1/3) x^2 d_x^2), written
    # with divided-power coefficients
    corrected = DiffOperator(
        q, {(0, 2): -8 * y**2, (2, 0): Fraction(-8, 3) * x**2}, 2
    )
    assert qe == corrected
    # the first-order lookalike is a different operator
    lookalike = DiffOperator(
        q, {(0, 1): -4 * y**2, (1, 0): Fraction(-4, 3) * x**2}, 1
    )
    assert not (qe == lookalike)
    span = der2_span(q, gens)
    assert in_der2(e, span)
    assert not in_der2(qe, span)


def test_theta2_kills_first_order_and_reads_off_products():
    q, gens = dim5()
    x, y = R2.var("x"), R2.var("y")
    e = DiffOperator(q, {(1, 0): Fraction(2, 3) * x, (0, 1): y}, 1)
    t = theta2(e)
    assert all(entry.is_zero() for entry in t.entries)
    d = DiffOperator(q, {(1, 0): Fraction(1, 4) * y, (0, 1): x**2}, 1)
    t2 = theta2(compose(d, d))
    assert d2_compatible(t2)
    assert t2.entries[0].coeffs[0] == q.nf(Fraction(1, 8) * y**2)
    assert t2.entries[0].coeffs[1].is_zero()
    assert all(c.is_zero() for c in t2.entries[1].coeffs)


def test_theta2_product_formula_randomized():
    q, gens = dim5()
    ops = solve_der_m(q, gens, 1)
    coeffs = [[op.coefficient((1, 0)), op.coefficient((0, 1))] for op in ops]
    rng = random.Random(17)
    for _ in range(50):
        wa = [Fraction(rng.randint(-3, 3)) for _ in ops]
        wb = [Fraction(rng.randint(-3, 3)) for _ in ops]
        alpha = [q.nf(sum((w * c[i] for w, c in zip(wa, coeffs)), R2.zero())) for i in range(2)]
        beta = [q.nf(sum((w * c[i] for w, c in zip(wb, coeffs)), R2.zero())) for i in range(2)]
        a = DiffOperator(q, {(1, 0): alpha[0], (0, 1): alpha[1]}, 1)
        b = DiffOperator(q, {(1, 0): beta[0], (0, 1): beta[1]}, 1)
        t = theta2(compose(a, b))
        for i in range(2):
            for j in range(2):
                expect = q.nf(alpha[i] * beta[j] + alpha[j] * beta[i])
                assert t.entries[i].coeffs[j] == expect
        assert d2_compatible(t)


def test_theta2_rejects_non_derivations():
    q, _ = dim5()
    with pytest.raises(NotADerivationError):
        theta2(DiffOperator(q, {(0, 1): R2.one()}, 2))
    with pytest.raises(NotADerivationError):
        theta2(DiffOperator(q, {(0, 0): R2.var("x")}, 2))


def test_first_order_products_satisfy_second_order_constraints():
    q, gens = dim5()
    ops = solve_der_m(q, gens, 1)
    from nakaicheck.operators import _der_constraints_ok

    for a in ops[:3]:
        for b in ops[:3]:
            assert _der_constraints_ok(compose(a, b), 2)


def test_second_order_solve_contains_first_order_products():
    f = parse_poly(R2, "x^3 + y^4")
    gens = [f] + [f.derivative(0), f.derivative(1)]
    q = artinian_quotient(R2, gens)
    ops1 = solve_der_m(q, gens, 1)
    ops2 = solve_der_m(q, gens, 2)
    from nakaicheck.linalg import SpanQ

    span = SpanQ(q.dim * q.dim)
    for op in ops2:
        span.add([x for row in operator_matrix(op) for x in row])
    for a in ops1:
        assert span.contains(
            [x for row in operator_matrix(a) for x in row]
        )
        for b in ops1:
            span_ok = span.contains(
                [x for row in operator_matrix(compose(a, b)) for x in row]
            )
            assert span_ok

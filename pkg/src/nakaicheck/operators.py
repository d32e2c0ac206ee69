"""Divided-power differential operators on Artinian local quotients.

An operator is a finite sum  D = sum_alpha c_alpha d^(alpha)  where the
multi-index alpha stands for the divided power (1/alpha!) d^alpha, so that
d^(alpha)(x^beta) = prod_i binomial(beta_i, alpha_i) x^(beta - alpha) with
integer coefficients throughout. Coefficients c_alpha are reduced in a
fixed quotient; differentiating a coefficient inside a composition uses
its stored normal-form representative, and the coherence of that choice
is enforced by the matrix realization: the dim x dim matrix of the induced
map on standard monomials is the single source of truth for operator
equality and membership questions.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as _cartesian
from math import comb

from .derivations import Derivation, DerivationTuple, NotADerivationError
from .groebner import Coset
from .linalg import SpanQ, kernel_basis
from .poly import Polynomial

__all__ = [
    "DiffOperator",
    "divided_derivative",
    "compose",
    "commutator",
    "shift",
    "phi",
    "theta2",
    "solve_der_m",
    "operator_matrix",
    "der2_span",
    "in_der2",
    "d2_compatible",
    "derivation_operator",
    "multiplication_operator",
]


def divided_derivative(p, alpha):
    """(1/alpha!) d^alpha p, exact in the polynomial ring."""
    out = {}
    for m, c in p.coeffs.items():
        if all(e >= a for e, a in zip(m, alpha)):
            k = 1
            for e, a in zip(m, alpha):
                k *= comb(e, a)
            nm = tuple(e - a for e, a in zip(m, alpha))
            out[nm] = out.get(nm, 0) + c * k
    return Polynomial(p.ring, out)


class DiffOperator:
    """Divided-power operator with quotient coefficients and an order bound.

    terms maps multi-indices to normal-form coefficient representatives;
    zero coefficients are dropped and every index must respect the declared
    order. Instances are immutable; the matrix of the induced endomorphism
    is computed on demand and cached.
    """

    __slots__ = ("parent", "terms", "order", "_matrix")

    def __init__(self, parent, terms, order):
        ring = parent.ring
        clean = {}
        for alpha, c in terms.items():
            alpha = tuple(alpha)
            if len(alpha) != ring.n or any(a < 0 for a in alpha):
                raise ValueError("bad multi-index %r" % (alpha,))
            c = parent.nf(c if isinstance(c, Polynomial) else ring.const(c))
            if c.is_zero():
                continue
            if sum(alpha) > order:
                raise ValueError(
                    "index %r exceeds declared order %d" % (alpha, order)
                )
            clean[alpha] = c
        self.parent = parent
        self.terms = clean
        self.order = order
        self._matrix = None

    def coefficient(self, alpha):
        return self.terms.get(tuple(alpha), self.parent.ring.zero())

    def apply(self, p):
        """The coset sum_alpha c_alpha * NF(d^(alpha) p)."""
        out = self.parent.ring.zero()
        for alpha, c in self.terms.items():
            d = divided_derivative(p, alpha)
            if not d.is_zero():
                out = out + c * d
        return Coset(self.parent.nf(out), self.parent)

    __call__ = apply

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        if self.parent is not other.parent:
            raise ValueError("operators on different quotients")
        terms = dict(self.terms)
        for a, c in other.terms.items():
            terms[a] = terms.get(a, self.parent.ring.zero()) + c
        return DiffOperator(self.parent, terms, max(self.order, other.order))

    def __neg__(self):
        return DiffOperator(
            self.parent, {a: -c for a, c in self.terms.items()}, self.order
        )

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        c = Fraction(scalar)
        return DiffOperator(
            self.parent, {a: v * c for a, v in self.terms.items()}, self.order
        )

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, DiffOperator) or self.parent is not other.parent:
            return NotImplemented
        if self.terms == other.terms:
            return True
        return operator_matrix(self) == operator_matrix(other)

    def __repr__(self):
        names = self.parent.ring.names
        parts = []
        for alpha in sorted(self.terms, key=lambda a: (sum(a), a)):
            sym = "*".join(
                "d%s^(%d)" % (nm, e) if e > 1 else "d%s" % nm
                for nm, e in zip(names, alpha)
                if e
            )
            c = self.terms[alpha]
            parts.append("(%s)%s" % (c, "*" + sym if sym else ""))
        return "DiffOperator(%s)" % (" + ".join(parts) or "0")


def multiplication_operator(parent, p):
    """The order-0 operator of multiplication by p."""
    return DiffOperator(parent, {(0,) * parent.ring.n: p}, 0)


def derivation_operator(d):
    """The first-order operator of a Derivation (no constant term)."""
    parent = d.parent
    n = parent.ring.n
    terms = {}
    for s, c in enumerate(d.coeffs):
        if not c.is_zero():
            terms[tuple(1 if t == s else 0 for t in range(n))] = c
    return DiffOperator(parent, terms, 1)


def _subindices(alpha):
    return _cartesian(*(range(a + 1) for a in alpha))


def compose(a, b):
    """Operator composition a(b(.)), the divided-power Leibniz expansion.

    d^(alpha)(c q) = sum_{sigma+tau=alpha} d^(sigma)(c) d^(tau)(q) and
    d^(tau) d^(gamma) = prod binomial(tau+gamma, gamma) d^(tau+gamma), with
    b's coefficients differentiated through their stored representatives.
    Declared order adds.
    """
    if a.parent is not b.parent:
        raise ValueError("operators on different quotients")
    parent = a.parent
    ring = parent.ring
    out = {}
    for alpha, ca in a.terms.items():
        for gamma, cb in b.terms.items():
            for sigma in _subindices(alpha):
                dcb = divided_derivative(cb, sigma)
                if dcb.is_zero():
                    continue
                tau = tuple(x - s for x, s in zip(alpha, sigma))
                eta = tuple(t + g for t, g in zip(tau, gamma))
                k = 1
                for t, g in zip(tau, gamma):
                    k *= comb(t + g, g)
                piece = ca * dcb * k
                prev = out.get(eta)
                out[eta] = piece if prev is None else prev + piece
    return DiffOperator(parent, out, a.order + b.order)


def commutator(a, b):
    """[a, b] = ab - ba, with the order bound tightened by one.

    The top-order symbols cancel exactly (the binomial weights are
    symmetric in the two factors), which the constructor re-checks via
    its order invariant.
    """
    ab = compose(a, b)
    ba = compose(b, a)
    terms = dict(ab.terms)
    for idx, c in ba.terms.items():
        terms[idx] = terms.get(idx, a.parent.ring.zero()) - c
    bound = max(a.order + b.order - 1, 0)
    return DiffOperator(a.parent, terms, bound)


def shift(op, beta):
    """The operator with coefficient c_{alpha+beta} at alpha.

    Drops the order bound by |beta|; an operator of order below |beta|
    shifts to zero.
    """
    beta = tuple(beta)
    terms = {}
    for alpha, c in op.terms.items():
        if all(x >= b for x, b in zip(alpha, beta)):
            terms[tuple(x - b for x, b in zip(alpha, beta))] = c
    return DiffOperator(op.parent, terms, max(op.order - sum(beta), 0))


def phi(op, beta):
    """shift(op, beta) with its order-0 coefficient removed.

    The result has no constant term, the shape of a derivation.
    """
    beta = tuple(beta)
    if sum(beta) > op.order:
        raise ValueError("|beta| exceeds the operator order")
    s = shift(op, beta)
    zero = (0,) * op.parent.ring.n
    terms = {a: c for a, c in s.terms.items() if a != zero}
    return DiffOperator(op.parent, terms, s.order)


def _der_constraints_ok(op, m):
    """The defining conditions of Der^m: c_0 = 0 and every shift by
    |beta| <= m-1 kills the quotient's generators."""
    parent = op.parent
    n = parent.ring.n
    zero = (0,) * n
    if zero in op.terms:
        return False
    for beta in parent.ring.monomials_below_degree(m):
        s = shift(op, beta)
        for g in parent.gens:
            if not s.apply(g).is_zero():
                return False
    return True


def theta2(op):
    """The tuple (phi(D, e_1), ..., phi(D, e_n)) of a second-order D.

    Requires D to satisfy the Der^2 constraints of its parent quotient
    (NotADerivationError otherwise). First-order derivations map to the
    zero tuple.
    """
    parent = op.parent
    n = parent.ring.n
    if op.order > 2:
        raise NotADerivationError("operator order %d exceeds 2" % op.order)
    if not _der_constraints_ok(op, 2):
        raise NotADerivationError("operator fails the Der^2 constraints")
    entries = []
    for i in range(n):
        e_i = tuple(1 if t == i else 0 for t in range(n))
        p = phi(op, e_i)
        coeffs = [parent.ring.zero()] * n
        for alpha, c in p.terms.items():
            coeffs[alpha.index(1)] = c
        entries.append(Derivation(parent, coeffs))
    return DerivationTuple(entries)


def d2_compatible(tup):
    """Do the entries satisfy d_i(x_j) = d_j(x_i) as cosets for all i, j?"""
    return tup.is_symmetric()


# ------------------------------------------------------------ linear solves


def _index_order(n, m):
    """Nonzero multi-indices of total degree <= m: graded, then lexicographic
    descending in the exponents, so (1,0,..) precedes (0,1,..)."""
    idx = [
        a
        for a in _cartesian(*(range(m + 1) for _ in range(n)))
        if 0 < sum(a) <= m
    ]
    idx.sort(key=lambda a: (sum(a), tuple(-e for e in a)))
    return idx


def solve_der_m(quotient, gens, m):
    """Deterministic Q-basis of Der^m of the quotient algebra, m in {1, 2}.

    Unknown coefficients c_alpha range over the quotient for every nonzero
    |alpha| <= m (the order-0 coefficient is pinned to zero by the
    derivation/operator split); the conditions are shift(D, beta)(g_j) = 0
    for every |beta| <= m-1 and every generator. Unknowns are ordered
    basis-index major, multi-index minor, which for m = 1 reproduces
    der1_kernel exactly under the operator identification.
    """
    if m not in (1, 2):
        raise ValueError("only orders 1 and 2 are supported")
    gens = list(gens)
    if not gens:
        raise ValueError("empty generator list")
    ring = quotient.ring
    n = ring.n
    indices = _index_order(n, m)
    L = len(indices)
    bas = quotient.basis_polys()
    dim = quotient.dim
    betas = sorted(
        ring.monomials_below_degree(m), key=lambda a: (sum(a), tuple(-e for e in a))
    )
    columns = []
    for k in range(dim):
        for eta in indices:
            col = []
            for beta in betas:
                ok = all(e >= b for e, b in zip(eta, beta))
                rest = tuple(e - b for e, b in zip(eta, beta)) if ok else None
                for g in gens:
                    if ok:
                        col.extend(quotient.coords(bas[k] * divided_derivative(g, rest)))
                    else:
                        col.extend([Fraction(0)] * dim)
            columns.append(col)
    nrows = len(betas) * len(gens) * dim
    mat = [[columns[u][r] for u in range(dim * L)] for r in range(nrows)]
    out = []
    for vec in kernel_basis(mat, dim * L):
        terms = {}
        for pos, eta in enumerate(indices):
            acc = ring.zero()
            for k in range(dim):
                c = vec[k * L + pos]
                if c:
                    acc = acc + bas[k] * c
            if not acc.is_zero():
                terms[eta] = acc
        out.append(DiffOperator(quotient, terms, m))
    return out


# ------------------------------------------------------- matrix realization


def operator_matrix(op):
    """Matrix of a -> NF(op(a)) on the standard-monomial basis.

    Column c holds the coordinates of op applied to the c-th basis
    monomial, so matrix . coords(p) = coords(op(p)) for p in the span of
    standard monomials. Cached on the operator.
    """
    if op._matrix is None:
        parent = op.parent
        cols = [parent.coords(op.apply(b).representative) for b in parent.basis_polys()]
        dim = parent.dim
        op._matrix = [[cols[c][r] for c in range(dim)] for r in range(dim)]
    return op._matrix


def _matmul(a, b):
    nrows = len(a)
    inner = len(b)
    ncols = len(b[0]) if b else 0
    out = [[Fraction(0)] * ncols for _ in range(nrows)]
    for i in range(nrows):
        ai = a[i]
        oi = out[i]
        for k in range(inner):
            f = ai[k]
            if f:
                bk = b[k]
                for j in range(ncols):
                    if bk[j]:
                        oi[j] += f * bk[j]
    return out


def _flatten(mat):
    return [x for row in mat for x in row]


def der2_span(quotient, gens):
    """Matrix-space span of A.Der^1 + A.Der^1 Der^1.

    Spanned by the matrices of m*delta and m*(delta delta') over standard
    monomials m and a computed Der^1 basis; returned as an incremental
    reduced span ready for membership queries.
    """
    der1 = solve_der_m(quotient, gens, 1)
    dmats = [operator_matrix(d) for d in der1]
    mmats = [
        operator_matrix(multiplication_operator(quotient, b))
        for b in quotient.basis_polys()
    ]
    span = SpanQ(quotient.dim * quotient.dim)
    for mm in mmats:
        for dm in dmats:
            span.add(_flatten(_matmul(mm, dm)))
            for dm2 in dmats:
                span.add(_flatten(_matmul(mm, _matmul(dm, dm2))))
    return span


def in_der2(op, span):
    """Membership of the operator's matrix in a der2_span, exactly."""
    return span.contains(_flatten(operator_matrix(op)))

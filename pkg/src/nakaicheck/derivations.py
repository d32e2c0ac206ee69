"""Derivation modules of local quotient algebras.

A derivation is a vector field sum_s alpha_s d/dx_s whose coefficients are
held as standard-monomial representatives in a fixed stabilized quotient.
This module computes kernels of the induced linear conditions, the Euler
and Hamiltonian fields of a weighted homogeneous polynomial, descent and
lifting certificates for derivations of a hypersurface algebra, and an
exact symmetrization of derivation tuples by Hamiltonian corrections.
"""

from __future__ import annotations

from fractions import Fraction

from .groebner import (
    Coset,
    GroebnerBasis,
    Ideal,
    artinian_quotient,
    extended_divide,
)
from .linalg import kernel_basis
from .poly import Polynomial, jacobian


class NotADerivationError(ValueError):
    """The coefficient vector does not define a derivation of O/(f)."""


class NotInJacobianError(ValueError):
    """A pairwise defect lies outside (f) + J(f); symmetrization cannot run."""


class NotLiftableError(ValueError):
    """D(f) lies outside (f) + J(f)^2; no tangential adjustment exists."""


def _var(ring, i):
    return ring.monomial(tuple(1 if t == i else 0 for t in range(ring.n)))


class Derivation:
    """sum_s alpha_s d/dx_s with coefficients reduced in a fixed quotient.

    Coefficients are normal-form representatives, so two derivations on the
    same quotient are equal exactly when their coefficient vectors coincide.
    """

    __slots__ = ("parent", "coeffs")

    def __init__(self, parent, coeffs):
        ring = parent.ring
        coeffs = tuple(
            parent.nf(c if isinstance(c, Polynomial) else ring.const(c))
            for c in coeffs
        )
        if len(coeffs) != ring.n:
            raise ValueError("need one coefficient per ring variable")
        self.parent = parent
        self.coeffs = coeffs

    def apply(self, p):
        """Normal form of sum_s alpha_s dp/dx_s."""
        out = self.parent.ring.zero()
        for s, a in enumerate(self.coeffs):
            if not a.is_zero():
                out = out + a * p.derivative(s)
        return self.parent.nf(out)

    __call__ = apply

    def cosets(self):
        return tuple(Coset(a, self.parent) for a in self.coeffs)

    def is_zero(self):
        return all(a.is_zero() for a in self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, Derivation)
            and self.parent is other.parent
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        names = self.parent.ring.names
        parts = [
            "(%s)*d/d%s" % (a, nm)
            for a, nm in zip(self.coeffs, names)
            if not a.is_zero()
        ]
        return "Derivation(%s)" % (" + ".join(parts) or "0")


class DerivationTuple:
    """One derivation per ring variable, sharing a single parent quotient."""

    __slots__ = ("parent", "entries")

    def __init__(self, entries):
        entries = tuple(entries)
        if not entries:
            raise ValueError("empty derivation tuple")
        parent = entries[0].parent
        if len(entries) != parent.ring.n:
            raise ValueError("need one derivation per ring variable")
        if any(e.parent is not parent for e in entries):
            raise ValueError("entries live on different quotients")
        self.parent = parent
        self.entries = entries

    def defect(self, i, j):
        """Representative of d_i(x_j) - d_j(x_i)."""
        return self.entries[i].coeffs[j] - self.entries[j].coeffs[i]

    def is_symmetric(self):
        n = self.parent.ring.n
        return all(
            self.defect(i, j).is_zero()
            for i in range(n)
            for j in range(i + 1, n)
        )

    def __repr__(self):
        return "DerivationTuple(%s)" % ", ".join(repr(e) for e in self.entries)


# ------------------------------------------------------------------ kernels


def der1_kernel(quotient, gens):
    """Q-basis of the derivations of the quotient algebra fixing (gens).

    A coefficient vector (alpha_s) defines a derivation of O/(gens) exactly
    when sum_s alpha_s dg/dx_s lies in the ideal for every generator g, and
    the alpha_s only matter modulo the ideal, so they range over the span of
    the standard monomial basis. Unknowns are ordered basis-index major,
    variable-index minor; the result is the deterministic kernel basis of
    the resulting linear system, one derivation per free column.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("empty generator list")
    ring = quotient.ring
    n = ring.n
    bas = quotient.basis_polys()
    dim = quotient.dim
    columns = []
    for k in range(dim):
        for s in range(n):
            col = []
            for g in gens:
                col.extend(quotient.coords(bas[k] * g.derivative(s)))
            columns.append(col)
    mat = [[columns[u][r] for u in range(dim * n)] for r in range(len(gens) * dim)]
    out = []
    for vec in kernel_basis(mat, dim * n):
        coeffs = []
        for s in range(n):
            acc = ring.zero()
            for k in range(dim):
                c = vec[k * n + s]
                if c:
                    acc = acc + bas[k] * c
            coeffs.append(acc)
        out.append(Derivation(quotient, coeffs))
    return out


def hess_kernel(quotient, f):
    """der1_kernel for the generator list [f] + J(f) on the given quotient."""
    return der1_kernel(quotient, [f] + jacobian(f))


class ComponentIdeal:
    """The ideal spanned by one coefficient slot of a derivation family."""

    __slots__ = ("index", "generators", "ideal")

    def __init__(self, index, generators, ideal):
        self.index = index
        self.generators = list(generators)
        self.ideal = ideal

    def __repr__(self):
        return "ComponentIdeal(%d; %s)" % (
            self.index,
            ", ".join(str(g) for g in self.generators) or "0",
        )


def component_ideal(kernel, i, base):
    """Collect the i-th coefficients of a derivation family over a base ideal.

    generators holds the nonzero i-th coefficient representatives; ideal is
    the ambient Ideal they generate together with the base (typically the
    Tjurina ideal of the singularity under study).
    """
    gens = [d.coeffs[i] for d in kernel if not d.coeffs[i].is_zero()]
    amb = Ideal(base.ring, gens + base.generators) if gens else base
    return ComponentIdeal(i, gens, amb)


def predicted_component_ideal(f, i):
    """Comparison ideal (x_i, all partials of f except the i-th).

    For weighted homogeneous f the i-th component ideal of the full kernel
    family is classically described by a short generator list whose symbols
    are ambiguous; this helper fixes the reading where they denote the
    partial derivatives. Treat the output as a prediction to test against,
    not as a certified value.
    """
    ring = f.ring
    gens = [_var(ring, i)]
    for j in range(ring.n):
        if j != i:
            g = f.derivative(j)
            if not g.is_zero():
                gens.append(g)
    return Ideal(ring, gens)


# ------------------------------------------------- distinguished derivations


def hamiltonian_pair(f, i, j):
    """Coefficient vector of the field f_{x_i} d/dx_j - f_{x_j} d/dx_i.

    Kills f outright: applying the field to f gives f_{x_i} f_{x_j}
    - f_{x_j} f_{x_i} = 0, so the field descends to every quotient of O/(f).
    """
    if i == j:
        raise ValueError("need two distinct variable indices")
    ring = f.ring
    vec = [ring.zero()] * ring.n
    vec[j] = f.derivative(i)
    vec[i] = -f.derivative(j)
    return vec


def euler_vector(f, weights):
    """Coefficient vector (w_1 x_1, ..., w_n x_n) of the Euler field."""
    ring = f.ring
    return [_var(ring, s) * Fraction(w) for s, w in enumerate(weights)]


def euler_hamiltonian(f, weights, quotient=None, dcap=30):
    """Euler and Hamiltonian fields of a weighted homogeneous polynomial.

    Requires every term of f to carry weighted degree 1 for the given
    weights; then the Euler field E = sum w_s x_s d/dx_s satisfies
    E(f) = f, each Hamiltonian field kills f outright, and all of them
    pass check_descent. Returned as Derivations on the Tjurina quotient
    of f (or the quotient passed in), Euler field first, then the pairs
    (i, j) in lexicographic order.
    """
    ring = f.ring
    n = ring.n
    weights = [Fraction(w) for w in weights]
    if not f.is_weighted_homogeneous(weights):
        raise ValueError("f is not weighted homogeneous for the given weights")
    if quotient is None:
        quotient = artinian_quotient(ring, [f] + jacobian(f), dcap)
    fields = [euler_vector(f, weights)]
    for i in range(n):
        for j in range(i + 1, n):
            fields.append(hamiltonian_pair(f, i, j))
    return [Derivation(quotient, v) for v in fields]


# ------------------------------------------------------- descent and lifting


def check_descent(coeffs, f, quotient=None, precision=None, dcap=30):
    """Does the vector field preserve both (f) and (f) + J(f)?

    The field must first be a derivation of O/(f): sum_s coeff_s f_{x_s}
    in (f), checked by exact division when precision is None and modulo
    m^precision otherwise (the right notion for coefficients produced by
    lift_derivation, whose tangency identity holds up to such a tail).
    Failure raises NotADerivationError. The return value then reports the
    descent condition itself: whether every sum_s coeff_s d(f_{x_i})/dx_s
    lies in (f) + J(f).
    """
    ring = f.ring
    grad = jacobian(f)
    df = ring.zero()
    for s, c in enumerate(coeffs):
        df = df + c * grad[s]
    if precision is None:
        _, r = extended_divide(df, [f])
        if not r.is_zero():
            raise NotADerivationError("field does not multiply f into (f)")
    else:
        gb = GroebnerBasis(ring, [f], degree_bound=precision)
        if not gb.nf(df).is_zero():
            raise NotADerivationError(
                "field does not multiply f into (f) + m^%d" % precision
            )
    if quotient is None:
        quotient = artinian_quotient(ring, [f] + grad, dcap)
    for i in range(ring.n):
        img = ring.zero()
        for s, c in enumerate(coeffs):
            img = img + c * grad[i].derivative(s)
        if not quotient.contains(img):
            return False
    return True


def congruence_quotient(f, dcap=30, track=True):
    """Stabilized local quotient by (f) + J(f)^2.

    Generator order is fixed: f first, then the pairwise products
    f_{x_i} f_{x_j} for i <= j in lexicographic order; lift_derivation
    relies on that order to regroup cofactors. Tracked by default since
    cofactor extraction is the main use.
    """
    ring = f.ring
    grad = jacobian(f)
    gens = [f]
    for i in range(ring.n):
        for j in range(i, ring.n):
            gens.append(grad[i] * grad[j])
    return artinian_quotient(ring, gens, dcap, track=track)


def lift_derivation(coeffs, f, quotient=None, dcap=30):
    """Adjust a coefficient vector until it multiplies f into (f), up to a
    high-order tail.

    Requires D(f) = sum_s coeff_s f_{x_s} to lie in (f) + J(f)^2, raising
    NotLiftableError otherwise. Division in the congruence quotient writes
    D(f) = c*f + sum h_ij f_{x_i} f_{x_j} + t with every term of t of total
    degree >= the quotient's truncation degree; regrouping the products as
    g_i = sum_j h_ij f_{x_j} in J(f) gives the adjusted coefficients
    coeff_i - g_i with

        sum_i (coeff_i - g_i) f_{x_i} = c*f + t,

    an identity asserted exactly in the polynomial ring before returning.
    The adjusted field therefore passes check_descent at precision equal to
    the truncation degree of the quotient used (pass the same quotient to
    both calls to be sure of the degree).
    """
    ring = f.ring
    n = ring.n
    grad = jacobian(f)
    if quotient is None:
        quotient = congruence_quotient(f, dcap)
    df = ring.zero()
    for s, c in enumerate(coeffs):
        df = df + c * grad[s]
    r, qg, qm = quotient.gb.divide(df)
    if not r.is_zero():
        raise NotLiftableError("obstruction residual %s" % r)
    g = [ring.zero()] * n
    k = 1
    for i in range(n):
        for j in range(i, n):
            h = qg[k]
            k += 1
            if not h.is_zero():
                g[i] = g[i] + h * grad[j]
    adjusted = [coeffs[s] - g[s] for s in range(n)]
    tail = ring.zero()
    for m, cof in qm.items():
        tail = tail + cof * ring.monomial(m)
    lhs = ring.zero()
    for s in range(n):
        lhs = lhs + adjusted[s] * grad[s]
    assert lhs == qg[0] * f + tail, "lift identity failed to re-expand"
    assert tail.is_zero() or tail.low_degree() >= quotient.degree
    return adjusted


# ----------------------------------------------------------- symmetrization


def symmetrize_tuple(tup, f, dcap=30):
    """Rewrite a derivation tuple so that d_i(x_j) = d_j(x_i) exactly.

    Every entry changes only by Hamiltonian fields of f, processed pair by
    pair in lexicographic order. For a pair i < j the defect
    d_i(x_j) - d_j(x_i) must lie in (f) + J(f), verified by the stabilized
    membership test (NotInJacobianError otherwise); its cofactors over
    (f_{x_1}, ..., f_{x_n}, f) then come from tracked division truncated
    at the parent quotient's own degree, so the unresolved tail sits in
    m^degree and dies under the parent's normal form. The cofactors at
    slots i and j are cleared first by subtracting multiples of the (i, j)
    Hamiltonian field from d_i and d_j; the remaining ones drive
    half-weight corrections spread over the other Hamiltonian fields,
    chosen so the (i, j) defect vanishes while every other defect is left
    untouched. The output is symmetric as cosets of the parent quotient,
    which the final assertion checks pair by pair.

    Defects are only visible when the parent keeps J(f) classes alive, as
    a quotient by (f) + J(f)^2 does; on the Tjurina quotient itself every
    admissible defect reduces to zero and the map is the identity. The
    parent must absorb f, or the corrections could not cancel exactly.
    """
    parent = tup.parent
    ring = parent.ring
    n = ring.n
    grad = jacobian(f)
    if not parent.contains(f):
        raise ValueError("tuple quotient does not absorb f")

    divisors = grad + [f]
    state = {"member": None, "basis": None}

    def cofactors(pdef):
        # gradient cofactors of the defect; the f-cofactor and the
        # truncation tail are dropped, both die in the parent quotient
        if state["member"] is None:
            state["member"] = artinian_quotient(ring, [f] + grad, dcap)
        if not state["member"].contains(pdef):
            raise NotInJacobianError("defect %s not in (f) + J(f)" % pdef)
        if state["basis"] is None:
            state["basis"] = GroebnerBasis(
                ring, divisors, degree_bound=parent.degree, track=True
            )
        r, qg, _ = state["basis"].divide(pdef)
        assert r.is_zero(), "membership passed but truncated division left %s" % r
        return qg[:n]

    half = Fraction(1, 2)
    entries = list(tup.entries)

    def shift(t, scale, vec):
        # entries[t] += scale * vec, reduced in the parent quotient
        entries[t] = Derivation(
            parent,
            [a + scale * b for a, b in zip(entries[t].coeffs, vec)],
        )

    for i in range(n):
        for j in range(i + 1, n):
            pdef = entries[i].coeffs[j] - entries[j].coeffs[i]
            if pdef.is_zero():
                continue
            c = cofactors(pdef)
            dij = hamiltonian_pair(f, i, j)
            if not c[i].is_zero():
                shift(i, -c[i], dij)
            if not c[j].is_zero():
                shift(j, -c[j], dij)
            for s in range(n):
                if s == i or s == j or c[s].is_zero():
                    continue
                w = half * c[s]
                if s < i:
                    shift(i, -w, hamiltonian_pair(f, s, j))
                    shift(j, w, hamiltonian_pair(f, s, i))
                elif s < j:
                    shift(i, -w, hamiltonian_pair(f, s, j))
                    shift(j, -w, hamiltonian_pair(f, i, s))
                else:
                    shift(i, w, hamiltonian_pair(f, j, s))
                    shift(j, -w, hamiltonian_pair(f, i, s))
                shift(s, -w, dij)

    out = DerivationTuple(entries)
    assert out.is_symmetric(), "symmetrization left a nonzero defect"
    return out

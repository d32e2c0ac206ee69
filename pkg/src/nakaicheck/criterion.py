"""Certificate checking for second-order derivation obstructions.

Two verification routes. The beta route takes a symmetric matrix of lift
representatives, checks the congruence (beta_ij) . grad(f) = 0 modulo
(f) + J(f)^2, and certifies that a diagonal entry escapes the square of
its component bounding ideal; on success it re-derives the facts the
argument rests on (each row lifts to a tangent field, the lifted fields
descend, pairwise defects stay in the Jacobian ideal). The hyperplane
route handles weighted homogeneous polynomials whose section x_s = 0
stays isolated: Hessian cofactors against the radial weights generate
the candidate tuple, and the witness w_s x_s H_ss must avoid
(x_s^2, partials other than s).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction

from .derivations import (
    NotADerivationError,
    NotInJacobianError,
    NotLiftableError,
    check_descent,
    component_ideal,
    congruence_quotient,
    hess_kernel,
    lift_derivation,
)
from .groebner import (
    Coset,
    Ideal,
    NotFiniteColengthError,
    artinian_quotient,
    contains,
    milnor_number,
    tjurina_number,
)
from .linalg import det
from .poly import hessian, jacobian

__all__ = [
    "BetaMatrix",
    "VerificationReport",
    "check_congruence",
    "check_nonmembership",
    "hessian_cofactor",
    "verify_case",
    "verify_simple_elliptic",
]


class BetaMatrix:
    """Symmetric matrix of polynomial lift representatives."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        entries = [list(row) for row in entries]
        n = len(entries)
        for row in entries:
            if len(row) != n:
                raise ValueError("matrix is not square")
        for i in range(n):
            for j in range(i + 1, n):
                if entries[i][j] != entries[j][i]:
                    raise ValueError(
                        "entries (%d,%d) and (%d,%d) differ" % (i, j, j, i)
                    )
        self.entries = entries

    @property
    def n(self):
        return len(self.entries)

    def row(self, i):
        return list(self.entries[i])

    def __repr__(self):
        return "BetaMatrix(%r)" % (self.entries,)


@dataclass
class VerificationReport:
    """Outcome of one case verification; to_dict() is the stable wire form."""

    case: str | None = None
    bindings: dict = field(default_factory=dict)
    route: str = "beta-certificate"
    mu_observed: int | None = None
    mu_expected: int | None = None
    tau_observed: int | None = None
    tau_expected: int | None = None
    kernel_dim: int | None = None
    residuals: list = field(default_factory=list)
    witness: int | None = None
    nonmembership: bool | None = None
    declared_bound_nonmembership: bool | None = None
    lifts_ok: bool | None = None
    descent_ok: bool | None = None
    defects_in_jacobian: bool | None = None
    error: str | None = None
    elapsed: float = 0.0
    passed: bool = False

    def to_dict(self):
        return {
            "case": self.case,
            "bindings": {k: str(v) for k, v in self.bindings.items()},
            "route": self.route,
            "mu_observed": self.mu_observed,
            "mu_expected": self.mu_expected,
            "tau_observed": self.tau_observed,
            "tau_expected": self.tau_expected,
            "kernel_dim": self.kernel_dim,
            "residuals": list(self.residuals),
            "witness": self.witness,
            "nonmembership": self.nonmembership,
            "declared_bound_nonmembership": self.declared_bound_nonmembership,
            "lifts_ok": self.lifts_ok,
            "descent_ok": self.descent_ok,
            "defects_in_jacobian": self.defects_in_jacobian,
            "error": self.error,
            "elapsed": self.elapsed,
            "passed": self.passed,
        }


def check_congruence(beta, f, dcap=30):
    """Residuals of (beta) . grad(f) in the quotient by (f) + J(f)^2.

    All residual cosets zero means the congruence holds. A non-isolated
    input surfaces as the quotient's colength failure.
    """
    ring = f.ring
    grad = jacobian(f)
    q = congruence_quotient(f, dcap, track=False)
    out = []
    for i in range(ring.n):
        s = ring.zero()
        for j in range(ring.n):
            s = s + beta.entries[i][j] * grad[j]
        out.append(Coset(q.nf(s), q))
    return out


def _square_bound(ring, comp, f, grad):
    # K_i^2 + (f) + J(f); products against (f)+J(f) are absorbed, so
    # pairwise products of the kernel components suffice as extra gens
    gens = []
    for a in range(len(comp.generators)):
        for b in range(a, len(comp.generators)):
            gens.append(comp.generators[a] * comp.generators[b])
    return Ideal(ring, gens + [f] + grad)


def check_nonmembership(beta, f, witness, kernel, dcap=30):
    """Does the witness diagonal entry escape K_i^2 + (f) + J(f)?

    K_i is the bounding ideal built from the i-th components of the
    Hessian-kernel derivations together with (f) + J(f); deciding
    non-membership in this superset is conservative in the safe
    direction.
    """
    ring = f.ring
    grad = jacobian(f)
    base = Ideal(ring, [f] + grad)
    comp = component_ideal(kernel, witness, base)
    bound = _square_bound(ring, comp, f, grad)
    return not contains(bound, beta.entries[witness][witness], dcap)


def verify_case(f, beta, witness, expectations=None, dcap=30):
    """Full beta-route verification with the soundness chain re-derived.

    expectations may carry case, bindings, mu, tau, kernel_dim, and bound
    (extra generators of a declared non-membership ideal, checked on top
    of the component-square bound). Sub-errors are recorded on the
    report, never raised.
    """
    exp = dict(expectations or {})
    t0 = time.perf_counter()
    rep = VerificationReport(
        case=exp.get("case"),
        bindings=exp.get("bindings") or {},
        route="beta-certificate",
        mu_expected=exp.get("mu"),
        tau_expected=exp.get("tau"),
        witness=witness,
    )
    try:
        ring = f.ring
        n = ring.n
        grad = jacobian(f)
        rep.mu_observed = milnor_number(f, dcap)
        rep.tau_observed = tjurina_number(f, dcap)
        tjq = artinian_quotient(ring, [f] + grad, dcap)
        kernel = hess_kernel(tjq, f)
        rep.kernel_dim = len(kernel)
        cong = congruence_quotient(f, dcap)
        residual_polys = []
        for i in range(n):
            s = ring.zero()
            for j in range(n):
                s = s + beta.entries[i][j] * grad[j]
            residual_polys.append(cong.nf(s))
        rep.residuals = [str(r) for r in residual_polys]
        congruence_ok = all(r.is_zero() for r in residual_polys)
        rep.nonmembership = check_nonmembership(beta, f, witness, kernel, dcap)
        declared = exp.get("bound")
        if declared is not None:
            bnd = Ideal(ring, list(declared) + [f] + grad)
            rep.declared_bound_nonmembership = not contains(
                bnd, beta.entries[witness][witness], dcap
            )
            if rep.declared_bound_nonmembership and not rep.nonmembership:
                raise AssertionError(
                    "declared bound excludes the witness but the component "
                    "square bound does not; bounds are inconsistent"
                )
        if congruence_ok:
            adjusted = []
            try:
                for i in range(n):
                    adjusted.append(lift_derivation(beta.row(i), f, cong))
                rep.lifts_ok = True
            except NotLiftableError as e:
                rep.lifts_ok = False
                rep.error = str(e)
            if rep.lifts_ok:
                rep.descent_ok = all(
                    check_descent(adj, f, quotient=tjq, precision=cong.degree)
                    for adj in adjusted
                )
                base = Ideal(ring, [f] + grad)
                rep.defects_in_jacobian = all(
                    contains(base, adjusted[i][j] - adjusted[j][i], dcap)
                    for i in range(n)
                    for j in range(i + 1, n)
                )
        ok = congruence_ok and bool(rep.nonmembership)
        ok = ok and rep.lifts_ok is True and rep.descent_ok is True
        ok = ok and rep.defects_in_jacobian is True
        if rep.mu_expected is not None:
            ok = ok and rep.mu_observed == rep.mu_expected
        if rep.tau_expected is not None:
            ok = ok and rep.tau_observed == rep.tau_expected
        if exp.get("kernel_dim") is not None:
            ok = ok and rep.kernel_dim == exp["kernel_dim"]
        if declared is not None:
            ok = ok and rep.declared_bound_nonmembership is True
        rep.passed = ok
    except NotFiniteColengthError as e:
        rep.error = "colength did not stabilize: %s" % e
    except (NotADerivationError, NotInJacobianError, ValueError, AssertionError) as e:
        rep.error = str(e)
    rep.elapsed = time.perf_counter() - t0
    return rep


# ------------------------------------------------------- hyperplane route


def hessian_cofactor(f, i, j):
    """Signed (i, j) cofactor of the Hessian matrix of f."""
    h = hessian(f)
    n = len(h)
    minor = [
        [h[r][c] for c in range(n) if c != j] for r in range(n) if r != i
    ]
    if not minor:
        return f.ring.one()
    d = det(minor)
    return d if (i + j) % 2 == 0 else -d


def verify_simple_elliptic(f, weights, s, expectations=None, dcap=30):
    """Weighted homogeneous route through a smooth-enough hyperplane section.

    Verifies that every w_i x_i H_jk - w_j x_j H_ik falls in J(f) (the
    residuals list), and that w_s x_s H_ss escapes (x_s^2, partials other
    than s). Preconditions: f weighted homogeneous for the given weights,
    isolated, with the section f|_{x_s=0} isolated in one variable fewer.
    """
    exp = dict(expectations or {})
    t0 = time.perf_counter()
    rep = VerificationReport(
        case=exp.get("case"),
        bindings=exp.get("bindings") or {},
        route="simple-elliptic",
        mu_expected=exp.get("mu"),
        tau_expected=exp.get("tau"),
        witness=s,
    )
    try:
        ring = f.ring
        n = ring.n
        weights = [Fraction(w) for w in weights]
        if not f.is_weighted_homogeneous(weights):
            raise ValueError("f is not weighted homogeneous for the given weights")
        grad = jacobian(f)
        rep.mu_observed = milnor_number(f, dcap)
        rep.tau_observed = tjurina_number(f, dcap)
        section = f.specialize({ring.names[s]: 0})
        # isolatedness of the hyperplane section, in n-1 variables
        artinian_quotient(section.ring, jacobian(section), dcap)
        xs = ring.gens()
        cof = [[hessian_cofactor(f, i, j) for j in range(n)] for i in range(n)]
        milnor_q = artinian_quotient(ring, grad, dcap)
        residual_polys = []
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(n):
                    expr = (
                        weights[i] * xs[i] * cof[j][k]
                        - weights[j] * xs[j] * cof[i][k]
                    )
                    residual_polys.append(milnor_q.nf(expr))
        rep.residuals = [str(r) for r in residual_polys]
        relations_ok = all(r.is_zero() for r in residual_polys)
        bound_gens = [xs[s] ** 2] + [grad[j] for j in range(n) if j != s]
        qb = artinian_quotient(ring, bound_gens, dcap)
        witness_poly = weights[s] * xs[s] * cof[s][s]
        rep.nonmembership = not qb.contains(witness_poly)
        ok = relations_ok and rep.nonmembership
        if rep.mu_expected is not None:
            ok = ok and rep.mu_observed == rep.mu_expected
        if rep.tau_expected is not None:
            ok = ok and rep.tau_observed == rep.tau_expected
        rep.passed = ok
    except NotFiniteColengthError as e:
        rep.error = "colength did not stabilize: %s" % e
    except ValueError as e:
        rep.error = str(e)
    rep.elapsed = time.perf_counter() - t0
    return rep

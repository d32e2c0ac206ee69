"""Groebner bases, extended division, and local Artinian quotients.

Everything runs in degrevlex over Q. The two regimes use different cores
behind one interface:

* global (degree_bound=None): a plain reduced Groebner basis of the
  polynomial ideal generated by `gens`, via Buchberger with Gebauer-Moller
  pair pruning;
* truncated (degree_bound=D): the reduced basis of gens + m^D, where the
  full block of degree-D monomials is handled implicitly. Every element of
  the ideal truncated below D is a rational combination of truncated
  monomial multiples gamma*g of the generators, so a single structured
  elimination of those rows yields the complete staircase: the surviving
  leading monomials below D are the pivots, their complement is the
  standard-monomial basis, and the pivot rows whose leads are minimal under
  divisibility are exactly the reduced basis elements. No S-pair queue is
  involved, every eliminated monomial has an exact pivot row, and each row
  is reduced once, which sidesteps the intermediate coefficient swell a
  Buchberger loop suffers on truncated ideals.

With track=True every basis element carries an exact representation
    element = sum_j gcof[j] * gens[j] + sum_m mcof[m] * x^m
over the original generators plus the implicit degree-D monomials, the
identity holding in the polynomial ring with no truncation. Tracked division
re-derives such a representation for arbitrary input and asserts the
re-expansion on every call.

Local membership semantics: for a finite-colength ideal I the quotient
dimension stabilizes (dim at D equals dim at D+1 forces I + m^D = I + m^(D+1),
hence m^D lies in the local ideal), so normal form zero in the stabilized
quotient is an exact certificate of membership in I O_n, in both directions.
"""

from __future__ import annotations

from fractions import Fraction

from .poly import Polynomial, grevlex_key, mon_div, mon_divides, mon_lcm, mon_mul


class NotFiniteColengthError(Exception):
    """Quotient dimension failed to stabilize below the degree cap."""

    def __init__(self, gens, dcap):
        self.gens = gens
        self.dcap = dcap
        super().__init__(
            "quotient did not stabilize below degree %d; the ideal (%s) does not "
            "have finite colength (non-isolated locus)" % (dcap, ", ".join(map(str, gens)))
        )


def _chop(mon, d):
    """A degree-d monomial dividing mon (deg mon >= d), chosen greedily."""
    rem = d
    out = []
    for e in mon:
        t = min(e, rem)
        out.append(t)
        rem -= t
    if rem:
        raise ValueError("monomial of degree < %d" % d)
    return tuple(out)


class _Element:
    """A basis element with optional exact representation over the gens."""

    __slots__ = ("poly", "gcof", "mcof")

    def __init__(self, poly, gcof=None, mcof=None):
        self.poly = poly
        self.gcof = gcof      # list of Polynomial, or None when untracked
        self.mcof = mcof      # {degree-D monomial: Polynomial} or None

    def lm(self):
        return self.poly.lm()

    def lc(self):
        return self.poly.lc()


def _lcm_int(a, b):
    from math import gcd

    return a * b // gcd(a, b)


def _make_primitive(ring, el, track):
    """Scale el so its coefficients are coprime integers with positive lead.

    Scaling by a nonzero rational changes nothing about the ideal or the
    staircase but keeps coefficient growth linear instead of compounding
    through chains of eliminations.
    """
    from math import gcd

    if el.poly.is_zero():
        return
    den = 1
    for c in el.poly.coeffs.values():
        den = _lcm_int(den, c.denominator)
    num = 0
    for c in el.poly.coeffs.values():
        num = gcd(num, (c.numerator * den) // c.denominator)
    scale = Fraction(den, num)
    if el.lc() < 0:
        scale = -scale
    if scale == 1:
        return
    el.poly = el.poly * scale
    if track:
        el.gcof = [g * scale for g in el.gcof]
        el.mcof = {m: g * scale for m, g in el.mcof.items()}


class GroebnerBasis:
    """Reduced Groebner basis, optionally truncated at degree_bound."""

    def __init__(self, ring, gens, degree_bound=None, track=False):
        self.ring = ring
        self.gens = list(gens)
        self.bound = degree_bound
        self.track = track
        if degree_bound is None:
            self._pivots = None
            self._elements = _buchberger(ring, self.gens, track)
        else:
            self._pivots = _macaulay(ring, self.gens, degree_bound, track)
            corners = []
            for m in sorted(self._pivots, key=grevlex_key):
                if not any(mon_divides(k, m) for k in corners):
                    corners.append(m)
            self._elements = [self._pivots[m] for m in corners]
        self.basis = [e.poly for e in self._elements]

    @property
    def lead_monomials(self):
        return [p.lm() for p in self.basis]

    def nf(self, p):
        """Unique normal form of p against the (truncated) reduced basis."""
        if self._pivots is not None:
            el = _Element(p)
            _macaulay_reduce(self.ring, el, self._pivots, self.bound, track=False)
            return el.poly
        r, _, _, _ = _divide(p, self._elements, None, want_cofs=False)
        return r

    def divide(self, p):
        """Tracked division: returns (remainder, gen_cofactors, mono_cofactors).

        The exact identity p = sum_j gen_cofactors[j] * gens[j]
        + sum_m mono_cofactors[m] * x^m + remainder is asserted before
        returning. mono_cofactors is empty for a global basis.
        """
        if not self.track:
            raise ValueError("basis was built with track=False")
        if self._pivots is not None:
            neg = Fraction(-1)
            el = _Element(p, [self.ring.zero() for _ in self.gens], {})
            _macaulay_reduce(self.ring, el, self._pivots, self.bound, track=True)
            r = el.poly
            qg = [g * neg for g in el.gcof]
            qm = {m: g * neg for m, g in el.mcof.items() if not g.is_zero()}
        else:
            r, bcofs, qm, _ = _divide(p, self._elements, None, want_cofs=True)
            qg = [self.ring.zero() for _ in self.gens]
            for c, el in zip(bcofs, self._elements):
                if c.is_zero():
                    continue
                for j, g in enumerate(el.gcof):
                    if not g.is_zero():
                        qg[j] = qg[j] + c * g
                for m, g in el.mcof.items():
                    qm[m] = qm.get(m, self.ring.zero()) + c * g
        total = r
        for cof, g in zip(qg, self.gens):
            total = total + cof * g
        for m, cof in qm.items():
            total = total + cof * self.ring.monomial(m)
        assert total == p, "division re-expansion failed"
        return r, qg, qm

    def std_monomials(self):
        """Monomials below the bound outside the leading-term ideal, ascending."""
        if self.bound is None:
            raise ValueError("standard monomials need a truncated basis")
        return [m for m in self.ring.monomials_below_degree(self.bound) if m not in self._pivots]


def _divide(p, elements, bound, want_cofs):
    """Full reduction of p by tracked elements plus the implicit monomial block.

    Returns (remainder, cofactors_over_elements, mono_cofactors, steps).
    """
    ring = p.ring
    work = dict(p.coeffs)
    rem = {}
    bcofs = [{} for _ in elements] if want_cofs else None
    qm = {} if want_cofs else None
    lms = [(e.lm(), e.lc()) for e in elements]
    steps = 0
    while work:
        m = max(work, key=grevlex_key)
        c = work.pop(m)
        deg = sum(m)
        if bound is not None and deg >= bound:
            if want_cofs:
                mm = _chop(m, bound)
                q = qm.setdefault(mm, {})
                g = mon_div(m, mm)
                q[g] = q.get(g, Fraction(0)) + c
            continue
        hit = None
        for i, (lm, lc) in enumerate(lms):
            if mon_divides(lm, m):
                hit = (i, lm, lc)
                break
        if hit is None:
            rem[m] = c
            continue
        i, lm, lc = hit
        gamma = mon_div(m, lm)
        factor = c / lc
        if want_cofs:
            bcofs[i][gamma] = bcofs[i].get(gamma, Fraction(0)) + factor
        for tm, tc in elements[i].poly.coeffs.items():
            if tm == lm:
                continue
            key = mon_mul(gamma, tm)
            s = work.get(key, Fraction(0)) - factor * tc
            if s:
                work[key] = s
            elif key in work:
                del work[key]
        steps += 1
    remainder = Polynomial(ring, rem)
    if want_cofs:
        cof_polys = [Polynomial(ring, d) for d in bcofs]
        qm_polys = {m: Polynomial(ring, d) for m, d in qm.items() if d}
        return remainder, cof_polys, qm_polys, steps
    return remainder, None, None, steps


def _combine(ring, el, coeff, gamma, other, track):
    """el := el - coeff * x^gamma * other, on poly and representations."""
    shift = ring.monomial(gamma, coeff)
    el.poly = el.poly - shift * other.poly
    if track:
        el.gcof = [a - shift * b for a, b in zip(el.gcof, other.gcof)]
        for m, g in other.mcof.items():
            el.mcof[m] = el.mcof.get(m, ring.zero()) - shift * g


def _reduce_element(ring, el, basis, bound, track, keep_lead=False):
    """Fully reduce el.poly against basis plus the implicit block, in place.

    The working polynomial is held fraction-free as an integer coefficient
    dict over a single running denominator: cancelling a term against a
    divisor with integer lead lc rescales the whole dict by lc instead of
    dividing, so no rational gcds happen in the inner loop. Basis elements
    are integer-primitive during the computation, which keeps lc small.
    Representation updates are batched per divisor and applied at the end;
    with keep_lead the leading term is carried into the result untouched.
    """
    from math import gcd

    others = [b for b in basis if b is not el]
    lms = [(b.lm(), b.lc()) for b in others]
    wden = 1
    for c in el.poly.coeffs.values():
        wden = _lcm_int(wden, c.denominator)
    work = {m: (c.numerator * wden) // c.denominator for m, c in el.poly.coeffs.items()}
    strip_at = 10**60
    out = {}
    used = {}           # index into others -> {gamma: accumulated factor}
    if keep_lead and work:
        lead = el.lm()
        out[lead] = Fraction(work.pop(lead), wden)
    while work:
        m = max(work, key=grevlex_key)
        c = work.pop(m)
        if bound is not None and sum(m) >= bound:
            if track:
                mm = _chop(m, bound)
                el.mcof[mm] = el.mcof.get(mm, ring.zero()) - ring.monomial(
                    mon_div(m, mm), Fraction(c, wden)
                )
            continue
        hit = None
        for i, (lm, lc) in enumerate(lms):
            if mon_divides(lm, m):
                hit = (i, lm, lc)
                break
        if hit is None:
            out[m] = Fraction(c, wden)
            continue
        i, lm, lc = hit
        gamma = mon_div(m, lm)
        if track:
            slot = used.setdefault(i, {})
            slot[gamma] = slot.get(gamma, Fraction(0)) + Fraction(c, wden * lc.numerator) * lc.denominator
        num = lc.numerator
        if lc.denominator != 1:
            # basis elements are integer-primitive in every phase that calls
            # this, but stay correct for arbitrary rational leads
            c *= lc.denominator
        if num != 1:
            for k in work:
                work[k] *= num
            wden *= num
        for tm, tc in others[i].poly.coeffs.items():
            if tm == lm:
                continue
            key = mon_mul(gamma, tm)
            s = work.get(key, 0) - c * (tc.numerator if tc.denominator == 1 else tc)
            if s:
                work[key] = s
            elif key in work:
                del work[key]
        if wden > strip_at and work and not any(isinstance(v, Fraction) for v in work.values()):
            g = wden
            for v in work.values():
                g = gcd(g, v)
                if g == 1:
                    break
            if g > 1:
                wden //= g
                for k in work:
                    work[k] //= g
            # whether or not anything cancelled, wait for real growth before
            # scanning again; a failed scan every step is quadratic
            strip_at = max(10**60, wden * 10**20)
    el.poly = Polynomial(ring, out)
    if track:
        for i, gammas in used.items():
            q = Polynomial(ring, {g: f for g, f in gammas.items() if f})
            if q.is_zero():
                continue
            b = others[i]
            el.gcof = [a - q * bg for a, bg in zip(el.gcof, b.gcof)]
            for m, g in b.mcof.items():
                el.mcof[m] = el.mcof.get(m, ring.zero()) - q * g


def _monic(ring, el, track):
    lc = el.lc()
    if lc == 1:
        return
    inv = 1 / lc
    el.poly = el.poly * inv
    if track:
        el.gcof = [g * inv for g in el.gcof]
        el.mcof = {m: g * inv for m, g in el.mcof.items()}


def _macaulay_reduce(ring, el, pivots, bound, track, keep_lead=False):
    """Eliminate pivot monomials from el.poly in place, dropping at the bound.

    Pivot lookup is an exact dict hit: every reducible monomial is itself the
    lead of a registered row, so no divisibility scan happens. Terms are
    popped in strictly descending order, so each monomial is cancelled at
    most once and the factor against any pivot row is a single rational.
    The working polynomial is held fraction-free as an integer dict over one
    running denominator, as in _reduce_element. Representation updates keep
    the invariant that the change in el.poly equals the change in
    sum_j gcof[j]*gens[j] + sum_m mcof[m]*x^m, so a caller starting from
    zero representations reads off negated cofactors for el.poly's drop.
    """
    from math import gcd

    wden = 1
    for c in el.poly.coeffs.values():
        wden = _lcm_int(wden, c.denominator)
    work = {m: (c.numerator * wden) // c.denominator for m, c in el.poly.coeffs.items()}
    strip_at = 10**60
    out = {}
    used = {}            # pivot monomial -> accumulated rational factor
    if keep_lead and work:
        lead = el.lm()
        out[lead] = Fraction(work.pop(lead), wden)
    while work:
        m = max(work, key=grevlex_key)
        c = work.pop(m)
        if sum(m) >= bound:
            if track:
                mm = _chop(m, bound)
                el.mcof[mm] = el.mcof.get(mm, ring.zero()) - ring.monomial(
                    mon_div(m, mm), Fraction(c, wden)
                )
            continue
        row = pivots.get(m)
        if row is None:
            out[m] = Fraction(c, wden)
            continue
        lc = row.lc()
        if track:
            used[m] = used.get(m, Fraction(0)) + Fraction(c, wden * lc.numerator) * lc.denominator
        if lc.denominator != 1:
            c *= lc.denominator
        num = lc.numerator
        if num != 1:
            for k in work:
                work[k] *= num
            wden *= num
        for tm, tc in row.poly.coeffs.items():
            if tm == m:
                continue
            s = work.get(tm, 0) - c * (tc.numerator if tc.denominator == 1 else tc)
            if s:
                work[tm] = s
            elif tm in work:
                del work[tm]
        if wden > strip_at and work and not any(isinstance(v, Fraction) for v in work.values()):
            g = wden
            for v in work.values():
                g = gcd(g, v)
                if g == 1:
                    break
            if g > 1:
                wden //= g
                for k in work:
                    work[k] //= g
            strip_at = max(10**60, wden * 10**20)
    el.poly = Polynomial(ring, out)
    if track:
        for m, fac in used.items():
            if not fac:
                continue
            row = pivots[m]
            el.gcof = [a - bg * fac for a, bg in zip(el.gcof, row.gcof)]
            for mm, g in row.mcof.items():
                el.mcof[mm] = el.mcof.get(mm, ring.zero()) - g * fac


def _macaulay(ring, gens, bound, track):
    """Echelonize the truncations of all monomial multiples of the gens.

    The rows gamma*g_j with deg(gamma) + low_degree(g_j) < bound span every
    element of the ideal truncated below the bound, so their echelon form
    carries the whole staircase of gens + m^bound. Rows enter in ascending
    order of their initial leading monomial; a back-substitution pass then
    rewrites each surviving tail over standard monomials only. Returns the
    pivot table {leading monomial: monic row element}.
    """
    jobs = []
    for j, g in enumerate(gens):
        if g.is_zero():
            continue
        low = g.low_degree()
        lmg = g.lm()
        for d in range(bound - low):
            for gamma in ring.monomials_of_degree(d):
                jobs.append((grevlex_key(mon_mul(gamma, lmg)), j, gamma))
    jobs.sort()
    ngens = len(gens)
    pivots = {}
    for _, j, gamma in jobs:
        poly = Polynomial(ring, {mon_mul(gamma, m): c for m, c in gens[j].coeffs.items()})
        el = _Element(
            poly,
            [ring.monomial(gamma) if k == j else ring.zero() for k in range(ngens)] if track else None,
            {} if track else None,
        )
        _macaulay_reduce(ring, el, pivots, bound, track)
        if not el.poly.is_zero():
            _make_primitive(ring, el, track)
            pivots[el.lm()] = el
    # ascending pass: smaller rows are already clean when a tail cites them
    for m in sorted(pivots, key=grevlex_key):
        el = pivots[m]
        if any(t != m and t in pivots for t in el.poly.coeffs):
            _macaulay_reduce(ring, el, pivots, bound, track, keep_lead=True)
        _monic(ring, el, track)
    return pivots


def _buchberger(ring, gens, track):
    """Buchberger loop with Gebauer-Moller pair pruning, for global bases.

    Elements whose leading monomial becomes divisible by a newer one are
    retired: kept for their already-queued pairs but excluded from the
    reducer set and from new pairs, so the active set always carries an
    antichain of leading monomials.
    """
    import heapq

    basis = []           # every element ever added, in insertion order
    active = []          # indices of non-retired elements, insertion order
    pending = {}         # pair id -> (i, j, lcm)
    heap = []            # (lcm degree, pair id)
    next_pid = [0]

    def reducers():
        return [basis[i] for i in active]

    def update_pairs(j):
        lmj = basis[j].lm()
        # prune pending pairs made redundant by the new leading monomial
        for pid, (a, b, l) in list(pending.items()):
            if (
                mon_divides(lmj, l)
                and mon_lcm(basis[a].lm(), lmj) != l
                and mon_lcm(basis[b].lm(), lmj) != l
            ):
                del pending[pid]
        # candidate pairs of the new element against the active set
        cand = []
        for i in active:
            if i == j:
                continue
            cand.append((i, mon_lcm(basis[i].lm(), lmj)))
        kept = [
            (i, l)
            for (i, l) in cand
            if not any(l2 != l and mon_divides(l2, l) for (_, l2) in cand)
        ]
        groups = {}
        for i, l in kept:
            groups.setdefault(l, []).append(i)
        for l in sorted(groups, key=grevlex_key):
            idxs = groups[l]
            if any(l == mon_mul(basis[i].lm(), lmj) for i in idxs):
                continue  # a coprime pair with this lcm certifies them all
            i = min(idxs)
            pid = next_pid[0]
            next_pid[0] += 1
            pending[pid] = (i, j, l)
            heapq.heappush(heap, (sum(l), pid))
        # retire active elements the new leading monomial divides
        for i in list(active):
            if i != j and mon_divides(lmj, basis[i].lm()):
                active.remove(i)

    def refresh_tails(j):
        lmj = basis[j].lm()
        red = reducers()
        for i in active:
            if i == j:
                continue
            el = basis[i]
            lm = el.lm()
            if any(m != lm and mon_divides(lmj, m) for m in el.poly.coeffs):
                _reduce_element(ring, el, red, None, track, keep_lead=True)
                _make_primitive(ring, el, track)

    def add_element(el):
        _make_primitive(ring, el, track)
        basis.append(el)
        j = len(basis) - 1
        active.append(j)
        update_pairs(j)
        refresh_tails(j)

    def drain():
        while heap:
            _, pid = heapq.heappop(heap)
            entry = pending.pop(pid, None)
            if entry is None:
                continue
            i, j, lcm = entry
            fi, fj = basis[i], basis[j]
            s = _Element(
                ring.zero(),
                [ring.zero() for _ in gens] if track else None,
                {} if track else None,
            )
            _combine(ring, s, Fraction(-1) / fi.lc(), mon_div(lcm, fi.lm()), fi, track)
            _combine(ring, s, Fraction(1) / fj.lc(), mon_div(lcm, fj.lm()), fj, track)
            _reduce_element(ring, s, reducers(), None, track)
            if not s.poly.is_zero():
                add_element(s)

    for j, g in enumerate(gens):
        el = _Element(
            g,
            [ring.one() if k == j else ring.zero() for k in range(len(gens))] if track else None,
            {} if track else None,
        )
        _reduce_element(ring, el, reducers(), None, track)
        if not el.poly.is_zero():
            add_element(el)

    drain()
    keep = reducers()
    # tail-reduce to the unique reduced basis, keeping representations exact
    changed = True
    while changed:
        changed = False
        for el in keep:
            before = el.poly
            _reduce_element(ring, el, keep, None, track, keep_lead=True)
            if el.poly != before:
                changed = True
    for el in keep:
        _monic(ring, el, track)
    keep.sort(key=lambda e: grevlex_key(e.lm()))
    return keep


def extended_divide(p, divisors, basis=None):
    """Cofactor division against the ideal of the divisors: p = sum q_i d_i + r.

    The remainder is the unique normal form of p against the reduced global
    Groebner basis of (divisors), so r = 0 exactly when p lies in the
    polynomial ideal. Cofactors come from tracking each basis element back
    to the divisors, and the exact re-expansion is asserted on every call.
    A precomputed tracked global basis of the same divisor list may be
    passed to skip the Buchberger run. Returns (cofactors, remainder).
    """
    ring = p.ring
    divisors = list(divisors)
    if any(d.is_zero() for d in divisors):
        raise ValueError("zero divisor")
    if basis is None:
        basis = GroebnerBasis(ring, divisors, track=True)
    if basis.bound is not None or not basis.track or basis.gens != divisors:
        raise ValueError("basis must be a tracked global basis of the divisors")
    r, qg, _ = basis.divide(p)
    return qg, r


def buchberger(gens, order="degrevlex", degree_bound=None, track=False):
    """Reduced Groebner basis of (gens), optionally truncated by m^degree_bound."""
    if order != "degrevlex":
        raise ValueError("only degrevlex is supported")
    gens = list(gens)
    if not gens:
        raise ValueError("empty generator list")
    return GroebnerBasis(gens[0].ring, gens, degree_bound=degree_bound, track=track)


class Ideal:
    """An ordered generator list in a fixed ambient ring; no zero generators."""

    def __init__(self, ring, generators):
        self.ring = ring
        self.generators = list(generators)
        for g in self.generators:
            if g.is_zero():
                raise ValueError("zero generator")
            if g.ring != ring:
                raise ValueError("generator from a different ring")

    def sum(self, other):
        if other.ring != self.ring:
            raise ValueError("different ambient rings")
        return Ideal(self.ring, self.generators + other.generators)

    __add__ = sum

    def product(self, other):
        if other.ring != self.ring:
            raise ValueError("different ambient rings")
        return Ideal(
            self.ring, [a * b for a in self.generators for b in other.generators]
        )

    def square(self):
        """Pairwise products g_i g_j with i <= j."""
        gs = self.generators
        return Ideal(
            self.ring,
            [gs[i] * gs[j] for i in range(len(gs)) for j in range(i, len(gs))],
        )

    def __repr__(self):
        return "Ideal(%s)" % ", ".join(str(g) for g in self.generators)


class Coset:
    """An element of an ArtinianQuotient, held by its normal-form representative."""

    __slots__ = ("representative", "parent")

    def __init__(self, representative, parent):
        self.representative = representative
        self.parent = parent

    def is_unit(self):
        return self.representative.constant_term() != 0

    def is_zero(self):
        return self.representative.is_zero()

    def __eq__(self, other):
        return (
            isinstance(other, Coset)
            and self.parent is other.parent
            and self.representative == other.representative
        )

    def __repr__(self):
        return "Coset(%s)" % self.representative


def normal_form(p, quotient):
    """The coset of p in the quotient, on the standard-monomial representative."""
    return Coset(quotient.nf(p), quotient)


def contains(ideal, p, dcap=30):
    """Local membership p in I*O_n at the origin, via the stabilized quotient."""
    aq = artinian_quotient(ideal.ring, ideal.generators, dcap)
    return aq.contains(p)


class ArtinianQuotient:
    """Q[x]/(I + m^D) at the least stabilized truncation degree D."""

    def __init__(self, ring, gens, degree, gb):
        self.ring = ring
        self.gens = list(gens)
        self.degree = degree
        self.gb = gb
        self.basis = gb.std_monomials()
        self.dim = len(self.basis)
        self._basis_index = {m: i for i, m in enumerate(self.basis)}

    def nf(self, p):
        return self.gb.nf(p)

    def contains(self, p):
        """Exact local membership certificate: p in I O_n."""
        return self.nf(p).is_zero()

    def coords(self, p):
        """Coordinates of the coset of p on the standard monomial basis."""
        v = [Fraction(0)] * self.dim
        for m, c in self.nf(p).coeffs.items():
            v[self._basis_index[m]] = c
        return v

    def from_coords(self, vec):
        out = {}
        for m, c in zip(self.basis, vec):
            c = Fraction(c)
            if c:
                out[m] = c
        return Polynomial(self.ring, out)

    def mul(self, a, b):
        return self.nf(a * b)

    def is_unit(self, p):
        """A coset is a unit in the local quotient iff its constant term is nonzero."""
        return self.nf(p).constant_term() != 0

    def basis_polys(self):
        return [self.ring.monomial(m) for m in self.basis]


def artinian_quotient(ring, gens, dcap=30, track=False):
    """Stabilized local quotient by (gens) + m^D at the least adequate D.

    One bounded elimination at a probe bound B exposes the whole dimension
    curve below B: with every pivot tail rewritten over standard monomials,
    dim at D equals dim at D+1 exactly when no standard monomial has degree
    >= D and every pivot row with lead degree >= D has zero tail. The least
    such D is read off directly; the probe bound grows geometrically until
    the readoff is conclusive (D + 1 <= B). Raises NotFiniteColengthError
    if no D <= dcap stabilizes.
    """
    gens = list(gens)
    if any(g.ring != ring for g in gens):
        raise ValueError("generator from a different ring")
    nonzero = [g for g in gens if not g.is_zero()]
    if not nonzero:
        raise NotFiniteColengthError(gens, dcap)
    bound = min(dcap + 1, max(6, 2 + max(g.low_degree() for g in nonzero)))
    while True:
        gb = GroebnerBasis(ring, gens, degree_bound=bound)
        d_max = max((sum(m) for m in gb.std_monomials()), default=-1)
        tail_top = -1
        for m, el in gb._pivots.items():
            if len(el.poly.coeffs) > 1 and sum(m) > tail_top:
                tail_top = sum(m)
        dstar = max(d_max + 1, tail_top + 1, 1)
        if dstar + 1 <= bound:
            if dstar > dcap:
                raise NotFiniteColengthError(gens, dcap)
            final = GroebnerBasis(ring, gens, degree_bound=dstar, track=track)
            return ArtinianQuotient(ring, gens, dstar, final)
        if bound >= dcap + 1:
            raise NotFiniteColengthError(gens, dcap)
        bound = min(dcap + 1, bound + bound // 2 + 3)


def milnor_number(f, dcap=30):
    """dim_Q O_n / J(f); raises NotFiniteColengthError for non-isolated f."""
    from .poly import jacobian

    return artinian_quotient(f.ring, jacobian(f), dcap).dim


def tjurina_number(f, dcap=30):
    """dim_Q O_n / (f, J(f))."""
    from .poly import jacobian

    return artinian_quotient(f.ring, [f] + jacobian(f), dcap).dim

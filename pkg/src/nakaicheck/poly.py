"""Exact multivariate polynomial arithmetic over the rationals.

Monomials are exponent tuples, polynomials are sparse maps from monomial to
nonzero Fraction. The term order everywhere is degree reverse lexicographic
(degrevlex) with the ring's first variable largest; printing and .terms()
iterate in that canonical order, largest term first.

The expression grammar shared by the parser, the case files and the CLI:

    expr   := term (('+' | '-') term)*
    term   := signed (('*' | '/') signed)*
    signed := ('-' | '+')* power
    power  := atom ('^' atom)?
    atom   := INTEGER | NAME | '(' expr ')'

'*' is mandatory between factors. '/' is only legal when the divisor
evaluates to a nonzero rational constant (this subsumes rational literals
like 7/2). An exponent must evaluate to a non-negative integer constant.
NAMEs resolve through the bindings mapping first (values are rationals,
useful for parameters), then through the ring's variables.
"""

from __future__ import annotations

import re
from fractions import Fraction

NEG_INF = float("-inf")


_KEY_CACHE = {}


def grevlex_key(mon):
    """Sort key: bigger key means bigger monomial in degrevlex."""
    k = _KEY_CACHE.get(mon)
    if k is None:
        k = (sum(mon),) + tuple(-e for e in reversed(mon))
        _KEY_CACHE[mon] = k
    return k


def mon_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mon_divides(a, b):
    """True if monomial a divides monomial b."""
    return all(x <= y for x, y in zip(a, b))


def mon_div(a, b):
    """Exponent vector of a/b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def mon_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


class Ring:
    """A polynomial ring over Q, identified by its ordered variable names."""

    def __init__(self, names):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names: %r" % (names,))
        self.names = names
        self.n = len(names)
        self._index = {v: i for i, v in enumerate(names)}

    def index(self, name):
        return self._index[name]

    def var(self, name):
        mon = tuple(1 if i == self._index[name] else 0 for i in range(self.n))
        return Polynomial(self, {mon: Fraction(1)})

    def gens(self):
        return [self.var(v) for v in self.names]

    def const(self, c):
        c = Fraction(c)
        return Polynomial(self, {} if c == 0 else {(0,) * self.n: c})

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return self.const(1)

    def monomial(self, exps, coeff=1):
        exps = tuple(exps)
        if len(exps) != self.n or any(e < 0 for e in exps):
            raise ValueError("bad exponent vector %r" % (exps,))
        c = Fraction(coeff)
        return Polynomial(self, {exps: c} if c != 0 else {})

    def monomials_of_degree(self, d):
        """All exponent tuples of total degree exactly d, degrevlex descending."""
        out = []

        def rec(prefix, rem, slots):
            if slots == 1:
                out.append(prefix + (rem,))
                return
            for e in range(rem, -1, -1):
                rec(prefix + (e,), rem - e, slots - 1)

        rec((), d, self.n)
        out.sort(key=grevlex_key, reverse=True)
        return out

    def monomials_below_degree(self, d):
        """All exponent tuples of total degree < d, degrevlex ascending."""
        out = []
        for k in range(d):
            out.extend(self.monomials_of_degree(k))
        out.sort(key=grevlex_key)
        return out

    def __eq__(self, other):
        return isinstance(other, Ring) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return "Ring(%s)" % ", ".join(self.names)


class Polynomial:
    """Immutable sparse polynomial with Fraction coefficients."""

    __slots__ = ("ring", "coeffs", "_lm")

    def __init__(self, ring, coeffs):
        self.ring = ring
        # caller hands over a dict; zero coefficients are stripped here
        self.coeffs = {m: c for m, c in coeffs.items() if c != 0}
        self._lm = None

    # ------------------------------------------------------------- basics

    def is_zero(self):
        return not self.coeffs

    def degree(self):
        if not self.coeffs:
            return NEG_INF
        return max(sum(m) for m in self.coeffs)

    def low_degree(self):
        """Smallest total degree of a term (the local order of vanishing)."""
        if not self.coeffs:
            return NEG_INF
        return min(sum(m) for m in self.coeffs)

    def terms(self):
        """(monomial, coefficient) pairs, degrevlex descending."""
        return sorted(self.coeffs.items(), key=lambda t: grevlex_key(t[0]), reverse=True)

    def lm(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading monomial")
        if self._lm is None:
            self._lm = max(self.coeffs, key=grevlex_key)
        return self._lm

    def lc(self):
        return self.coeffs[self.lm()]

    def coeff(self, mon):
        return self.coeffs.get(tuple(mon), Fraction(0))

    def constant_term(self):
        return self.coeffs.get((0,) * self.ring.n, Fraction(0))

    def is_constant(self):
        return all(sum(m) == 0 for m in self.coeffs)

    def monic(self):
        if not self.coeffs:
            return self
        inv = 1 / self.lc()
        return Polynomial(self.ring, {m: c * inv for m, c in self.coeffs.items()})

    # --------------------------------------------------------- arithmetic

    def _check(self, other):
        if self.ring != other.ring:
            raise ValueError("mixed rings %r / %r" % (self.ring, other.ring))

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = self.ring.const(other)
        self._check(other)
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            elif m in out:
                del out[m]
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self.coeffs.items()})

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = self.ring.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = Fraction(other)
            if c == 0:
                return self.ring.zero()
            return Polynomial(self.ring, {m: k * c for m, k in self.coeffs.items()})
        self._check(other)
        out = {}
        for m1, c1 in self.coeffs.items():
            for m2, c2 in other.coeffs.items():
                m = mon_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                elif m in out:
                    del out[m]
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0 or k != int(k):
            raise ValueError("exponent must be a non-negative integer")
        result = self.ring.one()
        base = self
        k = int(k)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return self.is_constant() and self.constant_term() == Fraction(other)
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ring, frozenset(self.coeffs.items())))

    # -------------------------------------------------------- derivatives

    def derivative(self, var):
        """Partial derivative; var is a name or an index."""
        i = var if isinstance(var, int) else self.ring.index(var)
        out = {}
        for m, c in self.coeffs.items():
            e = m[i]
            if e == 0:
                continue
            dm = m[:i] + (e - 1,) + m[i + 1:]
            out[dm] = out.get(dm, 0) + c * e
        return Polynomial(self.ring, out)

    def truncate(self, d):
        """Drop all terms of total degree >= d."""
        return Polynomial(self.ring, {m: c for m, c in self.coeffs.items() if sum(m) < d})

    # ------------------------------------------------------- substitution

    def specialize(self, values):
        """Substitute ring variables by rational constants.

        values maps a subset of variable names to Fractions; the result lives
        in the ring on the remaining variables (in their original order).
        """
        for name in values:
            if name not in self.ring._index:
                raise KeyError("unknown variable %r" % name)
        vals = {self.ring.index(k): Fraction(v) for k, v in values.items()}
        keep = [i for i in range(self.ring.n) if i not in vals]
        new_ring = Ring(tuple(self.ring.names[i] for i in keep))
        out = {}
        for m, c in self.coeffs.items():
            for i, v in vals.items():
                c = c * v ** m[i]
                if c == 0:
                    break
            if c == 0:
                continue
            nm = tuple(m[i] for i in keep)
            s = out.get(nm, 0) + c
            if s:
                out[nm] = s
            elif nm in out:
                del out[nm]
        return Polynomial(new_ring, out)

    def eval(self, values):
        """Evaluate at a full point; values maps every variable to a rational."""
        return Fraction(self.specialize(values).constant_term()) if values else self.constant_term()

    # ----------------------------------------------------------- weights

    def weighted_degrees(self, weights):
        """Set of weighted degrees sum(w_i * e_i) over the terms."""
        weights = [Fraction(w) for w in weights]
        return {sum(w * e for w, e in zip(weights, m)) for m in self.coeffs}

    def is_weighted_homogeneous(self, weights, total=1):
        """Every term has weighted degree exactly `total`."""
        degs = self.weighted_degrees(weights)
        return len(degs) == 1 and degs == {Fraction(total)}

    # ----------------------------------------------------------- printing

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for m, c in self.terms():
            factors = []
            for name, e in zip(self.ring.names, m):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append("%s^%d" % (name, e))
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = str(mag) + "*" + "*".join(factors)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return "Polynomial(%s)" % self


def jacobian(f):
    """[df/dx_i for each ring variable]."""
    return [f.derivative(i) for i in range(f.ring.n)]


def hessian(f):
    """Matrix of second partials, hessian(f)[i][j] = d2f/dx_i dx_j."""
    grad = jacobian(f)
    return [[grad[i].derivative(j) for j in range(f.ring.n)] for i in range(f.ring.n)]


# ------------------------------------------------------------------ parser

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|([-+*/^()]))")


def _tokenize(text):
    pos, out = 0, []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip():
                raise ValueError("bad character %r in %r" % (text[pos], text))
            break
        num, name, sym = m.groups()
        if num is not None:
            out.append(("int", int(num)))
        elif name is not None:
            out.append(("name", name))
        else:
            out.append(("sym", sym))
        pos = m.end()
    out.append(("end", None))
    return out


class _Parser:
    def __init__(self, ring, tokens, bindings):
        self.ring = ring
        self.toks = tokens
        self.i = 0
        self.bindings = bindings or {}

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect_sym(self, s):
        kind, val = self.take()
        if kind != "sym" or val != s:
            raise ValueError("expected %r, got %r" % (s, val))

    def parse(self):
        p = self.expr()
        kind, val = self.peek()
        if kind != "end":
            raise ValueError("trailing input at token %r" % (val,))
        return p

    def expr(self):
        p = self.term()
        while True:
            kind, val = self.peek()
            if kind == "sym" and val in "+-":
                self.take()
                q = self.term()
                p = p + q if val == "+" else p - q
            else:
                return p

    def term(self):
        p = self.signed()
        while True:
            kind, val = self.peek()
            if kind == "sym" and val in "*/":
                self.take()
                q = self.signed()
                if val == "*":
                    p = p * q
                else:
                    if not q.is_constant() or q.is_zero():
                        raise ValueError("division only by nonzero rational constants")
                    p = p * (1 / q.constant_term())
            else:
                return p

    def signed(self):
        sign = 1
        while True:
            kind, val = self.peek()
            if kind == "sym" and val in "+-":
                self.take()
                if val == "-":
                    sign = -sign
            else:
                break
        p = self.power()
        return p if sign == 1 else -p

    def power(self):
        p = self.atom()
        kind, val = self.peek()
        if kind == "sym" and val == "^":
            self.take()
            e = self.atom()
            if not e.is_constant():
                raise ValueError("exponent must be constant, got %r" % str(e))
            ev = e.constant_term()
            if ev.denominator != 1 or ev < 0:
                raise ValueError("exponent must be a non-negative integer, got %s" % ev)
            p = p ** int(ev)
        return p

    def atom(self):
        kind, val = self.take()
        if kind == "int":
            return self.ring.const(val)
        if kind == "name":
            if val in self.bindings:
                return self.ring.const(Fraction(self.bindings[val]))
            if val in self.ring._index:
                return self.ring.var(val)
            raise ValueError("unknown identifier %r" % val)
        if kind == "sym" and val == "(":
            p = self.expr()
            self.expect_sym(")")
            return p
        raise ValueError("unexpected token %r" % (val,))


def parse_poly(ring, text, bindings=None):
    """Parse `text` in the shared grammar into a Polynomial over `ring`.

    bindings maps identifier names to rational values consulted before the
    ring's variables, so parameters can be fixed at parse time.
    """
    return _Parser(ring, _tokenize(text), bindings).parse()

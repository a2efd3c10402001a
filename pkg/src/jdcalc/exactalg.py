"""Exact rational arithmetic on graded multivariate polynomials.

Everything here is over Q (python Fractions), no rounding ever.  Polynomials
live in small named graded rings (at most three variables); morphisms are
substitution homomorphisms; truncated power series of univariate rational
functions are computed through the denominator recurrence.
"""

from fractions import Fraction
import re

Rat = Fraction


def rat(x):
    """Coerce ints/strings like '3/4' to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x)
    return Fraction(x)


class RingError(ValueError):
    pass


class GradedRing:
    """An ordered list of (variable name, positive integer degree)."""

    def __init__(self, name, variables):
        names = [v for v, _ in variables]
        if len(set(names)) != len(names):
            raise RingError("duplicate variable names in ring %r" % name)
        for v, d in variables:
            if not (isinstance(d, int) and d >= 1):
                raise RingError("degree of %s must be a positive integer" % v)
        self.name = name
        self.variables = tuple((v, d) for v, d in variables)
        self.var_names = tuple(names)
        self.degrees = tuple(d for _, d in variables)
        self.index = {v: i for i, v in enumerate(names)}

    @property
    def nvars(self):
        return len(self.var_names)

    def weighted_degree(self, expo):
        return sum(e * d for e, d in zip(expo, self.degrees))

    def zero(self):
        return Poly(self, {})

    def one(self):
        return Poly(self, {(0,) * self.nvars: Rat(1)})

    def var(self, name):
        if name not in self.index:
            raise RingError("no variable %r in ring %s" % (name, self.name))
        e = [0] * self.nvars
        e[self.index[name]] = 1
        return Poly(self, {tuple(e): Rat(1)})

    def monomial(self, expo, coeff=Rat(1)):
        expo = tuple(expo)
        if len(expo) != self.nvars:
            raise RingError("exponent arity mismatch")
        c = rat(coeff)
        return Poly(self, {expo: c} if c else {})

    def monomials_of_degree(self, n):
        """All exponent vectors of weighted degree n, graded-lex order."""
        out = []

        def rec(i, rem, prefix):
            if i == self.nvars:
                if rem == 0:
                    out.append(tuple(prefix))
                return
            d = self.degrees[i]
            for e in range(rem // d, -1, -1):
                rec(i + 1, rem - e * d, prefix + [e])

        rec(0, n, [])
        return out

    def __repr__(self):
        return "GradedRing(%s)" % self.name

    def __eq__(self, other):
        return isinstance(other, GradedRing) and self.variables == other.variables

    def __hash__(self):
        return hash(self.variables)


# The registry of rings the computations live in.
RINGS = {
    "S": GradedRing("S", [("t", 1), ("u", 2), ("v", 3)]),
    "Q[d,b]": GradedRing("Q[d,b]", [("d", 1), ("b", 2)]),
    "Q[d,a]": GradedRing("Q[d,a]", [("d", 1), ("a", 1)]),
    "Q[s2,s3]": GradedRing("Q[s2,s3]", [("s2", 2), ("s3", 3)]),
    "Q[D]": GradedRing("Q[D]", [("D", 1)]),
    "Q[d,a,b]": GradedRing("Q[d,a,b]", [("d", 1), ("a", 1), ("b", 2)]),
}


def _term_sort_key(ring, expo):
    # graded-lex by the registry's variable order, highest degree first
    return (-ring.weighted_degree(expo), tuple(-e for e in expo))


class Poly:
    """Element of a GradedRing: map exponent vector -> nonzero Fraction."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = {e: c for e, c in terms.items() if c}

    # -- basic structure ---------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, Poly) and self.ring == other.ring
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.ring, tuple(sorted(self.terms.items()))))

    def homogeneous_degree(self):
        """Common weighted degree, or None for 0, raising on mixed input."""
        if not self.terms:
            return None
        degs = {self.ring.weighted_degree(e) for e in self.terms}
        if len(degs) > 1:
            raise RingError("polynomial is not homogeneous: degrees %s" % sorted(degs))
        return degs.pop()

    def is_homogeneous(self):
        try:
            self.homogeneous_degree()
        except RingError:
            return False
        return True

    def degree(self):
        """Maximal weighted degree (None for the zero polynomial)."""
        if not self.terms:
            return None
        return max(self.ring.weighted_degree(e) for e in self.terms)

    def homogeneous_part(self, n):
        return Poly(self.ring, {e: c for e, c in self.terms.items()
                                if self.ring.weighted_degree(e) == n})

    def constant(self):
        return self.terms.get((0,) * self.ring.nvars, Rat(0))

    # -- arithmetic --------------------------------------------------------

    def _check(self, other):
        if self.ring != other.ring:
            raise RingError("ring mismatch: %s vs %s" % (self.ring, other.ring))

    def __add__(self, other):
        self._check(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            t[e] = t.get(e, Rat(0)) + c
        return Poly(self.ring, t)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Poly(self.ring, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                t[e] = t.get(e, Rat(0)) + c1 * c2
        return Poly(self.ring, t)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c):
        c = rat(c)
        return Poly(self.ring, {e: c * v for e, v in self.terms.items()})

    def __pow__(self, n):
        if n < 0:
            raise RingError("negative power")
        out = self.ring.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def evaluate(self, values):
        """Evaluate at a dict name -> Fraction."""
        total = Rat(0)
        for e, c in self.terms.items():
            term = c
            for name, power in zip(self.ring.var_names, e):
                if power:
                    term *= rat(values[name]) ** power
            total += term
        return total

    # -- leading terms and division (graded-lex) ---------------------------

    def leading(self):
        if not self.terms:
            return None
        e = min(self.terms, key=lambda x: _term_sort_key(self.ring, x))
        return e, self.terms[e]

    def divides(self, other):
        """Exact divisibility test: self | other."""
        q = self.try_divide(other)
        return q is not None

    def try_divide(self, other):
        """Return other/self if it exists exactly, else None."""
        self._check(other)
        if self.is_zero():
            raise RingError("division by the zero polynomial")
        rem = other
        quot = self.ring.zero()
        le, lc = self.leading()
        while rem:
            re, rc = rem.leading()
            de = tuple(a - b for a, b in zip(re, le))
            if any(x < 0 for x in de):
                return None
            m = self.ring.monomial(de, rc / lc)
            quot = quot + m
            rem = rem - m * self
        return quot

    def __repr__(self):
        return "Poly(%s, %s)" % (self.ring.name, format_poly(self))


# -- printing / parsing ----------------------------------------------------

def format_rat(c):
    return "%d/%d" % (c.numerator, c.denominator) if c.denominator != 1 else str(c.numerator)


def format_poly(p):
    """Terms as `coef * t^a u^b` in graded-lex order; exact round-trip."""
    if p.is_zero():
        return "0"
    parts = []
    for e in sorted(p.terms, key=lambda x: _term_sort_key(p.ring, x)):
        c = p.terms[e]
        factors = []
        for name, power in zip(p.ring.var_names, e):
            if power == 1:
                factors.append(name)
            elif power > 1:
                factors.append("%s^%d" % (name, power))
        if factors:
            parts.append("%s * %s" % (format_rat(c), " ".join(factors)))
        else:
            parts.append(format_rat(c))
    return " + ".join(parts)


_TERM_RE = re.compile(r"^\s*(-?\d+(?:/\d+)?)\s*(?:\*\s*(.*))?$")
_FACTOR_RE = re.compile(r"^([A-Za-z]\w*)(?:\^(\d+))?$")


def parse_poly(ring, text):
    """Inverse of format_poly (also accepts bare variable factors)."""
    text = text.strip()
    if text == "0":
        return ring.zero()
    p = ring.zero()
    for chunk in text.split("+"):
        m = _TERM_RE.match(chunk)
        if not m:
            raise RingError("cannot parse term %r" % chunk)
        coeff = Fraction(m.group(1))
        expo = [0] * ring.nvars
        if m.group(2):
            for f in m.group(2).split():
                fm = _FACTOR_RE.match(f)
                if not fm or fm.group(1) not in ring.index:
                    raise RingError("bad factor %r in ring %s" % (f, ring.name))
                expo[ring.index[fm.group(1)]] += int(fm.group(2) or 1)
        p = p + ring.monomial(expo, coeff)
    return p


# -- morphisms ---------------------------------------------------------------

class RingMorphism:
    """Substitution homomorphism given by an image polynomial per variable."""

    def __init__(self, source, target, images):
        self.source = source
        self.target = target
        self.images = {}
        for v in source.var_names:
            img = images[v]
            if img.ring != target:
                raise RingError("image of %s lies in the wrong ring" % v)
            self.images[v] = img

    def is_graded(self):
        for v, d in self.source.variables:
            img = self.images[v]
            if img and img.homogeneous_degree() != d:
                return False
        return True

    def __call__(self, p):
        if p.ring != self.source:
            raise RingError("ring mismatch in morphism application")
        out = self.target.zero()
        for e, c in p.terms.items():
            term = self.target.one().scale(c)
            for v, power in zip(self.source.var_names, e):
                for _ in range(power):
                    term = term * self.images[v]
            out = out + term
        return out


def identity_morphism(ring):
    return RingMorphism(ring, ring, {v: ring.var(v) for v in ring.var_names})


def apply_morphism(p, m):
    """Substitution homomorphism applied to a polynomial."""
    return m(p)


# -- gcd / principal ideals --------------------------------------------------

def _to_univariate(p, i):
    """View p as univariate in variable i with Poly coefficients (vars minus i)."""
    sub = GradedRing(p.ring.name + "-", [pv for j, pv in enumerate(p.ring.variables) if j != i])
    coeffs = {}
    for e, c in p.terms.items():
        k = e[i]
        rest = tuple(x for j, x in enumerate(e) if j != i)
        coeffs.setdefault(k, {})[rest] = coeffs.get(k, {}).get(rest, Rat(0)) + c
    return sub, {k: Poly(sub, t) for k, t in coeffs.items() if any(t.values())}


def _from_univariate(ring, i, coeffs):
    terms = {}
    for k, poly in coeffs.items():
        for e, c in poly.terms.items():
            full = list(e[:i]) + [k] + list(e[i:])
            terms[tuple(full)] = c
    return Poly(ring, terms)


def _poly_content(ring_sub, coeffs):
    """Gcd of the coefficient polynomials of a univariate-over-Poly poly."""
    g = None
    for c in coeffs.values():
        g = c if g is None else gcd_poly(g, c)
        if g.degree() == 0:
            break
    return g


def _uni_pseudo_rem(a, b):
    """Pseudo remainder of dicts deg -> Poly coefficient (same sub-ring)."""
    da, db = max(a), max(b)
    lb = b[db]
    r = dict(a)
    while r and max(r) >= db:
        dr = max(r)
        lr = r[dr]
        new = {}
        for k, c in r.items():
            new[k] = c * lb
        for k, c in b.items():
            shift = k + dr - db
            new[shift] = new.get(shift, lb.ring.zero()) - c * lr
        r = {k: c for k, c in new.items() if not c.is_zero()}
    return r


def gcd_poly(p, q):
    """Gcd in Q[x1..xk], monic-normalized leading coefficient.

    Primitive PRS; the rings here have at most three variables and the
    inputs stay tiny, so no subresultant refinements are needed.
    """
    if p.ring != q.ring:
        raise RingError("gcd of polynomials in different rings")
    ring = p.ring
    if p.is_zero():
        return _normalize_gcd(q)
    if q.is_zero():
        return _normalize_gcd(p)
    if ring.nvars == 0:
        return ring.one()
    # choose the first variable that actually occurs
    occ = [i for i in range(ring.nvars)
           if any(e[i] for e in p.terms) or any(e[i] for e in q.terms)]
    if not occ:
        return ring.one()
    i = occ[0]
    sub, pa = _to_univariate(p, i)
    _, pb = _to_univariate(q, i)
    ca = _poly_content(sub, pa)
    cb = _poly_content(sub, pb)
    cont = gcd_poly(ca, cb)
    a = {k: ca.try_divide(c) for k, c in pa.items()}
    b = {k: cb.try_divide(c) for k, c in pb.items()}
    if max(a) < max(b):
        a, b = b, a
    while b:
        r = _uni_pseudo_rem(a, b)
        if not r:
            break
        cr = _poly_content(sub, r)
        r = {k: cr.try_divide(c) for k, c in r.items()}
        a, b = b, r
    g_uni = _from_univariate(ring, i, b if b else a)
    g = g_uni * _embed(ring, i, cont)
    return _normalize_gcd(g)


def _embed(ring, i, sub_poly):
    terms = {}
    for e, c in sub_poly.terms.items():
        full = list(e[:i]) + [0] + list(e[i:])
        terms[tuple(full)] = c
    return Poly(ring, terms)


def _normalize_gcd(g):
    if g.is_zero():
        return g
    _, lc = g.leading()
    return g.scale(1 / lc)


def principal_ideal_ops(p, q):
    """Division test, quotient and intersection generator for (p), (q)."""
    if p.is_zero() or q.is_zero():
        raise RingError("principal ideal operations need nonzero generators")
    quotient = p.try_divide(q)
    g = gcd_poly(p, q)
    cofactor = g.try_divide(q)
    inter = p * cofactor
    out = {"divides": quotient is not None, "intersection_generator": inter}
    if quotient is not None:
        out["quotient"] = quotient
    return out


# -- truncated series --------------------------------------------------------

class SeriesTruncation:
    """Taylor coefficients of num/den for a univariate rational function."""

    def __init__(self, num, den, order):
        if num.ring != den.ring or num.ring.nvars != 1:
            raise RingError("series expansion needs a single-variable ring")
        if not den.constant():
            raise RingError("denominator has zero constant term")
        self.num = num
        self.den = den
        self.order = order
        n = [Rat(0)] * (order + 1)
        d = [Rat(0)] * (order + 1)
        for (e,), c in num.terms.items():
            if e <= order:
                n[e] = c
        for (e,), c in den.terms.items():
            if e <= order:
                d[e] = c
        coeffs = []
        for k in range(order + 1):
            s = n[k] - sum(d[j] * coeffs[k - j] for j in range(1, k + 1))
            coeffs.append(s / d[0])
        self.coefficients = coeffs

    def check_recurrence(self):
        """The stored coefficients satisfy the denominator's recurrence."""
        d = {e[0]: c for e, c in self.den.terms.items()}
        n = {e[0]: c for e, c in self.num.terms.items()}
        for k in range(self.order + 1):
            lhs = sum(d.get(j, Rat(0)) * self.coefficients[k - j]
                      for j in range(0, k + 1))
            if lhs != n.get(k, Rat(0)):
                return False
        return True


def series_expand(num, den, order):
    return SeriesTruncation(num, den, order)


def poly_arith(op, *operands):
    """Dispatch {add, mul, scale, pow} with ring checks."""
    if op == "add":
        out = operands[0]
        for p in operands[1:]:
            out = out + p
        return out
    if op == "mul":
        out = operands[0]
        for p in operands[1:]:
            out = out * p
        return out
    if op == "scale":
        p, c = operands
        return p.scale(c)
    if op == "pow":
        p, n = operands
        return p ** n
    raise RingError("unknown operation %r" % op)

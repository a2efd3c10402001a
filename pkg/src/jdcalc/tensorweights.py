"""Brute-force tensor weights for quadratic Lie superalgebras.

A diagram is evaluated as a staged contraction on an ordered list of tensor
slots.  Every node tensor used (Casimir, bracket, bilinear form, supertrace
of a module chain) is parity even, so Koszul signs enter only through the
explicit adjacent-swap operation; this keeps the sign discipline in one
place.  Legs can be fed concrete inputs, kept open as form arguments, or
raised to open output slots.
"""

from fractions import Fraction
import os

from .superalgebras import AlgebraError
from .linalg import rref, solve
from .exactalg import RINGS

Rat = Fraction

DEFAULT_MAX_ENTRIES = 17 ** 4


def _max_entries():
    env = os.environ.get("JD_MAX_TENSOR")
    return int(env) if env else DEFAULT_MAX_ENTRIES


class ContractionError(RuntimeError):
    pass


class _State:
    """Sparse tensor with an ordered slot list; marker slots sit on the left."""

    def __init__(self, L, n_markers, data, slots):
        self.L = L
        self.n_markers = n_markers
        self.data = data      # dict: tuple(indices) -> Fraction
        self.slots = slots    # labels of working slots (after the markers)

    def guard(self):
        if len(self.data) > _max_entries():
            raise ContractionError("intermediate tensor exceeds JD_MAX_TENSOR")

    def pos(self, label):
        return self.slots.index(label)

    def swap(self, i):
        """Swap working slots i and i+1 with the Koszul sign."""
        par = self.L.parities
        m = self.n_markers
        out = {}
        for key, c in self.data.items():
            a, b = key[m + i], key[m + i + 1]
            nk = key[:m + i] + (b, a) + key[m + i + 2:]
            if par[a] and par[b]:
                c = -c
            out[nk] = out.get(nk, Rat(0)) + c
        self.data = {k: c for k, c in out.items() if c}
        self.slots[i], self.slots[i + 1] = self.slots[i + 1], self.slots[i]

    def move_to(self, label, target):
        i = self.pos(label)
        while i > target:
            self.swap(i - 1)
            i -= 1
        while i < target:
            self.swap(i)
            i += 1

    def append_cup(self, label_a, label_b):
        """Tensor the Casimir onto the right end (an even element, no sign)."""
        L = self.L
        m = self.n_markers
        out = {}
        for key, c in self.data.items():
            for a in range(L.dim):
                row = L.omega[a]
                for b in range(L.dim):
                    w = row[b]
                    if w:
                        out[key + (a, b)] = out.get(key + (a, b), Rat(0)) + c * w
        self.data = out
        self.slots.append(label_a)
        self.slots.append(label_b)
        self.guard()

    def append_vector(self, label, vec):
        out = {}
        for key, c in self.data.items():
            for a, va in vec.items():
                if va:
                    out[key + (a,)] = out.get(key + (a,), Rat(0)) + c * va
        self.data = out
        self.slots.append(label)
        self.guard()

    def bracket_at(self, i, new_label):
        """Replace working slots i, i+1 by their bracket (even map, no sign)."""
        L = self.L
        m = self.n_markers
        out = {}
        for key, c in self.data.items():
            a, b = key[m + i], key[m + i + 1]
            img = L.brk(a, b)
            for k, w in img.items():
                nk = key[:m + i] + (k,) + key[m + i + 2:]
                out[nk] = out.get(nk, Rat(0)) + c * w
        self.data = {k: c for k, c in out.items() if c}
        del self.slots[i + 1]
        self.slots[i] = new_label
        self.guard()

    def cap_at(self, i):
        """Contract working slots i, i+1 with the bilinear form."""
        L = self.L
        m = self.n_markers
        out = {}
        for key, c in self.data.items():
            a, b = key[m + i], key[m + i + 1]
            w = L.form[a][b]
            if w:
                nk = key[:m + i] + key[m + i + 2:]
                out[nk] = out.get(nk, Rat(0)) + c * w
        self.data = {k: c for k, c in out.items() if c}
        del self.slots[i + 1]
        del self.slots[i]

    def trace_at(self, i, k, mats, v_parities):
        """Contract working slots i..i+k-1 by str of the module action chain."""
        m = self.n_markers
        cache = {}

        def strval(idx):
            if idx in cache:
                return cache[idx]
            size = len(mats[0])
            prod = None
            for a in idx:
                ma = mats[a]
                prod = ma if prod is None else _mat_mul(prod, ma)
            tot = sum(((-1) ** v_parities[r]) * prod[r][r] for r in range(size))
            cache[idx] = tot
            return tot

        out = {}
        for key, c in self.data.items():
            idx = key[m + i: m + i + k]
            w = strval(idx)
            if w:
                nk = key[:m + i] + key[m + i + k:]
                out[nk] = out.get(nk, Rat(0)) + c * w
        self.data = {k2: c for k2, c in out.items() if c}
        del self.slots[i:i + k]


def _mat_mul(a, b):
    n = len(a)
    return [[sum(a[i][kk] * b[kk][j] for kk in range(n)) for j in range(n)] for i in range(n)]


def _ad_matrices(L):
    mats = []
    for a in range(L.dim):
        m = [[Rat(0)] * L.dim for _ in range(L.dim)]
        for b in range(L.dim):
            for k, c in L.brk(a, b).items():
                m[k][b] = c
        mats.append(m)
    return mats


def evaluate_diagram(diagram, L, leg_modes, skeleton="auto"):
    """Contract one diagram.

    leg_modes: per leg one of ('in', vector-dict), 'form', 'out'.  Returns a
    dict mapping (form-index-tuple + out-index-tuple) -> Fraction; a fully
    closed evaluation returns {(): value}.
    """
    seats = diagram.seats()
    pairing = diagram.pairing
    legs = diagram.legs
    n = len(legs)
    if len(leg_modes) != n:
        raise ContractionError("one mode per leg required")

    form_legs = [i for i in range(n) if leg_modes[i] == "form"]
    # marker block: one frozen index per form leg
    if form_legs:
        import itertools
        keys = itertools.product(range(L.dim), repeat=len(form_legs))
        data = {}
        for tup in keys:
            data[tuple(tup)] = Rat(1)
        state = _State(L, len(form_legs), data, [])
        # the working copies are appended below in leg order
    else:
        state = _State(L, 0, {(): Rat(1)}, [])

    # create leg slots in leg order; slot label = the half-edge at the leg
    form_pos = {leg: k for k, leg in enumerate(form_legs)}
    for i in range(n):
        mode = leg_modes[i]
        if mode == "out":
            continue  # created as a cup when its edge is processed
        if mode == "form":
            # duplicate the marker index into a working slot
            m = state.n_markers
            out = {}
            for key, c in state.data.items():
                a = key[form_pos[i]]
                out[key + (a,)] = c
            state.data = out
            state.slots.append(legs[i])
        else:
            kind, vec = mode
            if kind != "in":
                raise ContractionError("bad leg mode %r" % (mode,))
            state.append_vector(legs[i], vec)
    state.guard()

    # skeleton module for circles
    if diagram.circles or True:
        if skeleton == "auto":
            use_standard = L.matrix_model is not None
        else:
            use_standard = skeleton == "standard"
        if use_standard:
            mats, vpar = L.matrix_model, L.v_parities
        else:
            mats, vpar = _ad_matrices(L), L.parities

    # nodes to process
    nodes = [("vx", j) for j in range(len(diagram.vertices))]
    nodes += [("circ", j) for j in range(len(diagram.circles))]
    # leg-to-leg and leg-to-out edges handled as explicit caps/cups
    done_edges = set()
    extra_caps = []
    for i in range(n):
        h = legs[i]
        p = pairing[h]
        if seats[p][0] == "leg":
            e = frozenset((h, p))
            if e in done_edges:
                continue
            done_edges.add(e)
            j = seats[p][1]
            mi, mj = leg_modes[i], leg_modes[j]
            if mi == "out" and mj == "out":
                # bare strand between two outputs: a cup
                state.append_cup(("out", i), ("out", j))
            elif mi == "out":
                # other side has a working slot (form or input); raise it
                state.append_cup(("tmp", h), ("out", i))
                state.move_to(p, len(state.slots) - 3)
                state.move_to(("tmp", h), len(state.slots) - 2)
                state.cap_at(len(state.slots) - 3)
            elif mj == "out":
                state.append_cup(("tmp", p), ("out", j))
                state.move_to(h, len(state.slots) - 3)
                state.move_to(("tmp", p), len(state.slots) - 2)
                state.cap_at(len(state.slots) - 3)
            else:
                state.move_to(h, len(state.slots) - 1)
                state.move_to(p, len(state.slots) - 1)
                state.cap_at(len(state.slots) - 2)

    def node_halves(nd):
        if nd[0] == "vx":
            return list(diagram.vertices[nd[1]])
        return list(diagram.circles[nd[1]])

    remaining = list(nodes)
    while remaining:
        # greedy: the node with the most already-available slots
        def missing(nd):
            return sum(1 for h in node_halves(nd)
                       if pairing[h] not in state.slots and h not in state.slots)

        remaining.sort(key=lambda nd: (missing(nd), nd))
        nd = remaining.pop(0)
        halves = node_halves(nd)
        # ensure a feeding slot exists for each half-edge of the node
        for h in halves:
            p = pairing[h]
            if p in state.slots:
                continue  # the partner side produced our slot? label is p-side
            if h in state.slots:
                continue
            # new internal edge (or edge to an 'out' leg)
            if seats[p][0] == "leg":
                i = seats[p][1]
                if leg_modes[i] == "out":
                    state.append_cup(h, ("out", i))
                else:
                    raise ContractionError("leg slot missing")
            else:
                state.append_cup(h, p)
        # gather this node's slots: they are labeled either by its own
        # half-edge h (cup created here or by partner) or by the partner p
        labels = []
        for h in halves:
            labels.append(h if h in state.slots else pairing[h])
        # bring them adjacent at the right end, in cyclic order: moving each
        # label to the last slot keeps the ones placed before it in order
        for lab in labels:
            state.move_to(lab, len(state.slots) - 1)
        base = len(state.slots) - len(labels)
        if nd[0] == "vx":
            state.bracket_at(base, ("b", nd))
            state.cap_at(base)
        else:
            state.trace_at(base, len(labels), mats, vpar)
        state.guard()

    # order the remaining output slots by leg index
    out_legs = [i for i in range(n) if leg_modes[i] == "out"]
    for k, i in enumerate(out_legs):
        state.move_to(("out", i), k)
    if len(state.slots) != len(out_legs):
        raise ContractionError("unconsumed slots remain: %r" % (state.slots,))

    sd = Rat(L.sdim())
    factor = sd ** diagram.free_loops
    # bare skeleton circles contribute the module superdimension
    for c in diagram.circles:
        if not c:
            factor *= Rat(sum(1 if p == 0 else -1 for p in vpar))
    return {k: c * factor for k, c in state.data.items() if c * factor}


def weight(K, L, inputs=None, skeleton="auto"):
    """Weight of a DiagramSum (or single diagram) under the algebra L.

    Closed diagrams (or diagrams with all legs fed by `inputs`) produce a
    scalar; otherwise a dict basis-tuple -> value representing the multilinear
    form on the legs.  S-polynomial coefficients are combined symbolically, so
    the scalar may be a Poly when the sum carries polynomial coefficients.
    """
    from .diagrams import DiagramSum, JacobiDiagram

    if isinstance(K, JacobiDiagram):
        K = DiagramSum.single(K)
    total = None
    for key, coeff in K.terms.items():
        d = key.diagram
        n = len(d.legs)
        if inputs is not None:
            if len(inputs) != n:
                raise ContractionError("need %d inputs" % n)
            modes = [("in", x) for x in inputs]
            res = evaluate_diagram(d, L, modes, skeleton=skeleton)
        else:
            modes = ["form"] * n
            try:
                res = evaluate_diagram(d, L, modes, skeleton=skeleton)
            except ContractionError:
                # per-tuple fallback: same result, much smaller intermediates
                import itertools
                res = {}
                for tup in itertools.product(range(L.dim), repeat=n):
                    m2 = [("in", {a: Rat(1)}) for a in tup]
                    val = evaluate_diagram(d, L, m2, skeleton=skeleton).get((), Rat(0))
                    if val:
                        res[tup] = val
        if inputs is not None or n == 0:
            val = res.get((), Rat(0))
            term = _scale(coeff, val)
            total = term if total is None else _add(total, term)
        else:
            if total is None:
                total = {}
            for k, v in res.items():
                cur = total.get(k)
                term = _scale(coeff, v)
                total[k] = term if cur is None else _add(cur, term)
    if total is None:
        return Rat(0) if inputs is not None else {}
    if isinstance(total, dict):
        return {k: v for k, v in total.items() if v}
    return total


def _scale(coeff, val):
    if isinstance(coeff, Rat):
        return coeff * val
    return coeff.scale(val) if hasattr(coeff, "scale") else coeff * val


def _add(a, b):
    return a + b


def basis_vector(L, i):
    return {i: Rat(1)}


# -- operators from diagrams ----------------------------------------------------


def operator_from_diagram(diagram, L, n_in, n_out, skeleton="auto"):
    """Matrix of the operator L^{n_in} -> L^{n_out} given by a diagram.

    Legs 1..n_in are inputs, legs n_in+1..n_in+n_out are raised outputs.
    Returns dict (out_tuple, in_tuple) -> coeff as a nested dict keyed by
    in_tuple -> {out_tuple: coeff}.
    """
    import itertools
    cols = {}
    for tup in itertools.product(range(L.dim), repeat=n_in):
        modes = [("in", {a: Rat(1)}) for a in tup] + ["out"] * n_out
        res = evaluate_diagram(diagram, L, modes, skeleton=skeleton)
        cols[tup] = res
    return cols


def psi_diagram():
    """The H-shaped endomorphism diagram of the two-strand space.

    Orientations are fixed so that the Casimir acts on the square as
    4t - 2 Psi; on the sl2 module E this operator is the scalar -t.
    """
    from .diagrams import JacobiDiagram
    legs = [0, 1, 2, 3]
    vx = [(4, 5, 6), (7, 9, 8)]
    pairing = {0: 4, 4: 0, 2: 5, 5: 2, 1: 7, 7: 1, 3: 8, 8: 3, 6: 9, 9: 6}
    return JacobiDiagram(legs, vx, pairing)


def tau_diagram():
    """The crossing: legs (1,2) -> (4,3)."""
    from .diagrams import JacobiDiagram
    return JacobiDiagram([0, 1, 2, 3], [], {0: 3, 3: 0, 1: 2, 2: 1})


def identity2_diagram():
    from .diagrams import strand_diagram
    return strand_diagram(2)


class Operator2:
    """Exact endomorphism of L tensor L stored densely over index pairs."""

    def __init__(self, L, cols):
        self.L = L
        self.cols = {k: dict(v) for k, v in cols.items()}

    @classmethod
    def from_diagram(cls, diagram, L):
        return cls(L, operator_from_diagram(diagram, L, 2, 2))

    @classmethod
    def identity(cls, L):
        cols = {}
        for a in range(L.dim):
            for b in range(L.dim):
                cols[(a, b)] = {(a, b): Rat(1)}
        return cls(L, cols)

    def apply(self, vec):
        out = {}
        for k, c in vec.items():
            col = self.cols.get(k)
            if not col:
                continue
            for k2, w in col.items():
                out[k2] = out.get(k2, Rat(0)) + c * w
        return {k: c for k, c in out.items() if c}

    def compose(self, other):
        """self after other."""
        cols = {}
        for k, col in other.cols.items():
            cols[k] = self.apply(col)
        return Operator2(self.L, cols)

    def add(self, other, c1=Rat(1), c2=Rat(1)):
        cols = {}
        keys = set(self.cols) | set(other.cols)
        for k in keys:
            col = {}
            for k2, w in self.cols.get(k, {}).items():
                col[k2] = col.get(k2, Rat(0)) + c1 * w
            for k2, w in other.cols.get(k, {}).items():
                col[k2] = col.get(k2, Rat(0)) + c2 * w
            col = {k2: w for k2, w in col.items() if w}
            if col:
                cols[k] = col
        return Operator2(self.L, cols)

    def scale(self, c):
        return Operator2(self.L, {k: {k2: c * w for k2, w in col.items()}
                                  for k, col in self.cols.items()})

    def is_zero(self):
        return all(not col for col in self.cols.values())


def _psi_fast_cols(L):
    # Psi(e_a x e_b) = - sum Omega^{ab'} (-1)^{|b'||a|} [e_a', a] x [e_b', b]
    cols = {}
    par = L.parities
    pairs = [(al, be, L.omega[al][be]) for al in range(L.dim)
             for be in range(L.dim) if L.omega[al][be]]
    for a in range(L.dim):
        for b in range(L.dim):
            out = {}
            for al, be, w in pairs:
                sgn = -w if (par[be] and par[a]) else w
                for k1, c1 in L.brk(al, a).items():
                    for k2, c2 in L.brk(be, b).items():
                        key = (k1, k2)
                        out[key] = out.get(key, Rat(0)) - sgn * c1 * c2
            col = {k: c for k, c in out.items() if c}
            if col:
                cols[(a, b)] = col
    return cols


def psi_operator(L, force_engine=False):
    """The H operator; the closed form is checked against the diagram engine
    on small algebras and reused directly for the large ones."""
    if force_engine or L.dim <= 9:
        return Operator2.from_diagram(psi_diagram(), L)
    return Operator2(L, _psi_fast_cols(L))


def tau_operator(L):
    return Operator2.from_diagram(tau_diagram(), L)


def casimir_vector(L):
    """Omega as an element of L tensor L."""
    vec = {}
    for a in range(L.dim):
        for b in range(L.dim):
            w = L.omega[a][b]
            if w:
                vec[(a, b)] = w
    return vec


def adjoint_casimir_operator(L):
    """The Casimir acting on the adjoint module, from the bubble diagram."""
    from .diagrams import bubble_on_strand
    cols = operator_from_diagram(bubble_on_strand(), L, 1, 1)
    return cols


_T_CACHE = {}


def extract_t(L):
    """Half the adjoint Casimir eigenvalue on the derived part of L."""
    if L.name in _T_CACHE:
        return _T_CACHE[L.name]
    cols = adjoint_casimir_operator(L)
    # eigenvalue of maximal multiplicity among diagonal blocks
    from collections import Counter
    cnt = Counter()
    mat = [[cols[(a,)].get((b,), Rat(0)) for a in range(L.dim)] for b in range(L.dim)]
    # eigenvalues via minimal polynomial roots with multiplicity by rank
    mp = minimal_polynomial(mat)
    roots = rational_roots(mp)
    best, best_mult = None, -1
    for r in roots:
        m2 = [[mat[i][j] - (r if i == j else 0) for j in range(L.dim)] for i in range(L.dim)]
        mult = L.dim - _rank(m2)
        if mult > best_mult:
            best, best_mult = r, mult
    _T_CACHE[L.name] = best / 2
    return best / 2


def _rank(m):
    return len(rref(m)[1])


# -- univariate polynomial helpers (monic lists, low degree first) --------------


def _poly_trim(p):
    while p and not p[-1]:
        p.pop()
    return p


def _poly_sub(p, q):
    n = max(len(p), len(q))
    out = [(p[i] if i < len(p) else Rat(0)) - (q[i] if i < len(q) else Rat(0))
           for i in range(n)]
    return _poly_trim(out)


def _poly_mul(p, q):
    out = [Rat(0)] * (len(p) + len(q) - 1) if p and q else []
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return _poly_trim(out)


def _poly_divmod(p, q):
    p = list(p)
    out = [Rat(0)] * max(0, len(p) - len(q) + 1)
    while len(p) >= len(q) and p:
        c = p[-1] / q[-1]
        k = len(p) - len(q)
        out[k] = c
        p = _poly_sub(p, _poly_mul([Rat(0)] * k + [c], q))
    return out, p


def _poly_gcd(p, q):
    p, q = list(p), list(q)
    while q:
        _, r = _poly_divmod(p, q)
        p, q = q, r
    if p:
        lead = p[-1]
        p = [c / lead for c in p]
    return p


def _poly_lcm(p, q):
    if not p:
        return list(q)
    if not q:
        return list(p)
    g = _poly_gcd(p, q)
    quo, rem = _poly_divmod(_poly_mul(p, q), g)
    assert not rem
    lead = quo[-1]
    return [c / lead for c in quo]


def minimal_polynomial(mat):
    """Monic minimal polynomial (list of coefficients, low degree first)."""
    n = len(mat)
    mp = [Rat(1)]

    def apply(v):
        return [sum(mat[i][j] * v[j] for j in range(n)) for i in range(n)]

    for start in range(n):
        v = [Rat(int(i == start)) for i in range(n)]
        # is mp already annihilating v?
        acc = [Rat(0)] * n
        w = v[:]
        for c in mp:
            acc = [x + c * y for x, y in zip(acc, w)]
            w = apply(w)
        if not any(acc):
            continue
        krylov = [v[:]]
        w = apply(v)
        while True:
            cols = list(map(list, zip(*krylov)))
            res = solve(cols, w)
            if res["kind"] != "inconsistent":
                coeffs = res["solution"]
                p_v = [-c for c in coeffs] + [Rat(1)]
                mp = _poly_lcm(mp, p_v)
                break
            krylov.append(w[:])
            w = apply(w)
    return mp


def rational_roots(p):
    """All rational roots of an exact polynomial, with multiplicity."""
    from math import gcd
    p = _poly_trim(list(p))
    roots = []
    while p and not p[0]:
        roots.append(Rat(0))
        p = p[1:]
    den = 1
    for c in p:
        den = den * c.denominator // gcd(den, c.denominator)
    ip = [int(c * den) for c in p]
    if not ip:
        return roots
    a0, an = abs(ip[0]), abs(ip[-1])

    def divisors(x):
        out = []
        d = 1
        while d * d <= x:
            if x % d == 0:
                out += [d, x // d]
            d += 1
        return sorted(set(out))

    cands = {Rat(0)} if a0 == 0 else set()
    if a0:
        for num in divisors(a0):
            for dd in divisors(an):
                cands.add(Rat(num, dd))
                cands.add(Rat(-num, dd))
    for r in sorted(cands):
        while p and len(p) > 1 and sum(c * r ** i for i, c in enumerate(p)) == 0:
            p, rem = _poly_divmod(p, [-r, Rat(1)])
            roots.append(r)
    return roots


# -- the Psi spectrum ------------------------------------------------------------


class _CoordSolver:
    """Factored exact solver for repeated x with sum_k x_k basis[k] = rhs."""

    def __init__(self, basis_rows):
        self.basis = [list(r) for r in basis_rows]
        self.n = len(basis_rows)
        self.dim = len(basis_rows[0]) if basis_rows else 0
        aug = [[self.basis[k][i] for k in range(self.n)]
               + [Rat(int(i == j)) for j in range(self.dim)]
               for i in range(self.dim)]
        self.red, self.pivots = rref(aug)

    def coords(self, rhs):
        """Coordinates of rhs in the basis, or None if outside the span."""
        x = [Rat(0)] * self.n
        for r, p in zip(self.red, self.pivots):
            if p >= self.n:
                break
            x[p] = sum(r[self.n + j] * rhs[j] for j in range(self.dim) if rhs[j])
        for i in range(self.dim):
            s = sum(x[k] * self.basis[k][i] for k in range(self.n) if x[k])
            if s != rhs[i]:
                return None
        return x


class PsiSpectrum:
    def __init__(self, t, u, v, triple, minimal_poly, degenerate=False):
        self.t = t
        self.u = u
        self.v = v
        self.triple = triple
        self.minimal_poly = minimal_poly
        self.degenerate = degenerate
        self.quotient_matrix = None

    def tuv(self):
        return (self.t, self.u, self.v)

    def __repr__(self):
        return "PsiSpectrum(t=%s, u=%s, v=%s, triple=%s)" % (
            self.t, self.u, self.v, self.triple)


def _super_symmetric_basis(L):
    """Basis of S^2 L inside L tensor L (coordinate dicts)."""
    par = L.parities
    basis = []
    for a in range(L.dim):
        for b in range(a, L.dim):
            if a == b:
                if par[a]:
                    continue
                basis.append({(a, a): Rat(1)})
            else:
                basis.append({(a, b): Rat(1), (b, a): Rat((-1) ** (par[a] * par[b]))})
    return basis


def _center(L):
    """Basis vectors of the center: x with [x, e_j] = 0 for all j."""
    mat = []
    for j in range(L.dim):
        for k in range(L.dim):
            row = [L.brk(i, j).get(k, Rat(0)) for i in range(L.dim)]
            mat.append(row)
    from .linalg import kernel_basis
    return kernel_basis(mat)


_SPECTRUM_CACHE = {}


def psi_spectrum(L):
    """Eigenvalue data of the H-operator on E = S^2 L minus the Casimir line.

    For gl-like algebras the center lines are removed as well; sl2 returns
    its degenerate single-eigenvalue data.
    """
    if L.name in _SPECTRUM_CACHE:
        return _SPECTRUM_CACHE[L.name]
    spec = _psi_spectrum_uncached(L)
    _SPECTRUM_CACHE[L.name] = spec
    return spec


def _psi_spectrum_uncached(L):
    t = extract_t(L)
    psi = psi_operator(L)
    sym = _super_symmetric_basis(L)
    dim2 = L.dim * L.dim

    def to_vec(d):
        v = [Rat(0)] * dim2
        for (a, b), c in d.items():
            v[a * L.dim + b] = c
        return v

    # subspace to remove: the Casimir line plus center (.) L
    removed = [to_vec(casimir_vector(L))]
    centers = _center(L)
    par = L.parities
    for z in centers:
        zd = {i: c for i, c in enumerate(z) if c}
        for a in range(L.dim):
            vec = {}
            for i, c in zd.items():
                vec[(i, a)] = vec.get((i, a), Rat(0)) + c
                s = Rat((-1) ** (par[i] * par[a]))
                vec[(a, i)] = vec.get((a, i), Rat(0)) + s * c
            removed.append(to_vec(vec))

    # matrix of psi on the S^2 basis, then the induced action on the quotient
    sym_vecs = [to_vec(b) for b in sym]
    space = sym_vecs
    red, pivots = rref(space)
    basis_rows = [red[i] for i in range(len(pivots))]
    # quotient basis: rows of basis_rows independent from removed
    red2, piv2 = rref(removed)
    rem_rows = [red2[i] for i in range(len(piv2))]

    def reduce_vec(v, rows, pivs):
        v = v[:]
        for r, pcol in zip(rows, pivs):
            if v[pcol]:
                f = v[pcol]
                v = [x - f * y for x, y in zip(v, r)]
        return v

    quot_basis = []
    quot_rows, quot_pivs = list(rem_rows), list(piv2)
    for v in basis_rows:
        w = reduce_vec(v, quot_rows, quot_pivs)
        if any(w):
            # normalize and append
            for pcol, x in enumerate(w):
                if x:
                    break
            w = [y / x for y in w]
            quot_rows.append(w)
            quot_pivs.append(pcol)
            quot_basis.append(w)
    # psi action on quotient representatives
    def psi_vec(v):
        vec = {}
        for idx, c in enumerate(v):
            if c:
                vec[(idx // L.dim, idx % L.dim)] = c
        out = psi.apply(vec)
        w = [Rat(0)] * dim2
        for (a, b), c in out.items():
            w[a * L.dim + b] = c
        return w

    # coordinates in the quotient basis, through one factored elimination
    solver = _CoordSolver(quot_basis)
    mat = []
    for v in quot_basis:
        w = reduce_vec(psi_vec(v), rem_rows, piv2)
        sol = solver.coords(w)
        if sol is None:
            raise AlgebraError("H-operator does not preserve E for %s" % L.name)
        mat.append(sol)
    mat = list(map(list, zip(*mat))) if mat else []

    mp = minimal_polynomial(mat) if mat else [Rat(1)]
    roots = rational_roots(mp)
    deg = len(mp) - 1
    if deg > 3:
        raise AlgebraError("H-operator minimal polynomial has degree %d on E" % deg)
    if len(roots) != deg:
        raise AlgebraError("irrational H-spectrum for %s: %s" % (L.name, mp))
    if deg == 1:
        # degenerate case (sl2): E is simple and carries a single eigenvalue
        spec = PsiSpectrum(t, None, None, (roots[0], None, None), mp, degenerate=True)
        spec.quotient_matrix = mat
        return spec
    triple = list(roots)
    if deg == 2:
        triple.append(t - sum(roots))
    a, b, c = triple
    u = -(a * b + b * c + c * a) / 2
    v = (a * b * c) / 2
    if a + b + c != t:
        raise AlgebraError("H-spectrum of %s does not sum to t" % L.name)
    spec = PsiSpectrum(t, u, v, tuple(triple), mp)
    spec.quotient_matrix = mat
    return spec


def char_value(u_sum, L, check_second=True):
    """The scalar with Phi_L(u) = chi . Phi_L(unit tripod).

    On small algebras full proportionality of the three-leg forms is checked;
    on the large ones the ratio is read off the support of the tripod form
    and verified against a second reference, the theta insertion.
    """
    from .diagrams import DiagramSum, tripod_diagram, theta_diagram, insert_lambda
    import random
    trip = DiagramSum.single(tripod_diagram())
    w0 = weight(trip, L)
    if L.dim <= 10:
        w1 = weight(u_sum, L)
        ratio = None
        for k, v in w0.items():
            if v:
                ratio = w1.get(k, Rat(0)) / v
                break
        if ratio is None:
            raise AlgebraError("tripod weight vanishes for %s" % L.name)
        keys = set(w0) | set(w1)
        for k in keys:
            if w1.get(k, Rat(0)) != ratio * w0.get(k, Rat(0)):
                raise AlgebraError("element is not proportional to the tripod"
                                   " under %s" % L.name)
        if check_second:
            th = DiagramSum.single(theta_diagram())
            w_th = weight(th, L)
            if w_th:
                w_uth = weight(insert_lambda(u_sum, th, 0,
                                             check_antisymmetric=False), L)
                if w_uth != ratio * w_th:
                    raise AlgebraError("second-reference check failed for %s"
                                       % L.name)
        return ratio
    # large algebras: exact ratio off a deterministic support slice of the
    # tripod form, with proportionality re-verified there and vanishing
    # spot-checked off the support
    support = sorted(k for k, v in w0.items() if v)
    step = max(1, len(support) // 40)
    probe = support[::step][:40]
    ratio = None
    for tup in probe:
        val = weight(u_sum, L, inputs=[{a: Rat(1)} for a in tup])
        r = val / w0[tup]
        if ratio is None:
            ratio = r
        elif r != ratio:
            raise AlgebraError("element is not proportional to the tripod"
                               " under %s" % L.name)
    rng = random.Random(1729 + L.dim)
    supp = set(support)
    for _ in range(30):
        tup = tuple(rng.randrange(L.dim) for _ in range(3))
        if tup in supp:
            continue
        if weight(u_sum, L, inputs=[{a: Rat(1)} for a in tup]) != 0:
            raise AlgebraError("element is not proportional to the tripod"
                               " under %s" % L.name)
    return ratio


def interpolate_char(u_sum, samples):
    """The D(2,1;alpha) family character as a polynomial in sigma2, sigma3.

    Solves the exact linear system on the homogeneous monomial basis from
    char values at the sampled alphas; one extra sample is held out.
    """
    from .superalgebras import build_algebra
    from .linalg import solve
    ring = RINGS["Q[s2,s3]"]
    degs = {k.diagram.degree() - 2 for k in u_sum.terms}
    if len(degs) != 1:
        raise AlgebraError("inhomogeneous element")
    n = degs.pop()
    monos = ring.monomials_of_degree(n)
    if len(samples) < len(monos) + 1:
        raise AlgebraError("need %d samples plus a held-out one" % len(monos))
    vals = []
    for al in samples:
        al = Rat(al)
        if al in (Rat(0), Rat(-1)):
            raise AlgebraError("degenerate alpha sample")
        L = build_algebra("d21", al)
        chi = char_value(u_sum, L, check_second=False)
        s2 = -(1 + al + al * al)
        s3 = -al * (1 + al)
        vals.append((s2, s3, chi))
    rows = [[Rat(s2) ** e[0] * Rat(s3) ** e[1] for e in monos] for s2, s3, _ in vals[:-1]]
    rhs = [chi for _, _, chi in vals[:-1]]
    if not monos:
        if any(chi for _, _, chi in vals):
            raise AlgebraError("degree admits no monomials but the character is nonzero")
        return ring.zero()
    res = solve(rows, rhs)
    if res["kind"] != "unique":
        raise AlgebraError("singular sample system (%s)" % res["kind"])
    poly = ring.zero()
    for e, c in zip(monos, res["solution"]):
        poly = poly + ring.monomial(e, c)
    s2, s3, chi = vals[-1]
    if poly.evaluate({"s2": s2, "s3": s3}) != chi:
        raise AlgebraError("held-out sample disagrees with the interpolation")
    return poly


def psi_cubic_holds(L, spec=None):
    """Exact matrix check of the cubic identity on E."""
    if spec is None:
        spec = psi_spectrum(L)
    if spec.degenerate:
        raise AlgebraError("degenerate spectrum has no cubic normal form")
    m = spec.quotient_matrix
    n = len(m)
    t, u, v = spec.t, spec.u, spec.v

    def matmul(a, b):
        return [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)]
                for i in range(n)]

    m2 = matmul(m, m)
    m3 = matmul(m2, m)
    for i in range(n):
        for j in range(n):
            lhs = m3[i][j]
            rhs = t * m2[i][j] + 2 * u * m[i][j] + (2 * v if i == j else 0)
            if lhs != rhs:
                return False
    return True

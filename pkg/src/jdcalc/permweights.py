"""Permutation-model weight systems.

Phi_gl resolves every trivalent vertex into its two strand pairings and reads
off a permutation of the legs with a power of the circle variable D per closed
strand; Phi_osp is the unoriented analogue where every internal edge also
carries a pass/turnback resolution.  Both land in the free module on
permutations with coefficients in Q[D], and both are contracted against
matrix models through supertraces of cycle products.
"""

from fractions import Fraction
import itertools

from .exactalg import RINGS, Poly
from .diagrams import (DiagramSum, JacobiDiagram, DiagramError, canonicalize,
                       FrozenDiagram, tripod_diagram)

Rat = Fraction
QD = RINGS["Q[D]"]


def _dpoly(c=Rat(1), k=0):
    return QD.monomial((k,), c)


# -- permutations -----------------------------------------------------------

def perm_mul(a, b):
    """a after b."""
    return tuple(a[b[i]] for i in range(len(a)))


def perm_inv(a):
    out = [0] * len(a)
    for i, j in enumerate(a):
        out[j] = i
    return tuple(out)


def perm_cycles(a):
    seen = [False] * len(a)
    cycles = []
    for i in range(len(a)):
        if seen[i]:
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = a[j]
        cycles.append(tuple(cyc))
    return cycles


def cycles_to_perm(n, cycles):
    out = list(range(n))
    for cyc in cycles:
        for k, x in enumerate(cyc):
            out[x - 1] = cyc[(k + 1) % len(cyc)] - 1
    return tuple(out)


def perm_to_string(a):
    parts = []
    for cyc in perm_cycles(a):
        if len(cyc) == 1:
            continue
        parts.append("(" + ",".join(str(x + 1) for x in cyc) + ")")
    return "".join(parts) if parts else "()"


class PermPoly:
    """Element of the free Q[D] module on permutations of [n]."""

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {}
        if terms:
            for sigma, poly in terms.items():
                self.add(sigma, poly)

    def add(self, sigma, poly):
        if isinstance(poly, (int, Rat)):
            poly = _dpoly(Rat(poly))
        cur = self.terms.get(sigma)
        val = poly if cur is None else cur + poly
        if val.is_zero():
            self.terms.pop(sigma, None)
        else:
            self.terms[sigma] = val
        return self

    def __add__(self, other):
        out = PermPoly(self.n)
        for s, p in self.terms.items():
            out.add(s, p)
        for s, p in other.terms.items():
            out.add(s, p)
        return out

    def __sub__(self, other):
        return self + other.scale(Rat(-1))

    def scale(self, c):
        out = PermPoly(self.n)
        for s, p in self.terms.items():
            out.add(s, p.scale(c) if isinstance(c, (int, Rat)) else p * c)
        return out

    def scale_poly(self, poly):
        out = PermPoly(self.n)
        for s, p in self.terms.items():
            out.add(s, p * poly)
        return out

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not self.terms and not other.terms:
            return True
        return self.n == other.n and self.terms == other.terms

    def map_basis(self, fn):
        """fn(sigma) -> PermPoly; extended Q[D]-linearly."""
        out = PermPoly(None)
        for s, p in self.terms.items():
            piece = fn(s)
            if out.n is None:
                out.n = piece.n
            for s2, p2 in piece.terms.items():
                out.add(s2, p * p2)
        if out.n is None:
            out.n = self.n
        return out

    def subs_delta(self, value):
        """Evaluate the coefficients at D = value (a Fraction)."""
        out = {}
        for s, p in self.terms.items():
            v = p.evaluate({"D": value})
            if v:
                out[s] = out.get(s, Rat(0)) + v
        return out

    def format(self):
        lines = []
        for s in sorted(self.terms):
            p = self.terms[s]
            for (k,), c in sorted(p.terms.items()):
                lines.append("D^%d * %s : %s/%s" % (k, perm_to_string(s),
                                                    c.numerator, c.denominator))
        return "\n".join(lines)


# -- the gl state sum ----------------------------------------------------------

def phi_gl(K):
    """Vertex-resolution state sum into permutations of the legs.

    Accepts a DiagramSum or a single diagram; skeleton circles are not
    allowed (those live on the permutation side already).
    """
    n0 = len(K.legs) if isinstance(K, JacobiDiagram) else 0
    if isinstance(K, JacobiDiagram):
        K = DiagramSum.single(K)
    out = None
    for key, coeff in K.terms.items():
        d = key.diagram
        if d.circles:
            raise DiagramError("phi_gl expects diagrams without skeleton circles")
        piece = _phi_gl_diagram(d)
        piece = piece.scale(coeff)
        out = piece if out is None else out + piece
    return out if out is not None else PermPoly(n0)


def _phi_gl_diagram(d):
    n = len(d.legs)
    out = PermPoly(n)
    V = len(d.vertices)
    # ports: (h, 'A') inward flow, (h, 'B') outward flow
    base = {}
    for h, p in d.pairing.items():
        base[(h, "B")] = (p, "A")
        base[(p, "B")] = (h, "A")
    for bits in range(1 << V):
        conn = dict(base)
        sign = 1
        for j, v in enumerate(d.vertices):
            a, b, c = v
            if (bits >> j) & 1:
                pairs = [(a, c), (c, b), (b, a)]
                sign = -sign
            else:
                pairs = [(a, b), (b, c), (c, a)]
            for x, y in pairs:
                conn[(x, "A")] = (y, "B")
        # trace strands
        perm = [None] * n
        loops = 0
        visited = set()
        leg_index = {h: i for i, h in enumerate(d.legs)}
        for i, h in enumerate(d.legs):
            port = (h, "B")
            cur = conn[port]
            while cur[0] not in leg_index or cur[1] != "A":
                cur = conn[cur]
            perm[i] = leg_index[cur[0]]
        for h in d.pairing:
            for side in ("A", "B"):
                port = (h, side)
                if port in visited or h in leg_index:
                    continue
                # follow the loop through conn
                cur = port
                loop_ports = []
                closed = True
                while cur not in visited:
                    visited.add(cur)
                    loop_ports.append(cur)
                    if cur not in conn:
                        closed = False
                        break
                    nxt = conn[cur]
                    if nxt[0] in leg_index:
                        closed = False
                        # mark the whole open path visited through legs
                        break
                    cur = nxt
                if closed and loop_ports and cur == port:
                    loops += 1
        out.add(tuple(perm), _dpoly(Rat(sign), loops))
    if d.free_loops:
        out = out.scale_poly(_dpoly(Rat(1), 2 * d.free_loops))
    return out


# -- the osp state sum ----------------------------------------------------------

def phi_osp(K):
    """Unoriented state sum: vertex resolutions plus edge pass/turnback."""
    if isinstance(K, JacobiDiagram):
        K = DiagramSum.single(K)
    out = None
    for key, coeff in K.terms.items():
        d = key.diagram
        if d.circles:
            raise DiagramError("phi_osp expects diagrams without skeleton circles")
        piece = _phi_osp_diagram(d)
        piece = piece.scale(coeff)
        out = piece if out is None else out + piece
    return out if out is not None else PermPoly(0)


def _phi_osp_diagram(d):
    # Local rules from the so Casimir delta_il delta_jk - delta_ik delta_jl:
    # internal edges resolve into a crossing (+) or a parallel band (-);
    # vertices carry (cyclic - anticyclic)/2; strands between legs are caps
    # worth 1/2; lines are unoriented and a cycle read against the grain of a
    # leg picks up the transpose sign.
    n = len(d.legs)
    out = PermPoly(n)
    V = len(d.vertices)
    seats = d.seats()
    leg_index = {h: i for i, h in enumerate(d.legs)}
    internal_edges = []
    mixed_edges = []
    cap_edges = []
    seen = set()
    for h, p in d.pairing.items():
        e = (min(h, p), max(h, p))
        if e in seen:
            continue
        seen.add(e)
        if seats[h][0] == "vx" and seats[p][0] == "vx":
            internal_edges.append(e)
        elif seats[h][0] == "leg" and seats[p][0] == "leg":
            cap_edges.append(e)
        else:
            mixed_edges.append(e)
    E = len(internal_edges)
    scale = Rat(1, 2) ** (V + len(cap_edges))
    for vbits in range(1 << V):
        vsign = 1
        vconn = []
        for j, v in enumerate(d.vertices):
            a, b, c = v
            if (vbits >> j) & 1:
                vsign = -vsign
                vconn.append([((a, 2), (c, 1)), ((c, 2), (b, 1)), ((b, 2), (a, 1))])
            else:
                vconn.append([((a, 2), (b, 1)), ((b, 2), (c, 1)), ((c, 2), (a, 1))])
        for ebits in range(1 << E):
            sign = vsign
            adj = {}

            def link(x, y):
                adj.setdefault(x, []).append(y)
                adj.setdefault(y, []).append(x)

            for pairs in vconn:
                for x, y in pairs:
                    link(x, y)
            for k, (h, p) in enumerate(internal_edges):
                if (ebits >> k) & 1:
                    sign = -sign
                    link((h, 1), (p, 1))
                    link((h, 2), (p, 2))
                else:
                    link((h, 1), (p, 2))
                    link((h, 2), (p, 1))
            for (h, p) in mixed_edges:
                # leg element fed straight into the vertex slot
                link((h, 1), (p, 1))
                link((h, 2), (p, 2))
            for (h, p) in cap_edges:
                link((h, 1), (p, 2))
                link((h, 2), (p, 1))
            perm, loops, orient_sign, ok = _trace_osp(d, adj, leg_index)
            if not ok:
                raise DiagramError("osp tracing failed")
            out.add(tuple(perm), _dpoly(scale * sign * orient_sign, loops))
    if d.free_loops:
        # a vertex-free thin circle is the superdimension of the algebra
        extra = QD.monomial((2,), Rat(1, 2)) + QD.monomial((1,), Rat(-1, 2))
        mult = extra ** d.free_loops
        out = out.scale_poly(mult)
    return out


def _trace_osp(d, adj, leg_index):
    # Each port appears in exactly one adjacency pair except leg ports (one
    # link each).  Closed curves contribute loops; open curves join leg ports.
    for v in adj.values():
        if len(v) > 2:
            return None, None, None, False
    # build arcs between leg ports
    arcs = {}
    loops = 0
    visited = set()
    for start in list(adj):
        if start in visited:
            continue
        h0 = start[0]
        if h0 in leg_index:
            # walk from a leg port to the other end
            if len(adj[start]) != 1:
                return None, None, None, False
            prev = start
            visited.add(start)
            cur = adj[start][0]
            while cur[0] not in leg_index:
                visited.add(cur)
                nxts = [x for x in adj[cur] if x != prev]
                if len(nxts) != 1:
                    return None, None, None, False
                prev, cur = cur, nxts[0]
            visited.add(cur)
            arcs[start] = cur
            arcs[cur] = start
    for start in list(adj):
        if start in visited or start[0] in leg_index:
            continue
        # closed curve
        prev = None
        cur = start
        while cur not in visited:
            visited.add(cur)
            nxts = [x for x in adj[cur] if x != prev]
            if not nxts:
                return None, None, None, False
            prev, cur = cur, nxts[0]
        loops += 1
    # assemble leg cycles: port 1 is the row line, port 2 the column line;
    # moving i -> j joins i's column to j's row, so arriving on port 2 means
    # the leg is read against the grain and contributes the transpose sign
    n = len(d.legs)
    perm = [None] * n
    sign = 1
    unseen = set(range(n))
    while unseen:
        i0 = min(unseen)
        i = i0
        depart = 2
        while True:
            unseen.discard(i)
            port = (d.legs[i], depart)
            tgt = arcs[port]
            j = leg_index[tgt[0]]
            if tgt[1] == 2:
                sign = -sign
                depart = 1
            else:
                depart = 2
            perm[i] = j
            i = j
            if i == i0:
                break
    return perm, loops, sign, True


# -- evaluation against matrix models --------------------------------------------

def perm_apply(P, L, inputs):
    """Contract a PermPoly against algebra elements via supertrace cycles."""
    if L.matrix_model is None:
        raise ValueError("algebra %s has no standard matrix model" % L.name)
    mats = []
    for x in inputs:
        m = None
        for i, c in x.items():
            mi = L.matrix_model[i]
            if m is None:
                m = [[c * v for v in row] for row in mi]
            else:
                m = [[a + c * v for a, v in zip(ra, rb)]
                     for ra, rb in zip(m, mi)]
        mats.append(m)
    size = len(L.matrix_model[0])
    sdimE = Rat(sum(1 if p == 0 else -1 for p in L.v_parities))
    total = Rat(0)
    for sigma, poly in P.terms.items():
        val = poly.evaluate({"D": sdimE})
        if not val:
            continue
        prod_val = Rat(1)
        for cyc in perm_cycles(sigma):
            m = None
            for i in cyc:
                m = mats[i] if m is None else _mm(m, mats[i])
            prod_val *= sum(((-1) ** L.v_parities[r]) * m[r][r] for r in range(size))
        total += val * prod_val
    return total


def _mm(a, b):
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


# -- projections -------------------------------------------------------------------

def project_delta0_and_sigma_prime(P, mode="both"):
    out = PermPoly(P.n)
    for s, p in P.terms.items():
        if mode in ("mod sigma'", "both") and any(s[i] == i for i in range(P.n)):
            continue
        if mode in ("delta=0", "both"):
            c = p.terms.get((0,))
            if not c:
                continue
            out.add(s, _dpoly(c, 0))
        else:
            out.add(s, p)
    return out


def inversion_symmetrize(P):
    """sigma -> (sigma + (-1)^n sigma^{-1}) / 2."""
    sgn = Rat(-1) ** (P.n % 2)
    out = PermPoly(P.n)
    for s, p in P.terms.items():
        out.add(s, p.scale(Rat(1, 2)))
        out.add(perm_inv(s), p.scale(Rat(1, 2) * sgn))
    return out


# -- composition in the permutation category ----------------------------------------

def sigma_compose(P, p, q, Q, r):
    """Compose P in Sigma_{p+q} = D_gl([p],[q]) with Q in Sigma_{q+r}.

    Points of P: sources 0..p-1, targets p..p+q-1; points of Q: sources
    0..q-1, targets q..q+r-1.  Gluing identifies P's target j with Q's
    source j; trapped orbits contribute D each.
    """
    out = PermPoly(p + r)
    for sP, cP in P.terms.items():
        for sQ, cQ in Q.terms.items():
            perm, loops = _sigma_glue(sP, p, q, sQ, r)
            out.add(perm, cP * cQ * _dpoly(Rat(1), loops))
    return out


def _sigma_glue(sP, p, q, sQ, r):
    # Walk from each free point, alternating arcs of sP and sQ across the
    # interface (P target p+j is identified with Q source j).  Interface
    # passages are directed states (j, next-side); each leg carries two of
    # them (the double line of the welded edge), and state orbits never
    # reached from a free point are closed circles.
    perm = [None] * (p + r)
    reached = set()
    for start in range(p + r):
        if start < p:
            cur, side = sP[start], "P"
        else:
            cur, side = sQ[q + (start - p)], "Q"
        while True:
            if side == "P":
                if cur < p:
                    perm[start] = cur
                    break
                reached.add((cur - p, "Q"))
                cur, side = sQ[cur - p], "Q"
            else:
                if cur >= q:
                    perm[start] = p + (cur - q)
                    break
                reached.add((cur, "P"))
                cur, side = sP[p + cur], "P"
    loops = 0
    states = {(j, s) for j in range(q) for s in ("P", "Q")} - reached
    while states:
        j0, s0 = next(iter(states))
        loops += 1
        j, s = j0, s0
        while True:
            states.discard((j, s))
            if s == "Q":
                cur = sQ[j]
                if cur >= q:
                    raise DiagramError("trapped orbit escaped through a free leg")
                j, s = cur, "P"
            else:
                cur = sP[p + j]
                if cur < p:
                    raise DiagramError("trapped orbit escaped through a free leg")
                j, s = cur - p, "Q"
            if (j, s) == (j0, s0):
                break
    return tuple(perm), loops


# -- Sigma6 machinery --------------------------------------------------------------

def snowflake_diagram():
    """Three two-leaf cherries on a central vertex: the G-equivariant tree."""
    legs = [0, 1, 2, 3, 4, 5]
    vx = [(6, 7, 8),      # center: to cherry 1, 2, 3
          (9, 10, 11),    # cherry 1: stem, leaf 1, leaf 2
          (12, 13, 14),   # cherry 2: stem, leaf 3, leaf 4
          (15, 16, 17)]   # cherry 3: stem, leaf 5, leaf 6
    pairing = {}

    def pair(a, b):
        pairing[a] = b
        pairing[b] = a

    pair(6, 9)
    pair(7, 12)
    pair(8, 15)
    pair(10, 0)
    pair(11, 1)
    pair(13, 2)
    pair(14, 3)
    pair(16, 4)
    pair(17, 5)
    return JacobiDiagram(legs, vx, pairing)


def group_G6():
    """The order 48 subgroup of S6 preserving {{1,2},{3,4},{5,6}}."""
    blocks = [{0, 1}, {2, 3}, {4, 5}]
    out = []
    for s in itertools.permutations(range(6)):
        ok = True
        for b in blocks:
            if {s[i] for i in b} not in blocks:
                ok = False
                break
        if ok:
            out.append(tuple(s))
    assert len(out) == 48
    return out


def epsilon_G6():
    """The sign character of G read off the snowflake diagram."""
    base = snowflake_diagram()
    c0, s0 = canonicalize(base)
    k0 = FrozenDiagram(c0)
    eps = {}
    for g in group_G6():
        d = base.relabeled(g)
        c1, s1 = canonicalize(d)
        if FrozenDiagram(c1) != k0 or s1 == 0:
            raise DiagramError("snowflake is not G-equivariant")
        eps[g] = s1 * s0
    return eps


def conj_action(g, sigma):
    """g sigma g^{-1}."""
    return perm_mul(perm_mul(g, sigma), perm_inv(g))


def antisymmetrize_G6(P):
    """(1/48) sum over G of eps(g) g . P, acting by conjugation."""
    if P.n != 6:
        raise DiagramError("the G-symmetrization needs six legs")
    eps = epsilon_G6()
    out = PermPoly(6)
    for g, e in eps.items():
        for s, p in P.terms.items():
            out.add(conj_action(g, s), p.scale(Rat(e, 48)))
    return out


def y_generator(cycles):
    """f(y) = sum_g eps(g) (<g y g^-1> + <g y^-1 g^-1>)."""
    eps = epsilon_G6()
    y = cycles_to_perm(6, cycles)
    out = PermPoly(6)
    for g, e in eps.items():
        out.add(conj_action(g, y), _dpoly(Rat(e)))
        out.add(conj_action(g, perm_inv(y)), _dpoly(Rat(e)))
    return out


def y_basis():
    return [y_generator([(1, 2, 3, 4, 5, 6)]),
            y_generator([(1, 2, 3, 5, 4, 6)]),
            y_generator([(1, 3, 2, 5, 4, 6)]),
            y_generator([(1, 3), (2, 5), (4, 6)])]


def sigma6_invariant_subspace():
    """Basis permutations and the constrained subspace of Sigma6/Sigma6'.

    Returns (basis_list, coefficient_vectors) where the subspace is the
    (G,eps)-invariant, inversion-symmetric span of fixed-point-free
    permutations with an odd number of cycles.
    """
    from .linalg import kernel_basis
    basis = []
    for s in itertools.permutations(range(6)):
        if any(s[i] == i for i in range(6)):
            continue
        if len(perm_cycles(s)) % 2 == 1:
            basis.append(tuple(s))
    basis.sort()
    index = {s: i for i, s in enumerate(basis)}
    rows = []
    eps = epsilon_G6()
    gens = [cycles_to_perm(6, [(1, 2)]), cycles_to_perm(6, [(3, 4)]),
            cycles_to_perm(6, [(5, 6)]), cycles_to_perm(6, [(1, 3), (2, 4)]),
            cycles_to_perm(6, [(3, 5), (4, 6)])]
    for g in gens:
        e = eps[g]
        # v = eps(g) conj_g(v): rows of (eps(g) conj_g - 1)
        for s in basis:
            row = [Rat(0)] * len(basis)
            t = conj_action(g, s)
            row[index[t]] += Rat(e)
            row[index[s]] -= Rat(1)
            if any(row):
                rows.append(row)
    for s in basis:
        row = [Rat(0)] * len(basis)
        row[index[perm_inv(s)]] += Rat(1)
        row[index[s]] -= Rat(1)
        if any(row):
            rows.append(row)
    return basis, kernel_basis(rows)


# -- gluing with fixed morphisms -----------------------------------------------------

def d1_diagram():
    """Three cherries: morphism [6] -> [3] collapsing the pairs.

    Cherry orientations are pinned by D1 . D2 = 8 t^3: composing with the
    snowflake turns each cherry pair into a two-gon worth +2t.
    """
    legs = list(range(9))  # sources 0..5, targets 6..8
    vx = [(9, 11, 10), (12, 14, 13), (15, 17, 16)]
    pairing = {}

    def pair(a, b):
        pairing[a] = b
        pairing[b] = a

    pair(9, 0)
    pair(10, 1)
    pair(11, 6)
    pair(12, 2)
    pair(13, 3)
    pair(14, 7)
    pair(15, 4)
    pair(16, 5)
    pair(17, 8)
    return JacobiDiagram(legs, vx, pairing)


def d4_diagram():
    """Three strands and a tripod swallowing legs 4, 5, 6: [6] -> [3]."""
    legs = list(range(9))
    vx = [(9, 10, 11)]
    pairing = {}

    def pair(a, b):
        pairing[a] = b
        pairing[b] = a

    pair(0, 6)
    pair(1, 7)
    pair(2, 8)
    pair(9, 3)
    pair(10, 4)
    pair(11, 5)
    return JacobiDiagram(legs, vx, pairing)


def glue_perm(P, which):
    """Compose a PermPoly (as [0] -> [n]) with D1, D4, or a leg deletion."""
    if which == "D1":
        Q = phi_gl(d1_diagram())
        return sigma_compose(P, 0, 6, Q, 3)
    if which == "D4":
        Q = phi_gl(d4_diagram())
        return sigma_compose(P, 0, 6, Q, 3)
    if isinstance(which, tuple) and which[0] == "f":
        return delete_leg(P, which[1])
    raise DiagramError("unknown gluing %r" % (which,))


def delete_leg(P, i):
    """<sigma> -> <sigma minus leg i> with a D factor on fixed points."""
    i -= 1
    out = PermPoly(P.n - 1)
    for s, p in P.terms.items():
        if s[i] == i:
            mu = _drop(s, i)
            out.add(mu, p * _dpoly(Rat(1), 1))
        else:
            lst = list(s)
            lst[perm_inv(s)[i]] = s[i]
            mu = _drop(tuple(lst), i)
            out.add(mu, p)
    return out


def _drop(s, i):
    idx = [j for j in range(len(s)) if j != i]
    return tuple(idx.index(s[j]) for j in idx)


def f6_map(P):
    """The composite f_6: delete leg 6, kill D, kill fixed-point terms."""
    # the D-kill applies to the ambient Sigma_6 class first
    P0 = PermPoly(P.n)
    for s, p in P.terms.items():
        c = p.terms.get((0,))
        if c:
            P0.add(s, _dpoly(c))
    dropped = delete_leg(P0, 6)
    out = PermPoly(dropped.n)
    for s, p in dropped.terms.items():
        if any(s[i] == i for i in range(dropped.n)):
            continue
        c = p.terms.get((0,))
        if c:
            out.add(s, _dpoly(c))
    return out


# -- characters from the permutation model -------------------------------------------

def char_from_perm(u_sum, family):
    """The sl or osp character of a three-legged algebra element.

    The state sum of u must be a Q[D] multiple of the antisymmetric tripod
    class; the multiple is homogenized into the family's character ring.
    """
    if family == "sl":
        P = phi_gl(u_sum)
        ring = RINGS["Q[d,b]"]
    elif family == "osp":
        P = phi_osp(u_sum)
        ring = RINGS["Q[d,a]"]
    else:
        raise ValueError("family must be sl or osp")
    c123 = cycles_to_perm(3, [(1, 2, 3)])
    c132 = cycles_to_perm(3, [(1, 3, 2)])
    poly = P.terms.get(c123, QD.zero())
    neg = P.terms.get(c132, QD.zero())
    if not (poly + neg).is_zero() or len(P.terms) > 2:
        raise DiagramError("element is not proportional to the tripod class")
    if poly.is_zero() and P.terms:
        raise DiagramError("element is not proportional to the tripod class")
    if family == "osp":
        # the unit tripod carries coefficient 1/2 in the unoriented model
        poly = poly.scale(Rat(2))
    # degree of u as an element of the three-legged algebra
    degs = {k.diagram.degree() - 2 for k in u_sum.terms}
    if len(degs) != 1:
        raise DiagramError("inhomogeneous element")
    n = degs.pop()
    out = ring.zero()
    for (k,), c in poly.terms.items():
        rest = n - k
        if rest < 0:
            raise DiagramError("coefficient degree exceeds the element degree")
        if family == "sl":
            if rest % 2:
                raise DiagramError("sl character needs beta-even homogenization")
            out = out + ring.monomial((k, rest // 2), c)
        else:
            out = out + ring.monomial((k, rest), c)
    return out

"""Trivalent diagram core.

A diagram is a finite graph whose internal vertices are trivalent and carry a
cyclic order of their three half-edges, with numbered univalent legs and
optional skeleton circles (cyclically ordered attachment points).  Linear
combinations are stored on canonical representatives; canonicalization tracks
the antisymmetry sign, so a diagram with an odd self-symmetry collapses to 0.

Half-edges are opaque integers.  Seats: each half-edge sits in exactly one
leg, one vertex slot, or one circle slot, and the pairing is a perfect
matching on half-edges (an orbit of the pairing is an edge).
"""

from fractions import Fraction

Rat = Fraction


class DiagramError(ValueError):
    pass


class JacobiDiagram:
    __slots__ = ("legs", "vertices", "circles", "pairing", "free_loops", "_canon")

    def __init__(self, legs, vertices, pairing, circles=(), free_loops=0):
        self.legs = tuple(legs)
        self.vertices = tuple(tuple(v) for v in vertices)
        self.circles = tuple(tuple(c) for c in circles)
        self.pairing = dict(pairing)
        self.free_loops = free_loops
        self._canon = None
        self._validate()

    # -- well-formedness ---------------------------------------------------

    def _validate(self):
        seats = {}
        for i, h in enumerate(self.legs):
            if h in seats:
                raise DiagramError("half-edge %r used twice" % (h,))
            seats[h] = ("leg", i)
        for j, v in enumerate(self.vertices):
            if len(v) != 3:
                raise DiagramError("vertex %d is not trivalent" % j)
            for k, h in enumerate(v):
                if h in seats:
                    raise DiagramError("half-edge %r used twice" % (h,))
                seats[h] = ("vx", j, k)
        for j, c in enumerate(self.circles):
            for k, h in enumerate(c):
                if h in seats:
                    raise DiagramError("half-edge %r used twice" % (h,))
                seats[h] = ("circ", j, k)
        if set(self.pairing) != set(seats):
            raise DiagramError("pairing does not cover the half-edges exactly")
        for h, p in self.pairing.items():
            if p == h or self.pairing.get(p) != h:
                raise DiagramError("pairing is not a fixed-point-free involution")

    def seats(self):
        seats = {}
        for i, h in enumerate(self.legs):
            seats[h] = ("leg", i)
        for j, v in enumerate(self.vertices):
            for k, h in enumerate(v):
                seats[h] = ("vx", j, k)
        for j, c in enumerate(self.circles):
            for k, h in enumerate(c):
                seats[h] = ("circ", j, k)
        return seats

    # -- gradings ------------------------------------------------------------

    def n_edges(self):
        # skeleton arcs count one edge per attachment (cyclically)
        return len(self.pairing) // 2 + sum(len(c) for c in self.circles) + self.free_loops

    def n_trivalent(self):
        # circle attachment points are trivalent vertices of the graph
        return len(self.vertices) + sum(len(c) for c in self.circles)

    def degree(self):
        """a - s, with each vertex-free circle conventionally of degree 0."""
        return self.n_edges() - self.n_trivalent() - self.free_loops

    def loops(self):
        """First Betti number of the underlying graph."""
        parent = {}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x, y):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[rx] = ry

        nodes = [("leg", i) for i in range(len(self.legs))]
        nodes += [("vx", j) for j in range(len(self.vertices))]
        nodes += [("circ", j, k) for j, c in enumerate(self.circles) for k in range(len(c))]
        for nd in nodes:
            parent[nd] = nd
        seats = self.seats()

        def node_of(h):
            s = seats[h]
            if s[0] == "leg":
                return ("leg", s[1])
            if s[0] == "vx":
                return ("vx", s[1])
            return ("circ", s[1], s[2])

        edges = 0
        seen = set()
        for h, p in self.pairing.items():
            if h in seen or p in seen:
                continue
            seen.add(h)
            seen.add(p)
            union(node_of(h), node_of(p))
            edges += 1
        for j, c in enumerate(self.circles):
            for k in range(len(c)):
                union(("circ", j, k), ("circ", j, (k + 1) % len(c)))
                edges += 1
        comps = len({find(n) for n in nodes}) if nodes else 0
        verts = len(nodes)
        empty_circles = sum(1 for c in self.circles if not c)
        return edges - verts + comps + self.free_loops + empty_circles

    def n_legs(self):
        return len(self.legs)

    def relabeled(self, leg_perm):
        """New diagram with leg i sent to position leg_perm[i] (0-based)."""
        new_legs = [None] * len(self.legs)
        for i, h in enumerate(self.legs):
            new_legs[leg_perm[i]] = h
        return JacobiDiagram(new_legs, self.vertices, self.pairing,
                             self.circles, self.free_loops)

    def __repr__(self):
        return "JacobiDiagram(legs=%d, vx=%d, circ=%d, loops=%d)" % (
            len(self.legs), len(self.vertices), len(self.circles), self.free_loops)


# -- canonical form ----------------------------------------------------------

def canonicalize(diagram):
    """Minimal-code canonical form.

    Returns (canonical_diagram, coeff) with coeff in {-1, 0, +1}: the input
    equals coeff times the canonical representative in the AS quotient, and
    coeff is 0 when some automorphism reverses an odd number of vertices.
    """
    seats = diagram.seats()
    pairing = diagram.pairing
    best = {"code": None, "signs": set(), "build": None}

    n_legs = len(diagram.legs)
    all_halves = set(pairing)

    def run(state):
        # state: (num, queue, code, sign, vx orientation map, circle order map)
        num, queue, code, sign, vx_or, circ_disc = state
        while True:
            if best["code"] is not None and tuple(code) > best["code"][:len(code)]:
                return
            if not queue:
                if len(num) == len(all_halves):
                    finish(num, code, sign, vx_or, circ_disc)
                    return
                # seed a new component: undiscovered circles first, then vertices
                for j, c in enumerate(diagram.circles):
                    if j in circ_disc or not c:
                        continue
                    for s in range(len(c)):
                        num2, queue2, code2 = dict(num), [], list(code)
                        circ2 = dict(circ_disc)
                        circ2[j] = len(circ2)
                        code2.append((8, len(c)))
                        for k in range(len(c)):
                            h = c[(s + k) % len(c)]
                            num2[h] = len(num2)
                            queue2.append(h)
                        run((num2, queue2, code2, sign, dict(vx_or), circ2))
                for j, v in enumerate(diagram.vertices):
                    if j in vx_or or any(h in num for h in v):
                        continue
                    for entry in range(3):
                        for flip in (1, -1):
                            e0 = v[entry]
                            x, y = v[(entry + 1) % 3], v[(entry + 2) % 3]
                            a, b = (x, y) if flip == 1 else (y, x)
                            num2, queue2, code2 = dict(num), [], list(code)
                            vx2 = dict(vx_or)
                            vx2[j] = (len(vx2), (e0, a, b))
                            code2.append((9,))
                            for h in (e0, a, b):
                                num2[h] = len(num2)
                                queue2.append(h)
                            run((num2, queue2, code2, sign * flip, vx2, dict(circ_disc)))
                return
            h = queue.pop(0)
            p = pairing[h]
            if p in num:
                code.append((1, num[p]))
                continue
            seat = seats[p]
            if seat[0] == "circ":
                j, k = seat[1], seat[2]
                c = diagram.circles[j]
                circ2 = dict(circ_disc)
                circ2[j] = len(circ2)
                code.append((2, len(c)))
                num2 = dict(num)
                queue2 = list(queue)
                for step in range(len(c)):
                    hh = c[(k + step) % len(c)]
                    num2[hh] = len(num2)
                    if step > 0:
                        queue2.append(hh)
                run((num2, queue2, code, sign, dict(vx_or), circ2))
                return
            # an undiscovered vertex (discovered ones have all slots numbered)
            j = seat[1]
            v = diagram.vertices[j]
            idx = v.index(p)
            x, y = v[(idx + 1) % 3], v[(idx + 2) % 3]
            for flip in (1, -1):
                a, b = (x, y) if flip == 1 else (y, x)
                num2 = dict(num)
                queue2 = list(queue)
                code2 = list(code)
                vx2 = dict(vx_or)
                vx2[j] = (len(vx2), (p, a, b))
                code2.append((3,))
                for hh in (p, a, b):
                    num2[hh] = len(num2)
                queue2.append(a)
                queue2.append(b)
                run((num2, queue2, code2, sign * flip, vx2, dict(circ_disc)))
            return

    def finish(num, code, sign, vx_or, circ_disc):
        full = tuple(code) + ((7, diagram.free_loops),)
        if best["code"] is None or full < best["code"]:
            best["code"] = full
            best["signs"] = {sign}
            best["build"] = (dict(num), dict(vx_or), dict(circ_disc))
        elif full == best["code"]:
            best["signs"].add(sign)

    num0 = {}
    queue0 = []
    for h in diagram.legs:
        num0[h] = len(num0)
        queue0.append(h)
    run((num0, queue0, [], 1, {}, {}))

    num, vx_or, circ_disc = best["build"]
    legs = tuple(num[h] for h in diagram.legs)
    vertices = []
    for j in sorted(vx_or, key=lambda j: vx_or[j][0]):
        trip = tuple(num[h] for h in vx_or[j][1])
        vertices.append(sorted_rotation(trip))
    circles = []
    for j in sorted(circ_disc, key=lambda j: circ_disc[j]):
        circles.append(sorted_rotation(tuple(num[h] for h in diagram.circles[j])))
    pairing = {num[h]: num[p] for h, p in diagram.pairing.items()}
    canon = JacobiDiagram(legs, vertices, pairing, circles, diagram.free_loops)

    if len(best["signs"]) == 2:
        return canon, 0
    # the canonical representative carries the minimizing orientation; an
    # input reached through k reversals equals (-1)^k times it
    return canon, best["signs"].pop()


def sorted_rotation(seq):
    """Lexicographically minimal rotation of a tuple."""
    if not seq:
        return tuple(seq)
    n = len(seq)
    return min(tuple(seq[i:] + seq[:i]) for i in range(n))


class FrozenDiagram:
    """Hashable key for a canonical diagram."""

    __slots__ = ("key", "diagram")

    def __init__(self, diagram):
        self.diagram = diagram
        self.key = (diagram.legs, diagram.vertices, diagram.circles,
                    tuple(sorted((min(h, p), max(h, p))
                                 for h, p in diagram.pairing.items() if h < p)),
                    diagram.free_loops)

    def __eq__(self, other):
        return isinstance(other, FrozenDiagram) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __lt__(self, other):
        return self.key < other.key


class DiagramSum:
    """Finite linear combination of canonical diagrams.

    Coefficients are Fractions by default but any commutative coefficient
    object with +, * and truthiness works (homogeneous S-polynomials are used
    for the annihilator elements).
    """

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for d, c in terms:
                self.add(d, c)

    @classmethod
    def single(cls, diagram, coeff=Rat(1)):
        s = cls()
        s.add(diagram, coeff)
        return s

    def add(self, diagram, coeff):
        if isinstance(diagram, FrozenDiagram):
            key, sign = diagram, 1
        else:
            canon, sign = canonicalize(diagram)
            if sign == 0:
                return self
            key = FrozenDiagram(canon)
        c = self.terms.get(key)
        add = coeff * sign if sign != 1 else coeff
        val = add if c is None else c + add
        if val:
            self.terms[key] = val
        elif key in self.terms:
            del self.terms[key]
        return self

    def __add__(self, other):
        out = DiagramSum()
        out.terms = dict(self.terms)
        for k, c in other.terms.items():
            out.add(k, c)
        return out

    def __neg__(self):
        out = DiagramSum()
        out.terms = {k: -c for k, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        out = DiagramSum()
        for k, v in self.terms.items():
            nv = v * c if not isinstance(v, Rat) or isinstance(c, (int, Rat)) else c * v
            if nv:
                out.terms[k] = nv
        return out

    def __rmul__(self, c):
        return self.scale(c)

    def is_zero(self):
        return not self.terms

    def map_diagrams(self, fn):
        """Apply fn(diagram) -> DiagramSum linearly."""
        out = DiagramSum()
        for k, c in self.terms.items():
            piece = fn(k.diagram)
            for k2, c2 in piece.terms.items():
                out.add(k2, _coeff_mul(c, c2))
        return out

    def degree_filter(self, n):
        out = DiagramSum()
        for k, c in self.terms.items():
            if k.diagram.degree() == n:
                out.terms[k] = c
        return out

    def __iter__(self):
        return iter(sorted(self.terms.items(), key=lambda kv: kv[0].key))

    def __len__(self):
        return len(self.terms)


def _coeff_mul(a, b):
    if isinstance(a, Rat) and not isinstance(b, Rat):
        return b * a
    return a * b


# -- building blocks ---------------------------------------------------------

def strand_diagram(n):
    """n parallel strands as a morphism [n] -> [n] (legs 1..n, n+1..2n)."""
    legs = list(range(2 * n))
    pairing = {}
    for i in range(n):
        pairing[i] = n + i
        pairing[n + i] = i
    return JacobiDiagram(legs, [], pairing)


def cup_diagram():
    """Casimir cup: single edge joining legs 1 and 2."""
    return JacobiDiagram([0, 1], [], {0: 1, 1: 0})


def tripod_diagram():
    """One trivalent vertex with legs 1,2,3 in cyclic order."""
    legs = [0, 1, 2]
    vx = [(3, 4, 5)]
    pairing = {0: 3, 3: 0, 1: 4, 4: 1, 2: 5, 5: 2}
    return JacobiDiagram(legs, vx, pairing)


def triangle_diagram():
    """Three vertices in a triangle, one leg each: the degree-1 generator.

    Rim orientation is fixed so the gl state sum of the triangle is +D times
    the antisymmetric tripod class (its sl character is the superdimension).
    """
    legs = [0, 1, 2]
    vx = [(3, 5, 4), (6, 8, 7), (9, 11, 10)]
    pairing = {}

    def pair(a, b):
        pairing[a] = b
        pairing[b] = a

    pair(0, 3)
    pair(1, 6)
    pair(2, 9)
    pair(5, 7)   # v0 next -> v1 prev
    pair(8, 10)  # v1 next -> v2 prev
    pair(11, 4)  # v2 next -> v0 prev
    return JacobiDiagram(legs, vx, pairing)


def theta_diagram():
    """Two vertices joined by three edges, no legs."""
    vx = [(0, 1, 2), (3, 4, 5)]
    pairing = {0: 3, 3: 0, 1: 5, 5: 1, 2: 4, 4: 2}
    return JacobiDiagram([], vx, pairing)


def circle_diagram():
    """The vertex-free circle d."""
    return JacobiDiagram([], [], {}, free_loops=1)


def bubble_on_strand():
    """Strand 1->2 carrying a two-gon; the adjoint Casimir action diagram."""
    legs = [0, 1]
    vx = [(2, 3, 4), (5, 6, 7)]
    pairing = {0: 2, 2: 0, 1: 5, 5: 1, 3: 7, 7: 3, 4: 6, 6: 4}
    return JacobiDiagram(legs, vx, pairing)


def wheel_diagram(n):
    """The n-wheel: an n-gon rim with one pendant leg per rim vertex."""
    if n < 1:
        raise DiagramError("wheel needs at least one leg")
    legs = list(range(n))
    vx = []
    pairing = {}
    base = n

    def pair(a, b):
        pairing[a] = b
        pairing[b] = a

    for j in range(n):
        stub, prv, nxt = base + 3 * j, base + 3 * j + 1, base + 3 * j + 2
        vx.append((stub, prv, nxt))
        pair(j, stub)
    for j in range(n):
        nxt = base + 3 * j + 2
        prv_next = base + 3 * ((j + 1) % n) + 1
        pair(nxt, prv_next)
    return JacobiDiagram(legs, vx, pairing)


def generalized_wheel(a, b, c):
    """Theta graph with a, b, c legs on its three strands."""
    legs = list(range(a + b + c))
    vx = []
    pairing = {}
    nid = [a + b + c]

    def fresh():
        nid[0] += 1
        return nid[0] - 1

    def pair(x, y):
        pairing[x] = y
        pairing[y] = x

    # two hub vertices with three strand ends each
    h1 = [fresh(), fresh(), fresh()]
    h2 = [fresh(), fresh(), fresh()]
    vx.append(tuple(h1))
    vx.append(tuple(h2[::-1]))  # opposite cyclic sense so the planar theta closes
    leg_iter = iter(range(a + b + c))
    for strand, count in enumerate((a, b, c)):
        prev = h1[strand]
        for _ in range(count):
            leg = next(leg_iter)
            stub, left, right = fresh(), fresh(), fresh()
            vx.append((stub, left, right))
            pair(leg, stub)
            pair(prev, left)
            prev = right
        pair(prev, h2[strand])
    return JacobiDiagram(legs, vx, pairing)


def caterpillar_tree(n):
    """A binary caterpillar tree with n leaves, an element of F_n of degree n-1."""
    if n < 3:
        raise DiagramError("need at least three leaves")
    legs = list(range(n))
    vx = []
    pairing = {}
    nid = [n]

    def fresh():
        nid[0] += 1
        return nid[0] - 1

    def pair(x, y):
        pairing[x] = y
        pairing[y] = x

    spine = None
    for j in range(n - 2):
        a, b, c = fresh(), fresh(), fresh()
        vx.append((a, b, c))
        if j == 0:
            pair(a, 0)
            pair(b, 1)
        else:
            pair(a, spine)
            pair(b, j + 1)
        spine = c
    pair(spine, n - 1)
    return JacobiDiagram(legs, vx, pairing)


# -- composition and insertion ------------------------------------------------

def _shift_diagram(d, offset):
    legs = [h + offset for h in d.legs]
    vx = [tuple(h + offset for h in v) for v in d.vertices]
    circ = [tuple(h + offset for h in c) for c in d.circles]
    pairing = {h + offset: p + offset for h, p in d.pairing.items()}
    return legs, vx, circ, pairing


def _renumber(d):
    mapping = {}
    for h in sorted(d.pairing):
        mapping[h] = len(mapping)
    return JacobiDiagram([mapping[h] for h in d.legs],
                         [tuple(mapping[h] for h in v) for v in d.vertices],
                         {mapping[h]: mapping[p] for h, p in d.pairing.items()},
                         [tuple(mapping[h] for h in c) for c in d.circles],
                         d.free_loops)


def glue_diagrams(a, b, pairs, out_legs):
    """Glue leg half-edges of the disjoint union of a and b.

    pairs: list of (half_a, half_b_shifted) leg half-edges to weld together;
    out_legs: ordered list of remaining leg half-edges for the result.
    Welding removes both leg endpoints and joins their partner half-edges;
    strand-only cycles become free loops.
    """
    off = max(a.pairing, default=-1) + 1
    bl, bv, bc, bp = _shift_diagram(b, off)
    partner = dict(a.pairing)
    partner.update(bp)
    vertices = list(a.vertices) + bv
    circles = list(a.circles) + bc
    free = a.free_loops + b.free_loops

    # each weld joins two leg half-edges; link is the involution across welds
    link = {}
    for ha, hb in pairs:
        link[ha] = hb + off
        link[hb + off] = ha
    removed = set(link)

    new_pairing = {}
    for h in partner:
        if h in removed:
            continue
        cur = partner[h]
        while cur in removed:
            cur = partner[link[cur]]
        new_pairing[h] = cur

    # weld components that never touch a surviving half-edge are free loops
    uf = {x: x for x in removed}

    def find(x):
        while uf[x] != x:
            uf[x] = uf[uf[x]]
            x = uf[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            uf[rx] = ry

    open_roots = set()
    for x in removed:
        union(x, link[x])
        if partner[x] in removed:
            union(x, partner[x])
    for x in removed:
        if partner[x] not in removed:
            open_roots.add(find(x))
    free += len({find(x) for x in removed} - open_roots)

    d = JacobiDiagram(list(out_legs), vertices, new_pairing, circles, free)
    return _renumber(d)


def compose(a, p, q, b, r):
    """Compose a in D([p],[q]) with b in D([q],[r]).

    Legs of a: source 1..p then target p+1..p+q; legs of b: source 1..q then
    target q+1..q+r.  The result has legs 1..p (from a) then p+1..p+r.
    """
    if len(a.legs) != p + q or len(b.legs) != q + r:
        raise DiagramError("arity mismatch in composition")
    pairs = [(a.legs[p + i], b.legs[i]) for i in range(q)]
    out = [a.legs[i] for i in range(p)]
    off = max(a.pairing, default=-1) + 1
    out += [b.legs[q + i] + off for i in range(r)]
    return glue_diagrams(a, b, pairs, out)


def tensor(a, b):
    """Disjoint union; legs of b are shifted past those of a."""
    off = max(a.pairing, default=-1) + 1
    bl, bv, bc, bp = _shift_diagram(b, off)
    pairing = dict(a.pairing)
    pairing.update(bp)
    return _renumber(JacobiDiagram(list(a.legs) + bl,
                                   list(a.vertices) + bv,
                                   pairing,
                                   list(a.circles) + bc,
                                   a.free_loops + b.free_loops))


def compose_sums(A, p, q, B, r):
    out = DiagramSum()
    for ka, ca in A.terms.items():
        for kb, cb in B.terms.items():
            d = compose(ka.diagram, p, q, kb.diagram, r)
            out.add(d, _coeff_mul(ca, cb))
    return out


def insert_at_vertex(u_diagram, host, vertex_index):
    """Replace vertex vertex_index of host by the 3-legged diagram u."""
    if not host.vertices:
        raise DiagramError("host diagram has no internal vertex")
    v = host.vertices[vertex_index]
    rest_vx = [w for j, w in enumerate(host.vertices) if j != vertex_index]
    stripped = JacobiDiagram(list(host.legs) + list(v), rest_vx, host.pairing,
                             host.circles, host.free_loops)
    n = len(host.legs)
    pairs = [(stripped.legs[n + k], u_diagram.legs[k]) for k in range(3)]
    out = [stripped.legs[i] for i in range(n)]
    return glue_diagrams(stripped, u_diagram, pairs, out)


def insert_lambda(u_sum, K_sum, vertex_index=0, check_antisymmetric=True):
    """Insert an element of the three-legged algebra at a vertex of K."""
    if check_antisymmetric and not is_totally_antisymmetric(u_sum):
        raise DiagramError("inserted element is not totally antisymmetric")

    def ins(d):
        out = DiagramSum()
        for ku, cu in u_sum.terms.items():
            out.add(insert_at_vertex(ku.diagram, d, vertex_index), cu)
        return out

    return K_sum.map_diagrams(ins)


def is_totally_antisymmetric(u_sum):
    """sigma.u == sign(sigma) u for all leg transpositions, structurally."""
    for d, _ in [(k.diagram, c) for k, c in u_sum.terms.items()]:
        if len(d.legs) != 3:
            return False
    for swap in ((1, 0, 2), (0, 2, 1), (2, 1, 0)):
        swapped = DiagramSum()
        for k, c in u_sum.terms.items():
            swapped.add(k.diagram.relabeled(swap), c)
        if not (swapped + u_sum).is_zero():
            return False
    return True


# -- relation sums -------------------------------------------------------------

def as_relation(diagram, vertex_index):
    """Diagram plus its vertex-reversed copy: zero in the quotient."""
    v = diagram.vertices[vertex_index]
    flipped = list(diagram.vertices)
    flipped[vertex_index] = (v[0], v[2], v[1])
    other = JacobiDiagram(diagram.legs, flipped, diagram.pairing,
                          diagram.circles, diagram.free_loops)
    return DiagramSum([(diagram, Rat(1)), (other, Rat(1))])


def ihx_relation(diagram, edge):
    """IHX at an internal edge joining two distinct vertices.

    With the edge e from vertex (e,a,b) to vertex (e',c,d), the combination
    I - H + X vanishes in the quotient: H and X reattach (a,b,c,d) as
    (e,d,a)(e',b,c) and (e,a,c)(e',b,d) respecting the cyclic data.
    """
    h1, h2 = edge
    seats = diagram.seats()
    s1, s2 = seats[h1], seats[h2]
    if s1[0] != "vx" or s2[0] != "vx" or s1[1] == s2[1]:
        raise DiagramError("IHX needs an edge joining two distinct vertices")
    j1, j2 = s1[1], s2[1]
    v1, v2 = diagram.vertices[j1], diagram.vertices[j2]
    i1, i2 = v1.index(h1), v2.index(h2)
    a, b = v1[(i1 + 1) % 3], v1[(i1 + 2) % 3]
    c, d = v2[(i2 + 1) % 3], v2[(i2 + 2) % 3]

    def rebuild(t1, t2):
        vx = list(diagram.vertices)
        vx[j1] = t1
        vx[j2] = t2
        return JacobiDiagram(diagram.legs, vx, diagram.pairing,
                             diagram.circles, diagram.free_loops)

    I = rebuild((h1, a, b), (h2, c, d))
    H = rebuild((h1, a, c), (h2, b, d))
    X = rebuild((h1, a, d), (h2, b, c))
    return DiagramSum([(I, Rat(1)), (H, Rat(-1)), (X, Rat(1))])


def stu_relation(diagram, vertex_index):
    """STU at a vertex whose stem attaches to a skeleton circle.

    S is the given diagram; T and U replace the vertex by direct attachments
    of its two branches, in the two orders.  Returns S - T + U, zero in the
    quotient.
    """
    v = diagram.vertices[vertex_index]
    seats = diagram.seats()
    stem = None
    for k, h in enumerate(v):
        p = diagram.pairing[h]
        if seats[p][0] == "circ":
            stem = k
            break
    if stem is None:
        raise DiagramError("STU needs a vertex attached to the skeleton")
    hs = v[stem]
    x, y = v[(stem + 1) % 3], v[(stem + 2) % 3]
    att = diagram.pairing[hs]
    cj, ck = seats[att][1], seats[att][2]

    def attach(first, second):
        # remove the vertex and its stem edge; attach partners of first/second
        vx = [w for j, w in enumerate(diagram.vertices) if j != vertex_index]
        pairing = dict(diagram.pairing)
        px, py = pairing[first], pairing[second]
        for h in (hs, att, first, second, px, py):
            pairing.pop(h, None)
        top = max(diagram.pairing) + 1
        newa, newb = top, top + 1
        pairing[px] = newa
        pairing[newa] = px
        pairing[py] = newb
        pairing[newb] = py
        circ = []
        for j, cyc in enumerate(diagram.circles):
            if j != cj:
                circ.append(cyc)
            else:
                cyc2 = list(cyc)
                cyc2[ck:ck + 1] = [newa, newb]
                circ.append(tuple(cyc2))
        d = JacobiDiagram(diagram.legs, vx, pairing, circ, diagram.free_loops)
        return _renumber(d)

    T = attach(x, y)
    U = attach(y, x)
    return DiagramSum([(diagram, Rat(1)), (T, Rat(-1)), (U, Rat(1))])


def relation_sum(diagram, site, kind):
    if kind == "AS":
        return as_relation(diagram, site)
    if kind == "IHX":
        return ihx_relation(diagram, site)
    if kind == "STU":
        return stu_relation(diagram, site)
    raise DiagramError("unknown relation kind %r" % kind)


# -- random diagrams for property tests ---------------------------------------

def random_diagram(rng, n_legs, n_vertices, allow_circles=False):
    """Random connected-ish diagram without tadpoles (for oracle tests)."""
    if (n_legs + 3 * n_vertices) % 2:
        raise DiagramError("half-edge count must be even")
    for _ in range(400):
        halves = list(range(n_legs + 3 * n_vertices))
        legs = halves[:n_legs]
        vx = [tuple(halves[n_legs + 3 * j: n_legs + 3 * j + 3])
              for j in range(n_vertices)]
        pool = halves[:]
        rng.shuffle(pool)
        pairing = {}
        ok = True
        while pool:
            a = pool.pop()
            b = pool.pop()
            pairing[a] = b
            pairing[b] = a
        d = JacobiDiagram(legs, vx, pairing)
        # reject tadpoles (an edge with both ends on one vertex) and
        # leg-to-leg strands when vertices are present, and disconnection
        seats = d.seats()
        bad = False
        for h, p in pairing.items():
            sh, sp = seats[h], seats[p]
            if sh[0] == "vx" and sp[0] == "vx" and sh[1] == sp[1]:
                bad = True
        if n_vertices and any(seats[h][0] == "leg" and seats[pairing[h]][0] == "leg"
                              for h in legs):
            bad = True
        if not bad and _connected(d):
            _, sign = canonicalize(d)
            if sign != 0:
                return d
    raise DiagramError("could not sample a diagram with the requested shape")


def _connected(d):
    if not d.pairing:
        return True
    seats = d.seats()
    nodes = {}

    def node_of(h):
        s = seats[h]
        return ("leg", s[1]) if s[0] == "leg" else (s[0], s[1])

    adj = {}
    for h, p in d.pairing.items():
        a, b = node_of(h), node_of(p)
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    start = next(iter(adj))
    seen = {start}
    stack = [start]
    while stack:
        for nb in adj[stack.pop()]:
            if nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(adj)

"""Finite dimensional quadratic Lie superalgebras with exact data.

Each algebra carries a basis with Z2 parities, bracket structure constants,
an invariant supersymmetric even bilinear form, and the inverse Casimir
tensor.  Construction verifies super-antisymmetry, the super Jacobi
identity, invariance and nondegeneracy; a failure aborts with AlgebraError.

The standard matrix model (when one exists) is kept for supertrace
evaluation of permutation diagrams.
"""

from fractions import Fraction

from .linalg import rref, kernel_basis, solve

Rat = Fraction


class AlgebraError(ValueError):
    pass


class SuperAlgebra:
    def __init__(self, name, parities, bracket, form, matrix_model=None,
                 v_parities=None, check=True):
        self.name = name
        self.parities = tuple(parities)
        self.dim = len(self.parities)
        # bracket[(i, j)] = {k: coeff}; missing keys mean zero
        self.bracket = {k: {a: c for a, c in v.items() if c} for k, v in bracket.items()}
        self.bracket = {k: v for k, v in self.bracket.items() if v}
        self.form = [row[:] for row in form]
        self.matrix_model = matrix_model
        self.v_parities = tuple(v_parities) if v_parities is not None else None
        self.omega = self._invert_form()
        if check:
            self.verify()

    # -- core data ----------------------------------------------------------

    def brk(self, i, j):
        return self.bracket.get((i, j), {})

    def bracket_vectors(self, x, y):
        """Bracket of two coefficient vectors."""
        out = {}
        for i, ci in x.items():
            if not ci:
                continue
            for j, cj in y.items():
                if not cj:
                    continue
                for k, c in self.brk(i, j).items():
                    out[k] = out.get(k, Rat(0)) + ci * cj * c
        return {k: c for k, c in out.items() if c}

    def form_value(self, x, y):
        tot = Rat(0)
        for i, ci in x.items():
            for j, cj in y.items():
                tot += ci * cj * self.form[i][j]
        return tot

    def sdim(self):
        return sum(1 if p == 0 else -1 for p in self.parities)

    def _invert_form(self):
        n = self.dim
        aug = [[self.form[i][j] for j in range(n)] + [Rat(int(i == k)) for k in range(n)]
               for i, k in [(i, None) for i in range(n)]]
        # build properly: augmented identity
        aug = [list(self.form[i]) + [Rat(int(i == j)) for j in range(n)] for i in range(n)]
        red, pivots = rref(aug)
        if pivots != list(range(n)):
            raise AlgebraError("bilinear form of %s is degenerate" % self.name)
        return [row[n:] for row in red]

    # -- verification ---------------------------------------------------------

    def verify(self):
        n = self.dim
        p = self.parities
        for i in range(n):
            for j in range(n):
                if self.form[i][j] != self.form[j][i] * (-1) ** (p[i] * p[j]):
                    raise AlgebraError("form of %s is not supersymmetric" % self.name)
                if self.form[i][j] and (p[i] + p[j]) % 2:
                    raise AlgebraError("form of %s is not even" % self.name)
                bij = self.brk(i, j)
                bji = self.brk(j, i)
                sgn = -((-1) ** (p[i] * p[j]))
                keys = set(bij) | set(bji)
                for k in keys:
                    if bij.get(k, Rat(0)) != sgn * bji.get(k, Rat(0)):
                        raise AlgebraError("bracket of %s is not super-antisymmetric"
                                           % self.name)
                for k, c in bij.items():
                    if c and (p[k] - p[i] - p[j]) % 2:
                        raise AlgebraError("bracket of %s is not parity graded" % self.name)
        # super Jacobi: [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]]
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    lhs = self.bracket_vectors({i: Rat(1)}, dict(self.brk(j, k)))
                    r1 = self.bracket_vectors(dict(self.brk(i, j)), {k: Rat(1)})
                    r2 = self.bracket_vectors({j: Rat(1)}, dict(self.brk(i, k)))
                    sgn = (-1) ** (p[i] * p[j])
                    keys = set(lhs) | set(r1) | set(r2)
                    for m in keys:
                        if lhs.get(m, Rat(0)) != r1.get(m, Rat(0)) + sgn * r2.get(m, Rat(0)):
                            raise AlgebraError("Jacobi fails for %s at (%d,%d,%d)"
                                               % (self.name, i, j, k))
        # invariance: <[x,y],z> = <x,[y,z]>
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    lhs = sum(c * self.form[m][k] for m, c in self.brk(i, j).items())
                    rhs = sum(c * self.form[i][m] for m, c in self.brk(j, k).items())
                    if lhs != rhs:
                        raise AlgebraError("form of %s is not invariant" % self.name)

    def scaled_form(self, factor):
        """Same algebra with the bilinear form multiplied by factor."""
        factor = Rat(factor)
        return SuperAlgebra(self.name + "*%s" % factor, self.parities, self.bracket,
                            [[factor * x for x in row] for row in self.form],
                            matrix_model=self.matrix_model,
                            v_parities=self.v_parities, check=False)


# -- generic constructor from a faithful matrix model --------------------------


def _super_commutator(a, b, pa, pb):
    n = len(a)
    sgn = (-1) ** (pa * pb)
    return [[sum(a[i][k] * b[k][j] for k in range(n))
             - sgn * sum(b[i][k] * a[k][j] for k in range(n))
             for j in range(n)] for i in range(n)]


def _supertrace(m, v_parities):
    return sum(((-1) ** v_parities[i]) * m[i][i] for i in range(len(m)))


def _mat_mul(a, b):
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def from_matrices(name, mats, parities, v_parities, form_factor=Rat(1)):
    """Algebra spanned by supermatrices; form <x,y> = form_factor*str(xy)."""
    dim = len(mats)
    size = len(mats[0])
    flat = [[m[i][j] for i in range(size) for j in range(size)] for m in mats]
    # coordinates of an arbitrary matrix in the chosen basis, via least squares
    cols = list(map(list, zip(*flat)))

    def coords(m):
        vec = [m[i][j] for i in range(size) for j in range(size)]
        res = solve(cols, vec)
        if res["kind"] == "inconsistent":
            raise AlgebraError("%s: matrix outside the span of the basis" % name)
        return res["solution"]

    bracket = {}
    for i in range(dim):
        for j in range(dim):
            c = coords(_super_commutator(mats[i], mats[j], parities[i], parities[j]))
            entry = {k: c[k] for k in range(dim) if c[k]}
            if entry:
                bracket[(i, j)] = entry
    form = [[form_factor * _supertrace(_mat_mul(mats[i], mats[j]), v_parities)
             for j in range(dim)] for i in range(dim)]
    return SuperAlgebra(name, parities, bracket, form,
                        matrix_model=mats, v_parities=v_parities)


def _unit_matrix(size, i, j):
    m = [[Rat(0)] * size for _ in range(size)]
    m[i][j] = Rat(1)
    return m


def build_gl(m, n):
    size = m + n
    vpar = [0] * m + [1] * n
    mats, pars = [], []
    for i in range(size):
        for j in range(size):
            mats.append(_unit_matrix(size, i, j))
            pars.append((vpar[i] + vpar[j]) % 2)
    return from_matrices("gl(%d|%d)" % (m, n), mats, pars, vpar)


def build_sl(m, n):
    if m == n:
        raise AlgebraError("sl(n|n) has a degenerate supertrace form")
    size = m + n
    vpar = [0] * m + [1] * n
    mats, pars = [], []
    for i in range(size):
        for j in range(size):
            if i != j:
                mats.append(_unit_matrix(size, i, j))
                pars.append((vpar[i] + vpar[j]) % 2)
    for k in range(size - 1):
        # str-traceless diagonal: e_kk - (-1)^{p_k + p_{k+1}} e_{k+1,k+1}
        h = _unit_matrix(size, k, k)
        c = Rat((-1) ** (vpar[k] + vpar[k + 1]))
        h2 = _unit_matrix(size, k + 1, k + 1)
        mats.append([[h[i][j] - c * h2[i][j] for j in range(size)] for i in range(size)])
        pars.append(0)
    return from_matrices("sl(%d|%d)" % (m, n), mats, pars, vpar)


def build_osp(m, n2):
    """osp(m|n2) preserving I_m (+) the standard symplectic form, n2 even."""
    if n2 % 2:
        raise AlgebraError("odd symplectic size")
    size = m + n2
    vpar = [0] * m + [1] * n2
    half = n2 // 2
    g = [[Rat(0)] * size for _ in range(size)]
    for i in range(m):
        g[i][i] = Rat(1)
    for i in range(half):
        g[m + i][m + half + i] = Rat(1)
        g[m + half + i][m + i] = Rat(-1)
    # condition: g(xv, w) + (-1)^{|x||v|} g(v, xw) = 0 per parity block of x
    basis = []
    for par in (0, 1):
        rows = []
        positions = [(i, j) for i in range(size) for j in range(size)
                     if (vpar[i] + vpar[j]) % 2 == par]
        pos_index = {p: k for k, p in enumerate(positions)}
        for v in range(size):
            for w in range(size):
                row = [Rat(0)] * len(positions)
                # sum_i x_{i v'}... expand g(x v, w) = sum_a g[a][w] x[a][v]
                for a in range(size):
                    if (vpar[a] + vpar[v]) % 2 == par and g[a][w]:
                        row[pos_index[(a, v)]] += g[a][w]
                sgn = Rat((-1) ** (par * vpar[v]))
                for a in range(size):
                    if (vpar[a] + vpar[w]) % 2 == par and g[v][a]:
                        row[pos_index[(a, w)]] += sgn * g[v][a]
                if any(row):
                    rows.append(row)
        for vec in kernel_basis(rows):
            mat = [[Rat(0)] * size for _ in range(size)]
            for (i, j), k in pos_index.items():
                mat[i][j] = vec[k]
            basis.append((mat, par))
    mats = [b[0] for b in basis]
    pars = [b[1] for b in basis]
    # orientation: so(N) carries +str/2 (the tensor-oracle reference for the
    # unoriented state sum); genuinely super osp uses -str/2, which places
    # osp(4|2) at the character point (0, 6, -8) shared with D(2,1;alpha)
    factor = Rat(1, 2) if n2 == 0 else Rat(-1, 2)
    return from_matrices("osp(%d|%d)" % (m, n2), mats, pars, vpar,
                         form_factor=factor)


def build_so(n):
    return build_osp(n, 0)


# -- the one parameter family D(2,1;alpha) -------------------------------------

def _sl2_basis():
    e = [[Rat(0), Rat(1)], [Rat(0), Rat(0)]]
    f = [[Rat(0), Rat(0)], [Rat(1), Rat(0)]]
    h = [[Rat(1), Rat(0)], [Rat(0), Rat(-1)]]
    return e, h, f


def build_d21(alpha):
    """D(2,1;alpha): three sl2 copies acting on the odd part V x V x V.

    The three odd-bracket coefficients are fixed by form invariance; the
    global form scale is then pinned so that the H-shaped operator has
    eigenvalues {2a, 2b, 2c} on E, for (a, b, c) = (alpha, 1, -1-alpha).
    """
    alpha = Rat(alpha)
    if alpha in (Rat(0), Rat(-1)):
        raise AlgebraError("D(2,1;alpha) is degenerate at alpha in {0,-1}")
    a = (alpha, Rat(1), -1 - alpha)

    # basis: e_i, h_i, f_i for i=0,1,2 (even), then x_{pqr} (odd)
    names = []
    for i in range(3):
        names += [("e", i), ("h", i), ("f", i)]
    odd = [(p, q, r) for p in range(2) for q in range(2) for r in range(2)]
    names += [("x",) + o for o in odd]
    index = {nm: k for k, nm in enumerate(names)}
    dim = len(names)
    parities = [0] * 9 + [1] * 8

    # sl2 action on V = <v0, v1>: e v1 = v0, f v0 = v1, h v_k = (-1)^k v_k
    def act(gen, k):
        # returns list of (new_k, coeff)
        if gen == "e":
            return [(0, Rat(1))] if k == 1 else []
        if gen == "f":
            return [(1, Rat(1))] if k == 0 else []
        return [(k, Rat(1) if k == 0 else Rat(-1))]

    # symplectic form <v0,v1> = 1
    def symp(p, q):
        if (p, q) == (0, 1):
            return Rat(1)
        if (p, q) == (1, 0):
            return Rat(-1)
        return Rat(0)

    # mu(v_p, v_q) in sl2 with action mu(a,b)c = <a,c>b + <b,c>a
    # mu(v0,v0) = 2e, mu(v1,v1) = -2f, mu(v0,v1) = mu(v1,v0) = -h
    def mu(p, q):
        if p == 0 and q == 0:
            return {"e": Rat(2)}
        if p == 1 and q == 1:
            return {"f": Rat(-2)}
        return {"h": Rat(-1)}

    bracket = {}

    def badd(i, j, k, c):
        if not c:
            return
        bracket.setdefault((i, j), {})
        bracket[(i, j)][k] = bracket[(i, j)].get(k, Rat(0)) + c

    # even-even: three commuting sl2 copies
    sl2_tab = {("h", "e"): {"e": Rat(2)}, ("e", "h"): {"e": Rat(-2)},
               ("h", "f"): {"f": Rat(-2)}, ("f", "h"): {"f": Rat(2)},
               ("e", "f"): {"h": Rat(1)}, ("f", "e"): {"h": Rat(-1)}}
    for i in range(3):
        for (g1, g2), img in sl2_tab.items():
            for g3, c in img.items():
                badd(index[(g1, i)], index[(g2, i)], index[(g3, i)], c)

    # even-odd: copy i acts on slot i
    for i in range(3):
        for gen in ("e", "h", "f"):
            gi = index[(gen, i)]
            for o in odd:
                for nk, c in act(gen, o[i]):
                    o2 = list(o)
                    o2[i] = nk
                    badd(gi, index[("x",) + tuple(o)], index[("x",) + tuple(o2)], c)
                    badd(index[("x",) + tuple(o)], gi, index[("x",) + tuple(o2)], -c)

    # odd-odd: [x, y] = sum_i lam_i <x_j,y_j><x_k,y_k> mu(x_i, y_i);
    # super Jacobi needs lam_1 + lam_2 + lam_3 = 0, hence lam_i = a_i
    lam = [a[i] for i in range(3)]
    for o1 in odd:
        for o2 in odd:
            for i in range(3):
                j, k = [m for m in range(3) if m != i]
                c = lam[i] * symp(o1[j], o2[j]) * symp(o1[k], o2[k])
                if not c:
                    continue
                for gen, cc in mu(o1[i], o2[i]).items():
                    badd(index[("x",) + o1], index[("x",) + o2],
                         index[(gen, i)], c * cc)

    # bilinear form: invariance against lam_i = a_i forces B|L_i = -c0/(2 a_i) tr
    # with B|X = c0 times the product of symplectic forms; c0 = 2 makes the
    # H-operator spectrum on E exactly {2a, 2b, 2c}
    c0 = Rat(2)
    form = [[Rat(0)] * dim for _ in range(dim)]
    tr_tab = {("e", "f"): Rat(1), ("f", "e"): Rat(1), ("h", "h"): Rat(2)}
    for i in range(3):
        for (g1, g2), c in tr_tab.items():
            form[index[(g1, i)]][index[(g2, i)]] = -c0 / (2 * a[i]) * c
    for o1 in odd:
        for o2 in odd:
            c = symp(o1[0], o2[0]) * symp(o1[1], o2[1]) * symp(o1[2], o2[2])
            form[index[("x",) + o1]][index[("x",) + o2]] = c0 * c

    return SuperAlgebra("d21(%s)" % alpha, parities, bracket, form)


_BUILD_CACHE = {}


def build_algebra(spec, *params):
    """Build by family name: gl, sl, osp, so, sl2, sl3, d21 (memoized)."""
    key = (spec,) + tuple(params)
    if key in _BUILD_CACHE:
        return _BUILD_CACHE[key]
    if spec == "gl":
        L = build_gl(*params)
    elif spec == "sl":
        L = build_sl(*params)
    elif spec == "osp":
        L = build_osp(*params)
    elif spec == "so":
        L = build_so(*params)
    elif spec == "sl2":
        L = build_sl(2, 0)
    elif spec == "sl3":
        L = build_sl(3, 0)
    elif spec == "d21":
        L = build_d21(params[0])
    else:
        raise AlgebraError("unknown algebra spec %r" % spec)
    _BUILD_CACHE[key] = L
    return L


def parse_algebra_spec(text):
    """Parse text like 'gl:2|1', 'so:4', 'sl2', 'd21:3/2'."""
    text = text.strip()
    if ":" not in text:
        return build_algebra(text)
    head, arg = text.split(":", 1)
    if head in ("gl", "sl", "osp"):
        if "|" in arg:
            m, n = arg.split("|")
        else:
            m, n = arg, "0"
        return build_algebra(head, int(m), int(n))
    if head == "so":
        return build_algebra("so", int(arg))
    if head == "d21":
        return build_algebra("d21", Rat(arg))
    raise AlgebraError("cannot parse algebra spec %r" % text)


def structure_dump(L):
    """Plain text dump of structure constants and the form, for audit."""
    lines = ["algebra %s dim %d sdim %s" % (L.name, L.dim, L.sdim())]
    lines.append("parities " + "".join(str(p) for p in L.parities))
    for (i, j), img in sorted(L.bracket.items()):
        body = " ".join("%s*e%d" % (c, k) for k, c in sorted(img.items()))
        lines.append("[e%d,e%d] = %s" % (i, j, body))
    for i in range(L.dim):
        for j in range(L.dim):
            if L.form[i][j]:
                lines.append("B(e%d,e%d) = %s" % (i, j, L.form[i][j]))
    return "\n".join(lines)

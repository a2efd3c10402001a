"""The generator library: fixed diagrams and diagram sums.

Everything here is a frozen transcription with structural self-checks (leg
count, degree, antisymmetry where claimed).  Conventions that the sources
leave pictorial are pinned by the validation suite: the triangle by its sl
character, x2/x3 by the generating-function characters, the D-family by the
computed gluing constants, and the annihilator ladders K0..K3 by oracle
annihilation.
"""

from fractions import Fraction
import itertools

from .diagrams import (JacobiDiagram, DiagramSum, DiagramError, tripod_diagram,
                       triangle_diagram, theta_diagram, circle_diagram,
                       wheel_diagram, generalized_wheel, strand_diagram,
                       cup_diagram, bubble_on_strand, compose, tensor,
                       insert_lambda, is_totally_antisymmetric)
from .permweights import snowflake_diagram, d1_diagram, d4_diagram
from .tensorweights import psi_diagram, tau_diagram
from .exactalg import RINGS, Poly

Rat = Fraction
S = RINGS["S"]


def _t():
    return S.var("t")


def _u():
    return S.var("u")


def _v():
    return S.var("v")


def antisymmetrize3(diagram):
    """Project a 3-legged diagram onto the totally antisymmetric part."""
    out = DiagramSum()
    for perm in itertools.permutations(range(3)):
        sgn = Rat(1) if perm in ((0, 1, 2), (1, 2, 0), (2, 0, 1)) else Rat(-1)
        out.add(diagram.relabeled(perm), sgn * Rat(1, 6))
    return out


def x3_diagram():
    """Tetrahedron with the three legs on the edges of one face."""
    legs = [15, 16, 17]
    vx = [(0, 1, 2), (3, 4, 5), (6, 7, 8), (9, 10, 11),
          (12, 13, 14), (18, 19, 20), (21, 22, 23)]
    pairing = {}

    def pair(a, b):
        pairing[a] = b
        pairing[b] = a

    pair(0, 3)
    pair(1, 6)
    pair(2, 9)
    pair(4, 12)
    pair(13, 7)
    pair(14, 15)
    pair(8, 18)
    pair(19, 10)
    pair(20, 16)
    pair(11, 21)
    pair(22, 5)
    pair(23, 17)
    return JacobiDiagram(legs, vx, pairing)


def x_n(n):
    """The low degree x family, pinned by the generating function."""
    t_sum = DiagramSum.single(triangle_diagram())
    if n == 1:
        return t_sum.scale(Rat(2))
    if n == 2:
        return insert_lambda(t_sum, t_sum, 0)
    if n == 3:
        return antisymmetrize3(x3_diagram())
    raise DiagramError("x_n is transcribed for n in {1,2,3} only")


# -- morphism building blocks for the annihilator ladders ------------------------

def psi_power(k):
    """The k-rung ladder as a morphism [2] -> [2]."""
    out = strand_diagram(2)
    for _ in range(k):
        out = compose(out, 2, 2, psi_diagram(), 2)
    return out


def bubbled_strand2(side):
    """Two strands with the Casimir two-gon on one of them."""
    legs = [0, 1, 2, 3]
    if side == 0:
        vx = [(4, 5, 6), (7, 8, 9)]
        pairing = {0: 4, 4: 0, 2: 7, 7: 2, 5: 9, 9: 5, 6: 8, 8: 6, 1: 3, 3: 1}
    else:
        vx = [(4, 5, 6), (7, 8, 9)]
        pairing = {1: 4, 4: 1, 3: 7, 7: 3, 5: 9, 9: 5, 6: 8, 8: 6, 0: 2, 2: 0}
    return JacobiDiagram(legs, vx, pairing)


def double_bubbled_strand2():
    """Both strands carrying a Casimir two-gon."""
    legs = [0, 1, 2, 3]
    vx = [(4, 5, 6), (7, 8, 9), (10, 11, 12), (13, 14, 15)]
    pairing = {0: 4, 4: 0, 2: 7, 7: 2, 5: 9, 9: 5, 6: 8, 8: 6,
               1: 10, 10: 1, 3: 13, 13: 3, 11: 15, 15: 11, 12: 14, 14: 12}
    return JacobiDiagram(legs, vx, pairing)


def _ladder_sum(coeffs, with_tau=True):
    """sum_k coeffs[k] (Psi^k + tau Psi^k) as a DiagramSum over S."""
    out = DiagramSum()
    for k, c in enumerate(coeffs):
        if isinstance(c, Rat) and not c:
            continue
        if isinstance(c, Poly) and c.is_zero():
            continue
        lad = psi_power(k)
        out.add(lad, c)
        if with_tau:
            out.add(compose(lad, 2, 2, tau_diagram(), 2), c)
    return out


def k1_element():
    """Adjoint Casimir action minus 2t: a two-legged S-linear combination."""
    out = DiagramSum()
    out.add(bubble_on_strand(), S.one())
    out.add(strand_diagram(1), _t().scale(-2))
    return out


def k2_element():
    """(1 + crossing)(Psi^3 - t Psi^2 - 2u Psi - 2v)(Psi - 2t) as diagrams."""
    t, u, v = _t(), _u(), _v()
    coeffs = [t * v * Rat(4),
              u * t * Rat(4) - v * Rat(2),
              (t ** 2) * Rat(2) - u * Rat(2),
              t * Rat(-3),
              S.one()]
    return _ladder_sum(coeffs)


def k3_element():
    """(1 + crossing)(Psi^2 - t/3 Psi - 2(u + t^2/9))(Psi - 2t)."""
    t, u, v = _t(), _u(), _v()
    coeffs = [u * t * Rat(4) + (t ** 3) * Rat(4, 9),
              (t ** 2) * Rat(4, 9) - u * Rat(2),
              t * Rat(-7, 3),
              S.one()]
    return _ladder_sum(coeffs)


def k0_element():
    """(1 + crossing)(Psi + t)(Psi - 2t) with t drawn as half a two-gon."""
    out = DiagramSum()
    tau = tau_diagram()
    for lad, c in [(psi_power(2), Rat(1))]:
        out.add(lad, c)
        out.add(compose(lad, 2, 2, tau, 2), c)
    # - t Psi: half of Psi with a bubble on its incoming first strand
    bub_psi = compose(bubbled_strand2(0), 2, 2, psi_diagram(), 2)
    out.add(bub_psi, Rat(-1, 2))
    out.add(compose(bub_psi, 2, 2, tau, 2), Rat(-1, 2))
    # - 2 t^2 id: half of the doubly bubbled pair of strands
    dbl = double_bubbled_strand2()
    out.add(dbl, Rat(-1, 2))
    out.add(compose(dbl, 2, 2, tau, 2), Rat(-1, 2))
    return out


def specialize_sum(K, tuv):
    """Replace S-polynomial coefficients by their value at (t, u, v)."""
    t, u, v = tuv
    out = DiagramSum()
    for key, c in K.terms.items():
        if isinstance(c, Poly):
            val = c.evaluate({"t": t, "u": u, "v": v})
        else:
            val = c
        if val:
            out.terms[key] = out.terms.get(key, Rat(0)) + val
    return out


# -- the catalogue ------------------------------------------------------------------

def generator(name, *args):
    """Resolve a generator id to its DiagramSum, with self-checks."""
    if name == "tripod_unit":
        d = DiagramSum.single(tripod_diagram())
        _check(d, legs=3, degree=2, antisym=True)
        return d
    if name == "t":
        d = DiagramSum.single(triangle_diagram())
        _check(d, legs=3, degree=3, antisym=True)
        return d
    if name == "x_n":
        d = x_n(args[0])
        _check(d, legs=3, degree=args[0] + 2)
        return d
    if name == "theta":
        d = DiagramSum.single(theta_diagram())
        _check(d, legs=0, degree=1)
        return d
    if name == "wheel":
        n = args[0]
        d = DiagramSum.single(wheel_diagram(n))
        _check(d, legs=n, degree=n, loops=1)
        return d
    if name == "W_delta":
        a, b, c = args
        d = DiagramSum.single(generalized_wheel(a, b, c))
        _check(d, legs=a + b + c, degree=a + b + c + 1, loops=2)
        return d
    if name == "d":
        return DiagramSum.single(circle_diagram())
    if name == "D1":
        return DiagramSum.single(d1_diagram())
    if name == "D2":
        d = DiagramSum.single(snowflake_diagram())
        _check(d, legs=6, degree=5)
        return d
    if name == "D3":
        d = DiagramSum.single(triangle_diagram())
        _check(d, legs=3, degree=3)
        return d
    if name == "D4":
        return DiagramSum.single(d4_diagram())
    if name == "K0":
        return k0_element()
    if name == "K1":
        return k1_element()
    if name == "K2":
        return k2_element()
    if name == "K3":
        return k3_element()
    raise DiagramError("unknown generator %r" % name)


def _check(dsum, legs=None, degree=None, antisym=False, loops=None):
    for key in dsum.terms:
        d = key.diagram
        if legs is not None and len(d.legs) != legs:
            raise DiagramError("generator self-check failed: legs")
        if degree is not None and d.degree() != degree:
            raise DiagramError("generator self-check failed: degree")
        if loops is not None and d.loops() != loops:
            raise DiagramError("generator self-check failed: loops")
    if antisym and not is_totally_antisymmetric(dsum):
        raise DiagramError("generator self-check failed: antisymmetry")


GENERATOR_NAMES = ["tripod_unit", "t", "x_n", "theta", "wheel", "W_delta", "d",
                   "D1", "D2", "D3", "D4", "K0", "K1", "K2", "K3"]

"""Text formats for diagrams and linear combinations.

A `.jd` file describes one diagram:

    legs 3
    circles 1
    on 1: h7 h9
    vertex 1: a b c
    edge a d
    leg 1: d
    freeloops 0

Half-edge names are arbitrary word tokens; vertex lines list the cyclic
order; `on` lines list the cyclic attachment order of each skeleton circle.
A `.jds` file is a linear combination, one `p/q * name` per line, where the
name is a sibling `.jd` file (without extension) or a generator id such as
`t`, `D2`, `wheel:4`, `x:3`, or `W:1,2,2`.  Parsing and printing round-trip
exactly.
"""

from fractions import Fraction
import os
import re

from .diagrams import JacobiDiagram, DiagramSum, DiagramError

Rat = Fraction


class ParseError(ValueError):
    def __init__(self, message, line=None, column=None):
        loc = "" if line is None else " (line %d%s)" % (
            line, "" if column is None else ", column %d" % column)
        super().__init__(message + loc)
        self.line = line
        self.column = column


def parse_jd(text):
    """Parse the `.jd` format into a JacobiDiagram."""
    n_legs = None
    n_circles = 0
    circles = {}
    vertices = []
    legs = {}
    edges = []
    free_loops = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.replace(":", " : ").split()
        head = parts[0]
        try:
            if head == "legs":
                n_legs = int(parts[1])
            elif head == "circles":
                n_circles = int(parts[1])
            elif head == "on":
                c = int(parts[1])
                if parts[2] != ":":
                    raise ParseError("expected ':'", lineno)
                circles[c] = tuple(parts[3:])
            elif head == "vertex":
                if parts[2] != ":":
                    raise ParseError("expected ':'", lineno)
                if len(parts) != 6:
                    raise ParseError("a vertex needs three half-edges", lineno)
                vertices.append(tuple(parts[3:6]))
            elif head == "edge":
                if len(parts) != 3:
                    raise ParseError("an edge needs two half-edges", lineno)
                edges.append((parts[1], parts[2]))
            elif head == "leg":
                if parts[2] != ":":
                    raise ParseError("expected ':'", lineno)
                legs[int(parts[1])] = parts[3]
            elif head == "freeloops":
                free_loops = int(parts[1])
            else:
                raise ParseError("unknown directive %r" % head, lineno)
        except (IndexError, ValueError) as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError("malformed line: %s" % raw.strip(), lineno)
    if n_legs is None:
        raise ParseError("missing 'legs' line")
    leg_list = []
    for i in range(1, n_legs + 1):
        if i not in legs:
            raise ParseError("missing leg %d" % i)
        leg_list.append(legs[i])
    circ_list = [circles.get(c, ()) for c in range(1, n_circles + 1)]
    pairing = {}
    for a, b in edges:
        if a in pairing or b in pairing:
            raise ParseError("half-edge used in two edges")
        pairing[a] = b
        pairing[b] = a
    try:
        return JacobiDiagram(leg_list, vertices, pairing, circ_list, free_loops)
    except DiagramError as exc:
        raise ParseError("inconsistent diagram: %s" % exc)


def _hname(h):
    return h if isinstance(h, str) else "h%d" % h


def format_jd(d):
    lines = ["legs %d" % len(d.legs)]
    if d.circles:
        lines.append("circles %d" % len(d.circles))
        for j, c in enumerate(d.circles, start=1):
            lines.append("on %d: %s" % (j, " ".join(_hname(h) for h in c)))
    for j, v in enumerate(d.vertices, start=1):
        lines.append("vertex %d: %s" % (j, " ".join(_hname(h) for h in v)))
    seen = set()
    for h in sorted(d.pairing, key=_hname):
        p = d.pairing[h]
        if (p, h) in seen or (h, p) in seen:
            continue
        seen.add((h, p))
        lines.append("edge %s %s" % (_hname(h), _hname(p)))
    for i, h in enumerate(d.legs, start=1):
        lines.append("leg %d: %s" % (i, _hname(h)))
    if d.free_loops:
        lines.append("freeloops %d" % d.free_loops)
    return "\n".join(lines) + "\n"


_JDS_RE = re.compile(r"^\s*(-?\d+(?:/\d+)?)\s*\*\s*(\S+)\s*$")


def resolve_name(name, base_dir=None):
    """A `.jds` entry: a sibling file or a generator id."""
    from . import generators
    if base_dir:
        path = os.path.join(base_dir, name + ".jd")
        if os.path.exists(path):
            with open(path) as fh:
                return DiagramSum.single(parse_jd(fh.read()))
    if ":" in name:
        head, arg = name.split(":", 1)
        if head == "wheel":
            return generators.generator("wheel", int(arg))
        if head == "x":
            return generators.generator("x_n", int(arg))
        if head == "W":
            a, b, c = (int(x) for x in arg.split(","))
            return generators.generator("W_delta", a, b, c)
        raise ParseError("unknown generator family %r" % head)
    return generators.generator(name)


def parse_jds(text, base_dir=None):
    out = DiagramSum()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _JDS_RE.match(line)
        if not m:
            raise ParseError("expected 'p/q * name'", lineno)
        coeff = Rat(m.group(1))
        piece = resolve_name(m.group(2), base_dir)
        for key, c in piece.terms.items():
            out.add(key, c * coeff if not isinstance(c, Rat) else coeff * c)
    return out


def load_input(path):
    """Load a `.jd` or `.jds` file into a DiagramSum."""
    with open(path) as fh:
        text = fh.read()
    if path.endswith(".jds"):
        return parse_jds(text, base_dir=os.path.dirname(os.path.abspath(path)))
    return DiagramSum.single(parse_jd(text))

"""Shared generators and brute-force oracles for the test suite."""

import itertools
import random
from fractions import Fraction

from propnet.scalar import QQ, QS, RatFunc, Poly
from propnet.setprops import Corelation, Cospan
from propnet.circuit import EdgeLabel, LCircuit, LGraph
from propnet.term import Gen, Id, Par, Seq, Sym, arity, par, seq


# ---------------------------------------------------------------------------
# partitions and corelations

def partitions(elements):
    """All set partitions of a list, as lists of tuples."""
    elements = list(elements)
    if not elements:
        yield []
        return
    first, rest = elements[0], elements[1:]
    for part in partitions(rest):
        for i, block in enumerate(part):
            yield part[:i] + [block + (first,)] + part[i + 1:]
        yield part + [(first,)]


def all_corelations(m, n):
    tags = [("x", i) for i in range(m)] + [("y", j) for j in range(n)]
    for part in partitions(tags):
        yield Corelation(m, n, part)


def compose_oracle(f: Corelation, g: Corelation):
    """Equivalence closure on the three-layer tagged set; returns the
    boundary partition and the count of dropped middle-only classes."""
    parent = {}

    def find(a):
        parent.setdefault(a, a)
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        parent[find(a)] = find(b)

    for i in range(f.m):
        find(("x", i))
    for j in range(f.n):
        find(("mid", j))
    for k in range(g.n):
        find(("z", k))
    for block in f.blocks:
        anchor = None
        for tag, i in block:
            el = ("x", i) if tag == "x" else ("mid", i)
            anchor = el if anchor is None else anchor
            union(anchor, el)
    for block in g.blocks:
        anchor = None
        for tag, i in block:
            el = ("mid", i) if tag == "x" else ("z", i)
            anchor = el if anchor is None else anchor
            union(anchor, el)
    classes = {}
    for el in list(parent):
        classes.setdefault(find(el), []).append(el)
    blocks = []
    dropped = 0
    for members in classes.values():
        boundary = [("x", i) for t, i in members if t == "x"]
        boundary += [("y", i) for t, i in members if t == "z"]
        if boundary:
            blocks.append(boundary)
        else:
            dropped += 1
    return Corelation(f.m, g.n, blocks), dropped


def rand_corelation(rng, m, n):
    tags = [("x", i) for i in range(m)] + [("y", j) for j in range(n)]
    rng.shuffle(tags)
    nblocks = rng.randint(1, max(1, len(tags))) if tags else 0
    blocks = [[] for _ in range(nblocks)]
    for i, el in enumerate(tags):
        blocks[i % nblocks].append(el)
    return Corelation(m, n, [b for b in blocks if b])


def rand_cospan(rng, m, n, max_extras=2):
    c = rand_corelation(rng, m, n)
    return Cospan(m, n, c.blocks, rng.randint(0, max_extras))


# ---------------------------------------------------------------------------
# scalars and matrices

def rand_fraction(rng, positive=False):
    num = rng.randint(1 if positive else -6, 6)
    if not positive and num == 0:
        num = 1
    return Fraction(num, rng.randint(1, 6))


def rand_poly(rng, max_deg=2):
    coeffs = [Fraction(rng.randint(-4, 4)) for _ in range(max_deg + 1)]
    return Poly(coeffs)


def rand_ratfunc(rng, max_deg=2):
    num = rand_poly(rng, max_deg)
    den = rand_poly(rng, max_deg)
    while den.is_zero():
        den = rand_poly(rng, max_deg)
    return RatFunc(num, den)


def rand_scalar(rng, field):
    if field is QQ:
        return rand_fraction(rng)
    return rand_ratfunc(rng)


def rand_rows(rng, field, nrows, ncols):
    return [[field.coerce(rng.randint(-5, 5)) for _ in range(ncols)]
            for _ in range(nrows)]


# ---------------------------------------------------------------------------
# circuits

RLC_KINDS = ("wire", "resistor", "inductor", "capacitor", "impedance")


def rand_label(rng, kinds=RLC_KINDS):
    kind = rng.choice(kinds)
    if kind == "wire":
        return EdgeLabel("wire")
    if kind in ("resistor", "inductor", "capacitor"):
        return EdgeLabel(kind, rand_fraction(rng, positive=True))
    value = rand_ratfunc(rng)
    return EdgeLabel(kind, value)


def rand_circuit(rng, max_nodes=6, max_edges=8, kinds=RLC_KINDS):
    nodes = rng.randint(1, max_nodes)
    edges = []
    for _ in range(rng.randint(0, max_edges)):
        edges.append((rng.randrange(nodes), rng.randrange(nodes),
                      rand_label(rng, kinds)))
    m = rng.randint(0, min(3, nodes))
    n = rng.randint(0, min(3, nodes))
    inputs = [rng.randrange(nodes) for _ in range(m)]
    outputs = [rng.randrange(nodes) for _ in range(n)]
    return LCircuit(LGraph(nodes, edges), inputs, outputs)


# ---------------------------------------------------------------------------
# random well-typed terms

def _rand_gen_name(rng, gens):
    return rng.choice(gens)


def rand_term(rng, sig, gens, depth, max_width=3):
    """A random well-typed term over the given generator names."""
    if depth <= 0:
        roll = rng.random()
        if roll < 0.6:
            return Gen(_rand_gen_name(rng, gens))
        if roll < 0.8:
            return Id(rng.randint(0, max_width))
        return Sym(rng.randint(0, max_width), rng.randint(0, max_width))
    if rng.random() < 0.5:
        top = rand_term(rng, sig, gens, depth - 1, max_width)
        bottom = rand_term(rng, sig, gens, depth - 1, max_width)
        return Par(top, bottom)
    first = rand_term(rng, sig, gens, depth - 1, max_width)
    _d, c = arity(first, sig)
    return Seq(first, rand_term_with_dom(rng, sig, gens, c, depth - 1))


def rand_term_with_dom(rng, sig, gens, dom, depth):
    """A random well-typed term whose domain is exactly dom."""
    parts = []
    left = dom
    while left > 0:
        candidates = [g for g in gens if 0 < sig.arity_of(g)[0] <= left]
        if candidates and rng.random() < 0.6:
            g = rng.choice(candidates)
            parts.append(Gen(g))
            left -= sig.arity_of(g)[0]
        else:
            parts.append(Id(1))
            left -= 1
    if rng.random() < 0.3:
        zero_dom = [g for g in gens if sig.arity_of(g)[0] == 0]
        if zero_dom:
            parts.insert(rng.randrange(len(parts) + 1),
                         Gen(rng.choice(zero_dom)))
    if not parts:
        return Id(0)
    t = par(*parts)
    if depth > 0 and rng.random() < 0.6:
        _d, c = arity(t, sig)
        return Seq(t, rand_term_with_dom(rng, sig, gens, c, depth - 1))
    return t


def rand_circuit_gens(rng, with_sources=False):
    names = ["m", "i", "d", "e", "label:wire",
             "label:resistor:" + str(rng.randint(1, 5)),
             "label:inductor:" + str(rng.randint(1, 5)),
             "label:capacitor:" + str(rng.randint(1, 5)),
             "label:impedance:" + str(rng.randint(1, 5))]
    if with_sources:
        names += ["label:vsource:" + str(rng.randint(1, 5)),
                  "label:isource:" + str(rng.randint(1, 5))]
    return names

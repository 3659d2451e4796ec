"""Labeled circuits: graphs with input/output legs, glued by pushout.

A circuit value is kept up to isomorphism: equality renumbers nodes into a
canonical order (legs by first occurrence, internal nodes by the cheapest
permutation) and compares the resulting encodings.  Leg maps are fixed
pointwise by isomorphisms, so only internal nodes ever need searching, and
at desk scale there are few of them.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction

from .scalar import RatFunc, parse_rat, parse_ratfunc, format_scalar
from .setprops import Cospan, InterfaceMismatch, _UnionFind
from .term import PropModel, Signature, UnknownGenerator

LABEL_KINDS = ("wire", "impedance", "resistor", "inductor", "capacitor",
               "vsource", "isource")

SOURCE_KINDS = ("vsource", "isource")


@dataclass(frozen=True)
class EdgeLabel:
    kind: str
    value: object = None

    def __post_init__(self):
        if self.kind not in LABEL_KINDS:
            raise ValueError(f"unknown label kind {self.kind!r}")
        if self.kind == "wire":
            if self.value is not None:
                raise ValueError("wire takes no value")
        elif self.kind in ("resistor", "inductor", "capacitor"):
            if not isinstance(self.value, Fraction) or self.value <= 0:
                raise ValueError(f"{self.kind} needs a positive rational")
        else:
            if not isinstance(self.value, RatFunc):
                raise ValueError(f"{self.kind} needs a rational function")

    def sort_key(self):
        return (self.kind, "" if self.value is None
                else format_scalar(self.value))


WIRE = EdgeLabel("wire")


def parse_label(kind: str, literal: str | None = None) -> EdgeLabel:
    if kind == "wire":
        return WIRE
    if literal is None:
        raise ValueError(f"label kind {kind!r} needs a value")
    if kind in ("resistor", "inductor", "capacitor"):
        return EdgeLabel(kind, parse_rat(literal))
    return EdgeLabel(kind, parse_ratfunc(literal))


class LGraph:
    __slots__ = ("node_count", "edges")

    def __init__(self, node_count: int, edges):
        edges = [(int(s), int(t), lab) for s, t, lab in edges]
        for s, t, lab in edges:
            if not (0 <= s < node_count and 0 <= t < node_count):
                raise ValueError("edge endpoint out of range")
            if not isinstance(lab, EdgeLabel):
                raise TypeError("edge label must be an EdgeLabel")
        self.node_count = node_count
        self.edges = tuple(edges)


class LCircuit:
    __slots__ = ("graph", "inputs", "outputs", "_canon")

    def __init__(self, graph: LGraph, inputs, outputs):
        inputs = tuple(int(i) for i in inputs)
        outputs = tuple(int(i) for i in outputs)
        for i in inputs + outputs:
            if not 0 <= i < graph.node_count:
                raise ValueError("leg index out of range")
        self.graph = graph
        self.inputs = inputs
        self.outputs = outputs
        self._canon = None

    @property
    def m(self):
        return len(self.inputs)

    @property
    def n(self):
        return len(self.outputs)

    @classmethod
    def identity(cls, n: int) -> "LCircuit":
        return cls(LGraph(n, []), range(n), range(n))

    @classmethod
    def symmetry(cls, m: int, n: int) -> "LCircuit":
        outs = [m + j for j in range(n)] + list(range(m))
        return cls(LGraph(m + n, []), range(m + n), outs)

    @classmethod
    def single_edge(cls, label: EdgeLabel) -> "LCircuit":
        return cls(LGraph(2, [(0, 1, label)]), [0], [1])

    def renumber(self, perm) -> "LCircuit":
        """perm maps old node index -> new node index (a bijection)."""
        edges = [(perm[s], perm[t], lab) for s, t, lab in self.graph.edges]
        return LCircuit(LGraph(self.graph.node_count, edges),
                        [perm[i] for i in self.inputs],
                        [perm[i] for i in self.outputs])

    def tensor(self, other: "LCircuit") -> "LCircuit":
        off = self.graph.node_count
        edges = list(self.graph.edges)
        edges += [(s + off, t + off, lab) for s, t, lab in other.graph.edges]
        return LCircuit(
            LGraph(off + other.graph.node_count, edges),
            self.inputs + tuple(i + off for i in other.inputs),
            self.outputs + tuple(i + off for i in other.outputs))

    def compose(self, other: "LCircuit") -> "LCircuit":
        if self.n != other.m:
            raise InterfaceMismatch(
                f"cannot compose {self.n} -> with {other.m} <-")
        off = self.graph.node_count
        total = off + other.graph.node_count
        uf = _UnionFind()
        for v in range(total):
            uf.find(v)
        for a, b in zip(self.outputs, other.inputs):
            uf.union(a, b + off)
        # renumber quotient classes by first occurrence
        order = []
        seen = {}

        def visit(v):
            r = uf.find(v)
            if r not in seen:
                seen[r] = len(order)
                order.append(r)
            return seen[r]

        inputs = [visit(i) for i in self.inputs]
        outputs_pending = [o + off for o in other.outputs]
        edges_pending = list(self.graph.edges)
        edges_pending += [(s + off, t + off, lab)
                          for s, t, lab in other.graph.edges]
        outputs = [visit(o) for o in outputs_pending]
        edges = [(visit(s), visit(t), lab) for s, t, lab in edges_pending]
        for v in range(total):
            visit(v)
        return LCircuit(LGraph(len(order), edges), inputs, outputs)

    def canonical_key(self):
        if self._canon is not None:
            return self._canon
        g = self.graph
        placed = {}
        for v in self.inputs + self.outputs:
            if v not in placed:
                placed[v] = len(placed)
        internal = [v for v in range(g.node_count) if v not in placed]
        base = len(placed)
        best = None
        if len(internal) > 9:
            raise ValueError("circuit too large for canonical renumbering")
        for perm in itertools.permutations(range(len(internal))):
            full = dict(placed)
            for v, p in zip(internal, perm):
                full[v] = base + p
            edges = sorted((full[s], full[t], lab.sort_key())
                           for s, t, lab in g.edges)
            key = (g.node_count,
                   tuple(placed[i] for i in self.inputs),
                   tuple(placed[o] for o in self.outputs),
                   tuple(edges))
            if best is None or key < best:
                best = key
        if best is None:
            best = (g.node_count,
                    tuple(placed[i] for i in self.inputs),
                    tuple(placed[o] for o in self.outputs),
                    ())
        self._canon = best
        return best

    def __eq__(self, other):
        if not isinstance(other, LCircuit):
            return NotImplemented
        return self.canonical_key() == other.canonical_key()

    def __hash__(self):
        return hash(self.canonical_key())

    def __repr__(self):
        return (f"LCircuit({self.graph.node_count} nodes, "
                f"{len(self.graph.edges)} edges, {self.m}->{self.n})")


def pi0_cospan(c: LCircuit) -> Cospan:
    """Connected components of the underlying graph, as a cospan."""
    uf = _UnionFind()
    for v in range(c.graph.node_count):
        uf.find(v)
    for s, t, _lab in c.graph.edges:
        uf.union(s, t)
    comp_terminals = {}
    for idx, v in enumerate(c.inputs):
        comp_terminals.setdefault(uf.find(v), []).append(("x", idx))
    for idx, v in enumerate(c.outputs):
        comp_terminals.setdefault(uf.find(v), []).append(("y", idx))
    roots = {uf.find(v) for v in range(c.graph.node_count)}
    blocks = [terms for terms in comp_terminals.values()]
    extras = len(roots) - len(comp_terminals)
    return Cospan(c.m, c.n, blocks, extras)


# ---------------------------------------------------------------------------
# Circuit-valued prop model

def _label_resolver(name):
    if name.startswith("label:"):
        return (1, 1)
    return None


CIRCUIT_SIGNATURE = Signature({"m": (2, 1), "i": (0, 1), "d": (1, 2),
                               "e": (1, 0)}, resolver=_label_resolver)


def label_from_gen_name(name: str) -> EdgeLabel:
    parts = name.split(":")
    if parts[0] != "label":
        raise UnknownGenerator(name)
    kind = parts[1]
    literal = ":".join(parts[2:]) if len(parts) > 2 else None
    return parse_label(kind, literal)


class CircuitModel(PropModel):
    """Evaluates circuit terms to concrete circuits (the quotient map from
    free syntax to circuits-up-to-iso)."""

    width = 1
    signature = CIRCUIT_SIGNATURE

    GENERATORS = {
        "m": LCircuit(LGraph(1, []), [0, 0], [0]),
        "i": LCircuit(LGraph(1, []), [], [0]),
        "d": LCircuit(LGraph(1, []), [0], [0, 0]),
        "e": LCircuit(LGraph(1, []), [0], []),
    }

    def gen(self, name):
        if name in self.GENERATORS:
            return self.GENERATORS[name]
        return LCircuit.single_edge(label_from_gen_name(name))

    def identity(self, n):
        return LCircuit.identity(n)

    def symmetry(self, m, n):
        return LCircuit.symmetry(m, n)

    def seq(self, a, b):
        return a.compose(b)

    def par(self, a, b):
        return a.tensor(b)

    def eq(self, a, b):
        return a == b


# ---------------------------------------------------------------------------
# JSON circuit files

def circuit_to_json(c: LCircuit) -> dict:
    edges = []
    for s, t, lab in c.graph.edges:
        entry = {"src": s, "tgt": t, "label": {"kind": lab.kind}}
        if lab.value is not None:
            entry["label"]["value"] = format_scalar(lab.value)
        edges.append(entry)
    return {"nodes": c.graph.node_count, "edges": edges,
            "inputs": list(c.inputs), "outputs": list(c.outputs)}


def circuit_from_json(data: dict) -> LCircuit:
    edges = []
    for entry in data.get("edges", []):
        lab = entry["label"]
        edges.append((entry["src"], entry["tgt"],
                      parse_label(lab["kind"], lab.get("value"))))
    return LCircuit(LGraph(data["nodes"], edges),
                    data.get("inputs", []), data.get("outputs", []))


def load_circuit(path) -> LCircuit:
    with open(path, encoding="utf-8") as fh:
        return circuit_from_json(json.load(fh))


def dump_circuit(c: LCircuit, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(circuit_to_json(c), fh, indent=2)

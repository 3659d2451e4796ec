"""Set-based props: corelations, cospans, natural-number spans, boolean
relations, and the functors between them.

A corelation m -> n is a partition of the tagged terminal set
{x_0..x_{m-1}} + {y_0..y_{n-1}}; a cospan additionally counts apex points
touching no terminal.  Composition glues along the shared boundary and
keeps a block exactly when it reaches a remaining terminal ("path"
connectivity); a cospan turns each dropped middle-only block into one
extra apex point.
"""

from __future__ import annotations

from .term import PropModel, Signature, UnknownGenerator


class InterfaceMismatch(ValueError):
    pass


def _xkey(el):
    tag, i = el
    return (0 if tag == "x" else 1, i)


def _canonical_blocks(blocks):
    blocks = [tuple(sorted(b, key=_xkey)) for b in blocks]
    blocks.sort(key=lambda b: _xkey(b[0]))
    return tuple(blocks)


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        p = self.parent.setdefault(x, x)
        if p != x:
            p = self.parent[x] = self.find(p)
        return p

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[ry] = rx

    def groups(self):
        out = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return list(out.values())


class Corelation:
    __slots__ = ("m", "n", "blocks")

    def __init__(self, m: int, n: int, blocks):
        self.m = m
        self.n = n
        blocks = _canonical_blocks(blocks)
        seen = set()
        for b in blocks:
            if not b:
                raise ValueError("empty block")
            for el in b:
                tag, i = el
                limit = m if tag == "x" else n
                if tag not in ("x", "y") or not 0 <= i < limit:
                    raise ValueError(f"bad terminal {el!r}")
                if el in seen:
                    raise ValueError(f"terminal {el!r} in two blocks")
                seen.add(el)
        if len(seen) != m + n:
            raise ValueError("blocks do not cover all terminals")
        self.blocks = blocks

    @classmethod
    def identity(cls, n: int) -> "Corelation":
        return cls(n, n, [(("x", i), ("y", i)) for i in range(n)])

    @classmethod
    def symmetry(cls, m: int, n: int) -> "Corelation":
        blocks = [(("x", i), ("y", n + i)) for i in range(m)]
        blocks += [(("x", m + j), ("y", j)) for j in range(n)]
        return cls(m + n, n + m, blocks)

    @classmethod
    def from_pairs(cls, m: int, n: int, pairs) -> "Corelation":
        """Partition generated by joining the given terminal pairs."""
        uf = _UnionFind()
        for i in range(m):
            uf.find(("x", i))
        for j in range(n):
            uf.find(("y", j))
        for a, b in pairs:
            uf.union(a, b)
        return cls(m, n, uf.groups())

    def dagger(self) -> "Corelation":
        swap = {"x": "y", "y": "x"}
        return Corelation(self.n, self.m,
                          [tuple((swap[t], i) for t, i in b)
                           for b in self.blocks])

    def tensor(self, other: "Corelation") -> "Corelation":
        blocks = list(self.blocks)
        for b in other.blocks:
            blocks.append(tuple(
                (t, i + (self.m if t == "x" else self.n)) for t, i in b))
        return Corelation(self.m + other.m, self.n + other.n, blocks)

    def compose(self, other: "Corelation") -> "Corelation":
        part, _dropped = _compose_blocks(self, other)
        return Corelation(self.m, other.n, part)

    def __eq__(self, other):
        return (isinstance(other, Corelation) and self.m == other.m
                and self.n == other.n and self.blocks == other.blocks)

    def __hash__(self):
        return hash((self.m, self.n, self.blocks))

    def __repr__(self):
        return f"Corelation({format_corel(self)!r})"


def _compose_blocks(f, g):
    """Glued boundary partition of f;g plus the count of dropped blocks."""
    if f.n != g.m:
        raise InterfaceMismatch(f"cannot compose {f.n} -> with {g.m} <-")
    uf = _UnionFind()
    for i in range(f.m):
        uf.find(("x", i))
    for j in range(g.n):
        uf.find(("z", j))
    for j in range(f.n):
        uf.find(("mid", j))
    for b in f.blocks:
        first = None
        for t, i in b:
            el = ("x", i) if t == "x" else ("mid", i)
            if first is None:
                first = el
            else:
                uf.union(first, el)
    for b in g.blocks:
        first = None
        for t, i in b:
            el = ("mid", i) if t == "x" else ("z", i)
            if first is None:
                first = el
            else:
                uf.union(first, el)
    blocks = []
    dropped = 0
    for grp in uf.groups():
        boundary = [("x", i) if t == "x" else ("y", i)
                    for t, i in grp if t != "mid"]
        if boundary:
            blocks.append(boundary)
        else:
            dropped += 1
    return blocks, dropped


class Cospan:
    """Iso class of a finite-set cospan: boundary partition + untouched
    apex points."""

    __slots__ = ("corel", "extras")

    def __init__(self, m, n, blocks, extras=0):
        if extras < 0:
            raise ValueError("extras must be >= 0")
        self.corel = Corelation(m, n, blocks)
        self.extras = extras

    @property
    def m(self):
        return self.corel.m

    @property
    def n(self):
        return self.corel.n

    @property
    def blocks(self):
        return self.corel.blocks

    @classmethod
    def identity(cls, n: int) -> "Cospan":
        c = Corelation.identity(n)
        return cls(c.m, c.n, c.blocks)

    @classmethod
    def symmetry(cls, m: int, n: int) -> "Cospan":
        c = Corelation.symmetry(m, n)
        return cls(c.m, c.n, c.blocks)

    def dagger(self) -> "Cospan":
        c = self.corel.dagger()
        return Cospan(c.m, c.n, c.blocks, self.extras)

    def tensor(self, other: "Cospan") -> "Cospan":
        c = self.corel.tensor(other.corel)
        return Cospan(c.m, c.n, c.blocks, self.extras + other.extras)

    def compose(self, other: "Cospan") -> "Cospan":
        part, dropped = _compose_blocks(self.corel, other.corel)
        return Cospan(self.m, other.n, part,
                      self.extras + other.extras + dropped)

    def __eq__(self, other):
        return (isinstance(other, Cospan) and self.corel == other.corel
                and self.extras == other.extras)

    def __hash__(self):
        return hash((self.corel, self.extras))

    def __repr__(self):
        return f"Cospan({format_corel(self.corel)!r}, extras={self.extras})"


def cospan_to_corel(c: Cospan) -> Corelation:
    """The functor H: forget the apex points away from the boundary."""
    return c.corel


class NatSpan:
    """Iso class of a span of finite sets: an n x m matrix of multiplicities."""

    __slots__ = ("m", "n", "matrix")

    def __init__(self, m, n, matrix):
        matrix = tuple(tuple(int(x) for x in row) for row in matrix)
        if len(matrix) != n or any(len(r) != m for r in matrix):
            raise ValueError(f"matrix must be {n}x{m}")
        if any(x < 0 for r in matrix for x in r):
            raise ValueError("entries must be natural numbers")
        self.m = m
        self.n = n
        self.matrix = matrix

    @classmethod
    def identity(cls, n: int) -> "NatSpan":
        return cls(n, n, [[1 if i == j else 0 for j in range(n)]
                          for i in range(n)])

    @classmethod
    def symmetry(cls, m: int, n: int) -> "NatSpan":
        size = m + n
        mat = [[0] * size for _ in range(size)]
        for i in range(m):
            mat[n + i][i] = 1
        for j in range(n):
            mat[j][m + j] = 1
        return cls(size, size, mat)

    def tensor(self, other: "NatSpan") -> "NatSpan":
        mat = [[0] * (self.m + other.m) for _ in range(self.n + other.n)]
        for i in range(self.n):
            for j in range(self.m):
                mat[i][j] = self.matrix[i][j]
        for i in range(other.n):
            for j in range(other.m):
                mat[self.n + i][self.m + j] = other.matrix[i][j]
        return NatSpan(self.m + other.m, self.n + other.n, mat)

    def compose(self, other: "NatSpan") -> "NatSpan":
        if self.n != other.m:
            raise InterfaceMismatch(
                f"cannot compose {self.n} -> with {other.m} <-")
        mat = [[sum(other.matrix[i][k] * self.matrix[k][j]
                    for k in range(self.n))
                for j in range(self.m)] for i in range(other.n)]
        return NatSpan(self.m, other.n, mat)

    def __eq__(self, other):
        return (isinstance(other, NatSpan) and self.m == other.m
                and self.n == other.n and self.matrix == other.matrix)

    def __hash__(self):
        return hash((self.m, self.n, self.matrix))

    def __repr__(self):
        return f"NatSpan({self.m}->{self.n}, {self.matrix})"


class BoolRel:
    __slots__ = ("m", "n", "matrix")

    def __init__(self, m, n, matrix):
        matrix = tuple(tuple(bool(x) for x in row) for row in matrix)
        if len(matrix) != n or any(len(r) != m for r in matrix):
            raise ValueError(f"matrix must be {n}x{m}")
        self.m = m
        self.n = n
        self.matrix = matrix

    @classmethod
    def identity(cls, n: int) -> "BoolRel":
        return cls(n, n, [[i == j for j in range(n)] for i in range(n)])

    @classmethod
    def symmetry(cls, m: int, n: int) -> "BoolRel":
        s = NatSpan.symmetry(m, n)
        return support(s)

    def tensor(self, other: "BoolRel") -> "BoolRel":
        mat = [[False] * (self.m + other.m) for _ in range(self.n + other.n)]
        for i in range(self.n):
            for j in range(self.m):
                mat[i][j] = self.matrix[i][j]
        for i in range(other.n):
            for j in range(other.m):
                mat[self.n + i][self.m + j] = other.matrix[i][j]
        return BoolRel(self.m + other.m, self.n + other.n, mat)

    def compose(self, other: "BoolRel") -> "BoolRel":
        if self.n != other.m:
            raise InterfaceMismatch(
                f"cannot compose {self.n} -> with {other.m} <-")
        mat = [[any(other.matrix[i][k] and self.matrix[k][j]
                    for k in range(self.n))
                for j in range(self.m)] for i in range(other.n)]
        return BoolRel(self.m, other.n, mat)

    def __eq__(self, other):
        return (isinstance(other, BoolRel) and self.m == other.m
                and self.n == other.n and self.matrix == other.matrix)

    def __hash__(self):
        return hash((self.m, self.n, self.matrix))

    def __repr__(self):
        return f"BoolRel({self.m}->{self.n}, {self.matrix})"


def support(s: NatSpan) -> BoolRel:
    """The functor M: a span is sent to its underlying relation."""
    return BoolRel(s.m, s.n, [[x > 0 for x in row] for row in s.matrix])


# ---------------------------------------------------------------------------
# Prop models

WIRE_SIGNATURE = Signature({"m": (2, 1), "i": (0, 1), "d": (1, 2),
                            "e": (1, 0)})


class _ValueModel(PropModel):
    """Model whose carrier type provides identity/symmetry/tensor/compose."""

    carrier = None

    def __init__(self, width: int = 1):
        self.width = width
        self.signature = WIRE_SIGNATURE

    def identity(self, n):
        return self.carrier.identity(self.width * n)

    def symmetry(self, m, n):
        return self.carrier.symmetry(self.width * m, self.width * n)

    def seq(self, a, b):
        return a.compose(b)

    def par(self, a, b):
        return a.tensor(b)

    def eq(self, a, b):
        return a == b


class CorelModel(_ValueModel):
    carrier = Corelation

    GENERATORS = {
        "m": Corelation(2, 1, [(("x", 0), ("x", 1), ("y", 0))]),
        "i": Corelation(0, 1, [(("y", 0),)]),
        "d": Corelation(1, 2, [(("x", 0), ("y", 0), ("y", 1))]),
        "e": Corelation(1, 0, [(("x", 0),)]),
    }

    def gen(self, name):
        try:
            return self.GENERATORS[name]
        except KeyError:
            raise UnknownGenerator(name) from None


class CospanModel(_ValueModel):
    carrier = Cospan

    def gen(self, name):
        c = CorelModel.GENERATORS.get(name)
        if c is None:
            raise UnknownGenerator(name)
        return Cospan(c.m, c.n, c.blocks)


class NatSpanModel(_ValueModel):
    carrier = NatSpan

    GENERATORS = {
        "m": NatSpan(2, 1, [[1, 1]]),
        "i": NatSpan(0, 1, [[]]),
        "d": NatSpan(1, 2, [[1], [1]]),
        "e": NatSpan(1, 0, []),
    }

    def gen(self, name):
        try:
            return self.GENERATORS[name]
        except KeyError:
            raise UnknownGenerator(name) from None


class BoolRelModel(_ValueModel):
    carrier = BoolRel

    def gen(self, name):
        s = NatSpanModel.GENERATORS.get(name)
        if s is None:
            raise UnknownGenerator(name)
        return support(s)


# ---------------------------------------------------------------------------
# Textual corelation format: corel m n { {x1 x2 y1} {y2} }

def format_corel(c: Corelation) -> str:
    def fmt_el(el):
        tag, i = el
        return f"{tag}{i + 1}"

    inner = " ".join("{" + " ".join(fmt_el(e) for e in b) + "}"
                     for b in c.blocks)
    return f"corel {c.m} {c.n} {{ {inner} }}".replace("{  }", "{ }")


def parse_corel(src: str) -> Corelation:
    tokens = src.replace("{", " { ").replace("}", " } ").split()
    if len(tokens) < 5 or tokens[0] != "corel":
        raise ValueError("expected: corel m n { ... }")
    m, n = int(tokens[1]), int(tokens[2])
    if tokens[3] != "{" or tokens[-1] != "}":
        raise ValueError("expected braces around block list")
    blocks = []
    cur = None
    for tok in tokens[4:-1]:
        if tok == "{":
            if cur is not None:
                raise ValueError("nested block")
            cur = []
        elif tok == "}":
            if cur is None:
                raise ValueError("unbalanced '}'")
            blocks.append(cur)
            cur = None
        else:
            tag, idx = tok[0], tok[1:]
            if tag not in "xy" or not idx.isdigit():
                raise ValueError(f"bad terminal {tok!r}")
            cur.append((tag, int(idx) - 1))
    if cur is not None:
        raise ValueError("unbalanced '{'")
    return Corelation(m, n, blocks)

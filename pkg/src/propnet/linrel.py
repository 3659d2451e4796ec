"""Linear relations as canonical subspaces, symplectic predicates, the
functor from corelations to potential/current relations, and black-boxing
of linear circuits.

Coordinate convention: domain ports first, then codomain ports; a circuit
port carries the pair (phi, I) in that order.  The symplectic form per
port is w((phi, I), (phi', I')) = phi I' - phi' I, with the conjugate
(negated) form on the domain block so that identities come out Lagrangian.
"""

from __future__ import annotations

from .exactla import Mat, Subspace, kernel
from .scalar import Field, QS, RatFunc
from .setprops import Corelation, InterfaceMismatch
from .circuit import (CIRCUIT_SIGNATURE, EdgeLabel, LCircuit,
                      label_from_gen_name)
from .term import PropModel, UnknownGenerator


class OddDimension(ValueError):
    pass


class UnsupportedLabel(ValueError):
    pass


class LinRel:
    """Linear relation k^dom -> k^cod as a canonical subspace of
    k^(dom+cod)."""

    __slots__ = ("dom", "cod", "space")

    def __init__(self, dom: int, cod: int, space: Subspace):
        if space.ambient != dom + cod:
            raise ValueError("ambient dimension must be dom + cod")
        self.dom = dom
        self.cod = cod
        self.space = space

    @property
    def field(self) -> Field:
        return self.space.field

    @classmethod
    def from_vectors(cls, field, dom, cod, vectors) -> "LinRel":
        return cls(dom, cod, Subspace(field, dom + cod, vectors))

    @classmethod
    def from_constraints(cls, field, dom, cod, rows) -> "LinRel":
        """Relation cut out by homogeneous constraint rows."""
        rows = list(rows)
        if not rows:
            return cls(dom, cod, Subspace.full(field, dom + cod))
        m = Mat.from_rows(field, rows)
        if m.cols != dom + cod:
            raise ValueError("constraint width must be dom + cod")
        return cls(dom, cod, kernel(m))

    @classmethod
    def identity(cls, field, n: int) -> "LinRel":
        vecs = []
        for i in range(n):
            v = [field.zero] * (2 * n)
            v[i] = field.one
            v[n + i] = field.one
            vecs.append(v)
        return cls.from_vectors(field, n, n, vecs)

    @classmethod
    def symmetry(cls, field, m: int, n: int) -> "LinRel":
        vecs = []
        size = m + n
        for i in range(m):
            v = [field.zero] * (2 * size)
            v[i] = field.one
            v[size + n + i] = field.one
            vecs.append(v)
        for j in range(n):
            v = [field.zero] * (2 * size)
            v[m + j] = field.one
            v[size + j] = field.one
            vecs.append(v)
        return cls.from_vectors(field, size, size, vecs)

    def compose(self, other: "LinRel") -> "LinRel":
        if self.cod != other.dom:
            raise InterfaceMismatch(
                f"cannot compose {self.cod} -> with {other.dom} <-")
        field = self.field
        a = len(self.space.basis)
        b = len(other.space.basis)
        mid = self.cod
        # rows: middle coordinates; columns: coefficients on f's basis then
        # (negated) on g's basis.  Kernel elements are matching combinations.
        rows = []
        for r in range(mid):
            row = [v[self.dom + r] for v in self.space.basis]
            row += [-w[r] for w in other.space.basis]
            rows.append(row)
        if not rows:
            combos = [[field.one if i == j else field.zero
                       for j in range(a + b)] for i in range(a + b)]
            # no middle constraints: all coefficient pairs pass; but only
            # independent choices of each side matter, handled by the span.
            sol = Subspace(field, a + b, combos)
        else:
            sol = kernel(Mat.from_rows(field, rows))
        vecs = []
        for cvec in sol.basis:
            u = [field.zero] * self.dom
            w = [field.zero] * other.cod
            for coeff, bvec in zip(cvec[:a], self.space.basis):
                if coeff != field.zero:
                    for idx in range(self.dom):
                        u[idx] = u[idx] + coeff * bvec[idx]
            for coeff, bvec in zip(cvec[a:], other.space.basis):
                if coeff != field.zero:
                    for idx in range(other.cod):
                        w[idx] = w[idx] + coeff * bvec[other.dom + idx]
            vecs.append(u + w)
        return LinRel.from_vectors(field, self.dom, other.cod, vecs)

    def tensor(self, other: "LinRel") -> "LinRel":
        field = self.field
        dom = self.dom + other.dom
        cod = self.cod + other.cod
        vecs = []
        for v in self.space.basis:
            vv = (list(v[:self.dom]) + [field.zero] * other.dom
                  + list(v[self.dom:]) + [field.zero] * other.cod)
            vecs.append(vv)
        for w in other.space.basis:
            vv = ([field.zero] * self.dom + list(w[:other.dom])
                  + [field.zero] * self.cod + list(w[other.dom:]))
            vecs.append(vv)
        return LinRel.from_vectors(field, dom, cod, vecs)

    def dagger(self) -> "LinRel":
        vecs = [list(v[self.dom:]) + list(v[:self.dom])
                for v in self.space.basis]
        return LinRel.from_vectors(self.field, self.cod, self.dom, vecs)

    def __eq__(self, other):
        if not isinstance(other, LinRel):
            return NotImplemented
        return (self.dom == other.dom and self.cod == other.cod
                and self.space == other.space)

    def __hash__(self):
        return hash((self.dom, self.cod, self.space))

    def __repr__(self):
        return (f"LinRel({self.dom}->{self.cod}, "
                f"dim {self.space.dim} over {self.field.name})")


def is_lagrangian(rel: LinRel) -> bool:
    """Maximal isotropy under the conjugate-domain symplectic form, with
    coordinates read as (phi, I) pairs."""
    if rel.dom % 2 or rel.cod % 2:
        raise OddDimension("ports carry (phi, I) pairs; dimensions must be even")
    mports = rel.dom // 2
    nports = rel.cod // 2
    if rel.space.dim != mports + nports:
        return False
    field = rel.field

    def omega(u, v):
        acc = field.zero
        for p in range(mports + nports):
            phi_u, i_u = u[2 * p], u[2 * p + 1]
            phi_v, i_v = v[2 * p], v[2 * p + 1]
            term = phi_u * i_v - phi_v * i_u
            if p < mports:
                acc = acc - term
            else:
                acc = acc + term
        return acc

    basis = rel.space.basis
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            if omega(basis[i], basis[j]) != field.zero:
                return False
    return True


def K_corel(field: Field, c: Corelation) -> LinRel:
    """Per connected block: all potentials equal; input current flowing in
    equals output current flowing out."""
    m, n = c.m, c.n

    def phi(el):
        tag, i = el
        return 2 * i if tag == "x" else 2 * (m + i)

    def cur(el):
        return phi(el) + 1

    width = 2 * (m + n)
    rows = []
    for block in c.blocks:
        first = block[0]
        for el in block[1:]:
            row = [field.zero] * width
            row[phi(first)] = field.one
            row[phi(el)] = -field.one
            rows.append(row)
        row = [field.zero] * width
        for el in block:
            tag, _ = el
            row[cur(el)] = field.one if tag == "x" else -field.one
        rows.append(row)
    return LinRel.from_constraints(field, 2 * m, 2 * n, rows)


class CorelToLinRelModel(PropModel):
    """Wire-generator model whose values are potential/current relations."""

    width = 2

    def __init__(self, field: Field = QS):
        self.field = field
        self.signature = CIRCUIT_SIGNATURE

    def gen(self, name):
        from .setprops import CorelModel
        if name in CorelModel.GENERATORS:
            return K_corel(self.field, CorelModel.GENERATORS[name])
        return rlc_rel(self.field, label_from_gen_name(name))

    def identity(self, n):
        return LinRel.identity(self.field, 2 * n)

    def symmetry(self, m, n):
        return LinRel.symmetry(self.field, 2 * m, 2 * n)

    def seq(self, a, b):
        return a.compose(b)

    def par(self, a, b):
        return a.tensor(b)

    def eq(self, a, b):
        return a == b


def impedance_rel(field: Field, z) -> LinRel:
    """{phi2 - phi1 = Z I1, I1 = I2} on one port in and one port out."""
    z = field.coerce(z)
    one, zero = field.one, field.zero
    rows = [
        [-one, -z, one, zero],
        [zero, one, zero, -one],
    ]
    return LinRel.from_constraints(field, 2, 2, rows)


def rlc_rel(field: Field, label: EdgeLabel) -> LinRel:
    one, zero = field.one, field.zero
    if label.kind == "wire":
        return impedance_rel(field, field.zero)
    if label.kind == "impedance":
        return impedance_rel(field, label.value)
    if label.kind == "resistor":
        return impedance_rel(field, field.coerce(label.value))
    if label.kind == "inductor":
        s = field.coerce(RatFunc.s())
        return impedance_rel(field, s * field.coerce(label.value))
    if label.kind == "capacitor":
        sC = field.coerce(RatFunc.s()) * field.coerce(label.value)
        rows = [
            [-sC, -one, sC, zero],
            [zero, one, zero, -one],
        ]
        return LinRel.from_constraints(field, 2, 2, rows)
    raise UnsupportedLabel(f"{label.kind} has no linear behavior")


def label_constraint_rows(field: Field, label: EdgeLabel):
    """Constraint rows of the label's behavior over (phi1, I1, phi2, I2)."""
    rel = rlc_rel(field, label)
    return rel.space.annihilator().basis


def blackbox(c: LCircuit, field: Field = QS) -> LinRel:
    """Direct elimination: solve for boundary (phi, I) given one potential
    unknown per node and one current unknown per edge."""
    for _s, _t, lab in c.graph.edges:
        if lab.kind in ("vsource", "isource"):
            raise UnsupportedLabel(
                "source labels need the affine black-boxing")
    m, n = c.m, c.n
    nb = 2 * (m + n)
    nnodes = c.graph.node_count
    nedges = len(c.graph.edges)
    width = nb + nnodes + nedges

    def phi_in(i):
        return 2 * i

    def cur_in(i):
        return 2 * i + 1

    def phi_out(j):
        return 2 * (m + j)

    def cur_out(j):
        return 2 * (m + j) + 1

    def node_var(v):
        return nb + v

    def edge_var(e):
        return nb + nnodes + e

    zero, one = field.zero, field.one
    rows = []
    # terminal potential = node potential
    for i, v in enumerate(c.inputs):
        row = [zero] * width
        row[phi_in(i)] = one
        row[node_var(v)] = -one
        rows.append(row)
    for j, v in enumerate(c.outputs):
        row = [zero] * width
        row[phi_out(j)] = one
        row[node_var(v)] = -one
        rows.append(row)
    # per-edge label behavior on (phi_src, J, phi_tgt, J)
    for e, (s, t, lab) in enumerate(c.graph.edges):
        for crow in label_constraint_rows(field, lab):
            a_phi1, a_i1, a_phi2, a_i2 = crow
            row = [zero] * width
            row[node_var(s)] = row[node_var(s)] + a_phi1
            row[node_var(t)] = row[node_var(t)] + a_phi2
            row[edge_var(e)] = row[edge_var(e)] + a_i1 + a_i2
            rows.append(row)
    # Kirchhoff current balance per node
    for v in range(nnodes):
        row = [zero] * width
        for i, iv in enumerate(c.inputs):
            if iv == v:
                row[cur_in(i)] = row[cur_in(i)] + one
        for j, ov in enumerate(c.outputs):
            if ov == v:
                row[cur_out(j)] = row[cur_out(j)] - one
        for e, (s, t, _lab) in enumerate(c.graph.edges):
            if s == v:
                row[edge_var(e)] = row[edge_var(e)] - one
            if t == v:
                row[edge_var(e)] = row[edge_var(e)] + one
        if any(x != zero for x in row):
            rows.append(row)
    if rows:
        sol = kernel(Mat.from_rows(field, rows))
    else:
        sol = Subspace.full(field, width)
    vecs = [v[:nb] for v in sol.basis]
    return LinRel.from_vectors(field, 2 * m, 2 * n, vecs)


# ---------------------------------------------------------------------------
# Relation printing and parsing

def port_var_names(mports: int, nports: int):
    names = []
    for i in range(mports):
        names += [f"phi_in_{i + 1}", f"I_in_{i + 1}"]
    for j in range(nports):
        names += [f"phi_out_{j + 1}", f"I_out_{j + 1}"]
    return names


def format_linear_combination(field, coeffs, names) -> str:
    parts = []
    for cval, name in zip(coeffs, names):
        if cval == field.zero:
            continue
        lit = field.fmt(cval)
        neg = lit.startswith("-")
        mag = lit[1:] if neg else lit
        if mag == "1":
            text = name
        else:
            if any(ch in mag for ch in "+-/ ") and not (
                    mag.startswith("(") and mag.endswith(")")):
                mag = f"({mag})"
            text = f"{mag}*{name}"
        if not parts:
            parts.append(f"-{text}" if neg else text)
        else:
            parts.append(f" - {text}" if neg else f" + {text}")
    return "".join(parts) if parts else "0"


def format_linrel(rel: LinRel) -> str:
    if rel.dom % 2 or rel.cod % 2:
        raise OddDimension("printing expects (phi, I) ports")
    names = port_var_names(rel.dom // 2, rel.cod // 2)
    ann = rel.space.annihilator()
    if not ann.basis:
        return "(no constraints)"
    field = rel.field
    return "\n".join(
        f"{format_linear_combination(field, row, names)} = 0"
        for row in ann.basis)


def parse_linrel(src: str, mports: int, nports: int,
                 field: Field = QS) -> LinRel:
    names = port_var_names(mports, nports)
    index = {nm: k for k, nm in enumerate(names)}
    rows = []
    for line in src.strip().splitlines():
        line = line.strip()
        if not line or line == "(no constraints)":
            continue
        lhs, rhs = line.rsplit("=", 1)
        if field.parse(rhs.strip() or "0") != field.zero:
            raise ValueError("homogeneous constraints must end in '= 0'")
        rows.append(_parse_combination(lhs, index, field, len(names)))
    return LinRel.from_constraints(field, 2 * mports, 2 * nports, rows)


def _parse_combination(text, index, field, width):
    row = [field.zero] * width
    for sign, chunk in _signed_chunks(text):
        chunk = chunk.strip()
        if chunk == "0" or not chunk:
            continue
        if "*" in chunk:
            lit, name = chunk.rsplit("*", 1)
            coeff = field.parse(lit.strip())
        else:
            name = chunk
            coeff = field.one
        name = name.strip()
        if name not in index:
            raise ValueError(f"unknown variable {name!r}")
        coeff = coeff if sign > 0 else -coeff
        row[index[name]] = row[index[name]] + coeff
    return row


def _signed_chunks(text):
    """Split 'a - b + c' into (+1,'a'), (-1,'b'), (+1,'c'), respecting
    parenthesised scalars."""
    chunks = []
    sign = 1
    depth = 0
    cur = ""
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth == 0 and ch in "+-" and cur.strip():
            chunks.append((sign, cur))
            sign = 1 if ch == "+" else -1
            cur = ""
        elif depth == 0 and ch == "-" and not cur.strip():
            sign = -sign
        elif depth == 0 and ch == "+" and not cur.strip():
            pass
        else:
            cur += ch
        i += 1
    if cur.strip():
        chunks.append((sign, cur))
    return chunks

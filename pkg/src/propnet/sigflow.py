"""Signal-flow diagrams: free prop syntax, evaluation into linear
relations, and the width-doubling translation from circuit terms.

A signal-flow wire carries one field element.  Circuit terms translate by
doubling every wire into a potential wire above a current wire; the
translation is syntactic, its correctness criterion is semantic: the
evaluated translation must match black-boxing.
"""

from __future__ import annotations

from .scalar import Field, QS, RatFunc
from .exactla import Subspace
from .linrel import LinRel, UnsupportedLabel, blackbox
from .circuit import CircuitModel, label_from_gen_name
from .term import (Gen, Id, Par, PropModel, PropTerm, Seq, Signature, Sym,
                   UnknownGenerator, evaluate, par, seq)


def _scalar_resolver(name):
    if name.startswith("scalar:"):
        return (1, 1)
    return None


SIGFLOW_SIGNATURE = Signature({
    "codup": (2, 1), "codel": (0, 1), "dup": (1, 2), "del": (1, 0),
    "add": (2, 1), "coadd": (1, 2), "zero": (0, 1), "cozero": (1, 0),
}, resolver=_scalar_resolver)


class SigFlowModel(PropModel):
    """The functor into linear relations, port width 1."""

    width = 1
    signature = SIGFLOW_SIGNATURE

    def __init__(self, field: Field = QS):
        self.field = field

    def gen(self, name):
        field = self.field
        one, zero = field.one, field.zero
        if name == "dup":
            return LinRel.from_vectors(field, 1, 2, [[one, one, one]])
        if name == "codup":
            return LinRel.from_vectors(field, 2, 1, [[one, one, one]])
        if name == "del":
            return LinRel.from_vectors(field, 1, 0, [[one]])
        if name == "codel":
            return LinRel.from_vectors(field, 0, 1, [[one]])
        if name == "add":
            return LinRel.from_vectors(field, 2, 1,
                                       [[one, zero, one], [zero, one, one]])
        if name == "coadd":
            return LinRel.from_vectors(field, 1, 2,
                                       [[one, one, zero], [one, zero, one]])
        if name == "zero":
            return LinRel(0, 1, Subspace(field, 1, []))
        if name == "cozero":
            return LinRel(1, 0, Subspace(field, 1, []))
        if name.startswith("scalar:"):
            c = field.parse(name.split(":", 1)[1])
            return LinRel.from_vectors(field, 1, 1, [[one, c]])
        raise UnknownGenerator(name)

    def identity(self, n):
        return LinRel.identity(self.field, n)

    def symmetry(self, m, n):
        return LinRel.symmetry(self.field, m, n)

    def seq(self, a, b):
        return a.compose(b)

    def par(self, a, b):
        return a.tensor(b)

    def eq(self, a, b):
        return a == b


def box_eval(t: PropTerm, field: Field = QS) -> LinRel:
    return evaluate(t, SigFlowModel(field))


# ---------------------------------------------------------------------------
# The translation T from circuit terms, doubling every wire

def _scalar_gen(value) -> PropTerm:
    from .scalar import format_scalar
    return Gen("scalar:" + format_scalar(value))


def _impedance_term(z) -> PropTerm:
    """phi2 = phi1 + Z I1 and I2 = I1 on a doubled wire."""
    return seq(par(Id(1), Gen("dup")),
               par(Id(1), _scalar_gen(z), Id(1)),
               par(Gen("add"), Id(1)))


def _label_term(name: str, field: Field) -> PropTerm:
    label = label_from_gen_name(name)
    s = field.coerce(RatFunc.s()) if field is QS else None
    if label.kind == "wire":
        return _impedance_term(field.zero)
    if label.kind == "impedance":
        return _impedance_term(field.coerce(label.value))
    if label.kind == "resistor":
        return _impedance_term(field.coerce(label.value))
    if label.kind == "inductor":
        if s is None:
            raise UnsupportedLabel("inductors need the field q(s)")
        return _impedance_term(s * field.coerce(label.value))
    if label.kind == "capacitor":
        if s is None:
            raise UnsupportedLabel("capacitors need the field q(s)")
        return _impedance_term((s * field.coerce(label.value)).inv())
    raise UnsupportedLabel(f"{label.kind} has no signal-flow translation")


def translate_T(t: PropTerm, field: Field = QS) -> PropTerm:
    if isinstance(t, Gen):
        if t.name == "m":
            return seq(par(Id(1), Sym(1, 1), Id(1)),
                       par(Gen("codup"), Gen("add")))
        if t.name == "d":
            return seq(par(Gen("dup"), Gen("coadd")),
                       par(Id(1), Sym(1, 1), Id(1)))
        if t.name == "i":
            return par(Gen("codel"), Gen("zero"))
        if t.name == "e":
            return par(Gen("del"), Gen("cozero"))
        if t.name.startswith("label:"):
            return _label_term(t.name, field)
        raise UnknownGenerator(t.name)
    if isinstance(t, Id):
        return Id(2 * t.n)
    if isinstance(t, Sym):
        return Sym(2 * t.m, 2 * t.n)
    if isinstance(t, Seq):
        return Seq(translate_T(t.first, field), translate_T(t.then, field))
    if isinstance(t, Par):
        return Par(translate_T(t.top, field), translate_T(t.bottom, field))
    raise TypeError(f"not a term: {t!r}")


def square_check(t: PropTerm, field: Field = QS) -> bool:
    """Both ways around the square: translate then evaluate, or build the
    circuit and black-box it."""
    left = box_eval(translate_T(t, field), field)
    right = blackbox(evaluate(t, CircuitModel()), field)
    return left == right

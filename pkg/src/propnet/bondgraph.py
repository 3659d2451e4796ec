"""Bond graphs: the eight junction generators, their effort/flow and
corelation semantics, the mediating relation alpha, and the law audit.

Equality of bond-graph morphisms is never decided syntactically; a law is
accepted exactly when it holds under both semantic readings, the linear
relation functor F on (effort, flow) pairs and the corelation functor G
on doubled terminals.
"""

from __future__ import annotations

from .scalar import Field, QQ
from .linrel import K_corel, LinRel
from .setprops import Corelation, CorelModel
from .term import (Gen, Id, PropModel, PropTerm, Signature, Sym, arity,
                   evaluate, par, seq)
from .laws import (frobenius_monoid_laws, run_suite, weak_bimonoid_laws)

BG_SIGNATURE = Signature({
    "1j": (2, 1), "1u": (0, 1), "1d": (1, 2), "1e": (1, 0),
    "0j": (2, 1), "0u": (0, 1), "0d": (1, 2), "0e": (1, 0),
})


class FModel(PropModel):
    """Effort/flow behavior: each port carries (E, F)."""

    width = 2
    signature = BG_SIGNATURE

    def __init__(self, field: Field = QQ):
        self.field = field

    def gen(self, name):
        field = self.field
        one, zero = field.one, field.zero
        if name == "1j":
            rows = [[one, zero, one, zero, -one, zero],
                    [zero, one, zero, zero, zero, -one],
                    [zero, zero, zero, one, zero, -one]]
            return LinRel.from_constraints(field, 4, 2, rows)
        if name == "1u":
            return LinRel.from_constraints(field, 0, 2, [[one, zero]])
        if name == "1d":
            rows = [[one, zero, -one, zero, -one, zero],
                    [zero, one, zero, -one, zero, zero],
                    [zero, one, zero, zero, zero, -one]]
            return LinRel.from_constraints(field, 2, 4, rows)
        if name == "1e":
            return LinRel.from_constraints(field, 2, 0, [[one, zero]])
        if name == "0j":
            rows = [[one, zero, zero, zero, -one, zero],
                    [zero, zero, one, zero, -one, zero],
                    [zero, one, zero, one, zero, -one]]
            return LinRel.from_constraints(field, 4, 2, rows)
        if name == "0u":
            return LinRel.from_constraints(field, 0, 2, [[zero, one]])
        if name == "0d":
            rows = [[one, zero, -one, zero, zero, zero],
                    [one, zero, zero, zero, -one, zero],
                    [zero, one, zero, -one, zero, -one]]
            return LinRel.from_constraints(field, 2, 4, rows)
        if name == "0e":
            return LinRel.from_constraints(field, 2, 0, [[zero, one]])
        raise KeyError(name)

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


def _wire_eval(t: PropTerm) -> Corelation:
    return evaluate(t, CorelModel())


_W = {
    "1j": par(Id(1), seq(Gen("m"), Gen("e")), Id(1)),
    "1u": seq(Gen("i"), Gen("d")),
    "1d": par(Id(1), seq(Gen("i"), Gen("d")), Id(1)),
    "1e": seq(Gen("m"), Gen("e")),
    "0j": seq(par(Id(1), Sym(1, 1), Id(1)), par(Gen("m"), Gen("m"))),
    "0u": par(Gen("i"), Gen("i")),
    "0d": seq(par(Gen("d"), Gen("d")), par(Id(1), Sym(1, 1), Id(1))),
    "0e": par(Gen("e"), Gen("e")),
}


class GModel(PropModel):
    """Corelation semantics: each port becomes two terminals."""

    width = 2
    signature = BG_SIGNATURE

    GENERATORS = {name: _wire_eval(term) for name, term in _W.items()}

    def gen(self, name):
        return self.GENERATORS[name]

    def identity(self, n):
        return Corelation.identity(2 * n)

    def symmetry(self, m, n):
        return Corelation.symmetry(2 * m, 2 * n)

    def seq(self, a, b):
        return a.compose(b)

    def par(self, a, b):
        return a.tensor(b)

    def eq(self, a, b):
        return a == b


def F_eval(t: PropTerm, field: Field = QQ) -> LinRel:
    return evaluate(t, FModel(field))


def G_eval(t: PropTerm) -> Corelation:
    return evaluate(t, GModel())


# ---------------------------------------------------------------------------
# alpha and naturality

def alpha(n: int, field: Field = QQ) -> LinRel:
    """{(V, I, phi1, I1, phi2, I2) : V = phi2 - phi1, I = I1 = -I2},
    tensored n times."""
    one, zero = field.one, field.zero
    rows = [
        [one, zero, one, zero, -one, zero],
        [zero, one, zero, -one, zero, zero],
        [zero, one, zero, zero, zero, one],
    ]
    a1 = LinRel.from_constraints(field, 2, 4, rows)
    out = LinRel.identity(field, 0)
    for _ in range(n):
        out = out.tensor(a1)
    return out


def check_naturality(t: PropTerm, field: Field = QQ) -> bool:
    """Conjugating the corelation behavior by alpha recovers the
    effort/flow behavior: alpha_m then K(G(t)) then alpha_n dagger
    equals F(t)."""
    m, n = arity(t, BG_SIGNATURE)
    kg = K_corel(field, G_eval(t))
    am, an = alpha(m, field), alpha(n, field)
    return am.compose(kg).compose(an.dagger()) == F_eval(t, field)


def check_absorption(t: PropTerm, field: Field = QQ) -> bool:
    """K(G(t)) after alpha is unchanged by the alpha alpha-dagger
    idempotent on the codomain side."""
    m, n = arity(t, BG_SIGNATURE)
    kg = K_corel(field, G_eval(t))
    am, an = alpha(m, field), alpha(n, field)
    lhs = am.compose(kg)
    return lhs == lhs.compose(an.dagger()).compose(an)


# ---------------------------------------------------------------------------
# The defining law list

def bondgraph_laws():
    laws = []
    laws += frobenius_monoid_laws("1j", "1u", "1d", "1e", prefix="one_",
                                  symmetric=True)
    laws += frobenius_monoid_laws("0j", "0u", "0d", "0e", prefix="zero_",
                                  symmetric=True)
    laws += weak_bimonoid_laws("1j", "1u", "0d", "0e", prefix="one_zero_")
    laws += weak_bimonoid_laws("0j", "0u", "1d", "1e", prefix="zero_one_")
    laws.append(("extra_mixed_a",
                 seq(Gen("0u"), Gen("1e")), Id(0)))
    laws.append(("extra_mixed_b",
                 seq(Gen("1u"), Gen("0e")), Id(0)))
    p = seq(Gen("0d"), Gen("1j"), Gen("1d"), Gen("0j"))
    q = seq(Gen("1d"), Gen("0j"), Gen("0d"), Gen("1j"))
    laws.append(("idempotent_a", seq(p, p), p))
    laws.append(("idempotent_b", seq(q, q), q))
    return laws


def discriminating_law():
    """Holds under G, fails under F: composing a 0-comultiplication into
    a 1-multiplication agrees with the opposite pairing on corelations
    but the two effort/flow relations are mutually inverse scalings."""
    return ("zero_comult_one_mult",
            seq(Gen("0d"), Gen("1j")), seq(Gen("1d"), Gen("0j")))


def check_bg_laws(field: Field = QQ):
    """Audit the defining equations in both models; every law must hold
    in both for the presentation to make sense."""
    laws = bondgraph_laws()
    f_report = run_suite(FModel(field), laws)
    g_report = run_suite(GModel(), laws)
    report = []
    for (lid, f_ok), (_lid, g_ok) in zip(f_report, g_report):
        report.append((lid, f_ok and g_ok))
    return sorted(report)

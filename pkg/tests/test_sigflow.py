import random

import pytest

from propnet.circuit import CircuitModel
from propnet.laws import (all_hold, bimonoid_laws, frobenius_monoid_laws,
                          run_suite)
from propnet.linrel import LinRel, UnsupportedLabel
from propnet.scalar import QQ, QS
from propnet.sigflow import (SIGFLOW_SIGNATURE, SigFlowModel, box_eval,
                             square_check, translate_T)
from propnet.term import Gen, Id, arity, parse_term, seq

from helpers import rand_circuit_gens, rand_term

SF_GENS = ["codup", "codel", "dup", "del", "add", "coadd", "zero", "cozero",
           "scalar:2", "scalar:-1/3"]


def test_generator_relations():
    m = SigFlowModel(QQ)
    one, zero = QQ.one, QQ.zero
    assert m.gen("dup") == LinRel.from_vectors(QQ, 1, 2, [[one, one, one]])
    assert m.gen("add").space.contains([one, QQ.coerce(2), QQ.coerce(3)])
    assert not m.gen("add").space.contains([one, one, QQ.coerce(3)])
    assert m.gen("zero").space.contains([zero])
    assert m.gen("zero").space.dim == 0
    assert m.gen("scalar:-1/3").space.contains([QQ.coerce(3), -one])


def test_scalar_composition():
    # amplifier chain multiplies gains
    t = seq(Gen("scalar:2"), Gen("scalar:3"))
    assert box_eval(t, QQ) == box_eval(Gen("scalar:6"), QQ)
    # scalar over q(s)
    ts = seq(Gen("scalar:s"), Gen("scalar:1/s"))
    assert box_eval(ts, QS) == LinRel.identity(QS, 1)


def test_zigzag_identities():
    m = SigFlowModel(QQ)
    # (dup ; codup) and (coadd ; add) are the identity wire
    for t in (seq(Gen("dup"), Gen("codup")), seq(Gen("coadd"), Gen("add"))):
        assert box_eval(t, QQ) == LinRel.identity(QQ, 1)


def test_law_groups():
    for field in (QQ, QS):
        model = SigFlowModel(field)
        laws = []
        laws += frobenius_monoid_laws("codup", "codel", "dup", "del",
                                      prefix="dup_", commutative=True)
        laws += frobenius_monoid_laws("add", "zero", "coadd", "cozero",
                                      prefix="add_", commutative=True)
        laws += bimonoid_laws("add", "zero", "dup", "del", prefix="hopf_")
        laws += bimonoid_laws("codup", "codel", "coadd", "cozero",
                              prefix="cohopf_")
        report = run_suite(model, laws)
        assert all_hold(model, laws), [l for l, ok in report if not ok]


def test_translation_width_discipline():
    rng = random.Random(70)
    circ = CircuitModel()
    for _ in range(60):
        gens = rand_circuit_gens(rng)
        t = rand_term(rng, circ.signature, gens, rng.randint(0, 3))
        m, n = arity(t, circ.signature)
        tt = translate_T(t, QS)
        assert arity(tt, SIGFLOW_SIGNATURE) == (2 * m, 2 * n)


def test_square_on_generators():
    for src in ("(gen m)", "(gen i)", "(gen d)", "(gen e)",
                "(label wire)", "(label resistor 2)", "(label inductor 3)",
                "(label capacitor 1/2)", "(label impedance s+1)"):
        assert square_check(parse_term(src), QS)


def test_square_on_random_terms():
    rng = random.Random(71)
    circ = CircuitModel()
    for _ in range(40):
        gens = rand_circuit_gens(rng)
        t = rand_term(rng, circ.signature, gens, rng.randint(0, 3))
        assert square_check(t, QS)


def test_sources_not_translatable():
    with pytest.raises(UnsupportedLabel):
        translate_T(parse_term("(label vsource 5)"), QS)
    with pytest.raises(UnsupportedLabel):
        translate_T(parse_term("(label capacitor 2)"), QQ)

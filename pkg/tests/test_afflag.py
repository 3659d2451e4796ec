import random
from fractions import Fraction

import pytest

from propnet.afflag import (AffRel, aff_blackbox, format_affrel,
                            is_aff_lagrangian, isource_rel, vsource_rel)
from propnet.circuit import LCircuit, LGraph, parse_label
from propnet.linrel import LinRel, blackbox, impedance_rel
from propnet.scalar import QQ, QS

from helpers import rand_circuit, rand_corelation
from propnet.linrel import K_corel

SOURCE_KINDS = ("wire", "resistor", "inductor", "capacitor", "vsource",
                "isource")


def test_from_linrel_round_trip():
    rng = random.Random(60)
    for _ in range(40):
        c = rand_corelation(rng, rng.randint(0, 2), rng.randint(0, 2))
        rel = K_corel(QQ, c)
        aff = AffRel.from_linrel(rel)
        assert not aff.is_empty()
        assert aff.linear_part() == rel
        assert aff.contains([QQ.zero] * (rel.dom + rel.cod))


def test_embedding_functorial():
    rng = random.Random(61)
    for _ in range(40):
        m, n, p = (rng.randint(0, 2) for _ in range(3))
        f = K_corel(QQ, rand_corelation(rng, m, n))
        g = K_corel(QQ, rand_corelation(rng, n, p))
        assert AffRel.from_linrel(f).compose(AffRel.from_linrel(g)) == \
            AffRel.from_linrel(f.compose(g))
        h = K_corel(QQ, rand_corelation(rng, rng.randint(0, 2),
                                        rng.randint(0, 2)))
        assert AffRel.from_linrel(f).tensor(AffRel.from_linrel(h)) == \
            AffRel.from_linrel(f.tensor(h))


def test_translate_formula():
    # every nonempty affine relation is witness + linear part
    rng = random.Random(62)
    checked = 0
    for _ in range(200):
        c = rand_circuit(rng, max_nodes=4, max_edges=5, kinds=SOURCE_KINDS)
        aff = aff_blackbox(c, QS)
        if aff.is_empty():
            continue
        w = aff.witness()
        assert aff.contains(w)
        lin = aff.linear_part()
        for v in lin.space.basis:
            assert aff.contains([a + b for a, b in zip(w, v)])
        assert aff.hspace.dim == lin.space.dim + 1
        checked += 1
    assert checked > 50


def test_battery_resistor():
    # 2V source in series with a 3 ohm resistor
    v = LCircuit.single_edge(parse_label("vsource", "2"))
    r = LCircuit.single_edge(parse_label("resistor", "3"))
    circ = v.compose(r)
    aff = aff_blackbox(circ, QS)
    # phi_out - phi_in = 2 + 3 I, current passes through
    two, three = QS.coerce(2), QS.coerce(3)
    assert aff.contains([QS.zero, QS.zero, two, QS.zero])
    assert aff.contains([QS.zero, QS.one, two + three, QS.one])
    assert not aff.contains([QS.zero, QS.one, two, QS.one])
    assert aff.linear_part() == impedance_rel(QS, three)


def test_current_source():
    i = LCircuit.single_edge(parse_label("isource", "5"))
    aff = aff_blackbox(i, QS)
    five = QS.coerce(5)
    assert aff.contains([QS.zero, five, QS.coerce(7), five])
    assert not aff.contains([QS.zero, QS.one, QS.zero, QS.one])
    assert aff == isource_rel(QS, 5)


def test_empty_relation():
    # conflicting current sources in series
    a = isource_rel(QQ, 1)
    b = isource_rel(QQ, 2)
    conflict = a.compose(b)
    assert conflict.is_empty()
    assert conflict.witness() is None
    assert format_affrel(conflict) == "EMPTY"
    # empty relations of one type are all equal
    assert conflict == isource_rel(QQ, 3).compose(isource_rel(QQ, 4))
    assert is_aff_lagrangian(conflict)


def test_source_free_matches_blackbox():
    rng = random.Random(63)
    for _ in range(40):
        c = rand_circuit(rng, max_nodes=4, max_edges=5)
        assert aff_blackbox(c, QS) == AffRel.from_linrel(blackbox(c, QS))


def test_aff_lagrangian_random():
    rng = random.Random(64)
    for _ in range(60):
        c = rand_circuit(rng, max_nodes=4, max_edges=5, kinds=SOURCE_KINDS)
        assert is_aff_lagrangian(aff_blackbox(c, QS))


def test_vsource_rel_table():
    v = vsource_rel(QQ, Fraction(3, 2))
    assert v.contains([QQ.zero, QQ.one, QQ.coerce(Fraction(3, 2)), QQ.one])
    assert not v.contains([QQ.zero, QQ.one, QQ.coerce(Fraction(3, 2)),
                           QQ.coerce(2)])

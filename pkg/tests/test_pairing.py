from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mhdouble.groups import group_pairing, make_group
from mhdouble.lincomb import LinComb
from mhdouble.pairing import ActionVariant
from mhdouble.scalars import QQ, PrimeField
from mhdouble.taft import TaftParams, taft_pairing

PAIRINGS = {
    "Z3": group_pairing(make_group("zn", 3), QQ),
    "S3": group_pairing(make_group("sym", 3), QQ),
    "Z": group_pairing(make_group("z"), QQ),
    "taft2": taft_pairing(TaftParams(2, 1, -1, QQ)),
    "taft3": taft_pairing(TaftParams.resolve(3, 1, PrimeField(7))),
    "taft3i2": taft_pairing(TaftParams.resolve(3, 2, PrimeField(7))),
}


def one(P, label):
    return LinComb.basis(label, P.field.one)


def test_duality_examples():
    P = PAIRINGS["Z3"]
    assert P.check_pairing_duality(one(P, 1), one(P, 1), one(P, 1), one(P, 1))
    T = PAIRINGS["taft2"]
    c = (1, 0)
    assert T.check_pairing_duality(one(T, (1, 0)), one(T, (0, 0)), one(T, c), one(T, c))


def test_taft_pairing_values():
    T = PAIRINGS["taft2"]
    assert T.pair(one(T, (3, 0)), one(T, (3, 0))) == 1
    assert T.pair(one(T, (3, 0)), one(T, (2, 0))) == 0
    assert T.pair(one(T, (3, 0)), one(T, (3, 1))) == 0
    # c ▸ ω_{p,0} = ω_{p-1,0}
    for p in range(-3, 4):
        assert T.act(ActionVariant.B_ON_A_LEFT, one(T, (1, 0)), one(T, (p, 0))) == one(T, (p - 1, 0))


def test_unit_acts_trivially():
    P = PAIRINGS["Z3"]
    for p in range(3):
        assert P.act(ActionVariant.B_ON_A_LEFT, one(P, 0), one(P, p)) == one(P, p)


@pytest.mark.parametrize("name", sorted(PAIRINGS))
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_pairing_identities(name, data):
    P = PAIRINGS[name]
    la = st.sampled_from(P.A.sample_labels(4))
    lb = st.sampled_from(P.B.sample_labels(4))
    a, a2 = one(P, data.draw(la)), one(P, data.draw(la))
    b, b2 = one(P, data.draw(lb)), one(P, data.draw(lb))
    for ident, lhs, rhs in P.duality_sides(a, a2, b, b2) + P.mixed_associativity_sides(b, b2, a):
        assert lhs == rhs, ident
    for v in ActionVariant:
        on_a = v in (ActionVariant.B_ON_A_LEFT, ActionVariant.B_ON_A_RIGHT)
        actor, target = (b, a) if on_a else (a, b)
        assert P.act(v, actor, target) == P.act_defining(v, actor, target), v
        value, covered = P.act_cover_sides(v, actor, target)
        assert value == covered, v


@pytest.mark.parametrize("name", sorted(PAIRINGS))
def test_nondegenerate_on_window(name):
    P = PAIRINGS[name]
    assert P.nondegenerate_on(P.A.sample_labels(4), P.B.sample_labels(4)) == []

from __future__ import annotations

import pytest

from mhdouble.doubles import build_doubles
from mhdouble.errors import UnsupportedParameterError
from mhdouble.lincomb import Accumulator, LinComb
from mhdouble.scalars import QQ, PrimeField
from mhdouble.taft import TaftA, TaftB, TaftParams, multiplier_apply, taft_pairing
from mhdouble.verify import build_instance, change_of_basis_scalars, check_taft_heisenberg_relations
from oracle_taft import TaftOracle

F7 = PrimeField(7)
PARAMS = [TaftParams(2, 1, -1, QQ), TaftParams.resolve(3, 1, F7), TaftParams.resolve(3, 2, F7)]
IDS = ["m2-Q", "m3-F7", "m3-i2-F7"]


def test_parameter_validation():
    with pytest.raises(UnsupportedParameterError, match="order"):
        TaftParams(3, 1, -1, QQ)
    with pytest.raises(UnsupportedParameterError):
        TaftParams.resolve(3, 1, QQ)
    with pytest.raises(UnsupportedParameterError):
        TaftParams(2, 0, -1, QQ)
    assert TaftParams.resolve(3, 1, F7).lam == 2
    assert TaftParams(2, 1, -1, QQ).describe() == {"m": 2, "i": 1, "lambda": "-1", "field": "rational"}


@pytest.mark.parametrize("tp", PARAMS, ids=IDS)
def test_b_matches_presentation(tp):
    O, B = TaftOracle(tp.m, tp.i, tp.lam, tp.field), TaftB(tp)
    labels = B.sample_labels(3)
    for x in labels:
        assert dict(B.full_delta_basis(x).raw_items()) == O.b_delta(*x)
        for y in labels:
            assert dict(B.mul_basis(x, y).raw_items()) == O.b_mul(x, y)


@pytest.mark.parametrize("tp", PARAMS, ids=IDS)
def test_dual_basis_pairing_is_a_hopf_pairing(tp):
    """A's product and coproduct are exactly the transposes of B's under ⟨ω_x, b_y⟩ = [x = y]."""
    O, A = TaftOracle(tp.m, tp.i, tp.lam, tp.field), TaftA(tp)
    w = 2
    labels = A.sample_labels(w)
    for x in labels:
        for y in labels:
            assert dict(A.mul_basis(x, y).raw_items()) == O.a_mul_coeffs(x, y, 3 * w)
    for target in labels:
        want = O.a_delta_coeffs(target, 3 * w)
        got = {}
        for t in {y for (_x, y) in want}:
            for s, c in A.coproduct_given_right(target, t).raw_items():
                got[(s, t)] = c
        assert got == want


@pytest.mark.parametrize("tp", PARAMS, ids=IDS)
def test_multiplier_rules_match_their_sums(tp):
    """D = Σ λ^j ω_{j,0} and Y = Σ λ^s ω_{s,1} acting by truncated sums."""
    A = TaftA(tp)
    lam = tp.lam
    for x in A.sample_labels(3):
        xl = A.basis(x)
        for name, l in (("D", 0), ("Y", 1)):
            left, right = Accumulator(), Accumulator()
            for s in range(-20, 21):
                w = A.basis((s, l), lam**s)
                left.add_lc(A.mul(w, xl))
                right.add_lc(A.mul(xl, w))
            assert multiplier_apply(A, name, "left", xl) == left.result()
            assert multiplier_apply(A, name, "right", xl) == right.result()


def test_multiplier_examples():
    tp = PARAMS[0]
    A = TaftA(tp)
    assert multiplier_apply(A, "D", "left", A.basis((2, 0))) == A.basis((2, 0), tp.lam**2)
    assert multiplier_apply(A, "Y", "left", A.basis((3, 0))) == A.basis((3, 1), tp.lam**3)
    assert multiplier_apply(A, "Y", "left", A.basis((3, 1))) == LinComb.zero()
    with pytest.raises(ValueError):
        multiplier_apply(A, "Z", "left", A.basis((0, 0)))


def test_change_of_basis_scalars_frozen():
    """ω_{p,0}Y^l = κ(p,l) ω_{p-il,l}; values computed once and frozen."""
    A2 = TaftA(PARAMS[0])
    assert change_of_basis_scalars(A2, range(-2, 3), 2) == {
        (p, l): QQ(1 if l == 0 else (-1) ** (p - 1)) for p in range(-2, 3) for l in range(2)
    }
    A3 = TaftA(PARAMS[1])  # λ = 2 in F_7, [2,1]_{λ^{-1}} = 1 + 4 = 5
    k = change_of_basis_scalars(A3, range(0, 2), 3)
    assert k[(0, 1)] == F7(4) and k[(0, 2)] == F7(5)
    assert k[(1, 1)] == F7(1) and k[(1, 2)] == F7(6)


def test_heisenberg_relation_examples():
    tp = PARAMS[0]
    _, H = build_doubles(taft_pairing(tp))
    c, unit_b = (1, 0), (0, 0)
    elem = LinComb.basis(((0, 0), unit_b), QQ(1))
    assert H.mul_with_multiplier(None, c, elem) == LinComb.basis(((-1, 0), c), QQ(1))
    A = H.A
    for k in range(-3, 4):
        got = H.mul_with_multiplier(lambda x: multiplier_apply(A, "Y", "left", x), unit_b,
                                    LinComb.basis(((k, 0), unit_b), QQ(1)))
        assert got == LinComb.basis(((k, 1), unit_b), tp.lam**k)


@pytest.mark.parametrize("kw", [dict(taft_m=2), dict(taft_m=3, field=F7), dict(taft_m=3, taft_i=2, field=F7)],
                         ids=IDS)
def test_heisenberg_relations_hold_on_covers(kw):
    inst = build_instance("qtaft", window=3, **kw)
    rep = check_taft_heisenberg_relations(inst)
    assert rep.samples > 0 and rep.passed, rep.failures[:2]

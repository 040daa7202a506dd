from __future__ import annotations

import itertools

import pytest

from mhdouble.doubles import RestrictedA, RestrictedB, build_doubles
from mhdouble.errors import UnsupportedParameterError
from mhdouble.groups import canonical_pair, group_pairing, make_group, parse_group
from mhdouble.lincomb import LinComb
from mhdouble.mha import Variant
from mhdouble.pairing import ActionVariant
from mhdouble.scalars import QQ
from oracle_group import GroupOracle, as_dict

S3 = make_group("sym", 3)
Z6 = make_group("zn", 6)
T = (1, 0, 2)  # transposition (12)
C = (1, 2, 0)  # 3-cycle


def one(label):
    return LinComb.basis(label, QQ(1))


def test_group_descriptors():
    z3 = parse_group("zn:3")
    assert z3.order == 3 and all(z3.op(z3.op(g, g), g) == z3.e for g in z3.elements)
    s3 = parse_group("sym:3")
    assert s3.order == 6 and not s3.is_abelian()
    assert s3.op(T, C) != s3.op(C, T)
    z = parse_group("z")
    assert not z.finite and z.sample() == list(range(-8, 9))
    assert parse_group("dihedral:4").order == 8
    for bad in ("sym:9", "cube:3", "zn:x", "zn:0"):
        with pytest.raises(UnsupportedParameterError):
            parse_group(bad)


def test_canonical_pair():
    P = group_pairing(make_group("zn", 3), QQ)
    A, B = P.A, P.B
    assert canonical_pair(A, B, one(1), one(1)) == 1
    assert canonical_pair(A, B, one(1), one(2)) == 0
    assert canonical_pair(A, B, one(1) + one(2).scale(2), one(1) + one(2)) == 3


def test_group_action_examples():
    P = group_pairing(make_group("zn", 3), QQ)
    assert P.act(ActionVariant.B_ON_A_LEFT, one(1), one(0)) == one(2)
    assert P.act(ActionVariant.B_ON_A_LEFT, one(0), one(2)) == one(2)


def test_twist_examples():
    P = group_pairing(S3, QQ)
    D, _ = build_doubles(P)
    ops = D.ops
    conj = S3.conj(T, C)
    assert conj == S3.op(C, C)
    assert ops.twist_T(LinComb.basis((T, C), QQ(1))) == LinComb.basis((conj, T), QQ(1))
    p, q = C, T
    assert ops.twist_R(LinComb.basis((q, p), QQ(1))) == LinComb.basis((S3.op(p, S3.inv(q)), q), QQ(1))
    assert ops.twist_R_inv(LinComb.basis((S3.op(p, S3.inv(q)), q), QQ(1))) == LinComb.basis((q, p), QQ(1))
    # R(1_B ⊗ a) = a ⊗ 1_B
    assert ops.twist_R(LinComb.basis((S3.e, p), QQ(1))) == LinComb.basis((p, S3.e), QQ(1))
    # abelian: T(q⊗δ_p) = δ_p⊗q
    D6, _ = build_doubles(group_pairing(Z6, QQ))
    assert D6.ops.twist_T(LinComb.basis((2, 5), QQ(1))) == LinComb.basis((5, 2), QQ(1))


@pytest.fixture(scope="module", params=["sym:3", "zn:6"])
def setting(request):
    G = parse_group(request.param)
    P = group_pairing(G, QQ)
    D, H = build_doubles(P)
    return G, D, H, GroupOracle(G)


def _pairs(G):
    return [(g, h) for g in G.elements for h in G.elements]


def test_double_structure_matches_oracle(setting):
    G, D, H, O = setting
    pairs = _pairs(G)
    for x in pairs:
        assert as_dict(D.antipode(one(x))) == O.dd_S({x: 1})
        assert D.counit(one(x)) == O.dd_eps({x: 1})
        assert as_dict(D.delta_slice(Variant.CAN2, D.unit(), one(x))) == O.dd_delta({x: 1})
        assert as_dict(H.coact_right(one(x), D.unit())) == O.hd_coact({x: 1})
    for x, y in itertools.product(pairs, repeat=2):
        assert as_dict(D.mul(one(x), one(y))) == O.dd_mul({x: 1}, {y: 1})
        assert as_dict(H.mul(one(x), one(y))) == O.hd_mul({x: 1}, {y: 1})
        assert as_dict(H.act(one(x), one(y))) == O.hd_act({x: 1}, {y: 1})


def test_restricted_actions_match_oracle(setting):
    G, D, H, O = setting
    RA, RB = RestrictedA(H), RestrictedB(H)
    for x in _pairs(G):
        for g in G.elements:
            assert as_dict(RA.act(one(x), one(g))) == O.ra_act({x: 1}, {g: 1})
            assert as_dict(RB.act(one(x), one(g))) == O.rb_act({x: 1}, {g: 1})


def test_frozen_group_values():
    """Values computed once with the brute-force oracle and frozen."""
    G = S3
    D, H = build_doubles(group_pairing(G, QQ))
    inv, e = G.inv, G.e

    def m(*xs):
        r = e
        for x in xs:
            r = G.op(r, x)
        return r

    # (δ_p#q)(δ_p'#q') = [p = p'q⁻¹] δ_p # qq'
    p2, q = C, T
    p = m(p2, inv(q))
    assert H.mul(one((p, q)), one((p2, T))) == one((p, m(q, T)))
    assert H.mul(one((C, q)), one((p2, T))) == LinComb.zero()
    # (δ_e⋈t)·(δ_c#c) = [e = t c⁻¹ t⁻¹] δ_{ct⁻¹} # tct⁻¹ vanishes
    assert H.act(one((e, T)), one((C, C))) == LinComb.zero()
    # with p = t c⁻¹ t⁻¹ the term survives
    p = m(T, inv(C), inv(T))
    assert H.act(one((p, T)), one((C, C))) == one((m(C, inv(T)), m(T, C, inv(T))))
    # abelian ℤ_6: (δ_p⋈q)·(δ_p'#q') = [q' = p⁻¹] δ_{p'-q} # q'
    D6, H6 = build_doubles(group_pairing(Z6, QQ))
    assert H6.act(one((2, 1)), one((3, 4))) == one((2, 4))
    assert H6.act(one((2, 1)), one((3, 3))) == LinComb.zero()
    # (δ_g⋈e)(δ_g⋈e) = δ_g⋈e and (δ_p#e)(δ_p#e) = δ_p#e
    assert D.mul(one((C, e)), one((C, e))) == one((C, e))
    assert H.mul(one((C, e)), one((C, e))) == one((C, e))


def test_covered_coaction_on_infinite_group():
    Z = parse_group("z")
    D, H = build_doubles(group_pairing(Z, QQ))
    # (δ_x⋈y ⊗ 1)Γ(δ_p#q) has the single term (δ_x⋈y)(δ_{s⁻¹p}⋈q) ⊗ δ_s#q
    x, y, p, q = 3, 2, 5, -1
    got = H.coact_left(one((x, y)), one((p, q)))
    want = LinComb.zero()
    for s in range(-20, 21):
        prod = D.mul(one((x, y)), one((p - s, q)))
        for lab, c in prod.raw_items():
            want = want + LinComb.basis((lab, (s, q)), c)
    assert got == want and len(got) == 1

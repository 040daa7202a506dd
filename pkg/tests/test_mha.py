from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mhdouble import mha
from mhdouble.errors import RegularityError, UnderCoveredError
from mhdouble.groups import FunctionAlgebra, GroupAlgebra, make_group
from mhdouble.lincomb import LinComb
from mhdouble.mha import Cover, Variant
from mhdouble.scalars import QQ, PrimeField
from mhdouble.taft import TaftA, TaftB, TaftParams

Z3 = make_group("zn", 3)
Z = make_group("z")
KZ3, GZ3 = FunctionAlgebra(Z3, QQ), GroupAlgebra(Z3, QQ)
KZ = FunctionAlgebra(Z, QQ)
TP2 = TaftParams(2, 1, -1, QQ)
TP3 = TaftParams.resolve(3, 1, PrimeField(7))


def b(alg, label, c=1):
    return alg.basis(label, c)


def tensor2(x, y, c=1):
    return LinComb.basis((x, y), QQ(c))


def test_group_and_function_products():
    assert GZ3.mul(b(GZ3, 1), b(GZ3, 2)) == b(GZ3, 0)
    assert GZ3.mul(b(GZ3, 1) + b(GZ3, 2), b(GZ3, 1)) == b(GZ3, 2) + b(GZ3, 0)
    assert KZ3.mul(b(KZ3, 1), b(KZ3, 1)) == b(KZ3, 1)
    assert KZ3.mul(b(KZ3, 1), b(KZ3, 2)) == LinComb.zero()


def test_taft_a_product_follows_the_label_rule():
    A = TaftA(TP2)
    # ω_{p,q}ω_{k,l} needs p - k = i·l
    assert A.mul(b(A, (1, 0)), b(A, (0, 1))) == b(A, (0, 1))
    assert A.mul(b(A, (1, 1)), b(A, (0, 0))) == LinComb.zero()
    assert A.mul(b(A, (0, 1)), b(A, (0, 0))) == b(A, (0, 1))


def test_covered_slices_examples():
    # Δ(δ_g)(1⊗δ_{g²}) = δ_{g²}⊗δ_{g²}
    assert KZ3.delta_slice(Variant.CAN1, b(KZ3, 1), b(KZ3, 2)) == tensor2(2, 2)
    assert GZ3.delta_slice(Variant.CAN1, b(GZ3, 1), b(GZ3, 2)) == tensor2(1, 0)
    B = TaftB(TP2)
    # Δ(X)(1⊗c) = c^i⊗Xc + X⊗c, and Xc = λ^{-1}cX = -cX for λ = -1
    got = B.delta_slice(Variant.CAN1, b(B, (0, 1)), b(B, (1, 0)))
    want = LinComb({((1, 0), (1, 1)): QQ(-1), ((0, 1), (1, 0)): QQ(1)})
    assert got == want


def test_t_maps_examples():
    assert GZ3.t_map("T1", tensor2(1, 2)) == tensor2(1, 0)
    assert GZ3.t_map_inv("T1", tensor2(1, 0)) == tensor2(1, 2)
    assert KZ3.t_map("T1", tensor2(1, 2)) == tensor2(2, 2)


def test_antipode_axiom_examples():
    assert mha.check_antipode_axiom(GZ3, b(GZ3, 1), b(GZ3, 2))
    assert mha.check_antipode_axiom(KZ3, b(KZ3, 1), b(KZ3, 0))
    B = TaftB(TP2)
    assert mha.check_antipode_axiom(B, b(B, (0, 1)), b(B, (1, 0)))
    # S(X) = -c^{-i}X
    assert B.antipode(b(B, (0, 1))) == b(B, (-1, 1), -1)


def test_expand_grouplike_and_split_order():
    assert GZ3.expand(b(GZ3, 1), 3, [None] * 3) == LinComb.basis((1, 1, 1), QQ(1))
    # δ_e with the last two legs restricted to {g}, {g²}: only δ_e ⊗ δ_g ⊗ δ_{g²}
    got = KZ3.expand(b(KZ3, 0), 3, [None, {1}, {2}])
    assert got == LinComb.basis((0, 1, 2), QQ(1))
    # peeling the first leg or the last leg first gives the same expansion
    first = KZ.expand(b(KZ, 3), 3, [{1, 2}, {0, 1}, None])
    last = KZ.expand(b(KZ, 3), 3, [None, {0, 1}, {1, 2}])
    assert first == LinComb(
        {(s, t, 3 - s - t): QQ(1) for s in (1, 2) for t in (0, 1)}
    )
    assert last == LinComb({(3 - s - t, s, t): QQ(1) for s in (0, 1) for t in (1, 2)})


def test_expand_legs_multiplies_covers():
    exp = KZ.expand_legs(b(KZ, 0), 2, [None, Cover("right", b(KZ, 4))])
    assert exp.legs == LinComb.basis((-4, 4), QQ(1))
    with pytest.raises(ValueError):
        KZ.expand_legs(b(KZ, 0), 7)


def test_under_covered_expansion_is_an_error():
    with pytest.raises(UnderCoveredError) as info:
        KZ.expand(b(KZ, 0), 3, [None, None, {1}])
    assert info.value.legs == (0, 1)
    with pytest.raises(RegularityError):
        KZ.full_delta(b(KZ, 0))
    # finite groups have a full coproduct, so free legs are fine
    assert len(KZ3.expand(b(KZ3, 0), 3, [None] * 3)) == 9


def _axiom_sides(alg, x, y, z):
    sides = mha.associativity_sides(alg, x, y, z) + mha.coassociativity_sides(alg, x, y, z)
    sides += mha.counit_sides(alg, x, y) + mha.antipode_sides(alg, x, y)
    sides += mha.delta_multiplicative_sides(alg, x, y, z) + mha.t_roundtrip_sides(alg, x, y)
    sides += mha.antipode_inverse_sides(alg, x)
    return sides


def _labels(alg, window):
    return st.sampled_from(alg.sample_labels(window))


@pytest.mark.parametrize("alg", [KZ, GroupAlgebra(Z, QQ), TaftA(TP2), TaftB(TP2), TaftA(TP3), TaftB(TP3)],
                         ids=["K(Z)", "K[Z]", "TaftA2", "TaftB2", "TaftA3", "TaftB3"])
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_hopf_axioms_on_random_basis_triples(alg, data):
    lab = _labels(alg, 4)
    x, y, z = (alg.basis(data.draw(lab)) for _ in range(3))
    for name, lhs, rhs in _axiom_sides(alg, x, y, z):
        assert lhs == rhs, name


def test_under_covered_slices_in_taft_a():
    A = TaftA(TP2)
    # ω_{p,0} has finitely many partners, so every slice is finite
    for v in Variant:
        assert A.delta_slice(v, b(A, (2, 0)), b(A, (1, 1)))

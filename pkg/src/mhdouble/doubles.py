"""Drinfel'd double D = A⋈B and Heisenberg double H = A#B of a pairing.

Both live on pair labels ``(a_label, b_label)``.  ``B`` must be unital with a
finite coproduct (true for K[G] and the Taft algebra); ``A`` may be
non-unital, in which case every A-coproduct is taken covered.

Conventions (Sweedler legs, ▸/◂ as in :mod:`mhdouble.pairing`):

* T(b⊗a) = b_(1)▸a◂S⁻¹(b_(3)) ⊗ b_(2), T⁻¹(a⊗b) = b_(2) ⊗ S⁻¹(b_(1))▸a◂b_(3)
* (a⋈b)(a'⋈b') = a(b_(1)▸a'◂S⁻¹(b_(3))) ⋈ b_(2)b'
* Δ(a⋈b) = (a_(2)⋈b_(1)) ⊗ (a_(1)⋈b_(2)), ε = ε_A ε_B, S(a⋈b) = T(S_B(b) ⊗ S_A⁻¹(a))
* (a#b)(a'#b') = a(b_(1)▸a') # b_(2)b'
* (a⋈b)·(a'#b') = a_(3)(b_(1)▸a')S⁻¹(a_(2)) # (b_(2)b'S(b_(3)))◂S⁻¹(a_(1))
* Γ(a#b) = (a_(2)⋈b_(1)) ⊗ (a_(1)#b_(2))
"""

from __future__ import annotations

from .errors import PresentationError, RegularityError
from .lincomb import Accumulator, LinComb
from .mha import MultiplierHopfAlgebra, Variant
from .pairing import ActionVariant, Pairing

V = ActionVariant


def _pairs(x: LinComb, y: LinComb) -> LinComb:
    """a ⊗ b as a LinComb over pair labels."""
    acc = Accumulator()
    for k1, c1 in x.raw_items():
        for k2, c2 in y.raw_items():
            acc.add((k1, k2), c1 * c2)
    return acc.result()


class _PairingOps:
    """Shared helpers for constructions on A⊗B."""

    def __init__(self, pairing: Pairing):
        B = pairing.B
        if not B.has_full_delta or B.unit() is None:
            raise PresentationError("the doubles need B unital with a finite coproduct")
        self.P = pairing
        self.A = pairing.A
        self.B = B
        self.field = pairing.field
        self.one = self.field.one
        self.unit_b = next(iter(B.unit().support()))
        self._legs_cache = {}
        self._conj_cache = {}

    def b_legs(self, lb, n):
        """Δ^{(n)} of a B basis element as a list of (legs, coefficient)."""
        key = (lb, n)
        r = self._legs_cache.get(key)
        if r is None:
            full = self.B.expand(self.B.basis(lb), n, [None] * n)
            r = self._legs_cache[key] = sorted(full.raw_items(), key=lambda kv: repr(kv[0]))
        return r

    def conj(self, b1, la, b3) -> LinComb:
        """b1 ▸ δ ◂ S⁻¹(b3) applied to the A basis element ``la``."""
        key = (b1, la, b3)
        r = self._conj_cache.get(key)
        if r is None:
            P, B = self.P, self.B
            right = P.act(V.B_ON_A_RIGHT, B.antipode_inv(B.basis(b3)), self.A.basis(la))
            r = self._conj_cache[key] = P.act(V.B_ON_A_LEFT, B.basis(b1), right)
        return r

    def conj_lc(self, b1, a: LinComb, b3) -> LinComb:
        acc = Accumulator()
        for la, c in a.raw_items():
            acc.add_lc(self.conj(b1, la, b3), c)
        return acc.result()

    def twist_T(self, z: LinComb) -> LinComb:
        """T on a combination over (b_label, a_label); result over (a_label, b_label)."""
        acc = Accumulator()
        for (lb, la), c in z.raw_items():
            for (b1, b2, b3), k in self.b_legs(lb, 3):
                for x, v in self.conj(b1, la, b3).raw_items():
                    acc.add((x, b2), c * k * v)
        return acc.result()

    def twist_T_inv(self, z: LinComb) -> LinComb:
        """T⁻¹ on a combination over (a_label, b_label); result over (b_label, a_label)."""
        P, B, A = self.P, self.B, self.A
        acc = Accumulator()
        for (la, lb), c in z.raw_items():
            for (b1, b2, b3), k in self.b_legs(lb, 3):
                inner = P.act(V.B_ON_A_RIGHT, B.basis(b3), A.basis(la))
                for x, v in P.act(V.B_ON_A_LEFT, B.antipode_inv(B.basis(b1)), inner).raw_items():
                    acc.add((b2, x), c * k * v)
        return acc.result()

    def twist_R(self, z: LinComb) -> LinComb:
        """R(b⊗a) = b_(1)▸a ⊗ b_(2) on (b_label, a_label) combinations."""
        acc = Accumulator()
        for (lb, la), c in z.raw_items():
            for (b1, b2), k in self.b_legs(lb, 2):
                for x, v in self.P._act_b(V.B_ON_A_LEFT, b1, la).raw_items():
                    acc.add((x, b2), c * k * v)
        return acc.result()

    def twist_R_inv(self, z: LinComb) -> LinComb:
        """R⁻¹(a⊗b) = b_(2) ⊗ S⁻¹(b_(1))▸a."""
        acc = Accumulator()
        for (la, lb), c in z.raw_items():
            for (b1, b2), k in self.b_legs(lb, 2):
                act = self.P.act(V.B_ON_A_LEFT, self.B.antipode_inv(self.B.basis(b1)), self.A.basis(la))
                for x, v in act.raw_items():
                    acc.add((b2, x), c * k * v)
        return acc.result()

    def b_times(self, lb, d: LinComb) -> LinComb:
        """(1⋈b)·d in the double: Σ b_(1)▸a◂S⁻¹(b_(3)) ⋈ b_(2)b'."""
        acc = Accumulator()
        for (la, lb2), c in d.raw_items():
            for (b1, b2, b3), k in self.b_legs(lb, 3):
                conj = self.conj(b1, la, b3)
                bb = self.B._mul_b(b2, lb2)
                for x, v in conj.raw_items():
                    for y, w in bb.raw_items():
                        acc.add((x, y), c * k * v * w)
        return acc.result()

    def times_b(self, d: LinComb, lb) -> LinComb:
        """d·(1⋈b) = a ⋈ b'b."""
        acc = Accumulator()
        for (la, lb2), c in d.raw_items():
            for y, w in self.B._mul_b(lb2, lb).raw_items():
                acc.add((la, y), c * w)
        return acc.result()

    def format_pair(self, label, sep):
        la, lb = label
        return f"{self.A.format_label(la)}{sep}{self.B.format_label(lb)}"


class DrinfeldDouble(MultiplierHopfAlgebra):
    """A⋈B as a regular multiplier Hopf algebra on pair labels.

    ``a_cop=False`` builds a deliberately wrong coproduct slice CAN1 that
    uses Δ_A instead of Δ_A^cop (a negative control only).
    """

    name = "D"

    def __init__(self, pairing: Pairing, a_cop: bool = True):
        super().__init__(pairing.field)
        self.ops = _PairingOps(pairing)
        self.P = pairing
        self.A, self.B = pairing.A, pairing.B
        self.a_cop = a_cop
        self.unital = self.A.unit() is not None
        self._one = self.field.one

    def embed_a(self, a: LinComb) -> LinComb:
        return _pairs(a, self.B.unit())

    def embed_b(self, b: LinComb) -> LinComb:
        if self.A.unit() is None:
            raise RegularityError("1⋈b is only a multiplier when A is non-unital")
        return _pairs(self.A.unit(), b)

    # -- algebra ----------------------------------------------------------------
    def mul_basis(self, x, y):
        (a, b), (a2, b2) = x, y
        ops, A, B = self.ops, self.A, self.B
        acc = Accumulator()
        for (b1, bm, b3), k in ops.b_legs(b, 3):
            left = A.mul(A.basis(a), ops.conj(b1, a2, b3))
            if not left:
                continue
            right = B._mul_b(bm, b2)
            for x1, v in left.raw_items():
                for y1, w in right.raw_items():
                    acc.add((x1, y1), k * v * w)
        return acc.result()

    def mul_via_twist(self, x: LinComb, y: LinComb) -> LinComb:
        """(a⋈b)(a'⋈b') = Σ T(b_i ⊗ a_i a')(1⊗b') where T⁻¹(a⊗b) = Σ b_i ⊗ a_i."""
        ops, A, B = self.ops, self.A, self.B
        acc = Accumulator()
        for (a, b), c in x.raw_items():
            for (a2, b2), c2 in y.raw_items():
                tinv = ops.twist_T_inv(LinComb.basis((a, b), self._one))
                for (bi, ai), k in tinv.raw_items():
                    prod = A.mul(A.basis(ai), A.basis(a2))
                    t = ops.twist_T(_pairs(B.basis(bi), prod))
                    for (xa, xb), v in t.raw_items():
                        for yb, w in B._mul_b(xb, b2).raw_items():
                            acc.add((xa, yb), c * c2 * k * v * w)
        return acc.result()

    def counit_basis(self, x):
        a, b = x
        ea = self.A.counit_basis(a)
        return ea * self.B.counit_basis(b) if ea else self.field.zero

    def antipode_basis(self, x):
        a, b = x
        return self.ops.twist_T(_pairs(self.B._s_b(b), self.A._sinv_b(a)))

    def antipode_inv_basis(self, x):
        a, b = x
        return self.ops.twist_T(_pairs(self.B._sinv_b(b), self.A._s_b(a)))

    def unit(self):
        ua = self.A.unit()
        return None if ua is None else _pairs(ua, self.B.unit())

    def local_unit(self, labels, radius=0):
        """u⋈1 for a two-sided A-local unit u (verified by callers)."""
        return self.embed_a(self.A.local_unit([la for la, _ in labels], radius))

    # -- coproduct slices --------------------------------------------------------
    def delta_slice_basis(self, variant, x, y):
        ops, A, B, P = self.ops, self.A, self.B, self.P
        acc = Accumulator()
        if variant is Variant.CAN1:
            # Δ(a⋈b)(1⊗(a'⋈b')) = (a_(2)⋈b_(1)) ⊗ a_(1)z ⋈ b_(3)b',  z = b_(2)▸a'◂S⁻¹(b_(4))
            (a, b), (a2, b2) = x, y
            for (b1, bz, b3, b4), k in ops.b_legs(b, 4):
                z = ops.conj(bz, a2, b4)
                if not z:
                    continue
                bb = B._mul_b(b3, b2)
                if self.a_cop:
                    sl = A.delta_slice(Variant.CAN3, A.basis(a), z)  # a_(1)z ⊗ a_(2)
                    terms = [(((y2, b1), (x1, yb)), v * w) for (x1, y2), v in sl.raw_items() for yb, w in bb.raw_items()]
                else:
                    sl = A.delta_slice(Variant.CAN1, A.basis(a), z)  # a_(1) ⊗ a_(2)z
                    terms = [(((x1, b1), (y2, yb)), v * w) for (x1, y2), v in sl.raw_items() for yb, w in bb.raw_items()]
                for lab, v in terms:
                    acc.add(lab, k * v)
        elif variant is Variant.CAN2:
            # ((a'⋈b')⊗1)Δ(a⋈b) = ⟨x1,S⁻¹b'_(3)⟩⟨x3,b'_(1)⟩ a'x2 ⋈ b'_(2)b_(1) ⊗ y ⋈ b_(2)
            # over Δ^{(4)}(a) = y ⊗ x1 ⊗ x2 ⊗ x3
            (a2, b2), (a, b) = x, y
            for (c1, c2, c3), k in ops.b_legs(b2, 3):
                sc3 = B._sinv_b(c3)
                f1 = P.a_partners_of(sc3)
                f3 = P.partners_of_b(c1)
                f2 = A.right_partners(a2)
                legs = A.expand(A.basis(a), 4, [None, f1, f2, f3])
                for (yl, x1, x2, x3), v in legs.raw_items():
                    s = P.pair(A.basis(x1), sc3) * P._pb(x3, c1)
                    if not s:
                        continue
                    ax = A._mul_b(a2, x2)
                    for (bb1, bb2), w in ops.b_legs(b, 2):
                        for yb, u in B._mul_b(c2, bb1).raw_items():
                            for xa, t in ax.raw_items():
                                acc.add(((xa, yb), (yl, bb2)), k * v * s * w * u * t)
        elif variant is Variant.CAN3:
            # Δ(a⋈b)((a'⋈b')⊗1) = a_(2)z ⋈ b_(2)b' ⊗ a_(1) ⋈ b_(4),  z = b_(1)▸a'◂S⁻¹(b_(3))
            (a, b), (a2, b2) = x, y
            for (b1, bm, b3, b4), k in ops.b_legs(b, 4):
                z = ops.conj(b1, a2, b3)
                if not z:
                    continue
                sl = A.delta_slice(Variant.CAN1, A.basis(a), z)  # a_(1) ⊗ a_(2)z
                bb = B._mul_b(bm, b2)
                for (x1, w1), v in sl.raw_items():
                    for yb, w in bb.raw_items():
                        acc.add(((w1, yb), (x1, b4)), k * v * w)
        elif variant is Variant.CAN4:
            # (1⊗(a'⋈b'))Δ(a⋈b) = y ⋈ b_(1) ⊗ ⟨x1,S⁻¹b'_(3)⟩⟨x3,b'_(1)⟩ a'x2 ⋈ b'_(2)b_(2)
            # over Δ^{(4)}(a) = x1 ⊗ x2 ⊗ x3 ⊗ y
            (a2, b2), (a, b) = x, y
            for (c1, c2, c3), k in ops.b_legs(b2, 3):
                sc3 = B._sinv_b(c3)
                f1 = P.a_partners_of(sc3)
                f3 = P.partners_of_b(c1)
                f2 = A.right_partners(a2)
                legs = A.expand(A.basis(a), 4, [f1, f2, f3, None])
                for (x1, x2, x3, yl), v in legs.raw_items():
                    s = P.pair(A.basis(x1), sc3) * P._pb(x3, c1)
                    if not s:
                        continue
                    ax = A._mul_b(a2, x2)
                    for (bb1, bb2), w in ops.b_legs(b, 2):
                        for yb, u in B._mul_b(c2, bb2).raw_items():
                            for xa, t in ax.raw_items():
                                acc.add(((yl, bb1), (xa, yb)), k * v * s * w * u * t)
        else:
            raise ValueError(variant)
        return acc.result()

    def sample_labels(self, window=8):
        return [(a, b) for a in self.A.sample_labels(window) for b in self.B.sample_labels(window)]

    def format_label(self, label):
        return self.ops.format_pair(label, "⋈")


class HeisenbergDouble:
    """A#B with the D-action and D-coaction.

    ``corrupt`` selects a negative-control variant: ``drop_antipode`` (the
    S⁻¹(a_(2)) factor of the action is dropped), ``swap_b`` (the coaction
    takes its B legs in the wrong order) or ``trivial_action`` (d·h = ε(d)h).
    """

    CORRUPTIONS = ("drop_antipode", "swap_b", "trivial_action")

    def __init__(self, pairing: Pairing, double: DrinfeldDouble | None = None, corrupt: str | None = None):
        if corrupt is not None and corrupt not in self.CORRUPTIONS:
            raise ValueError(f"unknown corruption {corrupt!r}")
        self.P = pairing
        self.A, self.B = pairing.A, pairing.B
        self.D = double if double is not None else DrinfeldDouble(pairing)
        self.ops = self.D.ops
        self.field = pairing.field
        self._one = self.field.one
        self.corrupt = corrupt
        self._mul_cache = {}
        self._act_cache = {}
        self._coact_l_cache = {}
        self._coact_r_cache = {}

    def basis(self, label, coef=None) -> LinComb:
        return LinComb.basis(label, self._one if coef is None else self.field(coef))

    def sample_labels(self, window=8):
        return self.D.sample_labels(window)

    def format_label(self, label):
        return self.ops.format_pair(label, "#")

    def render(self, x: LinComb) -> str:
        return x.render(self.format_label)

    # -- product -----------------------------------------------------------------
    def _mul_b(self, x, y) -> LinComb:
        key = (x, y)
        r = self._mul_cache.get(key)
        if r is None:
            (a, b), (a2, b2) = x, y
            acc = Accumulator()
            for (b1, bm), k in self.ops.b_legs(b, 2):
                left = self.A.mul(self.A.basis(a), self.P._act_b(V.B_ON_A_LEFT, b1, a2))
                if not left:
                    continue
                for xa, v in left.raw_items():
                    for yb, w in self.B._mul_b(bm, b2).raw_items():
                        acc.add((xa, yb), k * v * w)
            r = self._mul_cache[key] = acc.result()
        return r

    def mul(self, x: LinComb, y: LinComb) -> LinComb:
        acc = Accumulator()
        for k1, c1 in x.raw_items():
            for k2, c2 in y.raw_items():
                acc.add_lc(self._mul_b(k1, k2), c1 * c2)
        return acc.result()

    def mul_with_multiplier(self, left_a, lb, h: LinComb) -> LinComb:
        """(M#b)·h for an A-multiplier M given as a map on A elements (None = 1).

        (M#b)(a'#b') = M(b_(1)▸a') # b_(2)b'.
        """
        acc = Accumulator()
        for (a2, b2), c in h.raw_items():
            for (b1, bm), k in self.ops.b_legs(lb, 2):
                part = self.P._act_b(V.B_ON_A_LEFT, b1, a2)
                if left_a is not None:
                    part = left_a(part)
                for xa, v in part.raw_items():
                    for yb, w in self.B._mul_b(bm, b2).raw_items():
                        acc.add((xa, yb), c * k * v * w)
        return acc.result()

    # -- D-action ------------------------------------------------------------------
    def _act_b(self, d, h) -> LinComb:
        key = (d, h)
        r = self._act_cache.get(key)
        if r is None:
            r = self._act_cache[key] = self._action_basis(d, h)
        return r

    def act(self, d: LinComb, h: LinComb) -> LinComb:
        acc = Accumulator()
        for k1, c1 in d.raw_items():
            for k2, c2 in h.raw_items():
                acc.add_lc(self._act_b(k1, k2), c1 * c2)
        return acc.result()

    def _action_basis(self, d, h) -> LinComb:
        (a, b), (a2, b2) = d, h
        A, B, P, ops = self.A, self.B, self.P, self.ops
        if self.corrupt == "trivial_action":
            e = self.D.counit_basis(d)
            return LinComb.basis(h, e) if e else LinComb.zero()
        acc = Accumulator()
        for (b1, bm, b3), k in ops.b_legs(b, 3):
            z = P._act_b(V.B_ON_A_LEFT, b1, a2)
            if not z:
                continue
            y = B.mul(B._mul_b(bm, b2), B._s_b(b3))
            if not y:
                continue
            # a_(1) is paired through y ◂ S⁻¹(a_(1)), a_(3) multiplies z on the left
            y_first = set()
            for yl, _ in y.raw_items():
                for (s, _t), _c in B.full_delta_basis(yl).raw_items():
                    y_first.add(s)
            f1 = set()
            for s in y_first:
                f1 |= P.a_partners_of(B._sinv_b(s))
            f3 = A.left_partners_of(z)
            if self.corrupt == "drop_antipode":
                legs = A.expand(A.basis(a), 3, [f1, None, f3])
                for (l1, l2, l3), v in legs.raw_items():
                    left = A.mul(A.basis(l3), z)
                    right = P.act(V.A_ON_B_RIGHT, A._sinv_b(l1), y)
                    acc.add_lc(_pairs(left, right), k * v)
                continue
            legs = A.expand(A.basis(a), 3, [f1, None, f3])
            for (l1, l2, l3), v in legs.raw_items():
                right = P.act(V.A_ON_B_RIGHT, A._sinv_b(l1), y)
                if not right:
                    continue
                left = A.mul(A.mul(A.basis(l3), z), A._sinv_b(l2))
                if left:
                    acc.add_lc(_pairs(left, right), k * v)
        return acc.result()

    # -- D-coaction ----------------------------------------------------------------
    def coact_left(self, d: LinComb, h: LinComb) -> LinComb:
        """(d⊗1)Γ(h) as a combination over (D-label, H-label)."""
        acc = Accumulator()
        for k1, c1 in d.raw_items():
            for k2, c2 in h.raw_items():
                key = (k1, k2)
                r = self._coact_l_cache.get(key)
                if r is None:
                    r = self._coact_l_cache[key] = self._coact_left_basis(k1, k2)
                acc.add_lc(r, c1 * c2)
        return acc.result()

    def coact_right(self, h: LinComb, d: LinComb) -> LinComb:
        """Γ(h)(d⊗1) as a combination over (D-label, H-label)."""
        acc = Accumulator()
        for k1, c1 in h.raw_items():
            for k2, c2 in d.raw_items():
                key = (k1, k2)
                r = self._coact_r_cache.get(key)
                if r is None:
                    r = self._coact_r_cache[key] = self._coact_right_basis(k1, k2)
                acc.add_lc(r, c1 * c2)
        return acc.result()

    def _coact_left_basis(self, d, h) -> LinComb:
        if self.corrupt != "swap_b":
            return self.D._slice_b(Variant.CAN2, d, h)
        # Γ'(a#b) = (a_(2)⋈b_(2)) ⊗ (a_(1)#b_(1))
        a, b = h
        D, ops = self.D, self.ops
        acc = Accumulator()
        base = D._slice_b(Variant.CAN2, d, (a, ops.unit_b))
        for (b1, b2), k in ops.b_legs(b, 2):
            for (p, (xa, _)), v in base.raw_items():
                for q, w in ops.times_b(LinComb.basis(p, self._one), b2).raw_items():
                    acc.add((q, (xa, b1)), k * v * w)
        return acc.result()

    def _coact_right_basis(self, h, d) -> LinComb:
        if self.corrupt != "swap_b":
            return self.D._slice_b(Variant.CAN3, h, d)
        a, b = h
        D, ops = self.D, self.ops
        acc = Accumulator()
        for (b1, b2), k in ops.b_legs(b, 2):
            cover = ops.b_times(b2, LinComb.basis(d, self._one))
            sl = D.delta_slice(Variant.CAN3, LinComb.basis((a, ops.unit_b), self._one), cover)
            for (p, (xa, _)), v in sl.raw_items():
                acc.add((p, (xa, b1)), k * v)
        return acc.result()

    def coact_left_via_b_legs(self, d: LinComb, h: LinComb) -> LinComb:
        """(d⊗1)Γ(a#b) = Σ ((d⊗1)Γ(a#1))·((1⋈b_(1)) ⊗ (1#b_(2))): a cross-check route."""
        D, ops = self.D, self.ops
        acc = Accumulator()
        for (a, b), c in h.raw_items():
            base = D.delta_slice(Variant.CAN2, d, LinComb.basis((a, ops.unit_b), self._one))
            for (b1, b2), k in ops.b_legs(b, 2):
                for (p, (xa, _)), v in base.raw_items():
                    for q, w in ops.times_b(LinComb.basis(p, self._one), b1).raw_items():
                        acc.add((q, (xa, b2)), c * k * v * w)
        return acc.result()

    # -- local units for the D-module ------------------------------------------------
    def module_unit(self, h: LinComb, max_radius: int = 4) -> LinComb:
        """u = e⋈1 with u·h = h, found by widening A-local units."""
        return find_module_unit(self, h, max_radius)

    def module_seeds(self, h: LinComb) -> set:
        A, B, P = self.A, self.B, self.P
        seeds = set()
        for (a, b), _ in h.raw_items():
            seeds.add(a)
            for lb in B.full_delta_basis(b).support():
                for x in lb:
                    for la in P.partners_of_b(x):
                        seeds.add(la)
                        seeds.update(A._s_b(la).support())
                        seeds.update(A._sinv_b(la).support())
        return seeds


def find_module_unit(structure, v: LinComb, max_radius: int = 4) -> LinComb:
    """Search A-local units u so that (u⋈1)·v = v holds exactly."""
    D = structure.D
    if not v:
        return D.embed_a(D.A.local_unit([], 0)) if D.A.unit() is None else D.unit()
    if D.unit() is not None:
        u = D.unit()
        if structure.act(u, v) == v:
            return u
    seeds = structure.module_seeds(v)
    for r in range(max_radius + 1):
        u = D.embed_a(D.A.local_unit(seeds, r))
        if structure.act(u, v) == v:
            return u
    raise RegularityError(f"no local unit of D fixes {v!r} within radius {max_radius}")


# -- restricted structures on A and B ---------------------------------------------------


class RestrictedA:
    """A as a D-module via (a⋈b)·a' = a_(2)(b▸a')S⁻¹(a_(1)), comodule via ρ(a') = (a'_(2)⋈1) ⊗ a'_(1)."""

    def __init__(self, heis: HeisenbergDouble):
        self.H = heis
        self.D = heis.D
        self.A, self.B, self.P = heis.A, heis.B, heis.P
        self.ops = heis.ops
        self.field = heis.field
        self._one = self.field.one
        self._act_cache = {}

    def basis(self, label):
        return LinComb.basis(label, self._one)

    def sample_labels(self, window=8):
        return self.A.sample_labels(window)

    def format_label(self, label):
        return self.A.format_label(label)

    def mul(self, x, y):
        return self.A.mul(x, y)

    def _act_b(self, d, la):
        key = (d, la)
        r = self._act_cache.get(key)
        if r is None:
            a, b = d
            A = self.A
            w = self.P._act_b(V.B_ON_A_LEFT, b, la)
            acc = Accumulator()
            if w:
                legs = A.expand(A.basis(a), 2, [None, A.left_partners_of(w)])
                for (l1, l2), v in legs.raw_items():
                    acc.add_lc(A.mul(A.mul(A.basis(l2), w), A._sinv_b(l1)), v)
            r = self._act_cache[key] = acc.result()
        return r

    def act(self, d, x):
        acc = Accumulator()
        for k1, c1 in d.raw_items():
            for k2, c2 in x.raw_items():
                acc.add_lc(self._act_b(k1, k2), c1 * c2)
        return acc.result()

    def coact_left(self, d, x):
        sl = self.D.delta_slice(Variant.CAN2, d, self.D.embed_a(x))
        return LinComb._raw({(p, xa): v for (p, (xa, _)), v in sl.raw_items()})

    def coact_right(self, x, d):
        sl = self.D.delta_slice(Variant.CAN3, self.D.embed_a(x), d)
        return LinComb._raw({(p, xa): v for (p, (xa, _)), v in sl.raw_items()})

    def module_seeds(self, x):
        # the adjoint action a_(2)·a'·S⁻¹(a_(1)) needs the unit to cover the counit support
        seeds = set(self.A.counit_support())
        for la, _ in x.raw_items():
            seeds.add(la)
            seeds.update(self.A._s_b(la).support())
            seeds.update(self.A._sinv_b(la).support())
        return seeds

    def module_unit(self, x, max_radius=4):
        return find_module_unit(self, x, max_radius)


class RestrictedB:
    """B as a D-module via (a⋈b)·b' = (b_(1)b'S(b_(2)))◂S⁻¹(a), comodule via ρ(b') = (1⋈b'_(1)) ⊗ b'_(2)."""

    def __init__(self, heis: HeisenbergDouble):
        self.H = heis
        self.D = heis.D
        self.A, self.B, self.P = heis.A, heis.B, heis.P
        self.ops = heis.ops
        self.field = heis.field
        self._one = self.field.one
        self._act_cache = {}

    def basis(self, label):
        return LinComb.basis(label, self._one)

    def sample_labels(self, window=8):
        return self.B.sample_labels(window)

    def format_label(self, label):
        return self.B.format_label(label)

    def mul(self, x, y):
        return self.B.mul(x, y)

    def _act_b(self, d, lb):
        key = (d, lb)
        r = self._act_cache.get(key)
        if r is None:
            a, b = d
            B = self.B
            acc = Accumulator()
            for (b1, b2), k in self.ops.b_legs(b, 2):
                acc.add_lc(B.mul(B._mul_b(b1, lb), B._s_b(b2)), k)
            y = acc.result()
            r = self._act_cache[key] = self.P.act(V.A_ON_B_RIGHT, self.A._sinv_b(a), y)
        return r

    def act(self, d, x):
        acc = Accumulator()
        for k1, c1 in d.raw_items():
            for k2, c2 in x.raw_items():
                acc.add_lc(self._act_b(k1, k2), c1 * c2)
        return acc.result()

    def coact_left(self, d, x):
        acc = Accumulator()
        for lb, c in x.raw_items():
            for (b1, b2), k in self.ops.b_legs(lb, 2):
                for p, v in self.ops.times_b(d, b1).raw_items():
                    acc.add((p, b2), c * k * v)
        return acc.result()

    def coact_right(self, x, d):
        acc = Accumulator()
        for lb, c in x.raw_items():
            for (b1, b2), k in self.ops.b_legs(lb, 2):
                for p, v in self.ops.b_times(b1, d).raw_items():
                    acc.add((p, b2), c * k * v)
        return acc.result()

    def module_seeds(self, x):
        A, P = self.A, self.P
        seeds = set()
        for lb, _ in x.raw_items():
            for pair in self.B.full_delta_basis(lb).support():
                for y in pair:
                    for la in P.partners_of_b(y):
                        seeds.add(la)
                        seeds.update(A._s_b(la).support())
                        seeds.update(A._sinv_b(la).support())
        return seeds

    def module_unit(self, x, max_radius=4):
        return find_module_unit(self, x, max_radius)


class HeisenbergYD:
    """The Heisenberg double viewed as a D-Yetter-Drinfel'd module algebra."""

    def __init__(self, heis: HeisenbergDouble):
        self.H = heis
        self.D = heis.D
        self.field = heis.field

    def basis(self, label):
        return self.H.basis(label)

    def sample_labels(self, window=8):
        return self.H.sample_labels(window)

    def format_label(self, label):
        return self.H.format_label(label)

    def mul(self, x, y):
        return self.H.mul(x, y)

    def act(self, d, x):
        return self.H.act(d, x)

    def coact_left(self, d, x):
        return self.H.coact_left(d, x)

    def coact_right(self, x, d):
        return self.H.coact_right(x, d)

    def module_seeds(self, x):
        return self.H.module_seeds(x)

    def module_unit(self, x, max_radius=4):
        return self.H.module_unit(x, max_radius)


# -- braided product A ∝ B ---------------------------------------------------------------


def braided_mul(heis: HeisenbergDouble, x: LinComb, y: LinComb) -> LinComb:
    """(a∝b)(a'∝b') = a(b_(-1)·a') ∝ b_(0)b' using the restricted structures.

    b_(-1)·a' is evaluated as ((b_(-1)u)·a') with u·a' = a', i.e. through the
    right-covered coaction ρ(b)(u⊗1).  Labels are (a, b) pairs as in A#B.
    """
    RA, RB = RestrictedA(heis), RestrictedB(heis)
    A, B = heis.A, heis.B
    one = heis.field.one
    acc = Accumulator()
    for (a, b), c in x.raw_items():
        for (a2, b2), c2 in y.raw_items():
            a2l = LinComb.basis(a2, one)
            u = RA.module_unit(a2l)
            for (p, b0), k in RB.coact_right(LinComb.basis(b, one), u).raw_items():
                moved = A.mul(A.basis(a), RA.act(LinComb.basis(p, one), a2l))
                if not moved:
                    continue
                acc.add_lc(_pairs(moved, B._mul_b(b0, b2)), c * c2 * k)
    return acc.result()


def diagonal_action(heis: HeisenbergDouble, d: LinComb, h: LinComb) -> LinComb:
    """d·(a∝b) = Σ (d_(1)·a) ∝ (d_(2)·b), covered as Δ(d)(1⊗u) with u·b = b."""
    RA, RB = RestrictedA(heis), RestrictedB(heis)
    one = heis.field.one
    acc = Accumulator()
    for (a, b), c in h.raw_items():
        bl = LinComb.basis(b, one)
        u = RB.module_unit(bl)
        for (d1, d2), k in heis.D.delta_slice(Variant.CAN1, d, u).raw_items():
            left = RA.act(LinComb.basis(d1, one), LinComb.basis(a, one))
            if not left:
                continue
            right = RB.act(LinComb.basis(d2, one), bl)
            acc.add_lc(_pairs(left, right), c * k)
    return acc.result()


def product_coaction_left(heis: HeisenbergDouble, d: LinComb, h: LinComb) -> LinComb:
    """(d⊗1)ρ(a)ρ(b) on a∝b, over (D-label, H-label)."""
    RA, RB = RestrictedA(heis), RestrictedB(heis)
    one = heis.field.one
    acc = Accumulator()
    for (a, b), c in h.raw_items():
        for (p, x), k in RA.coact_left(d, LinComb.basis(a, one)).raw_items():
            for (q, y), v in RB.coact_left(LinComb.basis(p, one), LinComb.basis(b, one)).raw_items():
                acc.add((q, (x, y)), c * k * v)
    return acc.result()


def build_doubles(pairing: Pairing, corrupt: str | None = None):
    """Construct (D, H) for a pairing, with an optional negative-control variant."""
    D = DrinfeldDouble(pairing, a_cop=(corrupt != "a_chirality"))
    H = HeisenbergDouble(pairing, D, corrupt=None if corrupt in (None, "a_chirality") else corrupt)
    return D, H


__all__ = [
    "DrinfeldDouble",
    "HeisenbergDouble",
    "HeisenbergYD",
    "RestrictedA",
    "RestrictedB",
    "braided_mul",
    "build_doubles",
    "diagonal_action",
    "find_module_unit",
    "product_coaction_left",
]

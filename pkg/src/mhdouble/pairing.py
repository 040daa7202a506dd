"""Pairings between two multiplier Hopf algebras and the four induced actions.

For a pairing ⟨A, B⟩ with Δ(a) = Σ a_(1) ⊗ a_(2):

* ``B_ON_A_LEFT``   b ▸ a = ⟨a_(2), b⟩ a_(1)
* ``B_ON_A_RIGHT``  a ◂ b = ⟨a_(1), b⟩ a_(2)
* ``A_ON_B_LEFT``   a ▸ b = ⟨a, b_(2)⟩ b_(1)
* ``A_ON_B_RIGHT``  b ◂ a = ⟨a, b_(1)⟩ b_(2)

The ``variant`` names who acts on whom and from which side.  Each action is a
finite sum because the leg that gets paired only ranges over the (finite)
pairing partners of the actor.
"""

from __future__ import annotations

import enum
from typing import Callable

from .errors import RegularityError
from .lincomb import Accumulator, LinComb, sorted_labels
from .mha import MultiplierHopfAlgebra, Variant


class ActionVariant(enum.Enum):
    B_ON_A_LEFT = "b▸a"
    A_ON_B_LEFT = "a▸b"
    B_ON_A_RIGHT = "a◂b"
    A_ON_B_RIGHT = "b◂a"


class Pairing:
    """A non-degenerate pairing given on basis labels.

    ``partners_of_a(la)`` is the finite set of B-labels pairing nontrivially
    with ``la`` (and symmetrically for ``partners_of_b``).  ``closed_form`` is
    an optional fast rule ``(variant, actor_label, target_label) -> LinComb``;
    it is cross-checked against the defining formula by the verifier.
    """

    def __init__(
        self,
        A: MultiplierHopfAlgebra,
        B: MultiplierHopfAlgebra,
        pair_basis: Callable,
        partners_of_a: Callable,
        partners_of_b: Callable,
        closed_form: Callable | None = None,
        name: str = "pairing",
    ):
        if A.field != B.field:
            raise ValueError("paired algebras must share a coefficient field")
        self.A = A
        self.B = B
        self.field = A.field
        self.pair_basis = pair_basis
        self.partners_of_a = partners_of_a
        self.partners_of_b = partners_of_b
        self.closed_form = closed_form
        self.name = name
        self.use_closed_form = closed_form is not None
        self._act_cache = {}
        self._pb_cache = {}

    # -- the form -----------------------------------------------------------
    def _pb(self, la, lb):
        key = (la, lb)
        v = self._pb_cache.get(key)
        if v is None:
            v = self._pb_cache[key] = self.pair_basis(la, lb)
        return v

    def pair(self, a: LinComb, b: LinComb):
        total = self.field.zero
        for la, ca in a.raw_items():
            for lb, cb in b.raw_items():
                v = self._pb(la, lb)
                if v:
                    total = total + ca * cb * v
        return total

    def a_partners_of(self, b: LinComb) -> frozenset:
        """A-labels pairing nontrivially with some label of ``b``."""
        out = set()
        for lb, _ in b.raw_items():
            out.update(self.partners_of_b(lb))
        return frozenset(out)

    def b_partners_of(self, a: LinComb) -> frozenset:
        out = set()
        for la, _ in a.raw_items():
            out.update(self.partners_of_a(la))
        return frozenset(out)

    # -- actions --------------------------------------------------------------
    def act(self, variant: ActionVariant, actor: LinComb, target: LinComb) -> LinComb:
        acc = Accumulator()
        for k1, c1 in actor.raw_items():
            for k2, c2 in target.raw_items():
                acc.add_lc(self._act_b(variant, k1, k2), c1 * c2)
        return acc.result()

    def _act_b(self, variant, actor, target) -> LinComb:
        key = (variant, actor, target)
        r = self._act_cache.get(key)
        if r is None:
            if self.use_closed_form:
                r = self.closed_form(variant, actor, target)
            else:
                r = self.act_defining_basis(variant, actor, target)
            self._act_cache[key] = r
        return r

    def act_defining_basis(self, variant: ActionVariant, actor, target) -> LinComb:
        """The defining formula, evaluated through coproduct queries."""
        acc = Accumulator()
        if variant is ActionVariant.B_ON_A_LEFT:
            for t in sorted_labels(self.partners_of_b(actor)):
                acc.add_lc(self.A.coproduct_given_right(target, t), self._pb(t, actor))
        elif variant is ActionVariant.B_ON_A_RIGHT:
            for s in sorted_labels(self.partners_of_b(actor)):
                acc.add_lc(self.A.coproduct_given_left(target, s), self._pb(s, actor))
        elif variant is ActionVariant.A_ON_B_LEFT:
            for t in sorted_labels(self.partners_of_a(actor)):
                acc.add_lc(self.B.coproduct_given_right(target, t), self._pb(actor, t))
        elif variant is ActionVariant.A_ON_B_RIGHT:
            for s in sorted_labels(self.partners_of_a(actor)):
                acc.add_lc(self.B.coproduct_given_left(target, s), self._pb(actor, s))
        else:
            raise ValueError(variant)
        return acc.result()

    def act_defining(self, variant, actor: LinComb, target: LinComb) -> LinComb:
        acc = Accumulator()
        for k1, c1 in actor.raw_items():
            for k2, c2 in target.raw_items():
                acc.add_lc(self.act_defining_basis(variant, k1, k2), c1 * c2)
        return acc.result()

    def act_covered(self, variant, actor: LinComb, target: LinComb, cover: LinComb) -> LinComb:
        """The action multiplied by a cover, straight from the covered coproduct.

        ``b ▸ a`` and ``a ▸ b`` are covered on the right ((b▸a)·cover), the two
        right actions on the left (cover·(a◂b)).
        """
        acc = Accumulator()
        if variant is ActionVariant.B_ON_A_LEFT:
            # (b▸a)a' = ⟨a_(2), b⟩ a_(1)a' with Δ(a)(a'⊗1) = a_(1)a' ⊗ a_(2)
            for (x, y), c in self.A.delta_slice(Variant.CAN3, target, cover).raw_items():
                v = self.pair(LinComb.basis(y, self.field.one), actor)
                if v:
                    acc.add(x, c * v)
        elif variant is ActionVariant.B_ON_A_RIGHT:
            # a'(a◂b) = ⟨a_(1), b⟩ a'a_(2) with (1⊗a')Δ(a) = a_(1) ⊗ a'a_(2)
            for (x, y), c in self.A.delta_slice(Variant.CAN4, cover, target).raw_items():
                v = self.pair(LinComb.basis(x, self.field.one), actor)
                if v:
                    acc.add(y, c * v)
        elif variant is ActionVariant.A_ON_B_LEFT:
            for (x, y), c in self.B.delta_slice(Variant.CAN3, target, cover).raw_items():
                v = self.pair(actor, LinComb.basis(y, self.field.one))
                if v:
                    acc.add(x, c * v)
        elif variant is ActionVariant.A_ON_B_RIGHT:
            for (x, y), c in self.B.delta_slice(Variant.CAN4, cover, target).raw_items():
                v = self.pair(actor, LinComb.basis(x, self.field.one))
                if v:
                    acc.add(y, c * v)
        else:
            raise ValueError(variant)
        return acc.result()

    def act_cover_sides(self, variant, actor, target, radius: int = 2):
        """(action·cover, covered defining value) for a local-unit cover.

        Raises :class:`RegularityError` if no local unit within ``radius``
        fixes the action's value.
        """
        value = self.act(variant, actor, target)
        alg = self.A if variant in (ActionVariant.B_ON_A_LEFT, ActionVariant.B_ON_A_RIGHT) else self.B
        seeds = set(value.support()) | set(target.support())
        for r in range(radius + 1):
            u = alg.local_unit(seeds, r)
            if variant in (ActionVariant.B_ON_A_LEFT, ActionVariant.A_ON_B_LEFT):
                if alg.mul(value, u) != value:
                    continue
                return value, self.act_covered(variant, actor, target, u)
            if alg.mul(u, value) != value:
                continue
            return value, self.act_covered(variant, actor, target, u)
        raise RegularityError(f"{self.name}: no local unit stabilizes {variant.value}")

    # -- duality identities ---------------------------------------------------
    def duality_sides(self, a, a2, b, b2):
        """Scalar identities that make the pairing a pairing.

        ⟨aa', b⟩ = ⟨a', b◂a⟩ = ⟨a, a'▸b⟩, ⟨a, bb'⟩ = ⟨a◂b, b'⟩ = ⟨b'▸a, b⟩,
        ⟨S(a), b⟩ = ⟨a, S(b)⟩.
        """
        A, B, V = self.A, self.B, ActionVariant
        out = [
            ("⟨aa',b⟩ = ⟨a',b◂a⟩", self.pair(A.mul(a, a2), b), self.pair(a2, self.act(V.A_ON_B_RIGHT, a, b))),
            ("⟨aa',b⟩ = ⟨a,a'▸b⟩", self.pair(A.mul(a, a2), b), self.pair(a, self.act(V.A_ON_B_LEFT, a2, b))),
            ("⟨a,bb'⟩ = ⟨a◂b,b'⟩", self.pair(a, B.mul(b, b2)), self.pair(self.act(V.B_ON_A_RIGHT, b, a), b2)),
            ("⟨a,bb'⟩ = ⟨b'▸a,b⟩", self.pair(a, B.mul(b, b2)), self.pair(self.act(V.B_ON_A_LEFT, b2, a), b)),
            ("⟨S(a),b⟩ = ⟨a,S(b)⟩", self.pair(A.antipode(a), b), self.pair(a, B.antipode(b))),
        ]
        u = B.unit()
        if u is not None:
            out.append(("⟨a,1⟩ = ε(a)", self.pair(a, u), A.counit(a)))
        return out

    def check_pairing_duality(self, a, a2, b, b2) -> bool:
        return all(l == r for _, l, r in self.duality_sides(a, a2, b, b2))

    def mixed_associativity_sides(self, b, b2, a):
        """(bb') ▸ a = b ▸ (b' ▸ a) and a ◂ (bb') = (a ◂ b) ◂ b'."""
        V, B = ActionVariant, self.B
        return [
            ("(bb')▸a = b▸(b'▸a)", self.act(V.B_ON_A_LEFT, B.mul(b, b2), a),
             self.act(V.B_ON_A_LEFT, b, self.act(V.B_ON_A_LEFT, b2, a))),
            ("a◂(bb') = (a◂b)◂b'", self.act(V.B_ON_A_RIGHT, B.mul(b, b2), a),
             self.act(V.B_ON_A_RIGHT, b2, self.act(V.B_ON_A_RIGHT, b, a))),
        ]

    def nondegenerate_on(self, a_labels, b_labels) -> list:
        """Labels (with side) in the window that pair trivially with everything."""
        bad = []
        for la in a_labels:
            if not any(self._pb(la, lb) for lb in self.partners_of_a(la)):
                bad.append(("A", la))
        for lb in b_labels:
            if not any(self._pb(la, lb) for la in self.partners_of_b(lb)):
                bad.append(("B", lb))
        return bad

"""Regular multiplier Hopf algebras presented by basis rules.

Coproducts are never materialized uncovered.  A presentation answers two kinds
of finite queries about ``Δ(x) = Σ c^x_{s,t} s ⊗ t``:

* ``coproduct_given_right(x, t)`` returns ``Σ_s c^x_{s,t} s`` and
  ``coproduct_given_left(x, s)`` returns ``Σ_t c^x_{s,t} t`` (both finite);
* ``left_partners(y)`` / ``right_partners(x)`` bound the labels that can
  multiply ``y`` from the left / ``x`` from the right to something nonzero.

Together these turn every covered expression (``Δ(a)(1⊗b)``, a leg paired
against a finite element, a leg multiplied by a neighbouring factor, ...) into
a finite sum.  Unital instances with honest finite coproducts may also supply
``full_delta_basis``; it is a fast path, never a requirement for the covered
identities.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import PresentationError, RegularityError, UnderCoveredError
from .lincomb import Accumulator, LinComb, apply_legs, sorted_labels
from .scalars import Field


class Variant(enum.Enum):
    """The four covered coproduct slices of a regular multiplier Hopf algebra."""

    CAN1 = "CAN1"  # Δ(a)(1⊗b)
    CAN2 = "CAN2"  # (a⊗1)Δ(b)
    CAN3 = "CAN3"  # Δ(a)(b⊗1)
    CAN4 = "CAN4"  # (1⊗a)Δ(b)


@dataclass(frozen=True)
class Cover:
    """A cover for one leg of an expansion.

    ``side='right'`` multiplies the leg by ``element`` on the right,
    ``side='left'`` on the left.  ``side='filter'`` carries an explicit finite
    label set outside of which the caller's context annihilates the leg (used
    for legs that are paired against a finite element).
    """

    side: str
    element: object


@dataclass(frozen=True)
class SweedlerExpansion:
    legs: LinComb
    covers: tuple

    @property
    def n(self) -> int:
        return len(self.covers)


class MultiplierHopfAlgebra:
    """Base class.  Subclasses implement the basis rules."""

    name = "A"
    unital = False

    def __init__(self, field: Field):
        self.field = field
        self._mul_cache = {}
        self._slice_cache = {}
        self._expand_cache = {}
        self._s_cache = {}
        self._sinv_cache = {}

    # -- basis rules (override) ---------------------------------------------
    def mul_basis(self, x, y) -> LinComb:
        raise PresentationError(f"{self.name}: no product rule for ({x!r}, {y!r})")

    def counit_basis(self, x):
        raise PresentationError(f"{self.name}: no counit rule for {x!r}")

    def antipode_basis(self, x) -> LinComb:
        raise PresentationError(f"{self.name}: no antipode rule for {x!r}")

    def antipode_inv_basis(self, x) -> LinComb:
        raise PresentationError(f"{self.name}: no inverse antipode rule for {x!r}")

    def coproduct_given_right(self, x, t) -> LinComb:
        raise PresentationError(f"{self.name}: no coproduct query for {x!r}")

    def coproduct_given_left(self, x, s) -> LinComb:
        raise PresentationError(f"{self.name}: no coproduct query for {x!r}")

    def left_partners(self, y):
        """Labels l with l·y possibly nonzero, or ``None`` if unbounded."""
        return None

    def right_partners(self, x):
        """Labels l with x·l possibly nonzero, or ``None`` if unbounded."""
        return None

    def full_delta_basis(self, x) -> LinComb | None:
        return None

    @property
    def has_full_delta(self) -> bool:
        return False

    def unit(self) -> LinComb | None:
        return None

    def local_unit(self, labels: Iterable, radius: int = 0) -> LinComb:
        u = self.unit()
        if u is None:
            raise PresentationError(f"{self.name}: no local units")
        return u

    def counit_support(self) -> list:
        """Basis labels with nonzero counit (needed to seed adjoint-action local units)."""
        return []

    def sample_labels(self, window: int) -> list:
        raise NotImplementedError

    def format_label(self, label) -> str:
        return repr(label)

    def render(self, x: LinComb) -> str:
        return x.render(self.format_label)

    def is_valid_label(self, label) -> bool:
        return True

    # -- linear extensions ----------------------------------------------------
    def _mul_b(self, x, y) -> LinComb:
        key = (x, y)
        r = self._mul_cache.get(key)
        if r is None:
            r = self.mul_basis(x, y)
            self._mul_cache[key] = r
        return r

    def mul(self, x: LinComb, y: LinComb) -> LinComb:
        acc = Accumulator()
        for k1, c1 in x.raw_items():
            for k2, c2 in y.raw_items():
                acc.add_lc(self._mul_b(k1, k2), c1 * c2)
        return acc.result()

    def counit(self, x: LinComb):
        total = self.field.zero
        for k, c in x.raw_items():
            e = self.counit_basis(k)
            if e:
                total = total + c * e
        return total

    def _s_b(self, x) -> LinComb:
        r = self._s_cache.get(x)
        if r is None:
            r = self._s_cache[x] = self.antipode_basis(x)
        return r

    def _sinv_b(self, x) -> LinComb:
        r = self._sinv_cache.get(x)
        if r is None:
            r = self._sinv_cache[x] = self.antipode_inv_basis(x)
        return r

    def antipode(self, x: LinComb) -> LinComb:
        acc = Accumulator()
        for k, c in x.raw_items():
            acc.add_lc(self._s_b(k), c)
        return acc.result()

    def antipode_inv(self, x: LinComb) -> LinComb:
        acc = Accumulator()
        for k, c in x.raw_items():
            acc.add_lc(self._sinv_b(k), c)
        return acc.result()

    def full_delta(self, x: LinComb) -> LinComb:
        if not self.has_full_delta:
            raise RegularityError(f"{self.name}: Δ does not land in A⊗A; use covered slices")
        acc = Accumulator()
        for k, c in x.raw_items():
            acc.add_lc(self.full_delta_basis(k), c)
        return acc.result()

    # -- partner sets of whole elements -------------------------------------
    def left_partners_of(self, y: LinComb):
        out = set()
        for k, _ in y.raw_items():
            p = self.left_partners(k)
            if p is None:
                return None
            out.update(p)
        return frozenset(out)

    def right_partners_of(self, x: LinComb):
        out = set()
        for k, _ in x.raw_items():
            p = self.right_partners(k)
            if p is None:
                return None
            out.update(p)
        return frozenset(out)

    # -- covered coproduct slices -------------------------------------------
    def delta_slice(self, variant: Variant, x: LinComb, cover: LinComb) -> LinComb:
        """The covered coproduct as a finite 2-fold combination.

        CAN1: Δ(x)(1⊗cover), CAN2: (x⊗1)Δ(cover), CAN3: Δ(x)(cover⊗1),
        CAN4: (1⊗x)Δ(cover).
        """
        acc = Accumulator()
        for k1, c1 in x.raw_items():
            for k2, c2 in cover.raw_items():
                acc.add_lc(self._slice_b(variant, k1, k2), c1 * c2)
        return acc.result()

    def _slice_b(self, variant, a, b) -> LinComb:
        key = (variant, a, b)
        r = self._slice_cache.get(key)
        if r is None:
            r = self._slice_cache[key] = self.delta_slice_basis(variant, a, b)
        return r

    def delta_slice_basis(self, variant: Variant, a, b) -> LinComb:
        acc = Accumulator()
        if variant is Variant.CAN1:
            # Δ(a)(1⊗b) = Σ_t (Σ_s c_{s,t} s) ⊗ t·b
            parts = self.left_partners(b)
            if parts is None:
                for (s, t), c in self._need_full(a, variant).raw_items():
                    acc.add_lc(_pair_left(s, self._mul_b(t, b)), c)
            else:
                for t in sorted_labels(parts):
                    tb = self._mul_b(t, b)
                    if tb:
                        acc.add_lc(_outer(self.coproduct_given_right(a, t), tb))
        elif variant is Variant.CAN2:
            # (a⊗1)Δ(b) = Σ_s a·s ⊗ (Σ_t c_{s,t} t)
            parts = self.right_partners(a)
            if parts is None:
                for (s, t), c in self._need_full(b, variant).raw_items():
                    acc.add_lc(_pair_right(self._mul_b(a, s), t), c)
            else:
                for s in sorted_labels(parts):
                    as_ = self._mul_b(a, s)
                    if as_:
                        acc.add_lc(_outer(as_, self.coproduct_given_left(b, s)))
        elif variant is Variant.CAN3:
            # Δ(a)(b⊗1) = Σ_s s·b ⊗ (Σ_t c_{s,t} t)
            parts = self.left_partners(b)
            if parts is None:
                for (s, t), c in self._need_full(a, variant).raw_items():
                    acc.add_lc(_pair_right(self._mul_b(s, b), t), c)
            else:
                for s in sorted_labels(parts):
                    sb = self._mul_b(s, b)
                    if sb:
                        acc.add_lc(_outer(sb, self.coproduct_given_left(a, s)))
        elif variant is Variant.CAN4:
            # (1⊗a)Δ(b) = Σ_t (Σ_s c_{s,t} s) ⊗ a·t
            parts = self.right_partners(a)
            if parts is None:
                for (s, t), c in self._need_full(b, variant).raw_items():
                    acc.add_lc(_pair_left(s, self._mul_b(a, t)), c)
            else:
                for t in sorted_labels(parts):
                    at = self._mul_b(a, t)
                    if at:
                        acc.add_lc(_outer(self.coproduct_given_right(b, t), at))
        else:
            raise ValueError(variant)
        return acc.result()

    def _need_full(self, x, variant) -> LinComb:
        if not self.has_full_delta:
            raise RegularityError(
                f"{self.name}: slice {variant.value} has an unbounded cover and no finite coproduct"
            )
        return self.full_delta_basis(x)

    # -- iterated coproducts --------------------------------------------------
    def expand(self, x: LinComb, n: int, filters: Sequence) -> LinComb:
        """Δ^{(n)}(x) projected leg-wise onto finite label sets.

        ``filters[j]`` is the set of labels that leg ``j`` may take (the labels
        its cover does not annihilate) or ``None``.  Without a finite coproduct
        at most one leg may be ``None``.  Labels of the result are n-tuples.
        """
        filters = tuple(None if f is None else frozenset(f) for f in filters)
        if len(filters) != n or n < 1:
            raise ValueError(f"need {n} filters, got {len(filters)}")
        free = [j for j, f in enumerate(filters) if f is None]
        if len(free) > 1 and not self.has_full_delta:
            raise UnderCoveredError(free, n)
        acc = Accumulator()
        for k, c in x.raw_items():
            acc.add_lc(self._expand_b(k, filters), c)
        return acc.result()

    def _expand_b(self, label, filters) -> LinComb:
        key = (label, filters)
        r = self._expand_cache.get(key)
        if r is not None:
            return r
        n = len(filters)
        if n == 1:
            f = filters[0]
            r = LinComb.basis((label,), self.field.one) if f is None or label in f else LinComb.zero()
        elif filters[-1] is not None:
            acc = Accumulator()
            for t in sorted_labels(filters[-1]):
                rest = self.coproduct_given_right(label, t)
                for k, c in rest.raw_items():
                    for tup, c2 in self._expand_b(k, filters[:-1]).raw_items():
                        acc.add(tup + (t,), c * c2)
            r = acc.result()
        elif filters[0] is not None:
            acc = Accumulator()
            for s in sorted_labels(filters[0]):
                rest = self.coproduct_given_left(label, s)
                for k, c in rest.raw_items():
                    for tup, c2 in self._expand_b(k, filters[1:]).raw_items():
                        acc.add((s,) + tup, c * c2)
            r = acc.result()
        else:
            acc = Accumulator()
            for (s, t), c in self.full_delta_basis(label).raw_items():
                for tup, c2 in self._expand_b(s, filters[:-1]).raw_items():
                    acc.add(tup + (t,), c * c2)
            r = acc.result()
        self._expand_cache[key] = r
        return r

    def cover_filter(self, cover: Cover | None):
        if cover is None:
            return None
        if cover.side == "right":
            return self.left_partners_of(cover.element)
        if cover.side == "left":
            return self.right_partners_of(cover.element)
        if cover.side == "filter":
            return frozenset(cover.element)
        raise ValueError(f"unknown cover side {cover.side!r}")

    def expand_legs(self, x: LinComb, n: int, covers: Sequence[Cover | None] | None = None) -> SweedlerExpansion:
        """Materialize x_(1) ⊗ ... ⊗ x_(n) with covers multiplied in.

        Legs with a ``left``/``right`` cover come back multiplied by it; legs
        with a ``filter`` cover are only restricted.  Raises
        :class:`UnderCoveredError` naming the free legs when the expansion
        would be infinite.
        """
        if not 2 <= n <= 6:
            raise ValueError(f"expand_legs supports 2..6 legs, got {n}")
        covers = tuple(covers) if covers is not None else (None,) * n
        if len(covers) != n:
            raise ValueError(f"need {n} covers, got {len(covers)}")
        filters = [self.cover_filter(c) for c in covers]
        raw = self.expand(x, n, filters)

        def leg_map(cv):
            if cv is None or cv.side == "filter":
                return None
            if cv.side == "right":
                return lambda l: self.mul(LinComb.basis(l, self.field.one), cv.element)
            return lambda l: self.mul(cv.element, LinComb.basis(l, self.field.one))

        legs = apply_legs(raw, *(leg_map(c) for c in covers))
        return SweedlerExpansion(legs, covers)

    # -- canonical maps ---------------------------------------------------------
    def t_map(self, which: str, z: LinComb) -> LinComb:
        """T1(a⊗b) = Δ(a)(1⊗b), T2(a⊗b) = (a⊗1)Δ(b)."""
        variant = {"T1": Variant.CAN1, "T2": Variant.CAN2}[which]
        acc = Accumulator()
        for (a, b), c in z.raw_items():
            acc.add_lc(self._slice_b(variant, a, b), c)
        return acc.result()

    def t_map_inv(self, which: str, z: LinComb) -> LinComb:
        """T1^{-1}(a⊗b) = a_(1) ⊗ S(a_(2))b = (ι⊗S)((1⊗S^{-1}b)Δ(a));
        T2^{-1}(a⊗b) = aS(b_(1)) ⊗ b_(2) = (S⊗ι)(Δ(b)(S^{-1}a⊗1))."""
        one = self.field.one
        acc = Accumulator()
        for (a, b), c in z.raw_items():
            if which == "T1":
                sl = self.delta_slice(Variant.CAN4, self._sinv_b(b), LinComb.basis(a, one))
                acc.add_lc(apply_legs(sl, None, self._s_b), c)
            elif which == "T2":
                sl = self.delta_slice(Variant.CAN3, LinComb.basis(b, one), self._sinv_b(a))
                acc.add_lc(apply_legs(sl, self._s_b, None), c)
            else:
                raise ValueError(which)
        return acc.result()

    def basis(self, label, coef=None) -> LinComb:
        return LinComb.basis(label, self.field.one if coef is None else self.field(coef))


def _outer(x: LinComb, y: LinComb) -> LinComb:
    acc = Accumulator()
    for k1, c1 in x.raw_items():
        for k2, c2 in y.raw_items():
            acc.add((k1, k2), c1 * c2)
    return acc.result()


def _pair_left(s, y: LinComb) -> LinComb:
    return LinComb._raw({(s, k): v for k, v in y.raw_items()})


def _pair_right(x: LinComb, t) -> LinComb:
    return LinComb._raw({(k, t): v for k, v in x.raw_items()})


def mul_legs(alg: MultiplierHopfAlgebra, z: LinComb) -> LinComb:
    """m: A⊗A -> A on a 2-fold combination."""
    acc = Accumulator()
    for (a, b), c in z.raw_items():
        acc.add_lc(alg._mul_b(a, b), c)
    return acc.result()


def left_mul_first_leg(alg, z: LinComb, y: LinComb) -> LinComb:
    """(y⊗1)·z for a 2-fold z."""
    acc = Accumulator()
    for (a, b), c in z.raw_items():
        for k, v in alg.mul(y, alg.basis(a)).raw_items():
            acc.add((k, b), c * v)
    return acc.result()


def right_mul_first_leg(alg, z: LinComb, y: LinComb) -> LinComb:
    """z·(y⊗1) for a 2-fold z."""
    acc = Accumulator()
    for (a, b), c in z.raw_items():
        for k, v in alg.mul(alg.basis(a), y).raw_items():
            acc.add((k, b), c * v)
    return acc.result()


# -- axiom sides ----------------------------------------------------------------
# Each returns a list of (identity name, lhs, rhs); all comparisons are exact.


def associativity_sides(alg, x, y, z):
    return [("associativity", alg.mul(alg.mul(x, y), z), alg.mul(x, alg.mul(y, z)))]


def coassociativity_sides(alg, a, b, c):
    """(a⊗1⊗1)(Δ⊗ι)(Δ(b)(1⊗c)) = (ι⊗Δ)((a⊗1)Δ(b))(1⊗1⊗c)."""
    lhs = Accumulator()
    for (x, y), k in alg.delta_slice(Variant.CAN1, b, c).raw_items():
        for (p, q), v in alg.delta_slice(Variant.CAN2, a, alg.basis(x)).raw_items():
            lhs.add((p, q, y), k * v)
    rhs = Accumulator()
    for (z, w), k in alg.delta_slice(Variant.CAN2, a, b).raw_items():
        for (p, q), v in alg.delta_slice(Variant.CAN1, alg.basis(w), c).raw_items():
            rhs.add((z, p, q), k * v)
    return [("covered coassociativity", lhs.result(), rhs.result())]


def counit_sides(alg, a, b):
    left = Accumulator()
    for (x, y), c in alg.delta_slice(Variant.CAN1, a, b).raw_items():
        e = alg.counit_basis(x)
        if e:
            left.add(y, c * e)
    right = Accumulator()
    for (x, y), c in alg.delta_slice(Variant.CAN2, a, b).raw_items():
        e = alg.counit_basis(y)
        if e:
            right.add(x, c * e)
    ab = alg.mul(a, b)
    return [("(ε⊗ι)(Δ(a)(1⊗b)) = ab", left.result(), ab), ("(ι⊗ε)((a⊗1)Δ(b)) = ab", right.result(), ab)]


def antipode_sides(alg, a, b):
    """m(S⊗ι)(Δ(a)(1⊗b)) = ε(a)b and m(ι⊗S)((a⊗1)Δ(b)) = ε(b)a."""
    s1 = apply_legs(alg.delta_slice(Variant.CAN1, a, b), alg._s_b, None)
    s2 = apply_legs(alg.delta_slice(Variant.CAN2, a, b), None, alg._s_b)
    return [
        ("m(S⊗ι)(Δ(a)(1⊗b)) = ε(a)b", mul_legs(alg, s1), b.scale(alg.counit(a))),
        ("m(ι⊗S)((a⊗1)Δ(b)) = ε(b)a", mul_legs(alg, s2), a.scale(alg.counit(b))),
    ]


def check_antipode_axiom(alg, a: LinComb, b: LinComb) -> bool:
    return all(l == r for _, l, r in antipode_sides(alg, a, b))


def delta_multiplicative_sides(alg, a, b, c):
    """Δ(ab)(1⊗c) = Δ(a)·(Δ(b)(1⊗c)), the right side via Δ(a)(x⊗y) = (Δ(a)(1⊗y))(x⊗1)."""
    lhs = alg.delta_slice(Variant.CAN1, alg.mul(a, b), c)
    rhs = Accumulator()
    for (x, y), k in alg.delta_slice(Variant.CAN1, b, c).raw_items():
        sl = alg.delta_slice(Variant.CAN1, a, alg.basis(y))
        rhs.add_lc(right_mul_first_leg(alg, sl, alg.basis(x)), k)
    return [("Δ(ab)(1⊗c) = Δ(a)Δ(b)(1⊗c)", lhs, rhs.result())]


def antipode_inverse_sides(alg, a):
    return [
        ("S(S^{-1}(a)) = a", alg.antipode(alg.antipode_inv(a)), a),
        ("S^{-1}(S(a)) = a", alg.antipode_inv(alg.antipode(a)), a),
    ]


def t_roundtrip_sides(alg, a, b):
    z = _outer(a, b)
    out = []
    for which in ("T1", "T2"):
        out.append((f"{which}^{{-1}}∘{which} = id", alg.t_map_inv(which, alg.t_map(which, z)), z))
        out.append((f"{which}∘{which}^{{-1}} = id", alg.t_map(which, alg.t_map_inv(which, z)), z))
    return out

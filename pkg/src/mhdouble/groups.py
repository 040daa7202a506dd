"""Groups, the function algebra K(G) with finite supports, and the group algebra K[G].

``K(G)`` is unital only for finite ``G``; for ``G = ℤ`` every computation goes
through covered slices and finite local units.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .errors import UnsupportedParameterError
from .lincomb import LinComb, sorted_labels
from .mha import MultiplierHopfAlgebra
from .scalars import Field


@dataclass(frozen=True)
class GroupSpec:
    """A group with canonical element forms.

    ``elements`` is the sorted element list for finite groups and ``None`` for
    ℤ.  ``window`` is the default sampling window for infinite groups.
    """

    kind: str
    n: int | None
    op: Callable = field(repr=False, compare=False)
    inv: Callable = field(repr=False, compare=False)
    e: object = None
    elements: tuple | None = field(default=None, repr=False, compare=False)
    fmt: Callable = field(default=str, repr=False, compare=False)
    window: int = 8

    @property
    def finite(self) -> bool:
        return self.elements is not None

    @property
    def order(self) -> int | None:
        return len(self.elements) if self.finite else None

    @property
    def descriptor(self) -> str:
        return self.kind if self.n is None else f"{self.kind}:{self.n}"

    def sample(self, window: int | None = None) -> list:
        """All elements (finite) or the integer window [-w, w] (ℤ)."""
        if self.finite:
            return list(self.elements)
        w = self.window if window is None else window
        return list(range(-w, w + 1))

    def ball(self, labels: Iterable, radius: int) -> list:
        """Elements within ``radius`` of the given ones (everything for finite G)."""
        labels = list(labels)
        if self.finite:
            return list(self.elements) if radius > 0 or not labels else sorted_labels(set(labels))
        out = set()
        for x in labels:
            out.update(range(x - radius, x + radius + 1))
        return sorted(out)

    def is_abelian(self) -> bool:
        if not self.finite:
            return True
        return all(self.op(x, y) == self.op(y, x) for x in self.elements for y in self.elements)

    def conj(self, g, x):
        """g x g^{-1}"""
        return self.op(self.op(g, x), self.inv(g))


def _cyclic(n: int) -> GroupSpec:
    return GroupSpec(
        "zn", n, lambda a, b: (a + b) % n, lambda a: (-a) % n, 0, tuple(range(n)),
        fmt=lambda a: f"g^{a}" if a else "e",
    )


def _symmetric(n: int) -> GroupSpec:
    # permutations as image tuples; (p∘q)(i) = p[q[i]]
    def op(p, q):
        return tuple(p[q[i]] for i in range(n))

    def inv(p):
        r = [0] * n
        for i, pi in enumerate(p):
            r[pi] = i
        return tuple(r)

    def fmt(p):
        return "(" + "".join(str(x + 1) for x in p) + ")"

    elems = tuple(sorted(itertools.permutations(range(n))))
    return GroupSpec("sym", n, op, inv, tuple(range(n)), elems, fmt=fmt)


def _dihedral(n: int) -> GroupSpec:
    # (r, f) = rot^r flip^f, flip rot = rot^{-1} flip
    def op(x, y):
        r1, f1 = x
        r2, f2 = y
        return ((r1 + (-r2 if f1 else r2)) % n, f1 ^ f2)

    def inv(x):
        r, f = x
        return (r, 1) if f else ((-r) % n, 0)

    def fmt(x):
        r, f = x
        return f"r{r}" + ("s" if f else "")

    elems = tuple((r, f) for f in (0, 1) for r in range(n))
    return GroupSpec("dihedral", n, op, inv, (0, 0), tuple(sorted(elems)), fmt=fmt)


def _integers(window: int = 8) -> GroupSpec:
    return GroupSpec(
        "z", None, lambda a, b: a + b, lambda a: -a, 0, None,
        fmt=lambda a: f"g^{a}" if a else "e", window=window,
    )


def make_group(kind: str, n: int | None = None) -> GroupSpec:
    """Build a group by kind: ``zn``/``cyclic``, ``sym``, ``dihedral`` or ``z``."""
    kind = kind.lower()
    if kind in ("z", "integers", "int"):
        return _integers()
    if n is None or n < 1:
        raise UnsupportedParameterError(f"group kind {kind!r} needs n >= 1")
    if kind in ("zn", "cyclic"):
        return _cyclic(n)
    if kind in ("sym", "symmetric"):
        if n > 5:
            raise UnsupportedParameterError("sym:n is limited to n <= 5")
        return _symmetric(n)
    if kind in ("dihedral", "dih"):
        if n < 2:
            raise UnsupportedParameterError("dihedral:n needs n >= 2")
        return _dihedral(n)
    raise UnsupportedParameterError(f"unknown group kind {kind!r}; use zn:<n>, sym:<n>, dihedral:<n> or z")


def parse_group(text: str) -> GroupSpec:
    """Parse ``zn:6``, ``sym:3``, ``dihedral:4`` or ``z``."""
    t = text.strip().lower()
    if ":" in t:
        kind, _, num = t.partition(":")
        try:
            n = int(num)
        except ValueError:
            raise UnsupportedParameterError(f"bad group order in {text!r}") from None
        return make_group(kind, n)
    return make_group(t)


class FunctionAlgebra(MultiplierHopfAlgebra):
    """K(G): basis δ_p, pointwise product, Δ(δ_p) = Σ_{st=p} δ_s ⊗ δ_t (covered)."""

    name = "K(G)"

    def __init__(self, group: GroupSpec, field: Field):
        super().__init__(field)
        self.group = group
        self.unital = group.finite
        self._one = field.one

    def mul_basis(self, x, y):
        return LinComb.basis(x, self._one) if x == y else LinComb.zero()

    def counit_basis(self, x):
        return self._one if x == self.group.e else self.field.zero

    def antipode_basis(self, x):
        return LinComb.basis(self.group.inv(x), self._one)

    antipode_inv_basis = antipode_basis

    def coproduct_given_right(self, x, t):
        return LinComb.basis(self.group.op(x, self.group.inv(t)), self._one)

    def coproduct_given_left(self, x, s):
        return LinComb.basis(self.group.op(self.group.inv(s), x), self._one)

    def left_partners(self, y):
        return frozenset((y,))

    right_partners = left_partners

    @property
    def has_full_delta(self):
        return self.group.finite

    def full_delta_basis(self, x):
        if not self.group.finite:
            return None
        g = self.group
        return LinComb({(s, g.op(g.inv(s), x)): self._one for s in g.elements})

    def unit(self):
        if not self.group.finite:
            return None
        return LinComb({p: self._one for p in self.group.elements})

    def local_unit(self, labels, radius=0):
        return LinComb({p: self._one for p in self.group.ball(labels, radius)})

    def counit_support(self):
        return [self.group.e]

    def sample_labels(self, window=None):
        return self.group.sample(window)

    def format_label(self, label):
        return f"δ[{self.group.fmt(label)}]"


class GroupAlgebra(MultiplierHopfAlgebra):
    """K[G]: grouplike basis, unital Hopf algebra."""

    name = "K[G]"
    unital = True

    def __init__(self, group: GroupSpec, field: Field):
        super().__init__(field)
        self.group = group
        self._one = field.one

    def mul_basis(self, x, y):
        return LinComb.basis(self.group.op(x, y), self._one)

    def counit_basis(self, x):
        return self._one

    def antipode_basis(self, x):
        return LinComb.basis(self.group.inv(x), self._one)

    antipode_inv_basis = antipode_basis

    def coproduct_given_right(self, x, t):
        return LinComb.basis(x, self._one) if t == x else LinComb.zero()

    coproduct_given_left = coproduct_given_right

    @property
    def has_full_delta(self):
        return True

    def full_delta_basis(self, x):
        return LinComb.basis((x, x), self._one)

    def unit(self):
        return LinComb.basis(self.group.e, self._one)

    def sample_labels(self, window=None):
        return self.group.sample(window)

    def format_label(self, label):
        return self.group.fmt(label)


def group_pair_basis(p, g):
    """⟨δ_p, g⟩ = [p = g]."""
    return 1 if p == g else 0


def canonical_pair(A: FunctionAlgebra, B: GroupAlgebra, a: LinComb, b: LinComb):
    """Bilinear extension of ⟨δ_p, g⟩ = [p = g]."""
    total = A.field.zero
    for p, c in a.raw_items():
        d = b.coeff(p)
        if d:
            total = total + c * d
    return total


def group_pairing(group: GroupSpec, field: Field):
    """The canonical pairing K(G) × K[G] -> K with closed-form actions."""
    from .pairing import ActionVariant, Pairing

    A = FunctionAlgebra(group, field)
    B = GroupAlgebra(group, field)
    one = field.one
    g = group

    def closed(variant, actor, target):
        if variant is ActionVariant.B_ON_A_LEFT:  # q ▸ δ_p = δ_{p q^{-1}}
            return LinComb.basis(g.op(target, g.inv(actor)), one)
        if variant is ActionVariant.A_ON_B_LEFT:  # δ_p ▸ q = [p = q] q
            return LinComb.basis(target, one) if actor == target else LinComb.zero()
        if variant is ActionVariant.B_ON_A_RIGHT:  # δ_p ◂ q = δ_{q^{-1} p}
            return LinComb.basis(g.op(g.inv(actor), target), one)
        if variant is ActionVariant.A_ON_B_RIGHT:  # q ◂ δ_p = [p = q] q
            return LinComb.basis(target, one) if actor == target else LinComb.zero()
        raise ValueError(variant)

    return Pairing(
        A, B,
        pair_basis=lambda p, q: one if p == q else field.zero,
        partners_of_a=lambda p: frozenset((p,)),
        partners_of_b=lambda q: frozenset((q,)),
        closed_form=closed,
        name=f"K({g.descriptor}) x K[{g.descriptor}]",
    )

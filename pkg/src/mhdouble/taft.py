"""An infinite-dimensional Taft-type pair.

``B`` is generated by a grouplike ``c`` and a skew-primitive ``X`` with
``cX = λXc``, ``X^m = 0``, ``Δ(X) = c^i ⊗ X + X ⊗ 1``; basis label ``(k, j)``
stands for ``c^k X^j``.

``A`` is its dual multiplier Hopf algebra on the basis ``ω_{p,l}`` (label
``(p, l)``) with ``ω_{p,q}ω_{k,l} = [p-k = il] [l+q choose q]_{λ^{-i}} ω_{k,l+q}``.
The pairing is ``⟨ω_{p,l}, c^k X^j⟩ = [p = k][l = j]``: with this product the
ω's are exactly the dual basis (see the oracle tests), so no extra
normalization is needed.  ``A`` is non-unital; the multipliers
``D = Σ λ^j ω_{j,0}`` and ``Y = Σ λ^s ω_{s,1}`` act through
:func:`multiplier_apply`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UnsupportedParameterError
from .lincomb import Accumulator, LinComb
from .mha import MultiplierHopfAlgebra
from .pairing import ActionVariant, Pairing
from .scalars import Field, QQ, find_taft_lambda, multiplicative_order, qbinomial


@dataclass(frozen=True)
class TaftParams:
    m: int
    i: int
    lam: object
    field: Field

    def __post_init__(self):
        if self.m < 1 or self.i < 1:
            raise UnsupportedParameterError(f"need m >= 1 and i >= 1, got m={self.m}, i={self.i}")
        lam = self.field(self.lam)
        object.__setattr__(self, "lam", lam)
        if not lam:
            raise UnsupportedParameterError("λ must be nonzero")
        order = multiplicative_order(lam**self.i, self.field)
        if order != self.m:
            raise UnsupportedParameterError(
                f"λ^i must have exact multiplicative order m={self.m} in {self.field.name}; "
                f"λ={lam}, i={self.i} gives order {order}"
            )

    @property
    def q(self):
        """The Gaussian-binomial parameter λ^{-i}."""
        return self.lam ** (-self.i)

    @classmethod
    def resolve(cls, m: int, i: int, field: Field = QQ, lam=None) -> "TaftParams":
        """Pick the smallest admissible λ when none is given."""
        if lam is None:
            lam = find_taft_lambda(m, i, field)
        return cls(m, i, lam, field)

    def describe(self) -> dict:
        return {"m": self.m, "i": self.i, "lambda": str(self.lam), "field": self.field.spec()}


class _PowerTable:
    def __init__(self, base):
        self.base = base
        self.cache = {}

    def __call__(self, e: int):
        v = self.cache.get(e)
        if v is None:
            v = self.cache[e] = self.base**e
        return v


class TaftB(MultiplierHopfAlgebra):
    name = "B"
    unital = True

    def __init__(self, params: TaftParams):
        super().__init__(params.field)
        self.params = params
        self.m, self.i = params.m, params.i
        self.lp = _PowerTable(params.lam)
        self.qb = {}
        self._one = params.field.one

    def _qbin(self, n, k):
        key = (n, k)
        v = self.qb.get(key)
        if v is None:
            v = self.qb[key] = qbinomial(n, k, self.params.q)
        return v

    def mul_basis(self, x, y):
        (k, l), (k2, l2) = x, y
        if l + l2 >= self.m:
            return LinComb.zero()
        # X^l c^{k2} = λ^{-l k2} c^{k2} X^l
        return LinComb.basis((k + k2, l + l2), self.lp(-l * k2))

    def counit_basis(self, x):
        return self._one if x[1] == 0 else self.field.zero

    def _sigma(self, k, j):
        # S(c^k X^j) = σ(k, j) c^{-ij-k} X^j
        return self.lp(self.i * j * (j - 1) // 2 + j * k) * (-1) ** j

    def antipode_basis(self, x):
        k, j = x
        return LinComb.basis((-self.i * j - k, j), self._sigma(k, j))

    def antipode_inv_basis(self, x):
        k, j = x
        k0 = -self.i * j - k
        return LinComb.basis((k0, j), self._one / self._sigma(k0, j))

    @property
    def has_full_delta(self):
        return True

    def full_delta_basis(self, x):
        k, j = x
        return LinComb._raw({
            ((k + self.i * r, j - r), (k, r)): self._qbin(j, r) for r in range(j + 1)
        })

    def coproduct_given_right(self, x, t):
        k, j = x
        k2, r = t
        if k2 != k or not 0 <= r <= j:
            return LinComb.zero()
        return LinComb.basis((k + self.i * r, j - r), self._qbin(j, r))

    def coproduct_given_left(self, x, s):
        k, j = x
        k1, j1 = s
        r = j - j1
        if not 0 <= r <= j or k1 != k + self.i * r:
            return LinComb.zero()
        return LinComb.basis((k, r), self._qbin(j, r))

    def unit(self):
        return LinComb.basis((0, 0), self._one)

    def sample_labels(self, window=8):
        return [(k, j) for k in range(-window, window + 1) for j in range(self.m)]

    def is_valid_label(self, label):
        return 0 <= label[1] < self.m

    def format_label(self, label):
        k, j = label
        parts = []
        if k:
            parts.append(f"c^{k}")
        if j:
            parts.append("X" if j == 1 else f"X^{j}")
        return "".join(parts) or "1"


class TaftA(MultiplierHopfAlgebra):
    name = "A"
    unital = False

    def __init__(self, params: TaftParams):
        super().__init__(params.field)
        self.params = params
        self.m, self.i = params.m, params.i
        self.lp = _PowerTable(params.lam)
        self.qb = {}
        self._one = params.field.one

    def _qbin(self, n, k):
        key = (n, k)
        v = self.qb.get(key)
        if v is None:
            v = self.qb[key] = qbinomial(n, k, self.params.q)
        return v

    def mul_basis(self, x, y):
        (p, q), (k, l) = x, y
        if p - k != self.i * l or l + q >= self.m:
            return LinComb.zero()
        return LinComb.basis((k, l + q), self._qbin(l + q, q))

    def counit_basis(self, x):
        return self._one if x == (0, 0) else self.field.zero

    def _sigma(self, k, j):
        return self.lp(self.i * j * (j - 1) // 2 + j * k) * (-1) ** j

    def antipode_basis(self, x):
        # dual to the antipode of B
        p, l = x
        k = -self.i * l - p
        return LinComb.basis((k, l), self._sigma(k, l))

    def antipode_inv_basis(self, x):
        p, l = x
        return LinComb.basis((-self.i * l - p, l), self._one / self._sigma(p, l))

    def coproduct_given_right(self, x, t):
        # Δ(ω_{a,s}) = Σ_{k+k'=a, j+j'=s} λ^{-j k'} ω_{k,j} ⊗ ω_{k',j'}
        a, s = x
        k2, j2 = t
        if not 0 <= j2 <= s:
            return LinComb.zero()
        return LinComb.basis((a - k2, s - j2), self.lp(-(s - j2) * k2))

    def coproduct_given_left(self, x, s_):
        a, s = x
        k1, j1 = s_
        if not 0 <= j1 <= s:
            return LinComb.zero()
        return LinComb.basis((a - k1, s - j1), self.lp(-j1 * (a - k1)))

    def left_partners(self, y):
        k, l = y
        return frozenset((k + self.i * l, q) for q in range(self.m - l))

    def right_partners(self, x):
        p, q = x
        return frozenset((p - self.i * l, l) for l in range(self.m - q))

    def local_unit(self, labels, radius=0):
        ps = set()
        for k, l in labels:
            for base in (k, k + self.i * l):
                ps.update(range(base - radius, base + radius + 1))
        return LinComb({(p, 0): self._one for p in ps})

    def counit_support(self):
        return [(0, 0)]

    def sample_labels(self, window=8):
        return [(p, l) for p in range(-window, window + 1) for l in range(self.m)]

    def is_valid_label(self, label):
        return 0 <= label[1] < self.m

    def format_label(self, label):
        return f"ω[{label[0]},{label[1]}]"


# -- multipliers D, D^{-1}, Y of A ------------------------------------------------

MULTIPLIERS = ("D", "Dinv", "Y")


def multiplier_apply(A: TaftA, rule: str, side: str, x: LinComb) -> LinComb:
    """Multiply ``x`` by one of the multipliers D, D^{-1}, Y on the given side.

    D·ω_{k,l} = λ^{k+il} ω_{k,l}, ω_{k,l}·D = λ^k ω_{k,l};
    Y·ω_{k,l} = λ^{k+il} [l+1, 1] ω_{k,l+1}, ω_{k,l}·Y = λ^{k-i} [l+1, l] ω_{k-i,l+1}.
    """
    if rule not in MULTIPLIERS or side not in ("left", "right"):
        raise ValueError(f"unknown multiplier application {rule!r}/{side!r}")
    i, m = A.i, A.m
    acc = Accumulator()
    for (k, l), c in x.raw_items():
        if rule in ("D", "Dinv"):
            e = k + i * l if side == "left" else k
            acc.add((k, l), c * A.lp(e if rule == "D" else -e))
        elif l + 1 < m:
            if side == "left":
                acc.add((k, l + 1), c * A.lp(k + i * l) * A._qbin(l + 1, 1))
            else:
                acc.add((k - i, l + 1), c * A.lp(k - i) * A._qbin(l + 1, l))
    return acc.result()


def taft_pair_basis(x, y):
    return 1 if x == y else 0


def taft_pairing(params: TaftParams) -> Pairing:
    A, B = TaftA(params), TaftB(params)
    one, zero = params.field.one, params.field.zero
    i = params.i

    def closed(variant, actor, target):
        if variant is ActionVariant.B_ON_A_LEFT:
            (k, j), (a, s) = actor, target
            if j > s:
                return LinComb.zero()
            return LinComb.basis((a - k, s - j), A.lp(-(s - j) * k))
        if variant is ActionVariant.B_ON_A_RIGHT:
            (k, j), (a, s) = actor, target
            if j > s:
                return LinComb.zero()
            return LinComb.basis((a - k, s - j), A.lp(-j * (a - k)))
        if variant is ActionVariant.A_ON_B_LEFT:
            (p, l), (k, j) = actor, target
            if p != k or l > j:
                return LinComb.zero()
            return LinComb.basis((k + i * l, j - l), B._qbin(j, l))
        if variant is ActionVariant.A_ON_B_RIGHT:
            (p, l), (k, j) = actor, target
            r = j - l
            if r < 0 or p != k + i * r:
                return LinComb.zero()
            return LinComb.basis((k, r), B._qbin(j, r))
        raise ValueError(variant)

    return Pairing(
        A, B,
        pair_basis=lambda x, y: one if x == y else zero,
        partners_of_a=lambda x: frozenset((x,)),
        partners_of_b=lambda y: frozenset((y,)),
        closed_form=closed,
        name=f"Taft(m={params.m}, i={params.i}, λ={params.lam}, {params.field.name})",
    )


def omega_times_y_power(A: TaftA, p: int, l: int) -> LinComb:
    """ω_{p,0}·Y^l through repeated right multiplier application."""
    x = LinComb.basis((p, 0), A.field.one)
    for _ in range(l):
        x = multiplier_apply(A, "Y", "right", x)
    return x

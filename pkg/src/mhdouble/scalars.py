"""Exact coefficient fields: the rationals and prime fields F_q.

Rationals are :class:`fractions.Fraction` values (arbitrary precision, lowest
terms, positive denominator).  Prime-field values are :class:`ModInt`, a small
immutable wrapper holding the canonical representative in ``[0, q)``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import UnsupportedParameterError


class ModInt:
    """Element of the prime field F_q."""

    __slots__ = ("v", "q")

    def __init__(self, v: int, q: int):
        self.v = v % q
        self.q = q

    def _coerce(self, other):
        if isinstance(other, ModInt):
            if other.q != self.q:
                raise ValueError(f"mixed prime fields F_{self.q} and F_{other.q}")
            return other.v
        if isinstance(other, int):
            return other % self.q
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.q) % self.q
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModInt(self.v + o, self.q)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModInt(self.v - o, self.q)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModInt(o - self.v, self.q)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModInt(self.v * o, self.q)

    __rmul__ = __mul__

    def __neg__(self):
        return ModInt(-self.v, self.q)

    def inverse(self) -> "ModInt":
        if self.v == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.q}")
        return ModInt(pow(self.v, -1, self.q), self.q)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * ModInt(o, self.q).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModInt(o, self.q) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return ModInt(pow(self.inverse().v, -n, self.q), self.q)
        return ModInt(pow(self.v, n, self.q), self.q)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return False
        return self.v == o

    def __hash__(self):
        return hash((self.v, self.q))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"ModInt({self.v}, {self.q})"

    def __str__(self):
        return str(self.v)


class Field:
    """Descriptor of the coefficient field chosen for a session."""

    name: str = "field"
    characteristic: int = 0

    def __call__(self, x):
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def spec(self) -> str:
        """CLI-style descriptor (``rational`` or ``fq:<q>``)."""
        raise NotImplementedError

    def elements(self):
        raise NotImplementedError(f"{self.name} is infinite")

    def __eq__(self, other):
        return isinstance(other, Field) and self.spec() == other.spec()

    def __hash__(self):
        return hash(self.spec())

    def __repr__(self):
        return self.name


class RationalField(Field):
    name = "Q"
    characteristic = 0

    def __call__(self, x):
        if isinstance(x, ModInt):
            raise TypeError("cannot coerce a prime-field value into Q")
        return Fraction(x)

    def spec(self):
        return "rational"


class PrimeField(Field):
    def __init__(self, q: int):
        if q < 2 or any(q % d == 0 for d in range(2, int(q**0.5) + 1)):
            raise UnsupportedParameterError(f"F_q needs q prime, got q={q}")
        self.q = q
        self.characteristic = q
        self.name = f"F_{q}"

    def __call__(self, x):
        if isinstance(x, ModInt):
            if x.q != self.q:
                raise ValueError(f"value from F_{x.q} used in F_{self.q}")
            return x
        if isinstance(x, Fraction):
            return ModInt(x.numerator, self.q) / x.denominator
        return ModInt(int(x), self.q)

    def spec(self):
        return f"fq:{self.q}"

    def elements(self):
        return [ModInt(v, self.q) for v in range(self.q)]


QQ = RationalField()


def parse_field(text: str) -> Field:
    """Parse ``rational`` / ``q`` / ``fq:<q>``."""
    t = text.strip().lower()
    if t in ("rational", "rationals", "q", "qq"):
        return QQ
    if t.startswith("fq:") or t.startswith("f:") or t.startswith("gf:"):
        try:
            q = int(t.split(":", 1)[1])
        except ValueError:
            raise UnsupportedParameterError(f"bad prime in field spec {text!r}") from None
        return PrimeField(q)
    raise UnsupportedParameterError(f"unknown field {text!r}; use 'rational' or 'fq:<prime>'")


def multiplicative_order(x, field: Field, bound: int | None = None) -> int | None:
    """Smallest n >= 1 with x^n = 1, or None if there is none (up to ``bound``)."""
    x = field(x)
    if not x:
        return None
    if isinstance(field, PrimeField):
        bound = field.q - 1
    elif bound is None:
        # over Q only +1 and -1 have finite order
        bound = 2
    y = x
    for n in range(1, bound + 1):
        if y == 1:
            return n
        y = y * x
    return None


def find_root_of_unity(m: int, field: Field):
    """An element of exact multiplicative order ``m``.

    Over F_q the smallest such representative is returned; over Q only m = 1, 2
    are possible.
    """
    if m < 1:
        raise UnsupportedParameterError(f"root-of-unity order must be positive, got {m}")
    if isinstance(field, RationalField):
        if m == 1:
            return field(1)
        if m == 2:
            return field(-1)
        raise UnsupportedParameterError(
            f"Q has no element of order {m}; use a prime field F_q with m | q-1"
        )
    q = field.q
    if (q - 1) % m:
        raise UnsupportedParameterError(
            f"F_{q} has no element of order {m}: need m | q-1 (q-1 = {q - 1})"
        )
    for v in range(1, q):
        if multiplicative_order(v, field) == m:
            return field(v)
    raise AssertionError("unreachable: F_q^* is cyclic")


def find_taft_lambda(m: int, i: int, field: Field):
    """Smallest lambda with lambda^i of exact order m."""
    if i < 1:
        raise UnsupportedParameterError(f"i must be a positive integer, got {i}")
    candidates = [field(1), field(-1)] if isinstance(field, RationalField) else field.elements()[1:]
    for lam in candidates:
        if multiplicative_order(lam**i, field) == m:
            return lam
    raise UnsupportedParameterError(
        f"no lambda in {field.name} with lambda^{i} of order {m}"
        + ("; over F_q this needs m | q-1" if isinstance(field, PrimeField) else "; Q only allows m in {1, 2}")
    )


def qbinomial(n: int, k: int, q):
    """Gaussian binomial [n choose k]_q by the q-Pascal recurrence.

    [n, k]_q = [n-1, k-1]_q + q^k [n-1, k]_q.  Out-of-range k gives 0.
    """
    if not q:
        raise ValueError("qbinomial needs q != 0")
    if n < 0:
        raise ValueError(f"qbinomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return q * 0
    return _qbinomial(n, k, q)


@lru_cache(maxsize=None)
def _qbinomial(n, k, q):
    if k == 0 or k == n:
        return q * 0 + 1
    return _qbinomial(n - 1, k - 1, q) + q**k * _qbinomial(n - 1, k, q)

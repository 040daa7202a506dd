"""Finite formal linear combinations over hashable basis labels.

A :class:`LinComb` is the representation of every algebra element in the
package.  Labels only need equality and hashing; infinite label sets are fine
since only finite supports are ever stored.  Tensor labels are plain tuples.
"""

from __future__ import annotations

from typing import Callable, Hashable, Iterable, Iterator, Mapping


def sorted_labels(labels: Iterable[Hashable]) -> list:
    labels = list(labels)
    try:
        return sorted(labels)
    except TypeError:
        return sorted(labels, key=repr)


class LinComb:
    """Immutable finite map label -> nonzero scalar.

    Zero is the empty combination.  Iteration is in sorted label order so
    renderings and reports are reproducible.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | Iterable | None = None):
        d = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for label, c in items:
                if label in d:
                    d[label] = d[label] + c
                else:
                    d[label] = c
        self._terms = {k: v for k, v in d.items() if v}
        self._hash = None

    @classmethod
    def _raw(cls, d: dict) -> "LinComb":
        # d must already be normalized (no zero coefficients)
        obj = cls.__new__(cls)
        obj._terms = d
        obj._hash = None
        return obj

    @classmethod
    def basis(cls, label, coef=1) -> "LinComb":
        return cls._raw({label: coef}) if coef else cls._raw({})

    @classmethod
    def zero(cls) -> "LinComb":
        return cls._raw({})

    # -- access -----------------------------------------------------------
    def items(self):
        for k in sorted_labels(self._terms):
            yield k, self._terms[k]

    def raw_items(self):
        """Unsorted term iteration for hot loops whose result is order-free."""
        return self._terms.items()

    def support(self) -> list:
        return sorted_labels(self._terms)

    def coeff(self, label):
        return self._terms.get(label, 0)

    def __iter__(self) -> Iterator:
        return iter(self.support())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __contains__(self, label):
        return label in self._terms

    # -- vector space -----------------------------------------------------
    def __add__(self, other: "LinComb") -> "LinComb":
        if not isinstance(other, LinComb):
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        d = dict(self._terms)
        for k, v in other._terms.items():
            w = d.get(k)
            if w is None:
                d[k] = v
            else:
                w = w + v
                if w:
                    d[k] = w
                else:
                    del d[k]
        return LinComb._raw(d)

    def __neg__(self) -> "LinComb":
        return LinComb._raw({k: -v for k, v in self._terms.items()})

    def __sub__(self, other: "LinComb") -> "LinComb":
        if not isinstance(other, LinComb):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "LinComb":
        if not c:
            return LinComb._raw({})
        return LinComb._raw({k: v * c for k, v in self._terms.items() if v * c})

    def __mul__(self, c):
        if isinstance(c, LinComb):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, LinComb):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset((k, v) for k, v in self._terms.items()))
        return self._hash

    def restrict(self, labels) -> "LinComb":
        """Projection onto the given label set (``None`` keeps everything)."""
        if labels is None:
            return self
        return LinComb._raw({k: v for k, v in self._terms.items() if k in labels})

    def map_labels(self, f: Callable) -> "LinComb":
        """Relabel term-wise; colliding labels are summed."""
        return LinComb((f(k), v) for k, v in self._terms.items())

    # -- rendering --------------------------------------------------------
    def render(self, fmt: Callable = repr) -> str:
        if not self._terms:
            return "0"
        parts = []
        for k, v in self.items():
            parts.append(f"{v}*{fmt(k)}")
        return " + ".join(parts)

    def __repr__(self):
        return f"LinComb({self.render()})"


def lc_add(x: LinComb, y: LinComb) -> LinComb:
    return x + y


class Accumulator:
    """Mutable builder used inside hot loops; call :meth:`result` once."""

    __slots__ = ("d",)

    def __init__(self):
        self.d = {}

    def add(self, label, c):
        if not c:
            return
        d = self.d
        w = d.get(label)
        d[label] = c if w is None else w + c

    def add_lc(self, x: LinComb, c=None, relabel: Callable | None = None):
        for k, v in x._terms.items():
            if relabel is not None:
                k = relabel(k)
            self.add(k, v if c is None else v * c)

    def result(self) -> LinComb:
        return LinComb._raw({k: v for k, v in self.d.items() if v})


def linear_extend(f: Callable, x: LinComb) -> LinComb:
    """Apply a basis-level rule ``label -> LinComb`` linearly."""
    acc = Accumulator()
    for k, c in x._terms.items():
        acc.add_lc(f(k), c)
    return acc.result()


def lc_bilinear_extend(f: Callable, x: LinComb, y: LinComb) -> LinComb:
    """sum_{l1, l2} x[l1] y[l2] f(l1, l2)."""
    acc = Accumulator()
    for k1, c1 in x._terms.items():
        for k2, c2 in y._terms.items():
            acc.add_lc(f(k1, k2), c1 * c2)
    return acc.result()


def scalar_bilinear(f: Callable, x: LinComb, y: LinComb, zero=0):
    """sum_{l1, l2} x[l1] y[l2] f(l1, l2) for a scalar-valued basis rule."""
    total = zero
    for k1, c1 in x._terms.items():
        for k2, c2 in y._terms.items():
            v = f(k1, k2)
            if v:
                total = total + c1 * c2 * v
    return total


def tensor(*xs: LinComb) -> LinComb:
    """Tensor product; labels become tuples (one component per factor)."""
    out = {(): 1}
    for x in xs:
        nxt = {}
        for k, v in out.items():
            for l, c in x._terms.items():
                nxt[k + (l,)] = v * c
        out = nxt
    return LinComb(out)


def apply_legs(z: LinComb, *maps: Callable | None) -> LinComb:
    """(f1 ⊗ ... ⊗ fn)(z) for an n-fold tensor; ``None`` is the identity."""
    acc = Accumulator()
    for k, c in z._terms.items():
        parts = tensor(*(LinComb.basis(l) if f is None else f(l) for l, f in zip(k, maps)))
        acc.add_lc(parts, c)
    return acc.result()


def flip(z: LinComb) -> LinComb:
    return LinComb._raw({(k[1], k[0]): v for k, v in z._terms.items()})

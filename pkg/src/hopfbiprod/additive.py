"""Additive categories with finite biproducts.

Every concrete category in this package subclasses :class:`AdditiveCategory`
and supplies the primitive operations on raw payloads.  This module adds the
checks (composability, parallelism, category membership) and the biproduct
calculus built on top of those primitives: direct sums of morphisms, n-ary
biproducts and finite sums of parallel maps.

Biproducts always place the left summand in the leading coordinates, and an
n-ary biproduct ``A1 + ... + An`` is the right-nested binary one
``A1 + (A2 + (... + An))``.  Equality of morphisms is exact.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from functools import reduce
from typing import Any, Iterable, Sequence

import numpy as np

from .errors import CategoryMismatch, DomainMismatch, NegationUnsupported, ShapeMismatch


@dataclass(frozen=True)
class Obj:
    """An object of the category named ``cat``; ``data`` is category specific."""

    cat: str
    data: Any

    def __repr__(self):
        return f"Obj({self.cat}: {self.data!r})"


def _payload_equal(x, y) -> bool:
    if isinstance(x, np.ndarray) or isinstance(y, np.ndarray):
        return np.array_equal(x, y)
    if isinstance(x, tuple) and isinstance(y, tuple):
        return len(x) == len(y) and all(_payload_equal(a, b) for a, b in zip(x, y))
    return x == y


class Morphism:
    """An arrow ``dom -> cod`` carrying a canonical (already reduced) payload.

    Payloads are treated as immutable; numpy payloads are flagged read-only.
    """

    __slots__ = ("dom", "cod", "data")

    def __init__(self, dom: Obj, cod: Obj, data):
        if isinstance(data, np.ndarray):
            data.setflags(write=False)
        self.dom = dom
        self.cod = cod
        self.data = data

    def __eq__(self, other):
        if not isinstance(other, Morphism):
            return NotImplemented
        return (
            self.dom == other.dom
            and self.cod == other.cod
            and _payload_equal(self.data, other.data)
        )

    def __hash__(self):
        return hash((self.dom, self.cod))

    def __repr__(self):
        data = self.data.tolist() if isinstance(self.data, np.ndarray) else self.data
        return f"Morphism({self.dom!r} -> {self.cod!r}, {data!r})"


@dataclass(frozen=True)
class Biproduct:
    """``total = left + right`` with its injections and projections."""

    left: Obj
    right: Obj
    total: Obj
    inj1: Morphism
    inj2: Morphism
    proj1: Morphism
    proj2: Morphism


@dataclass(frozen=True)
class NaryBiproduct:
    """Right-nested biproduct of ``summands`` with 1-based flattened accessors."""

    summands: tuple
    total: Obj
    injections: tuple
    projections: tuple

    def inj(self, k: int) -> Morphism:
        return self.injections[k - 1]

    def proj(self, k: int) -> Morphism:
        return self.projections[k - 1]


class AdditiveCategory(ABC):
    """A category with finite biproducts and commutative-monoid hom-sets.

    Subclasses implement the underscore primitives on payloads; the public
    methods validate their arguments and wrap results in :class:`Morphism`.
    """

    name: str = "abstract"
    has_negatives: bool = False

    # -- primitives ---------------------------------------------------------

    @abstractmethod
    def validate_object(self, data) -> Any:
        """Return the canonical payload for an object, raising on bad input."""

    @abstractmethod
    def _compose(self, g: Morphism, f: Morphism):
        ...

    @abstractmethod
    def _add(self, f: Morphism, g: Morphism):
        ...

    @abstractmethod
    def _zero(self, A: Obj, B: Obj):
        ...

    @abstractmethod
    def _identity(self, A: Obj):
        ...

    def _neg(self, f: Morphism):
        raise NegationUnsupported(f"{self.name} has no negatives")

    @abstractmethod
    def _biproduct(self, A: Obj, B: Obj) -> Biproduct:
        ...

    @abstractmethod
    def zero_object(self) -> Obj:
        ...

    @abstractmethod
    def sample_objects(self, plan) -> list:
        """Deterministic list of objects covered by a sample plan."""

    @abstractmethod
    def random_morphism(self, A: Obj, B: Obj, rng: np.random.Generator) -> Morphism:
        ...

    @abstractmethod
    def object_to_json(self, A: Obj):
        ...

    @abstractmethod
    def object_from_json(self, doc) -> Obj:
        ...

    @abstractmethod
    def morphism_to_json(self, f: Morphism) -> dict:
        ...

    @abstractmethod
    def morphism_from_json(self, doc) -> Morphism:
        ...

    # -- checked public surface ---------------------------------------------

    def obj(self, data) -> Obj:
        return Obj(self.name, self.validate_object(data))

    def _own(self, A: Obj) -> None:
        if not isinstance(A, Obj) or A.cat != self.name:
            raise CategoryMismatch(f"{A!r} is not an object of {self.name}")

    def compose(self, *fs: Morphism) -> Morphism:
        """Right-to-left composite: ``compose(h, g, f) = h . g . f``."""
        if not fs:
            raise ValueError("compose needs at least one morphism")
        for f in fs:
            self._own(f.dom)
        return reduce(self._compose2, fs)

    def _compose2(self, g: Morphism, f: Morphism) -> Morphism:
        if f.cod != g.dom:
            raise DomainMismatch(f"cannot compose {g.dom!r}->{g.cod!r} after {f.dom!r}->{f.cod!r}")
        return Morphism(f.dom, g.cod, self._compose(g, f))

    def add(self, f: Morphism, g: Morphism) -> Morphism:
        self._own(f.dom)
        self._own(g.dom)
        if f.dom != g.dom or f.cod != g.cod:
            raise ShapeMismatch(f"cannot add non-parallel morphisms {f!r} and {g!r}")
        return Morphism(f.dom, f.cod, self._add(f, g))

    def sum(self, fs: Iterable[Morphism], dom: Obj | None = None, cod: Obj | None = None) -> Morphism:
        fs = list(fs)
        if not fs:
            if dom is None or cod is None:
                raise ValueError("empty sum needs explicit dom and cod")
            return self.zero(dom, cod)
        return reduce(self.add, fs)

    def neg(self, f: Morphism) -> Morphism:
        self._own(f.dom)
        if not self.has_negatives:
            raise NegationUnsupported(f"{self.name} has no negatives")
        return Morphism(f.dom, f.cod, self._neg(f))

    def sub(self, f: Morphism, g: Morphism) -> Morphism:
        return self.add(f, self.neg(g))

    def zero(self, A: Obj, B: Obj) -> Morphism:
        self._own(A)
        self._own(B)
        return Morphism(A, B, self._zero(A, B))

    def identity(self, A: Obj) -> Morphism:
        self._own(A)
        return Morphism(A, A, self._identity(A))

    def eq(self, f: Morphism, g: Morphism) -> bool:
        return f == g

    def is_zero(self, f: Morphism) -> bool:
        return f == self.zero(f.dom, f.cod)

    def biproduct(self, A: Obj, B: Obj) -> Biproduct:
        self._own(A)
        self._own(B)
        return self._biproduct(A, B)

    def oplus(self, f: Morphism, g: Morphism) -> Morphism:
        """``f + g : dom f + dom g -> cod f + cod g`` (block diagonal)."""
        src = self.biproduct(f.dom, g.dom)
        tgt = self.biproduct(f.cod, g.cod)
        return self.add(
            self.compose(tgt.inj1, f, src.proj1),
            self.compose(tgt.inj2, g, src.proj2),
        )

    def biproduct_n(self, objs: Sequence[Obj]) -> NaryBiproduct:
        objs = tuple(objs)
        if not objs:
            Z = self.zero_object()
            return NaryBiproduct((), Z, (), ())
        if len(objs) == 1:
            one = self.identity(objs[0])
            return NaryBiproduct(objs, objs[0], (one,), (one,))
        rest = self.biproduct_n(objs[1:])
        top = self.biproduct(objs[0], rest.total)
        injs = (top.inj1,) + tuple(self.compose(top.inj2, i) for i in rest.injections)
        projs = (top.proj1,) + tuple(self.compose(p, top.proj2) for p in rest.projections)
        return NaryBiproduct(objs, top.total, injs, projs)

    def __repr__(self):
        return f"<{type(self).__name__} {self.name}>"

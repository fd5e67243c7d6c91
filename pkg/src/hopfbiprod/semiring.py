"""Commutative semirings with integer-coded elements.

Elements are stored as numpy integers.  The named instances are quotients of
integer arithmetic: ``add`` and ``mul`` are ordinary integer operations
followed by ``normalize`` (reduction mod ``n``, or ``x > 0`` for the Boolean
semiring), which lets matrix products run through ``numpy.matmul``.
Semirings without a ``normalize`` hook fall back to elementwise ``add``/``mul``
callables.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import reduce
from typing import Callable, Optional

import numpy as np

Array = np.ndarray


@dataclass(frozen=True, eq=False)
class Semiring:
    name: str
    add: Callable[[Array, Array], Array]
    mul: Callable[[Array, Array], Array]
    zero: int = 0
    one: int = 1
    neg: Optional[Callable[[Array], Array]] = None
    normalize: Optional[Callable[[Array], Array]] = None
    elements: Optional[tuple] = None  # full carrier when finite
    samples: tuple = (0, 1, 2, 3)
    validate: bool = field(default=True, repr=False)

    def __post_init__(self):
        if self.validate:
            check_semiring_axioms(self)

    @property
    def is_ring(self) -> bool:
        return self.neg is not None

    @property
    def is_finite(self) -> bool:
        return self.elements is not None

    def reduce(self, a) -> Array:
        a = np.asarray(a, dtype=np.int64)
        return self.normalize(a) if self.normalize is not None else a

    def matmul(self, a: Array, b: Array) -> Array:
        """Semiring matrix product, batched over leading axes."""
        if self.normalize is not None:
            return self.normalize(np.matmul(a, b))
        a = np.asarray(a)
        b = np.asarray(b)
        k = a.shape[-1]
        out_shape = np.broadcast_shapes(a.shape[:-2], b.shape[:-2]) + (a.shape[-2], b.shape[-1])
        if k == 0:
            return np.full(out_shape, self.zero, dtype=np.int64)
        terms = [self.mul(a[..., :, i : i + 1], b[..., i : i + 1, :]) for i in range(k)]
        return np.broadcast_to(reduce(self.add, terms), out_shape).astype(np.int64)

    def bounded_elements(self, bound: int) -> tuple:
        """Elements enumerated by bounded search, smallest first."""
        if self.elements is not None:
            return tuple(sorted(self.elements))
        lo = -bound if self.is_ring else 0
        return tuple(range(lo, bound + 1))

    def __repr__(self):
        return f"Semiring({self.name})"


def check_semiring_axioms(S: Semiring) -> None:
    """Check the commutative semiring axioms on all triples of ``S.samples``."""
    xs = np.array(S.samples, dtype=np.int64)
    if S.normalize is not None:
        xs = S.normalize(xs)
    a, b, c = (arr.ravel() for arr in np.meshgrid(xs, xs, xs, indexing="ij"))
    zero = np.full_like(a, S.zero)
    one = np.full_like(a, S.one)
    add, mul = S.add, S.mul
    laws = {
        "additive associativity": (add(add(a, b), c), add(a, add(b, c))),
        "additive commutativity": (add(a, b), add(b, a)),
        "additive unit": (add(a, zero), a),
        "multiplicative associativity": (mul(mul(a, b), c), mul(a, mul(b, c))),
        "multiplicative commutativity": (mul(a, b), mul(b, a)),
        "multiplicative unit": (mul(a, one), a),
        "distributivity": (mul(a, add(b, c)), add(mul(a, b), mul(a, c))),
        "zero annihilates": (mul(a, zero), zero),
    }
    if S.neg is not None:
        laws["additive inverse"] = (add(a, S.neg(a)), zero)
    for law, (lhs, rhs) in laws.items():
        if not np.array_equal(lhs, rhs):
            raise ValueError(f"{S.name} violates {law} on samples")


def _quotient(name, normalize, *, neg=None, elements=None, samples=(0, 1, 2, 3)) -> Semiring:
    return Semiring(
        name=name,
        add=lambda x, y: normalize(np.add(x, y)),
        mul=lambda x, y: normalize(np.multiply(x, y)),
        neg=None if neg is None else (lambda x: normalize(neg(x))),
        normalize=normalize,
        elements=elements,
        samples=samples,
    )


def _identity(x):
    return np.asarray(x, dtype=np.int64)


NAT = _quotient("NAT", _identity, samples=(0, 1, 2, 3, 7))
INT = _quotient("INT", _identity, neg=np.negative, samples=(-3, -1, 0, 1, 2, 5))
BOOL = _quotient(
    "BOOL", lambda x: (np.asarray(x) > 0).astype(np.int64), elements=(0, 1), samples=(0, 1)
)


def MOD(n: int) -> Semiring:
    """The ring of integers modulo ``n`` (``n >= 2``)."""
    n = int(n)
    if n < 2:
        raise ValueError("modulus must be at least 2")
    return _quotient(
        f"MOD({n})",
        lambda x: np.mod(x, n).astype(np.int64),
        neg=np.negative,
        elements=tuple(range(n)),
        samples=tuple(range(n)) if n <= 6 else (0, 1, 2, n - 1, n // 2),
    )


def by_name(name: str, modulus: int | None = None) -> Semiring:
    key = name.upper()
    if key == "MOD":
        if modulus is None:
            raise ValueError("MOD semiring needs a modulus")
        return MOD(modulus)
    table = {"NAT": NAT, "INT": INT, "BOOL": BOOL}
    if key not in table:
        raise ValueError(f"unknown semiring {name!r}")
    return table[key]


def enumerate_vectors(values: tuple, length: int) -> Array:
    """All vectors over ``values`` in lexicographic order, shape ``(N, length)``."""
    if length == 0:
        return np.zeros((1, 0), dtype=np.int64)
    return np.array(list(itertools.product(values, repeat=length)), dtype=np.int64)

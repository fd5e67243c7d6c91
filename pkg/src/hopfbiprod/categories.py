"""Concrete computable additive categories.

* :class:`MatCategory` -- objects are natural numbers, morphisms ``m -> n``
  are ``n x m`` matrices over a commutative semiring acting on column vectors.
* :class:`FgAbCategory` -- finitely generated abelian groups given as lists of
  cyclic orders (``0`` for Z, ``d >= 2`` for Z/d), morphisms are integer
  matrices whose column ``j`` is the image of generator ``j``.
* :class:`ProductCategory` -- the componentwise product of two categories.

Matrix-backed categories additionally expose the column-level hooks used by
the bounded invertor search (``generators``, ``column_space`` and friends).
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache

import numpy as np

from .additive import AdditiveCategory, Biproduct, Morphism, Obj
from .errors import IllDefinedMorphism, ShapeMismatch
from .semiring import Semiring


def _block_maps(a: int, b: int):
    n = a + b
    inj1 = np.zeros((n, a), dtype=np.int64)
    inj1[:a, :a] = np.eye(a, dtype=np.int64)
    inj2 = np.zeros((n, b), dtype=np.int64)
    inj2[a:, :] = np.eye(b, dtype=np.int64)
    return inj1, inj2, inj1.T.copy(), inj2.T.copy()


class MatrixBacked(AdditiveCategory):
    """Shared machinery for categories whose morphisms are integer matrices."""

    def _dims(self, A: Obj) -> int:
        raise NotImplementedError

    def reduce_rows(self, cod: Obj, matrix) -> np.ndarray:
        raise NotImplementedError

    def _matmul(self, a, b):
        return a @ b

    def _check_shape(self, dom: Obj, cod: Obj, m: np.ndarray) -> np.ndarray:
        m = np.asarray(m, dtype=np.int64)
        if m.size == 0:
            m = m.reshape(self._dims(cod), self._dims(dom))
        if m.shape != (self._dims(cod), self._dims(dom)):
            raise ShapeMismatch(
                f"matrix of shape {m.shape} cannot be a morphism {dom!r} -> {cod!r}"
            )
        return m

    def _compose(self, g, f):
        return self.reduce_rows(g.cod, self._matmul(g.data, f.data))

    def _add(self, f, g):
        return self.reduce_rows(f.cod, f.data + g.data)

    def _zero(self, A, B):
        return np.zeros((self._dims(B), self._dims(A)), dtype=np.int64)

    def _identity(self, A):
        return self.reduce_rows(A, np.eye(self._dims(A), dtype=np.int64))

    def _neg(self, f):
        return self.reduce_rows(f.cod, -f.data)

    def matrix(self, f: Morphism) -> np.ndarray:
        return f.data

    def morphism_to_json(self, f):
        return {
            "dom": self.object_to_json(f.dom),
            "cod": self.object_to_json(f.cod),
            "matrix": f.data.tolist(),
        }

    def morphism_from_json(self, doc):
        return self.morphism(
            self.object_from_json(doc["dom"]), self.object_from_json(doc["cod"]), doc["matrix"]
        )

    # -- column-level hooks for exhaustive search ---------------------------

    def generators(self, A: Obj) -> list:
        """One single-generator object per column of a morphism out of ``A``."""
        raise NotImplementedError

    def column_values(self, gen: Obj, cod: Obj, bound: int) -> list:
        """Per-row admissible entries, smallest first, for a column ``gen -> cod``."""
        raise NotImplementedError

    def column_space_size(self, gen: Obj, cod: Obj, bound: int) -> int:
        return math.prod(len(v) for v in self.column_values(gen, cod, bound))

    def column_space(self, gen: Obj, cod: Obj, bound: int) -> np.ndarray:
        """Every admissible column in lexicographic order, shape ``(N, rows)``."""
        values = self.column_values(gen, cod, bound)
        if not values:
            return np.zeros((1, 0), dtype=np.int64)
        return np.array(list(itertools.product(*values)), dtype=np.int64).reshape(-1, len(values))

    def batch_left(self, L: Morphism, columns: np.ndarray) -> np.ndarray:
        """Rows are ``L . c`` for each candidate column ``c``, reduced in ``L.cod``."""
        out = self._matmul(L.data, columns.T)
        return self.reduce_rows(L.cod, out).T

    def from_columns(self, dom: Obj, cod: Obj, columns) -> Morphism:
        rows = self._dims(cod)
        m = np.array(columns, dtype=np.int64).reshape(len(columns), rows).T
        return self.morphism(dom, cod, m)


class MatCategory(MatrixBacked):
    """Matrices over a commutative semiring; object ``n`` is the free module of rank ``n``."""

    def __init__(self, semiring: Semiring):
        self.semiring = semiring
        self.name = f"Mat({semiring.name})"
        self.has_negatives = semiring.is_ring

    def validate_object(self, data):
        n = int(data)
        if n < 0 or n != data:
            raise ValueError(f"dimension must be a non-negative integer, got {data!r}")
        return n

    def _dims(self, A):
        return A.data

    def reduce_rows(self, cod, matrix):
        return self.semiring.reduce(matrix)

    def _matmul(self, a, b):
        return self.semiring.matmul(a, b)

    def _add(self, f, g):
        return self.semiring.reduce(self.semiring.add(f.data, g.data))

    def _neg(self, f):
        return self.semiring.reduce(self.semiring.neg(f.data))

    def _identity(self, A):
        n = A.data
        m = np.full((n, n), self.semiring.zero, dtype=np.int64)
        np.fill_diagonal(m, self.semiring.one)
        return m

    def _zero(self, A, B):
        return np.full((B.data, A.data), self.semiring.zero, dtype=np.int64)

    def morphism(self, dom: Obj, cod: Obj, matrix) -> Morphism:
        self._own(dom)
        self._own(cod)
        m = self._check_shape(dom, cod, matrix)
        return Morphism(dom, cod, self.semiring.reduce(m))

    def zero_object(self):
        return Obj(self.name, 0)

    def _biproduct(self, A, B):
        i1, i2, p1, p2 = _block_maps(A.data, B.data)
        if self.semiring.one != 1 or self.semiring.zero != 0:
            i1, i2, p1, p2 = (
                np.where(x == 1, self.semiring.one, self.semiring.zero) for x in (i1, i2, p1, p2)
            )
        T = Obj(self.name, A.data + B.data)
        return Biproduct(
            A, B, T, Morphism(A, T, i1), Morphism(B, T, i2), Morphism(T, A, p1), Morphism(T, B, p2)
        )

    def sample_objects(self, plan):
        return [self.obj(n) for n in range(plan.max_dim + 1)]

    def random_morphism(self, A, B, rng):
        values = np.array(self.semiring.samples, dtype=np.int64)
        m = rng.choice(values, size=(B.data, A.data)) if values.size else self._zero(A, B)
        return self.morphism(A, B, m)

    def object_to_json(self, A):
        return {"dim": A.data}

    def object_from_json(self, doc):
        return self.obj(doc["dim"])

    def generators(self, A):
        return [self.obj(1)] * A.data

    def column_values(self, gen, cod, bound):
        return [self.semiring.bounded_elements(bound)] * cod.data

    def enumerate_hom(self, A: Obj, B: Obj, bound: int):
        values = self.semiring.bounded_elements(bound)
        for flat in itertools.product(values, repeat=A.data * B.data):
            yield self.morphism(A, B, np.array(flat, dtype=np.int64).reshape(A.data, B.data).T)

    def hom_size(self, A, B, bound):
        return len(self.semiring.bounded_elements(bound)) ** (A.data * B.data)


@lru_cache(maxsize=None)
def _row_moduli(orders: tuple):
    """``(moduli, torsion mask)`` for reducing rows; ``None`` entries mean no work."""
    if not orders or not any(orders):
        return None, None
    o = np.array(orders, dtype=np.int64)
    if all(orders):
        return o, None
    return np.where(o == 0, 1, o), o > 0


def _allowed_entries(d: int, e: int, bound: int) -> tuple:
    """Representatives ``m`` for a generator of order ``d`` mapped into Z/e (Z when 0)."""
    if e == 0:
        return tuple(range(-bound, bound + 1)) if d == 0 else (0,)
    g = math.gcd(e, d)
    step = e // g
    return tuple(step * k for k in range(g))


class FgAbCategory(MatrixBacked):
    """Finitely generated abelian groups ``Z^a + Z/d1 + ... `` with explicit generators.

    Objects are tuples of orders; an order of ``0`` stands for Z.  Order lists
    are not put into any normal form, so biproducts are concatenations.
    """

    name = "FgAb"
    has_negatives = True

    def validate_object(self, data):
        orders = tuple(int(o) for o in data)
        if any(o < 0 or o == 1 for o in orders):
            raise ValueError(f"orders must be 0 or at least 2, got {list(data)!r}")
        return orders

    def _dims(self, A):
        return len(A.data)

    def reduce_rows(self, cod, matrix):
        m = np.asarray(matrix, dtype=np.int64)
        mod, torsion = _row_moduli(cod.data)
        if mod is None:
            return m
        shape = (-1,) + (1,) * (m.ndim - 1)
        reduced = np.mod(m, mod.reshape(shape))
        return reduced if torsion is None else np.where(torsion.reshape(shape), reduced, m)

    def is_well_defined(self, dom: Obj, cod: Obj, matrix) -> bool:
        m = self.reduce_rows(cod, self._check_shape(dom, cod, matrix))
        d = np.array(dom.data, dtype=np.int64)
        e = np.array(cod.data, dtype=np.int64)
        if m.size == 0 or not d.any():
            return True
        # a torsion generator of order d must land in elements killed by d
        image = m[:, d > 0] * d[d > 0]
        free = e == 0
        if np.any(m[free][:, d > 0]):
            return False
        return not np.any(np.mod(image[~free], e[~free, None]))

    def morphism(self, dom: Obj, cod: Obj, matrix) -> Morphism:
        self._own(dom)
        self._own(cod)
        m = self._check_shape(dom, cod, matrix)
        if not self.is_well_defined(dom, cod, m):
            raise IllDefinedMorphism(
                f"{np.asarray(matrix).tolist()} is not a homomorphism {list(dom.data)} -> {list(cod.data)}"
            )
        return Morphism(dom, cod, self.reduce_rows(cod, m))

    def zero_object(self):
        return Obj(self.name, ())

    def _biproduct(self, A, B):
        i1, i2, p1, p2 = _block_maps(len(A.data), len(B.data))
        T = Obj(self.name, A.data + B.data)
        # reduced identities are still 0/1 matrices, so the block maps are canonical
        return Biproduct(
            A, B, T, Morphism(A, T, i1), Morphism(B, T, i2), Morphism(T, A, p1), Morphism(T, B, p2)
        )

    def sample_objects(self, plan):
        objs = []
        for k in range(plan.max_generators + 1):
            for orders in itertools.product(plan.orders, repeat=k):
                objs.append(self.obj(orders))
        return objs

    def random_morphism(self, A, B, rng):
        m = np.zeros((len(B.data), len(A.data)), dtype=np.int64)
        for j, d in enumerate(A.data):
            for i, e in enumerate(B.data):
                if e == 0:
                    m[i, j] = rng.integers(-3, 4) if d == 0 else 0
                else:
                    g = math.gcd(e, d)
                    m[i, j] = (e // g) * rng.integers(0, g)
        return self.morphism(A, B, m)

    def object_to_json(self, A):
        return {"orders": list(A.data)}

    def object_from_json(self, doc):
        return self.obj(doc["orders"])

    def generators(self, A):
        return [self.obj((d,)) for d in A.data]

    def column_values(self, gen, cod, bound):
        (d,) = gen.data
        return [_allowed_entries(d, e, bound) for e in cod.data]

    def enumerate_hom(self, A: Obj, B: Obj, bound: int):
        cols = [self.column_space(g, B, bound) for g in self.generators(A)]
        for choice in itertools.product(*cols):
            yield self.from_columns(A, B, list(choice))

    def hom_size(self, A, B, bound):
        return math.prod(self.column_space_size(g, B, bound) for g in self.generators(A))


class ProductCategory(AdditiveCategory):
    """``C x D`` with all structure computed componentwise."""

    def __init__(self, left: AdditiveCategory, right: AdditiveCategory):
        self.left = left
        self.right = right
        self.name = f"({left.name} x {right.name})"
        self.has_negatives = left.has_negatives and right.has_negatives

    def validate_object(self, data):
        a, b = data
        if not (isinstance(a, Obj) and a.cat == self.left.name):
            a = self.left.obj(a)
        if not (isinstance(b, Obj) and b.cat == self.right.name):
            b = self.right.obj(b)
        return (a, b)

    def pair(self, f: Morphism, g: Morphism) -> Morphism:
        return Morphism(self.obj((f.dom, g.dom)), self.obj((f.cod, g.cod)), (f, g))

    def morphism(self, dom: Obj, cod: Obj, data) -> Morphism:
        f, g = data
        if f.dom != dom.data[0] or f.cod != cod.data[0] or g.dom != dom.data[1] or g.cod != cod.data[1]:
            raise ShapeMismatch("component morphisms do not match the given objects")
        return Morphism(dom, cod, (f, g))

    def _compose(self, g, f):
        return (self.left.compose(g.data[0], f.data[0]), self.right.compose(g.data[1], f.data[1]))

    def _add(self, f, g):
        return (self.left.add(f.data[0], g.data[0]), self.right.add(f.data[1], g.data[1]))

    def _neg(self, f):
        return (self.left.neg(f.data[0]), self.right.neg(f.data[1]))

    def _zero(self, A, B):
        return (self.left.zero(A.data[0], B.data[0]), self.right.zero(A.data[1], B.data[1]))

    def _identity(self, A):
        return (self.left.identity(A.data[0]), self.right.identity(A.data[1]))

    def zero_object(self):
        return self.obj((self.left.zero_object(), self.right.zero_object()))

    def _biproduct(self, A, B):
        l = self.left.biproduct(A.data[0], B.data[0])
        r = self.right.biproduct(A.data[1], B.data[1])
        return Biproduct(
            A,
            B,
            self.obj((l.total, r.total)),
            self.pair(l.inj1, r.inj1),
            self.pair(l.inj2, r.inj2),
            self.pair(l.proj1, r.proj1),
            self.pair(l.proj2, r.proj2),
        )

    def sample_objects(self, plan):
        return [
            self.obj((a, b))
            for a, b in itertools.product(self.left.sample_objects(plan), self.right.sample_objects(plan))
        ]

    def random_morphism(self, A, B, rng):
        return self.pair(
            self.left.random_morphism(A.data[0], B.data[0], rng),
            self.right.random_morphism(A.data[1], B.data[1], rng),
        )

    def object_to_json(self, A):
        return {"left": self.left.object_to_json(A.data[0]), "right": self.right.object_to_json(A.data[1])}

    def object_from_json(self, doc):
        return self.obj((self.left.object_from_json(doc["left"]), self.right.object_from_json(doc["right"])))

    def morphism_to_json(self, f):
        return {
            "dom": self.object_to_json(f.dom),
            "cod": self.object_to_json(f.cod),
            "left": self.left.morphism_to_json(f.data[0]),
            "right": self.right.morphism_to_json(f.data[1]),
        }

    def morphism_from_json(self, doc):
        return self.pair(self.left.morphism_from_json(doc["left"]), self.right.morphism_from_json(doc["right"]))

    def enumerate_hom(self, A, B, bound):
        rights = list(self.right.enumerate_hom(A.data[1], B.data[1], bound))
        for f in self.left.enumerate_hom(A.data[0], B.data[0], bound):
            for g in rights:
                yield self.pair(f, g)

    def hom_size(self, A, B, bound):
        return self.left.hom_size(A.data[0], B.data[0], bound) * self.right.hom_size(
            A.data[1], B.data[1], bound
        )


def mat_category(semiring: Semiring) -> MatCategory:
    return MatCategory(semiring)


def fgab_category() -> FgAbCategory:
    return FgAbCategory()


def product_category(left: AdditiveCategory, right: AdditiveCategory) -> ProductCategory:
    return ProductCategory(left, right)


def embed_int_matrix(fgab: FgAbCategory, f: Morphism) -> Morphism:
    """Send a morphism of ``Mat(INT)`` to the corresponding map between free groups."""
    return fgab.morphism(fgab.obj((0,) * f.dom.data), fgab.obj((0,) * f.cod.data), f.data)


def cyclic_tensor_functor(n: int, fgab: FgAbCategory | None = None):
    """The functor ``Z/n (x) -`` on finitely generated abelian groups.

    Returns ``(on_objects, on_morphisms, kept)`` where ``kept(A)`` lists the
    generator indices of ``A`` that survive (``gcd(n, d) > 1``).
    """
    n = int(n)
    if n < 2:
        raise ValueError("n must be at least 2")
    fgab = fgab or FgAbCategory()

    def new_order(d):
        return n if d == 0 else math.gcd(n, d)

    @lru_cache(maxsize=None)
    def kept(A: Obj) -> list:
        return [i for i, d in enumerate(A.data) if new_order(d) != 1]

    @lru_cache(maxsize=None)
    def on_objects(A: Obj) -> Obj:
        return fgab.obj(tuple(new_order(A.data[i]) for i in kept(A)))

    def on_morphisms(f: Morphism) -> Morphism:
        rows, cols = kept(f.cod), kept(f.dom)
        m = f.data[np.ix_(rows, cols)] if rows and cols else np.zeros((len(rows), len(cols)), dtype=np.int64)
        return fgab.morphism(on_objects(f.dom), on_objects(f.cod), m)

    return on_objects, on_morphisms, kept


__all__ = [
    "MatCategory",
    "FgAbCategory",
    "ProductCategory",
    "mat_category",
    "fgab_category",
    "product_category",
    "cyclic_tensor_functor",
    "embed_int_matrix",
]

"""Deterministic sample plans for checking universally quantified laws."""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np


@dataclass(frozen=True)
class SamplePlan:
    """Finite family of objects and seeded morphisms that laws are checked on.

    Matrix categories use every dimension ``0..max_dim``.  Finitely generated
    abelian groups use every order list over ``orders`` with at most
    ``max_generators`` entries.  Random morphisms are drawn from generators
    seeded by ``(seed, *indices)`` so results do not depend on evaluation order.
    """

    max_dim: int = 3
    orders: tuple = (0, 2, 3, 4)
    max_generators: int = 2
    morphisms_per_hom: int = 8
    naturality_samples: int = 2
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "orders", tuple(int(o) for o in self.orders))
        if self.seed < 0:
            raise ValueError("seed must be non-negative")
        if self.max_dim < 0 or self.max_generators < 0:
            raise ValueError("plan bounds must be non-negative")
        if self.morphisms_per_hom < 0 or self.naturality_samples < 0:
            raise ValueError("sample counts must be non-negative")
        if any(o < 0 or o == 1 for o in self.orders):
            raise ValueError("orders must be 0 or at least 2")

    def rng(self, *key: int) -> np.random.Generator:
        return np.random.default_rng([self.seed, *key])

    def to_dict(self) -> dict:
        d = asdict(self)
        d["orders"] = list(self.orders)
        return d


DEFAULT_PLAN = SamplePlan()

"""Computation budgets shared across the homological probes."""

from __future__ import annotations

from dataclasses import dataclass, replace


class BudgetExceeded(RuntimeError):
    """A dimension/class cap was hit; callers degrade to open/unknown results."""


class RegistryAmbiguity(RuntimeError):
    """An isomorphism test stayed inconclusive while registering a class."""


@dataclass(frozen=True)
class Budgets:
    """Default budgets: depth 64, classes 10000, confidence 40, seed 0.

    max_dim caps the total dimension of any module handed to the
    decomposition machinery; orbit probes report open/unknown beyond it.
    """

    depth: int = 64
    classes: int = 10_000
    confidence: int = 40
    max_dim: int = 40
    seed: int = 0

    def with_seed(self, seed: int) -> "Budgets":
        return replace(self, seed=seed)


DEFAULT = Budgets()

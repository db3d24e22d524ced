"""Deterministic seeded random-matrix ensembles.

Streams are counter-based (Philox) and keyed by (seed, trial index), so
trials are reproducible, order-independent, and safe to parallelize.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .errors import InvalidSpec

KINDS = ("integer-complex", "integer-real", "gaussian-complex", "gram-psd-block")

__all__ = ["KINDS", "EnsembleSpec", "trial_rng", "sample_matrix", "generate"]


@dataclass(frozen=True)
class EnsembleSpec:
    """Which matrices to draw: kind, size, how many, and the seed.

    integer-complex draws Re and Im independently uniform on the integer
    range; integer-real leaves Im = 0; gaussian-complex uses standard
    normal components; gram-psd-block yields G* G for a 2*dim gaussian G
    (a PSD block matrix ready for corner extraction).
    """

    kind: str
    dim: int
    count: int
    seed: int
    int_range: tuple[int, int] = (0, 10)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidSpec(f"unknown ensemble kind {self.kind!r}; choose from {KINDS}")
        if self.dim < 1:
            raise InvalidSpec("dim must be >= 1")
        if self.count < 1:
            raise InvalidSpec("count must be >= 1")
        lo, hi = self.int_range
        if lo > hi:
            raise InvalidSpec(f"int_range lo {lo} exceeds hi {hi}")


def trial_rng(seed: int, index: int) -> np.random.Generator:
    """Counter-based generator for one trial, keyed by (seed, index)."""
    key = np.array([seed % 2**64, index % 2**64], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


def sample_matrix(rng: np.random.Generator, kind: str, dim: int,
                  int_range: tuple[int, int] = (0, 10)) -> np.ndarray:
    lo, hi = int_range
    if kind == "integer-complex":
        re = rng.integers(lo, hi + 1, size=(dim, dim))
        im = rng.integers(lo, hi + 1, size=(dim, dim))
        return re + 1j * im
    if kind == "integer-real":
        return rng.integers(lo, hi + 1, size=(dim, dim)).astype(np.complex128)
    if kind == "gaussian-complex":
        return rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    if kind == "gram-psd-block":
        g = rng.normal(size=(2 * dim, 2 * dim)) + 1j * rng.normal(size=(2 * dim, 2 * dim))
        return g.conj().T @ g
    raise InvalidSpec(f"unknown ensemble kind {kind!r}")


def unit_disc_matrix(rng: np.random.Generator, dim: int) -> np.ndarray:
    """Entries drawn uniformly from the closed unit disc."""
    r = np.sqrt(rng.uniform(size=(dim, dim)))
    phi = rng.uniform(0.0, 2.0 * np.pi, size=(dim, dim))
    return r * np.exp(1j * phi)


def generate(spec: EnsembleSpec) -> Iterator[np.ndarray]:
    """Yield spec.count matrices, deterministic for a fixed seed."""
    for i in range(spec.count):
        yield sample_matrix(trial_rng(spec.seed, i), spec.kind, spec.dim, spec.int_range)

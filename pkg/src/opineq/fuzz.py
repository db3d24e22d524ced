"""Fuzzing campaigns: run inequality suites over seeded random ensembles.

Each suite draws its own inputs from the trial's counter-based stream, so
results depend only on (seed, trial index) and suites can be re-run or
parallelized without changing outcomes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import HypothesisUnmet, UnknownSuite
from .ensembles import EnsembleSpec, sample_matrix, trial_rng
from .inequalities import (
    BoundReport,
    aluthge_bound_reports,
    beta_chain_reports,
    block_pair_report,
    block_positivity,
    compression_bound_report,
    corner_norm_report,
    half_difference_reports,
    majorization_equiv,
    mixed_schwarz,
    radius_upper_reports,
)
from .linalg import spectral_norm, split2
from .radius import SweepConfig

MIXED_SCHWARZ_ALPHAS = tuple(0.25 * k for k in range(9))

__all__ = ["SUITE_NAMES", "SuiteSummary", "run_suite", "run_suites"]


@dataclass
class SuiteSummary:
    suite: str
    trials: int
    reports: int
    violations: int
    hypothesis_unmet: int
    worst_slack: float
    worst_name: str | None
    worst_inputs: dict | None

    @property
    def passed(self) -> bool:
        return self.violations == 0


def _unit(rng: np.random.Generator, n: int) -> np.ndarray:
    v = rng.normal(size=n) + 1j * rng.normal(size=n)
    return v / np.linalg.norm(v)


def _gram_blocks(rng, dim, kind, int_range):
    g = sample_matrix(rng, kind, 2 * dim, int_range)
    if kind != "gram-psd-block":
        g = g.conj().T @ g
    A, _, C, B = split2(g, dim)
    return A, B, C


def _nonpsd_blocks(rng, dim):
    """PSD corners A, B with the off-diagonal C scaled until the block has
    a clearly negative eigenvalue (< -1e-4 * scale)."""
    ga = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    gb = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    A = ga.conj().T @ ga
    B = gb.conj().T @ gb
    C = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    scale = 1.0 + max(spectral_norm(A), spectral_norm(B))
    for _ in range(60):
        block = np.block([[A, C.conj().T], [C, B]])
        if float(np.linalg.eigvalsh((block + block.conj().T) / 2.0)[0]) < -1e-4 * scale:
            return A, B, C
        C = 2.0 * C
    return A, B, C


def _single_matrix_suite(reports_fn):
    def run(rng, spec: EnsembleSpec, index: int, cfg):
        T = sample_matrix(rng, spec.kind, spec.dim, spec.int_range)
        return reports_fn(T, cfg), {"T": T}

    return run


def _suite_block_pair(rng, spec, index, cfg):
    A = sample_matrix(rng, spec.kind, spec.dim, spec.int_range)
    B = sample_matrix(rng, spec.kind, spec.dim, spec.int_range)
    return [block_pair_report(A, B, cfg)], {"A": A, "B": B}


def _suite_mixed_schwarz(rng, spec, index, cfg):
    T = sample_matrix(rng, spec.kind, spec.dim, spec.int_range)
    x = _unit(rng, spec.dim)
    y = _unit(rng, spec.dim)
    reports = [mixed_schwarz(T, x, y, a) for a in MIXED_SCHWARZ_ALPHAS]
    return reports, {"T": T}


def _suite_corner(rng, spec, index, cfg):
    A, B, C = _gram_blocks(rng, spec.dim, spec.kind, spec.int_range)
    return [corner_norm_report(A, B, C)], {"A": A, "B": B, "C": C}


def _suite_compression(rng, spec, index, cfg):
    if index % 2 == 0 or spec.dim == 1:
        A, B, C = _gram_blocks(rng, spec.dim, spec.kind, spec.int_range)
    else:
        # rank-deficient corner with full-rank B: the range-support
        # hypothesis U U* B = B genuinely fails, which the report must
        # flag as HypothesisUnmet rather than as a violation
        n = spec.dim
        r = n - 1
        C = (rng.normal(size=(n, r)) + 1j * rng.normal(size=(n, r))) @ (
            rng.normal(size=(r, n)) + 1j * rng.normal(size=(r, n))
        )
        gb = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
        B = gb.conj().T @ gb + np.eye(n)
        A = C.conj().T @ np.linalg.solve(B, C) + 1e-6 * np.eye(n)
    return [compression_bound_report(A, B, C)], {"A": A, "B": B, "C": C}


def _suite_majorization(rng, spec, index, cfg):
    S = sample_matrix(rng, spec.kind, spec.dim, spec.int_range)
    if index % 2 == 0:
        # contraction construction: T T* <= S S* holds by design
        d = rng.uniform(0.0, 1.0, size=spec.dim)
        T = S @ np.diag(d).astype(np.complex128)
    else:
        T = sample_matrix(rng, spec.kind, spec.dim, spec.int_range)
    one, two = majorization_equiv(T, S, seed=int(rng.integers(0, 2**62)))
    return [one, two], {"T": T, "S": S}


def _suite_positivity(rng, spec, index, cfg):
    """Alternate PSD and non-PSD blocks; encode the two-route agreement as
    reports so violations surface like any other suite."""
    if index % 2 == 0:
        A, B, C = _gram_blocks(rng, spec.dim, spec.kind, spec.int_range)
        verdict = block_positivity(A, B, C, seed=int(rng.integers(0, 2**62)))
        ratio = verdict.condition_ii_max_ratio
        if not math.isfinite(ratio):
            ratio = 2.0
        reports = [
            BoundReport(name="gram-ratio-le-one", lhs=ratio, rhs=1.0, tol=1e-6),
            BoundReport(
                name="gram-block-psd",
                lhs=0.0 if verdict.is_psd else 1.0,
                rhs=0.0,
                tol=0.5,
            ),
        ]
    else:
        A, B, C = _nonpsd_blocks(rng, spec.dim)
        verdict = block_positivity(A, B, C, seed=int(rng.integers(0, 2**62)))
        tol_psd = 1e-9 * (1.0 + max(spectral_norm(A), spectral_norm(B)))
        detected = (
            verdict.condition_ii_max_ratio > 1.0
            or verdict.schur_residual < -tol_psd
        )
        reports = [
            BoundReport(
                name="nonpsd-detected",
                lhs=0.0 if detected else 1.0,
                rhs=0.0,
                tol=0.5,
            )
        ]
    return reports, {"A": A, "B": B, "C": C}


SUITES = {
    "half-diff": _single_matrix_suite(half_difference_reports),
    "block-pair": _suite_block_pair,
    "implicit": _single_matrix_suite(radius_upper_reports),
    "beta-chain": _single_matrix_suite(beta_chain_reports),
    "aluthge": _single_matrix_suite(aluthge_bound_reports),
    "mixed-schwarz": _suite_mixed_schwarz,
    "corner": _suite_corner,
    "compression": _suite_compression,
    "majorization": _suite_majorization,
    "positivity": _suite_positivity,
}

SUITE_NAMES = tuple(SUITES)


def run_suite(name: str, spec: EnsembleSpec, cfg: SweepConfig | None = None) -> SuiteSummary:
    try:
        suite = SUITES[name]
    except KeyError:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {SUITE_NAMES}") from None

    reports_seen = 0
    violations = 0
    unmet = 0
    worst_slack = math.inf
    worst_name = None
    worst_inputs = None
    for i in range(spec.count):
        rng = trial_rng(spec.seed, i)
        try:
            reports, inputs = suite(rng, spec, i, cfg)
        except HypothesisUnmet:
            unmet += 1
            continue
        for rep in reports:
            reports_seen += 1
            if not rep.holds:
                violations += 1
            if rep.slack < worst_slack:
                worst_slack = rep.slack
                worst_name = rep.name
                worst_inputs = inputs
    return SuiteSummary(
        suite=name,
        trials=spec.count,
        reports=reports_seen,
        violations=violations,
        hypothesis_unmet=unmet,
        worst_slack=worst_slack,
        worst_name=worst_name,
        worst_inputs=worst_inputs,
    )


def run_suites(names, spec: EnsembleSpec, cfg: SweepConfig | None = None) -> list[SuiteSummary]:
    for name in names:
        if name not in SUITES:
            raise UnknownSuite(f"unknown suite {name!r}; choose from {SUITE_NAMES}")
    return [run_suite(name, spec, cfg) for name in names]

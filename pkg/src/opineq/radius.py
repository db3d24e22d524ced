"""Numerical radius by angle sweep, an independent Rayleigh-ascent cross
check, and the off-diagonal block radius identity.

The radius is computed from
    w(T) = sup_theta lambda_max(Re(exp(1j*theta) T)),
where Re(exp(1j*theta) T) = cos(theta) Re T - sin(theta) Im T, so one
sweep only needs the two Hermitian parts.  The sup over the full circle
of lambda_max equals the sup of the norm (send theta to theta + pi).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, IdentityMismatch, InvalidSpec
from .linalg import as_matrix, re_im_parts, spectral_norm

TWO_PI = 2.0 * math.pi
_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0

__all__ = [
    "SweepConfig",
    "SweepResult",
    "f_theta",
    "numerical_radius",
    "rayleigh_radius",
    "sup_theta_norm",
    "off_diag_radius",
]


@dataclass(frozen=True)
class SweepConfig:
    """Angle-sweep controls.

    A uniform grid locates candidate maxima; the top_k bracketed local
    maxima are refined by golden-section search down to angle resolution
    ``tol``.  Multiple brackets are refined because the sweep function can
    have several local maxima, so single-start refinement is unsafe.
    """

    grid_points: int = 720
    refine_iters: int = 60
    top_k: int = 5
    tol: float = 1e-11

    def __post_init__(self):
        if self.grid_points < 8:
            raise InvalidSpec("grid_points must be >= 8")
        if self.tol <= 0:
            raise InvalidSpec("tol must be positive")
        if self.top_k < 1 or self.refine_iters < 0:
            raise InvalidSpec("top_k must be >= 1 and refine_iters >= 0")


DEFAULT_SWEEP = SweepConfig()


@dataclass(frozen=True)
class SweepResult:
    """Radius value, the maximizing angle in [0, 2pi), and a unit witness
    vector with |<T witness, witness>| equal to the radius."""

    omega: float
    theta_star: float
    witness: np.ndarray


def _herm_batch_max(A: np.ndarray, B: np.ndarray):
    """Return f(thetas) = lambda_max(cos(t) A - sin(t) B) evaluated batched."""

    def f(thetas: np.ndarray) -> np.ndarray:
        t = np.atleast_1d(np.asarray(thetas, dtype=float))
        M = np.cos(t)[:, None, None] * A - np.sin(t)[:, None, None] * B
        return np.linalg.eigvalsh(M)[:, -1]

    return f


def _max_on_circle(batch_f, cfg: SweepConfig) -> tuple[float, float]:
    """Maximize a continuous 2pi-periodic function given a batched evaluator.

    Returns (theta_star, value).  Deterministic: grid, bracket selection
    and refinement order are all fixed by the configuration.
    """
    n = cfg.grid_points
    thetas = np.arange(n) * (TWO_PI / n)
    vals = np.asarray(batch_f(thetas), dtype=float)

    left = np.roll(vals, 1)
    right = np.roll(vals, -1)
    locmax = np.flatnonzero((vals >= left) & (vals >= right))
    if locmax.size == 0:
        locmax = np.array([int(np.argmax(vals))])
    picks = locmax[np.argsort(vals[locmax], kind="stable")[::-1]][: cfg.top_k]

    h = TWO_PI / n
    a = thetas[picks] - h
    b = thetas[picks] + h
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc = np.asarray(batch_f(c), dtype=float)
    fd = np.asarray(batch_f(d), dtype=float)

    for _ in range(cfg.refine_iters):
        if np.all(b - a <= cfg.tol):
            break
        m = fc > fd
        a_new = np.where(m, a, c)
        b_new = np.where(m, d, b)
        width = b_new - a_new
        pts = np.where(m, b_new - _INVPHI * width, a_new + _INVPHI * width)
        f_pts = np.asarray(batch_f(pts), dtype=float)
        c_new = np.where(m, pts, d)
        d_new = np.where(m, c, pts)
        fc_new = np.where(m, f_pts, fd)
        fd_new = np.where(m, fc, f_pts)
        a, b, c, d, fc, fd = a_new, b_new, c_new, d_new, fc_new, fd_new

    mids = (a + b) / 2.0
    f_mids = np.asarray(batch_f(mids), dtype=float)
    k = int(np.argmax(f_mids))
    theta, value = float(mids[k]), float(f_mids[k])

    g = int(np.argmax(vals))
    if vals[g] > value:
        theta, value = float(thetas[g]), float(vals[g])
    return theta % TWO_PI, value


def f_theta(T, theta: float) -> float:
    """Largest eigenvalue of the Hermitian part of exp(1j*theta) T."""
    A, B = re_im_parts(T)
    H = math.cos(theta) * A - math.sin(theta) * B
    return float(np.linalg.eigvalsh(H)[-1])


def _fix_phase(x: np.ndarray) -> np.ndarray:
    """Rotate a vector's global phase so its largest component is real positive."""
    k = int(np.argmax(np.abs(x)))
    z = x[k]
    if abs(z) == 0.0:
        return x
    return x * (abs(z) / z)


def numerical_radius(T, cfg: SweepConfig | None = None) -> SweepResult:
    """Numerical radius by grid sweep plus golden-section refinement."""
    cfg = cfg or DEFAULT_SWEEP
    T = as_matrix(T)
    A, B = re_im_parts(T)
    theta, value = _max_on_circle(_herm_batch_max(A, B), cfg)
    H = math.cos(theta) * A - math.sin(theta) * B
    _, V = np.linalg.eigh(H)
    witness = _fix_phase(V[:, -1])
    return SweepResult(omega=value, theta_star=theta, witness=witness)


def rayleigh_radius(T, trials: int = 16, seed: int = 0) -> tuple[float, np.ndarray]:
    """Lower bound on the numerical radius by multistart alternating ascent.

    From each random unit start x, alternate between the phase
    phi = -arg<Tx, x> and the leading eigenvector of Re(exp(1j*phi) T);
    each step is monotone in |<Tx, x>|.  Returns the best value and the
    achieving unit vector.  Independent of the angle sweep, so the two
    routes cross-validate each other.
    """
    if trials < 1:
        raise InvalidSpec("trials must be >= 1")
    T = as_matrix(T)
    if T.shape[0] != T.shape[1]:
        raise DimensionMismatch("numerical radius needs a square matrix")
    n = T.shape[0]
    A, B = re_im_parts(T)

    best_val = -1.0
    best_x = None
    for t in range(trials):
        rng = np.random.Generator(
            np.random.Philox(key=np.array([seed % 2**64, t], dtype=np.uint64))
        )
        x = rng.normal(size=n) + 1j * rng.normal(size=n)
        x = x / np.linalg.norm(x)
        val = abs(np.vdot(x, T @ x))
        for _ in range(100):
            z = np.vdot(x, T @ x)
            phi = -np.angle(z) if abs(z) > 0.0 else 0.0
            H = math.cos(phi) * A - math.sin(phi) * B
            _, V = np.linalg.eigh(H)
            x = V[:, -1]
            new_val = abs(np.vdot(x, T @ x))
            if new_val <= val + 1e-14 * (1.0 + val):
                val = max(val, new_val)
                break
            val = new_val
        if val > best_val:
            best_val = val
            best_x = x
    return float(best_val), _fix_phase(best_x)


def sup_theta_norm(X, Y, cfg: SweepConfig | None = None) -> float:
    """sup over theta of the spectral norm of X + exp(1j*theta) Y."""
    cfg = cfg or DEFAULT_SWEEP
    X, Y = as_matrix(X), as_matrix(Y)
    if X.shape != Y.shape:
        raise DimensionMismatch(f"shapes {X.shape} and {Y.shape} differ")

    def f(thetas: np.ndarray) -> np.ndarray:
        t = np.atleast_1d(np.asarray(thetas, dtype=float))
        M = X[None, :, :] + np.exp(1j * t)[:, None, None] * Y[None, :, :]
        return np.linalg.svd(M, compute_uv=False)[:, 0]

    _, value = _max_on_circle(f, cfg)
    return value


def off_diag_radius(X, Y, cfg: SweepConfig | None = None) -> float:
    """Numerical radius of [[0, X], [Y*, 0]].

    Also evaluates sup_theta ||X + exp(1j*theta) Y|| by an independent
    sweep and checks the identity
        2 w([[0, X], [Y*, 0]]) = sup_theta ||X + exp(1j*theta) Y||
    to 1e-8 * scale, raising IdentityMismatch on disagreement.
    """
    cfg = cfg or DEFAULT_SWEEP
    X, Y = as_matrix(X), as_matrix(Y)
    if X.shape != Y.shape:
        raise DimensionMismatch(f"shapes {X.shape} and {Y.shape} differ")
    p, q = X.shape
    Z = np.block(
        [
            [np.zeros((p, p), dtype=np.complex128), X],
            [Y.conj().T, np.zeros((q, q), dtype=np.complex128)],
        ]
    )
    omega = numerical_radius(Z, cfg).omega
    sup = sup_theta_norm(X, Y, cfg)
    scale = 1.0 + max(spectral_norm(X), spectral_norm(Y))
    if abs(2.0 * omega - sup) > 1e-8 * scale:
        raise IdentityMismatch(
            f"2*w = {2 * omega:.12g} vs sup-norm sweep {sup:.12g} (scale {scale:.3g})"
        )
    return omega

"""Operator inequalities as checkable predicates.

Every bound is evaluated into a BoundReport carrying both sides, the
slack rhs - lhs, and a tolerance; ``holds`` means slack >= -tol.  The
uniform default tolerance is 1e-8 * (1 + rhs), wide enough to absorb
eigensolver error stacking through nested radius computations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    AlphaOutOfRange,
    DimensionMismatch,
    HypothesisUnmet,
    NotHermitian,
    NotPSD,
    NotSquare,
    ZeroVector,
)
from .linalg import (
    as_matrix,
    block2,
    herm_eig,
    inner,
    is_hermitian,
    matrix_abs,
    matrix_power_psd,
    re_im_parts,
    spectral_norm,
)
from .radius import SweepConfig, numerical_radius
from .transforms import aluthge, polar

__all__ = [
    "BoundReport",
    "PositivityVerdict",
    "default_tol",
    "block_positivity",
    "majorization_equiv",
    "corner_norm_report",
    "compression_bound_report",
    "mixed_schwarz",
    "schwarz_gram",
    "half_difference_reports",
    "block_pair_report",
    "radius_upper_reports",
    "beta_chain_reports",
    "aluthge_bound_reports",
]


def default_tol(rhs: float) -> float:
    return 1e-8 * (1.0 + abs(rhs))


@dataclass(frozen=True)
class BoundReport:
    """One evaluated inequality instance: lhs <= rhs up to tol."""

    name: str
    lhs: float
    rhs: float
    tol: float
    witness: dict | None = field(default=None, compare=False)

    def __post_init__(self):
        if not (math.isfinite(self.lhs) and math.isfinite(self.rhs)):
            raise ValueError(f"{self.name}: bound sides must be finite")

    @property
    def slack(self) -> float:
        return self.rhs - self.lhs

    @property
    def holds(self) -> bool:
        return self.slack >= -self.tol

    def to_json_dict(self) -> dict:
        d = {
            "name": self.name,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "slack": self.slack,
            "tol": self.tol,
            "holds": self.holds,
        }
        if self.witness is not None:
            d["witness"] = self.witness
        return d


@dataclass(frozen=True)
class PositivityVerdict:
    """Outcome of the two-route block positivity check.

    ``is_psd`` comes from the eigenvalue route; ``condition_ii_max_ratio``
    is the best found value of |<Cu,v>|^2 / (<Au,u> <Bv,v>), which exceeds
    1 exactly when the inner-product characterization fails; the Schur
    residual is the minimum eigenvalue of B - C (A + eps I)^(-1) C*.
    """

    is_psd: bool
    min_eig: float
    schur_residual: float
    condition_ii_max_ratio: float
    sampled_pairs: int


def _omega(T, cfg: SweepConfig | None) -> float:
    return numerical_radius(T, cfg).omega


def _require_hermitian(M: np.ndarray, what: str) -> np.ndarray:
    if M.shape[0] != M.shape[1] or not is_hermitian(M):
        raise NotHermitian(f"{what} must be Hermitian")
    return (M + M.conj().T) / 2.0


def _ratio(num: float, den: float, eps: float) -> float:
    if den <= eps:
        return 0.0 if num <= eps else math.inf
    return num / den


def block_positivity(A, B, C, samples: int | None = None, seed: int = 0) -> PositivityVerdict:
    """Check positivity of [[A, C*], [C, B]] by three routes.

    Eigenvalue route: minimum eigenvalue of the assembled block.
    Inner-product route: maximize |<Cu,v>|^2 / (<Au,u> <Bv,v>) over sampled
    unit pairs plus 20 alternating ascent steps (regularized solves); the
    block is PSD exactly when this ratio never exceeds 1.
    Schur route: negativity of B - C (A + eps I)^(-1) C*.
    """
    A = _require_hermitian(as_matrix(A), "A")
    B = _require_hermitian(as_matrix(B), "B")
    C = as_matrix(C)
    n, m = A.shape[0], B.shape[0]
    if C.shape != (m, n):
        raise DimensionMismatch(f"C must be {m}x{n}, got {C.shape}")

    Tb = block2(A, C.conj().T, C, B)
    w = herm_eig(Tb).values
    min_eig = float(w[0])
    norm_T = max(abs(float(w[0])), abs(float(w[-1])))
    is_psd = min_eig >= -1e-9 * (1.0 + norm_T)

    eps_a = 1e-8 * (1.0 + spectral_norm(A))
    A_eps = A + eps_a * np.eye(n)
    schur = B - C @ np.linalg.solve(A_eps, C.conj().T)
    schur_residual = float(herm_eig(schur).values[0])

    scale = 1.0 + max(spectral_norm(A), spectral_norm(B), spectral_norm(C))
    eps_ratio = 1e-14 * scale * scale
    eps_b = 1e-8 * (1.0 + spectral_norm(B))
    B_eps = B + eps_b * np.eye(m)

    n_samples = samples if samples is not None else 10 * max(n, m) ** 2
    rng = np.random.Generator(np.random.Philox(key=np.array([seed % 2**64, 0], dtype=np.uint64)))

    def ratio_at(u, v) -> float:
        num = abs(inner(C @ u, v)) ** 2
        den = float(np.real(inner(A @ u, u))) * float(np.real(inner(B @ v, v)))
        return _ratio(num, den, eps_ratio)

    best = 0.0
    best_pair = None
    for _ in range(n_samples):
        u = rng.normal(size=n) + 1j * rng.normal(size=n)
        v = rng.normal(size=m) + 1j * rng.normal(size=m)
        u /= np.linalg.norm(u)
        v /= np.linalg.norm(v)
        r = ratio_at(u, v)
        if r > best or best_pair is None:
            best, best_pair = r, (u, v)

    u, v = best_pair
    for _ in range(20):
        cu = C @ u
        if np.linalg.norm(cu) > 0:
            v_new = np.linalg.solve(B_eps, cu)
            nv = np.linalg.norm(v_new)
            if nv > 0:
                v = v_new / nv
        cv = C.conj().T @ v
        if np.linalg.norm(cv) > 0:
            u_new = np.linalg.solve(A_eps, cv)
            nu = np.linalg.norm(u_new)
            if nu > 0:
                u = u_new / nu
        r = ratio_at(u, v)
        if r > best:
            best = r

    return PositivityVerdict(
        is_psd=is_psd,
        min_eig=min_eig,
        schur_residual=schur_residual,
        condition_ii_max_ratio=best,
        sampled_pairs=n_samples,
    )


def majorization_equiv(T, S, samples: int = 40, seed: int = 0) -> tuple[BoundReport, BoundReport]:
    """Both directions of: T T* <= S S*  iff  ||T* x|| <= ||S* x|| for all x.

    Direction one goes from the operator order (eigenvalue route) to
    sampled vectors; direction two goes from a sampled-and-ascended vector
    maximum back to the operator order.  A direction whose premise fails
    is reported as vacuously holding, with the premise recorded in the
    witness.
    """
    T, S = as_matrix(T), as_matrix(S)
    if T.shape[0] != S.shape[0]:
        raise DimensionMismatch("T and S must share their row dimension")
    k = T.shape[0]
    M = S @ S.conj().T - T @ T.conj().T
    m_min = float(herm_eig(M).values[0])

    scale = 1.0 + spectral_norm(T) ** 2 + spectral_norm(S) ** 2
    tol_order = 1e-9 * scale
    tol_vec = 1e-8 * (1.0 + spectral_norm(T) + spectral_norm(S))

    rng = np.random.Generator(np.random.Philox(key=np.array([seed % 2**64, 1], dtype=np.uint64)))
    xs = rng.normal(size=(samples, k)) + 1j * rng.normal(size=(samples, k))
    xs /= np.linalg.norm(xs, axis=1, keepdims=True)

    norm_diffs = np.linalg.norm(xs.conj() @ T, axis=1) - np.linalg.norm(xs.conj() @ S, axis=1)
    sq_diffs = -np.real(np.einsum("ij,jk,ik->i", xs.conj(), M, xs))
    best_idx = int(np.argmax(sq_diffs))

    # Ascend x*(TT* - SS*)x by shifted power iteration (eigensolver-free,
    # keeps this route independent of the operator-order route).
    x = xs[best_idx].copy()
    Mneg = -M
    shift = 1.0 + float(np.linalg.norm(Mneg))
    for _ in range(50):
        y = Mneg @ x + shift * x
        ny = np.linalg.norm(y)
        if ny == 0.0:
            break
        x = y / ny
    ascended = max(float(np.max(sq_diffs)), float(np.real(np.vdot(x, Mneg @ x))))

    if m_min >= -tol_order:
        rep_one = BoundReport(
            name="majorization-order-to-vectors",
            lhs=float(np.max(norm_diffs)),
            rhs=0.0,
            tol=tol_vec,
            witness={"premise_holds": True, "min_eig": m_min},
        )
    else:
        rep_one = BoundReport(
            name="majorization-order-to-vectors",
            lhs=0.0,
            rhs=0.0,
            tol=tol_vec,
            witness={"premise_holds": False, "min_eig": m_min},
        )

    if ascended <= tol_order:
        rep_two = BoundReport(
            name="majorization-vectors-to-order",
            lhs=-m_min,
            rhs=0.0,
            tol=1e-7 * scale,
            witness={"premise_holds": True, "max_sq_diff": ascended},
        )
    else:
        rep_two = BoundReport(
            name="majorization-vectors-to-order",
            lhs=0.0,
            rhs=0.0,
            tol=1e-7 * scale,
            witness={"premise_holds": False, "max_sq_diff": ascended},
        )
    return rep_one, rep_two


def _check_block_psd(A, B, C) -> tuple[np.ndarray, float]:
    """Assemble [[A, C*], [C, B]] and return it with its min eigenvalue."""
    A, B, C = as_matrix(A), as_matrix(B), as_matrix(C)
    Tb = block2(A, C.conj().T, C, B)
    w = herm_eig(Tb).values
    return Tb, float(w[0])


def corner_norm_report(A, B, C) -> BoundReport:
    """||C|| <= ||[[A, C*], [C, B]]|| / 2 for a PSD block."""
    Tb, min_eig = _check_block_psd(A, B, C)
    norm_T = spectral_norm(Tb)
    if min_eig < -1e-9 * (1.0 + norm_T):
        raise NotPSD(f"block minimum eigenvalue {min_eig:.3e}")
    rhs = norm_T / 2.0
    return BoundReport(
        name="corner-half-norm", lhs=spectral_norm(C), rhs=rhs, tol=default_tol(rhs)
    )


def compression_bound_report(A, B, C) -> BoundReport:
    """||T|| <= ||A + U* B U|| for PSD T = [[A, C*], [C, B]], U = polar(C).u.

    Applies only when U U* B = B (plus the polar identities, which the
    construction meets automatically); failing hypotheses raise
    HypothesisUnmet naming the condition.
    """
    Tb, min_eig = _check_block_psd(A, B, C)
    norm_T = spectral_norm(Tb)
    if min_eig < -1e-9 * (1.0 + norm_T):
        raise HypothesisUnmet("block-psd", f"minimum eigenvalue {min_eig:.3e}")
    A, B, C = as_matrix(A), as_matrix(B), as_matrix(C)
    U = polar(C).u
    absC = matrix_abs(C)
    scale_c = 1.0 + spectral_norm(C)
    if spectral_norm(U) > 1.0 + 1e-9:
        raise HypothesisUnmet("contraction", "||U|| > 1")
    if spectral_norm(U @ absC - C) > 1e-9 * scale_c:
        raise HypothesisUnmet("polar-identity", "U |C| != C")
    if spectral_norm(U @ U.conj().T @ B - B) > 1e-7 * (1.0 + spectral_norm(B)):
        raise HypothesisUnmet("range-support", "U U* B != B")
    if spectral_norm(U.conj().T @ C - absC) > 1e-8 * scale_c:
        raise HypothesisUnmet("adjoint-polar-identity", "U* C != |C|")
    rhs = spectral_norm(A + U.conj().T @ B @ U)
    return BoundReport(
        name="compression-bound", lhs=norm_T, rhs=rhs, tol=default_tol(rhs)
    )


def mixed_schwarz(T, x, y, alpha: float) -> BoundReport:
    """|<Tx, y>|^2 <= <|T|**a x, x> <|T*|**(2-a) y, y> for a in [0, 2].

    The fractional powers use the 0**0 := 0 spectral convention, so the
    endpoint a = 0 reads against the range projection of |T|.
    """
    if not 0.0 <= alpha <= 2.0:
        raise AlphaOutOfRange(f"alpha must lie in [0, 2], got {alpha}")
    T = as_matrix(T)
    xv = np.asarray(x, dtype=np.complex128).ravel()
    yv = np.asarray(y, dtype=np.complex128).ravel()
    if xv.size != T.shape[1] or yv.size != T.shape[0]:
        raise DimensionMismatch("x must match cols(T) and y rows(T)")
    lhs = abs(inner(T @ xv, yv)) ** 2
    Pa = matrix_power_psd(matrix_abs(T), alpha)
    Pb = matrix_power_psd(matrix_abs(T.conj().T), 2.0 - alpha)
    ra = max(float(np.real(inner(Pa @ xv, xv))), 0.0)
    rb = max(float(np.real(inner(Pb @ yv, yv))), 0.0)
    rhs = ra * rb
    return BoundReport(
        name=f"mixed-schwarz-{alpha:g}", lhs=lhs, rhs=rhs, tol=default_tol(rhs)
    )


def schwarz_gram(T, x) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """The three 2x2 Gram matrices whose positivity encodes the mixed
    Schwarz inequality at the vector x.

    The first is [[<|T|x,x>, <Tx,x>], [<T*x,x>, <|T*|x,x>]]; the other two
    are its conjugations by the fixed unitaries (1/sqrt2)[[i,1],[-i,1]] and
    (1/sqrt2)[[1,-1],[1,1]], so all three share eigenvalues.
    """
    T = as_matrix(T)
    if T.shape[0] != T.shape[1]:
        raise NotSquare("Gram matrices need a square matrix")
    xv = np.asarray(x, dtype=np.complex128).ravel()
    if float(np.linalg.norm(xv)) == 0.0:
        raise ZeroVector("x must be nonzero")
    a11 = float(np.real(inner(matrix_abs(T) @ xv, xv)))
    a22 = float(np.real(inner(matrix_abs(T.conj().T) @ xv, xv)))
    t = inner(T @ xv, xv)
    gram = np.array([[a11, t], [np.conj(t), a22]], dtype=np.complex128)
    F = np.array([[1j, 1.0], [-1j, 1.0]], dtype=np.complex128) / math.sqrt(2.0)
    G = np.array([[1.0, -1.0], [1.0, 1.0]], dtype=np.complex128) / math.sqrt(2.0)
    return gram, F @ gram @ F.conj().T, G @ gram @ G.conj().T


def _abs_pair(T: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    return matrix_abs(T), matrix_abs(T.conj().T)


def _half_diff_omegas(T: np.ndarray, cfg: SweepConfig | None) -> dict[str, float]:
    """w((|T| - |T*|)/2 +/- i Re T) and the Im T variants."""
    absT, absTs = _abs_pair(T)
    M = (absT - absTs) / 2.0
    reT, imT = re_im_parts(T)
    return {
        "plus-re": _omega(M + 1j * reT, cfg),
        "minus-re": _omega(M - 1j * reT, cfg),
        "plus-im": _omega(M + 1j * imT, cfg),
        "minus-im": _omega(M - 1j * imT, cfg),
    }


def half_difference_reports(T, cfg: SweepConfig | None = None) -> list[BoundReport]:
    """w((|T|-|T*|)/2 +/- i Re T) and the Im variants against
    ||(|T|+|T*|)|| / 2, plus the ||Re T|| and ||Im T|| lower bounds."""
    T = as_matrix(T)
    absT, absTs = _abs_pair(T)
    rhs = spectral_norm(absT + absTs) / 2.0
    reT, imT = re_im_parts(T)
    omegas = _half_diff_omegas(T, cfg)
    reports = [
        BoundReport(name=f"half-diff-{key}", lhs=val, rhs=rhs, tol=default_tol(rhs))
        for key, val in omegas.items()
    ]
    reports.append(
        BoundReport(
            name="half-diff-lower-re",
            lhs=spectral_norm(reT),
            rhs=omegas["plus-re"],
            tol=default_tol(omegas["plus-re"]),
        )
    )
    reports.append(
        BoundReport(
            name="half-diff-lower-im",
            lhs=spectral_norm(imT),
            rhs=omegas["plus-im"],
            tol=default_tol(omegas["plus-im"]),
        )
    )
    return reports


def block_pair_report(A, B, cfg: SweepConfig | None = None) -> BoundReport:
    """max of the two paired-block radii against
    max(||(|A|+|B|)||, ||(|A*|+|B*|)||)."""
    A, B = as_matrix(A), as_matrix(B)
    if A.shape != B.shape or A.shape[0] != A.shape[1]:
        raise DimensionMismatch("A and B must be square matrices of equal size")
    absA, absAs = _abs_pair(A)
    absB, absBs = _abs_pair(B)
    corner = absBs - absAs
    diag = absA - absB
    d = A - B
    alpha1 = _omega(np.block([[corner, d], [-d.conj().T, diag]]), cfg)
    alpha2 = _omega(np.block([[corner, -d], [d.conj().T, diag]]), cfg)
    rhs = max(spectral_norm(absA + absB), spectral_norm(absAs + absBs))
    return BoundReport(
        name="block-pair", lhs=max(alpha1, alpha2), rhs=rhs, tol=default_tol(rhs)
    )


def radius_upper_reports(T, cfg: SweepConfig | None = None) -> list[BoundReport]:
    """Two upper bounds on w(T) from one radius evaluation.

    The implicit bound  w <= s/4 + sqrt(w^2 + d^2/4)/2  with
    s = ||(|T|+|T*|)||, d = ||(|T|-|T*|)||, and the half-sum bound
    w <= s/2.  Neither dominates the other.
    """
    T = as_matrix(T)
    absT, absTs = _abs_pair(T)
    s = spectral_norm(absT + absTs)
    d = spectral_norm(absT - absTs)
    omega = _omega(T, cfg)
    rhs1 = s / 4.0 + 0.5 * math.sqrt(omega**2 + d**2 / 4.0)
    rhs2 = s / 2.0
    return [
        BoundReport(name="implicit-radius-bound", lhs=omega, rhs=rhs1, tol=default_tol(rhs1)),
        BoundReport(name="abs-sum-half-bound", lhs=omega, rhs=rhs2, tol=default_tol(rhs2)),
    ]


def beta_chain_reports(T, cfg: SweepConfig | None = None) -> list[BoundReport]:
    """The chain: the four half-difference radii <= beta1 <= beta2, where
    beta1 = (s + sqrt(d^2 + 4 w^2))/4 and beta2 = (||T|| + w)/2."""
    T = as_matrix(T)
    absT, absTs = _abs_pair(T)
    s = spectral_norm(absT + absTs)
    d = spectral_norm(absT - absTs)
    omega = _omega(T, cfg)
    beta1 = (s + math.sqrt(d**2 + 4.0 * omega**2)) / 4.0
    beta2 = (spectral_norm(T) + omega) / 2.0
    lhs = max(_half_diff_omegas(T, cfg).values())
    return [
        BoundReport(name="beta-chain-omegas-le-beta1", lhs=lhs, rhs=beta1, tol=default_tol(beta1)),
        BoundReport(name="beta-chain-beta1-le-beta2", lhs=beta1, rhs=beta2, tol=default_tol(beta2)),
        BoundReport(name="beta-chain-omegas-le-beta2", lhs=lhs, rhs=beta2, tol=default_tol(beta2)),
    ]


def aluthge_bound_reports(T, cfg: SweepConfig | None = None) -> list[BoundReport]:
    """Radius bounds through the Aluthge transform t = |T|^(1/2) U |T|^(1/2).

    With base = || |T|^2 + (|t|^2 + |t*|^2)/4 || and
    cross = |T| t + t |T|:
      bound 1: w(T) <= sqrt(base + 2 w([[0, cross], [(t*)^2 / 2, 0]])) / 2
      bound 2: w(T) <= sqrt(base + w(cross) + w(t^2)/2) / 2
    plus the mean bound w(T) <= (||T|| + w(t))/2 for comparison.
    """
    T = as_matrix(T)
    res = aluthge(T)
    tilde = res.tilde
    absT = res.polar.abs_factor
    tilde_star = tilde.conj().T
    base_mat = absT @ absT + (tilde_star @ tilde + tilde @ tilde_star) / 4.0
    base = spectral_norm(base_mat)
    cross = absT @ tilde + tilde @ absT
    n = T.shape[0]
    zero = np.zeros((n, n), dtype=np.complex128)
    corner_block = np.block([[zero, cross], [tilde_star @ tilde_star / 2.0, zero]])
    bound1 = 0.5 * math.sqrt(base + 2.0 * _omega(corner_block, cfg))
    bound2 = 0.5 * math.sqrt(base + _omega(cross, cfg) + 0.5 * _omega(tilde @ tilde, cfg))
    omega = _omega(T, cfg)
    mean_bound = 0.5 * (spectral_norm(T) + _omega(tilde, cfg))
    return [
        BoundReport(name="aluthge-bound-1", lhs=omega, rhs=bound1, tol=default_tol(bound1)),
        BoundReport(name="aluthge-bound-2", lhs=omega, rhs=bound2, tol=default_tol(bound2)),
        BoundReport(name="aluthge-mean-bound", lhs=omega, rhs=mean_bound, tol=default_tol(mean_bound)),
    ]

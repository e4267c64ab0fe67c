"""Generalized spin precession for N-level systems, with a Schrödinger cross-check.

An N x N Hermitian Hamiltonian decomposes over the generator basis as

    H = h0 * I + (1/hbar) sum_k h_k S_k,      h_k = (2/hbar) Tr[H S_k],

and a density operator as rho = I/N + (2/hbar**2) sum_k s_k S_k with the
coherence vector s_k = Tr[rho S_k].  The von Neumann equation then closes on
s alone:

    ds_i/dt = (1/hbar) sum_jk f_ijk h_j s_k,

the N-level generalization of spin precession about a magnetic field (at
N = 2 it is literally ds/dt = (h x s)/hbar).  Because f is sparse, the
right-hand side costs O(#triples), not O(N**6).

For pure states the coherence vector comes straight from the amplitudes:

    s_Snm = hbar Re(conj(c_m) c_n),   s_Anm = hbar Im(conj(c_m) c_n),
    s_Dn  = hbar [ sum_{k<n} |c_k|**2 / sqrt(2n(n-1))
                   - sqrt((n-1)/(2n)) |c_n|**2 ],

which lets a trajectory of the precession equation be compared point by
point against the amplitude-level Schrödinger equation
dc/dt = (-i/hbar) H c integrated independently.

Note the projection factors 2/hbar (Hamiltonian) and 2/hbar**2 (density):
they are the ones forced by the basis normalization Tr[S_i S_j]
= (hbar**2/2) d_ij, so that both expansions reconstruct their matrix
exactly.  In the hbar = 2 convention (lambda matrices) they reduce to the
familiar 1/hbar and 1/2.

Only time-independent Hamiltonians are supported.  Integration is a
fixed-step RK4 by default (deterministic, reproducible trajectories) with
an adaptive RK45 available through scipy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.integrate import solve_ivp

from .generators import AlgebraConfig, all_generators
from .structure_constants import F_KIND, ConstantTable

RK4 = "rk4"
RK45 = "rk45"
_METHODS = (RK4, RK45)


@dataclass(frozen=True)
class HamiltonianCoefficients:
    """Generator-basis expansion of a Hermitian matrix: H = h0 I + (1/hbar) h.S."""

    h0: float
    h: np.ndarray
    hbar: float = 1.0


@dataclass(frozen=True)
class IntegrationSpec:
    """Stepping parameters shared by both integrators.

    ``dt`` is the RK4 step and the output grid spacing; ``output_stride``
    thins the recorded samples (the final point is always kept).  ``atol``
    and ``rtol`` apply to the adaptive method only.
    """

    t_final: float
    dt: float
    method: str = RK4
    atol: float = 1e-10
    rtol: float = 1e-10
    output_stride: int = 1

    def __post_init__(self) -> None:
        if not self.dt > 0:
            raise ValueError(f"dt must be positive, got {self.dt}")
        if self.t_final < 0:
            raise ValueError(f"t_final must be >= 0, got {self.t_final}")
        if self.method not in _METHODS:
            raise ValueError(f"method must be one of {_METHODS}, got {self.method!r}")
        if self.output_stride < 1:
            raise ValueError(f"output_stride must be >= 1, got {self.output_stride}")


@dataclass(frozen=True)
class Trajectory:
    """Sampled solution: times (T,) and states (T, dim), one row per sample."""

    times: np.ndarray
    states: np.ndarray


@lru_cache(maxsize=8)
def _generator_stack(cfg: AlgebraConfig) -> np.ndarray:
    stack = np.stack(all_generators(cfg))
    stack.flags.writeable = False
    return stack


@lru_cache(maxsize=8)
def _bloch_maps(n_dim: int) -> tuple[np.ndarray, ...]:
    """Index machinery for the amplitude -> coherence-vector transformation.

    Returns (m_idx, n_idx, s_pos, a_pos, d_pos, weights): 0-based coordinate
    arrays for the off-diagonal pairs, the output slots of the three families,
    and the (N-1, N) weight matrix taking |c|**2 to the Cartan components.
    """
    pairs = [(n, m) for n in range(2, n_dim + 1) for m in range(1, n)]
    m_idx = np.array([m - 1 for n, m in pairs], dtype=np.intp)
    n_idx = np.array([n - 1 for n, m in pairs], dtype=np.intp)
    s_pos = np.array([n * n + 2 * (m - n) - 2 for n, m in pairs], dtype=np.intp)
    a_pos = s_pos + 1
    d_pos = np.array([n * n - 2 for n in range(2, n_dim + 1)], dtype=np.intp)
    weights = np.zeros((n_dim - 1, n_dim))
    for row, n in enumerate(range(2, n_dim + 1)):
        weights[row, : n - 1] = 1.0 / math.sqrt(2.0 * n * (n - 1))
        weights[row, n - 1] = -math.sqrt((n - 1) / (2.0 * n))
    return m_idx, n_idx, s_pos, a_pos, d_pos, weights


def _check_hermitian(mat: np.ndarray, n_dim: int) -> np.ndarray:
    mat = np.asarray(mat, dtype=np.complex128)
    if mat.shape != (n_dim, n_dim):
        raise ValueError(f"expected a {n_dim} x {n_dim} matrix, got shape {mat.shape}")
    scale = max(1.0, float(np.abs(mat).max()))
    if np.abs(mat - mat.conj().T).max() > 1e-12 * scale:
        raise ValueError("matrix is not Hermitian within 1e-12 of its scale")
    return mat


def decompose_hamiltonian(cfg: AlgebraConfig, hamiltonian: np.ndarray) -> HamiltonianCoefficients:
    """Project a Hermitian matrix onto identity plus generators.

    The reconstruction identity is enforced before returning: if the
    coefficients fail to rebuild the input to 1e-12 of its scale, something
    is inconsistent and this raises rather than letting the error propagate
    into a simulation.
    """
    hamiltonian = _check_hermitian(hamiltonian, cfg.n_dim)
    stack = _generator_stack(cfg)
    h0 = float(np.trace(hamiltonian).real) / cfg.n_dim
    h = (2.0 / cfg.hbar) * np.einsum("ab,kba->k", hamiltonian, stack).real
    rebuilt = hamiltonian_from_coefficients(cfg, HamiltonianCoefficients(h0, h, cfg.hbar))
    scale = max(1.0, float(np.abs(hamiltonian).max()))
    if np.abs(rebuilt - hamiltonian).max() > 1e-12 * scale:
        raise RuntimeError("generator expansion failed to reconstruct the input matrix")
    return HamiltonianCoefficients(h0=h0, h=h, hbar=cfg.hbar)


def hamiltonian_from_coefficients(
    cfg: AlgebraConfig, coeffs: HamiltonianCoefficients
) -> np.ndarray:
    """Rebuild the dense matrix h0 I + (1/hbar) sum_k h_k S_k."""
    stack = _generator_stack(cfg)
    out = coeffs.h0 * np.eye(cfg.n_dim, dtype=np.complex128)
    out += np.einsum("k,kab->ab", coeffs.h, stack) / cfg.hbar
    return out


def _check_normalized(amplitudes: np.ndarray, n_dim: int, norm_tol: float) -> np.ndarray:
    amplitudes = np.asarray(amplitudes, dtype=np.complex128)
    if amplitudes.shape != (n_dim,):
        raise ValueError(f"expected a length-{n_dim} state vector, got shape {amplitudes.shape}")
    norm_sq = float(np.sum(np.abs(amplitudes) ** 2))
    if abs(norm_sq - 1.0) > norm_tol:
        raise ValueError(f"state vector norm**2 = {norm_sq} is not 1 within {norm_tol}")
    return amplitudes


def bloch_from_states(cfg: AlgebraConfig, states: np.ndarray) -> np.ndarray:
    """Coherence vectors for a batch of amplitude rows, shape (T, N) -> (T, N**2-1)."""
    states = np.asarray(states, dtype=np.complex128)
    if states.ndim != 2 or states.shape[1] != cfg.n_dim:
        raise ValueError(f"expected shape (T, {cfg.n_dim}), got {states.shape}")
    m_idx, n_idx, s_pos, a_pos, d_pos, weights = _bloch_maps(cfg.n_dim)
    out = np.empty((states.shape[0], cfg.dim))
    cross = np.conj(states[:, m_idx]) * states[:, n_idx]
    out[:, s_pos] = cfg.hbar * cross.real
    out[:, a_pos] = cfg.hbar * cross.imag
    out[:, d_pos] = cfg.hbar * (np.abs(states) ** 2 @ weights.T)
    return out


def state_to_bloch(
    cfg: AlgebraConfig, amplitudes: np.ndarray, *, norm_tol: float = 1e-12
) -> np.ndarray:
    """Coherence vector s_k = Tr[|psi><psi| S_k] of a normalized pure state."""
    amplitudes = _check_normalized(amplitudes, cfg.n_dim, norm_tol)
    return bloch_from_states(cfg, amplitudes[np.newaxis])[0]


def reconstruct_density(cfg: AlgebraConfig, bloch: np.ndarray) -> np.ndarray:
    """Density matrix I/N + (2/hbar**2) sum_k s_k S_k.

    No positivity check: an arbitrary coherence vector may lie outside the
    physical region, which is the caller's business.
    """
    bloch = np.asarray(bloch, dtype=float)
    if bloch.shape != (cfg.dim,):
        raise ValueError(f"expected a length-{cfg.dim} coherence vector, got {bloch.shape}")
    stack = _generator_stack(cfg)
    out = np.eye(cfg.n_dim, dtype=np.complex128) / cfg.n_dim
    out += (2.0 / cfg.hbar**2) * np.einsum("k,kab->ab", bloch, stack)
    return out


def precession_rhs(
    table: ConstantTable, coeffs: HamiltonianCoefficients, bloch: np.ndarray
) -> np.ndarray:
    """Time derivative ds_i/dt = (1/hbar) sum_jk f_ijk h_j s_k.

    Sparse contraction over the canonical triples: each (a, b, c, v) feeds
    all six index permutations of f, which regroup into three scatter-adds.
    """
    if table.kind != F_KIND:
        raise ValueError(f"precession needs an '{F_KIND}' table, got '{table.kind}'")
    a, b, c, v = table.contraction_arrays()
    h = coeffs.h
    s = np.asarray(bloch, dtype=float)
    dim = table.n_dim * table.n_dim - 1
    if h.shape != (dim,) or s.shape != (dim,):
        raise ValueError("coefficient/state length does not match the table dimension")
    ds = np.bincount(a, weights=v * (h[b] * s[c] - h[c] * s[b]), minlength=dim)
    ds += np.bincount(b, weights=v * (h[c] * s[a] - h[a] * s[c]), minlength=dim)
    ds += np.bincount(c, weights=v * (h[a] * s[b] - h[b] * s[a]), minlength=dim)
    return ds / coeffs.hbar


def precession_matrix(table: ConstantTable, coeffs: HamiltonianCoefficients) -> np.ndarray:
    """Dense generator of the linear flow: ds/dt = matrix @ s.

    Same contraction as precession_rhs with the state factored out; the
    integrator uses this so each step is a single mat-vec.
    """
    if table.kind != F_KIND:
        raise ValueError(f"precession needs an '{F_KIND}' table, got '{table.kind}'")
    a, b, c, v = table.contraction_arrays()
    h = coeffs.h
    dim = table.n_dim * table.n_dim - 1
    if h.shape != (dim,):
        raise ValueError("coefficient length does not match the table dimension")
    omega = np.zeros((dim, dim))
    np.add.at(omega, (a, c), v * h[b])
    np.add.at(omega, (a, b), -v * h[c])
    np.add.at(omega, (b, a), v * h[c])
    np.add.at(omega, (b, c), -v * h[a])
    np.add.at(omega, (c, b), v * h[a])
    np.add.at(omega, (c, a), -v * h[b])
    return omega / coeffs.hbar


def _integrate_linear(matrix: np.ndarray, y0: np.ndarray, spec: IntegrationSpec) -> Trajectory:
    """Fixed-step RK4 or scipy RK45 for y' = matrix @ y, sampled on the dt grid."""
    if spec.t_final == 0.0:
        return Trajectory(times=np.zeros(1), states=y0[np.newaxis].copy())
    n_full = int(math.floor(spec.t_final / spec.dt + 1e-9))
    remainder = spec.t_final - n_full * spec.dt
    has_tail = remainder > 1e-12 * max(spec.t_final, spec.dt)
    record = [step for step in range(0, n_full + 1, spec.output_stride)]
    if record[-1] != n_full:
        record.append(n_full)
    times = [step * spec.dt for step in record]
    if has_tail:
        times.append(spec.t_final)

    if spec.method == RK45:
        sol = solve_ivp(
            lambda t, y: matrix @ y,
            (0.0, spec.t_final),
            y0,
            method="RK45",
            t_eval=np.asarray(times),
            atol=spec.atol,
            rtol=spec.rtol,
        )
        if not sol.success:
            raise RuntimeError(f"adaptive integration failed: {sol.message}")
        return Trajectory(times=sol.t.copy(), states=sol.y.T.copy())

    samples = [y0.copy()]
    y = y0.copy()
    record_set = set(record)
    for step in range(1, n_full + 1):
        y = _rk4_step(matrix, y, spec.dt)
        if step in record_set:
            samples.append(y.copy())
    if has_tail:
        y = _rk4_step(matrix, y, remainder)
        samples.append(y.copy())
    return Trajectory(times=np.asarray(times), states=np.asarray(samples))


def _rk4_step(matrix: np.ndarray, y: np.ndarray, dt: float) -> np.ndarray:
    k1 = matrix @ y
    k2 = matrix @ (y + 0.5 * dt * k1)
    k3 = matrix @ (y + 0.5 * dt * k2)
    k4 = matrix @ (y + dt * k3)
    return y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def integrate_bloch(
    table: ConstantTable,
    coeffs: HamiltonianCoefficients,
    s0: np.ndarray,
    spec: IntegrationSpec,
) -> Trajectory:
    """Integrate the precession equation from coherence vector s0."""
    s0 = np.asarray(s0, dtype=float)
    dim = table.n_dim * table.n_dim - 1
    if s0.shape != (dim,):
        raise ValueError(f"expected a length-{dim} coherence vector, got {s0.shape}")
    omega = precession_matrix(table, coeffs)
    return _integrate_linear(omega, s0, spec)


def integrate_tdse(
    cfg: AlgebraConfig,
    hamiltonian: np.ndarray,
    psi0: np.ndarray,
    spec: IntegrationSpec,
) -> Trajectory:
    """Integrate the amplitude equation dc/dt = (-i/hbar) H c."""
    hamiltonian = _check_hermitian(hamiltonian, cfg.n_dim)
    psi0 = _check_normalized(psi0, cfg.n_dim, 1e-12)
    generator = (-1j / cfg.hbar) * hamiltonian
    return _integrate_linear(generator, psi0, spec)


def bloch_tdse_deviation(
    cfg: AlgebraConfig,
    table: ConstantTable,
    hamiltonian: np.ndarray,
    psi0: np.ndarray,
    spec: IntegrationSpec,
    *,
    norm_tol: float = 1e-6,
) -> float:
    """Max componentwise gap between the precession trajectory and the mapped
    amplitude trajectory, both started from the same pure state.

    ``norm_tol`` bounds how much amplitude-norm drift is tolerated before the
    mapping is considered meaningless.
    """
    coeffs = decompose_hamiltonian(cfg, hamiltonian)
    s0 = state_to_bloch(cfg, psi0)
    bloch = integrate_bloch(table, coeffs, s0, spec)
    amp = integrate_tdse(cfg, hamiltonian, psi0, spec)
    if not np.array_equal(bloch.times, amp.times):
        raise RuntimeError("integrators produced different sample grids")
    norms = np.sum(np.abs(amp.states) ** 2, axis=1)
    drift = float(np.abs(norms - 1.0).max())
    if drift > norm_tol:
        raise RuntimeError(f"amplitude norm drifted by {drift:.3e} (> {norm_tol:.1e})")
    mapped = bloch_from_states(cfg, amp.states)
    return float(np.abs(bloch.states - mapped).max())

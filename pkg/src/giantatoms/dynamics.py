"""
Time evolution and steady states of a materialized Lindblad generator.

Propagators are dense matrix exponentials. Steady states come from the full
spectrum, which also decides whether the steady state is unique.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.linalg

from .liouvillian import LindbladGenerator, unvec, vec

HERMITICITY_TOL = 1e-10
TRACE_TOL = 1e-10
POSITIVITY_TOL = 1e-9
ZERO_EIGENVALUE_TOL = 1e-10
RESIDUAL_TOL = 1e-9
DEFAULT_STEP = 0.05


class InvariantViolation(RuntimeError):
    """A state left the set of density matrices beyond tolerance."""


class NoUniqueSteadyState(RuntimeError):
    """
    The generator has no unique, attracting steady state.

    ``n_zero`` counts eigenvalues with ``|lambda| < tol``; ``n_imaginary``
    counts the remaining eigenvalues within ``tol`` of the imaginary axis
    (undamped oscillations).
    """

    def __init__(self, n_zero: int, n_imaginary: int):
        self.n_zero = n_zero
        self.n_imaginary = n_imaginary
        super().__init__(
            f"no unique steady state: {n_zero} zero eigenvalue(s), "
            f"{n_imaginary} undamped oscillating mode(s)")


@dataclass(frozen=True)
class Trajectory:
    times: np.ndarray
    states: np.ndarray = field(repr=False)

    def __len__(self) -> int:
        return len(self.times)

    def __iter__(self):
        return iter(zip(self.times, self.states))

    @property
    def final(self) -> np.ndarray:
        return self.states[-1]


def check_density_matrix(rho: np.ndarray, where: str = "state") -> None:
    """Raise :class:`InvariantViolation` unless ``rho`` is a valid density matrix."""
    herm = np.abs(rho - rho.conj().T).max()
    if herm > HERMITICITY_TOL:
        raise InvariantViolation(f"{where}: not Hermitian (max |rho - rho^+| = {herm:.3e})")
    tr = np.trace(rho)
    if abs(tr - 1) > TRACE_TOL:
        raise InvariantViolation(f"{where}: trace {tr:.12g} != 1")
    low = np.linalg.eigvalsh(0.5 * (rho + rho.conj().T))[0]
    if low < -POSITIVITY_TOL:
        raise InvariantViolation(f"{where}: negative eigenvalue {low:.3e}")


def propagator(gen: LindbladGenerator, dt: float) -> np.ndarray:
    """``exp(L dt)`` by scaling and squaring."""
    return scipy.linalg.expm(gen.matrix * dt)


def evolve(gen: LindbladGenerator, rho0: np.ndarray, times, check: bool = True) -> Trajectory:
    """
    Snapshots of ``rho(t)`` on an increasing time grid starting from ``rho0``
    at ``times[0]``.

    Equal steps share one cached propagator, so a uniform grid costs a single
    exponential and one matrix-vector product per snapshot.
    """
    times = np.asarray(times, dtype=float)
    if times.ndim != 1 or len(times) == 0:
        raise ValueError("times must be a non-empty 1-D grid")
    if np.any(np.diff(times) <= 0):
        raise ValueError("time grid must be strictly increasing")
    rho0 = np.asarray(rho0, dtype=complex)
    if rho0.shape != (gen.dim, gen.dim):
        raise ValueError(f"initial state has shape {rho0.shape}, expected {(gen.dim, gen.dim)}")
    if check:
        check_density_matrix(rho0, "initial state")

    cache: dict[float, np.ndarray] = {}
    states = np.empty((len(times), gen.dim, gen.dim), dtype=complex)
    v = vec(rho0)
    states[0] = rho0
    for k in range(1, len(times)):
        # grids built with linspace jitter in the last bits
        dt = float(np.round(times[k] - times[k - 1], 12))
        if dt not in cache:
            cache[dt] = propagator(gen, dt)
        v = cache[dt] @ v
        states[k] = unvec(v, gen.dim)
        if check:
            check_density_matrix(states[k], f"t = {times[k]:.6g}")
    return Trajectory(times, states)


def uniform_grid(t_final: float, dt: float = DEFAULT_STEP, t0: float = 0.0) -> np.ndarray:
    n = int(round((t_final - t0) / dt))
    if n < 0:
        raise ValueError("t_final must not precede t0")
    return t0 + dt * np.arange(n + 1)


def evolve_to(gen: LindbladGenerator, rho0: np.ndarray, t: float) -> np.ndarray:
    """Single jump to time ``t``."""
    return unvec(propagator(gen, t) @ vec(rho0), gen.dim)


def generator_spectrum(gen: LindbladGenerator) -> np.ndarray:
    """All eigenvalues, sorted by real part, largest first."""
    w = np.linalg.eigvals(gen.matrix)
    return w[np.lexsort((w.imag, -w.real))]


def spectral_gap(gen: LindbladGenerator, tol: float | None = None) -> float:
    """Smallest decay rate among the non-stationary modes."""
    tol = ZERO_EIGENVALUE_TOL * _xi(gen) if tol is None else tol
    w = generator_spectrum(gen)
    rest = w[np.abs(w) >= tol]
    return float(-rest.real.max()) if len(rest) else np.inf


def _xi(gen):
    return gen.model.xi if gen.model is not None else 1.0


def steady_state(gen: LindbladGenerator, tol: float | None = None) -> np.ndarray:
    """
    Unique steady state of ``gen``.

    Raises :class:`NoUniqueSteadyState` when more than one eigenvalue sits
    at zero, or when a non-zero eigenvalue lies on the imaginary axis.
    """
    tol = ZERO_EIGENVALUE_TOL * _xi(gen) if tol is None else tol
    w = np.linalg.eigvals(gen.matrix)
    zero = np.abs(w) < tol
    n_zero = int(zero.sum())
    n_imag = int((~zero & (np.abs(w.real) < tol)).sum())
    if n_zero != 1 or n_imag:
        raise NoUniqueSteadyState(n_zero, n_imag)

    d = gen.dim
    # null vector with the trace fixed to one, by least squares
    trace_row = vec(np.eye(d)).conj()[None, :]
    A = np.vstack([gen.matrix, trace_row])
    b = np.zeros(d * d + 1, dtype=complex)
    b[-1] = 1.0
    x = scipy.linalg.lstsq(A, b, lapack_driver="gelsy")[0]
    rho = unvec(x, d)
    rho = 0.5 * (rho + rho.conj().T)
    rho /= np.trace(rho).real
    residual = np.abs(gen.matrix @ vec(rho)).max()
    if residual > RESIDUAL_TOL * _xi(gen):
        raise InvariantViolation(f"steady-state residual {residual:.3e} too large")
    check_density_matrix(rho, "steady state")
    return rho


def basis_state(dim: int, index: int) -> np.ndarray:
    rho = np.zeros((dim, dim), dtype=complex)
    rho[index, index] = 1.0
    return rho


def all_excited(n_atoms: int) -> np.ndarray:
    return basis_state(2 ** n_atoms, 0)


def ground(n_atoms: int) -> np.ndarray:
    return basis_state(2 ** n_atoms, 2 ** n_atoms - 1)

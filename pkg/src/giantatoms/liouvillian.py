"""
Rotating-frame Hamiltonian and Lindblad superoperator on the 2**N atomic space.

Conventions
-----------
* Single-atom basis is ``(|e>, |g>)``; atom 0 is the most significant factor,
  so basis index 0 is ``|e...e>`` and the last is ``|g...g>``.
* Density matrices are vectorized by stacking columns (Fortran order), so
  ``vec(A X B) = kron(B.T, A) @ vec(X)``.
* Detuning enters as ``Delta * P_n`` per excited atom.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .coefficients import CouplingModel
from .geometry import Species

# |g><e| in the (e, g) basis
SIGMA_MINUS = np.array([[0, 0], [1, 0]], dtype=complex)


@dataclass(frozen=True)
class DriveSpec:
    """
    Coherent drive in the frame rotating at the drive frequency.

    ``eta`` is a single amplitude shared by every atom, or one value per atom.
    A-species atoms carry phase 0 and B-species atoms carry ``phi``.
    ``detuning`` is atom frequency minus drive frequency.
    """
    eta: float | tuple[float, ...] = 0.0
    phi: float = 0.0
    detuning: float = 0.0

    def __post_init__(self):
        eta = self.eta
        if np.ndim(eta):
            eta = tuple(float(e) for e in eta)
            if any(e < 0 for e in eta):
                raise ValueError("drive amplitudes must be non-negative")
        else:
            eta = float(eta)
            if eta < 0:
                raise ValueError("drive amplitude must be non-negative")
        object.__setattr__(self, "eta", eta)
        object.__setattr__(self, "phi", float(np.mod(self.phi, 2 * np.pi)))
        object.__setattr__(self, "detuning", float(self.detuning))

    def amplitudes(self, n_atoms: int) -> np.ndarray:
        if isinstance(self.eta, tuple):
            if len(self.eta) != n_atoms:
                raise ValueError(f"{len(self.eta)} drive amplitudes for {n_atoms} atoms")
            return np.array(self.eta)
        return np.full(n_atoms, self.eta)

    def phases(self, species) -> np.ndarray:
        return np.array([0.0 if Species(s).is_a else self.phi for s in species])


@dataclass(frozen=True)
class OperatorBasis:
    n_atoms: int
    lowering: tuple[np.ndarray, ...] = field(repr=False)
    projectors: tuple[np.ndarray, ...] = field(repr=False)

    @property
    def dim(self) -> int:
        return 2 ** self.n_atoms

    def raising(self, n: int) -> np.ndarray:
        return self.lowering[n].conj().T

    def sigma_z(self, n: int) -> np.ndarray:
        """+1 on excited, -1 on ground."""
        return 2 * self.projectors[n] - np.eye(self.dim)


@lru_cache(maxsize=None)
def operator_basis(n_atoms: int) -> OperatorBasis:
    lowering = []
    for n in range(n_atoms):
        op = np.ones((1, 1), dtype=complex)
        for k in range(n_atoms):
            op = np.kron(op, SIGMA_MINUS if k == n else np.eye(2))
        op.setflags(write=False)
        lowering.append(op)
    projectors = []
    for op in lowering:
        p = op.conj().T @ op
        p.setflags(write=False)
        projectors.append(p)
    return OperatorBasis(n_atoms, tuple(lowering), tuple(projectors))


def build_hamiltonian(model: CouplingModel, drive: DriveSpec) -> np.ndarray:
    """
    ``H = sum_n Delta P_n + sum_nm h_nm L_n^+ L_m + sum_n eta_n (e^{-i phi_n} L_n^+ + h.c.)``
    """
    basis = operator_basis(model.n_atoms)
    h = model.coupling_matrix
    eta = drive.amplitudes(model.n_atoms)
    phase = np.exp(-1j * drive.phases(model.species))
    H = np.zeros((basis.dim, basis.dim), dtype=complex)
    for n in range(model.n_atoms):
        up = basis.raising(n)
        H += drive.detuning * basis.projectors[n]
        for m in range(model.n_atoms):
            if h[n, m] != 0:
                H += h[n, m] * (up @ basis.lowering[m])
        if eta[n] != 0:
            drive_term = eta[n] * phase[n] * up
            H += drive_term + drive_term.conj().T
    return H


def vec(rho: np.ndarray) -> np.ndarray:
    return np.asarray(rho).reshape(-1, order="F")


def unvec(v: np.ndarray, dim: int | None = None) -> np.ndarray:
    if dim is None:
        dim = int(round(np.sqrt(v.shape[-1])))
    return np.asarray(v).reshape(v.shape[:-1] + (dim, dim), order="F")


def left(a: np.ndarray) -> np.ndarray:
    """Superoperator of ``X -> a X``."""
    return np.kron(np.eye(a.shape[0]), a)


def right(b: np.ndarray) -> np.ndarray:
    """Superoperator of ``X -> X b``."""
    return np.kron(b.T, np.eye(b.shape[0]))


@dataclass(frozen=True)
class LindbladGenerator:
    """Materialized generator acting on column-stacked density matrices."""
    matrix: np.ndarray = field(repr=False)
    dim: int
    model: CouplingModel | None = None
    drive: DriveSpec | None = None

    def __call__(self, rho: np.ndarray) -> np.ndarray:
        return unvec(self.matrix @ vec(rho), self.dim)


def build_generator(H: np.ndarray, gamma: np.ndarray, basis: OperatorBasis,
                    model: CouplingModel | None = None,
                    drive: DriveSpec | None = None) -> LindbladGenerator:
    """
    Superoperator of
    ``rho -> -i[H, rho] + sum_nm gamma_nm (2 L_n rho L_m^+ - L_m^+ L_n rho - rho L_m^+ L_n)``.
    """
    gamma = np.asarray(gamma)
    d = basis.dim
    if H.shape != (d, d) or gamma.shape != (basis.n_atoms, basis.n_atoms):
        raise ValueError("Hamiltonian / dissipation shapes do not match the basis")
    tol = 1e-12 * (model.xi if model is not None else 1.0)
    if np.iscomplexobj(gamma):
        if np.abs(gamma.imag).max(initial=0.0) > tol:
            raise ValueError("dissipation matrix must be real")
        gamma = gamma.real
    if np.abs(gamma - gamma.T).max(initial=0.0) > tol:
        raise ValueError("dissipation matrix must be symmetric")
    if np.abs(H - H.conj().T).max() > 1e-12 * max(1.0, np.abs(H).max()):
        raise ValueError("Hamiltonian is not Hermitian")
    eye = np.eye(d)
    S = -1j * (np.kron(eye, H) - np.kron(H.T, eye))
    L = basis.lowering
    for n in range(basis.n_atoms):
        for m in range(basis.n_atoms):
            rate = gamma[n, m]
            if rate == 0:
                continue
            K = L[m].conj().T @ L[n]
            # vec(L_n X L_m^+) = kron(conj(L_m), L_n) vec(X)
            S += rate * (2 * np.kron(L[m].conj(), L[n])
                         - np.kron(eye, K) - np.kron(K.T, eye))
    S.setflags(write=False)
    return LindbladGenerator(S, d, model, drive)


def liouvillian(model: CouplingModel, drive: DriveSpec | None = None) -> LindbladGenerator:
    """Generator for ``model`` under ``drive`` (undriven, resonant by default)."""
    drive = drive or DriveSpec()
    H = build_hamiltonian(model, drive)
    return build_generator(H, model.dissipation_matrix, operator_basis(model.n_atoms),
                           model, drive)

"""
Expectation values, reduced states, tomography tables and concurrence.

Basis ordering follows :mod:`giantatoms.liouvillian`: atom 0 most significant,
``|e>`` before ``|g>``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .dynamics import check_density_matrix
from .liouvillian import operator_basis

SIGMA_Y = np.array([[0, -1j], [1j, 0]])
_SPIN_FLIP = np.kron(SIGMA_Y, SIGMA_Y)
# eigenvalues of rho below this are treated as exact zeros
ROUNDOFF_EIGENVALUE = 1e-14


def n_qubits(rho: np.ndarray) -> int:
    n = int(round(np.log2(rho.shape[0])))
    if rho.shape != (2 ** n, 2 ** n):
        raise ValueError(f"shape {rho.shape} is not a multi-qubit operator")
    return n


def expectation(rho: np.ndarray, op: np.ndarray) -> complex:
    if rho.shape != op.shape:
        raise ValueError(f"dimension mismatch: {rho.shape} vs {op.shape}")
    return complex(np.einsum("ij,ji->", rho, op))


def populations(rho: np.ndarray) -> np.ndarray:
    return np.real(np.diag(rho)).copy()


def excited_average(rho: np.ndarray) -> float:
    """
    Mean of ``<sigma_z>`` over all atoms, with ``sigma_z = +1`` on ``|e>``.

    For two atoms this is ``(<sigma_z> + <Gamma_z>) / 2``.
    """
    basis = operator_basis(n_qubits(rho))
    return float(np.mean([expectation(rho, basis.sigma_z(n)).real
                          for n in range(basis.n_atoms)]))


def partial_trace(rho: np.ndarray, keep) -> np.ndarray:
    """Reduced state on the atoms in ``keep`` (kept in ascending order)."""
    n = n_qubits(rho)
    keep = sorted(set(int(k) for k in keep))
    if not keep:
        raise ValueError("keep set must not be empty")
    if keep[0] < 0 or keep[-1] >= n:
        raise IndexError(f"atom indices {keep} out of range for {n} atoms")
    traced = [k for k in range(n) if k not in keep]
    t = rho.reshape([2] * (2 * n))
    row = list(range(n))
    col = [i + n for i in range(n)]
    for k in traced:
        col[k] = row[k]
    out_idx = [row[k] for k in keep] + [col[k] for k in keep]
    reduced = np.einsum(t, row + col, out_idx)
    d = 2 ** len(keep)
    return reduced.reshape(d, d)


def concurrence(rho: np.ndarray, check: bool = True) -> float:
    """
    Wootters concurrence ``max(0, l1 - l2 - l3 - l4)`` of a two-qubit state.

    The ``l_i`` are the square roots of the eigenvalues of
    ``rho (sy x sy) rho* (sy x sy)``. They are computed as the singular values
    of ``X^T (sy x sy) X`` with ``rho = X X^+``, which avoids taking square
    roots of round-off eigenvalues.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ValueError("concurrence needs a 4x4 two-qubit density matrix")
    if check:
        check_density_matrix(rho, "concurrence input")
    w, v = np.linalg.eigh(0.5 * (rho + rho.conj().T))
    keep = w > ROUNDOFF_EIGENVALUE * max(w[-1], 1.0)
    X = v[:, keep] * np.sqrt(w[keep])
    lam = np.zeros(4)
    sv = np.linalg.svd(X.T @ _SPIN_FLIP @ X, compute_uv=False)
    lam[:len(sv)] = sv
    return float(max(0.0, lam[0] - lam[1:].sum()))


def pair_concurrence(rho: np.ndarray, i: int, j: int) -> float:
    return concurrence(partial_trace(rho, (i, j)), check=False)


def basis_labels(atom_labels) -> list[str]:
    """
    Product-state labels, e.g. ``['e_Ae_B', 'e_Ag_B', 'g_Ae_B', 'g_Ag_B']``.
    """
    return ["".join(f"{s}_{lab}" for s, lab in zip(states, atom_labels))
            for states in itertools.product("eg", repeat=len(atom_labels))]


@dataclass(frozen=True)
class TomographyTable:
    labels: tuple[str, ...]
    matrix: np.ndarray = field(repr=False)

    def entry(self, row: str, col: str) -> complex:
        return complex(self.matrix[self.labels.index(row), self.labels.index(col)])

    def rows(self) -> list[tuple[str, str, float, float]]:
        return [(r, c, float(self.matrix[i, j].real), float(self.matrix[i, j].imag))
                for i, r in enumerate(self.labels)
                for j, c in enumerate(self.labels)]


def tomography(rho: np.ndarray, atom_labels=None) -> TomographyTable:
    n = n_qubits(rho)
    if atom_labels is None:
        atom_labels = [str(k) for k in range(n)]
    if len(atom_labels) != n:
        raise ValueError(f"{len(atom_labels)} labels for {n} atoms")
    return TomographyTable(tuple(basis_labels(atom_labels)), np.array(rho, dtype=complex))

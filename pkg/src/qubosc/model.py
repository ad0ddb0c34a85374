"""Physical parameters, product basis and Hamiltonian builders.

Conventions (the wire-level contract everything else relies on):

* hbar = 1, time in ns, angular frequencies in rad/ns.  The stock
  parameter set omega0 = 5, omega_r = 6, g0 = 0.1 is used verbatim as
  angular frequencies.
* Product basis |qubits, n>: flat index = photons + (n_max + 1) * code,
  where code is the qubit excitation bitmask with qubit 0 as the least
  significant bit.  For one qubit and n_max = 1 the ordering is
  (|g,0>, |g,1>, |e,0>, |e,1>).
* All operators are dense complex matrices; the dimensions of interest
  (2^N * (n_max + 1) with small N) never justify sparse storage.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "SystemParams",
    "BasisIndex",
    "coupling",
    "coupling_operator",
    "build_h0",
    "build_hI",
    "build_h",
    "h0_energies",
    "basis_state",
    "ground_state",
    "all_basis_labels",
    "check_hermitian",
    "check_unitary",
]


@dataclass(frozen=True)
class SystemParams:
    """Physical parameters of the qubit/resonator system.

    omega0_list holds one transition frequency per qubit; omega_r is the
    resonator frequency, g0 the coupling amplitude and varpi_s the
    switching (modulation) frequency of the coupling, all in rad/ns.
    """

    omega0_list: tuple[float, ...] = (5.0,)
    omega_r: float = 6.0
    g0: float = 0.1
    varpi_s: float = 11.0
    photon_cutoff: int = 1
    n_qubits: int = field(default=0)  # 0 means "infer from omega0_list"

    def __post_init__(self):
        omega0 = tuple(float(w) for w in np.atleast_1d(self.omega0_list))
        object.__setattr__(self, "omega0_list", omega0)
        if self.n_qubits == 0:
            object.__setattr__(self, "n_qubits", len(omega0))
        if self.n_qubits != len(omega0):
            raise ValueError(
                f"n_qubits={self.n_qubits} does not match {len(omega0)} qubit frequencies"
            )
        if self.n_qubits < 1:
            raise ValueError("need at least one qubit")
        if self.photon_cutoff < 1:
            raise ValueError("photon_cutoff must be >= 1")
        if any(w <= 0 for w in omega0) or self.omega_r <= 0 or self.varpi_s <= 0:
            raise ValueError("frequencies must be strictly positive")
        if self.g0 < 0:
            raise ValueError("g0 must be non-negative")

    @property
    def dim(self) -> int:
        """Hilbert-space dimension 2^N * (n_max + 1)."""
        return (2**self.n_qubits) * (self.photon_cutoff + 1)

    @property
    def period(self) -> float:
        """Modulation period T = 2*pi / varpi_s in ns."""
        return 2.0 * math.pi / self.varpi_s

    @property
    def omega_plus(self) -> float:
        """Sum frequency omega0 + omega_r of the first qubit and the mode.

        Resonant switching (varpi_s = omega_plus) maximizes pair creation
        out of |g,0>.  Only meaningful as written for a single qubit.
        """
        return self.omega0_list[0] + self.omega_r


@dataclass(frozen=True)
class BasisIndex:
    """Label of a product-basis state: one excitation bit per qubit plus a
    photon number."""

    qubit_bits: tuple[int, ...]
    photons: int

    def __post_init__(self):
        bits = tuple(int(b) for b in np.atleast_1d(self.qubit_bits))
        object.__setattr__(self, "qubit_bits", bits)
        if any(b not in (0, 1) for b in bits):
            raise ValueError("qubit_bits entries must be 0 (ground) or 1 (excited)")
        if self.photons < 0:
            raise ValueError("photon number must be non-negative")

    def flat_index(self, params: SystemParams) -> int:
        """Position in the flat basis ordering (qubit 0 = least significant bit)."""
        if len(self.qubit_bits) != params.n_qubits:
            raise ValueError("qubit_bits length does not match n_qubits")
        if self.photons > params.photon_cutoff:
            raise ValueError("photon number exceeds cutoff")
        code = sum(b << i for i, b in enumerate(self.qubit_bits))
        return self.photons + (params.photon_cutoff + 1) * code

    @staticmethod
    def from_flat(index: int, params: SystemParams) -> "BasisIndex":
        if not 0 <= index < params.dim:
            raise ValueError(f"flat index {index} out of range for dim {params.dim}")
        n_ph = params.photon_cutoff + 1
        code, photons = divmod(index, n_ph)
        bits = tuple((code >> i) & 1 for i in range(params.n_qubits))
        return BasisIndex(bits, photons)


def all_basis_labels(params: SystemParams) -> list[BasisIndex]:
    """Every basis label in flat-index order."""
    return [BasisIndex.from_flat(i, params) for i in range(params.dim)]


def coupling(params: SystemParams, t: float):
    """Time-dependent coupling strength g0 * cos(varpi_s * t); accepts arrays."""
    return params.g0 * np.cos(params.varpi_s * t)


def h0_energies(params: SystemParams) -> np.ndarray:
    """Diagonal of the free Hamiltonian: omega_r*n + sum_i omega0_i*bit_i."""
    energies = np.empty(params.dim)
    for label in all_basis_labels(params):
        e = params.omega_r * label.photons
        e += sum(w * b for w, b in zip(params.omega0_list, label.qubit_bits))
        energies[label.flat_index(params)] = e
    return energies


def build_h0(params: SystemParams) -> np.ndarray:
    """Free Hamiltonian, diagonal in the product basis."""
    return np.diag(h0_energies(params)).astype(complex)


def coupling_operator(params: SystemParams) -> np.ndarray:
    """Time-independent coupling operator sum_i sigma_x^i (a^dag + a).

    Real symmetric; connects |..., b_i, n> to |..., 1-b_i, n +- 1> with the
    usual sqrt Fock factors.
    """
    n_ph = params.photon_cutoff + 1
    quad = np.zeros((n_ph, n_ph))
    for n in range(n_ph - 1):
        quad[n, n + 1] = quad[n + 1, n] = math.sqrt(n + 1)

    sx = np.array([[0.0, 1.0], [1.0, 0.0]])
    id2 = np.eye(2)
    op = np.zeros((params.dim, params.dim))
    for i in range(params.n_qubits):
        # Qubit factors ordered most-significant first so that qubit 0 is
        # the innermost (least significant) slot, photons innermost overall.
        factors = [sx if j == i else id2 for j in reversed(range(params.n_qubits))]
        qubit_part = factors[0]
        for f in factors[1:]:
            qubit_part = np.kron(qubit_part, f)
        op += np.kron(qubit_part, quad)
    return op.astype(complex)


def build_hI(params: SystemParams, t: float) -> np.ndarray:
    """Interaction Hamiltonian g(t) * sum_i sigma_x^i (a^dag + a)."""
    return coupling(params, t) * coupling_operator(params)


def build_h(params: SystemParams, t: float) -> np.ndarray:
    """Full Hamiltonian H(t) = H0 + HI(t)."""
    return build_h0(params) + build_hI(params, t)


def basis_state(params: SystemParams, label: BasisIndex) -> np.ndarray:
    """Unit amplitude on a single basis label."""
    psi = np.zeros(params.dim, dtype=complex)
    psi[label.flat_index(params)] = 1.0
    return psi


def ground_state(params: SystemParams) -> np.ndarray:
    """|g...g, 0>, the joint ground state of H0."""
    return basis_state(params, BasisIndex((0,) * params.n_qubits, 0))


def check_hermitian(m: np.ndarray, tol: float = 1e-12) -> float:
    """Max |M - M^dag|; raises if above tol."""
    dev = float(np.max(np.abs(m - m.conj().T)))
    if dev > tol:
        raise ValueError(f"matrix not Hermitian: max deviation {dev:.3e} > {tol:.1e}")
    return dev


def check_unitary(m: np.ndarray, tol: float = 1e-10) -> float:
    """Max |M^dag M - I|; raises if above tol."""
    dev = float(np.max(np.abs(m.conj().T @ m - np.eye(m.shape[0]))))
    if dev > tol:
        raise ValueError(f"matrix not unitary: max deviation {dev:.3e} > {tol:.1e}")
    return dev

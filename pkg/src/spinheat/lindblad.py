"""Dissipators and Liouvillian assembly for thermally driven spin chains.

Two dissipator styles are provided.  The "global" style builds jump
operators between eigenstates of the full chain Hamiltonian, so each bath
sees the true transition frequencies of the interacting system.  The
"local" style damps a single spin with its bare raising/lowering operators
at a fixed frequency, ignoring the inter-spin coupling.

Superoperators use column-stacking vectorization: vec(rho) stacks the
columns of rho (numpy order='F'), so vec(A rho B) = (B^T kron A) vec(rho)
and the coherent part reads -i(I kron H - H^T kron I).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .spinops import (
    ChainModel,
    HermitianOperator,
    LOWERING,
    PAULI_X,
    SpectralDecomposition,
    SpinChainSpec,
    embed_matrix,
    spectral_decompose,
)

# Relative tolerance for grouping Bohr frequencies into one jump operator.
DEGENERACY_TOL = 1e-9

# exp(x) overflows double precision near x ~ 709; beyond this the thermal
# occupation is far below what a double can resolve anyway.
_OVERFLOW_EXPONENT = 700.0

# Jump matrices whose entries all stay below this are dropped entirely.
_NEGLIGIBLE_ENTRY = 1e-12


class DissipatorStyle(enum.Enum):
    GLOBAL = "global"
    LOCAL = "local"


@dataclass(frozen=True)
class BathSpec:
    """One thermal reservoir attached to one spin.

    The bath spectrum is ohmic, J(omega) = kappa * omega.  For the local
    style, `local_frequency` is the frequency at which the spectrum and the
    thermal occupation are evaluated; zero selects the continuous
    omega -> 0 limit where both flip rates equal kappa * temperature.
    """

    site: int
    temperature: float
    kappa: float
    style: DissipatorStyle
    local_frequency: float | None = None

    def __post_init__(self):
        if self.site < 0:
            raise ValueError("site must be a nonnegative index")
        if self.temperature < 0:
            raise ValueError("temperature must be nonnegative")
        if self.kappa <= 0:
            raise ValueError("kappa must be positive")
        if self.style is DissipatorStyle.LOCAL:
            if self.local_frequency is None or self.local_frequency < 0:
                raise ValueError("local style requires local_frequency >= 0")


@dataclass(frozen=True)
class JumpOperator:
    """A positive Bohr frequency and the transition matrix attached to it."""

    frequency: float
    matrix: np.ndarray

    def __post_init__(self):
        if self.frequency <= 0:
            raise ValueError("jump operators carry strictly positive frequencies")


@dataclass(frozen=True)
class Liouvillian:
    """Full generator plus the per-bath pieces needed for heat currents.

    `matrix` is the d^2 x d^2 generator; `h_part` the coherent part and
    `bath_parts[k]` the dissipator of `baths[k]`, all in the same
    column-stacking convention.  `hamiltonian` keeps the d x d system
    Hamiltonian so downstream code can compute energies and populations.
    """

    dim: int
    matrix: np.ndarray
    h_part: np.ndarray
    bath_parts: tuple[np.ndarray, ...]
    baths: tuple[BathSpec, ...]
    hamiltonian: np.ndarray


def vectorize(rho: np.ndarray) -> np.ndarray:
    """Column-stack a density matrix into a length d^2 vector."""
    return np.asarray(rho).reshape(-1, order="F")


def unvectorize(vec: np.ndarray, dim: int) -> np.ndarray:
    """Inverse of `vectorize`."""
    return np.asarray(vec).reshape(dim, dim, order="F")


def trace_row(dim: int) -> np.ndarray:
    """Row functional r with r @ vec(rho) = trace(rho)."""
    row = np.zeros(dim * dim, dtype=complex)
    row[:: dim + 1] = 1.0
    return row


def bose_einstein(frequency: float, temperature: float) -> float:
    """Mean thermal occupation 1 / (exp(frequency/temperature) - 1).

    Exact zero at zero temperature; evaluated through expm1 so it stays
    accurate for frequency/temperature ratios from 1e-12 up to 700, above
    which the occupation is treated as zero.
    """
    if frequency <= 0:
        raise ValueError("bose_einstein requires frequency > 0")
    if temperature < 0:
        raise ValueError("temperature must be nonnegative")
    if temperature == 0:
        return 0.0
    x = frequency / temperature
    if x > _OVERFLOW_EXPONENT:
        return 0.0
    return 1.0 / math.expm1(x)


def dissipation_superoperator(op: np.ndarray) -> np.ndarray:
    """Unit-rate GKSL channel D[op] as a column-stacking superoperator."""
    d = op.shape[0]
    eye = np.eye(d, dtype=complex)
    opd_op = op.conj().T @ op
    return (
        np.kron(op.conj(), op)
        - 0.5 * np.kron(eye, opd_op)
        - 0.5 * np.kron(opd_op.T, eye)
    )


def hamiltonian_superoperator(H: np.ndarray) -> np.ndarray:
    """Coherent part -i[H, .] in column-stacking form."""
    d = H.shape[0]
    eye = np.eye(d, dtype=complex)
    return -1.0j * (np.kron(eye, H) - np.kron(H.T, eye))


def global_jump_operators(
    decomp: SpectralDecomposition,
    coupling_op: HermitianOperator,
    degeneracy_tol: float = DEGENERACY_TOL,
) -> list[JumpOperator]:
    """Eigenbasis jump operators of a coupling operator, one per gap.

    Every ordered eigenstate pair with a positive energy gap contributes
    its matrix element of `coupling_op`; pairs whose gaps agree within
    `degeneracy_tol * max(|energy|)` are summed into a single operator, so
    degenerate transitions share one jump matrix.  Operators whose entries
    are all negligible (below 1e-12) are dropped.  Matrices are returned in
    the original basis, sorted by ascending frequency.
    """
    energies = decomp.energies
    vectors = decomp.eigenvectors
    d = decomp.dim
    if coupling_op.dim != d:
        raise ValueError("coupling operator dimension does not match decomposition")

    scale = float(np.max(np.abs(energies))) if d else 0.0
    tol = degeneracy_tol * max(scale, 1e-300)

    coupling_eig = vectors.conj().T @ coupling_op.matrix @ vectors
    gaps = energies[None, :] - energies[:, None]  # gaps[i, j] = E_j - E_i

    positive = sorted({(i, j) for i in range(d) for j in range(d) if gaps[i, j] > tol},
                      key=lambda ij: (gaps[ij], ij))
    jumps: list[JumpOperator] = []
    group: list[tuple[int, int]] = []

    def flush(pairs: list[tuple[int, int]]):
        if not pairs:
            return
        mask = np.zeros((d, d), dtype=bool)
        for i, j in pairs:
            mask[i, j] = True
        a_eig = np.where(mask, coupling_eig, 0.0)
        if np.max(np.abs(a_eig)) <= _NEGLIGIBLE_ENTRY:
            return
        matrix = vectors @ a_eig @ vectors.conj().T
        freq = float(np.mean([gaps[p] for p in pairs]))
        jumps.append(JumpOperator(frequency=freq, matrix=matrix))

    for pair in positive:
        if group and gaps[pair] - gaps[group[0]] > tol:
            flush(group)
            group = []
        group.append(pair)
    flush(group)
    return jumps


def global_dissipator(
    jumps: list[JumpOperator], bath: BathSpec, dim: int | None = None
) -> np.ndarray:
    """Thermal dissipator built from eigenbasis jump operators.

    Each jump at frequency w contributes an emission channel with rate
    kappa*w*(1+n_w) and an absorption channel with rate kappa*w*n_w.  An
    empty jump list yields the zero superoperator (the coupling drives no
    transition at all), in which case `dim` must be given.
    """
    if bath.style is not DissipatorStyle.GLOBAL:
        raise ValueError("global_dissipator requires a bath with global style")
    if not jumps:
        if dim is None:
            raise ValueError("dim is required when there are no jump operators")
        return np.zeros((dim * dim, dim * dim), dtype=complex)
    d = jumps[0].matrix.shape[0]
    part = np.zeros((d * d, d * d), dtype=complex)
    for jump in jumps:
        spectrum = bath.kappa * jump.frequency
        occupation = bose_einstein(jump.frequency, bath.temperature)
        part += spectrum * (1.0 + occupation) * dissipation_superoperator(jump.matrix)
        part += spectrum * occupation * dissipation_superoperator(jump.matrix.conj().T)
    return part


def local_dissipator(site: int, n_spins: int, bath: BathSpec) -> np.ndarray:
    """Single-spin thermal dissipator with bare lowering/raising operators.

    At frequency nu > 0 the decay and excitation rates are kappa*nu*(1+n)
    and kappa*nu*n.  At nu = 0 the continuous limit is used: both rates
    equal kappa*temperature (and vanish at zero temperature).
    """
    if bath.style is not DissipatorStyle.LOCAL:
        raise ValueError("local_dissipator requires a bath with local style")
    nu = bath.local_frequency
    lowering = embed_matrix(LOWERING, site, n_spins)
    raising = lowering.conj().T
    if nu > 0:
        occupation = bose_einstein(nu, bath.temperature)
        down = bath.kappa * nu * (1.0 + occupation)
        up = bath.kappa * nu * occupation
    else:
        down = up = bath.kappa * bath.temperature
    return down * dissipation_superoperator(lowering) + up * dissipation_superoperator(
        raising
    )


def standard_baths(
    spec: SpinChainSpec,
    kappa: float,
    t_left: float,
    t_right: float,
    style: DissipatorStyle,
) -> list[BathSpec]:
    """Left and right reservoirs in the canonical transport arrangement.

    The left bath sits on site 0 and the right bath on the last site.  For
    the local style the left bath is evaluated at the bare splitting h; the
    right bath uses h as well on the XY chain but frequency zero on the
    Ising chain, whose right spin carries no field of its own.
    """
    if style is DissipatorStyle.GLOBAL:
        nu_left = nu_right = None
    elif spec.model is ChainModel.ISING_ZZ:
        nu_left, nu_right = spec.field_h, 0.0
    else:
        nu_left = nu_right = spec.field_h
    return [
        BathSpec(0, t_left, kappa, style, nu_left),
        BathSpec(spec.n_spins - 1, t_right, kappa, style, nu_right),
    ]


def assemble_liouvillian(
    H: HermitianOperator,
    baths: list[BathSpec],
    degeneracy_tol: float = DEGENERACY_TOL,
) -> Liouvillian:
    """Coherent part plus one dissipator per bath, kept separately.

    The per-bath pieces are retained in `bath_parts` (same order as
    `baths`) because the heat current through each reservoir is computed
    from its own dissipator alone.
    """
    if not baths:
        raise ValueError("at least one bath is required")
    d = H.dim
    n_spins = d.bit_length() - 1
    if 2 ** n_spins != d:
        raise ValueError("Hamiltonian dimension must be a power of two")
    for bath in baths:
        if bath.site >= n_spins:
            raise ValueError(f"bath site {bath.site} out of range for {n_spins} spins")

    decomp = None
    parts = []
    for bath in baths:
        if bath.style is DissipatorStyle.GLOBAL:
            if decomp is None:
                decomp = spectral_decompose(H)
            coupling = HermitianOperator(embed_matrix(PAULI_X, bath.site, n_spins))
            jumps = global_jump_operators(decomp, coupling, degeneracy_tol)
            parts.append(global_dissipator(jumps, bath, dim=d))
        else:
            parts.append(local_dissipator(bath.site, n_spins, bath))

    h_part = hamiltonian_superoperator(H.matrix)
    matrix = h_part + sum(parts)
    return Liouvillian(
        dim=d,
        matrix=matrix,
        h_part=h_part,
        bath_parts=tuple(parts),
        baths=tuple(baths),
        hamiltonian=H.matrix.copy(),
    )

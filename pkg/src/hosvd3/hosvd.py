"""Higher order singular value decomposition (HOSVD) for complex tensors.

For an order-N tensor X, there exist unitary factors U(1), ..., U(N) and a
core tensor T with X = (U(1) x ... x U(N)) T, where the core's same-mode
subtensors are mutually orthogonal (all-orthogonality) and their norms,
the n-mode singular values, are ordered descending.  The factors are the
eigenvector bases of the per-mode Gram matrices of the unfoldings, which
for a normalized quantum state are its one-body reduced density matrices,
so the decomposition simultaneously diagonalizes all of them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NumericalError
from .smalllinalg import gram, hermitian_eig
from .tensor import ComplexTensor, inner, multilinear_transform, norm, subtensor, unfold


@dataclass(frozen=True)
class HosvdResiduals:
    """Diagnostics: relative reconstruction error and max all-orthogonality violation."""

    reconstruction: float
    all_orthogonality: float


@dataclass(frozen=True, eq=False)
class HosvdResult:
    """Factors U(n), core tensor, per-mode singular values, and diagnostics.

    ``spectra[n-1]`` holds the mode-n singular values, descending; their
    squares are the eigenvalues of gram(unfold(input, n)).  Modes whose
    Gram spectrum has a gap at or below the decomposition tolerance are
    listed in ``degenerate_modes`` (1-based); core element patterns are
    gauge-dependent there.
    """

    factors: tuple[np.ndarray, ...]
    core: ComplexTensor
    spectra: tuple[np.ndarray, ...]
    residuals: HosvdResiduals
    degenerate_modes: frozenset[int]


def mode_singular_values(core: ComplexTensor, mode: int) -> np.ndarray:
    """Norms of the mode-n subtensors: entry i is norm(subtensor(core, mode, i))."""
    if not 1 <= mode <= core.order:
        raise ValueError(f"mode {mode} out of range 1..{core.order}")
    rows = np.moveaxis(core.data, mode - 1, 0).reshape(core.dims[mode - 1], -1)
    return np.sqrt(np.sum(np.abs(rows) ** 2, axis=1))


def verify_all_orthogonality(core: ComplexTensor) -> float:
    """Max over modes n and index pairs a != b of |<subtensor(n,a), subtensor(n,b)>|.

    For a 2x2x2 core this evaluates exactly the three off-diagonal sums
    conj(t_1jk) t_2jk of the one-body density matrices.
    """
    worst = 0.0
    for mode in range(1, core.order + 1):
        size = core.dims[mode - 1]
        if core.order == 1:
            continue
        slices = [subtensor(core, mode, i) for i in range(1, size + 1)]
        for a in range(size):
            for b in range(a + 1, size):
                worst = max(worst, abs(inner(slices[a], slices[b])))
    return worst


def hosvd(t: ComplexTensor, tol: float = 1e-10) -> HosvdResult:
    """Compute the HOSVD of a nonzero complex tensor.

    Per mode n, the factor U(n) collects the eigenvectors of
    gram(unfold(t, n)) ordered by descending eigenvalue; the core is then
    t transformed by the conjugate transposes.  `tol` controls hermiticity
    validation inside the eigensolver and the degeneracy flags.
    """
    total = norm(t)
    if total == 0.0:
        raise DomainError("HOSVD of the zero tensor is undefined")

    factors = []
    degenerate = set()
    for mode in range(1, t.order + 1):
        g = gram(unfold(t, mode).entries)
        try:
            eig = hermitian_eig(g, tol=tol)
        except NumericalError as exc:
            raise NumericalError(
                f"eigensolver failed in mode {mode}: {exc}", mode=mode
            ) from exc
        factors.append(eig.unitary)
        if eig.degenerate:
            degenerate.add(mode)

    core = multilinear_transform(t, [u.conj().T for u in factors])
    spectra = tuple(mode_singular_values(core, m) for m in range(1, t.order + 1))

    recon = multilinear_transform(core, factors)
    rec_residual = float(np.linalg.norm((recon.data - t.data).ravel())) / total
    ao_residual = verify_all_orthogonality(core)

    return HosvdResult(
        factors=tuple(factors),
        core=core,
        spectra=spectra,
        residuals=HosvdResiduals(rec_residual, ao_residual),
        degenerate_modes=frozenset(degenerate),
    )


def reconstruct(r: HosvdResult) -> ComplexTensor:
    """Reassemble the original tensor: multilinear_transform(core, factors)."""
    return multilinear_transform(r.core, r.factors)

"""Spectral decomposition of the three-mode drift and the closed-form
propagator.

The first moments of the three coupled modes, arranged in the mixed vector
u = (a1*, a2, a3), evolve as u(tau) = M(tau) u(0) with M(tau) = exp(A tau).
The eigenvalues of the generator A are lambda_j = i(omega_j - delta) -
gamma_plus, where omega_j are the three roots of the characteristic cubic

    [w - alpha] [w^2 - beta^2] + 1 + i rho gamma_minus = 0,

with alpha = delta + i(kappa - gamma_plus) and beta = 1/rho + i gamma_minus.
Each entry of M is a three-term exponential sum over the roots; the six
independent entries f11, f22, f33, f12, f13, f23 fill M with the sign
pattern

    M = [[ f11,  f12, f13],
         [-f12,  f22, f23],
         [ f13, -f23, f33]].
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateSpectrum
from .model import DerivedParams, ModelParams, derive

# order of the independent propagator entries in coefficient tables
F_ORDER = ("f11", "f22", "f33", "f12", "f13", "f23")


@dataclass(frozen=True)
class Spectrum:
    """Roots of the characteristic cubic and the eigensystem built on them.

    Columns of ``s_inverse`` are the right eigenvectors of the generator;
    ``s`` is its inverse (det(s) = 1 with the normalization used here).
    ``deltas[j]`` is the product of root differences (w_j - w_k)(w_j - w_m),
    the partial-fraction denominator of the closed-form propagator.
    """

    params: ModelParams
    derived: DerivedParams
    omegas: np.ndarray
    lambdas: np.ndarray
    s: np.ndarray
    s_inverse: np.ndarray
    deltas: np.ndarray


@dataclass(frozen=True)
class Propagator:
    """First-moment propagator M(tau) for the mixed vector (a1*, a2, a3)."""

    tau: float
    m: np.ndarray


def cubic_coefficients(dp: DerivedParams, rho: float) -> np.ndarray:
    """Monic coefficients [1, c2, c1, c0] of the characteristic cubic."""
    gm = dp.gamma_minus
    return np.array(
        [
            1.0,
            -dp.alpha,
            -dp.beta**2,
            dp.alpha * dp.beta**2 + 1.0 + 1j * rho * gm,
        ],
        dtype=complex,
    )


def solve_cubic(coeffs: np.ndarray) -> np.ndarray:
    """Roots of a monic complex cubic, given [1, c2, c1, c0].

    Solved as eigenvalues of the companion matrix, then polished with one
    Newton step per root.  Returned sorted by ascending imaginary part,
    ties broken by ascending real part.
    """
    coeffs = np.asarray(coeffs, dtype=complex)
    companion = np.zeros((3, 3), dtype=complex)
    companion[0, :] = -coeffs[1:]
    companion[1, 0] = 1.0
    companion[2, 1] = 1.0
    roots = np.linalg.eigvals(companion)

    c2, c1, c0 = coeffs[1], coeffs[2], coeffs[3]
    value = ((roots + c2) * roots + c1) * roots + c0
    slope = (3.0 * roots + 2.0 * c2) * roots + c1
    safe = np.abs(slope) > 0
    roots = roots - np.where(safe, value / np.where(safe, slope, 1.0), 0.0)

    order = np.lexsort((roots.real, roots.imag))
    return roots[order]


def cubic_roots(params: ModelParams) -> np.ndarray:
    """Three complex roots of the characteristic cubic, sorted by ascending
    imaginary part with ties broken by ascending real part."""
    return solve_cubic(cubic_coefficients(derive(params), params.rho))


def unstable_root(omegas: np.ndarray) -> complex:
    """Root with the minimum imaginary part (the growing one when gain > 0)."""
    omegas = np.asarray(omegas)
    return complex(omegas[np.lexsort((omegas.real, omegas.imag))[0]])


def gain(omegas: np.ndarray, gamma_plus: float) -> float:
    """Exponential growth rate g = -Im(unstable root) - gamma_plus."""
    return -unstable_root(omegas).imag - gamma_plus


def degeneracy_threshold(omegas: np.ndarray) -> float:
    """Default minimum root separation below which the closed forms are
    numerically unusable."""
    return 1e-8 * max(1.0, float(np.max(np.abs(omegas))))


def _min_separation(omegas: np.ndarray) -> float:
    return min(
        abs(omegas[0] - omegas[1]),
        abs(omegas[0] - omegas[2]),
        abs(omegas[1] - omegas[2]),
    )


def eigensystem(
    omegas: np.ndarray, params: ModelParams, degeneracy_tol: float | None = None
) -> tuple[np.ndarray, np.ndarray]:
    """Similarity transform (S, S^-1) diagonalizing the drift generator.

    Column j of S^-1 is the eigenvector

        a_j = N_j ( i sqrt(rho/2) (w_j + beta),
                   -i sqrt(rho/2) (w_j - beta),
                    beta^2 - w_j^2 ),

    with N_1 = 1/(w_2 - w_3) and cyclic; this normalization gives
    det(S) = 1.  Raises DegenerateSpectrum when two roots are closer than
    the threshold.
    """
    omegas = np.asarray(omegas, dtype=complex)
    if degeneracy_tol is None:
        degeneracy_tol = degeneracy_threshold(omegas)
    if _min_separation(omegas) <= degeneracy_tol:
        raise DegenerateSpectrum(
            f"root separation {_min_separation(omegas):.3e} below "
            f"threshold {degeneracy_tol:.3e}"
        )
    dp = derive(params)
    coupling = np.sqrt(params.rho / 2.0)
    norms = np.array(
        [
            1.0 / (omegas[1] - omegas[2]),
            1.0 / (omegas[0] - omegas[2]),
            1.0 / (omegas[0] - omegas[1]),
        ]
    )
    s_inverse = np.column_stack(
        [
            norms[j]
            * np.array(
                [
                    1j * coupling * (omegas[j] + dp.beta),
                    -1j * coupling * (omegas[j] - dp.beta),
                    dp.beta**2 - omegas[j] ** 2,
                ]
            )
            for j in range(3)
        ]
    )
    return np.linalg.inv(s_inverse), s_inverse


def spectrum(params: ModelParams, degeneracy_tol: float | None = None) -> Spectrum:
    """Solve the cubic and assemble the full spectral data."""
    dp = derive(params)
    omegas = cubic_roots(params)
    s, s_inverse = eigensystem(omegas, params, degeneracy_tol)
    lambdas = 1j * (omegas - params.delta) - dp.gamma_plus
    deltas = np.array(
        [
            (omegas[0] - omegas[1]) * (omegas[0] - omegas[2]),
            (omegas[1] - omegas[0]) * (omegas[1] - omegas[2]),
            (omegas[2] - omegas[0]) * (omegas[2] - omegas[1]),
        ]
    )
    return Spectrum(
        params=params,
        derived=dp,
        omegas=omegas,
        lambdas=lambdas,
        s=s,
        s_inverse=s_inverse,
        deltas=deltas,
    )


def propagator_coefficients(spec: Spectrum) -> np.ndarray:
    """Exponential-sum coefficients F of the six propagator entries.

    Row k (ordered as F_ORDER) satisfies
    f_k(tau) = sum_j F[k, j] * exp(lambda_j * tau).
    """
    w = spec.omegas
    dp = spec.derived
    rho = spec.params.rho
    coupling = np.sqrt(rho / 2.0)
    numerators = np.array(
        [
            (w - dp.alpha) * (w + dp.beta) - rho / 2.0,  # f11
            (w - dp.alpha) * (w - dp.beta) + rho / 2.0,  # f22
            w**2 - dp.beta**2,  # f33
            np.full(3, -rho / 2.0, dtype=complex),  # f12
            -1j * coupling * (w + dp.beta),  # f13
            1j * coupling * (w - dp.beta),  # f23
        ]
    )
    return numerators / spec.deltas[np.newaxis, :]


def _assemble(entries: np.ndarray) -> np.ndarray:
    f11, f22, f33, f12, f13, f23 = entries
    return np.array(
        [
            [f11, f12, f13],
            [-f12, f22, f23],
            [f13, -f23, f33],
        ]
    )


def propagator(spec: Spectrum, tau: float) -> Propagator:
    """Closed-form M(tau); M(0) is the identity."""
    if tau < 0:
        raise ValueError(f"tau must be >= 0, got {tau!r}")
    coeffs = propagator_coefficients(spec)
    entries = coeffs @ np.exp(spec.lambdas * tau)
    return Propagator(tau=tau, m=_assemble(entries))


def effective_generator(spec: Spectrum) -> np.ndarray:
    """Generator reconstructed from the spectral data: S^-1 diag(lambda) S.

    Its exponential reproduces the closed-form propagator; its trace is
    -(kappa + gamma1 + gamma2) - 2 i delta.
    """
    return spec.s_inverse @ np.diag(spec.lambdas) @ spec.s


def drift_generator(params: ModelParams) -> np.ndarray:
    """Generator of the first-moment flow, directly from the parameters.

    Equals effective_generator(spectrum(params)) whenever the spectrum is
    non-degenerate, but needs no diagonalization, so it also covers
    degenerate spectra (used by the quadrature fallback and the moment-ODE
    integrator).  With the coupling removed the modes decay at exactly
    gamma1, gamma2 and kappa.
    """
    dp = derive(params)
    coupling = np.sqrt(params.rho / 2.0)
    return np.array(
        [
            [-params.gamma1 - 1j * dp.delta_minus, 0.0, coupling],
            [0.0, -params.gamma2 - 1j * dp.delta_plus, -coupling],
            [coupling, coupling, -params.kappa],
        ],
        dtype=complex,
    )

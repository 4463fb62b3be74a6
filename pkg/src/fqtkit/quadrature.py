"""Quadrature transforms and analytic-signal representations.

Two ways of building a complex extension ``real + j imag`` of a real signal:

* FSAS ("Fourier-Singh" analytic signal) from a DCT/DST pair. The cosine
  family keeps the signal as the real part and synthesizes its DCT-i
  coefficients on the paired sine basis (the cosine quadrature transform,
  :func:`fcqt`). The sine family keeps the signal as the imaginary part and
  synthesizes its DST-i coefficients on the paired cosine basis
  (:func:`fsqt`). The spectrum is one-sided, but real and imaginary parts are
  in general *not* orthogonal.
* GAS (Gabor analytic signal), the DFT construction that doubles positive
  bins and drops negative ones, with separate even/odd-length branches.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import transforms as tr
from .errors import DomainError, SizeError
from .signals import Signal, as_samples
from .transforms import Family, TransformVariant

__all__ = ["AnalyticSignal", "fcqt", "fsqt", "fsas", "gas"]

GAS = "gas"
FSAS_COSINE = "fsas-cosine"
FSAS_SINE = "fsas-sine"


@dataclass(frozen=True, eq=False)
class AnalyticSignal:
    """Paired real/imaginary samples plus how they were made."""

    real: np.ndarray
    imag: np.ndarray
    fs: float = 1.0
    kind: str = GAS
    variant: Optional[int] = None

    def __post_init__(self):
        if self.real.shape != self.imag.shape:
            raise SizeError("real and imaginary parts differ in length")

    def __len__(self) -> int:
        return self.real.size

    @property
    def z(self) -> np.ndarray:
        return self.real + 1j * self.imag

    @property
    def label(self) -> str:
        return self.kind if self.variant is None else f"{self.kind}{self.variant}"


def _check_variant(variant) -> int:
    if isinstance(variant, bool) or not isinstance(variant, (int, np.integer)) or not 1 <= variant <= 8:
        raise DomainError(f"variant must be an integer in 1..8, got {variant!r}")
    return int(variant)


def _fs_of(x, fs):
    if fs is None:
        return x.fs if isinstance(x, Signal) else 1.0
    return float(fs)


def fcqt(x, variant: int = 2, method: str = "auto") -> np.ndarray:
    """Cosine quadrature transform: DCT-i coefficients resynthesized on the sine basis.

    Parameters
    ----------
    x : array_like or Signal
        Real samples, length N.
    variant : int
        DCT type, 1..8.
    method : {"auto", "dense", "fast"}
        ``"fast"`` (FFT) is available for variant 2 only; ``"auto"`` picks it
        there and the dense matrices elsewhere.

    Returns
    -------
    ndarray
        Length-N quadrature samples. A constant input maps to zeros.
    """
    variant = _check_variant(variant)
    x = as_samples(x)
    aux = TransformVariant(Family.AUX_SINE, variant)
    n = x.size

    if method == "auto":
        method = "fast" if variant == 2 else "dense"
    if method == "fast":
        if variant != 2:
            raise DomainError("the fast path exists for variant 2 only")
        return tr.dct2_exp_synthesis(tr.fast_dct2(x)).imag
    if method != "dense":
        raise DomainError(f"unknown method {method!r}")

    cmat = tr.build_matrix(TransformVariant(Family.DCT, variant), n)
    smat = tr.build_matrix(aux, n)
    return smat.entries @ tr.forward(cmat, x)


def fsqt(x, variant: int = 2) -> np.ndarray:
    """Sine quadrature transform: DST-i coefficients resynthesized on the cosine basis.

    For variants 1 and 5 the DST lives on indices ``1..N-1``: ``x[0]`` does not
    enter the transform and the returned sample 0 is zero.
    """
    variant = _check_variant(variant)
    x = as_samples(x)
    n = x.size
    smat_variant = TransformVariant(Family.DST, variant)
    if smat_variant.offset == 1 and n < 3:
        raise SizeError(f"fsqt variant {variant} needs at least 3 samples, got {n}")
    smat = tr.build_matrix(smat_variant, n)
    cmat = tr.build_matrix(smat_variant.partner, n)
    coeffs = tr.forward(smat, tr.restrict(smat, x))
    return tr.embed(cmat, cmat.entries @ coeffs)


def fsas(x, family: str = "cosine", variant: int = 2, fs: Optional[float] = None,
         method: str = "auto") -> AnalyticSignal:
    """FSAS representation of `x` from the DCT (``"cosine"``) or DST (``"sine"``) family."""
    fs = _fs_of(x, fs)
    samples = as_samples(x)
    if family == "cosine":
        quad = fcqt(samples, variant, method=method)
        return AnalyticSignal(samples.copy(), quad, fs, FSAS_COSINE, int(variant))
    if family == "sine":
        if method not in ("auto", "dense"):
            raise DomainError("the sine family has no fast path")
        quad = fsqt(samples, variant)
        return AnalyticSignal(quad, samples.copy(), fs, FSAS_SINE, int(variant))
    raise DomainError(f"family must be 'cosine' or 'sine', got {family!r}")


def gas(x, fs: Optional[float] = None) -> AnalyticSignal:
    """Gabor analytic signal via the length-N DFT.

    With ``X = fft(x) / N``::

        even N:  z[n] = X[0] + sum_{k=1}^{N/2-1} 2 X[k] e^{j2pi kn/N} + X[N/2] (-1)^n
        odd N:   z[n] = X[0] + sum_{k=1}^{(N-1)/2} 2 X[k] e^{j2pi kn/N}

    The real part returned is `x` itself.
    """
    fs = _fs_of(x, fs)
    x = as_samples(x)
    n = x.size
    spectrum = np.fft.fft(x) / n
    weights = np.zeros(n)
    weights[0] = 1.0
    if n % 2 == 0:
        weights[1:n // 2] = 2.0
        weights[n // 2] = 1.0
    else:
        weights[1:(n + 1) // 2] = 2.0
    z = np.fft.ifft(spectrum * weights) * n
    return AnalyticSignal(x.copy(), z.imag.copy(), fs, GAS, None)

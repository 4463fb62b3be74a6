"""Separable 2-D DCT-2 and the 2-D FSAS built on it.

The quadrature image applies the sine basis along the first axis (rows,
index ``m``/``k``) and the cosine basis along the second (``n``/``l``). For
the other orientation transpose the input.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, SizeError
from .transforms import dct2_exp_synthesis, fast_dct2, fast_idct2, sine_analysis

__all__ = ["AnalyticImage", "dct2d", "idct2d", "fsas2d", "recover_coeffs"]


def _as_image(img) -> np.ndarray:
    arr = np.asarray(img, dtype=np.float64)
    if arr.ndim != 2:
        raise SizeError(f"expected a 2-D matrix, got shape {arr.shape}")
    if min(arr.shape) < 2:
        raise SizeError(f"both dimensions must be >= 2, got {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise DomainError("image contains non-finite values")
    return arr


@dataclass(frozen=True, eq=False)
class AnalyticImage:
    real: np.ndarray
    imag: np.ndarray

    @property
    def z(self) -> np.ndarray:
        return self.real + 1j * self.imag


def dct2d(img) -> np.ndarray:
    img = _as_image(img)
    return fast_dct2(fast_dct2(img, axis=1), axis=0)


def idct2d(coeffs) -> np.ndarray:
    coeffs = _as_image(coeffs)
    return fast_idct2(fast_idct2(coeffs, axis=0), axis=1)


def fsas2d(img) -> AnalyticImage:
    """Real part is `img`; imaginary part synthesizes its 2-D DCT-2 with sine along axis 0."""
    img = _as_image(img)
    coeffs = dct2d(img)
    along_n = fast_idct2(coeffs, axis=1)
    quad = dct2_exp_synthesis(along_n, axis=0).imag
    return AnalyticImage(img.copy(), quad)


def recover_coeffs(quad) -> np.ndarray:
    """Analyze a quadrature image back to coefficients.

    Equal to the DCT-2 coefficients for ``k >= 1``; row ``k = 0`` is zero
    because the sine basis vanishes there.
    """
    quad = _as_image(quad)
    return fast_dct2(sine_analysis(quad, axis=0), axis=1)

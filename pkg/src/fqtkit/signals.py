"""Uniformly sampled real signals and the single validation point for samples."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, SizeError


def as_samples(x, min_length: int = 2) -> np.ndarray:
    """Return `x` as a 1-D float64 array, rejecting short or non-finite input.

    `Signal` instances are unwrapped. Kernels downstream assume the checks made
    here and do not repeat them.
    """
    if isinstance(x, Signal):
        x = x.samples
    arr = np.asarray(x, dtype=np.float64)
    if arr.ndim != 1:
        raise SizeError(f"expected a 1-D sample sequence, got shape {arr.shape}")
    if arr.size < min_length:
        raise SizeError(f"need at least {min_length} samples, got {arr.size}")
    if not np.all(np.isfinite(arr)):
        raise DomainError("signal contains non-finite samples")
    return arr


@dataclass(frozen=True)
class Signal:
    """Real-valued time series with its sample rate in Hz."""

    samples: np.ndarray
    fs: float = 1.0

    def __post_init__(self):
        arr = as_samples(self.samples)
        arr.flags.writeable = False
        object.__setattr__(self, "samples", arr)
        if not (np.isfinite(self.fs) and self.fs > 0):
            raise DomainError(f"sample rate must be positive, got {self.fs}")
        object.__setattr__(self, "fs", float(self.fs))

    def __len__(self) -> int:
        return self.samples.size

    @property
    def time(self) -> np.ndarray:
        return np.arange(self.samples.size) / self.fs


def demean(x) -> np.ndarray:
    """Remove the sample mean, making the cosine quadrature map invertible."""
    arr = as_samples(x)
    return arr - arr.mean()

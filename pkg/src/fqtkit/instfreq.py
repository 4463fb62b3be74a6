"""Instantaneous amplitude, phase and frequency of an analytic signal."""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, SizeError
from .quadrature import AnalyticSignal

__all__ = ["DiffScheme", "PolarTrace", "polar", "inst_freq", "to_hz", "polar_trace"]

AMP_FLOOR = 1e-12


class DiffScheme(enum.Enum):
    FFD = "ffd"
    BFD = "bfd"
    CFD = "cfd"


def _scheme(scheme) -> DiffScheme:
    if isinstance(scheme, DiffScheme):
        return scheme
    try:
        return DiffScheme(str(scheme).lower())
    except ValueError:
        raise DomainError(f"unknown difference scheme {scheme!r}") from None


@dataclass(frozen=True, eq=False)
class PolarTrace:
    ia: np.ndarray
    iphase: np.ndarray
    ifreq: np.ndarray
    fs: float = 1.0

    @property
    def freq_hz(self) -> np.ndarray:
        return to_hz(self.ifreq, self.fs)


def _as_complex(z) -> np.ndarray:
    if isinstance(z, AnalyticSignal):
        return z.z
    return np.asarray(z, dtype=np.complex128)


def polar(z, amp_floor: float = AMP_FLOOR):
    """Return ``(ia, iphase)`` with ``iphase = atan2(imag, real)`` in ``(-pi, pi]``.

    Samples whose amplitude is below ``amp_floor * max(ia)`` get phase 0;
    ``atan2`` of rounding noise would otherwise be arbitrary.
    """
    z = _as_complex(z)
    if z.size == 0:
        raise SizeError("empty analytic signal")
    ia = np.hypot(z.real, z.imag)
    iphase = np.arctan2(z.imag, z.real)
    # atan2 returns -pi for (negative real, -0.0 imag); fold onto +pi.
    iphase = np.where(iphase <= -np.pi, np.pi, iphase)
    peak = ia.max()
    iphase = np.where(ia <= amp_floor * peak, 0.0, iphase)
    return ia, iphase


def _wrap(d: np.ndarray) -> np.ndarray:
    # (-pi, pi]; exact +-pi steps land on +pi rather than on the sign of sin(pi) rounding.
    return np.pi - np.mod(np.pi - d, 2 * np.pi)


def inst_freq(iphase, scheme="ffd") -> np.ndarray:
    """Instantaneous frequency in radians/sample from a wrapped phase sequence.

    Phase steps are wrapped into ``(-pi, pi]``; a negative step then has ``pi``
    added, which keeps every output in ``[0, pi]``. FFD falls back to BFD at the
    last sample, BFD to FFD at the first; CFD uses both at the ends. CFD
    averages the two wrapped one-sided steps, i.e. the central difference of
    the locally unwrapped phase.
    """
    scheme = _scheme(scheme)
    phi = np.asarray(iphase, dtype=np.float64)
    minimum = 3 if scheme is DiffScheme.CFD else 2
    if phi.ndim != 1 or phi.size < minimum:
        raise SizeError(f"{scheme.value} needs at least {minimum} phase samples")

    step = _wrap(np.diff(phi))  # step[i] = phi[i+1] - phi[i]
    fwd = np.append(step, step[-1])
    bwd = np.insert(step, 0, step[0])
    if scheme is DiffScheme.FFD:
        d = fwd
    elif scheme is DiffScheme.BFD:
        d = bwd
    else:
        d = 0.5 * (fwd + bwd)
        d[0] = fwd[0]
        d[-1] = bwd[-1]
    return np.where(d < 0, d + np.pi, d)


def to_hz(ifreq, fs: float) -> np.ndarray:
    """Convert radians/sample to Hz."""
    if not fs > 0:
        raise DomainError(f"sample rate must be positive, got {fs}")
    # dividing by pi first keeps ifreq = pi exactly at fs/2
    return np.asarray(ifreq, dtype=np.float64) / np.pi * (fs / 2)


def polar_trace(z, scheme="ffd", fs=None, amp_floor: float = AMP_FLOOR) -> PolarTrace:
    """IA, IP and IF of `z` in one go."""
    if fs is None:
        fs = z.fs if isinstance(z, AnalyticSignal) else 1.0
    ia, iphase = polar(z, amp_floor)
    return PolarTrace(ia, iphase, inst_freq(iphase, scheme), float(fs))

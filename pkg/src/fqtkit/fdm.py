"""DCT-based Fourier decomposition with a zero-phase filter bank.

The signal's DCT-2 coefficients ``X[0..N-1]`` are split into a DC term
(``X[0]``) and ``M`` disjoint bands ``edges[i-1]+1 .. edges[i]`` covering
``1..N-1``. Each band is resynthesized on the cosine basis to give a Fourier
intrinsic band function (FIBF) and is given a complex extension either by
sine-basis synthesis of the same coefficients (FSAS route) or by the DFT
analytic signal of the FIBF (GAS route). Masking coefficients of an
orthonormal transform shifts no feature in time, hence "zero-phase".
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import DegenerateInputError, DomainError, SizeError
from .instfreq import AMP_FLOOR, inst_freq, polar, to_hz
from .quadrature import FSAS_COSINE, AnalyticSignal, gas
from .signals import Signal, as_samples
from .transforms import dct2_exp_synthesis, fast_dct2, fast_idct2

__all__ = [
    "Strategy",
    "Route",
    "BandPlan",
    "Decomposition",
    "TfeGrid",
    "plan_bands",
    "manual_plan",
    "edges_from_hz",
    "masked_synthesis",
    "decompose",
    "tfe",
    "remove_bands",
    "trend",
]


class Strategy(enum.Enum):
    EQUAL = "equal"
    DYADIC = "dyadic"
    EQUAL_ENERGY = "equal-energy"
    MANUAL = "manual"


class Route(enum.Enum):
    FSAS = "fsas"
    GAS = "gas"


def _enum(cls, value):
    if isinstance(value, cls):
        return value
    try:
        return cls(str(value).lower().replace("_", "-"))
    except ValueError:
        raise DomainError(f"unknown {cls.__name__.lower()} {value!r}") from None


@dataclass(frozen=True)
class BandPlan:
    """Band edges ``0 = N_0 < N_1 < ... < N_M = N - 1`` on DCT coefficient indices."""

    edges: tuple
    strategy: Strategy = Strategy.MANUAL

    def __post_init__(self):
        edges = tuple(int(e) for e in self.edges)
        if len(edges) < 2:
            raise SizeError("a band plan needs at least one band")
        if edges[0] != 0:
            raise DomainError(f"first edge must be 0, got {edges[0]}")
        if any(b <= a for a, b in zip(edges, edges[1:])):
            raise DomainError(f"edges must be strictly increasing: {edges}")
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "strategy", _enum(Strategy, self.strategy))

    @property
    def n_bands(self) -> int:
        return len(self.edges) - 1

    @property
    def length(self) -> int:
        """Signal length this plan covers."""
        return self.edges[-1] + 1

    def band(self, i: int) -> range:
        """Coefficient indices of band ``i`` (1-based)."""
        if not 1 <= i <= self.n_bands:
            raise DomainError(f"band index {i} outside 1..{self.n_bands}")
        return range(self.edges[i - 1] + 1, self.edges[i] + 1)

    def masks(self) -> np.ndarray:
        """``(M, N)`` 0/1 matrix; row ``i-1`` selects band ``i``; column 0 (DC) is never selected."""
        out = np.zeros((self.n_bands, self.length))
        for i in range(1, self.n_bands + 1):
            r = self.band(i)
            out[i - 1, r.start:r.stop] = 1.0
        return out

    def band_hz(self, fs: float) -> list:
        """``(low, high)`` edge frequencies of each band in Hz, using ``k fs / 2N``."""
        scale = fs / (2 * self.length)
        return [(self.edges[i - 1] * scale, self.edges[i] * scale) for i in range(1, self.n_bands + 1)]


def _check_band_count(n: int, m: int):
    if isinstance(m, bool) or int(m) != m or m < 1:
        raise SizeError(f"band count must be a positive integer, got {m!r}")
    if n - 1 < m:
        raise SizeError(f"cannot split {n - 1} coefficients into {m} bands")


def _monotone(edges: list, top: int) -> list:
    # push each edge above its predecessor, leaving room for the remaining bands
    m = len(edges) - 1
    for i in range(1, m + 1):
        edges[i] = min(max(edges[i], edges[i - 1] + 1), top - (m - i))
    return edges


def plan_bands(coeffs, strategy="equal", m: int = 4) -> BandPlan:
    """Choose band edges from DCT-2 coefficients.

    ``equal``
        widths differ by at most one index.
    ``dyadic``
        ``N_i = round((N-1) / 2**(M-i))``: widths halve going down from the
        top index, so the highest band is the widest.
    ``equal-energy``
        greedy scan over ``k = 1..N-1``; edge ``i`` goes at the smallest ``k``
        whose cumulative energy reaches ``i / M`` of the total (DC excluded).
        The last band takes whatever is left.
    """
    coeffs = np.asarray(coeffs, dtype=np.float64)
    n = coeffs.size
    strategy = _enum(Strategy, strategy)
    _check_band_count(n, m)
    m = int(m)
    top = n - 1

    if strategy is Strategy.EQUAL:
        edges = [(i * top) // m for i in range(m + 1)]
    elif strategy is Strategy.DYADIC:
        edges = [0] + [int(round(top / 2 ** (m - i))) for i in range(1, m + 1)]
        edges = _monotone(edges, top)
    elif strategy is Strategy.EQUAL_ENERGY:
        energy = coeffs[1:] ** 2
        total = energy.sum()
        if not total > 0:
            raise DegenerateInputError("signal has no energy outside DC; equal-energy bands undefined")
        cum = np.cumsum(energy)
        edges = [0]
        for i in range(1, m):
            # cum[j] is the energy of k = 1..j+1
            j = int(np.searchsorted(cum, i * total / m, side="left"))
            edges.append(j + 1)
        edges.append(top)
        edges = _monotone(edges, top)
    else:
        raise DomainError("manual plans are built with manual_plan(edges, n)")
    return BandPlan(tuple(edges), strategy)


def manual_plan(edges: Sequence[int], n: int) -> BandPlan:
    """Validate user-supplied interior edges (or a full edge list) for length `n`."""
    edges = [int(e) for e in edges]
    if not edges or edges[0] != 0:
        edges = [0] + edges
    if edges[-1] != n - 1:
        edges = edges + [n - 1]
    plan = BandPlan(tuple(edges), Strategy.MANUAL)
    if plan.edges[-1] != n - 1:
        raise SizeError(f"edges exceed the coefficient range 0..{n - 1}")
    return plan


def edges_from_hz(cutoffs_hz: Iterable[float], n: int, fs: float) -> list:
    """Interior edges for cutoff frequencies: band boundaries at ``k <= f 2N / fs``."""
    out = []
    for f in cutoffs_hz:
        if not 0 <= f <= fs / 2:
            raise DomainError(f"cutoff {f} Hz outside [0, {fs / 2}]")
        k = int(np.floor(f * 2 * n / fs + 1e-9))
        if 0 < k < n - 1:
            out.append(k)
    return sorted(set(out))


def masked_synthesis(coeffs, weights, quadrature: bool = False):
    """Resynthesize ``weights * coeffs`` on the cosine basis (and optionally the sine basis).

    `weights` may be any nonnegative per-coefficient gains, so soft (e.g.
    Gaussian) zero-phase masks go through the same kernel as the 0/1 band
    masks. Weights broadcast against `coeffs` along the last axis.
    """
    coeffs = np.asarray(coeffs, dtype=np.float64)
    weights = np.asarray(weights, dtype=np.float64)
    if np.any(weights < 0):
        raise DomainError("zero-phase masks must be nonnegative")
    masked = weights * coeffs
    if quadrature:
        z = dct2_exp_synthesis(masked, axis=-1)
        return z.real, z.imag
    return fast_idct2(masked, axis=-1)


@dataclass(frozen=True, eq=False)
class Decomposition:
    dc: float
    fibfs: np.ndarray  # (M, N)
    afibfs: list
    route: Route
    plan: BandPlan
    fs: float = 1.0
    coeffs: Optional[np.ndarray] = None

    @property
    def n_bands(self) -> int:
        return self.fibfs.shape[0]

    def dc_term(self) -> np.ndarray:
        """Constant sequence contributed by the DC coefficient."""
        return np.full(self.fibfs.shape[1], self.dc)

    def reconstruct(self) -> np.ndarray:
        return self.dc_term() + self.fibfs.sum(axis=0)


def _plan_for(n: int, plan: BandPlan):
    if plan.length != n:
        raise SizeError(f"plan covers length {plan.length}, signal has {n} samples")


def decompose(x, plan: BandPlan, route="fsas", fs: Optional[float] = None) -> Decomposition:
    """Split `x` into FIBFs over `plan` and attach their analytic extensions."""
    route = _enum(Route, route)
    if fs is None:
        fs = x.fs if isinstance(x, Signal) else 1.0
    x = as_samples(x)
    n = x.size
    _plan_for(n, plan)

    coeffs = fast_dct2(x)
    masks = plan.masks()
    if route is Route.FSAS:
        fibfs, quads = masked_synthesis(coeffs, masks, quadrature=True)
        afibfs = [AnalyticSignal(fibfs[i], quads[i], float(fs), FSAS_COSINE, 2) for i in range(plan.n_bands)]
    else:
        fibfs = masked_synthesis(coeffs, masks)
        afibfs = []
        for i in range(plan.n_bands):
            z = gas(fibfs[i], fs)
            # share the FIBF array itself so both routes have identical real parts
            afibfs.append(AnalyticSignal(fibfs[i], z.imag, float(fs), z.kind, None))
    dc = coeffs[0] / np.sqrt(n)
    return Decomposition(float(dc), fibfs, afibfs, route, plan, float(fs), coeffs)


@dataclass(frozen=True, eq=False)
class TfeGrid:
    """Sparse time-frequency-energy samples, one row per (band, time) with non-negligible amplitude."""

    time: np.ndarray  # sample index
    freq: np.ndarray  # Hz
    energy: np.ndarray  # squared instantaneous amplitude
    band: np.ndarray  # 1-based band number
    fs: float = 1.0

    @property
    def triplets(self) -> np.ndarray:
        return np.column_stack([self.time, self.freq, self.energy])

    def __len__(self) -> int:
        return self.time.size

    def ridge(self, n: int) -> np.ndarray:
        """Frequency of the most energetic entry at each time ``0..n-1`` (NaN where none)."""
        out = np.full(n, np.nan)
        best = np.full(n, -np.inf)
        for t, f, e in zip(self.time, self.freq, self.energy):
            if e > best[t]:
                best[t] = e
                out[t] = f
        return out


def tfe(d: Decomposition, scheme="ffd", amp_floor: float = AMP_FLOOR) -> TfeGrid:
    """Collect ``(n, IF in Hz, IA**2)`` for every band and sample.

    Entries whose amplitude is at most ``amp_floor`` times the largest amplitude
    in the decomposition are dropped: their phase, and so their frequency, is
    rounding noise. A zero signal gives an empty grid.
    """
    if d.n_bands == 0:
        raise SizeError("empty decomposition")
    amps, freqs = [], []
    for z in d.afibfs:
        ia, iphase = polar(z, amp_floor=amp_floor)
        amps.append(ia)
        freqs.append(to_hz(inst_freq(iphase, scheme), d.fs))
    amps = np.array(amps)
    freqs = np.array(freqs)
    peak = amps.max()
    keep = amps > amp_floor * peak if peak > 0 else np.zeros_like(amps, dtype=bool)
    band_idx, time_idx = np.nonzero(keep)
    return TfeGrid(
        time=time_idx,
        freq=freqs[band_idx, time_idx],
        energy=amps[band_idx, time_idx] ** 2,
        band=band_idx + 1,
        fs=d.fs,
    )


def remove_bands(x, plan: BandPlan, drop: Iterable[int] = (), drop_dc: bool = False) -> np.ndarray:
    """Zero the listed bands (1-based) and optionally DC, then invert the DCT-2."""
    x = as_samples(x)
    _plan_for(x.size, plan)
    weights = np.ones(x.size)
    for i in drop:
        if isinstance(i, bool) or int(i) != i:
            raise DomainError(f"band index must be an integer, got {i!r}")
        r = plan.band(int(i))
        weights[r.start:r.stop] = 0.0
    if drop_dc:
        weights[0] = 0.0
    return masked_synthesis(fast_dct2(x), weights)


def _settle(x: np.ndarray, slow: np.ndarray, steps: int = 3):
    # Nudge the trend by a few ulps where that makes x - trend exactly representable,
    # so trend + variability reproduces x bit for bit. Where |trend| or |x - trend|
    # sits in a higher binade than |x| no such split exists and the 1-ulp residual stays.
    slow = slow.copy()
    for i in np.nonzero(slow + (x - slow) != x)[0]:
        up = down = slow[i]
        for _ in range(steps):
            up, down = np.nextafter(up, np.inf), np.nextafter(down, -np.inf)
            hit = next((c for c in (up, down) if c + (x[i] - c) == x[i]), None)
            if hit is not None:
                slow[i] = hit
                break
    return slow, x - slow


def trend(x, cutoff_scale_samples: float):
    """Split `x` into a trend (DC and periods ``2N/k >= cutoff``) and the variability ``x - trend``.

    The variability is always ``x - trend`` computed in floating point. The
    trend may differ from the masked resynthesis by a few ulps, chosen so that
    ``trend + variability == x`` holds exactly wherever float64 allows it.
    """
    if not cutoff_scale_samples > 2:
        raise DomainError(f"cutoff must exceed 2 samples, got {cutoff_scale_samples}")
    x = as_samples(x)
    n = x.size
    k = np.arange(n)
    keep = np.ones(n)
    keep[1:] = (2.0 * n / k[1:] >= cutoff_scale_samples).astype(float)
    return _settle(x, masked_synthesis(fast_dct2(x), keep))

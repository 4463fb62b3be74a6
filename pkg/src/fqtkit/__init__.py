"""Fourier quadrature transforms, analytic signals and DCT-based decomposition."""

from .errors import DegenerateInputError, DomainError, FQTError, SizeError
from .fdm import (
    BandPlan,
    Decomposition,
    Route,
    Strategy,
    TfeGrid,
    decompose,
    edges_from_hz,
    manual_plan,
    masked_synthesis,
    plan_bands,
    remove_bands,
    tfe,
    trend,
)
from .image2d import AnalyticImage, dct2d, fsas2d, idct2d, recover_coeffs
from .instfreq import DiffScheme, PolarTrace, inst_freq, polar, polar_trace, to_hz
from .quadrature import AnalyticSignal, fcqt, fsas, fsqt, gas
from .signals import Signal, as_samples, demean
from .transforms import (
    Family,
    TransformMatrix,
    TransformVariant,
    build_matrix,
    embed,
    fast_dct2,
    fast_idct2,
    forward,
    inverse,
    restrict,
)

__version__ = "0.1.0"

__all__ = [
    "DegenerateInputError",
    "DomainError",
    "FQTError",
    "SizeError",
    "BandPlan",
    "Decomposition",
    "Route",
    "Strategy",
    "TfeGrid",
    "decompose",
    "edges_from_hz",
    "manual_plan",
    "masked_synthesis",
    "plan_bands",
    "remove_bands",
    "tfe",
    "trend",
    "AnalyticImage",
    "dct2d",
    "fsas2d",
    "idct2d",
    "recover_coeffs",
    "DiffScheme",
    "PolarTrace",
    "inst_freq",
    "polar",
    "polar_trace",
    "to_hz",
    "AnalyticSignal",
    "fcqt",
    "fsas",
    "fsqt",
    "gas",
    "Signal",
    "as_samples",
    "demean",
    "Family",
    "TransformMatrix",
    "TransformVariant",
    "build_matrix",
    "embed",
    "fast_dct2",
    "fast_idct2",
    "forward",
    "inverse",
    "restrict",
]

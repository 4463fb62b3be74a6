"""Discrete cosine/sine transform matrices and the fast DCT-2 path.

Sixteen orthonormal transforms (DCT-1..8, DST-1..8) plus sixteen auxiliary
matrices that pair each of them with the complementary trigonometric basis:
the auxiliary sine matrix of DCT-i uses the same argument and normalization
as DCT-i with ``cos`` replaced by ``sin``, and the auxiliary cosine matrix of
DST-i does the converse. Those pairs are what the quadrature transforms in
:mod:`fqtkit.quadrature` are built from.

Layout convention
-----------------
``TransformMatrix.entries[n, k]`` holds the element for time index ``n`` and
frequency index ``k``. The analysis (forward) operator is therefore
``entries.T`` and synthesis is ``entries``::

    X = entries.T @ x        x = entries @ X

DST-1, DST-5 and the auxiliary cosine matrices paired with them are defined
on indices ``1..N-1`` only; their ``entries`` are ``(N-1, N-1)`` and
``offset == 1``. Use :func:`restrict` / :func:`embed` to move between an
N-sample signal and that index range. The auxiliary sine matrices of
DCT-1, 2, 3, 5 and 7 keep the full ``N x N`` layout of their partner DCT but
contain an identically-zero row or column, so their ``order`` is reported as
``N - 1``.

Notes on the formulas
---------------------
* DST-6 and DST-7 use the standard ``2/sqrt(2N+1)`` normalization with
  denominator ``2N+1`` (and ``k+1`` in DST-6); the variants written with
  ``2N-1`` are not orthogonal. Their auxiliary cosine partners follow suit.
* The auxiliary sine partner of DCT-8 uses ``2N+1`` while the auxiliary
  cosine partner of DST-8 uses ``2N-1``. This is not a typo: each simply
  inherits its partner's argument.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DomainError, SizeError
from .signals import as_samples

__all__ = [
    "Family",
    "TransformVariant",
    "TransformMatrix",
    "build_matrix",
    "forward",
    "inverse",
    "restrict",
    "embed",
    "fast_dct2",
    "fast_idct2",
    "dct2_exp_synthesis",
    "sine_analysis",
]

_R2 = 1.0 / np.sqrt(2.0)


class Family(enum.Enum):
    DCT = "dct"
    DST = "dst"
    AUX_SINE = "auxsine"
    AUX_COSINE = "auxcosine"


@dataclass(frozen=True)
class TransformVariant:
    family: Family
    index: int

    def __post_init__(self):
        if not isinstance(self.family, Family):
            try:
                object.__setattr__(self, "family", Family(str(self.family).lower()))
            except ValueError:
                raise DomainError(f"unknown transform family {self.family!r}") from None
        if isinstance(self.index, bool) or int(self.index) != self.index or not 1 <= self.index <= 8:
            raise DomainError(f"variant index must be in 1..8, got {self.index!r}")
        object.__setattr__(self, "index", int(self.index))

    @classmethod
    def parse(cls, text: str) -> "TransformVariant":
        """Parse names such as ``"dct2"``, ``"DST-5"`` or ``"auxsine3"``."""
        m = re.fullmatch(r"\s*(dct|dst|auxsine|auxcosine)[-_ ]?([1-8])\s*", text.lower())
        if m is None:
            raise DomainError(f"unknown transform variant {text!r}")
        return cls(Family(m.group(1)), int(m.group(2)))

    @property
    def offset(self) -> int:
        """First index of the domain: 1 for the ``1..N-1`` variants, else 0."""
        if self.index in (1, 5) and self.family in (Family.DST, Family.AUX_COSINE):
            return 1
        return 0

    @property
    def reduced_order(self) -> bool:
        """True for the variants whose order is ``N - 1``."""
        if self.offset == 1:
            return True
        return self.family is Family.AUX_SINE and self.index in (1, 2, 3, 5, 7)

    @property
    def partner(self) -> "TransformVariant":
        """The auxiliary matrix paired with a DCT/DST (and vice versa)."""
        pairs = {
            Family.DCT: Family.AUX_SINE,
            Family.AUX_SINE: Family.DCT,
            Family.DST: Family.AUX_COSINE,
            Family.AUX_COSINE: Family.DST,
        }
        return TransformVariant(pairs[self.family], self.index)

    def __str__(self) -> str:
        return f"{self.family.value}{self.index}"


def _gamma(idx, n):
    return np.where((idx == 0) | (idx == n - 1), _R2, 1.0)


def _sigma(idx, n):
    return np.where(idx == 0, _R2, 1.0)


def _eps(idx, n):
    return np.where(idx == n - 1, _R2, 1.0)


def _one(idx, n):
    return 1.0


# index -> (constant, row factor, column factor, argument(n, k, N))
# shared by each DCT and its auxiliary sine partner ...
_COSINE_SIDE = {
    1: ("a", _gamma, _gamma, lambda n, k, N: n * k * np.pi / (N - 1)),
    2: ("b", _one, _sigma, lambda n, k, N: (n + 0.5) * k * np.pi / N),
    3: ("b", _sigma, _one, lambda n, k, N: (k + 0.5) * n * np.pi / N),
    4: ("b", _one, _one, lambda n, k, N: (n + 0.5) * (k + 0.5) * np.pi / N),
    5: ("c", _sigma, _sigma, lambda n, k, N: n * k * 2 * np.pi / (2 * N - 1)),
    6: ("c", _eps, _sigma, lambda n, k, N: (n + 0.5) * k * 2 * np.pi / (2 * N - 1)),
    7: ("c", _sigma, _eps, lambda n, k, N: (k + 0.5) * n * 2 * np.pi / (2 * N - 1)),
    8: ("d", _one, _one, lambda n, k, N: (n + 0.5) * (k + 0.5) * 2 * np.pi / (2 * N + 1)),
}

# ... and by each DST and its auxiliary cosine partner.
_SINE_SIDE = {
    1: ("b", _one, _one, lambda n, k, N: n * k * np.pi / N),
    2: ("b", _one, _eps, lambda n, k, N: (n + 0.5) * (k + 1) * np.pi / N),
    3: ("b", _eps, _one, lambda n, k, N: (k + 0.5) * (n + 1) * np.pi / N),
    4: ("b", _one, _one, lambda n, k, N: (n + 0.5) * (k + 0.5) * np.pi / N),
    5: ("c", _one, _one, lambda n, k, N: n * k * 2 * np.pi / (2 * N - 1)),
    6: ("d", _one, _one, lambda n, k, N: (n + 0.5) * (k + 1) * 2 * np.pi / (2 * N + 1)),
    7: ("d", _one, _one, lambda n, k, N: (k + 0.5) * (n + 1) * 2 * np.pi / (2 * N + 1)),
    8: ("c", _eps, _eps, lambda n, k, N: (n + 0.5) * (k + 0.5) * 2 * np.pi / (2 * N - 1)),
}


def _constant(name: str, n: int) -> float:
    return {
        "a": np.sqrt(2.0 / (n - 1)),
        "b": np.sqrt(2.0 / n),
        "c": 2.0 / np.sqrt(2 * n - 1),
        "d": 2.0 / np.sqrt(2 * n + 1),
    }[name]


@dataclass(frozen=True, eq=False)
class TransformMatrix:
    """A built transform matrix; ``entries`` is read-only."""

    variant: TransformVariant
    n: int
    order: int
    entries: np.ndarray

    @property
    def offset(self) -> int:
        return self.variant.offset

    @property
    def size(self) -> int:
        """Length of the vectors the matrix acts on."""
        return self.entries.shape[0]

    @property
    def labels(self) -> np.ndarray:
        """Index labels ``offset .. offset + size - 1`` of rows and columns."""
        return np.arange(self.offset, self.offset + self.size)

    @property
    def operator(self) -> np.ndarray:
        """Analysis operator mapping samples to coefficients."""
        return self.entries.T


def _coerce_variant(variant) -> TransformVariant:
    if isinstance(variant, TransformVariant):
        return variant
    if isinstance(variant, str):
        return TransformVariant.parse(variant)
    raise DomainError(f"unknown transform variant {variant!r}")


def build_matrix(variant, n: int) -> TransformMatrix:
    """Build (or fetch from cache) the matrix for `variant` at nominal length `n`.

    Raises
    ------
    SizeError
        If ``n < 2``, or ``n < 3`` for the variants living on ``1..N-1``.
    DomainError
        If `variant` does not name one of the 32 matrices.
    """
    variant = _coerce_variant(variant)
    if isinstance(n, bool) or int(n) != n:
        raise SizeError(f"length must be an integer, got {n!r}")
    n = int(n)
    minimum = 3 if variant.offset == 1 else 2
    if n < minimum:
        raise SizeError(f"{variant} needs n >= {minimum}, got {n}")
    return _build_cached(variant, n)


@lru_cache(maxsize=48)
def _build_cached(variant: TransformVariant, n: int) -> TransformMatrix:
    # lru_cache may build twice under a race; both results are identical.
    cosine_side = variant.family in (Family.DCT, Family.AUX_SINE)
    const, row_f, col_f, arg = (_COSINE_SIDE if cosine_side else _SINE_SIDE)[variant.index]
    trig = np.cos if variant.family in (Family.DCT, Family.AUX_COSINE) else np.sin

    idx = np.arange(variant.offset, n, dtype=np.float64)
    nn = idx[:, None]
    kk = idx[None, :]
    entries = _constant(const, n) * row_f(nn, n) * col_f(kk, n) * trig(arg(nn, kk, n))
    entries = np.ascontiguousarray(entries, dtype=np.float64)
    entries.flags.writeable = False
    order = n - 1 if variant.reduced_order else n
    return TransformMatrix(variant, n, order, entries)


def _check_length(matrix: TransformMatrix, v: np.ndarray, what: str):
    if v.shape[0] != matrix.size:
        raise SizeError(
            f"{matrix.variant} at n={matrix.n} acts on length {matrix.size}, "
            f"got {what} of length {v.shape[0]}"
        )


def forward(matrix: TransformMatrix, x) -> np.ndarray:
    """Coefficients ``entries.T @ x``; `x` must have length ``matrix.size``."""
    x = as_samples(x, min_length=1)
    _check_length(matrix, x, "signal")
    return matrix.operator @ x


def inverse(matrix: TransformMatrix, coeffs) -> np.ndarray:
    """Samples ``entries @ X``. Only defined for the orthonormal DCT/DST families."""
    if matrix.variant.family not in (Family.DCT, Family.DST):
        raise DomainError(f"{matrix.variant} is not an orthonormal transform; no inverse")
    coeffs = as_samples(coeffs, min_length=1)
    _check_length(matrix, coeffs, "coefficients")
    return matrix.entries @ coeffs


def restrict(matrix: TransformMatrix, x) -> np.ndarray:
    """Cut an N-sample signal down to the matrix's index range (drops ``x[0]`` when offset is 1)."""
    x = as_samples(x, min_length=1)
    if x.shape[0] != matrix.n:
        raise SizeError(f"expected {matrix.n} samples, got {x.shape[0]}")
    return x[matrix.offset:]


def embed(matrix: TransformMatrix, v) -> np.ndarray:
    """Place a length-``size`` vector back on indices ``0..N-1``, zero-filling below the offset."""
    v = np.asarray(v, dtype=np.float64)
    _check_length(matrix, v, "vector")
    out = np.zeros(matrix.n, dtype=np.float64)
    out[matrix.offset:] = v
    return out


# ---------------------------------------------------------------------------
# fast DCT-2 family via a length-2N FFT


def _sigma_vec(n: int) -> np.ndarray:
    s = np.ones(n)
    s[0] = _R2
    return s


def _shape_for(axis: int, ndim: int, n: int) -> tuple:
    shape = [1] * ndim
    shape[axis] = n
    return tuple(shape)


def fast_dct2(x, axis: int = -1) -> np.ndarray:
    """Orthonormal DCT-2 along `axis` in O(N log N).

    The input is mirrored to length 2N (``x[0..N-1], x[N-1..0]``); the FFT of
    that even extension is ``2 exp(j pi k / 2N)`` times the cosine sum.
    """
    x = np.asarray(x, dtype=np.float64)
    axis = axis % x.ndim
    n = x.shape[axis]
    if n < 2:
        raise SizeError(f"need at least 2 samples, got {n}")
    mirrored = np.concatenate([x, np.flip(x, axis=axis)], axis=axis)
    spec = np.fft.fft(mirrored, axis=axis)
    spec = np.take(spec, np.arange(n), axis=axis)
    k = np.arange(n)
    twiddle = np.exp(-1j * np.pi * k / (2 * n)).reshape(_shape_for(axis, x.ndim, n))
    scale = (np.sqrt(2.0 / n) * _sigma_vec(n) / 2).reshape(_shape_for(axis, x.ndim, n))
    return (twiddle * spec).real * scale


def dct2_exp_synthesis(coeffs, axis: int = -1) -> np.ndarray:
    """``sqrt(2/N) * sum_k sigma_k X[k] exp(j pi k (2n+1) / 2N)`` for ``n < N``.

    The real part is the inverse DCT-2; the imaginary part is the same
    coefficients synthesized on the sine basis.
    """
    coeffs = np.asarray(coeffs, dtype=np.float64)
    axis = axis % coeffs.ndim
    n = coeffs.shape[axis]
    if n < 2:
        raise SizeError(f"need at least 2 coefficients, got {n}")
    k = np.arange(n)
    weights = (np.sqrt(2.0 / n) * _sigma_vec(n) * np.exp(1j * np.pi * k / (2 * n)))
    c = coeffs * weights.reshape(_shape_for(axis, coeffs.ndim, n))
    # ifft divides by 2N; undo it.
    z = np.fft.ifft(c, n=2 * n, axis=axis) * (2 * n)
    return np.take(z, np.arange(n), axis=axis)


def fast_idct2(coeffs, axis: int = -1) -> np.ndarray:
    """Inverse of :func:`fast_dct2`."""
    return dct2_exp_synthesis(coeffs, axis=axis).real


def sine_analysis(y, axis: int = -1) -> np.ndarray:
    """``sqrt(2/N) * sum_n y[n] sin(pi k (2n+1) / 2N)`` for ``k < N``.

    Adjoint of the imaginary part of :func:`dct2_exp_synthesis`; the ``k = 0``
    output is identically zero.
    """
    y = np.asarray(y, dtype=np.float64)
    axis = axis % y.ndim
    n = y.shape[axis]
    if n < 2:
        raise SizeError(f"need at least 2 samples, got {n}")
    spec = np.fft.fft(y, n=2 * n, axis=axis)
    spec = np.take(spec, np.arange(n), axis=axis)
    k = np.arange(n)
    twiddle = np.exp(-1j * np.pi * k / (2 * n)).reshape(_shape_for(axis, y.ndim, n))
    out = -(twiddle * spec).imag * np.sqrt(2.0 / n)
    np.moveaxis(out, axis, 0)[0] = 0.0
    return out

import math

import numpy as np
import pytest

from fqtkit.transforms import Family


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def dct2_basis(k, n_len):
    """Unnormalized DCT-2 cosine basis vector for bin k."""
    n = np.arange(n_len)
    return np.cos(np.pi * k * (2 * n + 1) / (2 * n_len))


def dst2_sine(k, n_len):
    n = np.arange(n_len)
    return np.sin(np.pi * k * (2 * n + 1) / (2 * n_len))


# Scalar reference evaluated one element at a time with the math module.
def ref_element(v, n, k, N):
    r2 = 1 / math.sqrt(2)
    a = math.sqrt(2 / (N - 1))
    b = math.sqrt(2 / N)
    c = 2 / math.sqrt(2 * N - 1)
    d = 2 / math.sqrt(2 * N + 1)
    g = lambda i: r2 if i in (0, N - 1) else 1.0  # noqa: E731
    s = lambda i: r2 if i == 0 else 1.0  # noqa: E731
    e = lambda i: r2 if i == N - 1 else 1.0  # noqa: E731
    pi = math.pi
    i = v.index
    if v.family in (Family.DCT, Family.AUX_SINE):
        f = math.cos if v.family is Family.DCT else math.sin
        table = {
            1: lambda: a * g(n) * g(k) * f(pi * n * k / (N - 1)),
            2: lambda: b * s(k) * f(pi * (n + 0.5) * k / N),
            3: lambda: b * s(n) * f(pi * (k + 0.5) * n / N),
            4: lambda: b * f(pi * (n + 0.5) * (k + 0.5) / N),
            5: lambda: c * s(n) * s(k) * f(2 * pi * n * k / (2 * N - 1)),
            6: lambda: c * e(n) * s(k) * f(2 * pi * (n + 0.5) * k / (2 * N - 1)),
            7: lambda: c * s(n) * e(k) * f(2 * pi * (k + 0.5) * n / (2 * N - 1)),
            8: lambda: d * f(2 * pi * (n + 0.5) * (k + 0.5) / (2 * N + 1)),
        }
    else:
        f = math.sin if v.family is Family.DST else math.cos
        table = {
            1: lambda: b * f(pi * n * k / N),
            2: lambda: b * e(k) * f(pi * (n + 0.5) * (k + 1) / N),
            3: lambda: b * e(n) * f(pi * (k + 0.5) * (n + 1) / N),
            4: lambda: b * f(pi * (n + 0.5) * (k + 0.5) / N),
            5: lambda: c * f(2 * pi * n * k / (2 * N - 1)),
            6: lambda: d * f(2 * pi * (n + 0.5) * (k + 1) / (2 * N + 1)),
            7: lambda: d * f(2 * pi * (k + 0.5) * (n + 1) / (2 * N + 1)),
            8: lambda: c * e(n) * e(k) * f(2 * pi * (n + 0.5) * (k + 0.5) / (2 * N - 1)),
        }
    return table[i]()


def ref_matrix(v, N):
    """Synthesis matrix (rows = time) from scalar evaluation."""
    lo = 1 if (v.index in (1, 5) and v.family in (Family.DST, Family.AUX_COSINE)) else 0
    idx = range(lo, N)
    return np.array([[ref_element(v, n, k, N) for k in idx] for n in idx])


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(RESULTS, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays
from scipy import fft as sfft

from fqtkit import fdm, fcqt, gas
from fqtkit.errors import DegenerateInputError, DomainError, SizeError
from fqtkit.fdm import BandPlan, Strategy

from conftest import dct2_basis

STRATEGIES = ["equal", "dyadic", "equal-energy"]


def _coeffs_with(n, bins):
    X = np.zeros(n)
    for k, v in bins.items():
        X[k] = v
    return X


def test_plan_equal_example():
    assert fdm.plan_bands(np.ones(17), "equal", 4).edges == (0, 4, 8, 12, 16)


def test_plan_dyadic_example():
    plan = fdm.plan_bands(np.ones(17), "dyadic", 4)
    assert plan.edges == (0, 2, 4, 8, 16)
    assert plan.strategy is Strategy.DYADIC


def test_plan_equal_energy_example():
    X = _coeffs_with(17, {1: 1.0, 2: 1.0})
    assert fdm.plan_bands(X, "equal-energy", 2).edges == (0, 1, 16)


def test_dyadic_hz_edges_at_fs50():
    # eight dyadic bands at fs = 50 Hz: 0.1953, 0.3906, ..., 12.5, 25 Hz
    N, fs = 2048, 50.0
    plan = fdm.plan_bands(np.ones(N), "dyadic", 8)
    highs = [hi for _, hi in plan.band_hz(fs)]
    want = [25 / 2**j for j in range(7, -1, -1)]
    np.testing.assert_allclose(highs, want, atol=fs / (2 * N) + 1e-12)


@pytest.mark.parametrize("m", [1, 2, 3, 5, 9])
@pytest.mark.parametrize("n", [10, 33, 100])
def test_equal_widths(n, m):
    plan = fdm.plan_bands(np.ones(n), "equal", m)
    widths = np.diff(plan.edges)
    assert widths.max() - widths.min() <= 1
    assert plan.edges[-1] == n - 1


@pytest.mark.parametrize("m", [1, 3, 6])
def test_dyadic_highest_band_widest(m):
    plan = fdm.plan_bands(np.ones(200), "dyadic", m)
    widths = np.diff(plan.edges)
    assert widths[-1] == widths.max()
    assert list(widths) == sorted(widths)


def test_dyadic_too_many_bands_still_valid():
    plan = fdm.plan_bands(np.ones(9), "dyadic", 8)
    assert plan.edges == tuple(range(9))


def test_equal_energy_quantum(rng):
    for _ in range(50):
        X = rng.standard_normal(120)
        m = int(rng.integers(1, 7))
        plan = fdm.plan_bands(X, "equal-energy", m)
        e = X[1:] ** 2
        target = e.sum() / m
        quantum = e.max()
        for i in range(1, m + 1):
            r = plan.band(i)
            assert abs(np.sum(X[r.start:r.stop] ** 2) - target) <= quantum + 1e-12


def test_equal_energy_tie_breaks_low():
    X = _coeffs_with(9, {1: 1.0, 2: 0.0, 3: 0.0, 4: 1.0})
    # cumulative energy first reaches half at k = 1
    assert fdm.plan_bands(X, "equal-energy", 2).edges == (0, 1, 8)


def test_plan_errors():
    with pytest.raises(SizeError):
        fdm.plan_bands(np.ones(5), "equal", 5)
    with pytest.raises(SizeError):
        fdm.plan_bands(np.ones(5), "equal", 0)
    with pytest.raises(DegenerateInputError):
        fdm.plan_bands(_coeffs_with(8, {0: 3.0}), "equal-energy", 2)
    with pytest.raises(DomainError):
        fdm.plan_bands(np.ones(8), "octave", 2)
    with pytest.raises(DomainError):
        fdm.plan_bands(np.ones(8), "manual", 2)


def test_bandplan_validation():
    with pytest.raises(DomainError):
        BandPlan((0, 3, 3, 7))
    with pytest.raises(DomainError):
        BandPlan((1, 7))
    with pytest.raises(SizeError):
        BandPlan((0,))
    with pytest.raises(DomainError):
        BandPlan((0, 7)).band(2)
    masks = BandPlan((0, 2, 7)).masks()
    assert masks.shape == (2, 8)
    assert masks[:, 0].sum() == 0 and np.all(masks.sum(axis=0)[1:] == 1)


def test_manual_plan_and_hz():
    assert fdm.manual_plan([3, 5], 10).edges == (0, 3, 5, 9)
    assert fdm.manual_plan([0, 3, 9], 10).edges == (0, 3, 9)
    with pytest.raises((DomainError, SizeError)):
        fdm.manual_plan([5, 3], 10)
    with pytest.raises((DomainError, SizeError)):
        fdm.manual_plan([12], 10)
    # N = 3600 at 360 Hz: bin spacing 0.05 Hz
    assert fdm.edges_from_hz([0.5, 49.0, 51.0], 3600, 360.0) == [10, 980, 1020]
    with pytest.raises(DomainError):
        fdm.edges_from_hz([200.0], 3600, 360.0)


def test_decompose_single_bin():
    N = 64
    x = dct2_basis(5, N)
    plan = fdm.manual_plan([3, 10, 40], N)
    d = fdm.decompose(x, plan)
    np.testing.assert_allclose(d.fibfs[1], x, atol=1e-12)
    for i in (0, 2, 3):
        assert np.abs(d.fibfs[i]).max() < 1e-12


@pytest.mark.parametrize("m, k1, k2", [(2, 3, 40), (4, 3, 20)])
def test_decompose_two_tones(m, k1, k2):
    N = 64
    a, b = dct2_basis(k1, N), 0.5 * dct2_basis(k2, N)
    d = fdm.decompose(a + b + 1.5, fdm.plan_bands(np.ones(N), "equal", m))
    np.testing.assert_allclose(d.fibfs[0], a, atol=1e-10)
    np.testing.assert_allclose(d.fibfs[1], b, atol=1e-10)
    assert d.dc == pytest.approx(1.5)
    np.testing.assert_allclose(d.dc_term(), 1.5)


def _check_invariants(x, d):
    scale = np.abs(x).max()
    assert np.abs(d.reconstruct() - x).max() < 1e-10 * scale
    norms = np.linalg.norm(d.fibfs, axis=1)
    for i in range(d.n_bands):
        for j in range(i + 1, d.n_bands):
            if norms[i] > 0 and norms[j] > 0:
                assert abs(np.dot(d.fibfs[i], d.fibfs[j])) / (norms[i] * norms[j]) < 1e-10
    centred = x - d.dc_term()
    total = np.sum(centred**2)
    assert abs(np.sum(norms**2) - total) <= 1e-9 * total


finite = st.floats(-1e4, 1e4, allow_nan=False, allow_infinity=False)


@settings(max_examples=80, deadline=None)
@given(
    st.integers(6, 120).flatmap(lambda n: arrays(np.float64, n, elements=finite)),
    st.sampled_from(STRATEGIES),
    st.sampled_from(["fsas", "gas"]),
    st.integers(1, 5),
)
def test_decomposition_invariants(x, strategy, route, m):
    if np.ptp(x) == 0:
        x = x + np.arange(x.size)
    plan = fdm.plan_bands(sfft.dct(x, norm="ortho"), strategy, m)
    _check_invariants(x, fdm.decompose(x, plan, route))


def test_routes_share_real_parts(rng):
    x = rng.standard_normal(150)
    plan = fdm.plan_bands(sfft.dct(x, norm="ortho"), "dyadic", 5)
    a = fdm.decompose(x, plan, "fsas", fs=10.0)
    b = fdm.decompose(x, plan, "gas", fs=10.0)
    assert np.array_equal(a.fibfs, b.fibfs)
    for za, zb, f in zip(a.afibfs, b.afibfs, a.fibfs):
        assert np.array_equal(za.real, zb.real) and np.array_equal(za.real, f)
        np.testing.assert_allclose(za.imag, fcqt(f), atol=1e-11)
        np.testing.assert_allclose(zb.imag, gas(f).imag, atol=1e-12)
        assert za.fs == zb.fs == 10.0


def test_fibfs_match_direct_masking(rng):
    x = rng.standard_normal(90)
    plan = fdm.manual_plan([7, 30], 90)
    X = sfft.dct(x, norm="ortho")
    d = fdm.decompose(x, plan)
    for i, r in enumerate([range(1, 8), range(8, 31), range(31, 90)]):
        Y = np.zeros_like(X)
        Y[r.start:r.stop] = X[r.start:r.stop]
        np.testing.assert_allclose(d.fibfs[i], sfft.idct(Y, norm="ortho"), atol=1e-12)


def test_zero_phase_symmetry(rng):
    for N in (40, 41):
        h = rng.standard_normal((N + 1) // 2)
        x = np.concatenate([h, h[: N // 2][::-1]])
        assert np.array_equal(x, x[::-1])
        d = fdm.decompose(x, fdm.plan_bands(np.ones(N), "equal", 4))
        for f in d.fibfs:
            np.testing.assert_allclose(f, f[::-1], atol=1e-10)


def test_decompose_length_mismatch():
    with pytest.raises(SizeError):
        fdm.decompose(np.ones(10), fdm.manual_plan([4], 12))
    with pytest.raises(DomainError):
        fdm.decompose(np.arange(10.0), fdm.manual_plan([4], 10), route="emd")


def test_masked_synthesis_soft_weights(rng):
    X = rng.standard_normal(32)
    w = np.exp(-((np.arange(32) - 10) ** 2) / 20.0)
    np.testing.assert_allclose(fdm.masked_synthesis(X, w), sfft.idct(w * X, norm="ortho"), atol=1e-12)
    with pytest.raises(DomainError):
        fdm.masked_synthesis(X, -w)


def test_tfe_single_bin():
    N, fs = 64, 64.0
    d = fdm.decompose(dct2_basis(5, N), fdm.manual_plan([3, 10], N), fs=fs)
    grid = fdm.tfe(d)
    assert len(grid) == N
    np.testing.assert_allclose(grid.freq, 2.5, atol=1e-9)
    np.testing.assert_allclose(grid.energy, grid.energy[0], rtol=1e-9)
    assert np.all(grid.band == 2)
    assert grid.triplets.shape == (N, 3)


def test_tfe_zero_signal_is_empty():
    d = fdm.decompose(np.zeros(32), fdm.manual_plan([8], 32))
    assert len(fdm.tfe(d)) == 0


def test_tfe_ranges(rng):
    fs = 200.0
    x = rng.standard_normal(300)
    for route in ("fsas", "gas"):
        d = fdm.decompose(x, fdm.plan_bands(sfft.dct(x, norm="ortho"), "dyadic", 6), route, fs)
        for scheme in ("ffd", "bfd", "cfd"):
            g = fdm.tfe(d, scheme)
            assert np.all((g.freq >= 0) & (g.freq <= fs / 2))
            assert np.all(g.energy >= 0)
        ridge = g.ridge(300)
        assert ridge.shape == (300,)


def test_remove_bands_identity_and_zero(rng):
    x = rng.standard_normal(70)
    plan = fdm.plan_bands(np.ones(70), "equal", 3)
    np.testing.assert_allclose(fdm.remove_bands(x, plan, []), x, atol=1e-10)
    assert np.abs(fdm.remove_bands(x, plan, [1, 2, 3], drop_dc=True)).max() < 1e-12
    with pytest.raises(DomainError):
        fdm.remove_bands(x, plan, [4])
    with pytest.raises(DomainError):
        fdm.remove_bands(x, plan, [1.5])


def _drift_tone_mixture():
    fs, N = 360.0, 3600
    n = np.arange(N)
    # components aligned with the DCT-2 grid: 0.3 Hz is bin 6, 50 Hz is bin 1000
    drift = np.cos(np.pi * 6 * (2 * n + 1) / (2 * N))
    tone = 0.5 * np.cos(np.pi * 1000 * (2 * n + 1) / (2 * N))
    return fs, N, drift, tone


def test_remove_drift_and_tone_aligned():
    fs, N, drift, tone = _drift_tone_mixture()
    edges = fdm.edges_from_hz([0.5, 49.0, 51.0], N, fs)
    plan = fdm.manual_plan(edges, N)
    lo, hi = plan.band_hz(fs)[0], plan.band_hz(fs)[2]
    assert lo == (0.0, 0.5) and hi == (49.0, 51.0)
    residual = fdm.remove_bands(drift + tone, plan, [1, 3], drop_dc=True)
    atten = 10 * np.log10(np.sum((drift + tone) ** 2) / np.sum(residual**2))
    assert atten >= 40


def test_remove_generic_phase_matches_coefficient_zeroing():
    fs, N = 360.0, 3600
    t = np.arange(N) / fs
    x = np.sin(2 * np.pi * 0.3 * t + 0.7) + np.sin(2 * np.pi * 50 * t + 2.0)
    plan = fdm.manual_plan(fdm.edges_from_hz([0.5, 49.0, 51.0], N, fs), N)
    X = sfft.dct(x, norm="ortho")
    X[:11] = 0
    X[981:1021] = 0
    np.testing.assert_allclose(fdm.remove_bands(x, plan, [1, 3], drop_dc=True), sfft.idct(X, norm="ortho"),
                               atol=1e-12)


def test_trend_example():
    N = 148
    slow = 2.0 + dct2_basis(1, N)
    fast = 0.3 * dct2_basis(40, N)
    x = slow + fast
    t, v = fdm.trend(x, 74)
    np.testing.assert_allclose(t, slow, atol=1e-10)
    np.testing.assert_allclose(v, fast, atol=1e-10)
    assert np.array_equal(t + v, x)


def test_trend_cutoff_boundary():
    N = 148
    # bin 4 has period 2N/4 = 74 samples: kept at cutoff 74, dropped at 74.5
    x = dct2_basis(4, N)
    np.testing.assert_allclose(fdm.trend(x, 74)[0], x, atol=1e-12)
    assert np.abs(fdm.trend(x, 74.5)[0]).max() < 1e-12


def test_trend_dc_only(rng):
    x = rng.standard_normal(50)
    t, v = fdm.trend(x, 101)
    np.testing.assert_allclose(t, x.mean(), atol=1e-12)


def test_trend_complement(rng):
    for _ in range(200):
        x = rng.standard_normal(int(rng.integers(3, 300))) * 10 ** rng.uniform(-6, 6)
        t, v = fdm.trend(x, rng.uniform(2.5, 100))
        assert np.array_equal(v, x - t)
        r = t + v - x
        # any residual is one rounding of the larger operand, and only where it outranks |x|
        big = np.maximum(np.abs(t), np.abs(v))
        assert np.all(np.abs(r) <= np.spacing(big))
        assert np.all((r == 0) | (big > np.abs(x)))


def test_trend_nudge_is_tiny(rng):
    x = rng.standard_normal(300)
    t, _ = fdm.trend(x, 10)
    keep = (2 * 300 / np.arange(1, 300)) >= 10
    X = sfft.dct(x, norm="ortho")
    X[1:][~keep] = 0
    np.testing.assert_allclose(t, sfft.idct(X, norm="ortho"), rtol=0, atol=1e-13)


def test_trend_errors():
    with pytest.raises(DomainError):
        fdm.trend(np.ones(10), 2.0)
    with pytest.raises(DomainError):
        fdm.trend(np.ones(10), -5)

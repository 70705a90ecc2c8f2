"""Corpus-wide properties over 1000 seeded signals of mixed length and scale."""

import numpy as np

from app.lib.haar import direct_analysis, direct_synthesis, fast_analysis, fast_synthesis
from app.lib.image2d import analyze2d, synthesize2d, synthetic_image
from app.lib.multilevel import decompose, max_levels, reconstruct
from app.schemas.signal_schemas import ArithmeticSink
from app.services.metrics_engine import compare_transforms


def scale(x):
    return max(1.0, float(np.max(np.abs(x))))


def test_fast_analysis_matches_direct(signal_corpus):
    for x in signal_corpus:
        direct, fast = direct_analysis(x), fast_analysis(x)
        bound = 1e-12 * scale(x)
        assert np.max(np.abs(fast.approx - direct.approx)) <= bound
        assert np.max(np.abs(fast.detail - direct.detail)) <= bound


def test_perfect_reconstruction(signal_corpus):
    for x in signal_corpus:
        bound = 1e-12 * scale(x)
        assert np.max(np.abs(fast_synthesis(fast_analysis(x)) - x)) <= bound
        assert np.max(np.abs(direct_synthesis(direct_analysis(x)) - x)) <= bound


def test_energy_conservation(signal_corpus):
    for x in signal_corpus:
        energy = float(np.sum(x ** 2))
        assert abs(fast_analysis(x).energy() - energy) <= 1e-10 * energy


def test_operation_counts(signal_corpus):
    for x in signal_corpus[:200]:
        n = x.size
        direct, fast = ArithmeticSink(), ArithmeticSink()
        direct_analysis(x, direct)
        fast_analysis(x, fast)
        assert (direct.mul_count, direct.add_count, fast.mul_count, fast.add_count) == (4 * n, 2 * n, n, n)


def test_deepest_decomposition_roundtrips(signal_corpus):
    for x in signal_corpus:
        levels = max_levels(x.size)
        rebuilt = reconstruct(decompose(x, levels, "direct"), "fast")
        assert np.max(np.abs(rebuilt - x)) <= 1e-12 * levels * scale(x)


def test_mixed_mode_reconstruction(signal_corpus):
    for x in signal_corpus[:300]:
        bound = 1e-12 * scale(x)
        assert np.max(np.abs(direct_synthesis(fast_analysis(x)) - x)) <= bound
        assert np.max(np.abs(fast_synthesis(direct_analysis(x)) - x)) <= bound


def test_error_rates_stay_below_thresholds(signal_corpus):
    for x in signal_corpus[:300]:
        approx, detail = compare_transforms(x)
        assert approx.max_db <= -90.0
        assert detail.max_db <= -160.0


def test_synthetic_image_experiment():
    img = synthetic_image(64, 64, seed=42)
    direct, fast = analyze2d(img, "direct"), analyze2d(img, "fast")
    assert np.max(np.abs(direct.ll.pixels - fast.ll.pixels)) <= 1e-10
    for mode in ("direct", "fast"):
        assert np.max(np.abs(synthesize2d(analyze2d(img, mode), mode).pixels - img.pixels)) <= 1e-10


def test_every_depth_roundtrips_up_to_log2_n(rng):
    x = rng.uniform(-1e3, 1e3, size=4096)
    for levels in range(1, 13):
        for mode in ("direct", "fast"):
            rebuilt = reconstruct(decompose(x, levels, mode), mode)
            assert np.max(np.abs(rebuilt - x)) <= 1e-12 * levels * scale(x)


def test_multilevel_energy_conservation(signal_corpus):
    for x in signal_corpus:
        energy = float(np.sum(x ** 2))
        tree = decompose(x, max_levels(x.size))
        assert abs(tree.energy() - energy) <= 1e-9 * energy

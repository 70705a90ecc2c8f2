import numpy as np
import pytest

from app.core.exception import DimensionMismatch, NonFiniteValue, OddDimension
from app.lib.image2d import (
    amplified_difference,
    analyze2d,
    difference_image,
    lowpass_display,
    synthesize2d,
    synthetic_image,
)
from app.schemas.image_schemas import GrayImage, QuadSubbands
from app.schemas.signal_schemas import ArithmeticSink

MODES = ["direct", "fast"]


def quad(ll, lh=None, hl=None, hh=None):
    ll = np.asarray(ll, dtype=float)
    zeros = np.zeros_like(ll)
    return QuadSubbands(
        ll=GrayImage.from_array(ll),
        lh=GrayImage.from_array(zeros if lh is None else lh),
        hl=GrayImage.from_array(zeros if hl is None else hl),
        hh=GrayImage.from_array(zeros if hh is None else hh),
    )


# ---------------------------------------------------------------------
# Image model
# ---------------------------------------------------------------------

def test_flat_pixels_are_reshaped_row_major():
    img = GrayImage(width=3, height=2, pixels=[0, 1, 2, 3, 4, 5])
    assert img.shape == (2, 3)
    np.testing.assert_array_equal(img.pixels[1], [3, 4, 5])


def test_image_rejects_wrong_pixel_count():
    with pytest.raises(DimensionMismatch):
        GrayImage(width=2, height=2, pixels=[1, 2, 3])


def test_image_rejects_non_finite_pixels():
    with pytest.raises(NonFiniteValue):
        GrayImage(width=2, height=1, pixels=[1.0, np.nan])


def test_quad_rejects_mixed_band_shapes():
    with pytest.raises(DimensionMismatch):
        quad(np.zeros((2, 2)), lh=np.zeros((2, 3)))


# ---------------------------------------------------------------------
# Analysis
# ---------------------------------------------------------------------

@pytest.mark.parametrize("mode", MODES)
def test_constant_image(mode):
    img = GrayImage.from_array(np.full((4, 4), 100.0))
    q = analyze2d(img, mode)
    assert q.ll.shape == (2, 2)
    # c*c is not exactly 1/2 in binary64
    np.testing.assert_allclose(q.ll.pixels, 200.0, atol=1e-12)
    for band in (q.lh, q.hl, q.hh):
        assert np.all(band.pixels == 0.0)


@pytest.mark.parametrize("mode", MODES)
def test_two_by_two_block(mode):
    a, b, c, d = 3.0, -1.0, 7.5, 2.0
    q = analyze2d(GrayImage.from_array([[a, b], [c, d]]), mode)
    np.testing.assert_allclose(q.ll.pixels, [[(a + b + c + d) / 2]], atol=1e-14)
    np.testing.assert_allclose(q.lh.pixels, [[(a + b - c - d) / 2]], atol=1e-14)
    np.testing.assert_allclose(q.hl.pixels, [[(a - b + c - d) / 2]], atol=1e-14)
    np.testing.assert_allclose(q.hh.pixels, [[(a - b - c + d) / 2]], atol=1e-14)


def test_modes_agree_on_synthetic_image():
    img = synthetic_image(32, 16, seed=3)
    direct = analyze2d(img, "direct")
    fast = analyze2d(img, "fast")
    for name in ("ll", "lh", "hl", "hh"):
        diff = np.abs(getattr(direct, name).pixels - getattr(fast, name).pixels)
        assert diff.max() <= 1e-12 * 510


@pytest.mark.parametrize("width, height", [(3, 4), (4, 5), (1, 1)])
def test_odd_dimensions_are_rejected(width, height):
    img = GrayImage.from_array(np.zeros((height, width)))
    with pytest.raises(OddDimension):
        analyze2d(img)


@pytest.mark.parametrize("width, height", [(2, 2), (8, 4), (16, 6)])
def test_2d_op_counts(width, height):
    img = GrayImage.from_array(np.ones((height, width)))
    fast, direct = ArithmeticSink(), ArithmeticSink()
    analyze2d(img, "fast", fast)
    analyze2d(img, "direct", direct)
    wh = width * height
    assert (fast.mul_count, fast.add_count) == (2 * wh, 2 * wh)
    assert (direct.mul_count, direct.add_count) == (8 * wh, 4 * wh)


def test_2d_energy_is_preserved():
    img = synthetic_image(16, 16, seed=11)
    assert analyze2d(img).energy() == pytest.approx(img.energy(), rel=1e-10)


# ---------------------------------------------------------------------
# Synthesis
# ---------------------------------------------------------------------

@pytest.mark.parametrize("mode", MODES)
def test_lowpass_only_quad_gives_constant_block(mode):
    img = synthesize2d(quad([[2 * 7.0]]), mode)
    np.testing.assert_allclose(img.pixels, np.full((2, 2), 7.0), atol=1e-14)


@pytest.mark.parametrize("analysis_mode", MODES)
@pytest.mark.parametrize("synthesis_mode", MODES)
def test_2d_perfect_reconstruction(analysis_mode, synthesis_mode):
    img = synthetic_image(24, 10, seed=5)
    rebuilt = synthesize2d(analyze2d(img, analysis_mode), synthesis_mode)
    assert np.max(np.abs(rebuilt.pixels - img.pixels)) <= 1e-12 * 255


def test_synthesize_rejects_mismatched_bands():
    bands = quad(np.zeros((2, 2)))
    bad = QuadSubbands.model_construct(
        ll=bands.ll, lh=bands.lh, hl=bands.hl, hh=GrayImage.from_array(np.zeros((1, 2)))
    )
    with pytest.raises(DimensionMismatch):
        synthesize2d(bad)


# ---------------------------------------------------------------------
# Display helpers
# ---------------------------------------------------------------------

def test_lowpass_display_halves_and_clamps():
    np.testing.assert_array_equal(lowpass_display(quad(np.full((2, 2), 200.0))).pixels, 100.0)
    np.testing.assert_array_equal(lowpass_display(quad([[600.0]])).pixels, [[255.0]])
    np.testing.assert_array_equal(lowpass_display(quad([[-10.0]])).pixels, [[0.0]])


def test_difference_image():
    a = GrayImage.from_array([[1.0]])
    b = GrayImage.from_array([[3.0]])
    np.testing.assert_array_equal(difference_image(a, b).pixels, [[-2.0]])
    img = synthetic_image(4, 4, seed=1)
    assert np.all(difference_image(img, img).pixels == 0.0)


def test_difference_image_rejects_shape_mismatch():
    with pytest.raises(DimensionMismatch):
        difference_image(GrayImage.from_array(np.zeros((2, 2))), GrayImage.from_array(np.zeros((2, 4))))


def test_amplified_difference():
    diff = GrayImage.from_array([[-1e-14, 2e-15], [0.0, 1.0]])
    out = amplified_difference(diff, 1e14).pixels
    np.testing.assert_allclose(out, [[1.0, 0.2], [0.0, 255.0]], rtol=1e-12)


def test_synthetic_image_is_seeded_and_in_range():
    a = synthetic_image(8, 6, seed=9)
    b = synthetic_image(8, 6, seed=9)
    c = synthetic_image(8, 6, seed=10)
    assert a.shape == (6, 8)
    np.testing.assert_array_equal(a.pixels, b.pixels)
    assert not np.array_equal(a.pixels, c.pixels)
    assert a.pixels.min() >= 0.0 and a.pixels.max() < 255.0

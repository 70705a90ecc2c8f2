import numpy as np
import pytest

from app.core.exception import InsufficientLength, InvalidLevels, MalformedTree
from app.lib.multilevel import check_levels, decompose, max_levels, reconstruct
from app.schemas.signal_schemas import ArithmeticSink, DecompositionTree

MODES = ["direct", "fast"]


def test_max_levels():
    assert max_levels(0) == 0
    assert max_levels(7) == 0
    assert max_levels(2) == 1
    assert max_levels(12) == 2
    assert max_levels(1024) == 10


@pytest.mark.parametrize("levels", [0, -1, 1.5, True])
def test_check_levels_rejects_non_positive_levels(levels):
    with pytest.raises(InvalidLevels):
        check_levels(8, levels)


@pytest.mark.parametrize("n, levels", [(4, 3), (12, 3), (2, 2), (0, 1)])
def test_check_levels_rejects_short_or_indivisible_signals(n, levels):
    with pytest.raises(InsufficientLength):
        check_levels(n, levels)


@pytest.mark.parametrize("mode", MODES)
def test_constant_signal_two_levels(mode):
    tree = decompose([1, 1, 1, 1], 2, mode)
    assert tree.levels == 2
    assert tree.original_length == 4
    np.testing.assert_array_equal(tree.details[0], [0.0, 0.0])
    np.testing.assert_array_equal(tree.details[1], [0.0])
    np.testing.assert_allclose(tree.final_approx, [2.0], atol=1e-15)
    np.testing.assert_allclose(reconstruct(tree, mode), [1, 1, 1, 1], atol=1e-15)


def test_details_are_stored_finest_first(rng):
    x = rng.normal(size=64)
    tree = decompose(x, 3)
    assert [d.size for d in tree.details] == [32, 16, 8]
    assert tree.final_approx.size == 8
    assert tree.coefficients().size == 64


def test_fast_op_count_sums_over_levels(rng):
    sink = ArithmeticSink()
    decompose(rng.normal(size=64), 3, "fast", sink)
    assert sink.mul_count == 64 + 32 + 16
    assert sink.add_count == 64 + 32 + 16


def test_direct_op_count_sums_over_levels(rng):
    sink = ArithmeticSink()
    decompose(rng.normal(size=64), 3, "direct", sink)
    assert sink.mul_count == 4 * (64 + 32 + 16)
    assert sink.add_count == 2 * (64 + 32 + 16)


@pytest.mark.parametrize("mode", MODES)
def test_decompose_matches_across_modes(mode, rng):
    x = rng.uniform(-5, 5, size=256)
    reference = decompose(x, 4, "direct")
    tree = decompose(x, 4, mode)
    np.testing.assert_allclose(tree.coefficients(), reference.coefficients(), atol=1e-12 * 5)


@pytest.mark.parametrize("analysis_mode", MODES)
@pytest.mark.parametrize("synthesis_mode", MODES)
@pytest.mark.parametrize("levels", [1, 2, 5])
def test_multilevel_perfect_reconstruction(analysis_mode, synthesis_mode, levels, rng):
    x = rng.uniform(-100, 100, size=320)
    rebuilt = reconstruct(decompose(x, levels, analysis_mode), synthesis_mode)
    assert np.max(np.abs(rebuilt - x)) <= 1e-12 * levels * 100


def test_multilevel_energy_is_preserved(rng):
    x = rng.normal(size=512)
    tree = decompose(x, 6)
    assert tree.energy() == pytest.approx(float(np.sum(x ** 2)), rel=1e-10)


def test_decompose_leaves_input_untouched(rng):
    x = rng.normal(size=32)
    before = x.copy()
    decompose(x, 2)
    np.testing.assert_array_equal(x, before)


def test_tree_rejects_wrong_detail_count():
    with pytest.raises(MalformedTree):
        DecompositionTree(levels=2, details=[[0.0, 0.0]], final_approx=[0.0], original_length=4)


def test_tree_rejects_wrong_band_length():
    with pytest.raises(MalformedTree):
        DecompositionTree(levels=1, details=[[0.0]], final_approx=[0.0, 1.0], original_length=4)


def test_reconstruct_rechecks_a_tampered_tree(rng):
    tree = decompose(rng.normal(size=8), 2)
    tree.details.pop()
    with pytest.raises(MalformedTree):
        reconstruct(tree)

import numpy as np
import pytest

from entroflow.rng import RngSeed, complex_gaussian


def test_same_pair_same_draws():
    a = RngSeed(123, stream=4).generator().random(8)
    b = RngSeed(123, stream=4).generator().random(8)
    assert a.tobytes() == b.tobytes()


def test_streams_differ():
    a = RngSeed(123, stream=0).generator().random(8)
    b = RngSeed(123, stream=1).generator().random(8)
    assert not np.array_equal(a, b)


def test_child_derivation_is_stable():
    assert RngSeed(7).child(3) == RngSeed(7).child(3)
    assert RngSeed(7).child(3) != RngSeed(7).child(4)


def test_seed_bounds():
    with pytest.raises(ValueError):
        RngSeed(-1)
    with pytest.raises(ValueError):
        RngSeed(2**64)
    with pytest.raises(ValueError):
        RngSeed(1, stream=-2)


def test_complex_gaussian_unit_variance():
    g = complex_gaussian((20000,), RngSeed(55).generator())
    assert np.mean(np.abs(g) ** 2) == pytest.approx(1.0, abs=0.05)

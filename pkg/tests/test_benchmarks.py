"""Benchmark registry: domains, published optima, spot values."""

import numpy as np
import pytest

from swarmopt.benchmarks import evaluate, list_functions, spec_of
from swarmopt.core import OptimizationMode, RngStream, UnknownFunctionError

EXPECTED_DOMAINS = {
    "ackley": (-5.0, 5.0),
    "schaffer": (-100.0, 100.0),
    "rastrigin": (-5.12, 5.12),
    "holders_table": (-10.0, 10.0),
    "rosenbrock": (-5.0, 10.0),
    "sphere": (-100.0, 100.0),
    "booth": (-10.0, 10.0),
    "easom": (-100.0, 100.0),
    "himmelblau": (-5.0, 5.0),
    "goldstein_price": (-2.0, 2.0),
}


def test_registry_lists_ten_functions():
    names = list_functions()
    assert len(names) == 10
    assert set(names) == set(EXPECTED_DOMAINS)


def test_registry_domains():
    for name, (lower, upper) in EXPECTED_DOMAINS.items():
        spec = spec_of(name)
        assert spec.dim == 2
        assert (spec.space.lower, spec.space.upper) == (lower, upper)
        assert spec.mode is OptimizationMode.MIN


def test_unknown_function_raises():
    with pytest.raises(UnknownFunctionError):
        spec_of("griewank")
    with pytest.raises(UnknownFunctionError):
        evaluate("griewank", (0.0, 0.0))


def test_known_minima_at_argmin():
    for name in list_functions():
        spec = spec_of(name)
        tolerance = 2e-4 if name == "holders_table" else 1e-6
        value = spec.evaluator(np.asarray(spec.known_argmin, dtype=float))
        assert abs(value - spec.known_minimum) <= tolerance, name


def test_argmin_inside_domain():
    for name in list_functions():
        spec = spec_of(name)
        assert spec.space.contains(spec.known_argmin), name


def test_spot_values():
    assert evaluate("sphere", (3.0, 4.0)) == pytest.approx(25.0)
    assert evaluate("booth", (0.0, 0.0)) == pytest.approx(74.0)
    assert evaluate("himmelblau", (0.0, 0.0)) == pytest.approx(170.0)
    assert evaluate("goldstein_price", (0.0, 0.0)) == pytest.approx(600.0)
    assert evaluate("rastrigin", (1.0, 0.0)) == pytest.approx(1.0, abs=1e-9)
    assert evaluate("rosenbrock", (0.0, 0.0)) == pytest.approx(1.0)


def test_random_points_never_beat_minimum():
    rng = RngStream(123)
    for name in list_functions():
        spec = spec_of(name)
        points = rng.uniform(spec.space.lower, spec.space.upper, size=(200, spec.dim))
        values = np.array([spec.evaluator(p) for p in points])
        assert np.all(values >= spec.known_minimum - 1e-9), name


def test_evaluators_reject_bad_shape():
    with pytest.raises(ValueError):
        evaluate("booth", (1.0, 2.0, 3.0))
    # sphere is the one any-dimension evaluator
    assert evaluate("sphere", (1.0, 2.0, 2.0)) == pytest.approx(9.0)

"""The ten benchmark objectives with their search spaces and known optima.

Evaluation is exact, stateless and permitted outside the search space;
bounds constrain the optimizers, not the evaluators. The three separable
sum-form functions (rastrigin, rosenbrock, sphere) accept any dimension,
the rest are strictly two dimensional.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .core import OptimizationMode, SearchSpace, UnknownFunctionError

__all__ = ["ObjectiveSpec", "evaluate", "spec_of", "list_functions"]

Evaluator = Callable[[np.ndarray], float]


def _pair(point, name):
    if len(point) != 2:
        raise ValueError(f"{name} takes 2 coordinates, got {len(point)}")
    return float(point[0]), float(point[1])


def ackley(point) -> float:
    """Ackley function. Global optimum: f(0, 0) = 0."""
    x, y = _pair(point, "ackley")
    radial = -20.0 * math.exp(-0.2 * math.sqrt(0.5 * (x * x + y * y)))
    cosine = -math.exp(0.5 * (math.cos(2.0 * math.pi * x) + math.cos(2.0 * math.pi * y)))
    return radial + cosine + math.e + 20.0


def schaffer(point) -> float:
    """Schaffer function N.2. Global optimum: f(0, 0) = 0."""
    x, y = _pair(point, "schaffer")
    squares = x * x + y * y
    numerator = math.sin(x * x - y * y) ** 2 - 0.5
    denominator = (1.0 + 0.001 * squares) ** 2
    return 0.5 + numerator / denominator


def rastrigin(point) -> float:
    """Rastrigin function, any dimension. Global optimum: f(0, ..., 0) = 0."""
    if len(point) < 1:
        raise ValueError("rastrigin needs at least 1 coordinate")
    total = 10.0 * len(point)
    for coordinate in point:
        x = float(coordinate)
        total += x * x - 10.0 * math.cos(2.0 * math.pi * x)
    return total


def holders_table(point) -> float:
    """Holder's table function. Global optimum: f(8.05502, 9.66459) = -19.2085."""
    x, y = _pair(point, "holders_table")
    inner = abs(1.0 - math.sqrt(x * x + y * y) / math.pi)
    return -abs(math.sin(x) * math.cos(y) * math.exp(inner))


def rosenbrock(point) -> float:
    """Rosenbrock valley, any dimension >= 2. Global optimum: f(1, ..., 1) = 0."""
    if len(point) < 2:
        raise ValueError("rosenbrock needs at least 2 coordinates")
    total = 0.0
    for i in range(len(point) - 1):
        x = float(point[i])
        x_next = float(point[i + 1])
        total += 100.0 * (x_next - x * x) ** 2 + (1.0 - x) ** 2
    return total


def sphere(point) -> float:
    """Sphere function, any dimension. Global optimum: f(0, ..., 0) = 0."""
    if len(point) < 1:
        raise ValueError("sphere needs at least 1 coordinate")
    return float(sum(float(x) * float(x) for x in point))


def booth(point) -> float:
    """Booth function. Global optimum: f(1, 3) = 0."""
    x, y = _pair(point, "booth")
    return (x + 2.0 * y - 7.0) ** 2 + (2.0 * x + y - 5.0) ** 2


def easom(point) -> float:
    """Easom function. Global optimum: f(pi, pi) = -1."""
    x, y = _pair(point, "easom")
    return -math.cos(x) * math.cos(y) * math.exp(-((x - math.pi) ** 2 + (y - math.pi) ** 2))


def himmelblau(point) -> float:
    """Himmelblau function; four global minima. f(3, 2) = 0."""
    x, y = _pair(point, "himmelblau")
    return (x * x + y - 11.0) ** 2 + (x + y * y - 7.0) ** 2


def goldstein_price(point) -> float:
    """Goldstein-Price function. Global optimum: f(0, -1) = 3."""
    x, y = _pair(point, "goldstein_price")
    first = 1.0 + (x + y + 1.0) ** 2 * (
        19.0 - 14.0 * x + 3.0 * x * x - 14.0 * y + 6.0 * x * y + 3.0 * y * y
    )
    second = 30.0 + (2.0 * x - 3.0 * y) ** 2 * (
        18.0 - 32.0 * x + 12.0 * x * x + 48.0 * y - 36.0 * x * y + 27.0 * y * y
    )
    return first * second


@dataclass(frozen=True)
class ObjectiveSpec:
    """Registry entry for one benchmark function.

    known_argmin is one representative optimum as published; himmelblau in
    particular has three more at the same value.
    """

    name: str
    dim: int
    space: SearchSpace
    known_minimum: float
    known_argmin: tuple[float, ...]
    evaluator: Evaluator
    mode: OptimizationMode = OptimizationMode.MIN


_REGISTRY: dict[str, ObjectiveSpec] = {
    spec.name: spec
    for spec in (
        ObjectiveSpec("ackley", 2, SearchSpace(2, -5.0, 5.0), 0.0, (0.0, 0.0), ackley),
        ObjectiveSpec("schaffer", 2, SearchSpace(2, -100.0, 100.0), 0.0, (0.0, 0.0), schaffer),
        ObjectiveSpec("rastrigin", 2, SearchSpace(2, -5.12, 5.12), 0.0, (0.0, 0.0), rastrigin),
        ObjectiveSpec(
            "holders_table",
            2,
            SearchSpace(2, -10.0, 10.0),
            -19.2085,
            (8.05502, 9.66459),
            holders_table,
        ),
        ObjectiveSpec("rosenbrock", 2, SearchSpace(2, -5.0, 10.0), 0.0, (1.0, 1.0), rosenbrock),
        ObjectiveSpec("sphere", 2, SearchSpace(2, -100.0, 100.0), 0.0, (0.0, 0.0), sphere),
        ObjectiveSpec("booth", 2, SearchSpace(2, -10.0, 10.0), 0.0, (1.0, 3.0), booth),
        ObjectiveSpec(
            "easom", 2, SearchSpace(2, -100.0, 100.0), -1.0, (math.pi, math.pi), easom
        ),
        ObjectiveSpec("himmelblau", 2, SearchSpace(2, -5.0, 5.0), 0.0, (3.0, 2.0), himmelblau),
        ObjectiveSpec(
            "goldstein_price", 2, SearchSpace(2, -2.0, 2.0), 3.0, (0.0, -1.0), goldstein_price
        ),
    )
}


def list_functions() -> list[str]:
    """The ten function ids in registry order."""
    return list(_REGISTRY)


def spec_of(name: str) -> ObjectiveSpec:
    try:
        return _REGISTRY[name]
    except KeyError:
        raise UnknownFunctionError(
            f"unknown function {name!r}; valid ids: {', '.join(_REGISTRY)}"
        ) from None


def evaluate(name: str, point) -> float:
    """Evaluate one benchmark function at a point."""
    return float(spec_of(name).evaluator(np.asarray(point, dtype=float)))

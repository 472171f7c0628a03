"""Bacterial colony optimizer: explore, exploit and reproduce stages.

Each iteration runs the three stages in order, refreshes the global best
from the population's personal bests, then checks the stagnation
checkpoint. Randomness is consumed in a fixed order: the seeding batch;
then per explore round and member the tumble direction normals plus one
uniform per out-of-bounds coordinate; the exploit stage draws nothing; the
reproduce stage draws only when a lone survivor forces fresh reseeding.
"""

from __future__ import annotations

import logging
import math
import time
from dataclasses import dataclass, field

import numpy as np

from .core import (
    Bacterium,
    ConfigurationError,
    OptimizationMode,
    OptimizerResult,
    RngStream,
    SearchSpace,
    better_than,
    k_nearest,
    quality_key,
    repair_bounds,
    seed_population,
)

__all__ = [
    "AbcoConfig",
    "RunState",
    "tumble_step",
    "explore_stage",
    "move_toward",
    "exploit_stage",
    "reproduce_stage",
    "early_stop_check",
    "run_abco",
]

logger = logging.getLogger(__name__)


def _round_half_up(value: float) -> int:
    return int(math.floor(value + 0.5))


@dataclass
class AbcoConfig:
    """Tunables for one colony run.

    size: population size.
    iterations: iteration budget.
    step_size: tumble displacement and cap on directed moves.
    explore_steps: explore passes per iteration.
    exploit_steps: exploit passes per iteration.
    tumble_steps: tumble rounds per explore pass.
    improvement_threshold: minimum gain before the directed step fires.
    survivor_fraction: fraction of the population retained at reproduction.
    neighbor_count: neighbours considered for exploitation and regeneration.
    generation_gap: percent of the budget between stagnation checkpoints.
    unchanged_threshold: percent of frozen personal bests that stops the run.
    mode: whether smaller or larger objective values win.
    """

    size: int = 25
    iterations: int = 100
    step_size: float = 1.0
    explore_steps: int = 4
    exploit_steps: int = 1
    tumble_steps: int = 1
    improvement_threshold: float = 0.05
    survivor_fraction: float = 0.8
    neighbor_count: int = 2
    generation_gap: float = 25.0
    unchanged_threshold: float = 80.0
    mode: OptimizationMode = OptimizationMode.MIN

    def __post_init__(self):
        if isinstance(self.mode, str):
            self.mode = OptimizationMode(self.mode)
        _require(self.size >= 1, "size", self.size, "at least 1")
        _require(self.iterations >= 1, "iterations", self.iterations, "at least 1")
        _require(self.step_size > 0, "step_size", self.step_size, "positive")
        _require(self.explore_steps >= 1, "explore_steps", self.explore_steps, "at least 1")
        _require(self.exploit_steps >= 0, "exploit_steps", self.exploit_steps, "non-negative")
        _require(self.tumble_steps >= 1, "tumble_steps", self.tumble_steps, "at least 1")
        _require(
            self.improvement_threshold >= 0,
            "improvement_threshold",
            self.improvement_threshold,
            "non-negative",
        )
        _require(
            0 < self.survivor_fraction <= 1,
            "survivor_fraction",
            self.survivor_fraction,
            "in (0, 1]",
        )
        _require(self.neighbor_count >= 1, "neighbor_count", self.neighbor_count, "at least 1")
        _require(
            0 < self.generation_gap <= 100,
            "generation_gap",
            self.generation_gap,
            "in (0, 100]",
        )
        _require(
            0 < self.unchanged_threshold <= 100,
            "unchanged_threshold",
            self.unchanged_threshold,
            "in (0, 100]",
        )

    @property
    def survivor_count(self) -> int:
        """Members retained at reproduction: max(1, round-half-up of the split)."""
        return max(1, _round_half_up(self.survivor_fraction * self.size))

    @property
    def checkpoint_period(self) -> int:
        """Iterations between stagnation checks."""
        return max(1, _round_half_up(self.generation_gap / 100.0 * self.iterations))


def _require(condition: bool, name: str, value, expectation: str):
    if not condition:
        raise ConfigurationError(f"{name} must be {expectation}, got {value}")


@dataclass
class RunState:
    """Mutable state of one run between stages."""

    population: list[Bacterium]
    iteration: int
    global_best_value: float
    global_best_position: np.ndarray
    early_stopped: bool = False
    iterations_executed: int = 0
    evaluations: int = 0
    diagnostics: dict = field(default_factory=dict)


def _gain(best: float, candidate: float, mode: OptimizationMode) -> float:
    """Signed improvement of `candidate` over the incumbent `best`."""
    if mode is OptimizationMode.MIN:
        return best - candidate
    return candidate - best


def tumble_step(
    bacterium: Bacterium, cfg: AbcoConfig, space: SearchSpace, rng: RngStream
) -> np.ndarray:
    """New position after one tumble: a step_size hop in a random direction.

    The direction comes from normalised standard normals, redrawn in the
    (measure-zero) case of an all-zero draw, so it is isotropic in any
    dimension. The result is repaired into bounds.
    """
    direction = rng.standard_normal(space.dim)
    norm = float(np.sqrt(direction @ direction))
    while norm == 0.0:
        direction = rng.standard_normal(space.dim)
        norm = float(np.sqrt(direction @ direction))
    moved = bacterium.position + (cfg.step_size / norm) * direction
    return repair_bounds(moved, space, rng)


def move_toward(current, target, step_size: float) -> np.ndarray:
    """Step from current toward target by at most step_size, never past it.

    Returns target itself once it is within reach, and current when the two
    coincide.
    """
    current = np.asarray(current, dtype=float)
    target = np.asarray(target, dtype=float)
    if current.shape != target.shape:
        raise ValueError(f"vector length mismatch: {current.shape} vs {target.shape}")
    offset = target - current
    distance = float(np.sqrt(offset @ offset))
    if distance <= step_size:
        return target.copy()
    return current + (step_size / distance) * offset


def explore_stage(state: RunState, cfg: AbcoConfig, objective, space, rng) -> RunState:
    """Random-walk passes with personal-best tracking and threshold gating.

    Per member per tumble round: tumble, evaluate, measure the gain against
    the personal best before touching it, record any strict gain as the new
    personal best, and when the gain beats improvement_threshold take one
    directed step toward the personal best. A non-finite evaluation rolls
    the member back to where the round started.
    """
    mode = cfg.mode
    diagnostics = state.diagnostics
    for _ in range(cfg.explore_steps):
        for _ in range(cfg.tumble_steps):
            for member in state.population:
                moved = tumble_step(member, cfg, space, rng)
                value = float(objective(moved))
                state.evaluations += 1
                if not math.isfinite(value):
                    diagnostics["rolled_back_moves"] = diagnostics.get("rolled_back_moves", 0) + 1
                    continue
                member.position = moved
                member.solution = value
                gain = _gain(member.best_solution, value, mode)
                if gain > 0.0:
                    member.best_solution = value
                    member.best_position = moved.copy()
                if gain > cfg.improvement_threshold:
                    # The gate can only fire right after the personal best
                    # moved to the current position, so the directed step
                    # has nowhere to go; it is still counted because the
                    # threshold crossing itself is what the gate observes.
                    diagnostics["directed_steps"] = diagnostics.get("directed_steps", 0) + 1
                    stepped = move_toward(member.position, member.best_position, cfg.step_size)
                    if not np.array_equal(stepped, member.position):
                        member.position = repair_bounds(stepped, space, rng)
                        member.solution = float(objective(member.position))
                        state.evaluations += 1
    return state


def exploit_stage(state: RunState, cfg: AbcoConfig, objective, space, rng) -> RunState:
    """Pull each member toward the best find among its k nearest neighbours.

    The target is the strongest personal best held within the member's
    spatial neighbourhood; movement happens only when that memory is
    strictly better than the member's own, so local champions hold their
    ground. Members update sequentially, so later members see earlier
    moves within the same pass.
    """
    population = state.population
    if len(population) < 2:
        logger.warning("exploit stage skipped: population of one has no neighbours")
        state.diagnostics["exploit_skipped"] = state.diagnostics.get("exploit_skipped", 0) + 1
        return state
    mode = cfg.mode
    for _ in range(cfg.exploit_steps):
        for index, member in enumerate(population):
            neighbours = k_nearest(population, index, cfg.neighbor_count)
            target_index = None
            target_value = member.best_solution
            for neighbour_index, _ in neighbours:
                candidate = population[neighbour_index].best_solution
                if better_than(candidate, target_value, mode):
                    target_index = neighbour_index
                    target_value = candidate
            if target_index is None:
                continue
            moved = move_toward(member.position, population[target_index].best_position, cfg.step_size)
            repaired = repair_bounds(moved, space, rng)
            value = float(objective(repaired))
            state.evaluations += 1
            if not math.isfinite(value):
                state.diagnostics["rolled_back_moves"] = (
                    state.diagnostics.get("rolled_back_moves", 0) + 1
                )
                continue
            member.position = repaired
            member.solution = value
            state.diagnostics["exploit_moves"] = state.diagnostics.get("exploit_moves", 0) + 1
            if _gain(member.best_solution, value, mode) > 0.0:
                member.best_solution = value
                member.best_position = repaired.copy()
    return state


def reproduce_stage(state: RunState, cfg: AbcoConfig, objective, space, rng) -> RunState:
    """Keep the best slice of the population and regenerate the rest.

    Survivors are the top survivor_fraction under the mode's ordering of
    current solutions (stable, so ties keep their original order). Each
    replacement takes a guide from the survivors round-robin and places
    itself at the linear-rank-weighted average of the k survivors closest
    to the guide in that ranking (ties toward the better side), best of
    the chosen weighted heaviest; with a single survivor the replacements
    reseed uniformly instead. Replacements start their personal-best
    memory from their own birth position.
    """
    mode = cfg.mode
    ranked = sorted(state.population, key=lambda member: quality_key(member.solution, mode))
    survivors = ranked[: cfg.survivor_count]
    retained = len(survivors)
    needed = cfg.size - retained

    replacements: list[Bacterium] = []
    if needed > 0:
        if retained == 1:
            replacements = seed_population(space, needed, objective, rng)
            state.evaluations += needed
        else:
            neighbour_count = min(cfg.neighbor_count, retained - 1)
            weight_total = neighbour_count * (neighbour_count + 1) / 2.0
            for i in range(needed):
                guide_index = i % retained
                chosen = sorted(
                    (j for j in range(retained) if j != guide_index),
                    key=lambda j: (abs(j - guide_index), j),
                )[:neighbour_count]
                # ranked[] is already best-first, so ascending index is
                # ascending solution rank within the chosen neighbours.
                chosen.sort()
                position = np.zeros(space.dim)
                for rank, neighbour_index in enumerate(chosen, start=1):
                    weight = (neighbour_count - rank + 1) / weight_total
                    position += weight * survivors[neighbour_index].position
                value = float(objective(position))
                state.evaluations += 1
                replacements.append(
                    Bacterium(
                        position=position,
                        solution=value,
                        best_position=position.copy(),
                        best_solution=value,
                        previous_best_solution=value,
                    )
                )
    state.population = survivors + replacements
    return state


def early_stop_check(state: RunState, cfg: AbcoConfig) -> bool:
    """Stagnation checkpoint; True when the run should stop now.

    Only iterations that are positive multiples of the checkpoint period
    count, and the final iteration is excluded because the budget ends
    there anyway. At a checkpoint the run stops when the percentage of
    members whose personal best exactly equals its snapshot exceeds
    unchanged_threshold; otherwise every snapshot is refreshed.
    """
    period = cfg.checkpoint_period
    if state.iteration % period != 0 or state.iteration >= cfg.iterations:
        return False
    population = state.population
    unchanged = sum(
        1 for member in population if member.best_solution == member.previous_best_solution
    )
    percent = unchanged / len(population) * 100.0
    state.diagnostics.setdefault("checkpoints", []).append((state.iteration, percent))
    if percent > cfg.unchanged_threshold:
        return True
    for member in population:
        member.previous_best_solution = member.best_solution
    return False


def _refresh_global_best(state: RunState, mode: OptimizationMode):
    for member in state.population:
        if better_than(member.best_solution, state.global_best_value, mode):
            state.global_best_value = member.best_solution
            state.global_best_position = member.best_position.copy()


def run_abco(objective, cfg: AbcoConfig, rng: RngStream) -> OptimizerResult:
    """Seed the colony, iterate the three stages, report the best find.

    `objective` is an ObjectiveSpec; its evaluator and space drive the run
    while cfg.mode decides the direction of improvement. The global best
    starts from the seeded population and is refreshed after reproduction
    each iteration.
    """
    started = time.perf_counter()
    space = objective.space
    evaluator = objective.evaluator
    mode = cfg.mode

    population = seed_population(space, cfg.size, evaluator, rng)
    champion = min(population, key=lambda member: quality_key(member.best_solution, mode))
    state = RunState(
        population=population,
        iteration=0,
        global_best_value=champion.best_solution,
        global_best_position=champion.best_position.copy(),
        evaluations=cfg.size,
        diagnostics={"best_history": []},
    )

    for iteration in range(1, cfg.iterations + 1):
        state.iteration = iteration
        explore_stage(state, cfg, evaluator, space, rng)
        exploit_stage(state, cfg, evaluator, space, rng)
        reproduce_stage(state, cfg, evaluator, space, rng)
        _refresh_global_best(state, mode)
        state.diagnostics["best_history"].append(state.global_best_value)
        state.iterations_executed = iteration
        if early_stop_check(state, cfg):
            state.early_stopped = True
            break

    return OptimizerResult(
        best_value=state.global_best_value,
        best_position=state.global_best_position.copy(),
        iterations_executed=state.iterations_executed,
        evaluations=state.evaluations,
        early_stopped=state.early_stopped,
        runtime_seconds=time.perf_counter() - started,
        diagnostics=state.diagnostics,
    )

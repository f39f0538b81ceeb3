# -*- coding: utf-8 -*-
"""
****************************************************
*                  Hybrid Sizer                    *
*            (c) 2024 Hybrid Sizer developers      *
****************************************************
"""
import logging
import multiprocessing
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple
from tqdm import tqdm
from src.model.dispatch_control.system_config import SystemConfig, SIZING_FIELDS
from src.model.dispatch_control.dispatch_engine import DispatchInputs, DispatchAggregates
from src.model.economics_control.finance import FinanceSpec
from src.model.economics_control.costing import ComponentPrices, EconomicSummary, system_summary
from src.model.optimization_control.search_space import SearchSpace, Constraints, enumerate_candidates


LOGGER = logging.getLogger("HybridSizer.Optimizer")
STATUS_OK = "ok"
STATUS_NO_FEASIBLE = "no_feasible_candidate"


@dataclass(frozen=True)
class EvaluationInputs(object):
    """
    Everything a candidate evaluation needs besides the candidate.
    """
    dispatch: DispatchInputs
    prices: ComponentPrices = field(default_factory=ComponentPrices)
    finance: FinanceSpec = field(default_factory=FinanceSpec)


@dataclass(frozen=True)
class CandidateEvaluation(object):
    """
    Outcome of one candidate. A candidate is feasible if it violates no constraint.
    """
    config: SystemConfig
    aggregates: DispatchAggregates
    summary: EconomicSummary
    violations: Tuple[dict, ...] = ()

    @property
    def feasible(self) -> bool:
        return not self.violations

    @property
    def reason(self) -> str:
        """
        Violated constraints with their margins, empty for feasible candidates.
        """
        return "; ".join(f"{violation['constraint']} {violation['operator']} {violation['limit']} "
                         f"(actual {violation['actual']:.6g}, margin {violation['margin']:.6g})"
                         for violation in self.violations)

    def rank_key(self) -> tuple:
        return (self.summary.npc, *self.config.sizing_key())

    def search_key(self) -> tuple:
        """
        Ordering used by local search: feasible candidates by NPC, infeasible ones behind them by
        accumulated constraint violation.
        """
        if self.feasible:
            return (0, self.summary.npc, *self.config.sizing_key())
        return (1, sum(-violation["margin"] for violation in self.violations), *self.config.sizing_key())


@dataclass(frozen=True)
class RankedResult(object):
    """
    Feasible candidates in ascending NPC order, ties broken by sizing, and the excluded candidates
    in evaluation order.
    """
    entries: Tuple[CandidateEvaluation, ...]
    infeasible: Tuple[CandidateEvaluation, ...]

    @property
    def status(self) -> str:
        return STATUS_OK if self.entries else STATUS_NO_FEASIBLE

    @property
    def best(self) -> Optional[CandidateEvaluation]:
        return self.entries[0] if self.entries else None

    @property
    def evaluated(self) -> int:
        return len(self.entries) + len(self.infeasible)

    def binding_statistics(self) -> Dict[str, dict]:
        """
        Method for summarizing how often each constraint excluded a candidate.
        :return: Dictionary mapping constraint names to violation counts and the closest margin.
        """
        statistics = {}
        for evaluation in self.infeasible:
            for violation in evaluation.violations:
                entry = statistics.setdefault(violation["constraint"], {
                    "operator": violation["operator"], "limit": violation["limit"],
                    "violations": 0, "closest_margin": violation["margin"]})
                entry["violations"] += 1
                entry["closest_margin"] = max(entry["closest_margin"], violation["margin"])
        return {"evaluated": self.evaluated, "feasible": len(self.entries), "constraints": statistics}


def evaluate(candidate: SystemConfig, inputs: EvaluationInputs, constraints: Constraints) -> CandidateEvaluation:
    """
    Function for simulating and costing one candidate and checking it against the constraints.
    :param candidate: Candidate configuration.
    :param inputs: Evaluation inputs.
    :param constraints: Feasibility constraints.
    :return: Candidate evaluation.
    """
    result = inputs.dispatch.simulate(candidate)
    summary = system_summary(candidate, result, inputs.prices, inputs.finance, require_served=False)
    violations = constraints.filter_mask().get_violations(result.aggregates)
    return CandidateEvaluation(candidate, result.aggregates, summary, tuple(violations))


def rank(evaluations: Sequence[CandidateEvaluation]) -> RankedResult:
    """
    Function for ranking evaluations.
    :param evaluations: Evaluations in enumeration order.
    :return: Ranked result.
    """
    feasible = sorted((evaluation for evaluation in evaluations if evaluation.feasible),
                      key=CandidateEvaluation.rank_key)
    return RankedResult(tuple(feasible), tuple(evaluation for evaluation in evaluations if not evaluation.feasible))


_WORKER_CONTEXT = {}


def _initiate_worker(inputs: EvaluationInputs, constraints: Constraints) -> None:
    _WORKER_CONTEXT["inputs"] = inputs
    _WORKER_CONTEXT["constraints"] = constraints


def _evaluate_in_worker(candidate: SystemConfig) -> CandidateEvaluation:
    return evaluate(candidate, _WORKER_CONTEXT["inputs"], _WORKER_CONTEXT["constraints"])


def evaluate_all(candidates: Sequence[SystemConfig], inputs: EvaluationInputs, constraints: Constraints,
                 workers: int = 1, progress: bool = False) -> List[CandidateEvaluation]:
    """
    Function for evaluating candidates, optionally over a process pool.
    Results keep the order of the candidates regardless of the number of workers.
    :param candidates: Candidate configurations.
    :param inputs: Evaluation inputs.
    :param constraints: Feasibility constraints.
    :param workers: Number of worker processes. Defaults to 1 for in-process evaluation.
    :param progress: Flag, declaring whether to show a progress bar. Defaults to False.
    :return: Evaluations in candidate order.
    """
    workers = max(1, min(int(workers), len(candidates)))
    LOGGER.info(f"evaluating {len(candidates)} candidates with {workers} worker(s) ...")
    bar = dict(total=len(candidates), desc="Evaluating candidates", unit="candidate",
               disable=not progress or len(candidates) < 2)
    if workers == 1:
        return [evaluate(candidate, inputs, constraints) for candidate in tqdm(candidates, **bar)]
    chunksize = max(1, len(candidates) // (4 * workers))
    with multiprocessing.Pool(processes=workers, initializer=_initiate_worker,
                              initargs=(inputs, constraints)) as pool:
        return list(tqdm(pool.imap(_evaluate_in_worker, candidates, chunksize=chunksize), **bar))


def optimize(space: SearchSpace, inputs: EvaluationInputs, constraints: Constraints, base: SystemConfig = None,
             workers: int = 1, progress: bool = False) -> RankedResult:
    """
    Function for exhaustively evaluating a search space and ranking the feasible candidates by NPC.
    :param space: Search space.
    :param inputs: Evaluation inputs.
    :param constraints: Feasibility constraints.
    :param base: Configuration carrying specs and strategy. Defaults to None in which case defaults are used.
    :param workers: Number of worker processes. Defaults to 1.
    :param progress: Flag, declaring whether to show a progress bar. Defaults to False.
    :return: Ranked result, its status tells whether any candidate is feasible.
    """
    candidates = enumerate_candidates(space, base)
    result = rank(evaluate_all(candidates, inputs, constraints, workers, progress))
    LOGGER.info(f"ranked {len(result.entries)} feasible and {len(result.infeasible)} infeasible candidates")
    return result


def local_search(space: SearchSpace, inputs: EvaluationInputs, constraints: Constraints, base: SystemConfig = None,
                 start: Sequence[int] = None, max_rounds: int = 20) -> RankedResult:
    """
    Function for coordinate-descent search over a search space.
    Each round scans every dimension in turn with the other sizes fixed and moves to the best value,
    until a round brings no improvement.
    :param space: Search space.
    :param inputs: Evaluation inputs.
    :param constraints: Feasibility constraints.
    :param base: Configuration carrying specs and strategy. Defaults to None in which case defaults are used.
    :param start: Start index per dimension. Defaults to None in which case the largest sizes are used.
    :param max_rounds: Maximum number of rounds. Defaults to 20.
    :return: Ranked result over all candidates visited.
    """
    base = SystemConfig() if base is None else base
    dimensions = space.dimensions
    current = list(start) if start is not None else [len(values) - 1 for values in dimensions]
    cache: Dict[Tuple[int, ...], CandidateEvaluation] = {}

    def visit(index: Tuple[int, ...]) -> CandidateEvaluation:
        if index not in cache:
            cache[index] = evaluate(space.config_at(base, index), inputs, constraints)
        return cache[index]

    best = visit(tuple(current))
    for round_number in range(max_rounds):
        improved = False
        for axis, values in enumerate(dimensions):
            for position in range(len(values)):
                index = tuple(current[:axis] + [position] + current[axis + 1:])
                candidate = visit(index)
                if candidate.search_key() < best.search_key():
                    best = candidate
                    current = list(index)
                    improved = True
        LOGGER.debug(f"local search round {round_number}: best {best.config.sizing_key()}")
        if not improved:
            break
    ordered = [cache[index] for index in sorted(cache)]
    LOGGER.info(f"local search visited {len(ordered)} of {space.size} candidates")
    return rank(ordered)


def sizing_of(evaluation: CandidateEvaluation) -> dict:
    return dict(zip(SIZING_FIELDS, evaluation.config.sizing_key()))

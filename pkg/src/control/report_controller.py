# -*- coding: utf-8 -*-
"""
****************************************************
*                  Hybrid Sizer                    *
*            (c) 2024 Hybrid Sizer developers      *
****************************************************
"""
import logging
import os
from typing import Dict, Union
import pandas as pd
from src.control.simulation_controller import (BaselineOutcome, SimulationOutcome, OptimizationOutcome,
                                               SynthesisOutcome)
from src.model.exceptions import ReportException
from src.model.component_control.converter_model import converter_sizing_hint
from src.model.dispatch_control.system_config import SIZING_FIELDS
from src.model.economics_control.costing import cost_shares
from src.model.optimization_control.optimizer import CandidateEvaluation, sizing_of
from src.model.resource_control.time_series import serialize_hourly_csv, monthly_means
from src.utility.bronze import json_utility
from src.utility.silver import file_system_utility


Outcome = Union[BaselineOutcome, SimulationOutcome, OptimizationOutcome, SynthesisOutcome]
RANKED_COLUMNS = ["rank", *SIZING_FIELDS, "npc", "lcoe", "operating_cost", "renewable_fraction", "unmet_fraction",
                  "fuel_l", "feasible"]


def _write(path: str, content: Union[str, dict, pd.DataFrame]) -> str:
    """
    Internal function for writing one report file.
    :param path: Target path.
    :param content: Text, JSON-ready dictionary or data frame.
    :return: Written path.
    """
    try:
        if isinstance(content, pd.DataFrame):
            file_system_utility.write_text(content.to_csv(index=False, lineterminator="\n"), path)
        elif isinstance(content, dict):
            json_utility.save(content, path)
        else:
            file_system_utility.write_text(content, path)
    except OSError as ex:
        raise ReportException(path, f"failed to write report: {ex.strerror or ex}") from ex
    return path


def _evaluation_record(evaluation: CandidateEvaluation, rank: int = None) -> dict:
    aggregates = evaluation.aggregates
    return {
        "rank": rank,
        **sizing_of(evaluation),
        "npc": evaluation.summary.npc,
        "lcoe": evaluation.summary.lcoe,
        "operating_cost": evaluation.summary.operating_cost,
        "renewable_fraction": aggregates.renewable_fraction,
        "unmet_fraction": aggregates.unmet_fraction,
        "fuel_l": aggregates.fuel_l,
        "feasible": evaluation.feasible
    }


def _baseline_files(outcome: BaselineOutcome) -> Dict[str, Union[dict, pd.DataFrame]]:
    stats = outcome.load_stats
    return {
        "summary.json": {
            "header": outcome.header,
            "load": {"annual_kwh": outcome.summary.served_kwh, "avg_daily_kwh": stats.avg_daily_kwh,
                     "peak_kw": stats.peak_kw, "load_factor": stats.load_factor},
            "tariff": outcome.tariff,
            "economics": outcome.summary.to_dict(),
            "emissions": outcome.emissions.to_dict()["total"]
        },
        "costs.csv": outcome.summary.to_frame(),
        "emissions.json": {"header": outcome.header, **outcome.emissions.to_dict()}
    }


def _simulation_files(outcome: SimulationOutcome) -> Dict[str, Union[dict, pd.DataFrame]]:
    config = outcome.config
    return {
        "summary.json": {
            "header": outcome.header,
            "system": dict(zip(SIZING_FIELDS, config.sizing_key())),
            "dispatch": outcome.dispatch.aggregates.to_dict(),
            "economics": outcome.summary.to_dict(),
            "emissions": outcome.emissions.to_dict()["total"],
            "checks": {"max_balance_residual_kw": outcome.max_balance_residual_kw,
                       "soc_replay_identical": outcome.soc_replay_identical,
                       "converter_sizing_hint_kw": converter_sizing_hint(
                           float(outcome.dispatch.column("load_kw").max()), config.converter.efficiency)}
        },
        "hourly.csv": outcome.dispatch.to_frame(),
        "costs.csv": outcome.summary.to_frame(),
        "emissions.json": {"header": outcome.header, **outcome.emissions.to_dict()},
        "monthly_production.csv": outcome.dispatch.monthly_production(),
        "cost_shares.csv": cost_shares(outcome.summary)
    }


def _optimization_files(outcome: OptimizationOutcome) -> Dict[str, Union[dict, pd.DataFrame]]:
    ranked = outcome.ranked
    records = [_evaluation_record(evaluation, rank) for rank, evaluation in enumerate(ranked.entries, start=1)]
    best = ranked.best
    return {
        "ranked.csv": pd.DataFrame(records, columns=RANKED_COLUMNS),
        "ranked.json": {
            "header": outcome.header,
            "ranked": records,
            "infeasible": [{**_evaluation_record(evaluation), "reason": evaluation.reason}
                           for evaluation in ranked.infeasible]
        },
        "summary.json": {
            "header": outcome.header,
            "method": outcome.method,
            "status": ranked.status,
            "statistics": ranked.binding_statistics(),
            "best": None if best is None else {**_evaluation_record(best, 1),
                                               "economics": best.summary.to_dict(),
                                               "dispatch": best.aggregates.to_dict()}
        }
    }


def _synthesis_files(outcome: SynthesisOutcome) -> Dict[str, Union[str, dict]]:
    files = {f"{name}.csv": serialize_hourly_csv(series) for name, series in outcome.series.items()}
    files["summary.json"] = {
        "header": outcome.header,
        "series": {name: {"quantity": series.quantity.value, "annual_mean": series.mean,
                          "monthly_means": monthly_means(series).values}
                   for name, series in outcome.series.items()}
    }
    return files


def write_reports(outcome: Outcome, out_dir: str) -> Dict[str, str]:
    """
    Function for writing the report files of a command outcome.
    File names are fixed per command, rewriting identical outcomes yields identical files.
    :param outcome: Command outcome.
    :param out_dir: Output directory, created if missing.
    :return: Dictionary mapping file names to written paths.
    """
    logger = logging.getLogger("HybridSizer.ReportController")
    if isinstance(outcome, BaselineOutcome):
        files = _baseline_files(outcome)
    elif isinstance(outcome, SimulationOutcome):
        files = _simulation_files(outcome)
    elif isinstance(outcome, OptimizationOutcome):
        files = _optimization_files(outcome)
    elif isinstance(outcome, SynthesisOutcome):
        files = _synthesis_files(outcome)
    else:
        raise TypeError(f"no reports for outcome type {type(outcome).__name__}")
    logger.info(f"writing reports to {out_dir} ...")
    try:
        file_system_utility.safely_create_path(out_dir)
    except OSError as ex:
        raise ReportException(out_dir, f"failed to create output directory: {ex.strerror or ex}") from ex
    return {name: _write(os.path.join(out_dir, name), content) for name, content in files.items()}

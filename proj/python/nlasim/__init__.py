# Copyright 2026 The nlasim Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Python bindings for the nlasim heralded-amplifier simulator."""

import json as _json

from ._core import (
    ConfigError,
    InputModel,
    InterferometerConfig,
    NlaConfig,
    StageConfig,
    TruncationError,
    adjusted_gain,
    analytic_gain,
    coherent_amplitudes,
    concurrence_report,
    distinguishability_bound,
    epr_distill,
    experiment_names,
    fit_harmonic,
    lossy_source_output,
    mixing_condition_check,
    nla_full,
    run_interferometer,
    stage_gain,
    success_probability_analytic,
)
from ._core import run_experiment as _run_experiment


def run_experiment(name, config_text="", threads=1, format="dict"):
    """Run a CLI experiment. format is "dict", "json" or "csv"."""
    if format == "dict":
        return _json.loads(_run_experiment(name, config_text, threads, "json"))
    return _run_experiment(name, config_text, threads, format)


__all__ = [
    "ConfigError",
    "InputModel",
    "InterferometerConfig",
    "NlaConfig",
    "StageConfig",
    "TruncationError",
    "adjusted_gain",
    "analytic_gain",
    "coherent_amplitudes",
    "concurrence_report",
    "distinguishability_bound",
    "epr_distill",
    "experiment_names",
    "fit_harmonic",
    "lossy_source_output",
    "mixing_condition_check",
    "nla_full",
    "run_experiment",
    "run_interferometer",
    "stage_gain",
    "success_probability_analytic",
]

# Copyright 2026 The Loschmidt Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Loschmidt echoes and rate functions for quantum quenches."""

from ._core import (
    CriticalTimes,
    CuspReport,
    LoschmidtError,
    LoschmidtTrace,
    ThermoRateTrace,
    TimeGrid,
    __version__,
    bose_site_echo,
    critical_times,
    detect_cusps,
    dispersion,
    ed_quench_trace,
    free_fermion_trace,
    ladder_echo,
    run_suite,
    thermo_rate,
    two_level_echo,
)

__all__ = [
    "CriticalTimes",
    "CuspReport",
    "LoschmidtError",
    "LoschmidtTrace",
    "ThermoRateTrace",
    "TimeGrid",
    "__version__",
    "bose_site_echo",
    "critical_times",
    "detect_cusps",
    "dispersion",
    "ed_quench_trace",
    "free_fermion_trace",
    "ladder_echo",
    "run_suite",
    "thermo_rate",
    "two_level_echo",
]

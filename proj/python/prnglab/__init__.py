# Copyright 2026 The prnglab Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Generator streams, the statistical battery and campaign reports."""

from prnglab._core import (
    ArgumentError,
    ConfigError,
    ParseError,
    StateError,
    __version__,
    classify,
    format_percent,
    generator_names,
    headroom,
    initial_state,
    kat_check,
    multiple_testing_probability,
    profile_names,
    profile_text,
    profile_words,
    report,
    run_battery,
    run_campaign,
    words,
)

__all__ = [
    "ArgumentError",
    "ConfigError",
    "ParseError",
    "StateError",
    "__version__",
    "classify",
    "format_percent",
    "generator_names",
    "headroom",
    "initial_state",
    "kat_check",
    "multiple_testing_probability",
    "profile_names",
    "profile_text",
    "profile_words",
    "report",
    "run_battery",
    "run_campaign",
    "words",
]

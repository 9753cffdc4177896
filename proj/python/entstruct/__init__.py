# Copyright 2026 The entstruct Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Entanglement-structure diagrams of stabilizer states.

Qubit arguments are 0-based. Diagram documents use the 1-based labels of the
JSON format written by the command-line tool.
"""

import csv
import io
import json

from ._core import (
    DocumentError,
    ParseError,
    Tableau,
    ValidationError,
    diagram_dot,
    diagram_text,
    entropy_bits,
    entropy_upper_bound,
    named_state,
    total_correlations,
)
from . import _core

__all__ = [
    "DocumentError",
    "ParseError",
    "Tableau",
    "ValidationError",
    "analyze",
    "diagram_dot",
    "diagram_text",
    "entropy_bits",
    "entropy_upper_bound",
    "named_state",
    "run_ensemble",
    "total_correlations",
]


def analyze(tableau, metrics=True, prune=False, threads=1):
    """Builds the diagram and returns it as a decoded JSON document."""
    return json.loads(_core.diagram_json(tableau, metrics, prune, threads))


def run_ensemble(kind, L, samples=100, seed=0, layers=None, threads=1, allow_large=False):
    """Returns (aggregate, records): the aggregate dict and a list of per-sample CSV rows."""
    aggregate, text = _core.run_ensemble(kind, L, samples, seed, layers, threads, allow_large)
    return json.loads(aggregate), list(csv.DictReader(io.StringIO(text)))

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

import pytest

import entstruct


def test_four_qubit_example():
    t = entstruct.named_state("fig1")
    doc = entstruct.analyze(t)
    assert doc["schema"] == "1"
    assert doc["metrics"]["depth"] == 4
    assert doc["metrics"]["layers"] == 2
    assert doc["metrics"]["min_weight"] == 2
    root = doc["roots"][0]
    assert root["w"] == 2
    assert [c["children"][0]["qubit"] for c in root["children"]] == [1, 3]
    assert entstruct.entropy_bits(t, [0, 1]) == 1
    assert entstruct.entropy_upper_bound(t, [0, 1]) == 1


def test_tableau_round_trip_and_gates():
    t = entstruct.Tableau(2)
    t.apply("H", [0])
    t.apply("CNOT", [0, 1])
    assert t.generators() == ["X1 X2", "Z1 Z2"]
    assert entstruct.entropy_bits(t, [0]) == 1
    assert entstruct.Tableau.parse(str(t)) == t
    assert t.measure("Z1 Z2", seed=1) == 1


def test_named_states_and_errors():
    assert entstruct.named_state("cluster1d", 8, boundary="obc").generators()[0] == "X1 Z2"
    assert entstruct.total_correlations(entstruct.named_state("ghz", 4), [[0], [1]]) == 1
    with pytest.raises(ValueError):
        entstruct.named_state("fig2")
    with pytest.raises(ValueError):
        entstruct.named_state("nope", 3)
    with pytest.raises(ValueError):
        entstruct.Tableau.parse("X1 Z2\nZ1\n")
    assert entstruct.named_state("fig2", complete=True).num_qubits == 10


def test_formats():
    t = entstruct.named_state("ghz", 3)
    assert entstruct.diagram_dot(t).startswith("graph entstruct {")
    assert entstruct.diagram_text(t).startswith("w=2 {1,2,3}")


def test_ensemble_is_deterministic():
    agg, rows = entstruct.run_ensemble("measurement", 8, samples=5, seed=3)
    again, rows_again = entstruct.run_ensemble("measurement", 8, samples=5, seed=3, threads=2)
    assert agg == again and rows == rows_again
    assert agg["s_ee_bits"]["count"] == 5
    assert len(rows) == 5 and rows[0]["kind"] == "measurement"

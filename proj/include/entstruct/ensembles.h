// Copyright 2026 The entstruct Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ENTSTRUCT_ENSEMBLES_H
#define ENTSTRUCT_ENSEMBLES_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "entstruct/rng.h"
#include "entstruct/tableau.h"

namespace entstruct {

enum class EnsembleKind { Unitary, MeasurementOnly };

/// "unitary" or "measurement".
std::string_view kind_name(EnsembleKind kind);
/// Accepts "unitary", "measurement" and "measurement_only".
std::optional<EnsembleKind> parse_kind(std::string_view text);

/// One brickwork layer of independent uniform two-qubit Cliffords. Even `layer_index` acts on
/// pairs (1,2),(3,4),...; odd on (2,3),(4,5),...
void apply_unitary_layer(StabilizerTableau &t, size_t layer_index, Rng &rng);

/// L measurements of random weight-3 Paulis on neighbouring triples (j, j+1, j+2), j uniform.
void apply_measurement_layer(StabilizerTableau &t, Rng &rng);

/// Evolves |0...0> through `layers` layers. L >= 2 for unitary, L >= 3 for measurement-only.
StabilizerTableau evolve_unitary(size_t L, size_t layers, Rng &rng);
StabilizerTableau evolve_measurement_only(size_t L, size_t layers, Rng &rng);

/// Entropy of the first floor(L/2) qubits, in bits.
size_t half_cut_entropy_bits(const StabilizerTableau &t);

struct EnsembleSpec {
    EnsembleKind kind = EnsembleKind::Unitary;
    size_t L = 8;
    size_t samples = 100;
    uint64_t seed = 0;
    /// Empty means 4L.
    std::optional<size_t> layers;
    /// Sample-level workers; 0 means hardware concurrency.
    unsigned threads = 1;
    /// Lifts the L <= 24 cap on unitary runs.
    bool allow_large = false;

    size_t resolved_layers() const {
        return layers.value_or(4 * L);
    }
};

struct EnsembleRecord {
    EnsembleKind kind = EnsembleKind::Unitary;
    size_t L = 0;
    uint64_t seed = 0;
    size_t sample = 0;
    size_t s_ee_bits = 0;
    size_t depth = 0;
    std::optional<uint32_t> min_weight;
    std::optional<double> mean_range;
    size_t layers = 0;
    /// Half-cut entropy averaged over the last quarter of the evolution is within one bit of its
    /// average over the quarter before.
    bool plateau = true;
    /// Set when the sample failed; the metric fields are then meaningless.
    std::optional<std::string> error;

    bool operator==(const EnsembleRecord &other) const = default;
};

struct Summary {
    size_t count = 0;
    double mean = 0;
    /// Standard error of the mean (sample standard deviation / sqrt(count)).
    double sem = 0;

    bool operator==(const Summary &other) const = default;
};

Summary summarize(const std::vector<double> &values);

struct EnsembleStats {
    EnsembleSpec spec;
    std::vector<EnsembleRecord> records;
    Summary s_ee_bits;
    Summary depth;
    Summary min_weight;
    Summary mean_range;
    Summary layers;
    size_t failures = 0;
    double plateau_fraction = 0;
    std::vector<std::string> warnings;
};

/// Runs one sample. The rng stream is Rng::derive(seed, kind, L, sample), so each record is
/// reproducible on its own.
EnsembleRecord run_sample(const EnsembleSpec &spec, size_t sample);

/// Throws std::invalid_argument for an invalid spec.
EnsembleStats run_ensemble(const EnsembleSpec &spec);

/// Aggregates over records without an error.
EnsembleStats aggregate(const EnsembleSpec &spec, std::vector<EnsembleRecord> records);

/// Header "kind,L,seed,sample,s_ee_bits,depth,min_weight,mean_range,layers"; absent values are empty.
std::string records_csv_header();
std::string record_csv_row(const EnsembleRecord &r);

}  // namespace entstruct

#endif

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

#ifndef ENTSTRUCT_METRICS_H
#define ENTSTRUCT_METRICS_H

#include <cstdint>
#include <optional>
#include <vector>

#include "entstruct/clustering.h"

namespace entstruct {

/// Qubits in the largest separable factor. 1 for a product state, 0 for an empty diagram.
size_t entanglement_depth(const Diagram &d);

/// Qubit sets of the roots, sorted by smallest member.
std::vector<QubitSet> separable_partitions(const Diagram &d);

/// Smallest w among first-round sets; empty for a fully product state.
std::optional<uint32_t> minimal_stabilizer_weight(const Diagram &d);

/// min(|a| - c(a), |rest| - c(rest)) where c(X) counts cluster nodes whose qubits lie inside X.
/// Never below the true entropy. Throws std::invalid_argument unless a is a nonempty strict subset.
size_t entropy_upper_bound(const Diagram &d, const QubitSet &a);

/// Number of cluster nodes of `d` whose qubit sets are contained in `region`.
size_t confined_cluster_count(const Diagram &d, const QubitSet &region);

struct LayerCounts {
    size_t overall = 0;
    /// Maximum number of cluster nodes on a leaf-to-root path, one entry per root.
    std::vector<size_t> per_root;
};
LayerCounts layer_count(const Diagram &d);

struct SpatialRanges {
    /// max - min qubit index of each first-round set of minimal weight, in first-round order.
    std::vector<uint32_t> ranges;
    std::optional<double> mean;
};
SpatialRanges first_round_spatial_ranges(const Diagram &d);

struct MetricsReport {
    size_t depth = 0;
    std::vector<QubitSet> partitions;
    std::optional<uint32_t> min_weight;
    std::optional<uint32_t> k_uniformity;
    size_t layers = 0;
    std::vector<size_t> layers_per_root;
    std::vector<uint32_t> first_round_ranges;
    std::optional<double> mean_range;

    bool operator==(const MetricsReport &other) const = default;
};

MetricsReport compute_metrics(const Diagram &d);

}  // namespace entstruct

#endif

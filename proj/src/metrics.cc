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

#include "entstruct/metrics.h"

#include <algorithm>
#include <stdexcept>

using namespace entstruct;

namespace {

// Returns whether every qubit of `node` is in `region`; adds contained cluster nodes to `count`.
bool count_contained(const DiagramNode &node, const std::vector<uint8_t> &in_region, size_t &count) {
    if (node.is_leaf()) {
        return in_region[node.qubit];
    }
    bool all = true;
    for (const DiagramNode &c : node.children) {
        all &= count_contained(c, in_region, count);
    }
    if (all) {
        count++;
    }
    return all;
}

size_t cluster_depth(const DiagramNode &node) {
    if (node.is_leaf()) {
        return 0;
    }
    size_t best = 0;
    for (const DiagramNode &c : node.children) {
        best = std::max(best, cluster_depth(c));
    }
    return best + 1;
}

}  // namespace

size_t entstruct::entanglement_depth(const Diagram &d) {
    size_t best = 0;
    for (const DiagramNode &r : d.roots) {
        best = std::max(best, r.qubits().size());
    }
    return best;
}

std::vector<QubitSet> entstruct::separable_partitions(const Diagram &d) {
    std::vector<QubitSet> out;
    for (const DiagramNode &r : d.roots) {
        out.push_back(r.qubits());
    }
    std::sort(out.begin(), out.end(), [](const QubitSet &a, const QubitSet &b) { return a.front() < b.front(); });
    return out;
}

std::optional<uint32_t> entstruct::minimal_stabilizer_weight(const Diagram &d) {
    std::optional<uint32_t> best;
    for (const FirstRoundSet &s : d.first_round_sets) {
        if (!best || s.w < *best) {
            best = s.w;
        }
    }
    return best;
}

size_t entstruct::confined_cluster_count(const Diagram &d, const QubitSet &region) {
    std::vector<uint8_t> in_region(d.n, 0);
    for (uint32_t q : region) {
        if (q >= d.n) {
            throw std::invalid_argument("qubit index " + std::to_string(q + 1) + " out of range");
        }
        in_region[q] = 1;
    }
    size_t count = 0;
    for (const DiagramNode &r : d.roots) {
        count_contained(r, in_region, count);
    }
    return count;
}

size_t entstruct::entropy_upper_bound(const Diagram &d, const QubitSet &a) {
    if (a.empty() || a.size() >= d.n) {
        throw std::invalid_argument("entropy bound needs a nonempty strict subset of the qubits");
    }
    QubitSet rest = a.complement(d.n);
    size_t inside = a.size() - confined_cluster_count(d, a);
    size_t outside = rest.size() - confined_cluster_count(d, rest);
    return std::min(inside, outside);
}

LayerCounts entstruct::layer_count(const Diagram &d) {
    LayerCounts out;
    for (const DiagramNode &r : d.roots) {
        size_t layers = cluster_depth(r);
        out.per_root.push_back(layers);
        out.overall = std::max(out.overall, layers);
    }
    return out;
}

SpatialRanges entstruct::first_round_spatial_ranges(const Diagram &d) {
    SpatialRanges out;
    std::optional<uint32_t> w_min = minimal_stabilizer_weight(d);
    if (!w_min) {
        return out;
    }
    double total = 0;
    for (const FirstRoundSet &s : d.first_round_sets) {
        if (s.w == *w_min) {
            uint32_t range = s.qubits.back() - s.qubits.front();
            out.ranges.push_back(range);
            total += range;
        }
    }
    out.mean = total / static_cast<double>(out.ranges.size());
    return out;
}

MetricsReport entstruct::compute_metrics(const Diagram &d) {
    MetricsReport m;
    m.depth = entanglement_depth(d);
    m.partitions = separable_partitions(d);
    m.min_weight = minimal_stabilizer_weight(d);
    if (m.min_weight) {
        m.k_uniformity = *m.min_weight - 1;
    }
    LayerCounts layers = layer_count(d);
    m.layers = layers.overall;
    m.layers_per_root = std::move(layers.per_root);
    SpatialRanges ranges = first_round_spatial_ranges(d);
    m.first_round_ranges = std::move(ranges.ranges);
    m.mean_range = ranges.mean;
    return m;
}

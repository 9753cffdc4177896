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

#ifndef ENTSTRUCT_CLUSTERING_H
#define ENTSTRUCT_CLUSTERING_H

#include <cstdint>
#include <vector>

#include "entstruct/entropy.h"
#include "entstruct/tableau.h"

namespace entstruct {

/// One node of an entanglement-structure diagram: a qubit, or a w-cluster of earlier nodes.
struct DiagramNode {
    enum class Kind { Leaf, Cluster };

    Kind kind = Kind::Leaf;
    uint32_t qubit = 0;  // leaves only, 0-based
    uint32_t w = 0;      // clusters only
    bool decoupled = false;
    std::vector<DiagramNode> children;

    static DiagramNode leaf(uint32_t qubit);
    static DiagramNode cluster(uint32_t w, std::vector<DiagramNode> children);

    bool is_leaf() const {
        return kind == Kind::Leaf;
    }
    QubitSet qubits() const;
    uint32_t min_qubit() const;
    /// Cluster nodes in this subtree, including this one.
    size_t cluster_count() const;

    bool operator==(const DiagramNode &other) const = default;
};

/// A set of qubits found indivisible in the first clustering round, with its weight w.
struct FirstRoundSet {
    QubitSet qubits;
    uint32_t w = 0;

    bool operator==(const FirstRoundSet &other) const = default;
};

/// The full diagram: one root per separable factor, sorted by smallest qubit.
struct Diagram {
    uint32_t n = 0;
    std::vector<DiagramNode> roots;
    std::vector<FirstRoundSet> first_round_sets;

    bool operator==(const Diagram &other) const = default;
};

/// An indivisible unit during clustering. `id` orders elements and names them in results.
struct Element {
    uint32_t id = 0;
    QubitSet qubits;
};

/// Sorted element ids.
using ElementSet = std::vector<uint32_t>;

struct ClusteringOptions {
    /// Skip subsets made only of elements that already coexisted during an earlier scan reaching
    /// the same weight (their total correlations are known to vanish). Output is unchanged.
    bool prune = false;
    /// Worker threads for the subset scan; 0 means hardware concurrency.
    unsigned threads = 1;
};

/// Builds the entanglement-structure diagram: repeatedly finalize elements with zero entropy,
/// find the smallest w for which some w elements carry nonzero total correlations, and merge
/// all such sets (joined through shared elements) into new w-clusters.
///
/// Throws ValidationError for an invalid tableau.
Diagram build_diagram(const StabilizerTableau &t, const ClusteringOptions &options = {});

/// All w-element combinations of `elements` with nonzero total correlations, as sorted id sets in
/// lexicographic order. Requires disjoint elements and 2 <= w <= elements.size().
std::vector<ElementSet> find_indivisible_sets(
    const StabilizerTableau &t, const std::vector<Element> &elements, size_t w, unsigned threads = 1);

/// Connected components of the hypergraph whose hyperedges are `sets`; one union per component,
/// sorted by smallest member.
std::vector<QubitSet> merge_overlaps(const std::vector<QubitSet> &sets);

}  // namespace entstruct

#endif

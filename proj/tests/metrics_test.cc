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

#include <gtest/gtest.h>

#include "entstruct/oracle.h"
#include "entstruct/states.h"
#include "test_util.h"

using namespace entstruct;

namespace {

Diagram ten_qubit() {
    std::optional<StabilizerTableau> t = complete_ten_qubit_example();
    if (!t) {
        throw std::runtime_error("ten-qubit completion missing");
    }
    return build_diagram(*t);
}

}  // namespace

TEST(metrics, depth) {
    EXPECT_EQ(entanglement_depth(ten_qubit()), 6);
    EXPECT_EQ(entanglement_depth(build_diagram(four_qubit_example())), 4);
    EXPECT_EQ(entanglement_depth(build_diagram(product_state(5))), 1);
    EXPECT_EQ(entanglement_depth(build_diagram(ghz(8))), 8);
}

TEST(metrics, separable_partitions) {
    EXPECT_EQ(separable_partitions(ten_qubit()), (std::vector<QubitSet>{QubitSet::range(0, 6), QubitSet::range(6, 10)}));
    EXPECT_EQ(separable_partitions(build_diagram(ghz(8))), (std::vector<QubitSet>{QubitSet::range(0, 8)}));
    EXPECT_EQ(separable_partitions(build_diagram(product_state(3))),
              (std::vector<QubitSet>{QubitSet{0}, QubitSet{1}, QubitSet{2}}));
}

TEST(metrics, minimal_weight) {
    EXPECT_EQ(minimal_stabilizer_weight(build_diagram(ghz(8))), 2u);
    EXPECT_EQ(minimal_stabilizer_weight(build_diagram(cluster1d(8, Boundary::Periodic))), 3u);
    EXPECT_EQ(minimal_stabilizer_weight(build_diagram(four_qubit_example())), 2u);
    EXPECT_EQ(minimal_stabilizer_weight(ten_qubit()), 2u);
    EXPECT_FALSE(minimal_stabilizer_weight(build_diagram(product_state(4))));
    MetricsReport m = compute_metrics(build_diagram(ghz(8)));
    EXPECT_EQ(m.k_uniformity, 1u);
    EXPECT_FALSE(compute_metrics(build_diagram(product_state(2))).k_uniformity);
}

TEST(metrics, entropy_bound_worked_cases) {
    StabilizerTableau four = four_qubit_example();
    Diagram d4 = build_diagram(four);
    EXPECT_EQ(entropy_upper_bound(d4, QubitSet{0, 1}), 1);
    EXPECT_EQ(entropy_bits(four, QubitSet{0, 1}), 1);
    EXPECT_EQ(entropy_upper_bound(ten_qubit(), QubitSet{0, 1, 2}), 1);
    EXPECT_EQ(entropy_upper_bound(build_diagram(cluster1d(8, Boundary::Open)), QubitSet::range(0, 4)), 1);
    EXPECT_THROW(entropy_upper_bound(d4, QubitSet{}), std::invalid_argument);
    EXPECT_THROW(entropy_upper_bound(d4, QubitSet::range(0, 4)), std::invalid_argument);
}

TEST(metrics, confined_cluster_count_counts_nested_nodes) {
    Diagram d = build_diagram(cluster1d(8, Boundary::Open));
    EXPECT_EQ(confined_cluster_count(d, QubitSet::range(0, 4)), 3);
    EXPECT_EQ(confined_cluster_count(d, QubitSet::range(0, 8)), 7);
    EXPECT_EQ(confined_cluster_count(d, QubitSet{1, 2}), 0);
}

TEST(metrics, entropy_bound_is_sound) {
    Rng rng(20);
    for (int trial = 0; trial < 300; trial++) {
        size_t n = 2 + rng.below(11);
        StabilizerTableau t = testutil::random_tableau(n, rng);
        Diagram d = build_diagram(t);
        EntropyCalculator calc(t);
        for (int cut = 0; cut < 20; cut++) {
            std::vector<uint32_t> qs;
            for (uint32_t q = 0; q < n; q++) {
                if (rng.coin()) {
                    qs.push_back(q);
                }
            }
            if (qs.empty() || qs.size() == n) {
                continue;
            }
            QubitSet a(qs);
            ASSERT_GE(entropy_upper_bound(d, a), calc.entropy_bits(a));
        }
    }
}

TEST(metrics, layers) {
    EXPECT_EQ(layer_count(build_diagram(four_qubit_example())).overall, 2);
    LayerCounts ten = layer_count(ten_qubit());
    EXPECT_EQ(ten.overall, 3);
    EXPECT_EQ(ten.per_root, (std::vector<size_t>{3, 1}));
    EXPECT_EQ(layer_count(build_diagram(cluster1d(8, Boundary::Open))).overall, 4);
    EXPECT_EQ(layer_count(build_diagram(product_state(3))).per_root, (std::vector<size_t>{0, 0, 0}));
}

TEST(metrics, spatial_ranges) {
    SpatialRanges g = first_round_spatial_ranges(build_diagram(ghz(8)));
    ASSERT_EQ(g.ranges.size(), 28);
    // Mean of j - i over pairs i < j of 8 sites, computed directly.
    double total = 0;
    int count = 0;
    for (int i = 1; i <= 8; i++) {
        for (int j = i + 1; j <= 8; j++) {
            total += j - i;
            count++;
        }
    }
    EXPECT_DOUBLE_EQ(*g.mean, total / count);
    EXPECT_DOUBLE_EQ(*g.mean, 3.0);
    EXPECT_EQ(*std::max_element(g.ranges.begin(), g.ranges.end()), 7);

    SpatialRanges obc = first_round_spatial_ranges(build_diagram(cluster1d(8, Boundary::Open)));
    EXPECT_EQ(obc.ranges, (std::vector<uint32_t>{1, 1}));
    EXPECT_DOUBLE_EQ(*obc.mean, 1.0);

    SpatialRanges none = first_round_spatial_ranges(build_diagram(product_state(4)));
    EXPECT_TRUE(none.ranges.empty());
    EXPECT_FALSE(none.mean);
}

TEST(metrics, ranges_use_only_minimal_weight_sets) {
    Diagram d;
    d.n = 6;
    for (uint32_t q = 0; q < 6; q++) {
        d.roots.push_back(DiagramNode::leaf(q));
    }
    d.first_round_sets = {{QubitSet{0, 5}, 3}, {QubitSet{1, 2}, 2}, {QubitSet{3, 5}, 2}};
    SpatialRanges r = first_round_spatial_ranges(d);
    EXPECT_EQ(r.ranges, (std::vector<uint32_t>{1, 2}));
    EXPECT_DOUBLE_EQ(*r.mean, 1.5);
}

TEST(metrics, report_invariants_and_oracles) {
    Rng rng(21);
    for (int trial = 0; trial < 80; trial++) {
        size_t n = 1 + rng.below(8);
        StabilizerTableau t = testutil::random_tableau(n, rng);
        Diagram d = build_diagram(t);
        MetricsReport m = compute_metrics(d);
        size_t total = 0;
        size_t biggest = 0;
        for (const QubitSet &p : m.partitions) {
            total += p.size();
            biggest = std::max(biggest, p.size());
        }
        ASSERT_EQ(total, n);
        ASSERT_EQ(m.depth, biggest);
        ASSERT_EQ(m.depth, oracle::brute_force_depth(t));
        if (m.min_weight) {
            ASSERT_EQ(*m.k_uniformity, *m.min_weight - 1);
        }
        for (size_t i = 0; i < d.roots.size(); i++) {
            if (d.roots[i].qubits().size() >= 2) {
                ASSERT_GE(m.layers_per_root[i], 1);
            }
        }
        // Any union of roots is uncorrelated with the rest.
        EntropyCalculator calc(t);
        for (uint32_t mask = 1; mask + 1 < (1u << m.partitions.size()); mask++) {
            QubitSet u;
            for (size_t i = 0; i < m.partitions.size(); i++) {
                if ((mask >> i) & 1) {
                    u = u.united(m.partitions[i]);
                }
            }
            ASSERT_EQ(calc.entropy_bits(u), 0);
        }
    }
}

TEST(metrics, k_uniformity_holds_exhaustively) {
    Rng rng(22);
    std::vector<StabilizerTableau> states{ghz(8), cluster1d(8, Boundary::Periodic), five_qubit_code_logical_x(),
                                          steane_code_logical_x(), cluster1d(12, Boundary::Periodic)};
    for (int i = 0; i < 40; i++) {
        states.push_back(testutil::random_tableau(4 + rng.below(9), rng, 60));
    }
    for (const StabilizerTableau &t : states) {
        Diagram d = build_diagram(t);
        if (d.roots.size() != 1) {
            continue;
        }
        std::optional<uint32_t> w = minimal_stabilizer_weight(d);
        ASSERT_TRUE(w);
        uint32_t n = static_cast<uint32_t>(t.num_qubits());
        EntropyCalculator calc(t);
        for (const QubitSet &a : testutil::all_nonempty_subsets(n)) {
            if (a.size() <= *w - 1) {
                ASSERT_EQ(calc.entropy_bits(a), a.size()) << a.to_string();
            }
        }
    }
}

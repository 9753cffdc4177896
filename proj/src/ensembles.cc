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

#include "entstruct/ensembles.h"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <thread>

#include "entstruct/clustering.h"
#include "entstruct/entropy.h"
#include "entstruct/metrics.h"

using namespace entstruct;

std::string_view entstruct::kind_name(EnsembleKind kind) {
    return kind == EnsembleKind::Unitary ? "unitary" : "measurement";
}

std::optional<EnsembleKind> entstruct::parse_kind(std::string_view text) {
    if (text == "unitary") {
        return EnsembleKind::Unitary;
    }
    if (text == "measurement" || text == "measurement_only") {
        return EnsembleKind::MeasurementOnly;
    }
    return std::nullopt;
}

void entstruct::apply_unitary_layer(StabilizerTableau &t, size_t layer_index, Rng &rng) {
    size_t n = t.num_qubits();
    for (size_t a = layer_index % 2; a + 1 < n; a += 2) {
        size_t qubits[2] = {a, a + 1};
        t.apply(LocalClifford::random_two_qubit(rng), qubits);
    }
}

void entstruct::apply_measurement_layer(StabilizerTableau &t, Rng &rng) {
    static constexpr char kLetters[] = {'X', 'Y', 'Z'};
    size_t n = t.num_qubits();
    for (size_t m = 0; m < n; m++) {
        size_t j = rng.below(n - 2);
        PauliString p(n);
        for (size_t k = 0; k < 3; k++) {
            p.set(j + k, kLetters[rng.below(3)]);
        }
        measure_pauli_in_place(t, p, rng);
    }
}

StabilizerTableau entstruct::evolve_unitary(size_t L, size_t layers, Rng &rng) {
    if (L < 2) {
        throw std::invalid_argument("unitary evolution needs L >= 2");
    }
    StabilizerTableau t(L);
    for (size_t layer = 0; layer < layers; layer++) {
        apply_unitary_layer(t, layer, rng);
    }
    return t;
}

StabilizerTableau entstruct::evolve_measurement_only(size_t L, size_t layers, Rng &rng) {
    if (L < 3) {
        throw std::invalid_argument("measurement-only evolution needs L >= 3");
    }
    StabilizerTableau t(L);
    for (size_t layer = 0; layer < layers; layer++) {
        apply_measurement_layer(t, rng);
    }
    return t;
}

size_t entstruct::half_cut_entropy_bits(const StabilizerTableau &t) {
    EntropyCalculator calc(t);
    return calc.entropy_bits_uncached(QubitSet::range(0, static_cast<uint32_t>(t.num_qubits() / 2)).values());
}

Summary entstruct::summarize(const std::vector<double> &values) {
    Summary s;
    s.count = values.size();
    if (values.empty()) {
        return s;
    }
    double total = 0;
    for (double v : values) {
        total += v;
    }
    s.mean = total / static_cast<double>(values.size());
    if (values.size() > 1) {
        double ss = 0;
        for (double v : values) {
            ss += (v - s.mean) * (v - s.mean);
        }
        double var = ss / static_cast<double>(values.size() - 1);
        s.sem = std::sqrt(var / static_cast<double>(values.size()));
    }
    return s;
}

namespace {

void check_spec(const EnsembleSpec &spec) {
    if (spec.samples < 1) {
        throw std::invalid_argument("ensemble needs at least one sample");
    }
    if (spec.L < 4) {
        throw std::invalid_argument("ensemble needs L >= 4");
    }
    if (spec.kind == EnsembleKind::Unitary && spec.L > 24 && !spec.allow_large) {
        throw std::invalid_argument("unitary ensembles are capped at L = 24; clustering cost grows factorially with L");
    }
}

bool plateau_reached(const std::vector<size_t> &series) {
    size_t q = series.size() / 4;
    if (q == 0) {
        return true;
    }
    double late = 0, earlier = 0;
    for (size_t i = series.size() - q; i < series.size(); i++) {
        late += static_cast<double>(series[i]);
    }
    for (size_t i = series.size() - 2 * q; i < series.size() - q; i++) {
        earlier += static_cast<double>(series[i]);
    }
    return std::abs(late - earlier) / static_cast<double>(q) <= 1.0;
}

}  // namespace

EnsembleRecord entstruct::run_sample(const EnsembleSpec &spec, size_t sample) {
    EnsembleRecord r;
    r.kind = spec.kind;
    r.L = spec.L;
    r.seed = spec.seed;
    r.sample = sample;
    try {
        Rng rng = Rng::derive(spec.seed, static_cast<uint64_t>(spec.kind), spec.L, sample);
        StabilizerTableau t(spec.L);
        size_t layers = spec.resolved_layers();
        std::vector<size_t> series;
        series.reserve(layers);
        for (size_t layer = 0; layer < layers; layer++) {
            if (spec.kind == EnsembleKind::Unitary) {
                apply_unitary_layer(t, layer, rng);
            } else {
                apply_measurement_layer(t, rng);
            }
            series.push_back(half_cut_entropy_bits(t));
        }
        r.plateau = plateau_reached(series);
        r.s_ee_bits = half_cut_entropy_bits(t);
        ClusteringOptions options;
        options.prune = true;
        Diagram d = build_diagram(t, options);
        MetricsReport m = compute_metrics(d);
        r.depth = m.depth;
        r.min_weight = m.min_weight;
        r.mean_range = m.mean_range;
        r.layers = m.layers;
    } catch (const std::exception &e) {
        r.error = e.what();
    }
    return r;
}

EnsembleStats entstruct::aggregate(const EnsembleSpec &spec, std::vector<EnsembleRecord> records) {
    EnsembleStats stats;
    stats.spec = spec;
    std::vector<double> s_ee, depth, min_weight, mean_range, layers;
    size_t plateaus = 0;
    for (const EnsembleRecord &r : records) {
        if (r.error) {
            stats.failures++;
            continue;
        }
        s_ee.push_back(static_cast<double>(r.s_ee_bits));
        depth.push_back(static_cast<double>(r.depth));
        if (r.min_weight) {
            min_weight.push_back(*r.min_weight);
        }
        if (r.mean_range) {
            mean_range.push_back(*r.mean_range);
        }
        layers.push_back(static_cast<double>(r.layers));
        plateaus += r.plateau;
    }
    stats.s_ee_bits = summarize(s_ee);
    stats.depth = summarize(depth);
    stats.min_weight = summarize(min_weight);
    stats.mean_range = summarize(mean_range);
    stats.layers = summarize(layers);
    stats.plateau_fraction = s_ee.empty() ? 0.0 : static_cast<double>(plateaus) / static_cast<double>(s_ee.size());
    stats.records = std::move(records);
    return stats;
}

EnsembleStats entstruct::run_ensemble(const EnsembleSpec &spec) {
    check_spec(spec);
    std::vector<EnsembleRecord> records(spec.samples);
    unsigned threads = spec.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : spec.threads;
    threads = static_cast<unsigned>(std::min<size_t>(threads, spec.samples));
    if (threads <= 1) {
        for (size_t i = 0; i < spec.samples; i++) {
            records[i] = run_sample(spec, i);
        }
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> workers;
        for (unsigned w = 0; w < threads; w++) {
            workers.emplace_back([&]() {
                for (size_t i = next++; i < spec.samples; i = next++) {
                    records[i] = run_sample(spec, i);
                }
            });
        }
        for (std::thread &worker : workers) {
            worker.join();
        }
    }
    EnsembleStats stats = aggregate(spec, std::move(records));
    if (spec.kind == EnsembleKind::Unitary && spec.L > 16) {
        stats.warnings.push_back("unitary clustering above L = 16 is slow: the minimal weight grows with L");
    }
    if (stats.failures) {
        stats.warnings.push_back(std::to_string(stats.failures) + " sample(s) failed");
    }
    return stats;
}

std::string entstruct::records_csv_header() {
    return "kind,L,seed,sample,s_ee_bits,depth,min_weight,mean_range,layers";
}

std::string entstruct::record_csv_row(const EnsembleRecord &r) {
    std::string out;
    out += kind_name(r.kind);
    out += ',' + std::to_string(r.L);
    out += ',' + std::to_string(r.seed);
    out += ',' + std::to_string(r.sample);
    if (r.error) {
        out += ",,,,,";
        return out;
    }
    out += ',' + std::to_string(r.s_ee_bits);
    out += ',' + std::to_string(r.depth);
    out += ',';
    if (r.min_weight) {
        out += std::to_string(*r.min_weight);
    }
    out += ',';
    if (r.mean_range) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.6f", *r.mean_range);
        out += buf;
    }
    out += ',' + std::to_string(r.layers);
    return out;
}

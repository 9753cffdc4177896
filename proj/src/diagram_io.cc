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

#include "entstruct/diagram_io.h"

#include <algorithm>
#include <set>
#include <sstream>

using namespace entstruct;
using nlohmann::json;

namespace {

json qubits_json(const QubitSet &qs) {
    json out = json::array();
    for (uint32_t q : qs) {
        out.push_back(q + 1);
    }
    return out;
}

template <typename T>
json optional_json(const std::optional<T> &v) {
    return v ? json(*v) : json(nullptr);
}

json node_json(const DiagramNode &node) {
    json out;
    if (node.is_leaf()) {
        out["kind"] = "leaf";
        out["qubit"] = node.qubit + 1;
    } else {
        out["kind"] = "cluster";
        out["w"] = node.w;
        json children = json::array();
        for (const DiagramNode &c : node.children) {
            children.push_back(node_json(c));
        }
        out["children"] = std::move(children);
    }
    out["decoupled"] = node.decoupled;
    return out;
}

void expect_keys(const json &j, std::string_view where, std::initializer_list<std::string_view> required,
                 std::initializer_list<std::string_view> optional = {}) {
    if (!j.is_object()) {
        throw DocumentError(std::string(where) + ": expected an object");
    }
    for (std::string_view k : required) {
        if (!j.contains(k)) {
            throw DocumentError(std::string(where) + ": missing field '" + std::string(k) + "'");
        }
    }
    for (const auto &[key, value] : j.items()) {
        bool known = false;
        for (std::string_view k : required) {
            known |= key == k;
        }
        for (std::string_view k : optional) {
            known |= key == k;
        }
        if (!known) {
            throw DocumentError(std::string(where) + ": unknown field '" + key + "'");
        }
    }
}

template <typename T>
T get_as(const json &j, std::string_view where) {
    try {
        return j.get<T>();
    } catch (const json::exception &e) {
        throw DocumentError(std::string(where) + ": " + e.what());
    }
}

uint32_t qubit_from_json(const json &j, uint32_t n, std::string_view where) {
    if (!j.is_number_unsigned()) {
        throw DocumentError(std::string(where) + ": qubit labels must be positive integers");
    }
    uint64_t q = j.get<uint64_t>();
    if (q < 1 || q > n) {
        throw DocumentError(std::string(where) + ": qubit " + std::to_string(q) + " out of range 1.." + std::to_string(n));
    }
    return static_cast<uint32_t>(q - 1);
}

QubitSet qubit_set_from_json(const json &j, uint32_t n, std::string_view where) {
    if (!j.is_array()) {
        throw DocumentError(std::string(where) + ": expected an array of qubits");
    }
    std::vector<uint32_t> qs;
    for (const json &q : j) {
        qs.push_back(qubit_from_json(q, n, where));
    }
    std::vector<uint32_t> sorted = qs;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != qs || std::adjacent_find(qs.begin(), qs.end()) != qs.end()) {
        throw DocumentError(std::string(where) + ": qubit lists must be strictly increasing");
    }
    return QubitSet(std::move(qs));
}

DiagramNode node_from_json(const json &j, uint32_t n) {
    if (!j.is_object() || !j.contains("kind")) {
        throw DocumentError("node: missing field 'kind'");
    }
    std::string kind = get_as<std::string>(j["kind"], "node.kind");
    DiagramNode node;
    if (kind == "leaf") {
        expect_keys(j, "leaf", {"kind", "qubit", "decoupled"});
        node.kind = DiagramNode::Kind::Leaf;
        node.qubit = qubit_from_json(j["qubit"], n, "leaf.qubit");
    } else if (kind == "cluster") {
        expect_keys(j, "cluster", {"kind", "w", "decoupled", "children"});
        node.kind = DiagramNode::Kind::Cluster;
        node.w = get_as<uint32_t>(j["w"], "cluster.w");
        if (node.w < 2) {
            throw DocumentError("cluster.w must be at least 2");
        }
        if (!j["children"].is_array() || j["children"].empty()) {
            throw DocumentError("cluster.children must be a nonempty array");
        }
        for (const json &c : j["children"]) {
            node.children.push_back(node_from_json(c, n));
        }
    } else {
        throw DocumentError("node.kind must be 'leaf' or 'cluster', got '" + kind + "'");
    }
    node.decoupled = get_as<bool>(j["decoupled"], "node.decoupled");
    return node;
}

MetricsReport metrics_from_json(const json &j, uint32_t n) {
    expect_keys(j, "metrics",
                {"depth", "partitions", "min_weight", "k_uniformity", "layers", "layers_per_root", "first_round_ranges",
                 "mean_range"});
    MetricsReport m;
    m.depth = get_as<size_t>(j["depth"], "metrics.depth");
    if (!j["partitions"].is_array()) {
        throw DocumentError("metrics.partitions: expected an array");
    }
    for (const json &p : j["partitions"]) {
        m.partitions.push_back(qubit_set_from_json(p, n, "metrics.partitions"));
    }
    if (!j["min_weight"].is_null()) {
        m.min_weight = get_as<uint32_t>(j["min_weight"], "metrics.min_weight");
    }
    if (!j["k_uniformity"].is_null()) {
        m.k_uniformity = get_as<uint32_t>(j["k_uniformity"], "metrics.k_uniformity");
    }
    m.layers = get_as<size_t>(j["layers"], "metrics.layers");
    m.layers_per_root = get_as<std::vector<size_t>>(j["layers_per_root"], "metrics.layers_per_root");
    m.first_round_ranges = get_as<std::vector<uint32_t>>(j["first_round_ranges"], "metrics.first_round_ranges");
    if (!j["mean_range"].is_null()) {
        m.mean_range = get_as<double>(j["mean_range"], "metrics.mean_range");
    }
    return m;
}

void check_partition(const Diagram &d) {
    std::vector<uint8_t> seen(d.n, 0);
    for (const DiagramNode &r : d.roots) {
        for (uint32_t q : r.qubits()) {
            if (seen[q]) {
                throw DocumentError("qubit " + std::to_string(q + 1) + " appears in more than one leaf");
            }
            seen[q] = 1;
        }
    }
    for (uint32_t q = 0; q < d.n; q++) {
        if (!seen[q]) {
            throw DocumentError("qubit " + std::to_string(q + 1) + " appears in no leaf");
        }
    }
}

void dot_node(const DiagramNode &node, std::ostringstream &out, size_t &next_cluster, size_t indent) {
    std::string pad(indent, ' ');
    if (node.is_leaf()) {
        out << pad << "q" << node.qubit + 1 << " [label=\"" << node.qubit + 1 << "\"];\n";
        return;
    }
    out << pad << "subgraph cluster_" << next_cluster++ << " {\n";
    out << pad << "  label=\"w=" << node.w << "\";\n";
    for (const DiagramNode &c : node.children) {
        dot_node(c, out, next_cluster, indent + 2);
    }
    out << pad << "}\n";
}

void text_node(const DiagramNode &node, std::ostringstream &out, size_t indent) {
    out << std::string(indent, ' ');
    if (node.is_leaf()) {
        out << node.qubit + 1;
    } else {
        out << "w=" << node.w << " " << node.qubits().to_string();
    }
    if (node.decoupled) {
        out << " (separable)";
    }
    out << "\n";
    for (const DiagramNode &c : node.children) {
        text_node(c, out, indent + 2);
    }
}

json summary_json(const Summary &s) {
    return json{{"count", s.count}, {"mean", s.mean}, {"sem", s.sem}};
}

}  // namespace

json entstruct::to_json(const MetricsReport &m) {
    json partitions = json::array();
    for (const QubitSet &p : m.partitions) {
        partitions.push_back(qubits_json(p));
    }
    return json{
        {"depth", m.depth},
        {"partitions", std::move(partitions)},
        {"min_weight", optional_json(m.min_weight)},
        {"k_uniformity", optional_json(m.k_uniformity)},
        {"layers", m.layers},
        {"layers_per_root", m.layers_per_root},
        {"first_round_ranges", m.first_round_ranges},
        {"mean_range", optional_json(m.mean_range)},
    };
}

json entstruct::to_json(const DiagramDocument &doc) {
    json roots = json::array();
    for (const DiagramNode &r : doc.diagram.roots) {
        roots.push_back(node_json(r));
    }
    json sets = json::array();
    for (const FirstRoundSet &s : doc.diagram.first_round_sets) {
        sets.push_back(json{{"qubits", qubits_json(s.qubits)}, {"w", s.w}});
    }
    json out{
        {"schema", kDiagramSchema},
        {"n", doc.diagram.n},
        {"roots", std::move(roots)},
        {"first_round_sets", std::move(sets)},
    };
    if (doc.metrics) {
        out["metrics"] = to_json(*doc.metrics);
    }
    return out;
}

DiagramDocument entstruct::document_from_json(const json &j) {
    expect_keys(j, "document", {"schema", "n", "roots", "first_round_sets"}, {"metrics"});
    if (!j["schema"].is_string() || j["schema"].get<std::string>() != kDiagramSchema) {
        throw DocumentError("document: unsupported schema " + j["schema"].dump() + " (expected \"" +
                            std::string(kDiagramSchema) + "\")");
    }
    DiagramDocument doc;
    Diagram &d = doc.diagram;
    d.n = get_as<uint32_t>(j["n"], "document.n");
    if (!j["roots"].is_array()) {
        throw DocumentError("document.roots: expected an array");
    }
    for (const json &r : j["roots"]) {
        d.roots.push_back(node_from_json(r, d.n));
    }
    check_partition(d);
    if (!j["first_round_sets"].is_array()) {
        throw DocumentError("document.first_round_sets: expected an array");
    }
    for (const json &s : j["first_round_sets"]) {
        expect_keys(s, "first_round_set", {"qubits", "w"});
        d.first_round_sets.push_back(
            {qubit_set_from_json(s["qubits"], d.n, "first_round_set.qubits"), get_as<uint32_t>(s["w"], "first_round_set.w")});
    }
    if (j.contains("metrics")) {
        doc.metrics = metrics_from_json(j["metrics"], d.n);
    }
    return doc;
}

std::string entstruct::format_document(const DiagramDocument &doc) {
    return to_json(doc).dump(2) + "\n";
}

DiagramDocument entstruct::parse_document(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw DocumentError(std::string("invalid JSON: ") + e.what());
    }
    return document_from_json(j);
}

std::string entstruct::format_dot(const Diagram &d) {
    std::ostringstream out;
    out << "graph entstruct {\n";
    out << "  node [shape=circle];\n";
    out << "  graph [labeljust=l, labelloc=b, fontcolor=red];\n";
    size_t next_cluster = 0;
    for (const DiagramNode &r : d.roots) {
        dot_node(r, out, next_cluster, 2);
    }
    out << "}\n";
    return out.str();
}

std::string entstruct::format_text(const Diagram &d) {
    std::ostringstream out;
    for (const DiagramNode &r : d.roots) {
        text_node(r, out, 0);
    }
    return out.str();
}

json entstruct::to_json(const EnsembleStats &stats) {
    const EnsembleSpec &spec = stats.spec;
    return json{
        {"kind", kind_name(spec.kind)},
        {"L", spec.L},
        {"samples", spec.samples},
        {"seed", spec.seed},
        {"layers", spec.resolved_layers()},
        {"failures", stats.failures},
        {"plateau_fraction", stats.plateau_fraction},
        {"s_ee_bits", summary_json(stats.s_ee_bits)},
        {"depth", summary_json(stats.depth)},
        {"min_weight", summary_json(stats.min_weight)},
        {"mean_range", summary_json(stats.mean_range)},
        {"layer_count", summary_json(stats.layers)},
        {"warnings", stats.warnings},
    };
}

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

#include "cli.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "entstruct/clustering.h"
#include "entstruct/diagram_io.h"
#include "entstruct/ensembles.h"
#include "entstruct/metrics.h"
#include "entstruct/oracle.h"
#include "entstruct/states.h"

using namespace entstruct;
using namespace entstruct::cli;

namespace {

// Thrown for bad input data; maps to exit code 1.
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown for bad command-line values that CLI11 cannot check itself; maps to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string &path, std::istream &in) {
    if (path.empty() || path == "-") {
        return std::string(std::istreambuf_iterator<char>(in), {});
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw DataError("cannot read " + path);
    }
    return std::string(std::istreambuf_iterator<char>(f), {});
}

StabilizerTableau load_tableau(const std::string &path, std::istream &in) {
    std::string text = read_input(path, in);
    try {
        return parse_tableau(text);
    } catch (const ParseError &e) {
        throw DataError(std::string("parse error: ") + e.what());
    } catch (const ValidationError &e) {
        throw DataError(std::string("invalid tableau: ") + e.what());
    }
}

void write_file(const std::filesystem::path &path, const std::string &content) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw DataError("cannot write " + path.string());
    }
    f << content;
    f.flush();
    if (!f) {
        throw DataError("failed writing " + path.string());
    }
}

std::string metrics_text(const MetricsReport &m) {
    std::ostringstream out;
    auto opt = [](const auto &v) { return v ? std::to_string(*v) : std::string("none"); };
    out << "depth " << m.depth << "\n";
    out << "partitions";
    for (const QubitSet &p : m.partitions) {
        out << " " << p.to_string();
    }
    out << "\n";
    out << "min_weight " << opt(m.min_weight) << "\n";
    out << "k_uniformity " << opt(m.k_uniformity) << "\n";
    out << "layers " << m.layers << "\n";
    out << "layers_per_root";
    for (size_t l : m.layers_per_root) {
        out << " " << l;
    }
    out << "\n";
    out << "first_round_ranges";
    for (uint32_t r : m.first_round_ranges) {
        out << " " << r;
    }
    out << "\n";
    if (m.mean_range) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.6f", *m.mean_range);
        out << "mean_range " << buf << "\n";
    } else {
        out << "mean_range none\n";
    }
    return out.str();
}

struct GenOptions {
    std::string name;
    std::vector<size_t> n;
    std::string boundary = "pbc";
    bool complete = false;
};

int cmd_gen(const GenOptions &o, std::ostream &out, std::ostream &err) {
    if (o.n.size() > 1) {
        throw UsageError("gen takes at most one qubit count");
    }
    std::optional<size_t> n;
    if (!o.n.empty()) {
        n = o.n.front();
    }
    Boundary boundary = o.boundary == "obc" ? Boundary::Open : Boundary::Periodic;
    NamedState s;
    try {
        s = make_named_state(o.name, n, boundary, o.complete);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    if (s.defect) {
        err << "warning: " << *s.defect << "\n";
        err << "warning: use --complete for a valid ten-qubit state\n";
    }
    for (const PauliString &g : s.generators) {
        out << g.str_sparse() << "\n";
    }
    return kExitOk;
}

struct AnalyzeOptions {
    std::string in;
    std::string format = "json";
    bool metrics = false;
    unsigned threads = 1;
};

int cmd_analyze(const AnalyzeOptions &o, std::istream &in, std::ostream &out) {
    StabilizerTableau t = load_tableau(o.in, in);
    ClusteringOptions options;
    options.threads = o.threads;
    DiagramDocument doc{build_diagram(t, options), std::nullopt};
    if (o.metrics) {
        doc.metrics = compute_metrics(doc.diagram);
    }
    if (o.format == "json") {
        out << format_document(doc);
    } else if (o.format == "dot") {
        out << format_dot(doc.diagram);
        if (doc.metrics) {
            std::istringstream lines(metrics_text(*doc.metrics));
            for (std::string line; std::getline(lines, line);) {
                out << "// " << line << "\n";
            }
        }
    } else {
        out << format_text(doc.diagram);
        if (doc.metrics) {
            out << "\n" << metrics_text(*doc.metrics);
        }
    }
    return kExitOk;
}

struct EnsembleOptions {
    std::string kind;
    std::string sizes;
    size_t samples = 100;
    uint64_t seed = 0;
    std::string layers = "auto";
    std::string out;
    std::string json_out;
    unsigned threads = 1;
    bool allow_large = false;
};

int cmd_ensemble(const EnsembleOptions &o, std::ostream &out, std::ostream &err) {
    std::optional<EnsembleKind> kind = parse_kind(o.kind);
    if (!kind) {
        throw UsageError("--kind must be unitary or measurement");
    }
    std::vector<size_t> sizes;
    try {
        sizes = cli::parse_size_list(o.sizes);
    } catch (const std::invalid_argument &e) {
        throw UsageError(std::string("--L: ") + e.what());
    }
    std::optional<size_t> layers;
    if (o.layers != "auto") {
        try {
            layers = cli::parse_size_list(o.layers).at(0);
        } catch (const std::exception &) {
            throw UsageError("--layers must be a count or 'auto'");
        }
    }

    std::vector<EnsembleSpec> specs;
    for (size_t L : sizes) {
        EnsembleSpec spec;
        spec.kind = *kind;
        spec.L = L;
        spec.samples = o.samples;
        spec.seed = o.seed;
        spec.layers = layers;
        spec.threads = o.threads;
        spec.allow_large = o.allow_large;
        specs.push_back(spec);
    }

    std::string csv = records_csv_header() + "\n";
    nlohmann::json points = nlohmann::json::array();
    for (const EnsembleSpec &spec : specs) {
        EnsembleStats stats;
        try {
            stats = run_ensemble(spec);
        } catch (const std::invalid_argument &e) {
            throw UsageError(e.what());
        }
        for (const std::string &w : stats.warnings) {
            err << "warning: L=" << spec.L << ": " << w << "\n";
        }
        for (const EnsembleRecord &r : stats.records) {
            if (r.error) {
                err << "warning: L=" << spec.L << " sample " << r.sample << " failed: " << *r.error << "\n";
            }
            csv += record_csv_row(r) + "\n";
        }
        points.push_back(to_json(stats));
    }
    nlohmann::json aggregate{{"schema", "1"}, {"points", std::move(points)}};
    std::string aggregate_text = aggregate.dump(2) + "\n";

    if (o.out.empty()) {
        out << csv;
        if (!o.json_out.empty()) {
            write_file(o.json_out, aggregate_text);
        }
        return kExitOk;
    }
    std::filesystem::path csv_path(o.out);
    std::filesystem::path json_path = o.json_out.empty() ? std::filesystem::path(csv_path).replace_extension(".json")
                                                         : std::filesystem::path(o.json_out);
    write_file(csv_path, csv);
    write_file(json_path, aggregate_text);
    return kExitOk;
}

struct VerifyOptions {
    std::string in;
};

int cmd_verify(const VerifyOptions &o, std::istream &in, std::ostream &out) {
    StabilizerTableau t = load_tableau(o.in, in);
    size_t n = t.num_qubits();
    if (n > oracle::kMaxQubits) {
        throw UsageError("verify supports at most " + std::to_string(oracle::kMaxQubits) + " qubits, got " +
                         std::to_string(n));
    }
    oracle::DenseState state = oracle::tableau_to_state(t);
    EntropyCalculator calc(t);

    // Every subset up to 10 qubits; above that, all subsets of at most two qubits and all
    // contiguous intervals.
    std::vector<QubitSet> subsets;
    if (n <= 10) {
        for (uint32_t mask = 1; mask + 1 < (uint32_t{1} << n); mask++) {
            std::vector<uint32_t> qs;
            for (uint32_t q = 0; q < n; q++) {
                if ((mask >> q) & 1) {
                    qs.push_back(q);
                }
            }
            subsets.emplace_back(std::move(qs));
        }
    } else {
        for (uint32_t a = 0; a < n; a++) {
            subsets.push_back(QubitSet{a});
            for (uint32_t b = a + 1; b < n; b++) {
                subsets.push_back(QubitSet{a, b});
            }
            for (uint32_t e = a + 3; e <= n; e++) {
                if (e - a < n) {
                    subsets.push_back(QubitSet::range(a, e));
                }
            }
        }
    }
    size_t mismatches = 0;
    for (const QubitSet &a : subsets) {
        size_t fast = calc.entropy_bits(a);
        size_t dense = oracle::dense_entropy_bits(state, a);
        if (fast != dense) {
            if (mismatches < 10) {
                out << "entropy mismatch on " << a.to_string() << ": tableau " << fast << ", dense " << dense << "\n";
            }
            mismatches++;
        }
    }
    out << "entropies: " << subsets.size() << " subsets, " << mismatches << " mismatches\n";

    Diagram d = build_diagram(t);
    std::vector<QubitSet> partitions = separable_partitions(d);
    bool partitions_ok = true;
    if (n <= 8) {
        std::vector<QubitSet> brute = oracle::brute_force_partitions(state);
        partitions_ok = brute == partitions;
        out << "partitions: " << (partitions_ok ? "match" : "MISMATCH") << " (exhaustive search)\n";
    } else {
        for (const QubitSet &p : partitions) {
            if (p.size() < n && oracle::dense_entropy_bits(state, p) != 0) {
                partitions_ok = false;
            }
        }
        out << "partitions: " << (partitions_ok ? "every block separable" : "MISMATCH")
            << " (finest-ness checked only up to 8 qubits)\n";
    }
    bool ok = mismatches == 0 && partitions_ok;
    out << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? kExitOk : kExitDataError;
}

}  // namespace

std::vector<size_t> cli::parse_size_list(const std::string &text) {
    auto number = [](const std::string &s) -> size_t {
        if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            throw std::invalid_argument("expected a non-negative integer, got '" + s + "'");
        }
        return std::stoull(s);
    };
    std::vector<size_t> out;
    if (size_t dots = text.find(".."); dots != std::string::npos) {
        std::string rest = text.substr(dots + 2);
        size_t step = 1;
        if (size_t colon = rest.find(':'); colon != std::string::npos) {
            step = number(rest.substr(colon + 1));
            rest = rest.substr(0, colon);
        }
        size_t lo = number(text.substr(0, dots));
        size_t hi = number(rest);
        if (step == 0 || lo > hi) {
            throw std::invalid_argument("empty range '" + text + "'");
        }
        for (size_t v = lo; v <= hi; v += step) {
            out.push_back(v);
        }
        return out;
    }
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, ',');) {
        out.push_back(number(part));
    }
    if (out.empty()) {
        throw std::invalid_argument("empty list");
    }
    return out;
}

int cli::run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err) {
    CLI::App app{"Entanglement-structure diagrams of stabilizer states", "entstruct"};
    app.require_subcommand(1);

    GenOptions gen;
    CLI::App *gen_cmd = app.add_subcommand("gen", "Print a named state as a generator list");
    gen_cmd->add_option("name", gen.name, "ghz, cluster1d, code5, steane, fig1 or fig2")->required();
    gen_cmd->add_option("n", gen.n, "Qubit count (ghz, cluster1d)");
    gen_cmd->add_option("--boundary", gen.boundary, "Chain boundary for cluster1d")
        ->check(CLI::IsMember({"pbc", "obc"}));
    gen_cmd->add_flag("--complete", gen.complete, "fig2: fill in the missing tenth generator");

    AnalyzeOptions analyze;
    CLI::App *analyze_cmd = app.add_subcommand("analyze", "Build the entanglement-structure diagram of a tableau");
    analyze_cmd->add_option("--in", analyze.in, "Tableau file ('-' or absent: stdin)");
    analyze_cmd->add_option("--format", analyze.format, "Output format")
        ->check(CLI::IsMember({"json", "dot", "text"}));
    analyze_cmd->add_flag("--metrics", analyze.metrics, "Include depth, partitions, weights, layers and ranges");
    analyze_cmd->add_option("--threads", analyze.threads, "Subset-scan workers (0: all cores)");

    EnsembleOptions ensemble;
    CLI::App *ensemble_cmd = app.add_subcommand("ensemble", "Sample random-circuit steady states");
    ensemble_cmd->add_option("--kind", ensemble.kind, "unitary or measurement")->required();
    ensemble_cmd->add_option("--L", ensemble.sizes, "System sizes: 12, 8,12,16, 8..16 or 8..16:2")->required();
    ensemble_cmd->add_option("--samples", ensemble.samples, "Samples per size")->check(CLI::PositiveNumber);
    ensemble_cmd->add_option("--seed", ensemble.seed, "Master seed");
    ensemble_cmd->add_option("--layers", ensemble.layers, "Circuit layers, or 'auto' for 4L");
    ensemble_cmd->add_option("--out", ensemble.out, "CSV path; the aggregate goes next to it as .json");
    ensemble_cmd->add_option("--json", ensemble.json_out, "Aggregate JSON path");
    ensemble_cmd->add_option("--threads", ensemble.threads, "Sample workers (0: all cores)");
    ensemble_cmd->add_flag("--allow-large", ensemble.allow_large, "Permit unitary runs above L = 24");

    VerifyOptions verify;
    CLI::App *verify_cmd = app.add_subcommand("verify", "Cross-check entropies and partitions against a dense simulation");
    verify_cmd->add_option("--in", verify.in, "Tableau file ('-' or absent: stdin)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*gen_cmd) {
            return cmd_gen(gen, out, err);
        }
        if (*analyze_cmd) {
            return cmd_analyze(analyze, in, out);
        }
        if (*ensemble_cmd) {
            return cmd_ensemble(ensemble, out, err);
        }
        if (*verify_cmd) {
            return cmd_verify(verify, in, out);
        }
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DataError &e) {
        err << "error: " << e.what() << "\n";
        return kExitDataError;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitDataError;
    }
    return kExitUsage;
}

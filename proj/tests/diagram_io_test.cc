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

#include <gtest/gtest.h>

#include <cctype>
#include <map>
#include <set>

#include "entstruct/states.h"
#include "test_util.h"

using namespace entstruct;
using nlohmann::json;

namespace {

DiagramDocument document_for(const StabilizerTableau &t, bool with_metrics) {
    DiagramDocument doc;
    doc.diagram = build_diagram(t);
    if (with_metrics) {
        doc.metrics = compute_metrics(doc.diagram);
    }
    return doc;
}

// Minimal reader for the DOT subset we emit: nested `subgraph cluster_k { ... }` blocks,
// `label="..."` attributes and `qK [label="K"];` node statements. Returns the cluster tree as
// nested vectors of leaf labels and checks balanced braces.
struct DotCluster {
    std::string label;
    std::vector<int> leaves;
    std::vector<DotCluster> children;
};

class DotReader {
   public:
    explicit DotReader(const std::string &text) : text_(text) {}

    DotCluster read() {
        expect_word("graph");
        expect_word("entstruct");
        expect('{');
        DotCluster top;
        body(top);
        expect('}');
        skip_space();
        if (pos_ != text_.size()) {
            fail("trailing text");
        }
        return top;
    }

   private:
    void body(DotCluster &c) {
        while (true) {
            skip_space();
            if (peek() == '}') {
                return;
            }
            std::string word = ident();
            if (word == "subgraph") {
                std::string name = ident();
                if (name.rfind("cluster_", 0) != 0) {
                    fail("subgraph name " + name);
                }
                if (!names_.insert(name).second) {
                    fail("duplicate subgraph " + name);
                }
                expect('{');
                DotCluster child;
                body(child);
                expect('}');
                c.children.push_back(std::move(child));
            } else if (word == "label") {
                expect('=');
                c.label = quoted();
                expect(';');
            } else if (word == "node" || word == "graph") {
                attrs();
                expect(';');
            } else if (word.size() > 1 && word[0] == 'q') {
                std::map<std::string, std::string> a = attrs();
                expect(';');
                if (a["label"] != word.substr(1)) {
                    fail("node label mismatch for " + word);
                }
                c.leaves.push_back(std::stoi(word.substr(1)));
            } else {
                fail("unexpected statement " + word);
            }
        }
    }

    std::map<std::string, std::string> attrs() {
        std::map<std::string, std::string> out;
        expect('[');
        while (true) {
            skip_space();
            if (peek() == ']') {
                pos_++;
                return out;
            }
            std::string key = ident();
            expect('=');
            skip_space();
            out[key] = peek() == '"' ? quoted() : ident();
            skip_space();
            if (peek() == ',') {
                pos_++;
            }
        }
    }

    std::string quoted() {
        skip_space();
        if (peek() != '"') {
            fail("expected string");
        }
        size_t end = text_.find('"', pos_ + 1);
        if (end == std::string::npos) {
            fail("unterminated string");
        }
        std::string s = text_.substr(pos_ + 1, end - pos_ - 1);
        pos_ = end + 1;
        return s;
    }

    std::string ident() {
        skip_space();
        size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            pos_++;
        }
        if (start == pos_) {
            fail("expected identifier");
        }
        return text_.substr(start, pos_ - start);
    }

    void expect_word(const std::string &w) {
        if (ident() != w) {
            fail("expected " + w);
        }
    }

    void expect(char ch) {
        skip_space();
        if (peek() != ch) {
            fail(std::string("expected '") + ch + "'");
        }
        pos_++;
    }

    char peek() const {
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void skip_space() {
        while (pos_ < text_.size()) {
            if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
                pos_++;
            } else if (text_.compare(pos_, 2, "//") == 0) {
                pos_ = text_.find('\n', pos_);
                if (pos_ == std::string::npos) {
                    pos_ = text_.size();
                }
            } else {
                return;
            }
        }
    }

    [[noreturn]] void fail(const std::string &what) const {
        throw std::runtime_error("dot: " + what + " at offset " + std::to_string(pos_));
    }

    const std::string &text_;
    size_t pos_ = 0;
    std::set<std::string> names_;
};

void compare_dot(const DotCluster &dot, const DiagramNode &node) {
    ASSERT_FALSE(node.is_leaf());
    EXPECT_EQ(dot.label, "w=" + std::to_string(node.w));
    std::vector<int> leaves;
    size_t next_child = 0;
    for (const DiagramNode &c : node.children) {
        if (c.is_leaf()) {
            leaves.push_back(static_cast<int>(c.qubit) + 1);
        } else {
            ASSERT_LT(next_child, dot.children.size());
            compare_dot(dot.children[next_child++], c);
        }
    }
    EXPECT_EQ(next_child, dot.children.size());
    EXPECT_EQ(dot.leaves, leaves);
}

}  // namespace

TEST(diagram_io, json_round_trip) {
    Rng rng(40);
    std::vector<StabilizerTableau> states{four_qubit_example(), ghz(6), cluster1d(8, Boundary::Open), product_state(3)};
    for (int i = 0; i < 30; i++) {
        states.push_back(testutil::random_tableau(1 + rng.below(9), rng));
    }
    for (const StabilizerTableau &t : states) {
        for (bool with_metrics : {false, true}) {
            DiagramDocument doc = document_for(t, with_metrics);
            std::string text = format_document(doc);
            ASSERT_EQ(parse_document(text), doc) << text;
            ASSERT_EQ(format_document(parse_document(text)), text);
        }
    }
}

TEST(diagram_io, json_shape) {
    json j = to_json(document_for(four_qubit_example(), true));
    EXPECT_EQ(j["schema"], "1");
    EXPECT_EQ(j["n"], 4);
    ASSERT_EQ(j["roots"].size(), 1);
    const json &root = j["roots"][0];
    EXPECT_EQ(root["kind"], "cluster");
    EXPECT_EQ(root["w"], 2);
    EXPECT_EQ(root["decoupled"], true);
    EXPECT_EQ(root["children"][0]["children"][0], (json{{"kind", "leaf"}, {"qubit", 1}, {"decoupled", false}}));
    EXPECT_EQ(j["metrics"]["depth"], 4);
    EXPECT_EQ(j["metrics"]["partitions"], json::parse("[[1,2,3,4]]"));
    EXPECT_EQ(j["first_round_sets"][0], json::parse(R"({"qubits":[1,2],"w":2})"));
    EXPECT_TRUE(to_json(document_for(product_state(2), true))["metrics"]["min_weight"].is_null());
}

TEST(diagram_io, rejects_malformed_documents) {
    json good = to_json(document_for(ghz(3), false));
    ASSERT_NO_THROW(document_from_json(good));

    json extra = good;
    extra["colour"] = "red";
    EXPECT_THROW(document_from_json(extra), DocumentError);

    json schema = good;
    schema["schema"] = "2";
    EXPECT_THROW(document_from_json(schema), DocumentError);

    json missing = good;
    missing.erase("roots");
    EXPECT_THROW(document_from_json(missing), DocumentError);

    json range = good;
    range["roots"][0]["children"][0]["qubit"] = 4;
    EXPECT_THROW(document_from_json(range), DocumentError);

    json zero = good;
    zero["roots"][0]["children"][0]["qubit"] = 0;
    EXPECT_THROW(document_from_json(zero), DocumentError);

    json twice = good;
    twice["roots"][0]["children"][1]["qubit"] = 1;
    EXPECT_THROW(document_from_json(twice), DocumentError);

    json node_field = good;
    node_field["roots"][0]["children"][0]["size"] = 1;
    EXPECT_THROW(document_from_json(node_field), DocumentError);

    json w1 = good;
    w1["roots"][0]["w"] = 1;
    EXPECT_THROW(document_from_json(w1), DocumentError);

    EXPECT_THROW(parse_document("{"), DocumentError);
    EXPECT_THROW(parse_document("[]"), DocumentError);
}

TEST(diagram_io, dot_is_well_formed_and_matches_tree) {
    Rng rng(41);
    std::vector<StabilizerTableau> states{four_qubit_example(), cluster1d(8, Boundary::Open), product_state(2)};
    for (int i = 0; i < 20; i++) {
        states.push_back(testutil::random_tableau(2 + rng.below(8), rng));
    }
    for (const StabilizerTableau &t : states) {
        Diagram d = build_diagram(t);
        std::string dot = format_dot(d);
        DotCluster top = DotReader(dot).read();
        size_t next_child = 0;
        std::vector<int> top_leaves;
        for (const DiagramNode &r : d.roots) {
            if (r.is_leaf()) {
                top_leaves.push_back(static_cast<int>(r.qubit) + 1);
            } else {
                ASSERT_LT(next_child, top.children.size());
                compare_dot(top.children[next_child++], r);
            }
        }
        EXPECT_EQ(top.leaves, top_leaves);
        EXPECT_EQ(next_child, top.children.size());
    }
}

TEST(diagram_io, text_format) {
    std::string text = format_text(build_diagram(four_qubit_example()));
    EXPECT_EQ(text,
              "w=2 {1,2,3,4} (separable)\n"
              "  w=2 {1,2}\n"
              "    1\n"
              "    2\n"
              "  w=2 {3,4}\n"
              "    3\n"
              "    4\n");
    EXPECT_EQ(format_text(build_diagram(product_state(2))), "1 (separable)\n2 (separable)\n");
}

TEST(diagram_io, ensemble_stats_json) {
    EnsembleSpec spec;
    spec.kind = EnsembleKind::MeasurementOnly;
    spec.L = 8;
    spec.samples = 4;
    spec.seed = 3;
    EnsembleStats stats = run_ensemble(spec);
    json j = to_json(stats);
    EXPECT_EQ(j["kind"], "measurement");
    EXPECT_EQ(j["L"], 8);
    EXPECT_EQ(j["layers"], 32);
    EXPECT_EQ(j["s_ee_bits"]["count"], 4);
    EXPECT_DOUBLE_EQ(j["s_ee_bits"]["mean"].get<double>(), stats.s_ee_bits.mean);
}

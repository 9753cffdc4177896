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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "entstruct/diagram_io.h"
#include "entstruct/states.h"

using namespace entstruct;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const std::string &input = "") {
    std::istringstream in(input);
    std::ostringstream out;
    std::ostringstream err;
    int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path &p) {
    std::ifstream f(p, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

class TempDir {
   public:
    TempDir() {
        static int counter = 0;
        path_ = fs::temp_directory_path() / ("entstruct_cli_test_" + std::to_string(::getpid()) + "_" +
                                             std::to_string(counter++));
        fs::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path_, ec);
    }
    const fs::path &path() const {
        return path_;
    }

   private:
    fs::path path_;
};

}  // namespace

TEST(cli, size_lists) {
    EXPECT_EQ(cli::parse_size_list("12"), (std::vector<size_t>{12}));
    EXPECT_EQ(cli::parse_size_list("8,12,16"), (std::vector<size_t>{8, 12, 16}));
    EXPECT_EQ(cli::parse_size_list("8..12"), (std::vector<size_t>{8, 9, 10, 11, 12}));
    EXPECT_EQ(cli::parse_size_list("8..16:4"), (std::vector<size_t>{8, 12, 16}));
    EXPECT_THROW(cli::parse_size_list("16..8"), std::invalid_argument);
    EXPECT_THROW(cli::parse_size_list("8..16:0"), std::invalid_argument);
    EXPECT_THROW(cli::parse_size_list("x"), std::invalid_argument);
    EXPECT_THROW(cli::parse_size_list(""), std::invalid_argument);
}

TEST(cli, gen) {
    Result r = run({"gen", "cluster1d", "8", "--boundary", "obc"});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "X1 Z2");
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 8);

    Result fig1 = run({"gen", "fig1"});
    ASSERT_EQ(fig1.code, cli::kExitOk);
    EXPECT_EQ(parse_tableau(fig1.out), four_qubit_example());

    Result fig2 = run({"gen", "fig2"});
    EXPECT_EQ(fig2.code, cli::kExitOk);
    EXPECT_NE(fig2.err.find("warning"), std::string::npos);
    EXPECT_THROW(parse_tableau(fig2.out), ValidationError);

    Result fixed = run({"gen", "fig2", "--complete"});
    EXPECT_EQ(fixed.code, cli::kExitOk);
    EXPECT_TRUE(fixed.err.empty());
    EXPECT_NO_THROW(parse_tableau(fixed.out));
}

TEST(cli, analyze_formats) {
    std::string fig1 = run({"gen", "fig1"}).out;
    Result j = run({"analyze", "--metrics"}, fig1);
    ASSERT_EQ(j.code, cli::kExitOk) << j.err;
    DiagramDocument doc = parse_document(j.out);
    EXPECT_EQ(doc.diagram, build_diagram(four_qubit_example()));
    ASSERT_TRUE(doc.metrics);
    EXPECT_EQ(doc.metrics->depth, 4);
    EXPECT_EQ(doc.metrics->layers, 2);
    EXPECT_EQ(doc.metrics->min_weight, 2u);

    Result dot = run({"analyze", "--format", "dot", "--metrics"}, fig1);
    ASSERT_EQ(dot.code, cli::kExitOk);
    EXPECT_EQ(dot.out.rfind("graph entstruct {", 0), 0u);
    EXPECT_NE(dot.out.find("// depth 4"), std::string::npos);

    Result text = run({"analyze", "--format", "text", "--metrics"}, fig1);
    ASSERT_EQ(text.code, cli::kExitOk);
    EXPECT_NE(text.out.find("w=2 {1,2}"), std::string::npos);
    EXPECT_NE(text.out.find("layers 2"), std::string::npos);

    Result threaded = run({"analyze", "--threads", "3"}, fig1);
    EXPECT_EQ(threaded.out, run({"analyze"}, fig1).out);
}

TEST(cli, analyze_reads_file) {
    TempDir dir;
    fs::path p = dir.path() / "ghz.txt";
    std::ofstream(p) << run({"gen", "ghz", "6"}).out;
    Result r = run({"analyze", "--in", p.string(), "--format", "text"});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "w=2 {1,2,3,4,5,6} (separable)");
    EXPECT_EQ(run({"analyze", "--in", (dir.path() / "missing.txt").string()}).code, cli::kExitDataError);
}

TEST(cli, exit_codes) {
    EXPECT_EQ(run({}).code, cli::kExitUsage);
    EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"gen", "surface", "9"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"gen", "ghz"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"analyze", "--format", "svg"}, "Z1\n").code, cli::kExitUsage);
    EXPECT_EQ(run({"analyze"}, "X1 Z2\nZ1\n").code, cli::kExitDataError);
    EXPECT_EQ(run({"analyze"}, "Q1\n").code, cli::kExitDataError);
    EXPECT_EQ(run({"ensemble", "--kind", "chaotic", "--L", "8"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"ensemble", "--kind", "unitary", "--L", "40"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"ensemble", "--kind", "unitary", "--L", "9..8"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"verify"}, run({"gen", "ghz", "15"}).out).code, cli::kExitUsage);
    Result help = run({"--help"});
    EXPECT_EQ(help.code, cli::kExitOk);
    EXPECT_NE(help.out.find("analyze"), std::string::npos);
}

TEST(cli, verify) {
    for (std::vector<std::string> gen : std::vector<std::vector<std::string>>{
             {"gen", "fig1"}, {"gen", "fig2", "--complete"}, {"gen", "steane"}, {"gen", "cluster1d", "12"}}) {
        Result r = run({"verify"}, run(gen).out);
        EXPECT_EQ(r.code, cli::kExitOk) << gen[1] << r.out << r.err;
        EXPECT_NE(r.out.find("PASS"), std::string::npos);
    }
}

TEST(cli, ensemble_is_deterministic) {
    TempDir dir;
    std::vector<std::string> base{"ensemble", "--kind", "measurement", "--L", "12", "--samples", "20", "--seed", "7"};
    std::vector<std::string> first = base;
    first.insert(first.end(), {"--out", (dir.path() / "a.csv").string()});
    std::vector<std::string> second = base;
    second.insert(second.end(), {"--out", (dir.path() / "b.csv").string(), "--threads", "2"});
    ASSERT_EQ(run(first).code, cli::kExitOk);
    ASSERT_EQ(run(second).code, cli::kExitOk);
    std::string csv = slurp(dir.path() / "a.csv");
    EXPECT_EQ(csv, slurp(dir.path() / "b.csv"));
    EXPECT_EQ(slurp(dir.path() / "a.json"), slurp(dir.path() / "b.json"));
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 21);
    nlohmann::json agg = nlohmann::json::parse(slurp(dir.path() / "a.json"));
    EXPECT_EQ(agg["schema"], "1");
    ASSERT_EQ(agg["points"].size(), 1);
    EXPECT_EQ(agg["points"][0]["L"], 12);
    EXPECT_EQ(agg["points"][0]["samples"], 20);
}

TEST(cli, ensemble_to_stdout_and_ranges) {
    Result r = run({"ensemble", "--kind", "unitary", "--L", "4..6", "--samples", "2", "--layers", "8"});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), records_csv_header());
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 7);
}

TEST(cli, unwritable_output_is_data_error) {
    TempDir dir;
    fs::path blocker = dir.path() / "file";
    std::ofstream(blocker) << "x";
    Result r = run({"ensemble", "--kind", "measurement", "--L", "8", "--samples", "2", "--out",
                    (blocker / "sub" / "out.csv").string()});
    EXPECT_EQ(r.code, cli::kExitDataError);
    EXPECT_NE(r.err.find("error"), std::string::npos);
}

// Copyright 2026 The qsearch Authors
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

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "gtest/gtest.h"
#include "json.hpp"
#include "qsearch_cli.hpp"

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = qsearch::cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

std::string read_file(const std::filesystem::path &path) {
    std::ifstream f(path, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

/// All decimal numbers appearing in a table line.
std::vector<double> numbers_in(const std::string &text) {
    std::vector<double> xs;
    static const std::regex number(R"(-?\d+\.\d+(e[-+]\d+)?)");
    for (auto it = std::sregex_iterator(text.begin(), text.end(), number); it != std::sregex_iterator(); ++it) {
        xs.push_back(std::stod(it->str()));
    }
    return xs;
}

}  // namespace

TEST(cli_set_search, standard_n2) {
    CliRun r = run({"set-search", "-n", "2", "--marked", "2", "--variant", "standard"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("P(2)=1.000000"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("gates: H:6 X:6 CU1:2"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("iterations=1"), std::string::npos);
}

TEST(cli_set_search, default_variant_is_rx) {
    CliRun r = run({"set-search", "-n", "3", "--marked", "5"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("variant=rx"), std::string::npos);
    EXPECT_NE(r.out.find("gates: RX:15 X:4 CCU1:4"), std::string::npos) << r.out;
}

TEST(cli_set_search, usage_errors_exit_2) {
    CliRun out_of_range = run({"set-search", "-n", "2", "--marked", "4"});
    EXPECT_EQ(out_of_range.code, 2);
    EXPECT_NE(out_of_range.err.find("out of range"), std::string::npos);
    EXPECT_EQ(run({"set-search", "-n", "2", "--marked", "1", "--variant", "zz"}).code, 2);
    EXPECT_EQ(run({"set-search", "--bogus"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"set-search", "-n", "2"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(cli_set_search, structured_output_matches_table) {
    CliRun table = run({"set-search", "-n", "3", "--marked", "5", "--variant", "standard"});
    CliRun doc = run({"set-search", "-n", "3", "--marked", "5", "--variant", "standard", "--format", "json"});
    ASSERT_EQ(doc.code, 0);
    auto j = nlohmann::json::parse(doc.out);
    EXPECT_EQ(j["histogram"]["H"], 15);
    EXPECT_EQ(j["histogram"]["X"], 16);
    EXPECT_EQ(j["histogram"]["CCU1"], 4);
    EXPECT_EQ(j["top_outcome"], 5);

    std::vector<double> from_table = numbers_in(table.out);
    std::vector<double> from_doc;
    for (const auto &row : j["distribution"]) {
        from_doc.push_back(row["probability"]);
    }
    from_doc.push_back(j["top_probability"]);
    EXPECT_EQ(from_table, from_doc);
}

TEST(cli_set_search, dump_circuit_golden) {
    auto path = std::filesystem::temp_directory_path() / "qsearch_cli_dump.txt";
    CliRun r = run({"set-search", "-n", "2", "--marked", "2", "--variant", "standard", "--dump-circuit", path.string()});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(read_file(path), read_file(std::filesystem::path(QSEARCH_GOLDEN_DIR) / "set_n2_m2_standard.txt"));
}

TEST(cli_array_search, finds_minus_three) {
    CliRun r = run({"array-search", "-n", "3", "-m", "3", "--poly", "-4,1", "--target", "-3"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("top outcome: index 1, value -3  P=0.945312"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("target found: yes"), std::string::npos);
}

TEST(cli_array_search, emits_frames) {
    auto dir = std::filesystem::temp_directory_path() / "qsearch_cli_frames";
    std::filesystem::remove_all(dir);
    CliRun r = run({"array-search", "-n", "3", "-m", "3", "--poly", "-4,1", "--target", "-3", "--variant", "standard",
                 "--emit-frames", dir.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    int files = 0;
    for (const auto &entry : std::filesystem::directory_iterator(dir)) {
        (void)entry;
        files++;
    }
    EXPECT_EQ(files, 3);
    const std::filesystem::path golden = QSEARCH_GOLDEN_DIR;
    EXPECT_EQ(read_file(dir / "frame_00.ppm"), read_file(golden / "search_standard_0.ppm"));
    EXPECT_EQ(read_file(dir / "frame_02.ppm"), read_file(golden / "search_standard_2.ppm"));
}

TEST(cli_array_search, unattainable_target) {
    CliRun r = run({"array-search", "-n", "3", "-m", "3", "--poly", "-4,1", "--target", "7"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("target found: no"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("expected to miss"), std::string::npos);
    EXPECT_EQ(run({"array-search", "-n", "3", "-m", "3", "--poly", "-4,1"}).code, 2);
    EXPECT_EQ(run({"array-search", "-n", "3", "-m", "3", "--target", "1"}).code, 2);
}

TEST(cli_compare, set_tables) {
    CliRun r = run({"compare", "-n", "2", "--marked", "2", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["standard"]["histogram"]["H"], 6);
    EXPECT_EQ(j["standard"]["histogram"]["X"], 6);
    EXPECT_EQ(j["standard"]["histogram"]["CU1"], 2);
    EXPECT_EQ(j["modified"]["histogram"]["RX"], 6);
    EXPECT_EQ(j["modified"]["histogram"]["X"], 2);
    EXPECT_EQ(j["modified"]["histogram"]["CU1"], 2);
    EXPECT_LT(j["equivalence_residual"].get<double>(), 1e-9);

    CliRun t = run({"compare", "-n", "3", "--marked", "5"});
    ASSERT_EQ(t.code, 0);
    EXPECT_NE(t.out.find("standard      15     0    16     4"), std::string::npos) << t.out;
    EXPECT_NE(t.out.find("rx             0    15     4     4"), std::string::npos) << t.out;
    EXPECT_NE(t.out.find("X gates saved: 12"), std::string::npos);
}

TEST(cli_compare, array_table) {
    CliRun r = run({"compare", "--mode", "array", "-n", "3", "-m", "3", "--poly", "-4,1", "--target", "0", "--format",
                 "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["standard"]["histogram"]["H"], 45);
    EXPECT_EQ(j["standard"]["histogram"]["X"], 36);
    EXPECT_EQ(j["modified"]["histogram"]["RX"], 45);
    EXPECT_EQ(j["modified"]["histogram"]["X"], 12);
    for (const char *side : {"standard", "modified"}) {
        EXPECT_EQ(j[side]["histogram"]["U1"], 15);
        EXPECT_EQ(j[side]["histogram"]["CU1"], 60);
        EXPECT_EQ(j[side]["histogram"]["nCU1"], 4);
    }
    EXPECT_LT(j["equivalence_residual"].get<double>(), 1e-9);
}

TEST(cli_noise_sweep, rows_and_reproducibility) {
    std::vector<std::string> args = {"noise-sweep", "-n", "2", "--marked", "2", "--p1", "0,0.01",
                                     "--shots", "4096", "--seeds", "4", "--seed", "7"};
    CliRun a = run(args), b = run(args);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);

    args.insert(args.end(), {"--format", "json"});
    CliRun doc = run(args);
    auto j = nlohmann::json::parse(doc.out);
    ASSERT_EQ(j["rows"].size(), 4u);
    double std01 = 0, mod01 = 0;
    for (const auto &row : j["rows"]) {
        if (row["p1"] == 0.0) {
            EXPECT_EQ(row["mean_success"], row["exact"]);
            EXPECT_EQ(row["exact"], 1.0);
        } else if (row["variant"] == "standard") {
            std01 = row["mean_success"];
        } else {
            mod01 = row["mean_success"];
        }
    }
    EXPECT_GE(mod01, std01);

    std::vector<double> table_numbers = numbers_in(a.out), doc_numbers;
    for (const auto &row : j["rows"]) {
        for (const char *k : {"p1", "p2", "mean_success", "exact"}) {
            doc_numbers.push_back(row[k]);
        }
    }
    EXPECT_EQ(table_numbers, doc_numbers);
}

TEST(cli_noise_sweep, validates_levels) {
    EXPECT_EQ(run({"noise-sweep", "-n", "2", "--marked", "2", "--p1", "2"}).code, 2);
    EXPECT_EQ(run({"noise-sweep", "-n", "2", "--marked", "2", "--p1", "0.1", "--p2", "0.1,0.2"}).code, 2);
    EXPECT_EQ(run({"noise-sweep", "-n", "2", "--marked", "2", "--shots", "0"}).code, 2);
}

TEST(cli, writes_report_to_out_path) {
    auto path = std::filesystem::temp_directory_path() / "qsearch_cli_report.json";
    CliRun r = run({"set-search", "-n", "2", "--marked", "1", "--format", "json", "--out", path.string()});
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    EXPECT_EQ(nlohmann::json::parse(read_file(path))["top_outcome"], 1);
}

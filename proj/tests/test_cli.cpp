/*
   Copyright 2026 The qcodes Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Drives the qcodes executable end to end: exit codes and file round-trips.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qcodes/report.hpp"
#include "qcodes/tables.hpp"

namespace {

namespace fs = std::filesystem;

struct CliResult {
    int code;
    std::string out;
};

CliResult run(const std::string& args) {
    const std::string cmd = std::string(QCODES_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, {}};
    std::string out;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "qcodes_cli_test";
    fs::create_directories(dir);
    return dir / name;
}

TEST(CliVerify, ExitCodes) {
    EXPECT_EQ(run("verify --m 3 --e 7").code, 0);
    EXPECT_EQ(run("verify --m 3 --e 0").code, 2);
    EXPECT_EQ(run("verify --m 4 --e 5").code, 2);
    EXPECT_EQ(run("verify --m 3").code, 64);
    EXPECT_EQ(run("verify --m 3 --e 7 --format yaml").code, 64);
    EXPECT_EQ(run("--help").code, 0);
}

TEST(CliVerify, NonOptimalPrintsWitness) {
    // e = 2 gives a weight-2 or weight-3 codeword at m = 3.
    const CliResult r = run("verify --m 3 --e 2");
    ASSERT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("not optimal"), std::string::npos);
    EXPECT_NE(r.out.find("codeword"), std::string::npos);
}

TEST(CliVerify, JsonlRoundTrip) {
    const CliResult r = run("verify --m 3 --e 2 --format jsonl");
    ASSERT_EQ(r.code, 1);
    std::istringstream in(r.out);
    const auto recs = qcodes::read_jsonl(in);
    ASSERT_EQ(recs.size(), 1u);
    EXPECT_EQ(recs[0].command, "verify");
    EXPECT_EQ(recs[0].n, 124u);
    EXPECT_FALSE(recs[0].optimal);
    ASSERT_TRUE(recs[0].witness.has_value());
    EXPECT_GE(recs[0].witness->logs.size(), 2u);
}

TEST(CliVerify, CsvRoundTrip) {
    const CliResult r = run("verify --m 3 --e 7 --format csv");
    ASSERT_EQ(r.code, 0);
    std::istringstream in(r.out);
    const auto recs = qcodes::read_records_csv(in);
    ASSERT_EQ(recs.size(), 1u);
    EXPECT_EQ(recs[0].d, 4u);
    EXPECT_TRUE(recs[0].optimal);
}

TEST(CliEnumerate, CsvMatchesLibrary) {
    const fs::path out = scratch("m3.csv");
    ASSERT_EQ(run("enumerate --m 3 --out " + out.string()).code, 0);
    std::ifstream in(out);
    const auto read = qcodes::read_catalog_csv(in, 5, 3);
    EXPECT_EQ(read, qcodes::enumerate_optimal(5, 3));
}

TEST(CliEnumerate, TableTextLoadsAsReference) {
    const fs::path out = scratch("m4.txt");
    ASSERT_EQ(run("enumerate --m 4 --format table-text --out " + out.string()).code, 0);
    EXPECT_EQ(run("tables diff --m 4 --no-errata --ref " + out.string()).code, 0);
}

TEST(CliEnumerate, Guards) {
    EXPECT_EQ(run("enumerate --m 6").code, 2);
    EXPECT_EQ(run("enumerate --m 3 --out /nonexistent-dir/x.csv").code, 73);
    EXPECT_EQ(run("enumerate --m 3 --format xml").code, 64);
}

TEST(CliTheorem, ExitCodes) {
    EXPECT_EQ(run("theorem --name thm8 --m 4").code, 0);
    EXPECT_EQ(run("theorem --name remark2 --m 4").code, 0);
    EXPECT_EQ(run("theorem --name remark_p7 --m 3").code, 0);
    EXPECT_EQ(run("theorem --name remark_p7 --m 4").code, 2);
    EXPECT_EQ(run("theorem --name no_such_family --m 4").code, 64);
}

TEST(CliTheorem, OneLinePerExponent) {
    const CliResult r = run("theorem --name thm1 --m 4 --format jsonl");
    ASSERT_EQ(r.code, 0);
    std::istringstream in(r.out);
    const auto recs = qcodes::read_jsonl(in);
    ASSERT_FALSE(recs.empty());
    for (const auto& rec : recs) {
        EXPECT_EQ(rec.command, "theorem");
        EXPECT_TRUE(rec.optimal);
    }
}

TEST(CliFactor, ExitCodes) {
    const CliResult ok = run("factor --poly 'x^2-1' --p 5");
    EXPECT_EQ(ok.code, 0);
    EXPECT_NE(ok.out.find("(x + 1) (x + 4)"), std::string::npos);
    EXPECT_EQ(run("factor --poly 'x^^2' --p 5").code, 65);
    EXPECT_EQ(run("factor --poly '0' --p 5").code, 65);
}

TEST(CliTablesDiff, ExitCodes) {
    EXPECT_EQ(run("tables diff --m 4").code, 0);
    EXPECT_EQ(run("tables diff --m 4 --no-errata").code, 1);
    EXPECT_EQ(run("tables diff --m 4 --ref /nonexistent/table.txt").code, 66);
    EXPECT_EQ(run("tables diff --m 3").code, 64);
}

TEST(CliTablesDiff, JsonlSummary) {
    const fs::path out = scratch("diff.jsonl");
    ASSERT_EQ(run("tables diff --m 4 --jsonl " + out.string()).code, 0);
    std::ifstream in(out);
    std::string line, last;
    while (std::getline(in, line))
        if (!line.empty()) last = line;
    EXPECT_NE(last.find("\"summary\""), std::string::npos);
}

}  // namespace

/*
   Copyright 2026 The quatram Authors

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

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "quatram/harness.hpp"
#include "quatram/report.hpp"

using namespace quatram;

namespace {

struct CliRun {
    int status = -1;
    std::string out;
    std::vector<std::string> lines;
};

CliRun run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " + QUATRAM_CLI + " " + args + " 2>/dev/null";
    CliRun r;
    FILE* p = popen(cmd.c_str(), "r");
    if (p == nullptr) return r;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    const int st = pclose(p);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    std::istringstream is(r.out);
    for (std::string line; std::getline(is, line);) r.lines.push_back(line);
    return r;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST(Cli, CatalogGoldens) {
    const CliRun two = run("catalog --tag 2 --e 2");
    EXPECT_EQ(two.status, 0);
    EXPECT_EQ(two.out, read_file(std::string(QUATRAM_GOLDEN_DIR) + "/catalog_tag2_e2.jsonl"));
    const CliRun star = run("catalog --tag '1*' --e 2");
    EXPECT_EQ(star.out, read_file(std::string(QUATRAM_GOLDEN_DIR) + "/catalog_tag1s_e2.jsonl"));
}

TEST(Cli, CatalogExamples) {
    EXPECT_EQ(run("catalog --tag 2 --e 2").lines.size(), 3u);

    const CliRun ha = run("catalog --tag '1*' --e 2 --only-hasse-arf");
    ASSERT_EQ(ha.lines.size(), 2u);
    const auto first = nlohmann::json::parse(ha.lines[0]);
    EXPECT_EQ(first["s1"], 1);
    EXPECT_EQ(first["s2"], 2);
    EXPECT_EQ(first["s3"], 3);
    EXPECT_EQ(first["hasse_arf_integral"], false);

    const CliRun one = run("catalog --tag 1 --e 1 --format csv");
    ASSERT_EQ(one.lines.size(), 2u);
    EXPECT_EQ(one.lines[0], catalog_csv_header());
    EXPECT_EQ(one.lines[1], "1,1,1,1,2,5,stable,1 1 2,true");

    EXPECT_NE(run("catalog --e 0").status, 0);
    EXPECT_NE(run("catalog --tag 3 --e 2").status, 0);
}

TEST(Cli, VerifyIsDeterministic) {
    const CliRun a = run("verify --field e2f2i --samples 60 --seed 4 --threads 1");
    const CliRun b = run("verify --field e2f2i --samples 60 --seed 4 --threads 4");
    EXPECT_EQ(a.status, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.lines.size(), 61u);
    const auto summary = nlohmann::json::parse(a.lines.back());
    EXPECT_EQ(summary["schema"], kSchemaVersion);
    EXPECT_EQ(summary["hard_violations"], 0);
    EXPECT_NE(a.out, run("verify --field e2f2i --samples 60 --seed 5").out);
}

TEST(Cli, WitnessCommand) {
    const CliRun ok = run("witness --field e2f2i --tag '1*' --triple 1,2,3");
    EXPECT_EQ(ok.status, 0);
    ASSERT_EQ(ok.lines.size(), 1u);
    const auto rec = nlohmann::json::parse(ok.lines[0]);
    EXPECT_EQ(rec["match"], true);
    EXPECT_EQ(rec["upper_breaks"].back(), "3/2");

    const CliRun star = run("witness --field e2f2i --tag '1*' --all");
    EXPECT_EQ(star.status, 0);
    EXPECT_EQ(star.lines.size(), 4u);

    const CliRun missing = run("witness --field e2f2i --tag 2 --triple 1,5,11");
    EXPECT_EQ(missing.status, 2);
    EXPECT_EQ(nlohmann::json::parse(missing.lines.at(0))["error"], "NotInCatalog");

    const CliRun noi = run("witness --field Q2sqrt2 --tag 2 --triple 1,5,13");
    EXPECT_EQ(noi.status, 2);
    EXPECT_EQ(nlohmann::json::parse(noi.lines.at(0))["error"], "RequiresI");
}

TEST(Cli, Selftest) {
    const CliRun r = run("selftest");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.lines.size(), 8u);
    for (const std::string& line : r.lines) EXPECT_EQ(nlohmann::json::parse(line)["disagreements"], 0) << line;
}

TEST(Cli, ConfigFile) {
    const std::filesystem::path path = std::filesystem::temp_directory_path() / "quatram_test_config.json";
    {
        std::ofstream out(path);
        out << R"({"presets": [{"name": "mine", "f": 2, "e": 2, "eis": [2, 2, 1], "N": 30}],)"
            << R"( "defaults": {"field": "mine", "samples": 5, "seed": 3, "format": "csv"}})";
    }
    const CliRun r = run("verify", "QUATRAM_CONFIG=" + path.string());
    EXPECT_EQ(r.status, 0);
    ASSERT_EQ(r.lines.size(), 6u);
    EXPECT_EQ(r.lines[0], sample_csv_header());
    EXPECT_EQ(r.lines[1].rfind("1,mine,0,", 0), 0u);
    EXPECT_EQ(run("verify", "QUATRAM_CONFIG=/nonexistent/quatram.json").status, 2);
    std::filesystem::remove(path);
}

TEST(Verify, Q2iIsAllTagTwo) {
    const VerifyReport rep = run_verify(parse_field_spec("Q2i"), 200, 1);
    EXPECT_EQ(rep.records.size(), 200u);
    EXPECT_EQ(rep.hard_violations(), 0);
    for (const SampleRecord& r : rep.records) {
        EXPECT_EQ(r.triple.tag, ClassTag::Two);
        EXPECT_TRUE(r.catalog_checked && r.in_catalog);
    }
}

TEST(Verify, BothTagsAtE2F2) {
    const VerifyReport rep = run_verify(parse_field_spec("e2f2i"), 200, 2);
    std::set<ClassTag> tags;
    for (const SampleRecord& r : rep.records) tags.insert(r.triple.tag);
    EXPECT_EQ(tags, (std::set<ClassTag>{ClassTag::OneStar, ClassTag::Two}));
    EXPECT_EQ(rep.hard_violations(), 0);
}

TEST(Verify, StableTriplesWithoutI) {
    for (const char* name : {"Q2sqrt2", "f3e2"}) {
        const VerifyReport rep = run_verify(parse_field_spec(name), 150, 3);
        EXPECT_FALSE(rep.i_in_base);
        int stable = 0;
        for (const SampleRecord& r : rep.records) {
            if (!r.stable) continue;
            ++stable;
            if (r.triple.tag != ClassTag::OneStar) {
                EXPECT_TRUE(r.catalog_checked && r.in_catalog) << name;
            }
        }
        EXPECT_GT(stable, 0) << name;
        EXPECT_EQ(rep.hard_violations(), 0) << name;
    }
}

TEST(Report, Formats) {
    EXPECT_EQ(parse_format("json"), Format::Json);
    EXPECT_EQ(parse_format("csv"), Format::Csv);
    EXPECT_ANY_THROW(parse_format("xml"));
    const BreakData bd = triple_breaks(ClassTag::OneStar, 1, 2, 3);
    EXPECT_EQ(bd.lower_breaks, (std::vector<int>{1, 1, 3}));
    EXPECT_EQ(triple_breaks(ClassTag::Two, 1, 5, 13).lower_breaks, (std::vector<int>{1, 5, 13}));
}

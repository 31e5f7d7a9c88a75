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

// quatram: catalog enumeration, sampling verification, witnesses and oracle self-tests.
//
//   quatram catalog  --tag 1* --e 2 [--only-hasse-arf] [--format csv]
//   quatram verify   --field e2f2i --samples 500 --seed 1
//   quatram witness  --field e2f2i --tag 1* --triple 1,2,3
//   quatram selftest
//
// QUATRAM_CONFIG names a JSON file with extra presets and defaults:
//   {"presets": [{"name": "k", "f": 2, "e": 2, "eis": [2, 2, 1], "N": 24}],
//    "defaults": {"field": "k", "samples": 200, "seed": 7, "format": "json"}}

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "quatram/catalog.hpp"
#include "quatram/errors.hpp"
#include "quatram/harness.hpp"
#include "quatram/report.hpp"

namespace {

using namespace quatram;

struct RunConfig {
    std::vector<FieldSpec> presets;
    std::string field;
    int samples = 100;
    std::uint64_t seed = 1;
    std::string format = "json";
};

RunConfig load_config() {
    RunConfig cfg;
    const char* path = std::getenv("QUATRAM_CONFIG");
    if (path == nullptr || *path == '\0') return cfg;
    std::ifstream in(path);
    if (!in) throw DomainError(std::string("cannot read QUATRAM_CONFIG file ") + path);
    const nlohmann::json j = nlohmann::json::parse(in);
    for (const auto& p : j.value("presets", nlohmann::json::array())) {
        FieldSpec s;
        s.name = p.at("name").get<std::string>();
        s.f = p.at("f").get<int>();
        s.e = p.at("e").get<int>();
        s.eis = p.at("eis").get<std::vector<std::int64_t>>();
        s.precision_bits = p.value("N", 0);
        cfg.presets.push_back(s);
    }
    const nlohmann::json d = j.value("defaults", nlohmann::json::object());
    cfg.field = d.value("field", cfg.field);
    cfg.samples = d.value("samples", cfg.samples);
    cfg.seed = d.value("seed", cfg.seed);
    cfg.format = d.value("format", cfg.format);
    return cfg;
}

FieldSpec resolve_field(const RunConfig& cfg, const std::string& name) {
    if (name.empty()) throw DomainError("--field is required");
    for (const FieldSpec& p : cfg.presets) {
        if (p.name == name) return p;
    }
    return parse_field_spec(name);
}

std::vector<ClassTag> tags_for(const std::string& tag) {
    if (tag.empty()) return {ClassTag::One, ClassTag::OneStar, ClassTag::Two};
    return {parse_tag(tag)};
}

CatalogTriple parse_triple(ClassTag tag, int e, const std::string& text) {
    CatalogTriple t;
    t.tag = tag;
    t.e = e;
    char c1 = 0, c2 = 0;
    std::istringstream is(text);
    if (!(is >> t.s1 >> c1 >> t.s2 >> c2 >> t.s3) || c1 != ',' || c2 != ',') {
        throw DomainError("--triple must look like s1,s2,s3");
    }
    t.stability = is_unstable(tag, e, t.s1, t.s2) ? Stability::Unstable : Stability::Stable;
    return t;
}

void emit_error(const std::string& kind, const std::string& what, Format fmt = Format::Json) {
    nlohmann::ordered_json j;
    j["schema"] = kSchemaVersion;
    j["kind"] = "error";
    j["error"] = kind;
    j["message"] = what;
    (fmt == Format::Json ? std::cout : std::cerr) << j.dump() << '\n';
}

int cmd_catalog(const std::string& tag, int e, const Format fmt, bool only_hasse_arf) {
    if (e < 1) throw DomainError("--e must be positive");
    if (fmt == Format::Csv) std::cout << catalog_csv_header() << '\n';
    for (ClassTag t : tags_for(tag)) {
        for (const CatalogTriple& c : enumerate(t, e)) {
            if (only_hasse_arf && c.s3 != 3 * c.s1) continue;
            std::cout << format_catalog(c, fmt) << '\n';
        }
    }
    return 0;
}

int cmd_verify(const FieldSpec& spec, int samples, std::uint64_t seed, int threads, Format fmt) {
    const VerifyReport rep = run_verify(spec, samples, seed, threads);
    if (fmt == Format::Csv) std::cout << sample_csv_header() << '\n';
    for (const SampleRecord& r : rep.records) std::cout << format_sample(rep, r, fmt) << '\n';
    (fmt == Format::Json ? std::cout : std::cerr) << format_verify_summary(rep) << '\n';
    return rep.hard_violations() == 0 ? 0 : 1;
}

int cmd_witness(const FieldSpec& spec, const std::string& tag, const std::string& triple, bool all, Format fmt) {
    const FieldPtr k = make_field(spec);
    std::vector<CatalogTriple> targets;
    if (all) {
        for (ClassTag t : tags_for(tag)) {
            for (const CatalogTriple& c : enumerate(t, k->e_abs())) targets.push_back(c);
        }
    } else {
        if (tag.empty() || triple.empty()) throw DomainError("witness needs --tag and --triple, or --all");
        targets.push_back(parse_triple(parse_tag(tag), k->e_abs(), triple));
    }
    if (fmt == Format::Csv) std::cout << witness_csv_header() << '\n';
    int failures = 0;
    for (const CatalogTriple& t : targets) {
        try {
            const WitnessOutcome w = run_witness(spec, t);
            std::cout << format_witness(w, fmt) << '\n';
            if (!w.match) ++failures;
        } catch (const NotInCatalog& ex) {
            if (!all) throw;
            emit_error("NotInCatalog", ex.what(), fmt);
            ++failures;
        } catch (const Error& ex) {
            if (!all) throw;
            emit_error("Unrealized", format_catalog(t, Format::Csv) + ": " + ex.what(), fmt);
            ++failures;
        }
    }
    return failures == 0 ? 0 : 1;
}

int cmd_selftest(std::uint64_t seed) {
    std::vector<OracleSuite> suites;
    suites.push_back(oracle_defect_classes(parse_field_spec("Q2"), 6));
    suites.push_back(oracle_defect_random(parse_field_spec("e2f2i"), 50, seed));
    suites.push_back(oracle_symbol_table(parse_field_spec("Q2")));
    for (const char* f : {"Q2i", "Q2sqrt2", "T4", "e2f2i"}) {
        suites.push_back(oracle_symbol_sampled(parse_field_spec(f), 40, seed));
    }
    suites.push_back(oracle_refined(parse_field_spec("e2f2i"), 50, seed));
    int bad = 0;
    for (const OracleSuite& s : suites) {
        std::cout << format_oracle(s) << '\n';
        bad += s.disagreements;
    }
    return bad == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    try {
        cfg = load_config();
    } catch (const std::exception& ex) {
        std::cerr << "quatram: " << ex.what() << '\n';
        return 2;
    }

    CLI::App app{"Ramification triples of quaternion extensions of dyadic fields"};
    app.require_subcommand(1);
    std::string tag, field = cfg.field, format = cfg.format, triple;
    int e = 0, samples = cfg.samples, threads = 0;
    std::uint64_t seed = cfg.seed;
    bool only_hasse_arf = false, all = false;

    auto* catalog = app.add_subcommand("catalog", "Enumerate R_1, R_1*, R_2 for a given e");
    catalog->add_option("--tag", tag, "1, 1* or 2 (all tags when omitted)");
    catalog->add_option("--e", e, "absolute ramification index")->required();
    catalog->add_option("--format", format, "json or csv");
    catalog->add_flag("--only-hasse-arf", only_hasse_arf, "keep triples with s3 = 3 s1");

    auto* verify = app.add_subcommand("verify", "Sample (u, v, k), build and check");
    verify->add_option("--field", field, "preset name or f,e,c0:..:ce[,N]");
    verify->add_option("--samples", samples, "accepted samples");
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--threads", threads, "worker threads (0: hardware)");
    verify->add_option("--format", format, "json or csv");

    auto* wit = app.add_subcommand("witness", "Realize a catalog triple and re-measure it");
    wit->add_option("--field", field, "preset name or f,e,c0:..:ce[,N]");
    wit->add_option("--tag", tag, "1, 1* or 2");
    wit->add_option("--triple", triple, "s1,s2,s3");
    wit->add_flag("--all", all, "every catalog triple of the tag (all tags when --tag is omitted)");
    wit->add_option("--format", format, "json or csv");

    auto* self = app.add_subcommand("selftest", "Oracle equivalence suites");
    self->add_option("--seed", seed, "random seed");

    CLI11_PARSE(app, argc, argv);

    try {
        const Format fmt = parse_format(format);
        if (*catalog) return cmd_catalog(tag, e, fmt, only_hasse_arf);
        if (*verify) return cmd_verify(resolve_field(cfg, field), samples, seed, threads, fmt);
        if (*wit) return cmd_witness(resolve_field(cfg, field), tag, triple, all, fmt);
        if (*self) return cmd_selftest(seed);
    } catch (const NotInCatalog& ex) {
        emit_error("NotInCatalog", ex.what());
        return 2;
    } catch (const RequiresI& ex) {
        emit_error("RequiresI", ex.what());
        return 2;
    } catch (const Error& ex) {
        emit_error("Error", ex.what());
        return 2;
    }
    return 0;
}

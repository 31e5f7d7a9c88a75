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

#include "quatram/report.hpp"


#include <json.hpp>

#include "quatram/errors.hpp"

namespace quatram {

using Json = nlohmann::ordered_json;

namespace {

Json rationals(const std::vector<Rational>& v) {
    Json out = Json::array();
    for (const Rational& r : v) out.push_back(r.to_string());
    return out;
}

std::string joined(const std::vector<Rational>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + v[i].to_string();
    return out;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string csv(std::initializer_list<std::string> cells) {
    std::string out;
    bool first = true;
    for (const std::string& c : cells) {
        if (!first) out += ',';
        out += csv_field(c);
        first = false;
    }
    return out;
}

std::string b(bool v) { return v ? "true" : "false"; }

}  // namespace

Format parse_format(const std::string& text) {
    if (text == "json") return Format::Json;
    if (text == "csv") return Format::Csv;
    throw DomainError("format must be json or csv, got '" + text + "'");
}

std::string stability_name(Stability s) { return s == Stability::Stable ? "stable" : "unstable"; }

BreakData triple_breaks(ClassTag tag, int s1, int s2, int s3) {
    BreakData bd;
    bd.shape = GroupShape::Q8;
    bd.lower_breaks = tag == ClassTag::Two ? std::vector<int>{s1, s2, s3} : std::vector<int>{s1, s1, s3};
    return bd;
}

std::string catalog_csv_header() { return "schema,tag,e,s1,s2,s3,stability,upper_breaks,hasse_arf_integral"; }

std::string format_catalog(const CatalogTriple& t, Format fmt) {
    const BreakData bd = triple_breaks(t.tag, t.s1, t.s2, t.s3);
    const std::vector<Rational> up = upper_breaks(bd);
    const bool integral = upper_breaks_integral(bd);
    if (fmt == Format::Csv) {
        return csv({std::to_string(kSchemaVersion), tag_name(t.tag), std::to_string(t.e), std::to_string(t.s1),
                    std::to_string(t.s2), std::to_string(t.s3), stability_name(t.stability), joined(up), b(integral)});
    }
    Json j;
    j["schema"] = kSchemaVersion;
    j["kind"] = "catalog";
    j["tag"] = tag_name(t.tag);
    j["e"] = t.e;
    j["s1"] = t.s1;
    j["s2"] = t.s2;
    j["s3"] = t.s3;
    j["stability"] = stability_name(t.stability);
    j["upper_breaks"] = rationals(up);
    j["hasse_arf_integral"] = integral;
    return j.dump();
}

std::string sample_csv_header() {
    return "schema,field,index,u,v,k,tag,s1,s2,s3,stability,upper_breaks,hasse_arf_integral,catalog_checked,in_catalog,"
           "soft_failure,violations";
}

std::string format_sample(const VerifyReport& rep, const SampleRecord& r, Format fmt) {
    const bool ok = r.soft_failure.empty();
    if (fmt == Format::Csv) {
        std::string viol;
        for (std::size_t i = 0; i < r.violations.size(); ++i) viol += (i ? "; " : "") + r.violations[i];
        return csv({std::to_string(kSchemaVersion), rep.field, std::to_string(r.index), r.u.to_string(),
                    r.v.to_string(), r.k.to_string(), ok ? tag_name(r.triple.tag) : "",
                    ok ? std::to_string(r.triple.s1) : "", ok ? std::to_string(r.triple.s2) : "",
                    ok ? std::to_string(r.triple.s3) : "", ok ? (r.stable ? "stable" : "unstable") : "",
                    joined(r.upper), ok ? b(r.integral) : "", b(r.catalog_checked), b(r.in_catalog), r.soft_failure,
                    viol});
    }
    Json j;
    j["schema"] = kSchemaVersion;
    j["kind"] = "sample";
    j["field"] = rep.field;
    j["index"] = r.index;
    if (!ok) {
        j["soft_failure"] = r.soft_failure;
        return j.dump();
    }
    j["u"] = r.u.to_string();
    j["v"] = r.v.to_string();
    j["k"] = r.k.to_string();
    j["tag"] = tag_name(r.triple.tag);
    j["s1"] = r.triple.s1;
    j["s2"] = r.triple.s2;
    j["s3"] = r.triple.s3;
    j["stability"] = r.stable ? "stable" : "unstable";
    j["upper_breaks"] = rationals(r.upper);
    j["hasse_arf_integral"] = r.integral;
    j["catalog_checked"] = r.catalog_checked;
    j["in_catalog"] = r.in_catalog;
    j["violations"] = r.violations;
    return j.dump();
}

std::string format_verify_summary(const VerifyReport& rep) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["kind"] = "summary";
    j["field"] = rep.field;
    j["seed"] = rep.seed;
    j["samples"] = rep.samples;
    j["i_in_base"] = rep.i_in_base;
    j["rejected"] = {{"not_embeddable", rep.rejected_not_embeddable},
                     {"not_fully_ramified", rep.rejected_not_fully_ramified},
                     {"degenerate", rep.rejected_degenerate}};
    j["soft_failures"] = rep.soft_failures;
    Json checks = Json::object();
    for (const auto& [name, t] : rep.log.tallies) checks[name] = {{"checked", t.checked}, {"violations", t.violations}};
    j["checks"] = checks;
    j["hard_violations"] = rep.hard_violations();
    return j.dump();
}

std::string witness_csv_header() {
    return "schema,field,tag,s1,s2,s3,construction,u,v,k,measured,replayed,upper_breaks,hasse_arf_integral,match";
}

std::string format_witness(const WitnessOutcome& w, Format fmt) {
    auto text = [](const RamTriple& t) {
        return tag_name(t.tag) + " (" + std::to_string(t.s1) + "," + std::to_string(t.s2) + "," +
               std::to_string(t.s3) + ")";
    };
    const CatalogTriple& t = w.target;
    if (fmt == Format::Csv) {
        return csv({std::to_string(kSchemaVersion), w.field, tag_name(t.tag), std::to_string(t.s1),
                    std::to_string(t.s2), std::to_string(t.s3), w.recipe.construction, w.recipe.u_class.to_string(),
                    w.recipe.v_class.to_string(), w.recipe.k_class.to_string(), text(w.measured), text(w.replayed),
                    joined(w.upper), b(w.integral), b(w.match)});
    }
    Json j;
    j["schema"] = kSchemaVersion;
    j["kind"] = "witness";
    j["field"] = w.field;
    j["tag"] = tag_name(t.tag);
    j["s1"] = t.s1;
    j["s2"] = t.s2;
    j["s3"] = t.s3;
    j["stability"] = stability_name(t.stability);
    j["construction"] = w.recipe.construction;
    j["u"] = w.recipe.u_class.to_string();
    j["v"] = w.recipe.v_class.to_string();
    j["k"] = w.recipe.k_class.to_string();
    j["measured"] = {w.measured.s1, w.measured.s2, w.measured.s3};
    j["measured_tag"] = tag_name(w.measured.tag);
    j["replayed"] = {w.replayed.s1, w.replayed.s2, w.replayed.s3};
    j["upper_breaks"] = rationals(w.upper);
    j["hasse_arf_integral"] = w.integral;
    j["match"] = w.match;
    return j.dump();
}

std::string format_oracle(const OracleSuite& s) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["kind"] = "selftest";
    j["suite"] = s.name;
    j["cases"] = s.cases;
    j["disagreements"] = s.disagreements;
    j["details"] = s.details;
    return j.dump();
}

}  // namespace quatram

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

#ifndef QUATRAM_REPORT_HPP
#define QUATRAM_REPORT_HPP

#include <string>
#include <vector>

#include "quatram/catalog.hpp"
#include "quatram/harness.hpp"

namespace quatram {

inline constexpr int kSchemaVersion = 1;

enum class Format { Json, Csv };

/// "json" or "csv".
Format parse_format(const std::string& text);
std::string stability_name(Stability s);

/// Lower breaks with multiplicity implied by a triple: (b, b, b3) or (b1, b2, b3).
BreakData triple_breaks(ClassTag tag, int s1, int s2, int s3);

// Each formatter returns one line without the trailing newline. CSV headers are separate.
std::string catalog_csv_header();
std::string format_catalog(const CatalogTriple& t, Format fmt);

std::string sample_csv_header();
std::string format_sample(const VerifyReport& rep, const SampleRecord& r, Format fmt);
/// Always JSON: counts, rejections and per-family check tallies.
std::string format_verify_summary(const VerifyReport& rep);

std::string witness_csv_header();
std::string format_witness(const WitnessOutcome& w, Format fmt);

std::string format_oracle(const OracleSuite& s);

}  // namespace quatram

#endif  // QUATRAM_REPORT_HPP

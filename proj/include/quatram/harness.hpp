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

#ifndef QUATRAM_HARNESS_HPP
#define QUATRAM_HARNESS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "quatram/catalog.hpp"
#include "quatram/localfield.hpp"
#include "quatram/quaternion.hpp"
#include "quatram/ramify.hpp"
#include "quatram/squares.hpp"

namespace quatram {

/// Counters for one family of checks.
struct CheckTally {
    int checked = 0;
    int violations = 0;
};

/// Property checks run on each built extension; messages describe violations.
struct CheckLog {
    std::map<std::string, CheckTally> tallies;
    std::vector<std::string> messages;

    void record(const std::string& family, bool ok, const std::string& detail);
    int violations() const;
    void merge(const CheckLog& other);
};

/// break_from_defect against the Galois break of the top step of e.
void check_step(const FieldPtr& e, CheckLog& log);
/// Defect growth of kappa from the parent of e into e (skipped when the break is even or kappa is a square in e).
void check_defect_growth(const FieldPtr& e, const FieldElem& kappa, CheckLog& log);
/// All per-extension properties: step breaks, defect growth, biquadratic constraints, refined bounds,
/// the defect of k alpha_1 in the stable and unstable cases, catalog membership and the Hasse-Arf criterion.
void check_quaternion(const QuaternionData& q, CheckLog& log);

/// Whether the triple falls under a statement that asserts catalog membership:
/// always when i is in K, otherwise only stable tag 1 and tag 2 triples.
bool catalog_applies(const QuaternionData& q);
bool is_stable_triple(const RamTriple& t, int e);

struct SampleRecord {
    std::size_t index = 0;
    SquareClassVector u, v, k;
    RamTriple triple;
    bool stable = false;
    std::vector<Rational> upper;
    bool integral = true;
    bool catalog_checked = false;
    bool in_catalog = false;
    int attempts = 0;
    std::string soft_failure;  // PrecisionExhausted message, empty otherwise
    std::vector<std::string> violations;
};

struct VerifyReport {
    std::string field;
    int samples = 0;
    std::uint64_t seed = 0;
    bool i_in_base = false;
    std::vector<SampleRecord> records;
    int rejected_not_embeddable = 0;
    int rejected_not_fully_ramified = 0;
    int rejected_degenerate = 0;
    int soft_failures = 0;
    CheckLog log;

    int hard_violations() const { return log.violations(); }
};

/// Draws square classes of u, v, k uniformly per sample (an independent generator seeded from
/// seed and the sample index), rejects non-embeddable and non-fully-ramified pairs, builds and checks.
/// Records come back in index order whatever the thread count.
VerifyReport run_verify(const FieldSpec& spec, int samples, std::uint64_t seed, int threads = 0);

/// Agreement between a fast routine and its reference oracle.
struct OracleSuite {
    std::string name;
    int cases = 0;
    int disagreements = 0;
    std::vector<std::string> details;
};

/// defect against brute_force_defect on every square-class representative (k searched mod pi^digits).
OracleSuite oracle_defect_classes(const FieldSpec& spec, int digits);
/// defect against brute_force_defect on random units built from random digits.
OracleSuite oracle_defect_random(const FieldSpec& spec, int count, std::uint64_t seed);
/// Gram-matrix symbol against brute-force solvability on all pairs of classes.
OracleSuite oracle_symbol_table(const FieldSpec& spec);
/// Gram-matrix symbol against norm spans of random elements, on random pairs of classes.
OracleSuite oracle_symbol_sampled(const FieldSpec& spec, int count, std::uint64_t seed);
/// refined_break_direct against the formula on random normal forms.
OracleSuite oracle_refined(const FieldSpec& spec, int count, std::uint64_t seed);

struct WitnessOutcome {
    std::string field;
    CatalogTriple target;
    WitnessRecipe recipe;
    RamTriple measured;          // from executing the recipe
    RamTriple replayed;          // from the square-class echo
    std::vector<Rational> upper;
    bool integral = true;
    bool match = false;          // measured and replayed both equal the target
};

/// witness + execute + replay. Errors from witness propagate.
WitnessOutcome run_witness(const FieldSpec& spec, const CatalogTriple& t);

}  // namespace quatram

#endif  // QUATRAM_HARNESS_HPP

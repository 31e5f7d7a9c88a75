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

#ifndef QUATRAM_QUATERNION_HPP
#define QUATRAM_QUATERNION_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quatram/localfield.hpp"
#include "quatram/ramify.hpp"

namespace quatram {

enum class ClassTag { One, OneStar, Two };

std::string tag_name(ClassTag tag);
/// Accepts "1", "1*" and "2".
ClassTag parse_tag(const std::string& text);

struct RamTriple {
    ClassTag tag = ClassTag::Two;
    int s1 = 0;
    int s2 = 0;
    int s3 = 0;

    friend bool operator==(const RamTriple&, const RamTriple&) = default;
};

/// Everything about K(sqrt u, sqrt v) that does not depend on k.
struct QuaternionFrame {
    FieldPtr base;
    FieldElem u, v;  // normalized: (u, v) = 1 and (uv, -1) = 1
    BiquadraticBreaks breaks;
    bool i_in_base = false;
    FieldElem eta;                 // in K(sqrt u), N(eta) = v
    std::optional<FieldElem> tau;  // in K(sqrt uv), N(tau) = -1, only when i is not in K
    FieldElem alpha_one;           // sqrt(uv) eta (tau) inside M
    std::optional<RefinedInvariants> refined;  // one-break frames
};

struct QuaternionData {
    QuaternionFrame frame;
    FieldElem k;
    FieldElem alpha;  // k * alpha_one
    FieldPtr n;       // M(sqrt alpha)
    int def_alpha = 0;
    int b3 = 0;
    int b3_galois = 0;
    RamTriple triple;
    BreakData breaks;  // lower breaks of N/K with multiplicity
};

bool contains_i(const FieldPtr& k);
/// (-u, -v) = (-1, -1), checked against (-1, u)(-1, v)(u, v) = 1.
bool embeddable(const FieldElem& u, const FieldElem& v);
/// First of (u,v), (u,uv), (uv,v), (v,u), (uv,u), (v,uv) with (u',v') = 1 and (u'v', -1) = 1.
std::pair<FieldElem, FieldElem> normalize_uv(const FieldElem& u, const FieldElem& v);

/// Requires a normalized pair (otherwise NotANorm from the norm solver).
QuaternionFrame build_frame(const FieldElem& u, const FieldElem& v);
/// def_M(k alpha_one) in M units; kInfinity when k alpha_one is a square.
int alpha_defect(const QuaternionFrame& frame, const FieldElem& k);
QuaternionData build_quaternion(const QuaternionFrame& frame, const FieldElem& k);
QuaternionData build_quaternion(const FieldElem& u, const FieldElem& v, const FieldElem& k);
RamTriple classify(const QuaternionData& q);

/// Candidate multipliers pi^eps (1 + w pi^j), eps in {0, 1}, j = 0..2e, w Teichmueller,
/// followed by every square-class representative of K (which makes the search exhaustive).
std::vector<FieldElem> k_candidates(const FieldPtr& k);
/// First candidate k with b3 = target_s3, verified by rebuilding. Throws TargetUnreachable.
FieldElem tune_k(const QuaternionFrame& frame, int target_s3);
FieldElem tune_k(const FieldElem& u, const FieldElem& v, int target_s3);

}  // namespace quatram

#endif  // QUATRAM_QUATERNION_HPP

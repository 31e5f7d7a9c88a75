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

#ifndef QUATRAM_CATALOG_HPP
#define QUATRAM_CATALOG_HPP

#include <string>
#include <vector>

#include "quatram/localfield.hpp"
#include "quatram/quaternion.hpp"
#include "quatram/squares.hpp"

namespace quatram {

enum class Stability { Stable, Unstable };

struct CatalogTriple {
    ClassTag tag = ClassTag::Two;
    int e = 1;
    int s1 = 0;
    int s2 = 0;
    int s3 = 0;
    Stability stability = Stability::Stable;

    friend bool operator==(const CatalogTriple&, const CatalogTriple&) = default;
};

/// Odd s1 with 0 < s1 < 2e.
std::vector<int> s1_values(int e);
/// min(2 s1, 4e - s1) for tags 1 and 1*, 4e - s1 for tag 2.
int s2_bound(ClassTag tag, int e, int s1);
/// s1 < n <= bound, with n = s1 mod 4 below the bound.
std::vector<int> s2_values(ClassTag tag, int e, int s1);
int lower_bound_s3(ClassTag tag, int e, int s1, int s2);
int upper_bound_s3(ClassTag tag, int e, int s1, int s2);
bool is_unstable(ClassTag tag, int e, int s1, int s2);
/// 4e + s1, 4e + s2 or 4e + 2 s1 - s2 for tags 1, 2 and 1*.
int stable_s3(ClassTag tag, int e, int s1, int s2);
/// Admissible third coordinates for a valid (s1, s2), ascending.
std::vector<int> s3_values(ClassTag tag, int e, int s1, int s2);

bool member(ClassTag tag, int e, int s1, int s2, int s3);
/// Sorted lexicographically.
std::vector<CatalogTriple> enumerate(ClassTag tag, int e);
/// Triples of R_1* and R_1 with s3 = 3 s1. Each must have tag 1* and s2 at its bound.
std::vector<CatalogTriple> hasse_arf_exceptions(int e);

/// Concrete data realizing a catalog triple over K.
struct WitnessRecipe {
    CatalogTriple target;
    std::string construction;  // which branch of the construction produced u, v
    FieldElem u, v, k;
    ResidueElem omega;     // one-break cases
    int m = kInfinity;     // v_K(mu), one-break cases
    /// Square classes of u, v and of a k that realizes the target on the class representatives.
    SquareClassVector u_class, v_class, k_class;
};

/// Throws RequiresI when i is not in K, NotInCatalog for triples outside R_tag^e,
/// HypothesisViolation when the residue field has no suitable omega, TargetUnreachable
/// when no pair and k in the candidate sets hit the target.
WitnessRecipe witness(const FieldPtr& k, const CatalogTriple& t);
/// Rebuilds the extension from scratch and measures it.
QuaternionData execute(const WitnessRecipe& w);
/// Builds from the square-class representatives of a normalized pair and of k.
QuaternionData replay(const FieldPtr& k, const SquareClassVector& u, const SquareClassVector& v,
                      const SquareClassVector& kk);

}  // namespace quatram

#endif  // QUATRAM_CATALOG_HPP

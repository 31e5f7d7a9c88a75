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

#ifndef QUATRAM_ORACLES_HPP
#define QUATRAM_ORACLES_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "quatram/localfield.hpp"
#include "quatram/squares.hpp"

namespace quatram {

// Slow reference computations that share no code path with the defect reduction,
// the square-class coordinates or the Gram matrix of the Hilbert pairing.

/// sum_{i < digits} lift(a_i) pi^i over all digit strings, with 0/1 lifts of the residues.
std::vector<FieldElem> digit_representatives(const FieldPtr& f, int digits);

/// max v(k^2 u - 1) over units k mod pi^digits; kInfinity once the level passes 2e.
/// Odd valuation gives 0; even valuation is reduced by pi^(-v). digits <= 0 selects e + 1,
/// which already decides every level up to 2e + 1.
int brute_force_defect(const FieldElem& u, int digits = 0);

/// Whether c is a norm from F(sqrt a): searches primitive (x, y) mod pi^digits for
/// (x^2 - a y^2) / c a nonzero square, judged by brute_force_defect.
bool brute_force_is_norm(const FieldElem& a, const FieldElem& c, int digits);
/// Default digit count for brute_force_is_norm: 2e + 2.
int brute_force_digits(const TowerField& f);

/// Square classes of norms of random elements of F(sqrt a), spanned until the index-2 rank
/// is reached (or max_draws is exhausted). Returns false when the rank was not reached.
bool random_norm_span(const FieldElem& a, std::mt19937_64& rng, int max_draws, std::vector<SquareClassVector>& basis);
/// Symbol bit (1 for -1) of (a, c) from a norm span of F(sqrt a).
int span_symbol_bit(const std::vector<SquareClassVector>& basis, const SquareClassVector& c);

}  // namespace quatram

#endif  // QUATRAM_ORACLES_HPP

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

#ifndef QUATRAM_SQUARES_HPP
#define QUATRAM_SQUARES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "quatram/localfield.hpp"

namespace quatram {

struct DefectResult {
    int value;             // kInfinity for squares
    FieldElem witness_k;   // v(k^2 u - 1) = value when finite
};

/// def_F(u) = max v(k^2 u - 1), computed by stripping square leading terms.
/// Throws PrecisionExhausted when the working precision cannot decide.
DefectResult defect(const FieldElem& u);
bool is_square(const FieldElem& u);
/// b = 2 e_F - def_F(kappa) for the extension F(sqrt kappa).
int break_from_defect(const FieldPtr& f, const FieldElem& kappa);

/// Coordinates in F*/(F*)^2 over the basis
///   pi; 1 + t^k pi^(2n-1) for n = 1..e, k = 0..f-1 (n-major); 1 + 4 lambda,
/// with t^k the 0/1 lift of the residue basis and lambda the Teichmueller lift of the canonical trace-1 residue.
struct SquareClassVector {
    std::vector<std::uint8_t> bits;

    bool is_zero() const;
    std::size_t dimension() const { return bits.size(); }
    /// Bits as '0'/'1' characters in basis order.
    std::string to_string() const;
    static SquareClassVector from_string(const std::string& s);

    friend SquareClassVector operator^(const SquareClassVector& a, const SquareClassVector& b);
    friend bool operator==(const SquareClassVector&, const SquareClassVector&) = default;
};

int square_class_dimension(const TowerField& f);
SquareClassVector square_class_vector(const FieldElem& u);
/// Basis elements in coordinate order.
std::vector<FieldElem> square_class_basis(const FieldPtr& f);
/// Product of the flagged basis elements.
FieldElem square_class_representative(const FieldPtr& f, const SquareClassVector& v);
/// Index of the coordinate 1 + t^k pi^(2n-1).
int one_unit_coordinate(const TowerField& f, int n, int k);

/// The data presenting a one-break biquadratic extension K(x, y):
/// x^2 = 1 + beta, y^2 = (1 + (omega + mu)^2 beta)(1 + 4 lambda).
struct OneBreakNormalForm {
    int b = 0;
    FieldElem beta;
    ResidueElem omega;      // residue of the Teichmueller unit
    FieldElem mu;           // exact zero when m is infinite
    int m = kInfinity;
    ResidueElem lambda;     // 0 or the canonical trace-1 residue
};

struct Lemma22Part {
    FieldElem mu;
    ResidueElem lambda;
};

/// kappa = (1 + mu^2 beta)(1 + 4 lambda) modulo squares, for a one-unit kappa with
/// def(kappa) = 2e - a, 0 < a <= b, v(beta) = 2e - b, b odd. Verified by square classes.
Lemma22Part lemma22_decompose(const FieldElem& kappa, const FieldElem& beta);

}  // namespace quatram

#endif  // QUATRAM_SQUARES_HPP

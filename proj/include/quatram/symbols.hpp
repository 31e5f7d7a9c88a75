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

#ifndef QUATRAM_SYMBOLS_HPP
#define QUATRAM_SYMBOLS_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "quatram/localfield.hpp"
#include "quatram/squares.hpp"

namespace quatram {

/// Span of binary vectors kept in reduced echelon form.
class BinarySpan {
   public:
    explicit BinarySpan(std::size_t dimension) : dim_(dimension) {}

    /// Returns false when v was already in the span.
    bool insert(std::vector<std::uint8_t> v);
    bool contains(std::vector<std::uint8_t> v) const;
    std::size_t rank() const { return rows_.size(); }
    std::size_t dimension() const { return dim_; }
    const std::vector<std::vector<std::uint8_t>>& rows() const { return rows_; }

   private:
    void reduce(std::vector<std::uint8_t>& v) const;

    std::size_t dim_;
    std::vector<std::vector<std::uint8_t>> rows_;
    std::vector<std::size_t> pivots_;
};

/// Image of N_{E/F} in F*/(F*)^2.
struct NormSubspace {
    FieldPtr extension;
    std::vector<SquareClassVector> basis;
    BinarySpan span{0};

    bool contains(const SquareClassVector& v) const { return span.contains(v.bits); }
};

/// Gram matrix of the Hilbert pairing on the square-class basis: bit 1 means symbol -1.
struct HilbertPairing {
    FieldPtr field;
    std::vector<std::vector<std::uint8_t>> gram;

    int bit(const SquareClassVector& u, const SquareClassVector& v) const;
    int symbol(const SquareClassVector& u, const SquareClassVector& v) const { return bit(u, v) ? -1 : 1; }
};

NormSubspace norm_subgroup(const FieldPtr& e);
/// Built once per field and cached on it.
std::shared_ptr<const HilbertPairing> build_pairing(const FieldPtr& f);
/// (u, v) = +1 or -1.
int hilbert_symbol(const FieldElem& u, const FieldElem& v);

/// Default target level for norm equations: v_F(N(eta)/c - 1) >= 4 e_F + 4.
int default_norm_cap(const TowerField& f);
/// eta in E with N_{E/F}(eta) = c to the cap (0 selects the default).
/// Throws NotANorm when c is not a norm (confirmed by the symbol), InternalInconsistency when the
/// search fails although the symbol says c is a norm.
FieldElem solve_norm_equation(const FieldPtr& e, const FieldElem& c, int cap = 0);

}  // namespace quatram

#endif  // QUATRAM_SYMBOLS_HPP

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

#ifndef QUATRAM_RESIDUE_HPP
#define QUATRAM_RESIDUE_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace quatram {

/// Element of F_q, q = 2^f, as coordinates in the polynomial basis 1, t, ..., t^(f-1).
/// Bit k holds the coefficient of t^k.
struct ResidueElem {
    std::uint32_t bits = 0;

    friend bool operator==(ResidueElem, ResidueElem) = default;
    friend auto operator<=>(ResidueElem, ResidueElem) = default;
};

/// Least irreducible polynomial of degree f over F_2, encoded as a bitmask including the leading bit.
/// Table-backed for f <= 8, searched above that.
std::uint32_t default_modulus(int f);

/// Exhaustive trial division; intended for f <= 16.
bool is_irreducible_gf2(std::uint32_t poly);

/// The residue field F_q of a dyadic field. Immutable after construction.
class ResidueField {
   public:
    static constexpr int kMaxDegree = 16;

    explicit ResidueField(int f);
    ResidueField(int f, std::uint32_t modulus);

    int degree() const { return f_; }
    std::uint32_t modulus() const { return modulus_; }
    std::uint32_t order() const { return std::uint32_t{1} << f_; }

    ResidueElem zero() const { return {0}; }
    ResidueElem one() const { return {1}; }
    /// The polynomial-basis element t^k.
    ResidueElem basis(int k) const { return {std::uint32_t{1} << k}; }
    /// Element with integer encoding `code` (0 <= code < q).
    ResidueElem from_code(std::uint32_t code) const;

    ResidueElem add(ResidueElem a, ResidueElem b) const { return {a.bits ^ b.bits}; }
    ResidueElem mul(ResidueElem a, ResidueElem b) const;
    ResidueElem square(ResidueElem a) const { return mul(a, a); }
    ResidueElem pow(ResidueElem a, std::uint64_t n) const;
    ResidueElem inv(ResidueElem a) const;
    ResidueElem div(ResidueElem a, ResidueElem b) const { return mul(a, inv(b)); }
    /// Unique square root (Frobenius inverse).
    ResidueElem sqrt(ResidueElem a) const;

    /// Absolute trace to F_2. Equals 1 iff z^2 + z = a has no root in F_q.
    int trace(ResidueElem a) const;
    /// A root z of z^2 + z = a, or nullopt when trace(a) = 1.
    std::optional<ResidueElem> solve_artin_schreier(ResidueElem a) const;

    /// a^2 + a + 1 = 0. Throws DomainError for a in {0, 1}.
    bool is_cube_root_of_unity(ResidueElem a) const;
    /// Lexicographically smaller of {a, a + 1}. The pair differs only in the constant coefficient,
    /// so this is the member with constant coefficient 0.
    /// Throws DomainError for a in {0, 1}.
    ResidueElem omega_class_canonical(ResidueElem a) const;
    /// Multiplicative order of a nonzero element.
    std::uint64_t multiplicative_order(ResidueElem a) const;

    /// Fixed trace-1 element: the one with the smallest integer encoding.
    ResidueElem canonical_trace_one() const { return trace_one_; }

    std::vector<ResidueElem> elements() const;
    std::vector<ResidueElem> nonzero_elements() const;

    friend bool operator==(const ResidueField& a, const ResidueField& b) {
        return a.f_ == b.f_ && a.modulus_ == b.modulus_;
    }

   private:
    int f_;
    std::uint32_t modulus_;
    ResidueElem trace_one_;
    // Echelon form of z -> z^2 + z: pivot row by leading bit, with the preimage combination.
    std::vector<std::uint32_t> as_pivot_;
    std::vector<std::uint32_t> as_combo_;
};

}  // namespace quatram

#endif  // QUATRAM_RESIDUE_HPP

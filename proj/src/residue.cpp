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

#include "quatram/residue.hpp"

#include <array>
#include <bit>

#include "quatram/errors.hpp"

namespace quatram {

namespace {

// Least irreducible of each degree, by integer encoding.
constexpr std::array<std::uint32_t, 9> kModulusTable = {
    0,      // unused
    0x2,    // x
    0x7,    // x^2 + x + 1
    0xB,    // x^3 + x + 1
    0x13,   // x^4 + x + 1
    0x25,   // x^5 + x^2 + 1
    0x43,   // x^6 + x + 1
    0x83,   // x^7 + x + 1
    0x11B,  // x^8 + x^4 + x^3 + x + 1
};

int poly_degree(std::uint64_t p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m) {
    const int dm = poly_degree(m);
    for (int d = poly_degree(a); d >= dm; d = poly_degree(a)) a ^= m << (d - dm);
    return a;
}

}  // namespace

bool is_irreducible_gf2(std::uint32_t poly) {
    const int d = poly_degree(poly);
    if (d < 1) return false;
    if (d == 1) return true;
    for (std::uint64_t g = 2; poly_degree(g) <= d / 2; ++g) {
        if (poly_mod(poly, g) == 0) return false;
    }
    return true;
}

std::uint32_t default_modulus(int f) {
    if (f < 1 || f > ResidueField::kMaxDegree) throw DomainError("residue degree out of range");
    if (f < static_cast<int>(kModulusTable.size())) return kModulusTable[f];
    for (std::uint32_t p = (1u << f) | 1u; p < (2u << f); ++p) {
        if (is_irreducible_gf2(p)) return p;
    }
    throw DomainError("no irreducible polynomial found");
}

ResidueField::ResidueField(int f) : ResidueField(f, default_modulus(f)) {}

ResidueField::ResidueField(int f, std::uint32_t modulus) : f_(f), modulus_(modulus) {
    if (f < 1 || f > kMaxDegree) throw DomainError("residue degree out of range");
    if (poly_degree(modulus) != f || !is_irreducible_gf2(modulus)) {
        throw DomainError("residue modulus is not an irreducible polynomial of degree f");
    }
    for (std::uint32_t c = 0; c < order(); ++c) {
        if (trace({c}) == 1) {
            trace_one_ = {c};
            break;
        }
    }
    as_pivot_.assign(f_, 0);
    as_combo_.assign(f_, 0);
    for (int k = 0; k < f_; ++k) {
        std::uint32_t v = add(square(basis(k)), basis(k)).bits;
        std::uint32_t c = 1u << k;
        for (int bit = f_ - 1; bit >= 0 && v != 0; --bit) {
            if (((v >> bit) & 1u) == 0) continue;
            if (as_pivot_[bit] != 0) {
                v ^= as_pivot_[bit];
                c ^= as_combo_[bit];
            } else {
                as_pivot_[bit] = v;
                as_combo_[bit] = c;
                break;
            }
        }
    }
}

ResidueElem ResidueField::from_code(std::uint32_t code) const {
    if (code >= order()) throw DomainError("residue code out of range");
    return {code};
}

ResidueElem ResidueField::mul(ResidueElem a, ResidueElem b) const {
    std::uint64_t prod = 0;
    std::uint64_t x = a.bits;
    for (std::uint32_t y = b.bits; y != 0; y >>= 1, x <<= 1) {
        if (y & 1u) prod ^= x;
    }
    return {static_cast<std::uint32_t>(poly_mod(prod, modulus_))};
}

ResidueElem ResidueField::pow(ResidueElem a, std::uint64_t n) const {
    ResidueElem r = one();
    while (n != 0) {
        if (n & 1u) r = mul(r, a);
        a = square(a);
        n >>= 1;
    }
    return r;
}

ResidueElem ResidueField::inv(ResidueElem a) const {
    if (a.bits == 0) throw DomainError("inverse of zero residue");
    return pow(a, order() - 2);
}

ResidueElem ResidueField::sqrt(ResidueElem a) const {
    for (int i = 0; i + 1 < f_; ++i) a = square(a);
    return a;
}

int ResidueField::trace(ResidueElem a) const {
    std::uint32_t t = 0;
    for (int i = 0; i < f_; ++i) {
        t ^= a.bits;
        a = square(a);
    }
    return static_cast<int>(t & 1u);
}

std::optional<ResidueElem> ResidueField::solve_artin_schreier(ResidueElem a) const {
    std::uint32_t v = a.bits;
    std::uint32_t c = 0;
    for (int bit = f_ - 1; bit >= 0; --bit) {
        if (((v >> bit) & 1u) == 0) continue;
        if (as_pivot_[bit] == 0) return std::nullopt;
        v ^= as_pivot_[bit];
        c ^= as_combo_[bit];
    }
    return ResidueElem{c};
}

bool ResidueField::is_cube_root_of_unity(ResidueElem a) const {
    if (a.bits <= 1) throw DomainError("cube-root test needs a residue outside F_2");
    return add(add(square(a), a), one()).bits == 0;
}

ResidueElem ResidueField::omega_class_canonical(ResidueElem a) const {
    if (a.bits <= 1) throw DomainError("omega class needs a residue outside F_2");
    return {a.bits & ~1u};
}

std::uint64_t ResidueField::multiplicative_order(ResidueElem a) const {
    if (a.bits == 0) throw DomainError("order of zero residue");
    std::uint64_t n = 1;
    for (ResidueElem p = a; p != one(); p = mul(p, a)) ++n;
    return n;
}

std::vector<ResidueElem> ResidueField::elements() const {
    std::vector<ResidueElem> out;
    out.reserve(order());
    for (std::uint32_t c = 0; c < order(); ++c) out.push_back({c});
    return out;
}

std::vector<ResidueElem> ResidueField::nonzero_elements() const {
    std::vector<ResidueElem> out;
    out.reserve(order() - 1);
    for (std::uint32_t c = 1; c < order(); ++c) out.push_back({c});
    return out;
}

}  // namespace quatram

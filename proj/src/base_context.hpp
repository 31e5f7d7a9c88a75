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

#ifndef QUATRAM_SRC_BASE_CONTEXT_HPP
#define QUATRAM_SRC_BASE_CONTEXT_HPP

#include <cstdint>
#include <vector>

#include "quatram/localfield.hpp"

namespace quatram {

/// Arithmetic of the Eisenstein base K = T(pi). Unit parts are vectors of e*f words:
/// entry i*f + k is the coefficient of t^k pi^i, reduced mod 2^N.
class BaseContext {
   public:
    using Vec = std::vector<std::uint64_t>;
    using Elem = detail::BaseElem;

    BaseContext(const ResidueField& residue, int e, std::vector<std::int64_t> eis, int n);

    const UnramifiedRing& ring() const { return ring_; }
    const ResidueField& residue() const { return ring_.residue(); }
    int e() const { return e_; }
    int f() const { return f_; }
    int n() const { return n_; }
    /// Relative precision carried by a unit part, in pi-adic digits.
    int capacity() const { return e_ * n_; }
    const std::vector<std::int64_t>& eis() const { return eis_; }

    Elem zero() const { return Elem{}; }
    Elem approx_zero(int prec) const;
    Elem one() const;
    Elem from_int(std::int64_t n) const;
    /// An element of O_T; must be a unit or exactly zero.
    Elem from_ring_unit(const UnramifiedRing::Elem& t) const;
    Elem pi_power(int k) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem inv(const Elem& a) const;

    ValInfo valinfo(const Elem& a) const;
    ResidueElem leading_residue(const Elem& a) const;

   private:
    Vec raw_one() const;
    Vec raw_add(const Vec& a, const Vec& b) const;
    Vec raw_mul(const Vec& a, const Vec& b) const;
    Vec raw_mul_pi(const Vec& a, int d) const;
    Vec raw_div_pi(const Vec& a, int k) const;
    Vec raw_inverse(const Vec& a) const;
    int raw_valuation(const Vec& a) const;
    Elem normalize(const Vec& raw, int shift, int prec) const;

    UnramifiedRing ring_;
    int e_;
    int f_;
    int n_;
    std::uint64_t mask_;
    std::vector<std::int64_t> eis_;
    std::vector<std::int64_t> red_;  // pi^e = sum_i red_i pi^i
    std::vector<Vec> pi_raw_;        // pi^d for d < capacity
    std::vector<Vec> w_inv_pow_;     // (pi^e / 2)^(-q) for q <= N
};

}  // namespace quatram

#endif  // QUATRAM_SRC_BASE_CONTEXT_HPP

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

#include <algorithm>
#include <bit>

#include "quatram/errors.hpp"
#include "quatram/localfield.hpp"

namespace quatram {

namespace {

// Tables are cheap up to this degree; above it Teichmueller lifts are recomputed per call.
constexpr int kTeichTableDegree = 8;

}  // namespace

UnramifiedRing::UnramifiedRing(ResidueField residue, int precision_bits)
    : residue_(std::move(residue)), n_(precision_bits) {
    if (n_ < 1 || n_ > 64) throw DomainError("unramified precision must lie in [1, 64] bits");
    mask_ = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    if (degree() <= kTeichTableDegree) {
        teich_.resize(residue_.order());
        teich_[0] = zero();
        for (std::uint32_t c = 1; c < residue_.order(); ++c) teich_[c] = compute_teichmuller({c});
    }
}

UnramifiedRing::Elem UnramifiedRing::from_int(std::int64_t n) const {
    Elem r = zero();
    r[0] = static_cast<std::uint64_t>(n) & mask_;
    return r;
}

UnramifiedRing::Elem UnramifiedRing::lift(ResidueElem a) const {
    Elem r = zero();
    for (int k = 0; k < degree(); ++k) r[k] = (a.bits >> k) & 1u;
    return r;
}

ResidueElem UnramifiedRing::reduce(const Elem& a) const {
    std::uint32_t bits = 0;
    for (int k = 0; k < degree(); ++k) bits |= static_cast<std::uint32_t>(a[k] & 1u) << k;
    return {bits};
}

UnramifiedRing::Elem UnramifiedRing::add(const Elem& a, const Elem& b) const {
    Elem r(degree());
    for (int k = 0; k < degree(); ++k) r[k] = (a[k] + b[k]) & mask_;
    return r;
}

UnramifiedRing::Elem UnramifiedRing::sub(const Elem& a, const Elem& b) const {
    Elem r(degree());
    for (int k = 0; k < degree(); ++k) r[k] = (a[k] - b[k]) & mask_;
    return r;
}

UnramifiedRing::Elem UnramifiedRing::neg(const Elem& a) const {
    Elem r(degree());
    for (int k = 0; k < degree(); ++k) r[k] = (0 - a[k]) & mask_;
    return r;
}

UnramifiedRing::Elem UnramifiedRing::mul(const Elem& a, const Elem& b) const {
    const int f = degree();
    if (f == 1) return {(a[0] * b[0]) & mask_};
    std::vector<std::uint64_t> prod(2 * f - 1, 0);
    for (int i = 0; i < f; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < f; ++j) prod[i + j] += a[i] * b[j];
    }
    const std::uint32_t g = residue_.modulus();
    for (int d = 2 * f - 2; d >= f; --d) {
        const std::uint64_t h = prod[d];
        if (h == 0) continue;
        for (int i = 0; i < f; ++i) {
            if ((g >> i) & 1u) prod[d - f + i] -= h;
        }
    }
    Elem r(f);
    for (int k = 0; k < f; ++k) r[k] = prod[k] & mask_;
    return r;
}

int UnramifiedRing::two_adic_valuation(const Elem& a) const {
    int v = n_;
    for (std::uint64_t c : a) {
        c &= mask_;
        if (c != 0) v = std::min(v, std::countr_zero(c));
    }
    return v;
}

UnramifiedRing::Elem UnramifiedRing::halve(const Elem& a, int k) const {
    Elem r(degree());
    for (int i = 0; i < degree(); ++i) r[i] = k >= 64 ? 0 : (a[i] & mask_) >> k;
    return r;
}

UnramifiedRing::Elem UnramifiedRing::twice(const Elem& a, int k) const {
    Elem r(degree());
    for (int i = 0; i < degree(); ++i) r[i] = k >= 64 ? 0 : (a[i] << k) & mask_;
    return r;
}

UnramifiedRing::Elem UnramifiedRing::teichmuller(ResidueElem a) const {
    if (a.bits == 0) throw DomainError("Teichmuller lift of zero");
    if (a.bits >= residue_.order()) throw DomainError("residue code out of range");
    if (!teich_.empty()) return teich_[a.bits];
    return compute_teichmuller(a);
}

UnramifiedRing::Elem UnramifiedRing::compute_teichmuller(ResidueElem a) const {
    // s -> s^q gains at least one correct bit per round.
    Elem s = lift(a);
    for (int round = 0; round <= n_ + 1; ++round) {
        Elem t = s;
        for (int i = 0; i < degree(); ++i) t = mul(t, t);
        if (t == s) return s;
        s = std::move(t);
    }
    throw InternalInconsistency("Teichmuller iteration did not stabilize");
}

}  // namespace quatram

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

#include "base_context.hpp"

#include <algorithm>
#include <utility>

#include "quatram/errors.hpp"

namespace quatram {

using Elem = BaseContext::Elem;
using Vec = BaseContext::Vec;
using State = detail::BaseElem::State;

BaseContext::BaseContext(const ResidueField& residue, int e, std::vector<std::int64_t> eis, int n)
    : ring_(residue, n), e_(e), f_(residue.degree()), n_(n), eis_(std::move(eis)) {
    mask_ = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    red_.resize(e_);
    for (int i = 0; i < e_; ++i) red_[i] = -eis_[i];

    pi_raw_.resize(capacity());
    pi_raw_[0] = raw_one();
    if (capacity() > 1) {
        Vec pi(e_ * f_, 0);
        if (e_ >= 2) {
            pi[f_] = 1;
        } else {
            pi[0] = static_cast<std::uint64_t>(red_[0]) & mask_;
        }
        for (int d = 1; d < capacity(); ++d) pi_raw_[d] = raw_mul(pi_raw_[d - 1], pi);
    }

    // w = pi^e / 2 is a unit because the constant term is 2 times a unit.
    Vec w(e_ * f_, 0);
    for (int i = 0; i < e_; ++i) w[i * f_] = static_cast<std::uint64_t>(red_[i] / 2) & mask_;
    const Vec w_inv = raw_inverse(w);
    w_inv_pow_.resize(n_ + 1);
    w_inv_pow_[0] = raw_one();
    for (int q = 1; q <= n_; ++q) w_inv_pow_[q] = raw_mul(w_inv_pow_[q - 1], w_inv);
}

Vec BaseContext::raw_one() const {
    Vec r(e_ * f_, 0);
    r[0] = 1;
    return r;
}

Vec BaseContext::raw_add(const Vec& a, const Vec& b) const {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + b[i]) & mask_;
    return r;
}

Vec BaseContext::raw_mul(const Vec& a, const Vec& b) const {
    const int len = 2 * e_ - 1;
    std::vector<UnramifiedRing::Elem> prod(len, ring_.zero());
    UnramifiedRing::Elem ai(f_);
    UnramifiedRing::Elem bj(f_);
    for (int i = 0; i < e_; ++i) {
        std::copy_n(a.begin() + i * f_, f_, ai.begin());
        if (ring_.is_zero(ai)) continue;
        for (int j = 0; j < e_; ++j) {
            std::copy_n(b.begin() + j * f_, f_, bj.begin());
            prod[i + j] = ring_.add(prod[i + j], ring_.mul(ai, bj));
        }
    }
    for (int d = len - 1; d >= e_; --d) {
        const UnramifiedRing::Elem& h = prod[d];
        if (ring_.is_zero(h)) continue;
        for (int i = 0; i < e_; ++i) {
            if (red_[i] == 0) continue;
            const auto s = static_cast<std::uint64_t>(red_[i]);
            for (int k = 0; k < f_; ++k) prod[d - e_ + i][k] = (prod[d - e_ + i][k] + s * h[k]) & mask_;
        }
    }
    Vec r(e_ * f_);
    for (int i = 0; i < e_; ++i) std::copy_n(prod[i].begin(), f_, r.begin() + i * f_);
    return r;
}

Vec BaseContext::raw_mul_pi(const Vec& a, int d) const {
    if (d >= capacity()) return Vec(e_ * f_, 0);
    if (d == 0) return a;
    return raw_mul(a, pi_raw_[d]);
}

Vec BaseContext::raw_div_pi(const Vec& a, int k) const {
    const int q = k / e_;
    const int r = k % e_;
    Vec x(e_ * f_);
    for (std::size_t i = 0; i < a.size(); ++i) x[i] = q >= 64 ? 0 : (a[i] & mask_) >> q;
    if (q > 0) x = raw_mul(x, w_inv_pow_[std::min(q, n_)]);
    if (r == 0) return x;
    // pi^(i-r) = pi^(e+i-r) / (2 w) for i < r.
    Vec y(e_ * f_, 0);
    Vec z(e_ * f_, 0);
    for (int i = 0; i < e_; ++i) {
        for (int t = 0; t < f_; ++t) {
            const std::uint64_t c = x[i * f_ + t];
            if (i >= r) {
                y[(i - r) * f_ + t] = c;
            } else {
                z[(e_ + i - r) * f_ + t] = c >> 1;
            }
        }
    }
    return raw_add(y, raw_mul(z, w_inv_pow_[1]));
}

Vec BaseContext::raw_inverse(const Vec& a) const {
    const ResidueElem r0 = ring_.reduce(UnramifiedRing::Elem(a.begin(), a.begin() + f_));
    if (r0.bits == 0) throw DomainError("inverse of a non-unit");
    Vec y(e_ * f_, 0);
    const UnramifiedRing::Elem lifted = ring_.lift(residue().inv(r0));
    std::copy(lifted.begin(), lifted.end(), y.begin());
    Vec two(e_ * f_, 0);
    two[0] = 2 & mask_;
    for (int round = 0; round < 2 * 64; ++round) {
        const Vec ay = raw_mul(a, y);
        Vec corr(e_ * f_);
        for (std::size_t i = 0; i < corr.size(); ++i) corr[i] = (two[i] - ay[i]) & mask_;
        Vec next = raw_mul(y, corr);
        if (next == y) return y;
        y = std::move(next);
    }
    throw InternalInconsistency("Newton inversion did not stabilize");
}

int BaseContext::raw_valuation(const Vec& a) const {
    int v = capacity();
    UnramifiedRing::Elem ai(f_);
    for (int i = 0; i < e_; ++i) {
        std::copy_n(a.begin() + i * f_, f_, ai.begin());
        const int v2 = ring_.two_adic_valuation(ai);
        if (v2 < n_) v = std::min(v, e_ * v2 + i);
    }
    return v;
}

Elem BaseContext::normalize(const Vec& raw, int shift, int prec) const {
    const int v = raw_valuation(raw);
    if (v >= capacity() || shift + v >= prec) return approx_zero(prec);
    Elem r;
    r.state = State::Unit;
    r.shift = shift + v;
    r.prec = prec;
    r.c = v == 0 ? raw : raw_div_pi(raw, v);
    return r;
}

Elem BaseContext::approx_zero(int prec) const {
    Elem r;
    r.state = State::Approx;
    r.prec = prec;
    return r;
}

Elem BaseContext::one() const {
    Elem r;
    r.state = State::Unit;
    r.shift = 0;
    r.prec = capacity();
    r.c = raw_one();
    return r;
}

Elem BaseContext::from_int(std::int64_t n) const {
    if (n == 0) return zero();
    int k = 0;
    while ((n & 1) == 0) {
        n /= 2;
        ++k;
    }
    Vec c(e_ * f_, 0);
    c[0] = static_cast<std::uint64_t>(n) & mask_;
    for (int left = k; left > 0; left -= n_) c = raw_mul(c, w_inv_pow_[std::min(left, n_)]);
    Elem r;
    r.state = State::Unit;
    r.shift = e_ * k;
    r.prec = r.shift + capacity();
    r.c = std::move(c);
    return r;
}

Elem BaseContext::from_ring_unit(const UnramifiedRing::Elem& t) const {
    if (ring_.is_zero(t)) return zero();
    if (ring_.reduce(t).bits == 0) throw DomainError("expected a unit of O_T");
    Elem r;
    r.state = State::Unit;
    r.shift = 0;
    r.prec = capacity();
    r.c.assign(e_ * f_, 0);
    std::copy(t.begin(), t.end(), r.c.begin());
    return r;
}

Elem BaseContext::pi_power(int k) const {
    Elem r = one();
    r.shift = k;
    r.prec = k + capacity();
    return r;
}

Elem BaseContext::add(const Elem& a, const Elem& b) const {
    if (a.state == State::Zero) return b;
    if (b.state == State::Zero) return a;
    const int prec = std::min(a.prec, b.prec);
    if (a.state == State::Approx || b.state == State::Approx) {
        const Elem& other = a.state == State::Approx ? b : a;
        if (other.state == State::Unit && other.shift < prec) {
            Elem r = other;
            r.prec = prec;
            return r;
        }
        return approx_zero(prec);
    }
    const Elem& lo = a.shift <= b.shift ? a : b;
    const Elem& hi = a.shift <= b.shift ? b : a;
    const Vec raw = raw_add(lo.c, raw_mul_pi(hi.c, hi.shift - lo.shift));
    return normalize(raw, lo.shift, prec);
}

Elem BaseContext::neg(const Elem& a) const {
    if (a.state != State::Unit) return a;
    Elem r = a;
    for (auto& x : r.c) x = (0 - x) & mask_;
    return r;
}

Elem BaseContext::mul(const Elem& a, const Elem& b) const {
    if (a.state == State::Zero || b.state == State::Zero) return zero();
    if (a.state == State::Approx && b.state == State::Approx) return approx_zero(a.prec + b.prec);
    if (a.state == State::Approx) return approx_zero(a.prec + b.shift);
    if (b.state == State::Approx) return approx_zero(b.prec + a.shift);
    Elem r;
    r.state = State::Unit;
    r.shift = a.shift + b.shift;
    r.prec = std::min(a.prec + b.shift, b.prec + a.shift);
    r.c = raw_mul(a.c, b.c);
    return r;
}

Elem BaseContext::inv(const Elem& a) const {
    if (a.state == State::Zero) throw DomainError("inverse of zero");
    if (a.state == State::Approx) throw PrecisionExhausted("inverse of an element indistinguishable from zero");
    Elem r;
    r.state = State::Unit;
    r.shift = -a.shift;
    r.prec = a.prec - 2 * a.shift;
    r.c = raw_inverse(a.c);
    return r;
}

ValInfo BaseContext::valinfo(const Elem& a) const {
    switch (a.state) {
        case State::Zero:
            return {kInfinity, true};
        case State::Approx:
            return {a.prec, false};
        case State::Unit:
            break;
    }
    return {a.shift, true};
}

ResidueElem BaseContext::leading_residue(const Elem& a) const {
    if (a.state == State::Zero) throw DomainError("leading residue of zero");
    if (a.state == State::Approx) throw PrecisionExhausted("leading term below precision");
    return ring_.reduce(UnramifiedRing::Elem(a.c.begin(), a.c.begin() + f_));
}

}  // namespace quatram

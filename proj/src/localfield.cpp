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

#include "quatram/localfield.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <span>

#include "base_context.hpp"
#include "quatram/errors.hpp"
#include "quatram/squares.hpp"

namespace quatram {

namespace {

using BE = detail::BaseElem;
using Coords = std::vector<BE>;
using Span = std::span<const BE>;
using State = BE::State;

bool all_zero(Span s) {
    return std::all_of(s.begin(), s.end(), [](const BE& x) { return x.state == State::Zero; });
}

Coords add_coords(const BaseContext& ctx, Span a, Span b) {
    Coords r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = ctx.add(a[i], b[i]);
    return r;
}

Coords neg_coords(const BaseContext& ctx, Span a) {
    Coords r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = ctx.neg(a[i]);
    return r;
}

// (a0 + a1 x)(b0 + b1 x) = (a0 b0 + kappa a1 b1) + (a0 b1 + a1 b0) x, recursively.
Coords mul_coords(const TowerField& f, Span a, Span b, int d) {
    const BaseContext& ctx = f.context();
    if (d == 0) return {ctx.mul(a[0], b[0])};
    const std::size_t h = std::size_t{1} << (d - 1);
    const Span a0 = a.first(h), a1 = a.subspan(h), b0 = b.first(h), b1 = b.subspan(h);
    const bool za1 = all_zero(a1), zb1 = all_zero(b1);
    Coords r(2 * h);
    Coords lo = mul_coords(f, a0, b0, d - 1);
    if (!za1 && !zb1) {
        const Coords p11 = mul_coords(f, a1, b1, d - 1);
        lo = add_coords(ctx, lo, mul_coords(f, f.kappa_coords(d), p11, d - 1));
    }
    Coords hi(h);
    if (!zb1) hi = mul_coords(f, a0, b1, d - 1);
    if (!za1) hi = add_coords(ctx, hi, mul_coords(f, a1, b0, d - 1));
    std::move(lo.begin(), lo.end(), r.begin());
    std::move(hi.begin(), hi.end(), r.begin() + h);
    return r;
}

int sat_add(int a, int b) { return (a == kInfinity || b == kInfinity) ? kInfinity : a + b; }
int sat_twice(int a) { return a == kInfinity ? kInfinity : 2 * a; }

int precision_coords(const TowerField& f, Span a, int d) {
    if (d == 0) return a[0].state == State::Zero ? kInfinity : a[0].prec;
    const std::size_t h = std::size_t{1} << (d - 1);
    const int pa = precision_coords(f, a.first(h), d - 1);
    const int pb = precision_coords(f, a.subspan(h), d - 1);
    const int vk = f.kappa_valuation(d);
    return std::min(sat_twice(pa), sat_add(sat_twice(pb), vk));
}

int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

}  // namespace

// ---------------------------------------------------------------------------------------------
// TowerField

int TowerField::e_base() const { return ctx_->e(); }
int TowerField::precision_bits() const { return ctx_->n(); }
const ResidueField& TowerField::residue() const { return ctx_->residue(); }

FieldPtr TowerField::ancestor(int d) const {
    if (d < 0 || d > depth_) throw DomainError("ancestor depth out of range");
    FieldPtr cur = shared_from_this();
    while (cur->depth() > d) cur = cur->parent();
    return cur;
}

bool TowerField::has_ancestor(const TowerField& f) const {
    for (const TowerField* cur = this; cur != nullptr; cur = cur->parent_.get()) {
        if (cur == &f) return true;
    }
    return false;
}

const FieldElem& TowerField::kappa() const {
    if (!kappa_) throw DomainError("the base field has no defining square");
    return *kappa_;
}

FieldElem TowerField::zero() const { return FieldElem(shared_from_this(), Coords(std::size_t{1} << depth_)); }

FieldElem TowerField::one() const {
    Coords c(std::size_t{1} << depth_);
    c[0] = ctx_->one();
    return FieldElem(shared_from_this(), std::move(c));
}

FieldElem TowerField::integer(std::int64_t n) const {
    Coords c(std::size_t{1} << depth_);
    c[0] = ctx_->from_int(n);
    return FieldElem(shared_from_this(), std::move(c));
}

FieldElem TowerField::generator() const {
    Coords c(std::size_t{1} << depth_);
    if (depth_ == 0) {
        c[0] = ctx_->pi_power(1);
    } else {
        c[std::size_t{1} << (depth_ - 1)] = ctx_->one();
    }
    return FieldElem(shared_from_this(), std::move(c));
}

FieldElem TowerField::uniformizer() const { return FieldElem(shared_from_this(), uniformizer_); }
FieldElem TowerField::uniformizer_inverse() const { return FieldElem(shared_from_this(), uniformizer_inv_); }

FieldElem TowerField::teichmuller(ResidueElem a) const {
    Coords c(std::size_t{1} << depth_);
    c[0] = ctx_->from_ring_unit(ctx_->ring().teichmuller(a));
    return FieldElem(shared_from_this(), std::move(c));
}

FieldElem TowerField::residue_lift(ResidueElem a) const {
    Coords c(std::size_t{1} << depth_);
    c[0] = ctx_->from_ring_unit(ctx_->ring().lift(a));
    return FieldElem(shared_from_this(), std::move(c));
}

FieldElem TowerField::embed(const FieldElem& s) const {
    if (s.home().get() == this) return s;
    if (!s.home() || !has_ancestor(*s.home())) throw DomainError("element does not lie in a subfield of this field");
    Coords c = s.coords();
    c.resize(std::size_t{1} << depth_);
    return FieldElem(shared_from_this(), std::move(c));
}

bool TowerField::conjugation_defined(int level) const {
    if (level < 1 || level > depth_) return false;
    const std::size_t bit = std::size_t{1} << (level - 1);
    for (int j = level + 1; j <= depth_; ++j) {
        const Coords& k = kappas_[j - 1];
        for (std::size_t i = 0; i < k.size(); ++i) {
            if ((i & bit) && k[i].state != State::Zero) return false;
        }
    }
    return true;
}

std::string TowerField::describe() const {
    std::ostringstream os;
    if (depth_ == 0) {
        os << "K(f=" << f_abs() << ",e=" << e_abs_ << ",eis=";
        for (std::size_t i = 0; i < ctx_->eis().size(); ++i) os << (i ? ":" : "") << ctx_->eis()[i];
        os << ",N=" << ctx_->n() << ")";
    } else {
        os << parent_->describe() << "(x" << depth_ << ",b=" << break_defect_ << ")";
    }
    return os.str();
}

std::shared_ptr<const void> TowerField::cached(int slot) const {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    if (slot < 0 || static_cast<std::size_t>(slot) >= cache_.size()) return nullptr;
    return cache_[slot];
}

void TowerField::store_cache(int slot, std::shared_ptr<const void> value) const {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    if (static_cast<std::size_t>(slot) >= cache_.size()) cache_.resize(slot + 1);
    cache_[slot] = std::move(value);
}

// ---------------------------------------------------------------------------------------------
// FieldElem

FieldElem::FieldElem(FieldPtr home, std::vector<detail::BaseElem> coords)
    : home_(std::move(home)), coords_(std::move(coords)) {
    if (!home_) throw DomainError("field element without a field");
    if (coords_.size() != (std::size_t{1} << home_->depth())) throw DomainError("coordinate count mismatch");
}

bool FieldElem::is_exact_zero() const { return all_zero(coords_); }

std::pair<FieldElem, FieldElem> FieldElem::split() const {
    if (home_->depth() == 0) throw DomainError("base field elements do not split");
    const std::size_t h = coords_.size() / 2;
    return {FieldElem(home_->parent(), Coords(coords_.begin(), coords_.begin() + h)),
            FieldElem(home_->parent(), Coords(coords_.begin() + h, coords_.end()))};
}

FieldElem FieldElem::operator-() const { return FieldElem(home_, neg_coords(home_->context(), coords_)); }

FieldPtr common_field(const FieldPtr& a, const FieldPtr& b) {
    if (a == b) return a;
    if (a->has_ancestor(*b)) return a;
    if (b->has_ancestor(*a)) return b;
    throw DomainError("elements from unrelated fields");
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    const FieldPtr f = common_field(a.home_, b.home_);
    const FieldElem x = f->embed(a), y = f->embed(b);
    return FieldElem(f, add_coords(f->context(), x.coords_, y.coords_));
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) { return a + (-b); }

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    const FieldPtr f = common_field(a.home_, b.home_);
    const FieldElem x = f->embed(a), y = f->embed(b);
    return FieldElem(f, mul_coords(*f, x.coords_, y.coords_, f->depth()));
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inverse(); }

FieldElem FieldElem::inverse() const {
    if (is_exact_zero()) throw DomainError("inverse of zero");
    if (home_->depth() == 0) return FieldElem(home_, {home_->context().inv(coords_[0])});
    // s^{-1} = conj(s) / N(s).
    const auto [a, b] = split();
    const FieldElem n_inv = norm_step(*this).inverse();
    const FieldElem ra = a * n_inv;
    const FieldElem rb = -(b * n_inv);
    Coords c = ra.coords_;
    c.insert(c.end(), rb.coords_.begin(), rb.coords_.end());
    return FieldElem(home_, std::move(c));
}

FieldElem FieldElem::pow(std::int64_t n) const {
    if (n < 0) return inverse().pow(-n);
    FieldElem r = home_->one();
    FieldElem base = *this;
    while (n > 0) {
        if (n & 1) r = r * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return r;
}

std::string FieldElem::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        const BE& x = coords_[i];
        if (i) os << ", ";
        if (x.state == State::Zero) {
            os << "0";
        } else if (x.state == State::Approx) {
            os << "O(pi^" << x.prec << ")";
        } else {
            os << "pi^" << x.shift << "*(";
            for (std::size_t k = 0; k < x.c.size(); ++k) os << (k ? " " : "") << x.c[k];
            os << ")+O(pi^" << x.prec << ")";
        }
    }
    os << "]";
    return os.str();
}

// ---------------------------------------------------------------------------------------------
// Free functions

ValInfo valuation_info(const FieldElem& s) {
    if (s.is_exact_zero()) return {kInfinity, true};
    if (s.home()->depth() == 0) return s.home()->context().valinfo(s.coords()[0]);
    return valuation_info(norm_step(s));
}

int valuation(const FieldElem& s) {
    const ValInfo vi = valuation_info(s);
    if (!vi.exact) {
        throw PrecisionExhausted("valuation at or above the precision cap (" + std::to_string(vi.value) + ")");
    }
    return vi.value;
}

int precision(const FieldElem& s) { return precision_coords(*s.home(), s.coords(), s.home()->depth()); }

ResidueElem leading_residue(const FieldElem& s) {
    const FieldPtr& f = s.home();
    if (s.is_exact_zero()) throw DomainError("leading residue of zero");
    if (f->depth() == 0) return f->context().leading_residue(s.coords()[0]);
    const int v = valuation(s);
    const ResidueField& res = f->residue();
    // lr(N(s)) = res(s / pi_E^v)^2 * lr(N(pi_E))^v
    ResidueElem r = leading_residue(norm_step(s));
    const ResidueElem np = f->norm_uniformizer_residue();
    r = v >= 0 ? res.div(r, res.pow(np, v)) : res.mul(r, res.pow(np, -static_cast<std::int64_t>(v)));
    return res.sqrt(r);
}

ResidueElem residue_of(const FieldElem& unit) {
    if (valuation(unit) != 0) throw DomainError("residue of a non-unit");
    return leading_residue(unit);
}

FieldElem norm_step(const FieldElem& s) {
    const FieldPtr& f = s.home();
    if (f->depth() == 0) throw DomainError("norm_step on the base field");
    const auto [a, b] = s.split();
    if (b.is_exact_zero()) return a * a;
    return a * a - f->kappa() * (b * b);
}

FieldElem norm_to(const FieldElem& s, const FieldPtr& target) {
    if (!s.home()->has_ancestor(*target)) throw DomainError("norm target is not a subfield");
    FieldElem r = s;
    while (r.home() != target) r = norm_step(r);
    return r;
}

FieldElem galois_conjugate(const FieldElem& s, int level) {
    const FieldPtr& f = s.home();
    if (!f->conjugation_defined(level)) {
        throw DomainError("x_" + std::to_string(level) + " -> -x_" + std::to_string(level) +
                          " is not an automorphism of this field");
    }
    const std::size_t bit = std::size_t{1} << (level - 1);
    Coords c = s.coords();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i & bit) c[i] = f->context().neg(c[i]);
    }
    return FieldElem(f, std::move(c));
}

FieldElem teichmuller(ResidueElem a, const FieldPtr& f) { return f->teichmuller(a); }

int default_precision_bits(int e) { return std::min(64, 4 * e + 16); }
int minimum_precision_bits(int e) { return 2 * e + 8; }

FieldPtr make_base_field(const ResidueField& residue, int e, const std::vector<std::int64_t>& eis,
                         int precision_bits) {
    if (e < 1) throw NotEisenstein("ramification index must be positive");
    if (eis.size() != static_cast<std::size_t>(e) + 1) throw NotEisenstein("expected e + 1 coefficients");
    if (eis[e] != 1) throw NotEisenstein("polynomial must be monic");
    if (((eis[0] % 4) + 4) % 4 != 2) throw NotEisenstein("constant term must be 2 times a unit");
    for (int i = 1; i < e; ++i) {
        if (eis[i] % 2 != 0) throw NotEisenstein("middle coefficients must be even");
    }
    const int n = precision_bits <= 0 ? default_precision_bits(e) : precision_bits;
    if (n > 64) throw DomainError("precision above 64 bits is not supported");
    if (n < minimum_precision_bits(e)) {
        throw PrecisionTooSmall("precision " + std::to_string(n) + " below the minimum " +
                                std::to_string(minimum_precision_bits(e)));
    }
    auto f = std::shared_ptr<TowerField>(new TowerField());
    f->kind_ = e == 1 ? FieldKind::Unramified : FieldKind::EisensteinStep;
    f->e_abs_ = e;
    f->ctx_ = std::make_shared<const BaseContext>(residue, e, eis, n);
    f->uniformizer_ = {f->ctx_->pi_power(1)};
    f->uniformizer_inv_ = {f->ctx_->pi_power(-1)};
    return f;
}

FieldPtr make_base_field(int f, int e, const std::vector<std::int64_t>& eis, int precision_bits) {
    return make_base_field(ResidueField(f), e, eis, precision_bits);
}

FieldPtr adjoin_sqrt(const FieldPtr& f, const FieldElem& kappa_in) {
    const FieldElem kappa = f->embed(kappa_in);
    if (kappa.is_exact_zero()) throw DomainError("cannot adjoin the square root of zero");
    const int v = valuation(kappa);

    auto e = std::shared_ptr<TowerField>(new TowerField());
    e->kind_ = FieldKind::QuadraticStep;
    e->depth_ = f->depth() + 1;
    e->e_abs_ = 2 * f->e_abs();
    e->ctx_ = f->ctx_;
    e->parent_ = f;
    e->kappas_ = f->kappas_;
    e->kappas_.push_back(kappa.coords());
    e->kappa_vals_ = f->kappa_vals_;
    e->kappa_vals_.push_back(v);
    e->kappa_ = std::make_shared<const FieldElem>(kappa);

    const FieldElem x = e->generator();
    FieldElem pi_e;
    if (v % 2 != 0) {
        e->kappa_defect_ = 0;
        pi_e = x * f->uniformizer().pow(-floor_div(v - 1, 2));
    } else {
        const DefectResult d = defect(kappa);
        if (d.value == kInfinity) throw IsSquare("kappa is a square in " + f->describe());
        if (d.value == 2 * f->e_abs()) throw UnramifiedSubextension("kappa generates the unramified quadratic extension");
        e->kappa_defect_ = d.value;
        // v_E(k x - 1) = v_F(1 - k^2 kappa) = d, odd.
        pi_e = (d.witness_k * x - 1) * f->uniformizer().pow(-(d.value - 1) / 2);
    }
    e->break_defect_ = 2 * f->e_abs() - e->kappa_defect_;
    if (valuation(pi_e) != 1) throw InternalInconsistency("constructed uniformizer does not have valuation 1");
    e->uniformizer_ = pi_e.coords();
    e->norm_pi_residue_ = leading_residue(norm_step(pi_e));
    e->uniformizer_inv_ = pi_e.inverse().coords();
    e->break_galois_ = valuation(galois_conjugate(pi_e, e->depth_) - pi_e) - 1;
    return e;
}

// ---------------------------------------------------------------------------------------------
// Presets

const std::vector<FieldSpec>& builtin_presets() {
    static const std::vector<FieldSpec> presets = {
        {"Q2", 1, 1, {-2, 1}, 0},
        {"Q2i", 1, 2, {2, 2, 1}, 0},
        {"Q2sqrt2", 1, 2, {-2, 0, 1}, 0},
        {"T4", 2, 1, {-2, 1}, 0},
        {"e2f2i", 2, 2, {2, 2, 1}, 0},
        {"e2f2sqrt2", 2, 2, {-2, 0, 1}, 0},
        {"f3e2", 3, 2, {-2, 0, 1}, 0},
        {"f3e2i", 3, 2, {2, 2, 1}, 0},
        {"Q2zeta8", 1, 4, {2, 4, 6, 4, 1}, 0},
    };
    return presets;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(cur);
    return out;
}

std::int64_t parse_int(const std::string& s) {
    std::int64_t v = 0;
    const char* begin = s.data();
    const char* end = s.data() + s.size();
    while (begin < end && *begin == ' ') ++begin;
    const auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end) throw DomainError("not an integer: '" + s + "'");
    return v;
}

}  // namespace

FieldSpec parse_field_spec(const std::string& text) {
    for (const FieldSpec& p : builtin_presets()) {
        if (p.name == text) return p;
    }
    const std::vector<std::string> parts = split(text, ',');
    if (parts.size() != 3 && parts.size() != 4) {
        throw DomainError("field must be a preset name or 'f,e,c0:...:ce[,N]': " + text);
    }
    FieldSpec spec;
    spec.name = text;
    spec.f = static_cast<int>(parse_int(parts[0]));
    spec.e = static_cast<int>(parse_int(parts[1]));
    for (const std::string& c : split(parts[2], ':')) spec.eis.push_back(parse_int(c));
    if (parts.size() == 4) spec.precision_bits = static_cast<int>(parse_int(parts[3]));
    return spec;
}

FieldPtr make_field(const FieldSpec& spec) { return make_base_field(spec.f, spec.e, spec.eis, spec.precision_bits); }

}  // namespace quatram

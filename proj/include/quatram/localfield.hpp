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

#ifndef QUATRAM_LOCALFIELD_HPP
#define QUATRAM_LOCALFIELD_HPP

#include <cstdint>
#include <limits>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "quatram/residue.hpp"

namespace quatram {

inline constexpr int kInfinity = std::numeric_limits<int>::max();

/// O_T / 2^N, with T/Q_2 unramified of degree f. Elements are coefficient vectors over 1, t, ..., t^(f-1),
/// where t is a root of the 0/1 lift of the residue modulus. N <= 64 so a coefficient fits a machine word.
class UnramifiedRing {
   public:
    using Elem = std::vector<std::uint64_t>;

    UnramifiedRing(ResidueField residue, int precision_bits);

    const ResidueField& residue() const { return residue_; }
    int degree() const { return residue_.degree(); }
    int precision_bits() const { return n_; }

    Elem zero() const { return Elem(degree(), 0); }
    Elem one() const { return from_int(1); }
    Elem from_int(std::int64_t n) const;
    /// Lift with coefficients in {0, 1}.
    Elem lift(ResidueElem a) const;
    ResidueElem reduce(const Elem& a) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    /// Exponent of 2 dividing every coefficient; N for zero.
    int two_adic_valuation(const Elem& a) const;
    /// a / 2^k, assuming 2^k divides a. The top k bits become unknown and are filled with 0.
    Elem halve(const Elem& a, int k) const;
    /// Multiplication by 2^k.
    Elem twice(const Elem& a, int k) const;
    bool is_zero(const Elem& a) const { return two_adic_valuation(a) >= n_; }

    /// The (q-1)-th root of unity reducing to a (a != 0), exact mod 2^N.
    Elem teichmuller(ResidueElem a) const;

   private:
    Elem compute_teichmuller(ResidueElem a) const;

    ResidueField residue_;
    int n_;
    std::uint64_t mask_;
    std::vector<Elem> teich_;  // indexed by residue code, filled for small f
};

class BaseContext;

namespace detail {

/// Element of the Eisenstein base K, as pi^shift * (sum_i c_i pi^i) with a unit in brackets.
/// prec is absolute: the value is known modulo pi^prec. Approx means "zero to precision prec".
struct BaseElem {
    enum class State : std::uint8_t { Zero, Approx, Unit };
    State state = State::Zero;
    int shift = 0;
    int prec = kInfinity;
    std::vector<std::uint64_t> c;  // c[i * f + k]: coefficient of t^k pi^i
};

}  // namespace detail

struct ValInfo {
    int value;   // exact valuation, or a lower bound when !exact
    bool exact;
};

enum class FieldKind { Unramified, EisensteinStep, QuadraticStep };

class TowerField;
class FieldElem;
using FieldPtr = std::shared_ptr<const TowerField>;

/// A node in Q_2 ⊂ T ⊂ K ⊂ K(x_1) ⊂ K(x_1, x_2) ⊂ ... where each step adjoins x_j with x_j^2 = kappa_j.
/// Elements at depth d are vectors of 2^d base coordinates; bit j-1 of the index marks the factor x_j.
class TowerField : public std::enable_shared_from_this<TowerField> {
   public:
    TowerField(const TowerField&) = delete;
    TowerField& operator=(const TowerField&) = delete;

    FieldKind kind() const { return kind_; }
    int depth() const { return depth_; }
    int e_abs() const { return e_abs_; }
    int f_abs() const { return residue().degree(); }
    /// Ramification index of the base field K over T.
    int e_base() const;
    int precision_bits() const;
    const ResidueField& residue() const;
    const BaseContext& context() const { return *ctx_; }
    const std::shared_ptr<const BaseContext>& context_ptr() const { return ctx_; }

    /// Null for the base field.
    const FieldPtr& parent() const { return parent_; }
    /// The ancestor at the given depth (itself when d == depth()).
    FieldPtr ancestor(int d) const;
    bool has_ancestor(const TowerField& f) const;

    /// Defining element of the top step, living in the parent. Throws DomainError on the base field.
    const FieldElem& kappa() const;
    /// Coordinates of kappa_j (j = 1..depth) in the depth j-1 field.
    const std::vector<detail::BaseElem>& kappa_coords(int level) const { return kappas_.at(level - 1); }
    /// v(kappa_level) in the units of the depth level-1 field.
    int kappa_valuation(int level) const { return kappa_vals_.at(level - 1); }
    /// Quadratic defect of kappa in the parent, and the break of the top step computed
    /// as 2 e_parent - defect and as v(sigma pi - pi) - 1.
    int kappa_defect() const { return kappa_defect_; }
    int break_from_defect() const { return break_defect_; }
    int break_from_galois() const { return break_galois_; }

    FieldElem zero() const;
    FieldElem one() const;
    FieldElem integer(std::int64_t n) const;
    /// x for a quadratic step; the Eisenstein root pi for the base field.
    FieldElem generator() const;
    FieldElem uniformizer() const;
    FieldElem uniformizer_inverse() const;
    FieldElem teichmuller(ResidueElem a) const;
    /// Image of the 0/1 lift of a residue, an element of O_T.
    FieldElem residue_lift(ResidueElem a) const;
    /// Image of an element from an ancestor field.
    FieldElem embed(const FieldElem& s) const;

    /// Leading residue of N(pi_E) in the parent; used to read residues through norms.
    ResidueElem norm_uniformizer_residue() const { return norm_pi_residue_; }

    /// Whether x_level -> -x_level extends to an automorphism of this field (fixing the other x_j).
    bool conjugation_defined(int level) const;

    std::string describe() const;

    /// Per-field cache slot for derived, immutable data (the Hilbert pairing).
    std::shared_ptr<const void> cached(int slot) const;
    void store_cache(int slot, std::shared_ptr<const void> value) const;

   private:
    friend FieldPtr make_base_field(const ResidueField& residue, int e, const std::vector<std::int64_t>& eis,
                                    int precision_bits);
    friend FieldPtr adjoin_sqrt(const FieldPtr& f, const FieldElem& kappa);
    TowerField() = default;

    FieldKind kind_ = FieldKind::Unramified;
    int depth_ = 0;
    int e_abs_ = 1;
    std::shared_ptr<const BaseContext> ctx_;
    FieldPtr parent_;
    std::vector<std::vector<detail::BaseElem>> kappas_;
    std::vector<int> kappa_vals_;  // v(kappa_j) in depth j-1 units
    std::shared_ptr<const FieldElem> kappa_;
    std::vector<detail::BaseElem> uniformizer_;
    std::vector<detail::BaseElem> uniformizer_inv_;
    ResidueElem norm_pi_residue_{1};
    int kappa_defect_ = 0;
    int break_defect_ = 0;
    int break_galois_ = 0;

    mutable std::mutex cache_mutex_;
    mutable std::vector<std::shared_ptr<const void>> cache_;
};

/// Element of a TowerField. A default-constructed FieldElem has no home and is only assignable.
class FieldElem {
   public:
    FieldElem() = default;
    FieldElem(FieldPtr home, std::vector<detail::BaseElem> coords);

    const FieldPtr& home() const { return home_; }
    const std::vector<detail::BaseElem>& coords() const { return coords_; }
    bool is_exact_zero() const;
    /// The pair (a, b) with s = a + b x over the parent field.
    std::pair<FieldElem, FieldElem> split() const;

    FieldElem operator-() const;
    friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
    FieldElem& operator+=(const FieldElem& b) { return *this = *this + b; }
    FieldElem& operator-=(const FieldElem& b) { return *this = *this - b; }
    FieldElem& operator*=(const FieldElem& b) { return *this = *this * b; }
    FieldElem& operator/=(const FieldElem& b) { return *this = *this / b; }

    friend FieldElem operator+(const FieldElem& a, std::int64_t n) { return a + a.home_->integer(n); }
    friend FieldElem operator-(const FieldElem& a, std::int64_t n) { return a - a.home_->integer(n); }
    friend FieldElem operator*(const FieldElem& a, std::int64_t n) { return a * a.home_->integer(n); }

    /// Throws DomainError for zero and PrecisionExhausted when the valuation is not resolved.
    FieldElem inverse() const;
    FieldElem pow(std::int64_t n) const;

    std::string to_string() const;

   private:
    FieldPtr home_;
    std::vector<detail::BaseElem> coords_;
};

/// Builds K = T(pi) for the Eisenstein polynomial with integer coefficients eis[0..e] (eis[e] = 1).
/// precision_bits <= 0 selects the default 4e + 16 (capped at 64).
FieldPtr make_base_field(const ResidueField& residue, int e, const std::vector<std::int64_t>& eis,
                         int precision_bits = 0);
FieldPtr make_base_field(int f, int e, const std::vector<std::int64_t>& eis, int precision_bits = 0);
int default_precision_bits(int e);
int minimum_precision_bits(int e);

/// E = F(sqrt(kappa)) for a kappa generating a ramified quadratic extension.
/// Throws IsSquare or UnramifiedSubextension otherwise.
FieldPtr adjoin_sqrt(const FieldPtr& f, const FieldElem& kappa);

ValInfo valuation_info(const FieldElem& s);
/// Exact valuation in home units; kInfinity for exact zero. Throws PrecisionExhausted when unresolved.
int valuation(const FieldElem& s);
/// Absolute precision in home units (kInfinity for exact zero).
int precision(const FieldElem& s);
/// Residue of pi_E^(-v(s)) s for the field's fixed uniformizer.
ResidueElem leading_residue(const FieldElem& s);
/// Residue of a unit.
ResidueElem residue_of(const FieldElem& unit);

/// N_{E/F}(s) = a^2 - kappa b^2 for s = a + b x.
FieldElem norm_step(const FieldElem& s);
/// Norm down to an ancestor field.
FieldElem norm_to(const FieldElem& s, const FieldPtr& target);
/// Applies x_level -> -x_level. Throws DomainError when that map is not an automorphism of the home field.
FieldElem galois_conjugate(const FieldElem& s, int level);
FieldElem teichmuller(ResidueElem a, const FieldPtr& f);

/// The larger-depth home of a and b, which must lie in one tower.
FieldPtr common_field(const FieldPtr& a, const FieldPtr& b);

/// Named field configurations and the inline syntax "f,e,c0:c1:...:ce[,N]".
struct FieldSpec {
    std::string name;
    int f = 1;
    int e = 1;
    std::vector<std::int64_t> eis;
    int precision_bits = 0;
};

const std::vector<FieldSpec>& builtin_presets();
/// A preset name or an inline specification. Throws DomainError if unparsable.
FieldSpec parse_field_spec(const std::string& text);
FieldPtr make_field(const FieldSpec& spec);

}  // namespace quatram

#endif  // QUATRAM_LOCALFIELD_HPP

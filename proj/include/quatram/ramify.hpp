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

#ifndef QUATRAM_RAMIFY_HPP
#define QUATRAM_RAMIFY_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "quatram/localfield.hpp"
#include "quatram/squares.hpp"

namespace quatram {

enum class GroupShape { C2, C2xC2, C4, Q8 };

/// Lower breaks with multiplicity: one entry per halving of the group order.
struct BreakData {
    std::vector<int> lower_breaks;
    GroupShape shape = GroupShape::C2;
};

/// Exact rational with positive denominator.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d = 1);
    bool is_integer() const { return den == 1; }
    std::string to_string() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend bool operator==(const Rational&, const Rational&) = default;
};

/// v_E((sigma - 1) pi_E) - 1 for the involution of the top step of E.
int break_of_step(const FieldPtr& e);
/// min(2x + b, x + 2 e_F).
int g_function(int e_f, int b, int x);

/// Herbrand transform of the lower breaks: phi(l) for each entry of lower_breaks.
std::vector<Rational> upper_breaks(const BreakData& bd);
bool upper_breaks_integral(const BreakData& bd);

/// K(sqrt u, sqrt v) built as L = K(x), M = L(y) with x^2 = u, y^2 = v.
/// sigma fixes x (conjugation at level 2), gamma fixes y (conjugation at level 1).
struct BiquadraticBreaks {
    FieldElem u, v;
    FieldPtr l;
    FieldPtr m;
    std::array<int, 3> subfield_breaks{};  // K(sqrt u), K(sqrt v), K(sqrt uv)
    bool one_break = false;
    int b1 = 0;
    int b2 = 0;
    /// 0, 1, 2 for the subfield K(sqrt u), K(sqrt v), K(sqrt uv) fixed by G_{b2}; -1 with one break.
    int fixed_by_top = -1;
    std::array<int, 3> galois_breaks{};  // i_s for s = sigma, gamma, sigma gamma
    BreakData data;
};

/// Throws NotFullyRamified when a quadratic subextension is unramified, DomainError when not biquadratic,
/// InternalInconsistency when the defect and Galois computations disagree.
BiquadraticBreaks biquadratic_breaks(const FieldElem& u, const FieldElem& v);

/// def_E(kappa) against g_{F,b}(def_F(kappa)) for kappa in F and a quadratic step E/F with odd break.
struct DefectGrowth {
    int def_f = 0;
    int def_e = 0;
    int predicted = 0;
    bool equality_expected = false;
    bool holds = false;
};
DefectGrowth defect_growth(const FieldPtr& e, const FieldElem& kappa);

struct RefinedInvariants {
    int b = 0;
    int r = 0;
    ResidueElem omega_class;
    int m = kInfinity;
    bool is_cube = false;
};

/// Normal form of a one-break pair: x^2 = u k^2 = 1 + beta and y^2 in the class of v.
OneBreakNormalForm one_break_normal_form(const FieldElem& u, const FieldElem& v);
/// r = min(4e - b, b + 4m, 2b) from the normal form.
RefinedInvariants refined_invariants(const OneBreakNormalForm& nf);

struct RefinedDirect {
    int r = 0;
    /// Residue a of the maximizing direction gamma sigma^[a]; meaningless when sigma_direction.
    ResidueElem omega;
    bool sigma_direction = false;
};

/// max over s in {sigma} and {gamma sigma^[a]} (a Teichmueller or 0) of v_M((s - 1) rho) - v_M(rho).
RefinedDirect refined_break_direct(const FieldPtr& m, const FieldElem& rho);
/// Builds M from the normal form and uses rho = 2 / (Y - 1) with y Y = 1 + (omega + mu)(x - 1).
RefinedDirect refined_break_direct(const OneBreakNormalForm& nf);

}  // namespace quatram

#endif  // QUATRAM_RAMIFY_HPP

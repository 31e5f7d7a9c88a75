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

#include "quatram/ramify.hpp"

#include <algorithm>
#include <numeric>

#include "quatram/errors.hpp"

namespace quatram {

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) throw DomainError("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

std::string Rational::to_string() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

Rational operator+(const Rational& a, const Rational& b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
Rational operator*(const Rational& a, const Rational& b) { return {a.num * b.num, a.den * b.den}; }

int break_of_step(const FieldPtr& e) {
    if (e->depth() == 0) throw DomainError("break_of_step needs a quadratic step");
    return e->break_from_galois();
}

int g_function(int e_f, int b, int x) {
    if (x < 0) throw DomainError("g_function needs x >= 0");
    return std::min(2 * x + b, x + 2 * e_f);
}

std::vector<Rational> upper_breaks(const BreakData& bd) {
    std::vector<int> lower = bd.lower_breaks;
    std::sort(lower.begin(), lower.end());
    std::vector<Rational> out;
    Rational phi;
    int prev = 0;
    std::int64_t index = 1;  // [G_0 : G_t] on the current segment
    for (int l : lower) {
        phi = phi + Rational(l - prev, index);
        out.push_back(phi);
        prev = l;
        index *= 2;
    }
    return out;
}

bool upper_breaks_integral(const BreakData& bd) {
    const auto ub = upper_breaks(bd);
    return std::all_of(ub.begin(), ub.end(), [](const Rational& r) { return r.is_integer(); });
}

namespace {

int subfield_break(const FieldPtr& k, const FieldElem& w) {
    try {
        return break_from_defect(k, w);
    } catch (const UnramifiedSubextension&) {
        throw NotFullyRamified("a quadratic subextension is unramified");
    } catch (const IsSquare&) {
        throw DomainError("K(sqrt u, sqrt v) is not biquadratic");
    }
}

int galois_break(const FieldElem& pi, const FieldElem& image) { return valuation(image - pi) - 1; }

}  // namespace

BiquadraticBreaks biquadratic_breaks(const FieldElem& u_in, const FieldElem& v_in) {
    const FieldPtr k = common_field(u_in.home(), v_in.home());
    BiquadraticBreaks out;
    out.u = k->embed(u_in);
    out.v = k->embed(v_in);
    out.subfield_breaks = {subfield_break(k, out.u), subfield_break(k, out.v), subfield_break(k, out.u * out.v)};
    out.l = adjoin_sqrt(k, out.u);
    out.m = adjoin_sqrt(out.l, out.v);

    const FieldElem pi = out.m->uniformizer();
    const FieldElem sigma_pi = galois_conjugate(pi, 2);
    out.galois_breaks = {galois_break(pi, sigma_pi), galois_break(pi, galois_conjugate(pi, 1)),
                         galois_break(pi, galois_conjugate(sigma_pi, 1))};

    std::array<int, 3> t = out.subfield_breaks;
    std::sort(t.begin(), t.end());
    std::array<int, 3> expected{};
    if (t[0] == t[2]) {
        out.one_break = true;
        out.b1 = out.b2 = t[0];
        expected = {t[0], t[0], t[0]};
    } else {
        if (t[1] != t[2]) throw InternalInconsistency("two larger subfield breaks differ");
        out.b1 = t[0];
        out.b2 = 2 * t[1] - t[0];
        for (int i = 0; i < 3; ++i) {
            if (out.subfield_breaks[i] == t[0]) out.fixed_by_top = i;
        }
        // sigma fixes sqrt u, gamma fixes sqrt v, sigma gamma fixes sqrt uv.
        for (int i = 0; i < 3; ++i) expected[i] = i == out.fixed_by_top ? out.b2 : out.b1;
    }
    if (out.galois_breaks != expected) {
        throw InternalInconsistency("Galois breaks in M disagree with the subfield defects");
    }
    out.data.lower_breaks = {out.b1, out.b2};
    out.data.shape = GroupShape::C2xC2;
    return out;
}

DefectGrowth defect_growth(const FieldPtr& e, const FieldElem& kappa) {
    if (e->depth() == 0) throw DomainError("defect_growth needs a quadratic step");
    const FieldPtr f = e->parent();
    const int b = e->break_from_defect();
    if (b % 2 == 0) throw DomainError("defect growth is stated for odd breaks");
    DefectGrowth out;
    out.def_f = defect(f->embed(kappa)).value;
    out.def_e = defect(e->embed(kappa)).value;
    if (out.def_f == kInfinity || out.def_e == kInfinity) throw DomainError("kappa must stay a non-square in E");
    out.predicted = g_function(f->e_abs(), b, out.def_f);
    out.equality_expected = out.def_f != 2 * f->e_abs() - b;
    out.holds = out.equality_expected ? out.def_e == out.predicted : out.def_e >= out.predicted;
    return out;
}

OneBreakNormalForm one_break_normal_form(const FieldElem& u_in, const FieldElem& v_in) {
    const FieldPtr k = common_field(u_in.home(), v_in.home());
    const FieldElem u = k->embed(u_in);
    const FieldElem v = k->embed(v_in);
    const int e = k->e_abs();
    const DefectResult du = defect(u);
    const DefectResult dv = defect(v);
    if (du.value == kInfinity || du.value % 2 == 0 || du.value != dv.value) {
        throw HypothesisViolation("not a one-break pair of one-unit classes");
    }
    OneBreakNormalForm nf;
    nf.b = 2 * e - du.value;
    nf.beta = du.witness_k * du.witness_k * u - 1;
    const FieldElem kappa = dv.witness_k * dv.witness_k * v;
    const Lemma22Part part = lemma22_decompose(kappa, nf.beta);
    const ResidueElem w = residue_of(part.mu);
    if (w.bits <= 1) throw HypothesisViolation("omega is trivial: the pair has two breaks");
    nf.omega = w;
    nf.lambda = part.lambda;
    nf.mu = part.mu - k->teichmuller(w);
    const ValInfo vm = valuation_info(nf.mu);
    if (vm.exact && 2 * vm.value < nf.b) {
        nf.m = vm.value;
    } else if (!vm.exact && 2 * vm.value < nf.b) {
        throw PrecisionExhausted("valuation of mu undecided");
    } else {
        nf.m = kInfinity;
        nf.mu = k->zero();
    }
    return nf;
}

RefinedInvariants refined_invariants(const OneBreakNormalForm& nf) {
    const FieldPtr& k = nf.beta.home();
    const int e = k->e_abs();
    const ResidueField& res = k->residue();
    if (nf.b <= 0 || nf.b >= 2 * e || nf.b % 2 == 0) throw HypothesisViolation("b must be odd with 0 < b < 2e");
    if (valuation(nf.beta) != 2 * e - nf.b) throw HypothesisViolation("v(beta) must equal 2e - b");
    if (nf.m != kInfinity && (nf.m <= 0 || 2 * nf.m >= nf.b)) throw HypothesisViolation("m must lie in (0, b/2)");
    RefinedInvariants out;
    out.b = nf.b;
    out.m = nf.m;
    out.r = std::min(4 * e - nf.b, 2 * nf.b);
    if (nf.m != kInfinity) out.r = std::min(out.r, nf.b + 4 * nf.m);
    out.omega_class = res.omega_class_canonical(nf.omega);
    out.is_cube = res.is_cube_root_of_unity(nf.omega);
    return out;
}

RefinedDirect refined_break_direct(const FieldPtr& m, const FieldElem& rho_in) {
    if (m->depth() != 2 || !m->conjugation_defined(1) || !m->conjugation_defined(2)) {
        throw DomainError("refined_break_direct needs M = K(x, y) with x^2, y^2 in K");
    }
    const FieldElem rho = m->embed(rho_in);
    const int vr = valuation(rho);
    const FieldElem sigma_rho = galois_conjugate(rho, 2);
    const FieldElem gamma_rho = galois_conjugate(rho, 1);
    const FieldElem gamma_sigma_rho = galois_conjugate(sigma_rho, 1);
    RefinedDirect out;
    out.r = valuation(sigma_rho - rho) - vr;
    out.sigma_direction = true;
    const FieldElem base = gamma_rho - rho;
    const FieldElem slope = gamma_sigma_rho - gamma_rho;
    for (ResidueElem a : m->residue().elements()) {
        const FieldElem dir = a.bits == 0 ? base : base + m->teichmuller(a) * slope;
        const int val = valuation(dir) - vr;
        if (val > out.r) {
            out.r = val;
            out.omega = a;
            out.sigma_direction = false;
        }
    }
    return out;
}

RefinedDirect refined_break_direct(const OneBreakNormalForm& nf) {
    const FieldPtr& k = nf.beta.home();
    const FieldPtr l = adjoin_sqrt(k, nf.beta + 1);
    const FieldElem a = k->teichmuller(nf.omega) + nf.mu;
    FieldElem y2 = a * a * nf.beta + 1;
    if (nf.lambda.bits != 0) y2 = y2 * (k->teichmuller(nf.lambda) * 4 + 1);
    const FieldPtr m = adjoin_sqrt(l, y2);
    const FieldElem x = m->embed(l->generator());
    const FieldElem y = m->generator();
    const FieldElem big_y = (a * (x - 1) + 1) / y;
    return refined_break_direct(m, m->integer(2) / (big_y - 1));
}

}  // namespace quatram

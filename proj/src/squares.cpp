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

#include "quatram/squares.hpp"

#include "quatram/errors.hpp"

namespace quatram {

namespace {

// Valuation of w - 1 for a unit w, with anything at or beyond 2e + 1 reported as "square level".
int one_unit_level(const FieldElem& w, int e) {
    const ValInfo vi = valuation_info(w - 1);
    if (vi.exact) return vi.value;
    if (vi.value >= 2 * e + 1) return kInfinity;
    throw PrecisionExhausted("one-unit level undecided below 2e + 1");
}

// Residue of (w - 1) / 4 when v(w - 1) = 2e.
ResidueElem residue_over_four(const FieldElem& d) {
    const ResidueField& res = d.home()->residue();
    return res.div(leading_residue(d), leading_residue(d.home()->integer(4)));
}

}  // namespace

DefectResult defect(const FieldElem& u) {
    const FieldPtr& f = u.home();
    if (u.is_exact_zero()) throw DomainError("defect of zero");
    const int e = f->e_abs();
    const ResidueField& res = f->residue();
    const int v = valuation(u);
    if (v % 2 != 0) {
        const int half = v >= 0 ? (v - 1) / 2 : -((-v + 1) / 2);
        return {0, f->uniformizer().pow(-half)};
    }
    FieldElem k = f->uniformizer().pow(-v / 2);
    FieldElem w = u * k * k;
    const FieldElem t = f->teichmuller(res.sqrt(residue_of(w)));
    k = k / t;
    w = w / (t * t);
    for (int guard = 0; guard <= 4 * e + 4; ++guard) {
        const int j = one_unit_level(w, e);
        if (j > 2 * e) return {kInfinity, k};
        if (j % 2 != 0) return {j, k};
        const FieldElem d = w - 1;
        FieldElem s;
        if (j < 2 * e) {
            s = f->teichmuller(res.sqrt(leading_residue(d))) * f->uniformizer().pow(j / 2) + 1;
        } else {
            const auto z = res.solve_artin_schreier(residue_over_four(d));
            if (!z) return {2 * e, k};
            if (z->bits == 0) throw InternalInconsistency("zero Artin-Schreier root at level 2e");
            s = f->teichmuller(*z) * 2 + 1;
        }
        k = k / s;
        w = w / (s * s);
    }
    throw InternalInconsistency("defect reduction did not terminate");
}

bool is_square(const FieldElem& u) { return defect(u).value == kInfinity; }

int break_from_defect(const FieldPtr& f, const FieldElem& kappa_in) {
    const FieldElem kappa = f->embed(kappa_in);
    const int e = f->e_abs();
    const DefectResult d = defect(kappa);
    if (d.value == kInfinity) throw IsSquare("kappa is a square");
    if (d.value == 2 * e) throw UnramifiedSubextension("kappa generates the unramified quadratic extension");
    return 2 * e - d.value;
}

bool SquareClassVector::is_zero() const {
    for (auto b : bits) {
        if (b) return false;
    }
    return true;
}

std::string SquareClassVector::to_string() const {
    std::string s;
    s.reserve(bits.size());
    for (auto b : bits) s.push_back(b ? '1' : '0');
    return s;
}

SquareClassVector SquareClassVector::from_string(const std::string& s) {
    SquareClassVector v;
    for (char c : s) {
        if (c != '0' && c != '1') throw DomainError("square class bit string must be over {0,1}");
        v.bits.push_back(c == '1');
    }
    return v;
}

SquareClassVector operator^(const SquareClassVector& a, const SquareClassVector& b) {
    if (a.bits.size() != b.bits.size()) throw DomainError("square class dimension mismatch");
    SquareClassVector r = a;
    for (std::size_t i = 0; i < r.bits.size(); ++i) r.bits[i] ^= b.bits[i];
    return r;
}

int square_class_dimension(const TowerField& f) { return f.e_abs() * f.f_abs() + 2; }

int one_unit_coordinate(const TowerField& f, int n, int k) { return 1 + (n - 1) * f.f_abs() + k; }

std::vector<FieldElem> square_class_basis(const FieldPtr& f) {
    const ResidueField& res = f->residue();
    std::vector<FieldElem> basis;
    basis.push_back(f->uniformizer());
    for (int n = 1; n <= f->e_abs(); ++n) {
        const FieldElem p = f->uniformizer().pow(2 * n - 1);
        for (int k = 0; k < f->f_abs(); ++k) basis.push_back(f->residue_lift(res.basis(k)) * p + 1);
    }
    basis.push_back(f->teichmuller(res.canonical_trace_one()) * 4 + 1);
    return basis;
}

FieldElem square_class_representative(const FieldPtr& f, const SquareClassVector& v) {
    const std::vector<FieldElem> basis = square_class_basis(f);
    if (v.bits.size() != basis.size()) throw DomainError("square class dimension mismatch");
    FieldElem r = f->one();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (v.bits[i]) r = r * basis[i];
    }
    return r;
}

SquareClassVector square_class_vector(const FieldElem& u) {
    const FieldPtr& f = u.home();
    if (u.is_exact_zero()) throw DomainError("square class of zero");
    const int e = f->e_abs();
    const ResidueField& res = f->residue();
    SquareClassVector out;
    out.bits.assign(square_class_dimension(*f), 0);
    const int v = valuation(u);
    out.bits[0] = static_cast<std::uint8_t>(v & 1);
    FieldElem w = u * f->uniformizer_inverse().pow(v);
    const FieldElem t = f->teichmuller(res.sqrt(residue_of(w)));
    w = w / (t * t);
    const ResidueElem lambda = res.canonical_trace_one();
    for (int guard = 0; guard <= 4 * e + 4; ++guard) {
        const int j = one_unit_level(w, e);
        if (j > 2 * e) return out;
        const FieldElem d = w - 1;
        if (j % 2 != 0) {
            const ResidueElem a = leading_residue(d);
            const FieldElem p = f->uniformizer().pow(j);
            FieldElem divisor = f->one();
            for (int k = 0; k < f->f_abs(); ++k) {
                if (((a.bits >> k) & 1u) == 0) continue;
                out.bits[one_unit_coordinate(*f, (j + 1) / 2, k)] = 1;
                divisor = divisor * (f->residue_lift(res.basis(k)) * p + 1);
            }
            w = w / divisor;
        } else if (j < 2 * e) {
            const FieldElem s = f->teichmuller(res.sqrt(leading_residue(d))) * f->uniformizer().pow(j / 2) + 1;
            w = w / (s * s);
        } else {
            const ResidueElem a = residue_over_four(d);
            if (res.trace(a) == 1) {
                out.bits.back() ^= 1;
                w = w / (f->teichmuller(lambda) * 4 + 1);
            } else {
                const ResidueElem z = *res.solve_artin_schreier(a);
                const FieldElem s = f->teichmuller(z) * 2 + 1;
                w = w / (s * s);
            }
        }
    }
    throw InternalInconsistency("square class reduction did not terminate");
}

Lemma22Part lemma22_decompose(const FieldElem& kappa_in, const FieldElem& beta_in) {
    const FieldPtr f = common_field(kappa_in.home(), beta_in.home());
    const FieldElem kappa = f->embed(kappa_in);
    const FieldElem beta = f->embed(beta_in);
    const int e = f->e_abs();
    const ResidueField& res = f->residue();
    const int vb = valuation(beta);
    const int b = 2 * e - vb;
    if (b <= 0 || b >= 2 * e || b % 2 == 0) throw HypothesisViolation("v(beta) must be 2e - b with b odd, 0 < b < 2e");
    if (valuation(kappa - 1) <= 0) throw HypothesisViolation("kappa must be a one-unit");
    const int dk = defect(kappa).value;
    if (dk == kInfinity || dk >= 2 * e || dk < vb) {
        throw HypothesisViolation("def(kappa) must lie in [2e - b, 2e)");
    }
    const ResidueElem lb = leading_residue(beta);
    FieldElem mu = f->zero();
    bool lambda_set = false;
    const FieldElem lambda_unit = f->teichmuller(res.canonical_trace_one()) * 4 + 1;
    for (int restart = 0; restart <= 2 * e + 2; ++restart) {
        FieldElem w = kappa / (mu * mu * beta + 1);
        if (lambda_set) w = w / lambda_unit;
        bool advanced = false;
        for (int guard = 0; guard <= 4 * e + 4 && !advanced; ++guard) {
            const int j = one_unit_level(w, e);
            if (j > 2 * e) {
                Lemma22Part out{mu, lambda_set ? res.canonical_trace_one() : res.zero()};
                const FieldElem rebuilt = (mu * mu * beta + 1) * (lambda_set ? lambda_unit : f->one());
                if (!square_class_vector(kappa / rebuilt).is_zero()) {
                    throw InternalInconsistency("one-unit decomposition does not reproduce the square class");
                }
                return out;
            }
            const FieldElem d = w - 1;
            if (j % 2 != 0) {
                if (j < vb) throw InternalInconsistency("odd level below v(beta) in decomposition");
                const ResidueElem c = res.sqrt(res.div(leading_residue(d), lb));
                mu = mu + f->teichmuller(c) * f->uniformizer().pow((j - vb) / 2);
                advanced = true;
            } else if (j < 2 * e) {
                const FieldElem s = f->teichmuller(res.sqrt(leading_residue(d))) * f->uniformizer().pow(j / 2) + 1;
                w = w / (s * s);
            } else {
                const ResidueElem a = residue_over_four(d);
                if (res.trace(a) == 1) {
                    if (lambda_set) throw InternalInconsistency("unramified class toggled twice");
                    lambda_set = true;
                    advanced = true;
                } else {
                    const FieldElem s = f->teichmuller(*res.solve_artin_schreier(a)) * 2 + 1;
                    w = w / (s * s);
                }
            }
        }
        if (!advanced) break;
    }
    throw InternalInconsistency("one-unit decomposition did not terminate");
}

}  // namespace quatram

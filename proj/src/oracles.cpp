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

#include "quatram/oracles.hpp"

#include <algorithm>

#include "quatram/errors.hpp"
#include "quatram/symbols.hpp"

namespace quatram {

std::vector<FieldElem> digit_representatives(const FieldPtr& f, int digits) {
    const FieldElem pi = f->uniformizer();
    std::vector<FieldElem> out{f->zero()};
    FieldElem p = f->one();
    const auto residues = f->residue().elements();
    for (int i = 0; i < digits; ++i) {
        std::vector<FieldElem> next;
        next.reserve(out.size() * residues.size());
        for (const FieldElem& s : out) {
            for (ResidueElem a : residues) next.push_back(a.bits == 0 ? s : s + f->residue_lift(a) * p);
        }
        out = std::move(next);
        p = p * pi;
    }
    return out;
}

int brute_force_defect(const FieldElem& u_in, int digits) {
    const FieldPtr& f = u_in.home();
    const int e = f->e_abs();
    const int vu = valuation(u_in);
    if (vu % 2 != 0) return 0;
    const FieldElem u = u_in * f->uniformizer_inverse().pow(vu);
    int best = 0;
    for (const FieldElem& k : digit_representatives(f, digits > 0 ? digits : e + 1)) {
        const ValInfo unit = valuation_info(k);
        if (!unit.exact || unit.value != 0) continue;
        const ValInfo vi = valuation_info(k * k * u - 1);
        const int level = vi.value;
        if (level > 2 * e) return kInfinity;
        best = std::max(best, level);
    }
    return best;
}

int brute_force_digits(const TowerField& f) { return 2 * f.e_abs() + 2; }

bool brute_force_is_norm(const FieldElem& a_in, const FieldElem& c_in, int digits) {
    const FieldPtr f = common_field(a_in.home(), c_in.home());
    const FieldElem a = f->embed(a_in);
    const FieldElem c = f->embed(c_in);
    if (brute_force_defect(a) == kInfinity) return true;
    const FieldElem c_inv = c.inverse();
    const auto reps = digit_representatives(f, digits);
    for (const FieldElem& x : reps) {
        const bool x_unit = valuation_info(x).value == 0;
        for (const FieldElem& y : reps) {
            if (!x_unit && valuation_info(y).value != 0) continue;
            const FieldElem w = (x * x - a * y * y) * c_inv;
            const ValInfo vi = valuation_info(w);
            // w must be known to 2e + 1 digits beyond its leading term.
            if (!vi.exact || vi.value + 2 * f->e_abs() + 1 > precision(w)) continue;
            if (brute_force_defect(w) == kInfinity) return true;
        }
    }
    return false;
}

bool random_norm_span(const FieldElem& a, std::mt19937_64& rng, int max_draws, std::vector<SquareClassVector>& basis) {
    const FieldPtr& f = a.home();
    const int dim = square_class_dimension(*f);
    BinarySpan span(dim);
    basis.clear();
    const auto reps = digit_representatives(f, f->e_abs() + 2);
    std::uniform_int_distribution<std::size_t> pick(0, reps.size() - 1);
    std::uniform_int_distribution<int> shift(0, 3);
    const FieldElem pi = f->uniformizer();
    for (int draw = 0; draw < max_draws && static_cast<int>(span.rank()) < dim - 1; ++draw) {
        const FieldElem x = reps[pick(rng)] * pi.pow(shift(rng));
        const FieldElem y = reps[pick(rng)] * pi.pow(shift(rng));
        const FieldElem n = x * x - a * y * y;
        if (n.is_exact_zero()) continue;
        const ValInfo vi = valuation_info(n);
        if (!vi.exact || vi.value + 2 * f->e_abs() + 1 > precision(n)) continue;
        const SquareClassVector s = square_class_vector(n);
        if (span.insert(s.bits)) basis.push_back(s);
    }
    return static_cast<int>(span.rank()) == dim - 1;
}

int span_symbol_bit(const std::vector<SquareClassVector>& basis, const SquareClassVector& c) {
    if (basis.empty()) throw DomainError("empty norm span");
    BinarySpan span(basis.front().dimension());
    for (const auto& b : basis) span.insert(b.bits);
    return span.contains(c.bits) ? 0 : 1;
}

}  // namespace quatram

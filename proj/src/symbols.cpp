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

#include "quatram/symbols.hpp"

#include <algorithm>

#include "quatram/errors.hpp"

namespace quatram {

namespace {

constexpr int kPairingSlot = 0;

}  // namespace

void BinarySpan::reduce(std::vector<std::uint8_t>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (!v[pivots_[r]]) continue;
        for (std::size_t i = 0; i < dim_; ++i) v[i] ^= rows_[r][i];
    }
}

bool BinarySpan::insert(std::vector<std::uint8_t> v) {
    if (v.size() != dim_) throw DomainError("vector dimension mismatch");
    reduce(v);
    const auto it = std::find(v.begin(), v.end(), std::uint8_t{1});
    if (it == v.end()) return false;
    const std::size_t p = static_cast<std::size_t>(it - v.begin());
    for (auto& row : rows_) {
        if (!row[p]) continue;
        for (std::size_t i = 0; i < dim_; ++i) row[i] ^= v[i];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

bool BinarySpan::contains(std::vector<std::uint8_t> v) const {
    if (v.size() != dim_) throw DomainError("vector dimension mismatch");
    reduce(v);
    return std::find(v.begin(), v.end(), std::uint8_t{1}) == v.end();
}

int HilbertPairing::bit(const SquareClassVector& u, const SquareClassVector& v) const {
    int acc = 0;
    for (std::size_t i = 0; i < gram.size(); ++i) {
        if (!u.bits[i]) continue;
        for (std::size_t j = 0; j < gram.size(); ++j) acc ^= u.bits[i] & v.bits[j] & gram[i][j];
    }
    return acc;
}

NormSubspace norm_subgroup(const FieldPtr& e) {
    if (e->depth() == 0) throw DomainError("norm_subgroup needs a quadratic step");
    const FieldPtr f = e->parent();
    const ResidueField& res = e->residue();
    const int dim = square_class_dimension(*f);
    NormSubspace out;
    out.extension = e;
    out.span = BinarySpan(dim);
    auto add = [&](const FieldElem& g) {
        const SquareClassVector v = square_class_vector(norm_step(g));
        if (out.span.insert(v.bits)) out.basis.push_back(v);
    };
    add(e->uniformizer());
    for (int k = 0; k < res.degree(); ++k) add(e->teichmuller(res.basis(k)));
    for (int j = 1; j <= 2 * e->e_abs() + 2; ++j) {
        const FieldElem p = e->uniformizer().pow(j);
        for (int k = 0; k < res.degree(); ++k) add(e->residue_lift(res.basis(k)) * p + 1);
    }
    if (out.span.rank() + 1 != static_cast<std::size_t>(dim)) {
        throw InternalInconsistency("norm subgroup does not have index 2 (rank " + std::to_string(out.span.rank()) +
                                    " in dimension " + std::to_string(dim) + ")");
    }
    return out;
}

std::shared_ptr<const HilbertPairing> build_pairing(const FieldPtr& f) {
    if (auto hit = f->cached(kPairingSlot)) return std::static_pointer_cast<const HilbertPairing>(hit);
    const std::vector<FieldElem> basis = square_class_basis(f);
    const std::size_t d = basis.size();
    std::vector<SquareClassVector> unit_vectors(d);
    for (std::size_t j = 0; j < d; ++j) {
        unit_vectors[j].bits.assign(d, 0);
        unit_vectors[j].bits[j] = 1;
    }
    auto pairing = std::make_shared<HilbertPairing>();
    pairing->field = f;
    pairing->gram.assign(d, std::vector<std::uint8_t>(d, 0));
    for (std::size_t i = 0; i + 1 < d; ++i) {
        const NormSubspace ns = norm_subgroup(adjoin_sqrt(f, basis[i]));
        for (std::size_t j = 0; j < d; ++j) pairing->gram[i][j] = ns.contains(unit_vectors[j]) ? 0 : 1;
    }
    // F(sqrt(1 + 4 lambda)) is unramified: its norms are the even-valuation classes.
    pairing->gram[d - 1][0] = 1;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (pairing->gram[i][j] != pairing->gram[j][i]) {
                throw InternalInconsistency("Hilbert pairing Gram matrix is not symmetric");
            }
        }
    }
    BinarySpan rows(d);
    for (const auto& row : pairing->gram) rows.insert(row);
    if (rows.rank() != d) throw InternalInconsistency("Hilbert pairing is degenerate");
    f->store_cache(kPairingSlot, pairing);
    return pairing;
}

int hilbert_symbol(const FieldElem& u_in, const FieldElem& v_in) {
    const FieldPtr f = common_field(u_in.home(), v_in.home());
    const auto pairing = build_pairing(f);
    return pairing->symbol(square_class_vector(f->embed(u_in)), square_class_vector(f->embed(v_in)));
}

int default_norm_cap(const TowerField& f) { return 4 * f.e_abs() + 4; }

FieldElem solve_norm_equation(const FieldPtr& e, const FieldElem& c_in, int cap) {
    if (e->depth() == 0) throw DomainError("solve_norm_equation needs a quadratic step");
    const FieldPtr f = e->parent();
    const FieldElem c = f->embed(c_in);
    if (c.is_exact_zero()) throw DomainError("zero is not a norm");
    if (cap <= 0) cap = default_norm_cap(*f);
    const ResidueField& res = f->residue();
    const int b = e->break_from_defect();

    auto not_a_norm = [&]() -> FieldElem {
        if (hilbert_symbol(e->kappa(), c) == 1) {
            throw InternalInconsistency("norm search failed for an element the Hilbert symbol accepts");
        }
        throw NotANorm("element is not a norm from " + e->describe());
    };

    FieldElem eta = e->uniformizer().pow(valuation(c));
    FieldElem r = c / norm_step(eta);
    const FieldElem t = e->teichmuller(res.sqrt(residue_of(r)));
    eta = eta * t;
    r = r / norm_step(t);

    auto level = [&](const FieldElem& x) {
        const ValInfo vi = valuation_info(x - 1);
        if (vi.exact) return std::min(vi.value, cap);
        if (vi.value >= cap) return cap;
        throw PrecisionExhausted("norm residual undecided below the cap");
    };

    for (int j = level(r); j < cap; j = level(r)) {
        // Filtration level of E whose norms first reach level j of F.
        const int primary = j <= b ? j : 2 * j - b;
        std::vector<int> levels{primary};
        bool found = false;
        for (int pass = 0; pass < 2 && !found; ++pass) {
            if (pass == 1) {
                levels.clear();
                for (int l = 1; l <= 2 * j + b; ++l) {
                    if (l != primary) levels.push_back(l);
                }
            }
            for (int l : levels) {
                const FieldElem p = e->uniformizer().pow(l);
                for (ResidueElem a : res.nonzero_elements()) {
                    const FieldElem eps = e->teichmuller(a) * p + 1;
                    const FieldElem next = r / norm_step(eps);
                    if (level(next) > j) {
                        eta = eta * eps;
                        r = next;
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
        }
        if (!found) return not_a_norm();
    }
    return eta;
}

}  // namespace quatram

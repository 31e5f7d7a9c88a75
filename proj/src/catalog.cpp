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

#include "quatram/catalog.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

#include "quatram/errors.hpp"
#include "quatram/squares.hpp"
#include "quatram/symbols.hpp"

namespace quatram {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

bool one_break_tag(ClassTag tag) { return tag != ClassTag::Two; }

}  // namespace

std::vector<int> s1_values(int e) {
    std::vector<int> out;
    for (int n = 1; n < 2 * e; n += 2) out.push_back(n);
    return out;
}

int s2_bound(ClassTag tag, int e, int s1) {
    return one_break_tag(tag) ? std::min(2 * s1, 4 * e - s1) : 4 * e - s1;
}

std::vector<int> s2_values(ClassTag tag, int e, int s1) {
    const int m = s2_bound(tag, e, s1);
    std::vector<int> out;
    for (int n = s1 + 1; n <= m; ++n) {
        if (n == m || mod(n - s1, 4) == 0) out.push_back(n);
    }
    return out;
}

int lower_bound_s3(ClassTag tag, int /*e*/, int s1, int s2) {
    switch (tag) {
        case ClassTag::OneStar:
            return 7 * s1 - 2 * s2;
        case ClassTag::One:
            return 5 * s1;
        case ClassTag::Two:
            break;
    }
    return 2 * s1 + 3 * s2;
}

int upper_bound_s3(ClassTag tag, int e, int s1, int s2) {
    return tag == ClassTag::Two ? 8 * e - 2 * s1 - s2 : 8 * e - 3 * s1;
}

bool is_unstable(ClassTag tag, int e, int s1, int s2) {
    return lower_bound_s3(tag, e, s1, s2) < upper_bound_s3(tag, e, s1, s2);
}

int stable_s3(ClassTag tag, int e, int s1, int s2) {
    switch (tag) {
        case ClassTag::One:
            return 4 * e + s1;
        case ClassTag::OneStar:
            return 4 * e + 2 * s1 - s2;
        case ClassTag::Two:
            break;
    }
    return 4 * e + s2;
}

std::vector<int> s3_values(ClassTag tag, int e, int s1, int s2) {
    if (!is_unstable(tag, e, s1, s2)) return {stable_s3(tag, e, s1, s2)};
    const int lo = lower_bound_s3(tag, e, s1, s2);
    const int hi = upper_bound_s3(tag, e, s1, s2);
    const int si = tag == ClassTag::Two ? s2 : s1;
    std::vector<int> out;
    for (int n = lo; n <= hi; ++n) {
        if (n == lo || n == hi || mod(n - si, 8) == 0) out.push_back(n);
    }
    return out;
}

bool member(ClassTag tag, int e, int s1, int s2, int s3) {
    if (e < 1 || s1 <= 0 || s1 >= 2 * e || s1 % 2 == 0) return false;
    const auto s2s = s2_values(tag, e, s1);
    if (std::find(s2s.begin(), s2s.end(), s2) == s2s.end()) return false;
    const auto s3s = s3_values(tag, e, s1, s2);
    return std::find(s3s.begin(), s3s.end(), s3) != s3s.end();
}

std::vector<CatalogTriple> enumerate(ClassTag tag, int e) {
    std::vector<CatalogTriple> out;
    for (int s1 : s1_values(e)) {
        for (int s2 : s2_values(tag, e, s1)) {
            const Stability st = is_unstable(tag, e, s1, s2) ? Stability::Unstable : Stability::Stable;
            for (int s3 : s3_values(tag, e, s1, s2)) out.push_back({tag, e, s1, s2, s3, st});
        }
    }
    return out;
}

std::vector<CatalogTriple> hasse_arf_exceptions(int e) {
    std::vector<CatalogTriple> out;
    for (ClassTag tag : {ClassTag::OneStar, ClassTag::One}) {
        for (const CatalogTriple& t : enumerate(tag, e)) {
            if (t.s3 != 3 * t.s1) continue;
            if (tag != ClassTag::OneStar || t.s2 != s2_bound(tag, e, t.s1)) {
                throw InternalInconsistency("s3 = 3 s1 outside tag 1* with maximal s2");
            }
            out.push_back(t);
        }
    }
    std::sort(out.begin(), out.end(), [](const CatalogTriple& a, const CatalogTriple& b) {
        return std::tie(a.s1, a.s2, a.s3) < std::tie(b.s1, b.s2, b.s3);
    });
    return out;
}

namespace {

struct PairCandidate {
    std::string construction;
    FieldElem u, v;
};

using Sink = std::function<bool(const PairCandidate&)>;

/// Levels ordered with the preferred one first.
std::vector<int> levels_from(int preferred, int top) {
    std::vector<int> out;
    if (preferred >= 1 && preferred <= top) out.push_back(preferred);
    for (int l = 1; l <= top; ++l) {
        if (l != preferred) out.push_back(l);
    }
    return out;
}

/// Calls sink on N(1 + c pi_L^l) for l in levels and Teichmueller c until it returns true.
bool for_each_norm(const FieldPtr& l, const std::vector<int>& levels, const std::function<bool(const FieldElem&)>& sink) {
    const FieldElem pi = l->uniformizer();
    for (int lev : levels) {
        const FieldElem p = pi.pow(lev);
        for (ResidueElem c : l->residue().nonzero_elements()) {
            if (sink(norm_step(l->teichmuller(c) * p + 1))) return true;
        }
    }
    return false;
}

bool two_break_pairs(const FieldPtr& k, const CatalogTriple& t, const Sink& sink) {
    const int e = k->e_abs();
    const FieldElem pi = k->uniformizer();
    const FieldElem u = pi.pow(2 * e - t.s1) + 1;
    const int mid = (t.s1 + t.s2) / 2;
    if (t.s2 + 3 * t.s1 < 4 * e) {
        const FieldElem p = pi.pow(2 * e - mid);
        for (ResidueElem c : k->residue().nonzero_elements()) {
            if (sink({"two-break free pair", u, k->teichmuller(c) * p + 1})) return true;
        }
        return false;
    }
    const FieldPtr l = adjoin_sqrt(k, u);
    if (mid == 2 * e) {
        const FieldElem pl = l->uniformizer();
        for (ResidueElem c : k->residue().nonzero_elements()) {
            if (sink({"two-break norm pair", u, norm_step(l->teichmuller(c) * pl)})) return true;
        }
        return false;
    }
    return for_each_norm(l, levels_from(2 * e - mid, 4 * e), [&](const FieldElem& v) {
        if (defect(v).value != 2 * e - mid) return false;
        return sink({"two-break norm pair", u, v});
    });
}

bool one_break_pairs(const FieldPtr& k, const CatalogTriple& t, const Sink& sink) {
    const int e = k->e_abs();
    const ResidueField& res = k->residue();
    std::vector<ResidueElem> omegas;
    for (ResidueElem a : res.nonzero_elements()) {
        if (a.bits == 1) continue;
        if (res.is_cube_root_of_unity(a) == (t.tag == ClassTag::OneStar)) omegas.push_back(a);
    }
    if (omegas.empty()) {
        throw HypothesisViolation("the residue field of " + k->describe() + " has no omega for tag " +
                                  tag_name(t.tag));
    }
    const FieldElem pi = k->uniformizer();
    const FieldElem beta = pi.pow(2 * e - t.s1);
    const FieldElem u = beta + 1;
    const bool bounded = t.s2 == s2_bound(t.tag, e, t.s1);
    const int m = bounded ? kInfinity : (t.s2 - t.s1) / 4;

    if (t.s1 < e) {
        for (ResidueElem w : omegas) {
            const FieldElem wt = k->teichmuller(w);
            if (bounded) {
                if (sink({"one-break free pair", u, wt * wt * beta + 1})) return true;
                continue;
            }
            const FieldElem p = pi.pow(m);
            for (ResidueElem c : res.nonzero_elements()) {
                const FieldElem a = wt + k->teichmuller(c) * p;
                if (sink({"one-break free pair", u, a * a * beta + 1})) return true;
            }
        }
        return false;
    }

    const FieldPtr l = adjoin_sqrt(k, u);
    const FieldElem lambda = k->teichmuller(res.canonical_trace_one());
    for (ResidueElem w : omegas) {
        const FieldElem wt = k->teichmuller(w);
        std::vector<FieldElem> starts{wt * wt * beta + 1};
        if (2 * t.s1 >= 3 * e) starts.push_back(wt * wt * beta + 1 - lambda * 4 / beta);
        for (const FieldElem& v0 : starts) {
            if (hilbert_symbol(u, v0) != 1) continue;
            if (bounded) {
                if (sink({"one-break norm-corrected pair", u, v0})) return true;
                continue;
            }
            const int target = 2 * e - t.s1 + 2 * m;
            const bool hit = for_each_norm(l, levels_from(target, 4 * e), [&](const FieldElem& n) {
                const ValInfo vi = valuation_info(n - 1);
                if (!vi.exact || vi.value != target) return false;
                return sink({"one-break norm-corrected pair", u, v0 * n});
            });
            if (hit) return true;
        }
    }
    return false;
}

}  // namespace

WitnessRecipe witness(const FieldPtr& k, const CatalogTriple& t) {
    const int e = k->e_abs();
    if (t.e != e || !member(t.tag, e, t.s1, t.s2, t.s3)) {
        throw NotInCatalog("triple is not in R_" + tag_name(t.tag) + "^" + std::to_string(e));
    }
    if (!contains_i(k)) throw RequiresI("witness construction needs sqrt(-1) in K");

    WitnessRecipe out;
    out.target = t;
    const Sink sink = [&](const PairCandidate& c) {
        if (hilbert_symbol(c.u, c.v) != 1) return false;
        QuaternionFrame fr;
        try {
            fr = build_frame(c.u, c.v);
        } catch (const HypothesisViolation&) {
            return false;
        } catch (const NotFullyRamified&) {
            return false;
        } catch (const DomainError&) {
            return false;
        }
        if (fr.breaks.one_break != one_break_tag(t.tag)) return false;
        if (fr.refined) {
            const ClassTag tag = fr.refined->is_cube ? ClassTag::OneStar : ClassTag::One;
            if (tag != t.tag || fr.refined->b != t.s1 || fr.refined->r != t.s2) return false;
        } else if (fr.breaks.b1 != t.s1 || fr.breaks.b2 != t.s2) {
            return false;
        }
        try {
            out.k = tune_k(fr, t.s3);
        } catch (const TargetUnreachable&) {
            return false;
        }
        out.construction = c.construction;
        out.u = c.u;
        out.v = c.v;
        if (fr.refined) {
            out.omega = fr.refined->omega_class;
            out.m = fr.refined->m;
        }
        return true;
    };
    const bool found = t.tag == ClassTag::Two ? two_break_pairs(k, t, sink) : one_break_pairs(k, t, sink);
    if (!found) throw TargetUnreachable("no constructed pair realizes the triple");

    out.u_class = square_class_vector(out.u);
    out.v_class = square_class_vector(out.v);
    const QuaternionFrame canonical = build_frame(square_class_representative(k, out.u_class),
                                                  square_class_representative(k, out.v_class));
    out.k_class = square_class_vector(tune_k(canonical, t.s3));
    return out;
}

QuaternionData execute(const WitnessRecipe& w) { return build_quaternion(w.u, w.v, w.k); }

QuaternionData replay(const FieldPtr& k, const SquareClassVector& u, const SquareClassVector& v,
                      const SquareClassVector& kk) {
    const FieldElem ur = square_class_representative(k, u);
    const FieldElem vr = square_class_representative(k, v);
    if (hilbert_symbol(ur, vr) != 1 || hilbert_symbol(ur * vr, k->integer(-1)) != 1) {
        throw NotANorm("replayed pair is not normalized");
    }
    return build_quaternion(build_frame(ur, vr), square_class_representative(k, kk));
}

}  // namespace quatram

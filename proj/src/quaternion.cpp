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

#include "quatram/quaternion.hpp"

#include <algorithm>
#include <cstdint>

#include "quatram/errors.hpp"
#include "quatram/squares.hpp"
#include "quatram/symbols.hpp"

namespace quatram {

std::string tag_name(ClassTag tag) {
    switch (tag) {
        case ClassTag::One:
            return "1";
        case ClassTag::OneStar:
            return "1*";
        case ClassTag::Two:
            return "2";
    }
    return "?";
}

ClassTag parse_tag(const std::string& text) {
    if (text == "1") return ClassTag::One;
    if (text == "1*" || text == "1s" || text == "1star") return ClassTag::OneStar;
    if (text == "2") return ClassTag::Two;
    throw DomainError("unknown class tag '" + text + "'");
}

bool contains_i(const FieldPtr& k) { return is_square(k->integer(-1)); }

bool embeddable(const FieldElem& u_in, const FieldElem& v_in) {
    const FieldPtr k = common_field(u_in.home(), v_in.home());
    const FieldElem u = k->embed(u_in);
    const FieldElem v = k->embed(v_in);
    const FieldElem m1 = k->integer(-1);
    const bool witt = hilbert_symbol(-u, -v) == hilbert_symbol(m1, m1);
    const bool product = hilbert_symbol(m1, u) * hilbert_symbol(m1, v) * hilbert_symbol(u, v) == 1;
    if (witt != product) throw InternalInconsistency("Witt condition and product formula disagree");
    return witt;
}

std::pair<FieldElem, FieldElem> normalize_uv(const FieldElem& u_in, const FieldElem& v_in) {
    const FieldPtr k = common_field(u_in.home(), v_in.home());
    const FieldElem u = k->embed(u_in);
    const FieldElem v = k->embed(v_in);
    const FieldElem uv = u * v;
    const FieldElem m1 = k->integer(-1);
    const std::pair<FieldElem, FieldElem> order[] = {{u, v}, {u, uv}, {uv, v}, {v, u}, {uv, u}, {v, uv}};
    for (const auto& [a, b] : order) {
        if (hilbert_symbol(a, b) == 1 && hilbert_symbol(a * b, m1) == 1) return {a, b};
    }
    throw NoValidArrangement("no arrangement of u, v, uv satisfies (u,v) = (uv,-1) = 1");
}

QuaternionFrame build_frame(const FieldElem& u_in, const FieldElem& v_in) {
    QuaternionFrame fr;
    fr.base = common_field(u_in.home(), v_in.home());
    fr.u = fr.base->embed(u_in);
    fr.v = fr.base->embed(v_in);
    fr.breaks = biquadratic_breaks(fr.u, fr.v);
    fr.i_in_base = contains_i(fr.base);

    const FieldPtr& m = fr.breaks.m;
    fr.eta = solve_norm_equation(fr.breaks.l, fr.v);
    const FieldElem x = m->embed(fr.breaks.l->generator());
    const FieldElem y = m->generator();
    fr.alpha_one = x * y * m->embed(fr.eta);
    if (!fr.i_in_base) {
        const FieldPtr p = adjoin_sqrt(fr.base, fr.u * fr.v);
        fr.tau = solve_norm_equation(p, fr.base->integer(-1));
        const auto [a, b] = fr.tau->split();
        fr.alpha_one = fr.alpha_one * (m->embed(a) + m->embed(b) * x * y);
    }
    if (fr.breaks.one_break) {
        fr.refined = refined_invariants(one_break_normal_form(fr.u, fr.v));
    }
    return fr;
}

int alpha_defect(const QuaternionFrame& frame, const FieldElem& k) {
    const FieldPtr& m = frame.breaks.m;
    return defect(m->embed(k) * frame.alpha_one).value;
}

QuaternionData build_quaternion(const QuaternionFrame& frame, const FieldElem& k) {
    if (k.is_exact_zero()) throw DomainError("k must be nonzero");
    QuaternionData q;
    q.frame = frame;
    q.k = frame.base->embed(k);
    const FieldPtr& m = frame.breaks.m;
    q.alpha = m->embed(q.k) * frame.alpha_one;
    try {
        q.n = adjoin_sqrt(m, q.alpha);
    } catch (const UnramifiedSubextension&) {
        throw NotFullyRamified("N/M is unramified for this k");
    }
    q.def_alpha = q.n->kappa_defect();
    q.b3 = q.n->break_from_defect();
    q.b3_galois = q.n->break_from_galois();
    if (q.b3 != q.b3_galois) throw InternalInconsistency("b3 from the defect and from Galois action disagree");
    if (q.b3 <= frame.breaks.b2) throw InternalInconsistency("b3 does not exceed the biquadratic breaks");
    q.breaks.shape = GroupShape::Q8;
    q.breaks.lower_breaks = {frame.breaks.b1, frame.breaks.b2, q.b3};
    q.triple = classify(q);
    return q;
}

QuaternionData build_quaternion(const FieldElem& u, const FieldElem& v, const FieldElem& k) {
    return build_quaternion(build_frame(u, v), k);
}

RamTriple classify(const QuaternionData& q) {
    RamTriple t;
    const QuaternionFrame& fr = q.frame;
    if (fr.breaks.one_break) {
        if (!fr.refined) throw InternalInconsistency("one-break frame without refined invariants");
        t.tag = fr.refined->is_cube ? ClassTag::OneStar : ClassTag::One;
        t.s1 = fr.refined->b;
        t.s2 = fr.refined->r;
    } else {
        t.tag = ClassTag::Two;
        t.s1 = fr.breaks.b1;
        t.s2 = fr.breaks.b2;
    }
    t.s3 = q.b3;
    return t;
}

std::vector<FieldElem> k_candidates(const FieldPtr& k) {
    const int e = k->e_abs();
    const FieldElem pi = k->uniformizer();
    std::vector<FieldElem> units;
    for (int j = 1; j <= 2 * e; ++j) {
        const FieldElem p = pi.pow(j);
        for (ResidueElem a : k->residue().nonzero_elements()) units.push_back(k->teichmuller(a) * p + 1);
    }
    for (ResidueElem a : k->residue().nonzero_elements()) {
        if (a.bits != 1) units.push_back(k->teichmuller(a) + 1);
    }
    std::vector<FieldElem> out{k->one(), pi};
    for (const FieldElem& w : units) {
        out.push_back(w);
        out.push_back(w * pi);
    }
    // N depends on k only through its square class, so the class representatives close the search.
    const int dim = square_class_dimension(*k);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << dim); ++mask) {
        SquareClassVector c;
        c.bits.resize(dim);
        for (int i = 0; i < dim; ++i) c.bits[i] = static_cast<std::uint8_t>((mask >> i) & 1U);
        out.push_back(square_class_representative(k, c));
    }
    return out;
}

FieldElem tune_k(const QuaternionFrame& frame, int target_s3) {
    const int target_def = 8 * frame.base->e_abs() - target_s3;
    for (const FieldElem& k : k_candidates(frame.base)) {
        int d = 0;
        try {
            d = alpha_defect(frame, k);
        } catch (const PrecisionExhausted&) {
            continue;
        }
        if (d != target_def) continue;
        const QuaternionData q = build_quaternion(frame, k);
        if (q.b3 == target_s3) return k;
    }
    throw TargetUnreachable("no candidate k gives b3 = " + std::to_string(target_s3));
}

FieldElem tune_k(const FieldElem& u, const FieldElem& v, int target_s3) {
    return tune_k(build_frame(u, v), target_s3);
}

}  // namespace quatram

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

#include "quatram/harness.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <random>
#include <thread>

#include "quatram/errors.hpp"
#include "quatram/oracles.hpp"
#include "quatram/symbols.hpp"

namespace quatram {

void CheckLog::record(const std::string& family, bool ok, const std::string& detail) {
    CheckTally& t = tallies[family];
    ++t.checked;
    if (!ok) {
        ++t.violations;
        messages.push_back(family + ": " + detail);
    }
}

int CheckLog::violations() const {
    int n = 0;
    for (const auto& [name, t] : tallies) n += t.violations;
    return n;
}

void CheckLog::merge(const CheckLog& other) {
    for (const auto& [name, t] : other.tallies) {
        tallies[name].checked += t.checked;
        tallies[name].violations += t.violations;
    }
    messages.insert(messages.end(), other.messages.begin(), other.messages.end());
}

void check_step(const FieldPtr& e, CheckLog& log) {
    const int bd = e->break_from_defect();
    const int bg = e->break_from_galois();
    log.record("step-break", bd == bg,
               e->describe() + ": 2e - def = " + std::to_string(bd) + ", Galois break " + std::to_string(bg));
}

void check_defect_growth(const FieldPtr& e, const FieldElem& kappa, CheckLog& log) {
    if (e->break_from_defect() % 2 == 0) return;
    DefectGrowth g;
    try {
        g = defect_growth(e, kappa);
    } catch (const DomainError&) {
        return;  // kappa is a square in e
    }
    log.record("defect-growth", g.holds,
               "def_F " + std::to_string(g.def_f) + " -> def_E " + std::to_string(g.def_e) + ", predicted " +
                   std::to_string(g.predicted) + (g.equality_expected ? " (equality)" : " (bound)"));
}

bool is_stable_triple(const RamTriple& t, int e) {
    switch (t.tag) {
        case ClassTag::One:
            return t.s1 > e;
        case ClassTag::Two:
            return t.s1 + t.s2 > 2 * e;
        case ClassTag::OneStar:
            break;
    }
    return !is_unstable(t.tag, e, t.s1, t.s2);
}

bool catalog_applies(const QuaternionData& q) {
    if (q.frame.i_in_base) return true;
    return q.triple.tag != ClassTag::OneStar && is_stable_triple(q.triple, q.frame.base->e_abs());
}

namespace {

std::string triple_text(const RamTriple& t) {
    return tag_name(t.tag) + " (" + std::to_string(t.s1) + "," + std::to_string(t.s2) + "," + std::to_string(t.s3) + ")";
}

bool is_one_unit(const FieldElem& k) {
    const ValInfo vi = valuation_info(k);
    return vi.exact && vi.value == 0 && residue_of(k).bits == 1;
}

}  // namespace

void check_quaternion(const QuaternionData& q, CheckLog& log) {
    const QuaternionFrame& fr = q.frame;
    const FieldPtr& k = fr.base;
    const int e = k->e_abs();
    const RamTriple& t = q.triple;
    const std::string tt = triple_text(t);
    const BiquadraticBreaks& bb = fr.breaks;

    check_step(bb.l, log);
    check_step(bb.m, log);
    check_step(q.n, log);
    log.record("b3-largest", q.b3 > bb.b2, tt);

    check_defect_growth(bb.l, fr.v, log);
    check_defect_growth(bb.l, k->uniformizer(), log);
    check_defect_growth(bb.l, q.k, log);
    check_defect_growth(bb.m, bb.l->uniformizer(), log);
    check_defect_growth(bb.m, bb.l->embed(q.k), log);

    const int b = bb.b1;
    if (bb.one_break) {
        log.record("biquadratic-breaks", b % 2 == 1 && b > 0 && b < 2 * e, tt);
        const RefinedInvariants& ri = *fr.refined;
        const int top = std::min(2 * b, 4 * e - b);
        const bool bounds = ri.r > b && ri.r <= top && (ri.r == top || (ri.r - b) % 4 == 0);
        log.record("refined-bounds", bounds, tt);

        const RefinedDirect rd = refined_break_direct(one_break_normal_form(fr.u, fr.v));
        const bool omega_ok = !rd.sigma_direction && k->residue().omega_class_canonical(rd.omega) == ri.omega_class;
        log.record("refined-direct", rd.r == ri.r && omega_ok,
                   tt + ": direct r = " + std::to_string(rd.r) + ", formula r = " + std::to_string(ri.r));

        const int dpi = defect(bb.m->embed(k->uniformizer())).value;
        log.record("one-break-k-defect", dpi == 3 * b, tt + ": def_M(pi_K) = " + std::to_string(dpi));
        const int dk_m = defect(bb.m->embed(q.k)).value;
        log.record("one-break-k-defect", dk_m >= 3 * b, tt + ": def_M(k) = " + std::to_string(dk_m) + " < 3b");
        if (is_one_unit(q.k)) {
            const int dk = defect(q.k).value;
            if (dk > 0 && dk < 2 * e - b) {
                log.record("one-break-k-defect", dk_m == 3 * b + 4 * dk,
                           tt + ": def_K(k) = " + std::to_string(dk) + ", def_M(k) = " + std::to_string(dk_m));
            } else if (dk >= 2 * e - b) {
                log.record("one-break-k-defect", dk_m >= 8 * e - b, tt + ": def_M(k) = " + std::to_string(dk_m));
            }
        }
        if (b > e && !ri.is_cube) {
            log.record("stable-one-break", q.def_alpha == 4 * e - b,
                       tt + ": def_M(alpha) = " + std::to_string(q.def_alpha));
        }
    } else {
        const int b2 = bb.b2;
        const bool ok = b % 2 == 1 && b > 0 && b < 2 * e && b2 > b && b2 <= 4 * e - b &&
                        (b2 == 4 * e - b || (b2 - b) % 4 == 0);
        log.record("biquadratic-breaks", ok, tt);
        if (b + b2 > 2 * e) {
            log.record("stable-two-break", q.def_alpha == 4 * e - b2, tt + ": def_M(alpha) = " + std::to_string(q.def_alpha));
        } else if (b + b2 < 2 * e && fr.i_in_base) {
            const int lo = b2 + 2 * b;
            const int hi = 8 * e - 3 * b2 - 2 * b;
            const int d = q.def_alpha;
            const bool in = d == lo || d == hi || (d > lo && d < hi && ((d + b2) % 8 + 8) % 8 == 0);
            log.record("unstable-two-break", in, tt + ": def_M(alpha) = " + std::to_string(d));
        }
    }

    if (catalog_applies(q)) {
        log.record("catalog-membership", member(t.tag, e, t.s1, t.s2, t.s3), tt + " not in catalog");
    }
    const bool integral = upper_breaks_integral(q.breaks);
    const bool exceptional = bb.one_break && q.b3 == 3 * b;
    log.record("hasse-arf", integral == !exceptional, tt);
    log.record("upper-integrality-mod4", integral == ((q.b3 - bb.b2) % 4 == 0), tt);
}

namespace {

struct Worker {
    FieldPtr k;
    int dim = 0;

    SquareClassVector draw(std::mt19937_64& rng) const {
        SquareClassVector s;
        s.bits.resize(dim);
        for (auto& bit : s.bits) bit = static_cast<std::uint8_t>(rng() & 1U);
        return s;
    }

    struct Outcome {
        SampleRecord rec;
        CheckLog log;
        int not_embeddable = 0;
        int not_fully_ramified = 0;
        int degenerate = 0;
    };

    Outcome run(std::size_t index, std::uint64_t seed) const {
        Outcome out;
        out.rec.index = index;
        std::mt19937_64 rng(seed);
        constexpr int kMaxAttempts = 400;
        for (int attempt = 1; attempt <= kMaxAttempts; ++attempt) {
            out.rec.attempts = attempt;
            const SquareClassVector cu = draw(rng);
            const SquareClassVector cv = draw(rng);
            const SquareClassVector ck = draw(rng);
            if (cu.is_zero() || cv.is_zero() || cu == cv) {
                ++out.degenerate;
                continue;
            }
            try {
                const FieldElem u = square_class_representative(k, cu);
                const FieldElem v = square_class_representative(k, cv);
                const FieldElem kk = square_class_representative(k, ck);
                if (!embeddable(u, v)) {
                    ++out.not_embeddable;
                    continue;
                }
                const auto [un, vn] = normalize_uv(u, v);
                QuaternionData q;
                try {
                    q = build_quaternion(build_frame(un, vn), kk);
                } catch (const NotFullyRamified&) {
                    ++out.not_fully_ramified;
                    continue;
                } catch (const IsSquare&) {
                    ++out.degenerate;
                    continue;
                }
                out.rec.u = square_class_vector(un);
                out.rec.v = square_class_vector(vn);
                out.rec.k = ck;
                out.rec.triple = q.triple;
                out.rec.stable = is_stable_triple(q.triple, k->e_abs());
                out.rec.upper = upper_breaks(q.breaks);
                out.rec.integral = upper_breaks_integral(q.breaks);
                out.rec.catalog_checked = catalog_applies(q);
                out.rec.in_catalog = member(q.triple.tag, k->e_abs(), q.triple.s1, q.triple.s2, q.triple.s3);
                check_quaternion(q, out.log);
            } catch (const PrecisionExhausted& ex) {
                out.rec.soft_failure = std::string("precision: ") + ex.what() + " [u=" + cu.to_string() +
                                       " v=" + cv.to_string() + " k=" + ck.to_string() + "]";
            } catch (const InternalInconsistency& ex) {
                out.log.record("consistency", false,
                               std::string(ex.what()) + " [u=" + cu.to_string() + " v=" + cv.to_string() + "]");
            }
            for (const std::string& m : out.log.messages) out.rec.violations.push_back(m);
            return out;
        }
        out.rec.soft_failure = "no admissible (u, v, k) within the attempt budget";
        return out;
    }
};

}  // namespace

VerifyReport run_verify(const FieldSpec& spec, int samples, std::uint64_t seed, int threads) {
    VerifyReport rep;
    rep.field = spec.name;
    rep.samples = samples;
    rep.seed = seed;
    Worker w;
    w.k = make_field(spec);
    w.dim = square_class_dimension(*w.k);
    rep.i_in_base = contains_i(w.k);
    build_pairing(w.k);

    std::mt19937_64 master(seed);
    std::vector<std::uint64_t> seeds(static_cast<std::size_t>(std::max(samples, 0)));
    for (auto& s : seeds) s = master();

    std::vector<Worker::Outcome> outcomes(seeds.size());
    if (threads <= 0) threads = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
    threads = std::min<int>(threads, static_cast<int>(std::max<std::size_t>(seeds.size(), 1)));
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < seeds.size(); i = next++) {
                try {
                    outcomes[i] = w.run(i, seeds[i]);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);

    for (auto& o : outcomes) {
        rep.rejected_not_embeddable += o.not_embeddable;
        rep.rejected_not_fully_ramified += o.not_fully_ramified;
        rep.rejected_degenerate += o.degenerate;
        if (!o.rec.soft_failure.empty()) ++rep.soft_failures;
        for (auto& m : o.log.messages) m = "sample " + std::to_string(o.rec.index) + ": " + m;
        rep.log.merge(o.log);
        rep.records.push_back(std::move(o.rec));
    }
    return rep;
}

namespace {

SquareClassVector class_from_mask(std::uint64_t mask, int dim) {
    SquareClassVector c;
    c.bits.resize(dim);
    for (int i = 0; i < dim; ++i) c.bits[i] = static_cast<std::uint8_t>((mask >> i) & 1U);
    return c;
}

SquareClassVector random_class(std::mt19937_64& rng, int dim) { return class_from_mask(rng(), dim); }

void tally(OracleSuite& s, bool agree, const std::string& detail) {
    ++s.cases;
    if (!agree) {
        ++s.disagreements;
        s.details.push_back(detail);
    }
}

std::string value_text(int v) { return v == kInfinity ? "inf" : std::to_string(v); }

}  // namespace

OracleSuite oracle_defect_classes(const FieldSpec& spec, int digits) {
    const FieldPtr k = make_field(spec);
    const int dim = square_class_dimension(*k);
    OracleSuite s;
    s.name = "defect/classes@" + spec.name;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << dim); ++mask) {
        const SquareClassVector c = class_from_mask(mask, dim);
        const FieldElem u = square_class_representative(k, c);
        const int fast = defect(u).value;
        const int slow = brute_force_defect(u, digits);
        tally(s, fast == slow, c.to_string() + ": " + value_text(fast) + " vs " + value_text(slow));
    }
    return s;
}

OracleSuite oracle_defect_random(const FieldSpec& spec, int count, std::uint64_t seed) {
    const FieldPtr k = make_field(spec);
    const int e = k->e_abs();
    const auto reps = digit_representatives(k, 2 * e + 2);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, reps.size() - 1);
    OracleSuite s;
    s.name = "defect/random@" + spec.name;
    while (s.cases < count) {
        const FieldElem u = reps[pick(rng)];
        const ValInfo vi = valuation_info(u);
        if (!vi.exact || vi.value != 0) continue;
        const int fast = defect(u).value;
        const int slow = brute_force_defect(u);
        tally(s, fast == slow, u.to_string() + ": " + value_text(fast) + " vs " + value_text(slow));
    }
    return s;
}

OracleSuite oracle_symbol_table(const FieldSpec& spec) {
    const FieldPtr k = make_field(spec);
    const int dim = square_class_dimension(*k);
    const int digits = brute_force_digits(*k);
    OracleSuite s;
    s.name = "symbol/table@" + spec.name;
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << dim); ++a) {
        for (std::uint64_t c = 0; c < (std::uint64_t{1} << dim); ++c) {
            const SquareClassVector ca = class_from_mask(a, dim);
            const SquareClassVector cc = class_from_mask(c, dim);
            const FieldElem av = square_class_representative(k, ca);
            const FieldElem cv = square_class_representative(k, cc);
            const bool gram = hilbert_symbol(av, cv) == 1;
            const bool slow = brute_force_is_norm(av, cv, digits);
            tally(s, gram == slow, "(" + ca.to_string() + "," + cc.to_string() + ")");
        }
    }
    return s;
}

OracleSuite oracle_symbol_sampled(const FieldSpec& spec, int count, std::uint64_t seed) {
    const FieldPtr k = make_field(spec);
    const int dim = square_class_dimension(*k);
    std::mt19937_64 rng(seed);
    OracleSuite s;
    s.name = "symbol/sampled@" + spec.name;
    std::map<std::string, std::vector<SquareClassVector>> spans;
    while (s.cases < count) {
        const SquareClassVector ca = random_class(rng, dim);
        const SquareClassVector cc = random_class(rng, dim);
        if (ca.is_zero()) continue;
        const FieldElem av = square_class_representative(k, ca);
        const FieldElem cv = square_class_representative(k, cc);
        auto it = spans.find(ca.to_string());
        if (it == spans.end()) {
            std::vector<SquareClassVector> basis;
            if (!random_norm_span(av, rng, 4000, basis)) {
                tally(s, false, ca.to_string() + ": norm span did not reach index 2");
                continue;
            }
            it = spans.emplace(ca.to_string(), std::move(basis)).first;
        }
        const int gram = hilbert_symbol(av, cv) == 1 ? 0 : 1;
        tally(s, gram == span_symbol_bit(it->second, cc), "(" + ca.to_string() + "," + cc.to_string() + ")");
    }
    return s;
}

OracleSuite oracle_refined(const FieldSpec& spec, int count, std::uint64_t seed) {
    const FieldPtr k = make_field(spec);
    const int e = k->e_abs();
    const ResidueField& res = k->residue();
    std::vector<ResidueElem> omegas;
    for (ResidueElem a : res.nonzero_elements()) {
        if (a.bits != 1) omegas.push_back(a);
    }
    OracleSuite s;
    s.name = "refined/normal-forms@" + spec.name;
    if (omegas.empty()) return s;
    const auto units = res.nonzero_elements();
    std::mt19937_64 rng(seed);
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    const FieldElem pi = k->uniformizer();
    while (s.cases < count) {
        OneBreakNormalForm nf;
        nf.b = 2 * uniform(0, e - 1) + 1;
        nf.beta = k->teichmuller(units[uniform(0, static_cast<int>(units.size()) - 1)]) * pi.pow(2 * e - nf.b);
        nf.omega = omegas[uniform(0, static_cast<int>(omegas.size()) - 1)];
        const int top_m = (nf.b - 1) / 2;
        const int m = top_m >= 1 ? uniform(0, top_m) : 0;
        if (m == 0) {
            nf.m = kInfinity;
            nf.mu = k->zero();
        } else {
            nf.m = m;
            nf.mu = k->teichmuller(units[uniform(0, static_cast<int>(units.size()) - 1)]) * pi.pow(m);
        }
        nf.lambda = uniform(0, 1) ? res.canonical_trace_one() : ResidueElem{0};
        const RefinedInvariants ri = refined_invariants(nf);
        const RefinedDirect rd = refined_break_direct(nf);
        const bool omega_ok = !rd.sigma_direction && res.omega_class_canonical(rd.omega) == ri.omega_class;
        tally(s, rd.r == ri.r && omega_ok,
              "b=" + std::to_string(nf.b) + " m=" + value_text(nf.m) + ": direct " + std::to_string(rd.r) +
                  " formula " + std::to_string(ri.r));
    }
    return s;
}

WitnessOutcome run_witness(const FieldSpec& spec, const CatalogTriple& t) {
    const FieldPtr k = make_field(spec);
    WitnessOutcome out;
    out.field = spec.name;
    out.target = t;
    out.recipe = witness(k, t);
    const QuaternionData q = execute(out.recipe);
    out.measured = q.triple;
    out.upper = upper_breaks(q.breaks);
    out.integral = upper_breaks_integral(q.breaks);
    out.replayed = replay(k, out.recipe.u_class, out.recipe.v_class, out.recipe.k_class).triple;
    const RamTriple want{t.tag, t.s1, t.s2, t.s3};
    out.match = out.measured == want && out.replayed == want;
    return out;
}

}  // namespace quatram

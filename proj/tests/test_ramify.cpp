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

#include <gtest/gtest.h>

#include <algorithm>

#include "quatram/errors.hpp"
#include "quatram/harness.hpp"
#include "quatram/quaternion.hpp"
#include "quatram/ramify.hpp"
#include "test_util.hpp"

using namespace quatram;
using quatram::testing::class_from_index;
using quatram::testing::field;
using quatram::testing::random_one_unit;

namespace {

OneBreakNormalForm normal_form(const FieldPtr& k, int b, ResidueElem omega, int m) {
    OneBreakNormalForm nf;
    nf.b = b;
    nf.beta = k->uniformizer().pow(2 * k->e_abs() - b);
    nf.omega = omega;
    nf.m = m;
    nf.mu = m == kInfinity ? k->zero() : k->uniformizer().pow(m);
    nf.lambda = ResidueElem{0};
    return nf;
}

}  // namespace

TEST(GFunction, Branches) {
    EXPECT_EQ(g_function(2, 1, 1), 3);
    EXPECT_EQ(g_function(2, 1, 4), 8);
    for (int e = 1; e <= 4; ++e) {
        for (int b = 1; b < 2 * e; b += 2) {
            const int x = 2 * e - b;
            EXPECT_EQ(g_function(e, b, x), 4 * e - b);
            EXPECT_EQ(2 * x + b, x + 2 * e);
        }
    }
}

TEST(BreakOfStep, Examples) {
    const FieldPtr q2 = field("Q2");
    EXPECT_EQ(break_of_step(adjoin_sqrt(q2, q2->integer(2))), 2);
    EXPECT_EQ(break_of_step(adjoin_sqrt(q2, q2->integer(-1))), 1);
    for (const char* name : {"Q2i", "e2f2i", "f3e2", "Q2zeta8"}) {
        const FieldPtr k = field(name);
        for (int v = 1; v < 2 * k->e_abs(); v += 2) {
            const FieldPtr e = adjoin_sqrt(k, k->one() + k->uniformizer().pow(v));
            EXPECT_EQ(break_of_step(e), 2 * k->e_abs() - v) << name;
            EXPECT_EQ(e->break_from_defect(), e->break_from_galois()) << name;
        }
        const FieldPtr e = adjoin_sqrt(k, k->uniformizer());
        EXPECT_EQ(break_of_step(e), 2 * k->e_abs()) << name;
    }
}

TEST(DefectGrowth, RandomUnits) {
    std::mt19937_64 rng(13);
    const FieldPtr k = field("e2f2i");
    const FieldPtr e = adjoin_sqrt(k, k->one() + k->uniformizer());
    int equalities = 0;
    for (int t = 0; t < 60; ++t) {
        const FieldElem kappa = random_one_unit(k, rng);
        if (is_square(kappa) || is_square(e->embed(kappa))) continue;
        const DefectGrowth g = defect_growth(e, kappa);
        EXPECT_TRUE(g.holds) << "def_F " << g.def_f << " def_E " << g.def_e << " predicted " << g.predicted;
        if (g.equality_expected) ++equalities;
    }
    EXPECT_GT(equalities, 0);
}

TEST(Biquadratic, OneBreakNormalForm) {
    const FieldPtr k = field("e2f2i");
    const ResidueElem t = k->residue().basis(1);
    for (int b : {1, 3}) {
        const FieldElem beta = k->uniformizer().pow(2 * k->e_abs() - b);
        const FieldElem w = k->teichmuller(t);
        const FieldElem u = k->one() + beta;
        const FieldElem v = k->one() + w * w * beta;
        const BiquadraticBreaks bb = biquadratic_breaks(u, v);
        EXPECT_TRUE(bb.one_break);
        EXPECT_EQ(bb.b1, b);
        EXPECT_EQ(bb.b2, b);
        EXPECT_EQ(bb.subfield_breaks, (std::array<int, 3>{b, b, b}));
        EXPECT_EQ(bb.data.lower_breaks, (std::vector<int>{b, b}));
    }
}

TEST(Biquadratic, TwoBreaksOverQ2i) {
    const FieldPtr k = field("Q2i");
    const FieldElem u = k->one() + k->uniformizer().pow(3);
    const FieldElem v = k->one() + k->uniformizer();
    const BiquadraticBreaks bb = biquadratic_breaks(u, v);
    std::array<int, 3> sub = bb.subfield_breaks;
    std::sort(sub.begin(), sub.end());
    EXPECT_EQ(sub, (std::array<int, 3>{1, 3, 3}));
    EXPECT_FALSE(bb.one_break);
    EXPECT_EQ(bb.b1, 1);
    EXPECT_EQ(bb.b2, 5);
    EXPECT_EQ(bb.fixed_by_top, 0);
    std::array<int, 3> galois = bb.galois_breaks;
    std::sort(galois.begin(), galois.end());
    EXPECT_EQ(galois, (std::array<int, 3>{1, 1, 5}));
}

TEST(Biquadratic, Rejections) {
    const FieldPtr k = field("Q2i");
    const FieldElem u = k->one() + k->uniformizer();
    EXPECT_THROW(biquadratic_breaks(u, u * k->integer(9)), DomainError);
    EXPECT_THROW(biquadratic_breaks(u, k->one() + k->integer(4)), NotFullyRamified);
}

// No one-break biquadratic extension when the residue field is F_2.
TEST(Biquadratic, NoOneBreakAtResidueDegreeOne) {
    for (const char* name : {"Q2", "Q2i", "Q2sqrt2"}) {
        const FieldPtr k = field(name);
        const int dim = square_class_dimension(*k);
        int pairs = 0;
        for (unsigned a = 1; a < (1u << dim); ++a) {
            for (unsigned b = a + 1; b < (1u << dim); ++b) {
                const FieldElem u = square_class_representative(k, class_from_index(dim, a));
                const FieldElem v = square_class_representative(k, class_from_index(dim, b));
                try {
                    EXPECT_FALSE(biquadratic_breaks(u, v).one_break) << name << " " << a << " " << b;
                    ++pairs;
                } catch (const NotFullyRamified&) {
                }
            }
        }
        EXPECT_GT(pairs, 0) << name;
    }
}

TEST(UpperBreaks, HerbrandTransform) {
    const BreakData exception{{1, 1, 3}, GroupShape::Q8};
    const std::vector<Rational> up = upper_breaks(exception);
    EXPECT_EQ(up.back(), Rational(3, 2));
    EXPECT_FALSE(upper_breaks_integral(exception));

    // b3 = b mod 4 in the one-break case gives integers.
    for (int b3 : {5, 9, 13}) EXPECT_TRUE(upper_breaks_integral({{1, 1, b3}, GroupShape::Q8}));

    // Orders 8, 4, 2: phi(1) = 1, phi(5) = 1 + 4/2, phi(13) = 3 + 8/4.
    const std::vector<Rational> two = upper_breaks({{1, 5, 13}, GroupShape::Q8});
    EXPECT_EQ(two, (std::vector<Rational>{Rational(1), Rational(3), Rational(5)}));
    EXPECT_EQ(upper_breaks({{3}, GroupShape::C2}), std::vector<Rational>{Rational(3)});
    EXPECT_EQ(Rational(6, 4), Rational(3, 2));
    EXPECT_EQ(Rational(9, 2).to_string(), "9/2");
}

TEST(Refined, FormulaExamples) {
    const FieldPtr k = field("e2f2i");
    const ResidueElem t = k->residue().basis(1);
    for (int b : {1, 3}) {
        const RefinedInvariants ri = refined_invariants(normal_form(k, b, t, kInfinity));
        EXPECT_EQ(ri.r, std::min(4 * 2 - b, 2 * b));
        EXPECT_TRUE(ri.is_cube);
    }

    const FieldPtr k4 = make_field(parse_field_spec("2,4,2:0:0:0:1"));
    const ResidueElem t4 = k4->residue().basis(1);
    const RefinedInvariants ri = refined_invariants(normal_form(k4, 5, t4, 1));
    EXPECT_EQ(ri.r, 9);
    EXPECT_EQ(ri.r % 4, 5 % 4);

    const ResidueElem t4p = k4->residue().add(t4, k4->residue().one());
    const RefinedInvariants swapped = refined_invariants(normal_form(k4, 5, t4p, 1));
    EXPECT_EQ(swapped.r, ri.r);
    EXPECT_EQ(swapped.omega_class, ri.omega_class);

    EXPECT_THROW(refined_invariants(normal_form(k4, 4, t4, kInfinity)), HypothesisViolation);
}

TEST(Refined, DirectAgreesWithFormula) {
    const FieldPtr k = field("f3e2i");
    for (ResidueElem w : k->residue().nonzero_elements()) {
        if (w == k->residue().one()) continue;
        for (int b : {1, 3}) {
            const OneBreakNormalForm nf = normal_form(k, b, w, b == 3 ? 1 : kInfinity);
            const RefinedInvariants ri = refined_invariants(nf);
            const RefinedDirect rd = refined_break_direct(nf);
            EXPECT_EQ(rd.r, ri.r);
            EXPECT_FALSE(rd.sigma_direction);
            EXPECT_EQ(k->residue().omega_class_canonical(rd.omega), ri.omega_class);
            EXPECT_FALSE(ri.is_cube);
        }
    }
}

TEST(Refined, OracleOnRandomNormalForms) {
    const OracleSuite s = oracle_refined(parse_field_spec("e2f2i"), 50, 5);
    EXPECT_EQ(s.cases, 50);
    EXPECT_EQ(s.disagreements, 0);
}

TEST(Refined, NormalFormFromPair) {
    const FieldPtr k = field("f3e2i");
    const ResidueElem w = k->residue().basis(1);
    const FieldElem beta = k->uniformizer();
    const FieldElem tw = k->teichmuller(w);
    const FieldElem mu = k->uniformizer();
    const OneBreakNormalForm nf =
        one_break_normal_form(k->one() + beta, k->one() + (tw + mu) * (tw + mu) * beta);
    EXPECT_EQ(nf.b, 3);
    EXPECT_EQ(nf.m, 1);
    EXPECT_EQ(refined_invariants(nf).r, std::min({4 * 2 - 3, 3 + 4, 6}));
    EXPECT_EQ(k->residue().omega_class_canonical(nf.omega), k->residue().omega_class_canonical(w));
}

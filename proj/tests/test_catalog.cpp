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

#include <set>
#include <tuple>

#include "quatram/catalog.hpp"
#include "quatram/errors.hpp"
#include "quatram/harness.hpp"
#include "quatram/report.hpp"
#include "test_util.hpp"

using namespace quatram;
using quatram::testing::field;

namespace {

using Triple = std::tuple<int, int, int>;

std::set<Triple> triples(ClassTag tag, int e) {
    std::set<Triple> out;
    for (const CatalogTriple& t : enumerate(tag, e)) out.emplace(t.s1, t.s2, t.s3);
    return out;
}

CatalogTriple target(ClassTag tag, int e, int s1, int s2, int s3) {
    for (const CatalogTriple& t : enumerate(tag, e)) {
        if (t.s1 == s1 && t.s2 == s2 && t.s3 == s3) return t;
    }
    CatalogTriple t;
    t.tag = tag;
    t.e = e;
    t.s1 = s1;
    t.s2 = s2;
    t.s3 = s3;
    return t;
}

}  // namespace

TEST(Catalog, SetsAtE2) {
    EXPECT_EQ(triples(ClassTag::Two, 2), (std::set<Triple>{{1, 5, 13}, {1, 7, 15}, {3, 5, 13}}));
    EXPECT_EQ(triples(ClassTag::OneStar, 2), (std::set<Triple>{{1, 2, 3}, {1, 2, 9}, {1, 2, 13}, {3, 5, 9}}));
    EXPECT_EQ(triples(ClassTag::One, 1), (std::set<Triple>{{1, 2, 5}}));
}

TEST(Catalog, Bounds) {
    EXPECT_EQ(s1_values(2), (std::vector<int>{1, 3}));
    EXPECT_EQ(s2_bound(ClassTag::Two, 2, 1), 7);
    EXPECT_EQ(s2_values(ClassTag::Two, 2, 1), (std::vector<int>{5, 7}));
    EXPECT_EQ(s2_values(ClassTag::Two, 2, 3), (std::vector<int>{5}));
    EXPECT_EQ(s2_values(ClassTag::OneStar, 2, 1), (std::vector<int>{2}));
    EXPECT_EQ(lower_bound_s3(ClassTag::OneStar, 2, 1, 2), 3);
    EXPECT_EQ(upper_bound_s3(ClassTag::OneStar, 2, 1, 2), 13);
    EXPECT_EQ(lower_bound_s3(ClassTag::One, 4, 1, 2), 5);
    EXPECT_EQ(lower_bound_s3(ClassTag::Two, 4, 1, 5), 17);
    EXPECT_EQ(upper_bound_s3(ClassTag::Two, 4, 1, 5), 25);
    EXPECT_TRUE(is_unstable(ClassTag::Two, 4, 1, 5));
    EXPECT_FALSE(is_unstable(ClassTag::OneStar, 2, 3, 5));
    EXPECT_EQ(stable_s3(ClassTag::OneStar, 2, 3, 5), 9);
    EXPECT_EQ(stable_s3(ClassTag::Two, 2, 1, 5), 13);
    EXPECT_EQ(stable_s3(ClassTag::One, 1, 1, 2), 5);
}

TEST(Catalog, UnstableWindow) {
    EXPECT_EQ(s3_values(ClassTag::Two, 4, 1, 5), (std::vector<int>{17, 21, 25}));
    for (int s3 : {17, 21, 25}) EXPECT_TRUE(member(ClassTag::Two, 4, 1, 5, s3));
    for (int s3 : {13, 19, 29}) EXPECT_FALSE(member(ClassTag::Two, 4, 1, 5, s3));
    EXPECT_FALSE(member(ClassTag::Two, 2, 2, 6, 14));
}

TEST(Catalog, EnumerateMatchesMember) {
    for (ClassTag tag : {ClassTag::One, ClassTag::OneStar, ClassTag::Two}) {
        for (int e = 1; e <= 6; ++e) {
            const std::set<Triple> set = triples(tag, e);
            for (const Triple& t : set) EXPECT_TRUE(member(tag, e, std::get<0>(t), std::get<1>(t), std::get<2>(t)));
            for (int s1 = 0; s1 <= 2 * e; ++s1) {
                for (int s2 = s1; s2 <= 4 * e; ++s2) {
                    for (int s3 = s2; s3 <= 8 * e; ++s3) {
                        EXPECT_EQ(member(tag, e, s1, s2, s3), set.count({s1, s2, s3}) == 1);
                    }
                }
            }
            for (const CatalogTriple& c : enumerate(tag, e)) {
                EXPECT_EQ(c.stability == Stability::Unstable, is_unstable(tag, e, c.s1, c.s2));
                EXPECT_GT(c.s3, c.s2);
            }
        }
    }
}

TEST(Catalog, HasseArfExceptions) {
    const std::vector<CatalogTriple> ex = hasse_arf_exceptions(2);
    std::set<Triple> got;
    for (const CatalogTriple& t : ex) {
        EXPECT_EQ(t.tag, ClassTag::OneStar);
        got.emplace(t.s1, t.s2, t.s3);
    }
    EXPECT_EQ(got, (std::set<Triple>{{1, 2, 3}, {3, 5, 9}}));

    for (int e = 1; e <= 8; ++e) {
        for (const CatalogTriple& t : enumerate(ClassTag::One, e)) EXPECT_NE(t.s3, 3 * t.s1);
    }
}

TEST(Catalog, ExceptionsAreTheNonIntegralTriples) {
    for (int e = 1; e <= 6; ++e) {
        std::set<std::tuple<int, int, int, int>> exceptions;
        for (const CatalogTriple& t : hasse_arf_exceptions(e)) {
            exceptions.emplace(static_cast<int>(t.tag), t.s1, t.s2, t.s3);
        }
        for (ClassTag tag : {ClassTag::One, ClassTag::OneStar, ClassTag::Two}) {
            for (const CatalogTriple& t : enumerate(tag, e)) {
                const bool integral = upper_breaks_integral(triple_breaks(tag, t.s1, t.s2, t.s3));
                EXPECT_EQ(!integral, exceptions.count({static_cast<int>(tag), t.s1, t.s2, t.s3}) == 1)
                    << tag_name(tag) << " " << t.s1 << "," << t.s2 << "," << t.s3;
            }
        }
    }
}

TEST(Witness, RoundTripAtE2F2) {
    const FieldSpec spec = parse_field_spec("e2f2i");
    for (ClassTag tag : {ClassTag::OneStar, ClassTag::Two}) {
        for (const CatalogTriple& t : enumerate(tag, 2)) {
            const WitnessOutcome w = run_witness(spec, t);
            EXPECT_TRUE(w.match) << tag_name(tag) << " " << t.s1 << "," << t.s2 << "," << t.s3;
        }
    }
}

TEST(Witness, HasseArfCounterexample) {
    const WitnessOutcome w = run_witness(parse_field_spec("e2f2i"), target(ClassTag::OneStar, 2, 1, 2, 3));
    ASSERT_TRUE(w.match);
    EXPECT_FALSE(w.integral);
    EXPECT_EQ(w.upper.back(), Rational(3, 2));
}

TEST(Witness, TagOneAtResidueDegreeThree) {
    const FieldSpec spec = parse_field_spec("f3e2i");
    for (const CatalogTriple& t : enumerate(ClassTag::One, 2)) {
        EXPECT_TRUE(run_witness(spec, t).match) << t.s1 << "," << t.s2 << "," << t.s3;
    }
}

TEST(Witness, ReplayFromSquareClasses) {
    const FieldPtr k = field("e2f2i");
    const WitnessRecipe r = witness(k, target(ClassTag::Two, 2, 1, 7, 15));
    const QuaternionData q = replay(k, r.u_class, r.v_class, r.k_class);
    EXPECT_EQ(q.triple, (RamTriple{ClassTag::Two, 1, 7, 15}));
    EXPECT_EQ(execute(r).triple, q.triple);
}

TEST(Witness, Errors) {
    EXPECT_THROW(witness(field("Q2sqrt2"), target(ClassTag::Two, 2, 1, 5, 13)), RequiresI);
    EXPECT_THROW(witness(field("e2f2i"), target(ClassTag::Two, 2, 1, 5, 11)), NotInCatalog);
    EXPECT_THROW(witness(field("e2f2i"), target(ClassTag::Two, 2, 2, 6, 14)), NotInCatalog);
    EXPECT_THROW(witness(field("Q2zeta8"), target(ClassTag::Two, 2, 1, 5, 13)), NotInCatalog);
    EXPECT_THROW(witness(field("e2f2i"), target(ClassTag::One, 2, 1, 2, 5)), HypothesisViolation);
    EXPECT_THROW(witness(field("Q2i"), target(ClassTag::OneStar, 2, 1, 2, 3)), HypothesisViolation);
}

// (1,5,13) lies on s2 + 3 s1 = 4e; over Q2(i) no embeddable pair has breaks (1,5).
TEST(Witness, BoundaryTripleUnreachableOverQ2i) {
    const FieldSpec spec = parse_field_spec("Q2i");
    EXPECT_THROW(run_witness(spec, target(ClassTag::Two, 2, 1, 5, 13)), TargetUnreachable);
    EXPECT_TRUE(run_witness(spec, target(ClassTag::Two, 2, 1, 7, 15)).match);
    EXPECT_TRUE(run_witness(spec, target(ClassTag::Two, 2, 3, 5, 13)).match);
}

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

#include <optional>
#include <set>

#include "quatram/catalog.hpp"
#include "quatram/errors.hpp"
#include "quatram/quaternion.hpp"
#include "quatram/symbols.hpp"
#include "test_util.hpp"

using namespace quatram;
using quatram::testing::class_from_index;
using quatram::testing::field;

namespace {

bool normalized(const FieldElem& u, const FieldElem& v) {
    const FieldPtr& k = u.home();
    return hilbert_symbol(u, v) == 1 && hilbert_symbol(u * v, k->integer(-1)) == 1;
}

std::optional<QuaternionFrame> try_frame(const FieldPtr& k, int dim, unsigned a, unsigned b) {
    const FieldElem u = square_class_representative(k, class_from_index(dim, a));
    const FieldElem v = square_class_representative(k, class_from_index(dim, b));
    if (a == b || !embeddable(u, v)) return std::nullopt;
    const auto [u2, v2] = normalize_uv(u, v);
    try {
        return build_frame(u2, v2);
    } catch (const NotFullyRamified&) {
        return std::nullopt;
    }
}

// Every unordered pair of nontrivial classes.
template <class Fn>
void for_each_frame(const FieldPtr& k, Fn fn) {
    const int dim = square_class_dimension(*k);
    for (unsigned a = 1; a < (1u << dim); ++a) {
        for (unsigned b = a + 1; b < (1u << dim); ++b) {
            if (auto frame = try_frame(k, dim, a, b)) fn(*frame);
        }
    }
}

// Random pairs, for fields too large to scan.
template <class Fn>
void sample_frames(const FieldPtr& k, int pairs, std::uint64_t seed, Fn fn) {
    const int dim = square_class_dimension(*k);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<unsigned> pick(1, (1u << dim) - 1);
    for (int t = 0; t < pairs; ++t) {
        if (auto frame = try_frame(k, dim, pick(rng), pick(rng))) fn(*frame);
    }
}

}  // namespace

TEST(Quaternion, ContainsI) {
    EXPECT_TRUE(contains_i(field("Q2i")));
    EXPECT_TRUE(contains_i(field("e2f2i")));
    EXPECT_TRUE(contains_i(field("Q2zeta8")));
    EXPECT_FALSE(contains_i(field("Q2")));
    EXPECT_FALSE(contains_i(field("Q2sqrt2")));
    EXPECT_FALSE(contains_i(field("f3e2")));
}

TEST(Quaternion, Tags) {
    EXPECT_EQ(parse_tag("1*"), ClassTag::OneStar);
    EXPECT_EQ(parse_tag("2"), ClassTag::Two);
    EXPECT_EQ(tag_name(ClassTag::One), "1");
    EXPECT_EQ(tag_name(parse_tag(tag_name(ClassTag::OneStar))), "1*");
    EXPECT_THROW(parse_tag("3"), DomainError);
}

TEST(Quaternion, EmbeddableSmallBreaks) {
    // With i in K and s1 < e, every pair of one-units has (u, v) = 1.
    const FieldPtr k = field("Q2i");
    const FieldElem u = k->one() + k->uniformizer().pow(3);
    const FieldElem l = k->teichmuller(k->residue().canonical_trace_one());
    EXPECT_TRUE(embeddable(u, u * (k->one() + k->integer(4) * l)));
    EXPECT_EQ(hilbert_symbol(u, k->one() + k->uniformizer().pow(3) * k->integer(3)), 1);
}

TEST(Quaternion, EmbeddableConsistency) {
    // embeddable() cross-checks the Witt condition against the product formula and throws on mismatch.
    for (const char* name : {"Q2", "Q2i", "Q2sqrt2", "T4", "e2f2i"}) {
        const FieldPtr k = field(name);
        const int dim = square_class_dimension(*k);
        for (unsigned a = 1; a < (1u << dim); a += 3) {
            for (unsigned b = 1; b < (1u << dim); b += 5) {
                EXPECT_NO_THROW(embeddable(square_class_representative(k, class_from_index(dim, a)),
                                           square_class_representative(k, class_from_index(dim, b))));
            }
        }
    }
}

TEST(Quaternion, NormalizeUv) {
    const FieldPtr k = field("Q2sqrt2");
    const int dim = square_class_dimension(*k);
    int swapped = 0;
    for (unsigned a = 1; a < (1u << dim); ++a) {
        for (unsigned b = a + 1; b < (1u << dim); ++b) {
            const FieldElem u = square_class_representative(k, class_from_index(dim, a));
            const FieldElem v = square_class_representative(k, class_from_index(dim, b));
            if (!embeddable(u, v)) {
                EXPECT_THROW(normalize_uv(u, v), NoValidArrangement);
                continue;
            }
            const auto [u2, v2] = normalize_uv(u, v);
            EXPECT_TRUE(normalized(u2, v2));
            if (normalized(u, v)) {
                EXPECT_EQ(square_class_vector(u2), square_class_vector(u));
                EXPECT_EQ(square_class_vector(v2), square_class_vector(v));
            } else {
                ++swapped;
            }
        }
    }
    EXPECT_GT(swapped, 0);
}

TEST(Quaternion, B3ExceedsBiquadraticBreaks) {
    for (const char* name : {"Q2i", "Q2sqrt2", "e2f2i"}) {
        const FieldPtr k = field(name);
        for_each_frame(k, [&](const QuaternionFrame& frame) {
            for (const FieldElem& kk : {k->one(), k->uniformizer(), k->one() + k->uniformizer()}) {
                const QuaternionData q = build_quaternion(frame, kk);
                EXPECT_GT(q.b3, frame.breaks.b2) << name;
                EXPECT_EQ(q.b3, q.b3_galois) << name;
                EXPECT_EQ(q.b3, 8 * k->e_abs() - q.def_alpha) << name;
                EXPECT_EQ(q.breaks.lower_breaks.size(), 3u);
                if (k->f_abs() == 1) {
                    EXPECT_EQ(q.triple.tag, ClassTag::Two) << name;
                }
            }
        });
    }
}

TEST(Quaternion, StableOneBreakLaw) {
    // b > e and omega^3 != 1: def_M(alpha_k) = 4e - b for every k.
    const FieldPtr k = field("f3e2i");
    const int e = k->e_abs();
    int seen = 0;
    sample_frames(k, 3000, 1, [&](const QuaternionFrame& frame) {
        if (!frame.breaks.one_break || frame.breaks.b1 <= e || seen >= 3) return;
        ++seen;
        const int b = frame.breaks.b1;
        for (const FieldElem& kk : k_candidates(k)) {
            const QuaternionData q = build_quaternion(frame, kk);
            EXPECT_EQ(q.def_alpha, 4 * e - b);
            EXPECT_EQ(q.b3, 4 * e + b);
            EXPECT_EQ(q.triple.tag, ClassTag::One);
        }
    });
    EXPECT_GT(seen, 0);
}

TEST(Quaternion, StableTwoBreakLaw) {
    for (const char* name : {"Q2i", "Q2sqrt2", "f3e2"}) {
        const FieldPtr k = field(name);
        const int e = k->e_abs();
        int seen = 0;
        sample_frames(k, 400, 2, [&](const QuaternionFrame& frame) {
            if (frame.breaks.one_break || frame.breaks.b1 + frame.breaks.b2 <= 2 * e) return;
            ++seen;
            for (const FieldElem& kk : {k->one(), k->uniformizer()}) {
                EXPECT_EQ(build_quaternion(frame, kk).b3, 4 * e + frame.breaks.b2) << name;
            }
        });
        EXPECT_GT(seen, 0) << name;
    }
}

TEST(Quaternion, ClassifyByResidueField) {
    struct Case {
        const char* name;
        ClassTag one_break_tag;
    };
    for (const Case& c : {Case{"e2f2i", ClassTag::OneStar}, Case{"f3e2i", ClassTag::One}}) {
        const FieldPtr k = field(c.name);
        int one_break = 0;
        sample_frames(k, 1500, 3, [&](const QuaternionFrame& frame) {
            if (!frame.breaks.one_break) return;
            ++one_break;
            EXPECT_EQ(build_quaternion(frame, k->one()).triple.tag, c.one_break_tag) << c.name;
        });
        EXPECT_GT(one_break, 0) << c.name;
    }
}

TEST(Quaternion, KOnlyMattersModSquares) {
    const FieldPtr k = field("e2f2i");
    const FieldElem s = k->one() + k->uniformizer() * k->teichmuller(k->residue().basis(1));
    int frames = 0;
    sample_frames(k, 200, 4, [&](const QuaternionFrame& frame) {
        if (++frames > 4) return;
        for (const FieldElem& kk : {k->one(), k->uniformizer(), k->one() + k->uniformizer()}) {
            EXPECT_EQ(build_quaternion(frame, kk).b3, build_quaternion(frame, kk * s * s).b3);
        }
    });
    EXPECT_GT(frames, 0);
}

TEST(TuneK, StableReturnsOne) {
    const FieldPtr k = field("Q2i");
    for_each_frame(k, [&](const QuaternionFrame& frame) {
        if (frame.breaks.one_break || frame.breaks.b1 + frame.breaks.b2 <= 4) return;
        const int forced = 4 * 2 + frame.breaks.b2;
        const FieldElem kk = tune_k(frame, forced);
        EXPECT_TRUE(square_class_vector(kk).is_zero());
        EXPECT_THROW(tune_k(frame, forced + 4), TargetUnreachable);
    });
}

TEST(TuneK, UnstableWindowAtE4) {
    const FieldPtr k = field("Q2zeta8");
    std::set<int> reached;
    int frames = 0;
    for_each_frame(k, [&](const QuaternionFrame& frame) {
        if (frame.breaks.one_break || frame.breaks.b1 != 1 || frame.breaks.b2 != 5 || frames > 0) return;
        ++frames;
        for (int s3 : {17, 21, 25}) {
            const FieldElem kk = tune_k(frame, s3);
            EXPECT_EQ(build_quaternion(frame, kk).b3, s3);
            reached.insert(s3);
        }
        EXPECT_THROW(tune_k(frame, 19), TargetUnreachable);
        EXPECT_THROW(tune_k(frame, 29), TargetUnreachable);
    });
    EXPECT_EQ(frames, 1);
    EXPECT_EQ(reached, (std::set<int>{17, 21, 25}));
}

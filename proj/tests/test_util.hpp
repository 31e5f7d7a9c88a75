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

#ifndef QUATRAM_TEST_UTIL_HPP
#define QUATRAM_TEST_UTIL_HPP

#include <random>
#include <vector>

#include "quatram/localfield.hpp"
#include "quatram/squares.hpp"

namespace quatram::testing {

inline FieldPtr field(const char* name) { return make_field(parse_field_spec(name)); }

/// Zero to the working precision.
inline bool vanishes(const FieldElem& s) { return s.is_exact_zero() || !valuation_info(s).exact; }

/// sum of 0/1 residue lifts times pi^i, i < digits, over every coordinate of the tower.
inline FieldElem random_integer(const FieldPtr& f, std::mt19937_64& rng, int digits = 6) {
    if (f->depth() > 0) {
        const FieldElem a = random_integer(f->parent(), rng, digits);
        const FieldElem b = random_integer(f->parent(), rng, digits);
        return f->embed(a) + f->embed(b) * f->generator();
    }
    const auto elems = f->residue().elements();
    std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
    FieldElem s = f->zero();
    FieldElem p = f->one();
    for (int i = 0; i < digits; ++i) {
        s += f->residue_lift(elems[pick(rng)]) * p;
        p *= f->uniformizer();
    }
    return s;
}

/// A unit of the base field with leading residue 1.
inline FieldElem random_one_unit(const FieldPtr& f, std::mt19937_64& rng, int digits = 8) {
    return f->one() + random_integer(f, rng, digits) * f->uniformizer();
}

inline SquareClassVector class_from_index(int dim, unsigned index) {
    SquareClassVector v;
    v.bits.assign(dim, 0);
    for (int i = 0; i < dim; ++i) v.bits[i] = (index >> i) & 1u;
    return v;
}

}  // namespace quatram::testing

#endif  // QUATRAM_TEST_UTIL_HPP

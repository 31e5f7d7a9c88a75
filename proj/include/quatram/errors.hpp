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

#ifndef QUATRAM_ERRORS_HPP
#define QUATRAM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace quatram {

class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

#define QUATRAM_ERROR(Name)                                   \
    class Name : public Error {                               \
       public:                                                \
        explicit Name(const std::string& what) : Error(what) {} \
    }

QUATRAM_ERROR(DomainError);
QUATRAM_ERROR(PrecisionExhausted);
QUATRAM_ERROR(PrecisionTooSmall);
QUATRAM_ERROR(NotEisenstein);
QUATRAM_ERROR(IsSquare);
QUATRAM_ERROR(UnramifiedSubextension);
QUATRAM_ERROR(HypothesisViolation);
QUATRAM_ERROR(NotANorm);
QUATRAM_ERROR(NoValidArrangement);
QUATRAM_ERROR(NotFullyRamified);
QUATRAM_ERROR(TargetUnreachable);
QUATRAM_ERROR(NotInCatalog);
QUATRAM_ERROR(RequiresI);
// Raised when an internal consistency check fails (two routes disagree).
QUATRAM_ERROR(InternalInconsistency);

#undef QUATRAM_ERROR

}  // namespace quatram

#endif  // QUATRAM_ERRORS_HPP

/*
   Copyright 2026 The xnr-codes Authors

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

#ifndef XNR_ERROR_HPP
#define XNR_ERROR_HPP

#include <stdexcept>
#include <string>

namespace xnr {

/// Bad user-supplied parameters (non-prime p, reducible modulus, gcd(n,r) != 1, ...).
class ValidationError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Operation applied outside its mathematical domain (dlog(0), division by the zero polynomial, ...).
class DomainError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// A computed object failed a self-check against a closed-form claim. Signals a bug or an invalid input curve.
class ConsistencyError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

/// A hard computational budget was exhausted (reduction step cap, enumeration limit).
class BudgetError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace xnr

#endif

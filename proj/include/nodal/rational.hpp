/*
   Copyright 2026 The nodalres Authors

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

#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace nodal {

/// Arbitrary precision rational, always canonical (lowest terms, positive
/// denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Base of every error raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input data that violates a documented precondition (bad catalog entry,
/// malformed matrix, unsupported degree...).
class ValidationError : public Error {
public:
    using Error::Error;
};

Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline Rational inverse(const Rational& q) {
    if (is_zero(q)) throw Error("division by zero in Q");
    return Rational(1) / q;
}

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);
Rational pow(const Rational& base, unsigned long exp);

}  // namespace nodal

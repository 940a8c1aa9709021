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

#include "nodal/number_field.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace nodal {

class UnsuitablePrime : public Error {
public:
    using Error::Error;
};

/// Dense univariate polynomial over F_p, ascending coefficients, no trailing zeros.
using PolyModP = std::vector<std::uint64_t>;

/// F_p[x]/(m mod p). A field exactly when the reduced modulus is irreducible.
class FiniteField {
public:
    FiniteField(std::uint64_t p, PolyModP modulus);

    std::uint64_t prime() const { return p_; }
    int degree() const { return static_cast<int>(modulus_.size()) - 1; }
    const PolyModP& modulus() const { return modulus_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p_; }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p_ - b) % p_; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p_; }
    std::uint64_t inv(std::uint64_t a) const;

    /// Reduces an integer (or a rational whose denominator is a unit) mod p.
    std::uint64_t reduce(const Integer& z) const;
    std::uint64_t reduce(const Rational& q) const;

private:
    std::uint64_t p_;
    PolyModP modulus_;
};

using FiniteFieldPtr = std::shared_ptr<const FiniteField>;

/// Element of F_p[x]/(m mod p) on the power basis.
class FfElement {
public:
    FfElement() = default;
    FfElement(FiniteFieldPtr field, std::vector<std::uint64_t> coeffs);

    const FiniteFieldPtr& field() const { return field_; }
    const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }
    bool is_zero() const;

    FfElement operator-() const;
    friend FfElement operator+(const FfElement& a, const FfElement& b);
    friend FfElement operator-(const FfElement& a, const FfElement& b);
    friend FfElement operator*(const FfElement& a, const FfElement& b);
    friend FfElement operator/(const FfElement& a, const FfElement& b) { return a * b.inverse(); }
    FfElement& operator+=(const FfElement& b) { return *this = *this + b; }
    FfElement& operator-=(const FfElement& b) { return *this = *this - b; }
    FfElement& operator*=(const FfElement& b) { return *this = *this * b; }
    friend bool operator==(const FfElement& a, const FfElement& b);

    FfElement inverse() const;

private:
    FiniteFieldPtr field_;
    std::vector<std::uint64_t> coeffs_;
};

inline bool is_zero(const FfElement& x) { return x.is_zero(); }
inline FfElement inverse(const FfElement& x) { return x.inverse(); }

bool is_prime(std::uint64_t n);

/// Reduction of the minimal polynomial of `field` (or x for Q) modulo p.
FiniteFieldPtr residue_field(const FieldPtr& field, std::uint64_t p);

/// True iff m mod p is irreducible over F_p (Rabin's test). Throws
/// UnsuitablePrime when p = 2, p is not prime, or p divides disc(m).
bool is_inert(const MinimalPolynomial& m, std::uint64_t p);

/// Smallest prime >= start at which m is inert. Unsuitable primes are
/// skipped; gives up with UnsuitablePrime after `search_cap` candidates.
std::uint64_t find_inert_prime(const MinimalPolynomial& m, std::uint64_t start,
                               std::uint64_t search_cap = 100000);

/// Ring-homomorphic image of a number field element in F_p[x]/(m mod p).
/// Throws UnsuitablePrime when p divides a denominator.
FfElement reduce_element(const FieldElement& x, const FiniteFieldPtr& target);

namespace polymodp {
PolyModP trim(PolyModP a);
PolyModP sub(const PolyModP& a, const PolyModP& b, std::uint64_t p);
PolyModP mulmod(const PolyModP& a, const PolyModP& b, const PolyModP& m, std::uint64_t p);
PolyModP rem(PolyModP a, const PolyModP& m, std::uint64_t p);
PolyModP gcd(PolyModP a, PolyModP b, std::uint64_t p);
/// x^(p^e) mod m.
PolyModP frobenius_power(std::uint64_t e, const PolyModP& m, std::uint64_t p);
}  // namespace polymodp

}  // namespace nodal

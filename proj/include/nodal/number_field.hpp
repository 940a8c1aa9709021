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

#include "nodal/rational.hpp"

#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace nodal {

class FieldMismatch : public Error {
public:
    using Error::Error;
};

/// Monic integer polynomial m(x) = c0 + c1 x + ... + x^k defining Q[x]/(m).
///
/// Construction validates what can be validated cheaply: monic, squarefree
/// over Q, and free of rational roots when k > 1. Irreducibility beyond that
/// is taken on trust from the caller.
class MinimalPolynomial {
public:
    /// Coefficients in ascending order, c0 first. Throws ValidationError.
    explicit MinimalPolynomial(std::vector<Integer> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Integer>& coeffs() const { return coeffs_; }

    /// Discriminant, computed exactly from the Sylvester resultant.
    Integer discriminant() const;

    std::string to_string(const std::string& var = "x") const;

    friend bool operator==(const MinimalPolynomial&, const MinimalPolynomial&) = default;

private:
    std::vector<Integer> coeffs_;
};

/// Q[x]/(m(x)) with precomputed reduction data for the power basis.
class NumberField {
public:
    NumberField(MinimalPolynomial minpoly, std::string name = {});

    const MinimalPolynomial& minpoly() const { return minpoly_; }
    int degree() const { return minpoly_.degree(); }
    const std::string& name() const { return name_; }

    /// alpha^(k+i) expressed on the power basis, for i = 0 .. k-2.
    const std::vector<std::vector<Integer>>& high_powers() const { return high_powers_; }

    bool same_as(const NumberField& other) const { return minpoly_ == other.minpoly_; }

private:
    MinimalPolynomial minpoly_;
    std::string name_;
    std::vector<std::vector<Integer>> high_powers_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

FieldPtr make_field(std::vector<Integer> minpoly_coeffs, std::string name = {});

/// Element of Q or of a number field, on the power basis 1, a, ..., a^(k-1).
///
/// A null field pointer means Q; rationals promote silently into any number
/// field, two different number fields never mix.
class FieldElement {
public:
    FieldElement() : coeffs_(1) {}
    FieldElement(const Rational& q) : coeffs_{q} { coeffs_[0].canonicalize(); }  // NOLINT(implicit)
    FieldElement(long v) : coeffs_{Rational(v)} {}   // NOLINT(implicit)
    FieldElement(int v) : coeffs_{Rational(v)} {}    // NOLINT(implicit)
    FieldElement(FieldPtr field, std::vector<Rational> coeffs);

    static FieldElement generator(const FieldPtr& field);

    const FieldPtr& field() const { return field_; }
    int degree() const { return static_cast<int>(coeffs_.size()); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_rational() const;
    bool is_zero() const;
    /// Valid only when is_rational().
    Rational rational_value() const;

    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& rhs);
    FieldElement& operator-=(const FieldElement& rhs);
    FieldElement& operator*=(const FieldElement& rhs);
    FieldElement& operator/=(const FieldElement& rhs);

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
    friend bool operator==(const FieldElement& a, const FieldElement& b);

    FieldElement inverse() const;
    FieldElement pow(unsigned exp) const;

    /// Least common multiple of the denominators of all coefficients.
    Integer denominator_lcm() const;

    std::string to_string(const std::string& var = "a") const;

private:
    FieldPtr field_;
    std::vector<Rational> coeffs_;

    void promote_to(const FieldPtr& field);
};

/// The field both arguments live in; throws FieldMismatch otherwise.
FieldPtr common_field(const FieldPtr& a, const FieldPtr& b);
FieldPtr common_field(std::span<const FieldElement> values);

inline bool is_zero(const FieldElement& x) { return x.is_zero(); }
inline FieldElement inverse(const FieldElement& x) { return x.inverse(); }

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

}  // namespace nodal

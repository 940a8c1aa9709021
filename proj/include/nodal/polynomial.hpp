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
#include <map>
#include <span>
#include <string>
#include <vector>

namespace nodal {

using Monomial = std::vector<std::uint32_t>;

unsigned total_degree(const Monomial& m);

/// Graded-lex order: higher total degree first, then lexicographically
/// larger exponent vectors first. Sorting with this comparator yields the
/// canonical (descending) term order.
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// All degree-D monomials in nvars variables, in canonical grlex order.
/// Size binom(D + nvars - 1, nvars - 1); empty for D < 0.
std::vector<Monomial> monomial_basis(int nvars, int degree);

/// Sparse multivariate polynomial over Q or one number field.
class Polynomial {
public:
    using Terms = std::map<Monomial, FieldElement, GrlexGreater>;

    explicit Polynomial(int nvars = 1) : nvars_(nvars) {}
    static Polynomial constant(int nvars, const FieldElement& c);
    static Polynomial variable(int nvars, int index);
    static Polynomial monomial(const Monomial& m, const FieldElement& c);

    int nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const;
    FieldElement coefficient(const Monomial& m) const;
    /// Coefficient of x^e for a univariate polynomial.
    FieldElement coefficient(unsigned e) const;
    FieldPtr field() const;

    void add_term(const Monomial& m, const FieldElement& c);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& b);
    Polynomial& operator-=(const Polynomial& b);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const FieldElement& c, const Polynomial& p);
    friend bool operator==(const Polynomial& a, const Polynomial& b);

    Polynomial pow(unsigned e) const;

    FieldElement evaluate(std::span<const FieldElement> point) const;
    Polynomial derivative(int var) const;
    std::vector<Polynomial> gradient() const;

    /// Univariate composition p(q).
    Polynomial compose(const Polynomial& q) const;
    /// Univariate p placed in variable `var` of an nvars-variable ring.
    Polynomial embed(int nvars, int var) const;
    /// Homogenization with a new variable x0 in front; the result has
    /// nvars + 1 variables and every term has total degree `deg`.
    Polynomial homogenize(int deg) const;
    /// Sets variable `var` to 1 and removes it.
    Polynomial dehomogenize(int var) const;

    std::string to_string() const;

private:
    int nvars_;
    Terms terms_;
};

/// Value of x^m at a point, exact.
FieldElement evaluate_monomial(const Monomial& m, std::span<const FieldElement> point);

/// Exact square root of a univariate polynomial with positive leading
/// coefficient; throws ValidationError when none exists.
Polynomial polynomial_sqrt(const Polynomial& p);

}  // namespace nodal

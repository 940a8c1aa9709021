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

#include "nodal/number_field.hpp"

#include <ostream>
#include <sstream>
#include <utility>

namespace nodal {

namespace {

// Determinant of a small dense rational matrix by elimination.
Rational small_determinant(std::vector<std::vector<Rational>> a) {
    const std::size_t n = a.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(a[p][c]) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (sgn(a[r][c]) == 0) continue;
            const Rational f = a[r][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
        }
    }
    return det;
}

// Solves a x = b for square non-singular a; returns false if singular.
bool small_solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b, std::vector<Rational>& x) {
    const std::size_t n = a.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(a[p][c]) == 0) ++p;
        if (p == n) return false;
        std::swap(a[p], a[c]);
        std::swap(b[p], b[c]);
        const Rational piv = a[c][c];
        for (std::size_t j = c; j < n; ++j) a[c][j] /= piv;
        b[c] /= piv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || sgn(a[r][c]) == 0) continue;
            const Rational f = a[r][c];
            for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
            b[r] -= f * b[c];
        }
    }
    x = std::move(b);
    return true;
}

bool has_integer_root(const std::vector<Integer>& c) {
    // Monic with integer coefficients: every rational root is an integer dividing c0.
    if (c[0] == 0) return true;
    auto is_root = [&](const Integer& r) {
        Integer acc = 0;
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * r + c[i];
        return acc == 0;
    };
    Integer a = abs(c[0]);
    if (!a.fits_ulong_p())
        throw ValidationError("minimal polynomial constant term too large for the rational-root check");
    const unsigned long n = a.get_ui();
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        for (unsigned long q : {d, n / d})
            if (is_root(Integer(q)) || is_root(-Integer(q))) return true;
    }
    return false;
}

}  // namespace

MinimalPolynomial::MinimalPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() < 2) throw ValidationError("minimal polynomial must have degree >= 1");
    if (coeffs_.back() != 1) throw ValidationError("minimal polynomial must be monic: " + to_string());
    if (degree() > 1) {
        if (discriminant() == 0) throw ValidationError("minimal polynomial is not squarefree: " + to_string());
        if (has_integer_root(coeffs_)) throw ValidationError("minimal polynomial has a rational root: " + to_string());
    }
}

Integer MinimalPolynomial::discriminant() const {
    const int k = degree();
    if (k == 1) return 1;
    // Sylvester matrix of m (degree k) and m' (degree k-1): size 2k-1.
    std::vector<Integer> d(k);
    for (int i = 1; i <= k; ++i) d[i - 1] = coeffs_[i] * i;
    const int n = 2 * k - 1;
    std::vector<std::vector<Rational>> s(n, std::vector<Rational>(n));
    for (int r = 0; r < k - 1; ++r)
        for (int i = 0; i <= k; ++i) s[r][r + i] = coeffs_[k - i];
    for (int r = 0; r < k; ++r)
        for (int i = 0; i <= k - 1; ++i) s[k - 1 + r][r + i] = d[k - 1 - i];
    Rational res = small_determinant(std::move(s));
    if ((k * (k - 1) / 2) % 2) res = -res;
    return res.get_num();
}

std::string MinimalPolynomial::to_string(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Integer& c = coeffs_[i];
        if (c == 0) continue;
        Integer a = abs(c);
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        if (a != 1 || i == 0) os << a;
        if (i >= 1) os << var;
        if (i > 1) os << "^" << i;
        first = false;
    }
    return os.str();
}

NumberField::NumberField(MinimalPolynomial minpoly, std::string name)
    : minpoly_(std::move(minpoly)), name_(std::move(name)) {
    const int k = minpoly_.degree();
    // alpha^k = -(c0 + c1 a + ... + c_{k-1} a^{k-1})
    std::vector<Integer> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = -minpoly_.coeffs()[i];
    for (int e = k; e <= 2 * k - 2; ++e) {
        high_powers_.push_back(cur);
        // multiply by alpha
        std::vector<Integer> next(k);
        const Integer top = cur[k - 1];
        for (int i = k - 1; i >= 1; --i) next[i] = cur[i - 1];
        next[0] = 0;
        for (int i = 0; i < k; ++i) next[i] -= top * minpoly_.coeffs()[i];
        cur = std::move(next);
    }
}

FieldPtr make_field(std::vector<Integer> minpoly_coeffs, std::string name) {
    return std::make_shared<const NumberField>(MinimalPolynomial(std::move(minpoly_coeffs)), std::move(name));
}

FieldPtr common_field(const FieldPtr& a, const FieldPtr& b) {
    if (!a) return b;
    if (!b || a == b) return a;
    if (a->same_as(*b)) return a;
    throw FieldMismatch("field mismatch: Q[x]/(" + a->minpoly().to_string() + ") vs Q[x]/(" +
                        b->minpoly().to_string() + ")");
}

FieldPtr common_field(std::span<const FieldElement> values) {
    FieldPtr f;
    for (const auto& v : values) f = common_field(f, v.field());
    return f;
}

FieldElement::FieldElement(FieldPtr field, std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    const std::size_t k = field_ ? static_cast<std::size_t>(field_->degree()) : 1;
    if (coeffs_.size() > k) throw ValidationError("too many power-basis coefficients for the field");
    coeffs_.resize(k);
    for (auto& c : coeffs_) c.canonicalize();
}

FieldElement FieldElement::generator(const FieldPtr& field) {
    if (!field) throw ValidationError("Q has no generator");
    std::vector<Rational> c(field->degree());
    if (field->degree() == 1) {
        c[0] = -Rational(field->minpoly().coeffs()[0]);
    } else {
        c[1] = 1;
    }
    return FieldElement(field, std::move(c));
}

bool FieldElement::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (sgn(coeffs_[i]) != 0) return false;
    return true;
}

bool FieldElement::is_zero() const {
    for (const auto& c : coeffs_)
        if (sgn(c) != 0) return false;
    return true;
}

Rational FieldElement::rational_value() const {
    if (!is_rational()) throw Error("element is not rational");
    return coeffs_[0];
}

void FieldElement::promote_to(const FieldPtr& field) {
    if (field_ == field || !field) return;
    if (field_) {
        if (!field_->same_as(*field)) throw FieldMismatch("cannot move element between number fields");
        field_ = field;
        return;
    }
    field_ = field;
    coeffs_.resize(field->degree());
}

FieldElement FieldElement::operator-() const {
    FieldElement r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
    promote_to(common_field(field_, rhs.field_));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
    promote_to(common_field(field_, rhs.field_));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    const FieldPtr f = common_field(a.field_, b.field_);
    if (a.coeffs_.size() == 1 || b.coeffs_.size() == 1) {
        const bool a_scalar = a.coeffs_.size() == 1;
        const FieldElement& scalar = a_scalar ? a : b;
        FieldElement r = a_scalar ? b : a;
        r.promote_to(f);
        for (auto& c : r.coeffs_) c *= scalar.coeffs_[0];
        return r;
    }
    const int k = f->degree();
    std::vector<Rational> prod(2 * k - 1);
    for (int i = 0; i < k; ++i) {
        if (sgn(a.coeffs_[i]) == 0) continue;
        for (int j = 0; j < k; ++j) {
            if (sgn(b.coeffs_[j]) == 0) continue;
            prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    const auto& hp = f->high_powers();
    for (int e = k; e <= 2 * k - 2; ++e) {
        if (sgn(prod[e]) == 0) continue;
        const auto& row = hp[e - k];
        for (int i = 0; i < k; ++i)
            if (row[i] != 0) prod[i] += prod[e] * row[i];
    }
    prod.resize(k);
    return FieldElement(f, std::move(prod));
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) { return *this = *this * rhs; }

FieldElement& FieldElement::operator/=(const FieldElement& rhs) { return *this *= rhs.inverse(); }

bool operator==(const FieldElement& a, const FieldElement& b) {
    common_field(a.field_, b.field_);
    const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    for (std::size_t i = 0; i < n; ++i) {
        const Rational x = i < a.coeffs_.size() ? a.coeffs_[i] : Rational(0);
        const Rational y = i < b.coeffs_.size() ? b.coeffs_[i] : Rational(0);
        if (x != y) return false;
    }
    return true;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw Error("division by zero in number field");
    if (!field_ || field_->degree() == 1) {
        FieldElement r = *this;
        r.coeffs_[0] = 1 / coeffs_[0];
        return r;
    }
    const int k = field_->degree();
    // Columns of the multiplication-by-this matrix are this * a^j.
    std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k));
    FieldElement basis(field_, {1});
    const FieldElement gen = generator(field_);
    for (int j = 0; j < k; ++j) {
        const FieldElement col = *this * basis;
        for (int i = 0; i < k; ++i) m[i][j] = col.coeffs_[i];
        basis = basis * gen;
    }
    std::vector<Rational> rhs(k), x;
    rhs[0] = 1;
    if (!small_solve(std::move(m), std::move(rhs), x))
        throw ValidationError("non-invertible element: minimal polynomial " + field_->minpoly().to_string() +
                              " is reducible (catalog data error)");
    return FieldElement(field_, std::move(x));
}

FieldElement FieldElement::pow(unsigned exp) const {
    FieldElement result(field_, {1});
    FieldElement base = *this;
    while (exp) {
        if (exp & 1u) result = result * base;
        exp >>= 1;
        if (exp) base = base * base;
    }
    return result;
}

Integer FieldElement::denominator_lcm() const {
    Integer l = 1;
    for (const auto& c : coeffs_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    return l;
}

std::string FieldElement::to_string(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (sgn(c) == 0) continue;
        if (!first) os << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0) os << "-";
        const Rational a = abs(c);
        if (i == 0) os << a;
        else {
            if (a != 1) os << a << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.to_string(); }

}  // namespace nodal

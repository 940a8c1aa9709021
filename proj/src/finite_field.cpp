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

#include "nodal/finite_field.hpp"

#include <string>
#include <utility>

namespace nodal {

namespace polymodp {

PolyModP trim(PolyModP a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

PolyModP sub(const PolyModP& a, const PolyModP& b, std::uint64_t p) {
    PolyModP r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        const std::uint64_t x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
        r[i] = (x + p - y) % p;
    }
    return trim(std::move(r));
}

namespace {
std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}
std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw Error("zero has no inverse mod " + std::to_string(p));
    return powmod(a, p - 2, p);
}
}  // namespace

PolyModP rem(PolyModP a, const PolyModP& m, std::uint64_t p) {
    a = trim(std::move(a));
    if (m.empty()) throw Error("polynomial division by zero");
    const std::uint64_t lead_inv = invmod(m.back(), p);
    while (a.size() >= m.size()) {
        const std::uint64_t f = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] = (a[shift + i] + p - f * m[i] % p) % p;
        a = trim(std::move(a));
    }
    return a;
}

PolyModP mulmod(const PolyModP& a, const PolyModP& b, const PolyModP& m, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    PolyModP r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return rem(std::move(r), m, p);
}

PolyModP gcd(PolyModP a, PolyModP b, std::uint64_t p) {
    a = trim(std::move(a));
    b = trim(std::move(b));
    while (!b.empty()) {
        PolyModP r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const std::uint64_t li = invmod(a.back(), p);
        for (auto& c : a) c = c * li % p;
    }
    return a;
}

PolyModP frobenius_power(std::uint64_t e, const PolyModP& m, std::uint64_t p) {
    PolyModP x = rem(PolyModP{0, 1}, m, p);
    for (std::uint64_t step = 0; step < e; ++step) {
        // x <- x^p
        PolyModP result{1}, base = x;
        std::uint64_t k = p;
        while (k) {
            if (k & 1) result = mulmod(result, base, m, p);
            k >>= 1;
            if (k) base = mulmod(base, base, m, p);
        }
        x = std::move(result);
    }
    return x;
}

}  // namespace polymodp

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FiniteField::FiniteField(std::uint64_t p, PolyModP modulus) : p_(p), modulus_(polymodp::trim(std::move(modulus))) {
    if (!is_prime(p)) throw UnsuitablePrime(std::to_string(p) + " is not prime");
    if (p >= (1ull << 31)) throw UnsuitablePrime("prime too large for 64-bit residue arithmetic");
    if (modulus_.size() < 2 || modulus_.back() != 1) throw ValidationError("finite field modulus must be monic of degree >= 1");
}

std::uint64_t FiniteField::inv(std::uint64_t a) const { return polymodp::invmod(a, p_); }

std::uint64_t FiniteField::reduce(const Integer& z) const {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p_);
    return r.get_ui();
}

std::uint64_t FiniteField::reduce(const Rational& q) const {
    const std::uint64_t den = reduce(Integer(q.get_den()));
    if (den == 0)
        throw UnsuitablePrime("prime " + std::to_string(p_) + " divides a denominator (" + q.get_str() + ")");
    return mul(reduce(Integer(q.get_num())), inv(den));
}

FfElement::FfElement(FiniteFieldPtr field, std::vector<std::uint64_t> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    coeffs_.resize(field_->degree());
    for (auto& c : coeffs_) c %= field_->prime();
}

bool FfElement::is_zero() const {
    for (auto c : coeffs_)
        if (c) return false;
    return true;
}

namespace {
const FiniteFieldPtr& common(const FfElement& a, const FfElement& b) {
    if (a.field() == b.field()) return a.field();
    if (!a.field()) return b.field();
    if (!b.field()) return a.field();
    if (a.field()->prime() != b.field()->prime() || a.field()->modulus() != b.field()->modulus())
        throw FieldMismatch("finite field mismatch");
    return a.field();
}
std::vector<std::uint64_t> padded(const FfElement& a, std::size_t k) {
    auto c = a.coeffs();
    c.resize(k);
    return c;
}
}  // namespace

FfElement FfElement::operator-() const {
    FfElement r = *this;
    for (auto& c : r.coeffs_) c = (field_->prime() - c) % field_->prime();
    return r;
}

FfElement operator+(const FfElement& a, const FfElement& b) {
    const auto& f = common(a, b);
    auto x = padded(a, f->degree()), y = padded(b, f->degree());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = f->add(x[i], y[i]);
    return FfElement(f, std::move(x));
}

FfElement operator-(const FfElement& a, const FfElement& b) {
    const auto& f = common(a, b);
    auto x = padded(a, f->degree()), y = padded(b, f->degree());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = f->sub(x[i], y[i]);
    return FfElement(f, std::move(x));
}

FfElement operator*(const FfElement& a, const FfElement& b) {
    const auto& f = common(a, b);
    auto r = polymodp::mulmod(polymodp::trim(a.coeffs()), polymodp::trim(b.coeffs()), f->modulus(), f->prime());
    return FfElement(f, std::move(r));
}

bool operator==(const FfElement& a, const FfElement& b) {
    const auto& f = common(a, b);
    return padded(a, f->degree()) == padded(b, f->degree());
}

FfElement FfElement::inverse() const {
    if (is_zero()) throw Error("division by zero in finite field");
    const std::uint64_t p = field_->prime();
    // Extended Euclid on (modulus, this).
    PolyModP r0 = field_->modulus(), r1 = polymodp::trim(coeffs_);
    PolyModP t0{}, t1{1};
    auto mul = [&](const PolyModP& a, const PolyModP& b) {
        if (a.empty() || b.empty()) return PolyModP{};
        PolyModP r(a.size() + b.size() - 1);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
        return polymodp::trim(r);
    };
    while (!r1.empty()) {
        // q = r0 / r1
        PolyModP q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0), rr = r0;
        const std::uint64_t li = polymodp::invmod(r1.back(), p);
        while (rr.size() >= r1.size() && !rr.empty()) {
            const std::uint64_t f = rr.back() * li % p;
            const std::size_t shift = rr.size() - r1.size();
            q[shift] = f;
            for (std::size_t i = 0; i < r1.size(); ++i) rr[shift + i] = (rr[shift + i] + p - f * r1[i] % p) % p;
            rr = polymodp::trim(std::move(rr));
        }
        PolyModP t2 = polymodp::sub(t0, mul(q, t1), p);
        r0 = std::move(r1);
        r1 = std::move(rr);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.size() != 1)
        throw Error("element is a zero divisor: modulus is reducible mod " + std::to_string(p));
    const std::uint64_t ci = polymodp::invmod(r0[0], p);
    for (auto& c : t0) c = c * ci % p;
    return FfElement(field_, polymodp::rem(t0, field_->modulus(), p));
}

FiniteFieldPtr residue_field(const FieldPtr& field, std::uint64_t p) {
    if (!field) return std::make_shared<const FiniteField>(p, PolyModP{0, 1});
    PolyModP m;
    for (const auto& c : field->minpoly().coeffs()) {
        Integer r;
        mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), p);
        m.push_back(r.get_ui());
    }
    return std::make_shared<const FiniteField>(p, std::move(m));
}

bool is_inert(const MinimalPolynomial& m, std::uint64_t p) {
    if (!is_prime(p)) throw UnsuitablePrime(std::to_string(p) + " is not prime");
    if (p == 2) throw UnsuitablePrime("p = 2 is never used for reduction");
    const Integer disc = m.discriminant();
    if (disc % p == 0)
        throw UnsuitablePrime(std::to_string(p) + " divides the discriminant " + disc.get_str());
    const int k = m.degree();
    if (k == 1) return true;
    PolyModP mbar;
    for (const auto& c : m.coeffs()) {
        Integer r;
        mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), p);
        mbar.push_back(r.get_ui());
    }
    const PolyModP x{0, 1};
    // x^(p^k) == x mod m
    if (polymodp::sub(polymodp::frobenius_power(k, mbar, p), x, p) != PolyModP{}) return false;
    // gcd(x^(p^(k/q)) - x, m) == 1 for each prime q | k
    for (int q = 2; q <= k; ++q) {
        if (k % q || !is_prime(q)) continue;
        const PolyModP h = polymodp::sub(polymodp::frobenius_power(k / q, mbar, p), x, p);
        if (polymodp::gcd(h, mbar, p).size() > 1) return false;
    }
    return true;
}

std::uint64_t find_inert_prime(const MinimalPolynomial& m, std::uint64_t start, std::uint64_t search_cap) {
    std::uint64_t p = start < 2 ? 2 : start;
    for (std::uint64_t tried = 0; tried < search_cap; ++p) {
        if (!is_prime(p)) continue;
        ++tried;
        try {
            if (is_inert(m, p)) return p;
        } catch (const UnsuitablePrime&) {
        }
    }
    throw UnsuitablePrime("no inert prime found for " + m.to_string() + " within the search cap");
}

FfElement reduce_element(const FieldElement& x, const FiniteFieldPtr& target) {
    std::vector<std::uint64_t> c;
    c.reserve(x.coeffs().size());
    for (const auto& q : x.coeffs()) c.push_back(target->reduce(q));
    if (static_cast<int>(c.size()) > target->degree())
        throw FieldMismatch("element has more coefficients than the residue field degree");
    return FfElement(target, std::move(c));
}

}  // namespace nodal

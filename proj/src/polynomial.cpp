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

#include "nodal/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace nodal {

unsigned total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0u); }

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
    const unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
}

namespace {
void fill_basis(int var, int remaining, Monomial& cur, std::vector<Monomial>& out) {
    const int n = static_cast<int>(cur.size());
    if (var == n - 1) {
        cur[var] = remaining;
        out.push_back(cur);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        cur[var] = e;
        fill_basis(var + 1, remaining - e, cur, out);
    }
    cur[var] = 0;
}

void check_same_nvars(const Polynomial& a, const Polynomial& b) {
    if (a.nvars() != b.nvars()) throw ValidationError("polynomials in different numbers of variables");
}
}  // namespace

std::vector<Monomial> monomial_basis(int nvars, int degree) {
    std::vector<Monomial> out;
    if (degree < 0 || nvars <= 0) return out;
    Monomial cur(nvars, 0);
    fill_basis(0, degree, cur, out);
    return out;
}

Polynomial Polynomial::constant(int nvars, const FieldElement& c) {
    Polynomial p(nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(int nvars, int index) {
    Monomial m(nvars, 0);
    m.at(index) = 1;
    return monomial(m, FieldElement(1));
}

Polynomial Polynomial::monomial(const Monomial& m, const FieldElement& c) {
    Polynomial p(static_cast<int>(m.size()));
    p.add_term(m, c);
    return p;
}

int Polynomial::degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(total_degree(terms_.begin()->first));
}

FieldElement Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? FieldElement() : it->second;
}

FieldElement Polynomial::coefficient(unsigned e) const {
    if (nvars_ != 1) throw ValidationError("univariate coefficient requested from a multivariate polynomial");
    return coefficient(Monomial{e});
}

FieldPtr Polynomial::field() const {
    FieldPtr f;
    for (const auto& [m, c] : terms_) f = common_field(f, c.field());
    return f;
}

void Polynomial::add_term(const Monomial& m, const FieldElement& c) {
    if (static_cast<int>(m.size()) != nvars_) throw ValidationError("monomial length does not match nvars");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& b) {
    check_same_nvars(*this, b);
    for (const auto& [m, c] : b.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& b) {
    check_same_nvars(*this, b);
    for (const auto& [m, c] : b.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same_nvars(a, b);
    Polynomial r(a.nvars());
    Monomial m(a.nvars());
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            for (int i = 0; i < a.nvars(); ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    return r;
}

Polynomial operator*(const FieldElement& c, const Polynomial& p) {
    Polynomial r(p.nvars());
    for (const auto& [m, x] : p.terms_) r.add_term(m, c * x);
    return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    for (auto ib = b.terms_.begin(); ib != b.terms_.end(); ++ia, ++ib)
        if (ia->first != ib->first || !(ia->second == ib->second)) return false;
    return true;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result = constant(nvars_, FieldElement(1)), base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

FieldElement evaluate_monomial(const Monomial& m, std::span<const FieldElement> point) {
    if (m.size() != point.size()) throw ValidationError("point dimension does not match nvars");
    FieldElement v(1);
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i]) v *= point[i].pow(m[i]);
    return v;
}

FieldElement Polynomial::evaluate(std::span<const FieldElement> point) const {
    if (static_cast<int>(point.size()) != nvars_) throw ValidationError("point dimension does not match nvars");
    common_field(point);
    // Power tables per variable so each power is computed once.
    std::vector<std::vector<FieldElement>> powers(nvars_);
    for (const auto& [m, c] : terms_)
        for (int i = 0; i < nvars_; ++i) {
            auto& t = powers[i];
            if (t.empty()) t.push_back(FieldElement(1));
            while (t.size() <= m[i]) t.push_back(t.back() * point[i]);
        }
    FieldElement sum;
    for (const auto& [m, c] : terms_) {
        FieldElement v = c;
        for (int i = 0; i < nvars_; ++i)
            if (m[i]) v *= powers[i][m[i]];
        sum += v;
    }
    return sum;
}

Polynomial Polynomial::derivative(int var) const {
    if (var < 0 || var >= nvars_) throw ValidationError("derivative variable out of range");
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Monomial d = m;
        --d[var];
        r.add_term(d, FieldElement(static_cast<long>(m[var])) * c);
    }
    return r;
}

std::vector<Polynomial> Polynomial::gradient() const {
    std::vector<Polynomial> g;
    for (int i = 0; i < nvars_; ++i) g.push_back(derivative(i));
    return g;
}

Polynomial Polynomial::compose(const Polynomial& q) const {
    if (nvars_ != 1) throw ValidationError("compose needs a univariate outer polynomial");
    // Horner in descending degree.
    Polynomial r(q.nvars());
    const int deg = degree();
    for (int e = deg; e >= 0; --e) {
        r = r * q;
        r += constant(q.nvars(), coefficient(static_cast<unsigned>(e)));
    }
    return r;
}

Polynomial Polynomial::embed(int nvars, int var) const {
    if (nvars_ != 1) throw ValidationError("embed needs a univariate polynomial");
    Polynomial r(nvars);
    for (const auto& [m, c] : terms_) {
        Monomial e(nvars, 0);
        e.at(var) = m[0];
        r.add_term(e, c);
    }
    return r;
}

Polynomial Polynomial::homogenize(int deg) const {
    if (deg < degree()) throw ValidationError("homogenization degree below polynomial degree");
    Polynomial r(nvars_ + 1);
    for (const auto& [m, c] : terms_) {
        Monomial e(nvars_ + 1);
        e[0] = deg - total_degree(m);
        std::copy(m.begin(), m.end(), e.begin() + 1);
        r.add_term(e, c);
    }
    return r;
}

Polynomial Polynomial::dehomogenize(int var) const {
    if (var < 0 || var >= nvars_) throw ValidationError("dehomogenization variable out of range");
    Polynomial r(nvars_ - 1);
    for (const auto& [m, c] : terms_) {
        Monomial e;
        for (int i = 0; i < nvars_; ++i)
            if (i != var) e.push_back(m[i]);
        r.add_term(e, c);
    }
    return r;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        for (int i = 0; i < nvars_; ++i) {
            if (!m[i]) continue;
            os << "*x" << i;
            if (m[i] > 1) os << "^" << m[i];
        }
    }
    return os.str();
}

Polynomial polynomial_sqrt(const Polynomial& p) {
    if (p.nvars() != 1) throw ValidationError("polynomial_sqrt needs a univariate polynomial");
    const int deg = p.degree();
    if (deg < 0) return p;
    if (deg % 2) throw ValidationError("odd-degree polynomial has no square root");
    const FieldElement lead = p.coefficient(static_cast<unsigned>(deg));
    if (!lead.is_rational() || sgn(lead.rational_value()) <= 0)
        throw ValidationError("leading coefficient is not a positive rational");
    const Rational lq = lead.rational_value();
    Integer sn, sd;
    mpz_sqrt(sn.get_mpz_t(), lq.get_num_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), lq.get_den_mpz_t());
    if (sn * sn != lq.get_num() || sd * sd != lq.get_den())
        throw ValidationError("leading coefficient is not a rational square");
    const int d = deg / 2;
    std::vector<FieldElement> q(d + 1);
    q[d] = FieldElement(Rational(sn, sd));
    const FieldElement two_lead_inv = (FieldElement(2) * q[d]).inverse();
    for (int i = 1; i <= d; ++i) {
        FieldElement v = p.coefficient(static_cast<unsigned>(deg - i));
        for (int j = 1; j < i; ++j) v -= q[d - j] * q[d - i + j];
        q[d - i] = v * two_lead_inv;
    }
    Polynomial r(1);
    for (int e = 0; e <= d; ++e) r.add_term(Monomial{static_cast<std::uint32_t>(e)}, q[e]);
    if (!(r * r == p)) throw ValidationError("polynomial is not a perfect square");
    return r;
}

}  // namespace nodal

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

#include "nodal/chebyshev.hpp"

#include <map>
#include <mutex>
#include <string>

namespace nodal {

Polynomial chebyshev(unsigned n) {
    const Polynomial x = Polynomial::variable(1, 0);
    Polynomial prev = Polynomial::constant(1, FieldElement(1));
    if (n == 0) return prev;
    Polynomial cur = x;
    const Polynomial two_x = FieldElement(2) * x;
    for (unsigned k = 1; k < n; ++k) {
        Polynomial next = two_x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Polynomial chebyshev_closed_form(unsigned n) {
    const Polynomial x = Polynomial::variable(1, 0);
    const Polynomial one_minus_x2 = Polynomial::constant(1, FieldElement(1)) - x * x;
    Polynomial sum(1);
    for (unsigned j = 0; 2 * j <= n; ++j) {
        FieldElement c{Rational(binomial(n, 2 * j))};
        if (j % 2) c = -c;
        sum += c * (x.pow(n - 2 * j) * one_minus_x2.pow(j));
    }
    return sum;
}

Polynomial cheb_half(unsigned n) {
    if (n < 2 || n % 2) throw ValidationError("cheb_half needs an even degree n >= 2, got " + std::to_string(n));
    Polynomial p = chebyshev(n) + Polynomial::constant(1, FieldElement(1));
    const Rational scale(Integer(1), Integer(1) << (n - 1));
    Polynomial f = polynomial_sqrt(FieldElement(scale) * p);
    const Polynomial residual = chebyshev(n) + Polynomial::constant(1, FieldElement(1)) -
                                FieldElement(Rational(Integer(1) << (n - 1))) * (f * f);
    if (!residual.is_zero()) throw Error("cheb_half identity failed for n = " + std::to_string(n));
    return f;
}

const std::vector<unsigned>& supported_degrees() {
    static const std::vector<unsigned> d{2, 3, 4, 5, 6, 8};
    return d;
}

CosField cos_field(unsigned n) {
    static std::mutex mu;
    static std::map<unsigned, CosField> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
    CosField cf;
    auto half_alpha = [](const FieldPtr& f) { return FieldElement(f, {Rational(0), Rational(1, 2)}); };
    switch (n) {
        case 2: cf = {nullptr, FieldElement(0)}; break;
        case 3: cf = {nullptr, FieldElement(Rational(1, 2))}; break;
        case 4: {
            auto f = make_field({-2, 0, 1}, "Q(sqrt2)");
            cf = {f, half_alpha(f)};
            break;
        }
        case 5: {
            auto f = make_field({-5, 0, 1}, "Q(sqrt5)");
            cf = {f, FieldElement(f, {Rational(1, 4), Rational(1, 4)})};
            break;
        }
        case 6: {
            auto f = make_field({-3, 0, 1}, "Q(sqrt3)");
            cf = {f, half_alpha(f)};
            break;
        }
        case 8: {
            auto f = make_field({2, 0, -4, 0, 1}, "Q(sqrt(2+sqrt2))");
            cf = {f, FieldElement(f, {Rational(0), Rational(1, 2), Rational(0), Rational(0)})};
            break;
        }
        default:
            throw ValidationError("unsupported degree n = " + std::to_string(n) + "; supported: 2, 3, 4, 5, 6, 8");
    }
    cache.emplace(n, cf);
    return cf;
}

FieldElement cos_multiple(unsigned n, unsigned k) {
    const CosField cf = cos_field(n);
    const Polynomial tk = chebyshev(k);
    const FieldElement pt[1] = {cf.cos_pi_n};
    FieldElement v = tk.evaluate(pt);
    if (cf.field && v.field() == nullptr) v = FieldElement(cf.field, v.coeffs());
    return v;
}

ChebFactorization cheb_sum_factors(unsigned n, int sign) {
    if (n < 2) throw ValidationError("cheb_sum_factors needs n >= 2");
    if (sign != 1 && sign != -1) throw ValidationError("sign must be +1 or -1");
    const CosField cf = cos_field(n);
    const Polynomial x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
    ChebFactorization out;
    out.n = n;
    out.sign = sign;
    for (unsigned mu = (sign == 1 ? 1 : 0); mu <= n; mu += 2) {
        if (mu == 0) {
            out.factors.push_back(y - x);
        } else if (mu == n) {
            out.factors.push_back(y + x);
        } else {
            const FieldElement c = cos_multiple(n, mu);
            const FieldElement sin2 = FieldElement(1) - c * c;
            out.factors.push_back(x * x + y * y - (FieldElement(2) * c) * (x * y) -
                                  Polynomial::constant(2, sin2));
        }
        out.mu.push_back(mu);
    }
    Polynomial prod = Polynomial::constant(2, FieldElement(1));
    for (const auto& f : out.factors) prod = prod * f;
    const Polynomial tn = chebyshev(n);
    const Polynomial target = tn.embed(2, 0) + FieldElement(sign) * tn.embed(2, 1);
    const Monomial xn{n, 0};
    const FieldElement lead = prod.coefficient(xn);
    if (lead.is_zero()) throw Error("factor product has no x^n term");
    out.scalar = target.coefficient(xn) / lead;
    if (!(out.scalar * prod == target))
        throw Error("Chebyshev factorization identity failed for n = " + std::to_string(n));
    return out;
}

}  // namespace nodal

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

#include "nodal/arnold.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <mpfr.h>

#include <algorithm>
#include <cmath>

namespace nodal {

Integer arnold_number(unsigned n, unsigned d) {
    if (n < 2 || d < 2) throw ValidationError("arnold_number needs n >= 2 and d >= 2");
    // Coefficients of (x + ... + x^(d-1))^n.
    std::vector<Integer> poly{1};
    for (unsigned i = 0; i < n; ++i) {
        std::vector<Integer> next(poly.size() + d - 1, Integer(0));
        for (std::size_t e = 0; e < poly.size(); ++e) {
            if (sgn(poly[e]) == 0) continue;
            for (unsigned k = 1; k < d; ++k) next[e + k] += poly[e];
        }
        poly = std::move(next);
    }
    // 2S > (n-2)d + 2 and 2S <= nd, compared on integers.
    const long long lo = static_cast<long long>(n - 2) * d + 2, hi = static_cast<long long>(n) * d;
    Integer total = 0;
    for (std::size_t s = 0; s < poly.size(); ++s) {
        const long long two_s = 2 * static_cast<long long>(s);
        if (two_s > lo && two_s <= hi) total += poly[s];
    }
    return total;
}

Integer bruce_bound(unsigned n, unsigned d) {
    if (n < 2 || d < 2) throw ValidationError("bruce_bound needs n >= 2 and d >= 2");
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), d - 1, n);
    Integer num, den;
    if (n % 2 == 0) {
        num = p * (d + 1) + (d - 1);
        den = 2 * d;
    } else if (d % 2 == 1) {
        num = p;
        den = 2;
    } else {
        num = p * (d + 1) + 1;
        den = 2 * d;
    }
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

std::optional<Integer> miyaoka_bound(unsigned d) {
    if (d < 3) return std::nullopt;
    Integer num = Integer(4) * d * (d - 1) * (d - 1), q;
    mpz_fdiv_q_ui(q.get_mpz_t(), num.get_mpz_t(), 9);
    return q;
}

std::vector<BoundsRow> mu3_upper_row(unsigned d_min, unsigned d_max) {
    std::vector<BoundsRow> rows;
    for (unsigned d = std::max(2u, d_min); d <= d_max; ++d) {
        BoundsRow r;
        r.n = 3;
        r.d = d;
        r.arnold = arnold_number(3, d);
        r.bruce = bruce_bound(3, d);
        r.miyaoka = miyaoka_bound(d);
        r.combined_upper = r.miyaoka ? std::min(r.arnold, *r.miyaoka) : r.arnold;
        if (r.miyaoka && *r.miyaoka < r.arnold) r.source = "miyaoka";
        else r.source = "arnold";
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<BoundsRow> mu4_rows(unsigned d_min, unsigned d_max) {
    std::vector<BoundsRow> rows;
    for (unsigned d = std::max(2u, d_min); d <= d_max; ++d) {
        BoundsRow r;
        r.n = 4;
        r.d = d;
        r.arnold = arnold_number(4, d);
        r.bruce = bruce_bound(4, d);
        r.combined_upper = std::min(r.arnold, r.bruce);
        r.source = r.bruce < r.arnold ? "bruce" : "arnold";
        rows.push_back(std::move(r));
    }
    return rows;
}

Rational chmutov_density(unsigned n) {
    if (n < 1) throw ValidationError("chmutov_density needs n >= 1");
    Rational c(binomial(n, n / 2), Integer(1) << n);
    c.canonicalize();
    return c;
}

Rational cube_slice_volume(unsigned n, const Rational& t) {
    Rational sum = 0;
    for (unsigned k = 0; k <= n; ++k) {
        const Rational x = t - k;
        if (sgn(x) <= 0) break;
        Rational term = Rational(binomial(n, k)) * pow(x, n);
        if (k % 2) sum -= term;
        else sum += term;
    }
    Rational r = sum / Rational(factorial(n));
    r.canonicalize();
    return r;
}

Rational slab_volume(unsigned n) {
    if (n < 2) throw ValidationError("slab_volume needs n >= 2");
    Rational hi(n, 2), lo(n - 2, 2);
    hi.canonicalize();
    lo.canonicalize();
    return cube_slice_volume(n, hi) - cube_slice_volume(n, lo);
}

double slab_volume_quadrature(unsigned n) {
    using boost::math::quadrature::gauss_kronrod;
    const double pi = std::acos(-1.0);
    const unsigned e = n + 2;
    auto f = [e](double x) { return x == 0 ? 1.0 : std::pow(std::sin(x) / x, static_cast<int>(e)); };
    // Integrate period by period; the tail beyond X is below X^-(n+1)/(n+1).
    const double x_max = 400 * pi;
    double total = 0;
    for (double lo = 0; lo < x_max; lo += pi) total += gauss_kronrod<double, 31>::integrate(f, lo, lo + pi, 8, 1e-12);
    return 2.0 / pi * (n + 1.0) / (n + 2.0) * total;
}

namespace {
class Mpfr {
public:
    Mpfr() { mpfr_init2(v_, 256); }
    ~Mpfr() { mpfr_clear(v_); }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;
    mpfr_ptr get() { return v_; }

    void set(const Rational& q) { mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN); }
    std::string str(int digits = 50) {
        char* buf = nullptr;
        mpfr_asprintf(&buf, "%.*Rg", digits, v_);
        std::string s(buf);
        mpfr_free_str(buf);
        return s;
    }

private:
    mpfr_t v_;
};

// sqrt(n) * q into out.
void scaled(Mpfr& out, unsigned n, const Rational& q) {
    Mpfr root;
    mpfr_sqrt_ui(root.get(), n, MPFR_RNDN);
    out.set(q);
    mpfr_mul(out.get(), out.get(), root.get(), MPFR_RNDN);
}

// sqrt(k / pi)
void limit(Mpfr& out, unsigned k) {
    Mpfr pi;
    mpfr_const_pi(pi.get(), MPFR_RNDN);
    mpfr_ui_div(out.get(), k, pi.get(), MPFR_RNDN);
    mpfr_sqrt(out.get(), out.get(), MPFR_RNDN);
}
}  // namespace

AsymptoticReport asymptotic_check(unsigned n_max) {
    if (n_max < 10) throw ValidationError("asymptotic_check needs n_max >= 10");
    AsymptoticReport rep;
    Mpfr la, lc;
    limit(la, 6);
    limit(lc, 2);
    rep.limit_a = la.str();
    rep.limit_c = lc.str();
    rep.a_strictly_decreasing = true;
    for (unsigned n = 2; n <= n_max; ++n) {
        AsymptoticEntry e;
        e.n = n;
        e.a = slab_volume(n);
        e.c = chmutov_density(n);
        Mpfr sa, sc, dev;
        scaled(sa, n, e.a);
        scaled(sc, n, e.c);
        e.sqrt_n_a = sa.str();
        e.sqrt_n_c = sc.str();
        mpfr_sub(dev.get(), sa.get(), la.get(), MPFR_RNDN);
        mpfr_div(dev.get(), dev.get(), la.get(), MPFR_RNDN);
        e.rel_dev_a = mpfr_get_d(dev.get(), MPFR_RNDN);
        mpfr_sub(dev.get(), sc.get(), lc.get(), MPFR_RNDN);
        mpfr_div(dev.get(), dev.get(), lc.get(), MPFR_RNDN);
        e.rel_dev_c = mpfr_get_d(dev.get(), MPFR_RNDN);
        if (n >= 4 && !rep.entries.empty() && !(e.a < rep.entries.back().a)) rep.a_strictly_decreasing = false;
        rep.entries.push_back(std::move(e));
    }
    rep.deviations_shrink = true;
    for (std::size_t i = rep.entries.size() - 10; i + 1 < rep.entries.size(); ++i)
        if (std::fabs(rep.entries[i + 1].rel_dev_a) > std::fabs(rep.entries[i].rel_dev_a))
            rep.deviations_shrink = false;
    return rep;
}

}  // namespace nodal

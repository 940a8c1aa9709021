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

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

namespace nodal {

class LpOverflow : public Error {
public:
    LpOverflow() : Error("int64 rational overflow") {}
};

/// Rational with 64-bit numerator and denominator. Every operation is
/// checked and throws LpOverflow instead of wrapping, so callers can retry
/// with mpq_class.
class SmallRational {
public:
    SmallRational() = default;
    SmallRational(std::int64_t v) : n_(v) {}  // NOLINT(implicit)
    SmallRational(std::int64_t n, std::int64_t d) { *this = make(n, d); }

    static SmallRational from(const Rational& q) {
        if (!q.get_num().fits_slong_p() || !q.get_den().fits_slong_p()) throw LpOverflow();
        SmallRational r;
        r.n_ = q.get_num().get_si();
        r.d_ = q.get_den().get_si();
        return r;
    }
    Rational to_rational() const { return Rational(Integer(static_cast<long>(n_)), Integer(static_cast<long>(d_))); }

    int sign() const { return (n_ > 0) - (n_ < 0); }

    friend SmallRational operator+(const SmallRational& a, const SmallRational& b) {
        if (a.d_ == b.d_) return make128(static_cast<__int128>(a.n_) + b.n_, a.d_);
        return make128(static_cast<__int128>(a.n_) * b.d_ + static_cast<__int128>(b.n_) * a.d_,
                       static_cast<__int128>(a.d_) * b.d_);
    }
    friend SmallRational operator-(const SmallRational& a, const SmallRational& b) {
        if (a.d_ == b.d_) return make128(static_cast<__int128>(a.n_) - b.n_, a.d_);
        return make128(static_cast<__int128>(a.n_) * b.d_ - static_cast<__int128>(b.n_) * a.d_,
                       static_cast<__int128>(a.d_) * b.d_);
    }
    friend SmallRational operator*(const SmallRational& a, const SmallRational& b) {
        if (a.n_ == 0 || b.n_ == 0) return {};
        return make128(static_cast<__int128>(a.n_) * b.n_, static_cast<__int128>(a.d_) * b.d_);
    }
    friend SmallRational operator/(const SmallRational& a, const SmallRational& b) {
        if (b.n_ == 0) throw Error("division by zero");
        return make128(static_cast<__int128>(a.n_) * b.d_, static_cast<__int128>(a.d_) * b.n_);
    }
    SmallRational operator-() const {
        if (n_ == INT64_MIN) throw LpOverflow();
        SmallRational r = *this;
        r.n_ = -n_;
        return r;
    }
    friend bool operator==(const SmallRational& a, const SmallRational& b) { return a.n_ == b.n_ && a.d_ == b.d_; }
    friend bool operator<(const SmallRational& a, const SmallRational& b) {
        return static_cast<__int128>(a.n_) * b.d_ < static_cast<__int128>(b.n_) * a.d_;
    }

private:
    std::int64_t n_ = 0, d_ = 1;

    static __int128 gcd128(__int128 a, __int128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }
    static SmallRational make128(__int128 n, __int128 d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        if (n == 0) return {};
        const __int128 g = gcd128(n, d);
        n /= g;
        d /= g;
        if (n > INT64_MAX || n < -INT64_MAX || d > INT64_MAX) throw LpOverflow();
        SmallRational r;
        r.n_ = static_cast<std::int64_t>(n);
        r.d_ = static_cast<std::int64_t>(d);
        return r;
    }
    static SmallRational make(std::int64_t n, std::int64_t d) {
        if (d == 0) throw Error("zero denominator");
        return make128(n, d);
    }
};

inline int scalar_sign(const SmallRational& x) { return x.sign(); }
inline int scalar_sign(const Rational& x) { return sgn(x); }

/// Finds x >= 0 with A x = b, or reports infeasibility, by the phase-1
/// simplex method on a full tableau with artificial variables and Bland's
/// anti-cycling rule. Exact for exact scalar types.
template <class S>
std::optional<std::vector<S>> simplex_feasible(const std::vector<std::vector<S>>& a, const std::vector<S>& b) {
    const std::size_t m = a.size();
    const std::size_t n = m ? a[0].size() : 0;
    const std::size_t width = n + m + 1;  // original, artificial, rhs
    std::vector<std::vector<S>> t(m, std::vector<S>(width));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        const bool neg = scalar_sign(b[i]) < 0;
        for (std::size_t j = 0; j < n; ++j) t[i][j] = neg ? S(-a[i][j]) : a[i][j];
        t[i][n + i] = S(1);
        t[i][width - 1] = neg ? S(-b[i]) : b[i];
        basis[i] = n + i;
    }
    // Reduced costs of the phase-1 objective (sum of artificials).
    std::vector<S> cost(width);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < width; ++j)
            if (j < n || j == width - 1) cost[j] = cost[j] - t[i][j];
    while (true) {
        std::size_t enter = width;
        for (std::size_t j = 0; j + 1 < width; ++j)
            if (scalar_sign(cost[j]) < 0) {
                enter = j;
                break;
            }
        if (enter == width) break;
        std::size_t leave = m;
        S best;
        for (std::size_t i = 0; i < m; ++i) {
            if (scalar_sign(t[i][enter]) <= 0) continue;
            const S ratio = t[i][width - 1] / t[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) break;
        const S piv = t[leave][enter];
        for (auto& v : t[leave]) v = v / piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || scalar_sign(t[i][enter]) == 0) continue;
            const S f = t[i][enter];
            for (std::size_t j = 0; j < width; ++j)
                if (scalar_sign(t[leave][j]) != 0) t[i][j] = t[i][j] - f * t[leave][j];
        }
        if (scalar_sign(cost[enter]) != 0) {
            const S f = cost[enter];
            for (std::size_t j = 0; j < width; ++j)
                if (scalar_sign(t[leave][j]) != 0) cost[j] = cost[j] - f * t[leave][j];
        }
        basis[leave] = enter;
    }
    // Phase-1 optimum is -cost[rhs]; feasible iff it is zero.
    if (scalar_sign(cost[width - 1]) != 0) return std::nullopt;
    std::vector<S> x(n);
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n) x[basis[i]] = t[i][width - 1];
    return x;
}

}  // namespace nodal

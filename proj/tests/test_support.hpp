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

// Shared helpers and independent oracles for the test binaries.

#pragma once

#include "nodal/reslattice.hpp"

#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace nodal::testing {

inline std::mt19937_64& rng() {
    static std::mt19937_64 g(20260417);
    return g;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline Rational random_rational(long num_range = 9, long den_max = 5) {
    Rational q(uniform(-num_range, num_range), uniform(1, den_max));
    q.canonicalize();
    return q;
}

inline FieldElement random_element(const FieldPtr& f, long num_range = 9, long den_max = 5) {
    if (!f) return random_rational(num_range, den_max);
    std::vector<Rational> c;
    for (int i = 0; i < f->degree(); ++i) c.push_back(random_rational(num_range, den_max));
    return FieldElement(f, c);
}

inline std::vector<std::vector<Rational>> random_int_rows(std::size_t k, std::size_t s, long lo, long hi) {
    std::vector<std::vector<Rational>> rows(k, std::vector<Rational>(s));
    for (auto& r : rows)
        for (auto& x : r) x = uniform(lo, hi);
    return rows;
}

/// Fourier-Motzkin decision of: exists lambda with lambda^T M >= 1 columnwise.
/// Each inequality is a.lambda >= b; variables are eliminated one at a time.
inline bool fm_strictly_positive_rowspace(const std::vector<std::vector<Rational>>& rows) {
    const std::size_t k = rows.size();
    const std::size_t s = k ? rows[0].size() : 0;
    using Ineq = std::pair<std::vector<Rational>, Rational>;
    auto normalize = [](Ineq q) {
        Rational scale = 0;
        for (const auto& a : q.first)
            if (sgn(a) != 0) {
                scale = abs(a);
                break;
            }
        if (sgn(scale) == 0) return q;
        for (auto& a : q.first) a /= scale;
        q.second /= scale;
        return q;
    };
    auto key = [](const Ineq& q) {
        std::string s;
        for (const auto& a : q.first) s += a.get_str() + ",";
        return s + "|" + q.second.get_str();
    };
    std::vector<Ineq> sys;
    for (std::size_t j = 0; j < s; ++j) {
        std::vector<Rational> a(k);
        for (std::size_t i = 0; i < k; ++i) a[i] = rows[i][j];
        sys.push_back(normalize({a, Rational(1)}));
    }
    for (std::size_t t = 0; t < k; ++t) {
        std::vector<Ineq> pos, neg, next;
        for (auto& q : sys) {
            const int sg = sgn(q.first[t]);
            (sg > 0 ? pos : sg < 0 ? neg : next).push_back(q);
        }
        for (const auto& p : pos)
            for (const auto& n : neg) {
                const Rational cp = -n.first[t], cn = p.first[t];
                Ineq c{std::vector<Rational>(k), cp * p.second + cn * n.second};
                for (std::size_t i = 0; i < k; ++i) c.first[i] = cp * p.first[i] + cn * n.first[i];
                next.push_back(normalize(c));
            }
        std::map<std::string, Ineq> uniq;
        for (auto& q : next) uniq.emplace(key(q), q);
        sys.clear();
        for (auto& [_, q] : uniq) sys.push_back(q);
    }
    for (const auto& q : sys)
        if (sgn(q.second) > 0) return false;  // 0 >= b > 0
    return true;
}

/// Projective flips by brute force over all 2^s sign vectors.
inline long fm_count(const std::vector<std::vector<Rational>>& rows) {
    const std::size_t s = rows.empty() ? 0 : rows[0].size();
    long count = 0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << s); ++bits) {
        auto f = rows;
        for (std::size_t j = 0; j < s; ++j)
            if (bits >> j & 1)
                for (auto& r : f) r[j] = -r[j];
        if (fm_strictly_positive_rowspace(f)) ++count;
    }
    return count;
}

}  // namespace nodal::testing

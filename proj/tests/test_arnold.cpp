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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nodal/arnold.hpp"

#include <cmath>

using namespace nodal;

namespace {

long brute_a3(long d) {
    long count = 0;
    for (long a = 1; a < d; ++a)
        for (long b = 1; b < d; ++b)
            for (long c = 1; c < d; ++c) {
                const long twice = 2 * (a + b + c);
                if (d + 2 < twice && twice <= 3 * d) ++count;
            }
    return count;
}

long brute_a4(long d) {
    long count = 0;
    for (long a = 1; a < d; ++a)
        for (long b = 1; b < d; ++b)
            for (long c = 1; c < d; ++c)
                for (long e = 1; e < d; ++e) {
                    const long twice = 2 * (a + b + c + e);
                    if (2 * d + 2 < twice && twice <= 4 * d) ++count;
                }
    return count;
}

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("arnold_number examples") {
    CHECK(arnold_number(4, 4) == 45);
    CHECK(arnold_number(4, 5) == 135);
    CHECK(arnold_number(3, 9) == 246);
    CHECK(arnold_number(3, 11) == 480);
    CHECK(arnold_number(4, 3) == 10);
    std::vector<Integer> a4;
    for (unsigned d = 2; d <= 5; ++d) a4.push_back(arnold_number(4, d));
    CHECK(a4 == ints({1, 10, 45, 135}));
}

TEST_CASE("arnold_number matches brute force") {
    for (long d = 2; d <= 12; ++d) CHECK(arnold_number(3, static_cast<unsigned>(d)) == brute_a3(d));
    for (long d = 2; d <= 9; ++d) CHECK(arnold_number(4, static_cast<unsigned>(d)) == brute_a4(d));
}

TEST_CASE("bruce and miyaoka examples") {
    CHECK(bruce_bound(4, 3) == 11);
    CHECK(bruce_bound(4, 5) == 154);
    CHECK(bruce_bound(4, 2) == 1);
    CHECK(miyaoka_bound(6) == Integer(66));
    CHECK(miyaoka_bound(8) == Integer(174));
    CHECK(miyaoka_bound(12) == Integer(645));
    CHECK_FALSE(miyaoka_bound(2).has_value());
    for (unsigned d = 3; d <= 40; ++d) {
        // floor(4 d (d-1)^2 / 9) by integer division.
        const long v = 4L * d * (d - 1) * (d - 1) / 9;
        CHECK(miyaoka_bound(d) == Integer(v));
    }
}

TEST_CASE("bruce dominates arnold for n = 4") {
    for (unsigned d = 2; d <= 10; ++d) CHECK(bruce_bound(4, d) >= arnold_number(4, d));
}

TEST_CASE("mu3 combined upper row") {
    const auto rows = mu3_upper_row(2, 12);
    std::vector<Integer> upper;
    for (const auto& r : rows) {
        upper.push_back(r.combined_upper);
        Integer m = r.arnold;
        if (r.miyaoka && *r.miyaoka < m) m = *r.miyaoka;
        CHECK(r.combined_upper == m);
        CHECK(r.n == 3);
    }
    CHECK(upper == ints({1, 4, 16, 31, 66, 104, 174, 246, 360, 480, 645}));
    CHECK(rows[5].combined_upper == 104);
    CHECK(rows[3].combined_upper == 31);
}

TEST_CASE("mu4 rows") {
    const auto rows = mu4_rows(2, 5);
    std::vector<Integer> a, b, c;
    for (const auto& r : rows) {
        a.push_back(r.arnold);
        b.push_back(r.bruce);
        c.push_back(r.combined_upper);
    }
    CHECK(a == ints({1, 10, 45, 135}));
    CHECK(b == ints({1, 11, 51, 154}));
    CHECK(c == ints({1, 10, 45, 135}));
}

TEST_CASE("chmutov density") {
    CHECK(chmutov_density(1) == Rational(1, 2));
    CHECK(chmutov_density(3) == Rational(3, 8));
    CHECK(chmutov_density(4) == Rational(3, 8));
}

TEST_CASE("slab volumes") {
    CHECK(slab_volume(2) == Rational(1, 2));
    CHECK(slab_volume(3) == Rational(23, 48));
    CHECK(slab_volume(4) == Rational(11, 24));
    for (unsigned n = 1; n <= 12; ++n) {
        CHECK(cube_slice_volume(n, Rational(n)) == 1);
        CHECK(cube_slice_volume(n, Rational(0)) == 0);
        // Symmetry x -> 1 - x: Vol{sum <= t} + Vol{sum <= n - t} = 1.
        CHECK(cube_slice_volume(n, Rational(n, 3)) + cube_slice_volume(n, Rational(2 * n, 3)) == 1);
    }
    for (unsigned n = 2; n <= 40; ++n) CHECK(chmutov_density(n) <= slab_volume(n));
    for (unsigned n = 3; n < 30; ++n) CHECK(slab_volume(n + 1) < slab_volume(n));
}

TEST_CASE("A_n(d) / d^n approaches a_n") {
    for (unsigned n : {3u, 4u}) {
        const Rational a = slab_volume(n);
        for (unsigned d = 2; d <= 200; d += (d < 20 ? 1 : 9)) {
            const Rational ratio(arnold_number(n, d), pow(Rational(d), n).get_num());
            CHECK_MESSAGE(abs(ratio - a) <= Rational(2 * n, d), "n=" << n << " d=" << d);
        }
    }
}

TEST_CASE("quadrature cross-check") {
    for (unsigned n : {2u, 3u, 4u, 6u, 10u}) {
        const double exact = slab_volume(n).get_d();
        CHECK(std::abs(slab_volume_quadrature(n) - exact) < 1e-7);
    }
}

TEST_CASE("asymptotics") {
    const auto r = asymptotic_check(50);
    CHECK(r.limit_a.substr(0, 7) == "1.38197");
    CHECK(r.limit_c.substr(0, 7) == "0.79788");
    const double la = std::sqrt(6 / M_PI), lc = std::sqrt(2 / M_PI);
    bool saw49 = false, saw50 = false;
    for (const auto& e : r.entries) {
        CHECK(e.a == slab_volume(e.n));
        CHECK(e.c == chmutov_density(e.n));
        if (e.n == 49) {
            saw49 = true;
            CHECK(std::abs(std::sqrt(49.0) * e.a.get_d() - la) / la < 0.05);
            CHECK(std::abs(e.rel_dev_a) < 0.05);
        }
        if (e.n == 50) {
            saw50 = true;
            CHECK(std::abs(std::sqrt(50.0) * e.c.get_d() - lc) / lc < 0.02);
            CHECK(std::abs(e.rel_dev_c) < 0.02);
        }
    }
    CHECK(saw49);
    CHECK(saw50);
    CHECK(r.a_strictly_decreasing);
    CHECK_THROWS(asymptotic_check(9));
}

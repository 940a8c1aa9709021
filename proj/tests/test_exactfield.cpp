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

#include "nodal/matrix.hpp"
#include "test_support.hpp"

#include <algorithm>
#include <numeric>

using namespace nodal;
using nodal::testing::random_element;
using nodal::testing::random_rational;
using nodal::testing::rng;
using nodal::testing::uniform;

namespace {

FieldPtr sqrt2() { return make_field({-2, 0, 1}, "sqrt2"); }
FieldPtr sqrt5() { return make_field({-5, 0, 1}, "sqrt5"); }
FieldPtr octic() { return make_field({2, 0, -4, 0, 1}, "cos8"); }

Matrix<FieldElement> random_matrix(const FieldPtr& f, std::size_t r, std::size_t c, double zero_prob = 0.3) {
    Matrix<FieldElement> m(r, c);
    std::bernoulli_distribution zero(zero_prob);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = zero(rng()) ? FieldElement() : random_element(f);
    return m;
}

// Low-rank matrix: product of r x k and k x c random factors.
Matrix<FieldElement> low_rank(const FieldPtr& f, std::size_t r, std::size_t c, std::size_t k) {
    const auto a = random_matrix(f, r, k, 0.0), b = random_matrix(f, k, c, 0.0);
    Matrix<FieldElement> m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            FieldElement s;
            for (std::size_t t = 0; t < k; ++t) s += a(i, t) * b(t, j);
            m(i, j) = s;
        }
    return m;
}

bool legendre_nonresidue_by_search(long q, long p) {
    const long r = ((q % p) + p) % p;
    for (long x = 0; x < p; ++x)
        if (x * x % p == r) return false;
    return true;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-4") == Rational(-4));
    CHECK(nodal::to_string(Rational(6) / -4) == "-3/2");
    CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
    CHECK_THROWS_AS(parse_rational("abc"), ValidationError);
}

TEST_CASE("minimal polynomial validation") {
    CHECK_THROWS_AS(MinimalPolynomial({1, 2}), ValidationError);          // not monic
    CHECK_THROWS_AS(MinimalPolynomial({1, -2, 1}), ValidationError);      // (x-1)^2
    CHECK_THROWS_AS(MinimalPolynomial({-4, 0, 1}), ValidationError);      // rational root 2
    CHECK_NOTHROW(MinimalPolynomial({2, 0, -4, 0, 1}));
    CHECK(MinimalPolynomial({-2, 0, 1}).discriminant() == 8);
}

TEST_CASE("field arithmetic examples") {
    const auto f2 = sqrt2();
    const auto a = FieldElement::generator(f2);
    CHECK(a * a == FieldElement(2));

    const auto f5 = sqrt5();
    const auto r5 = FieldElement::generator(f5);
    const FieldElement x = (r5 + 1) * Rational(1, 4), y = (FieldElement(1) - r5) * Rational(1, 4);
    CHECK(x + y == FieldElement(Rational(1, 2)));

    const auto f8 = octic();
    const auto b = FieldElement::generator(f8);
    const FieldElement t = b * b - 2;
    CHECK(t * t == FieldElement(2));
    CHECK_FALSE(t.is_rational());
}

TEST_CASE("field arithmetic round trips") {
    for (const auto& f : {FieldPtr(), sqrt2(), sqrt5(), octic()}) {
        for (int i = 0; i < 200; ++i) {
            const FieldElement a = random_element(f), b = random_element(f);
            CHECK((a + b) - b == a);
            if (!a.is_zero()) CHECK(a * a.inverse() == FieldElement(1));
            CHECK(a * b == b * a);
        }
    }
    CHECK_THROWS(FieldElement().inverse());
    CHECK_THROWS_AS(FieldElement::generator(sqrt2()) + FieldElement::generator(sqrt5()), FieldMismatch);
}

TEST_CASE("is_inert examples") {
    const MinimalPolynomial x2m2({-2, 0, 1}), oct({2, 0, -4, 0, 1});
    CHECK(is_inert(x2m2, 181));
    CHECK(is_inert(oct, 181));
    CHECK_FALSE(is_inert(x2m2, 7));
    CHECK(is_inert(MinimalPolynomial({-3, 0, 1}), 173));
    CHECK(is_inert(MinimalPolynomial({-5, 0, 1}), 173));
    CHECK_THROWS_AS(is_inert(x2m2, 2), UnsuitablePrime);
    CHECK_THROWS_AS(is_inert(x2m2, 15), UnsuitablePrime);
}

TEST_CASE("find_inert_prime examples") {
    CHECK(find_inert_prime(MinimalPolynomial({-5, 0, 1}), 170) == 173);
    CHECK(find_inert_prime(MinimalPolynomial({-3, 0, 1}), 170) == 173);
    CHECK(find_inert_prime(MinimalPolynomial({-2, 0, 1}), 2) == 3);
    CHECK_THROWS_AS(find_inert_prime(MinimalPolynomial({-2, 0, 1}), 1000, 0), UnsuitablePrime);
}

TEST_CASE("is_inert agrees with exhaustive square search on x^2 - q") {
    std::vector<long> primes;
    for (long p = 3; p < 400; p += 2)
        if (is_prime(static_cast<std::uint64_t>(p))) primes.push_back(p);
    const std::vector<long> qs = {2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 19, 21, 22, 23};
    int checked = 0;
    while (checked < 200) {
        const long q = qs[uniform(0, static_cast<long>(qs.size()) - 1)];
        const long p = primes[uniform(0, static_cast<long>(primes.size()) - 1)];
        if (q % p == 0) continue;
        const MinimalPolynomial m({-q, 0, 1});
        CHECK_MESSAGE(is_inert(m, p) == legendre_nonresidue_by_search(q, p), "q=" << q << " p=" << p);
        ++checked;
    }
}

TEST_CASE("reduce_matrix examples") {
    const auto f = sqrt2();
    const auto ff = residue_field(f, 181);
    Matrix<FieldElement> z(2, 3);
    const auto rz = reduce_matrix(z, ff);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(rz(i, j).is_zero());

    Matrix<FieldElement> half(1, 1, FieldElement(Rational(1, 2)));
    const auto rh = reduce_matrix(half, ff);
    CHECK(rh(0, 0) == FfElement(ff, {91}));

    Matrix<FieldElement> gen(1, 1, FieldElement::generator(f));
    CHECK(reduce_matrix(gen, ff)(0, 0) == FfElement(ff, {0, 1}));

    Matrix<FieldElement> bad(1, 1, FieldElement(Rational(1, 181)));
    CHECK_THROWS_AS(reduce_matrix(bad, ff), UnsuitablePrime);
}

TEST_CASE("rank examples") {
    for (std::size_t k : {1u, 3u, 7u}) {
        Matrix<Rational> id(k, k, Rational(0));
        for (std::size_t i = 0; i < k; ++i) id(i, i) = 1;
        CHECK(rank(id) == k);
    }
    const std::vector<std::vector<Rational>> kummer = {
        {1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},     {-1, -1, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0},
        {1, 0, 1, 0, 0, 0, -1, 0, 0, 0, 1, 1, 1, 0, 0, 0},    {-1, 0, 0, -1, 0, 0, 0, 1, 0, 0, -1, 0, 0, 1, 1, 0},
        {1, 0, 0, 0, 1, 0, 0, 0, -1, 0, 0, 1, 0, -1, 0, 1},   {-1, 0, 0, 0, 0, -1, 0, 0, 0, 1, 0, 0, -1, 0, 1, 1}};
    CHECK(rank(Matrix<Rational>(kummer)) == 6);
    // Five rows summing to zero: rank 4 (second elimination order agrees).
    const std::vector<std::vector<Rational>> cubic = {{1, 1, 0, 1, 0, 0, 1, 0, 0},
                                                      {1, 0, 1, 0, 1, 1, 0, 0, 0},
                                                      {-1, 0, 0, -1, -1, 0, 0, 0, -1},
                                                      {-1, -1, -1, 0, 0, 0, 0, -1, 0},
                                                      {0, 0, 0, 0, 0, -1, -1, 1, 1}};
    CHECK(rank(Matrix<Rational>(cubic)) == 4);
    CHECK(rank_gauss(transpose(Matrix<Rational>(cubic))) == 4);
    CHECK(rank(Matrix<Rational>()) == 0);
}

TEST_CASE("fraction-free rank equals Gauss-Jordan rank") {
    for (const auto& f : {FieldPtr(), sqrt2(), octic()}) {
        for (int t = 0; t < 40; ++t) {
            const std::size_t r = uniform(1, 8), c = uniform(1, 8), k = uniform(0, 5);
            const auto m = (t % 2) ? random_matrix(f, r, c) : low_rank(f, r, c, k);
            CHECK(rank(m) == rank_gauss(m));
            CHECK(rank(m) == rref(m).pivots.size());
        }
    }
}

TEST_CASE("rank invariances") {
    for (const auto& f : {FieldPtr(), sqrt2(), sqrt5(), octic()}) {
        for (int t = 0; t < 30; ++t) {
            const std::size_t r = uniform(2, 7), c = uniform(2, 7);
            const auto m = low_rank(f, r, c, uniform(1, 5));
            const std::size_t base = rank(m);
            CHECK(rank(transpose(m)) == base);
            std::vector<std::size_t> rp(r), cp(c);
            std::iota(rp.begin(), rp.end(), 0);
            std::iota(cp.begin(), cp.end(), 0);
            std::shuffle(rp.begin(), rp.end(), rng());
            std::shuffle(cp.begin(), cp.end(), rng());
            Matrix<FieldElement> p(r, c);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j) p(i, j) = m(rp[i], cp[j]);
            CHECK(rank(p) == base);
            Matrix<FieldElement> s = m;
            const std::size_t row = uniform(0, static_cast<long>(r) - 1);
            FieldElement lambda;
            while (lambda.is_zero()) lambda = random_element(f);
            for (std::size_t j = 0; j < c; ++j) s(row, j) = s(row, j) * lambda;
            CHECK(rank(s) == base);
        }
    }
}

TEST_CASE("modular rank never exceeds exact rank") {
    const auto f = sqrt2();
    const auto ff = residue_field(f, 181);
    const auto f8 = octic();
    const auto ff8 = residue_field(f8, 181);
    for (int t = 0; t < 40; ++t) {
        const auto m = low_rank(f, uniform(1, 7), uniform(1, 7), uniform(1, 4));
        CHECK(rank(reduce_matrix(m, ff)) <= rank(m));
        const auto m8 = random_matrix(f8, uniform(1, 6), uniform(1, 6));
        CHECK(rank(reduce_matrix(m8, ff8)) <= rank(m8));
    }
    // Entries divisible by p collapse: rank drops to zero.
    Matrix<FieldElement> m(2, 2, FieldElement(181));
    m(0, 1) = FieldElement(0);
    CHECK(rank(m) == 2);
    CHECK(rank(reduce_matrix(m, ff)) == 0);
}

TEST_CASE("finite field arithmetic") {
    const auto ff = residue_field(octic(), 181);
    for (int t = 0; t < 100; ++t) {
        std::vector<std::uint64_t> c(4);
        for (auto& x : c) x = static_cast<std::uint64_t>(uniform(0, 180));
        const FfElement a(ff, c);
        if (!a.is_zero()) CHECK(a * a.inverse() == FfElement(ff, {1}));
    }
}

TEST_CASE("nullspace is orthogonal to the rows") {
    for (int t = 0; t < 30; ++t) {
        const auto m = low_rank(nullptr, uniform(1, 6), uniform(1, 8), uniform(1, 4));
        const auto ns = nullspace(m, FieldElement(), FieldElement(1));
        CHECK(ns.size() + rank(m) == m.cols());
        for (const auto& v : ns)
            for (std::size_t i = 0; i < m.rows(); ++i) {
                FieldElement dot;
                for (std::size_t j = 0; j < m.cols(); ++j) dot += m(i, j) * v[j];
                CHECK(dot.is_zero());
            }
    }
}

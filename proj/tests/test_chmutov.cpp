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

#include "nodal/chebyshev.hpp"
#include "nodal/chmutov.hpp"

#include <set>

using namespace nodal;

namespace {

constexpr auto P4 = VarietyKind::HypersurfaceP4;
constexpr auto DS = VarietyKind::DoubleSolidP3;

// Brute-force count straight from T_n(cos(k pi/n)) = (-1)^k: a tuple is a
// node when the signed extremal values cancel.
long count_by_census(VarietyKind kind, unsigned n, const SignPattern& sp) {
    const int m = affine_dim(kind);
    long count = 0;
    std::vector<unsigned> k(m, 1);
    while (true) {
        long sum = sp.constant;
        for (int j = 0; j < m; ++j) sum += sp.signs[j] * (k[j] % 2 ? -1 : 1);
        if (sum == 0) ++count;
        int j = m - 1;
        while (j >= 0 && k[j] == n - 1) k[j--] = 1;
        if (j < 0) break;
        ++k[j];
    }
    return count;
}

struct Row {
    VarietyKind kind;
    unsigned n;
    SignPattern sp;
    long expected;
};

const std::vector<Row>& table() {
    static const std::vector<Row> rows = {
        {P4, 3, {{1, 1, 1, 1}, 0}, 6},
        {P4, 4, {{1, 1, 1, 1}, 0}, 24},
        {P4, 4, {{1, 1, -1, -1}, 0}, 33},
        {P4, 4, {{1, 1, 1, -1}, 0}, 30},
        {P4, 5, {{1, 1, 1, 1}, 0}, 96},
        {DS, 4, {{1, 1, 1}, 1}, 12},
        {DS, 6, {{1, 1, 1}, 1}, 54},
        {DS, 6, {{1, 1, 1}, -1}, 36},
        {DS, 6, {{1, 1, -1}, 1}, 51},
        {DS, 6, {{1, -1, -1}, 1}, 44},
        {DS, 8, {{1, 1, 1}, 1}, 144},
        {DS, 8, {{1, 1, 1}, -1}, 108},
        {DS, 8, {{1, 1, -1}, 1}, 136},
        {DS, 8, {{1, -1, -1}, 1}, 123},
    };
    return rows;
}

Node affine_node(std::vector<FieldElement> affine) {
    Node p;
    p.coords.push_back(FieldElement(1));
    for (auto& x : affine) p.coords.push_back(x);
    return p;
}

}  // namespace

TEST_CASE("chmutov_variety examples") {
    const auto cubic = chmutov_variety(P4, 3, {{1, 1, 1, 1}, 0});
    Polynomial expected(4);
    for (int j = 0; j < 4; ++j) expected += chebyshev(3).embed(4, j);
    CHECK(cubic.defining == expected.homogenize(3));
    CHECK(cubic.field == nullptr);

    const auto ds = chmutov_variety(DS, 6, {{1, 1, -1}, 1});
    Polynomial e6 = chebyshev(6).embed(3, 0) + chebyshev(6).embed(3, 1) - chebyshev(6).embed(3, 2) +
                    Polynomial::constant(3, FieldElement(1));
    CHECK(ds.defining == e6.homogenize(6));

    CHECK_THROWS_AS(chmutov_variety(DS, 5, {{1, 1, 1}, 1}), ValidationError);
    CHECK_THROWS(chmutov_variety(P4, 7, {{1, 1, 1, 1}, 0}));
    CHECK_THROWS_AS(chmutov_variety(P4, 4, {{1, 1, 1}, 0}), ValidationError);
}

TEST_CASE("node counts: enumeration, formula and census agree with the table") {
    for (const auto& r : table()) {
        const auto v = chmutov_variety(r.kind, r.n, r.sp);
        const auto nodes = enumerate_nodes(v);
        INFO(to_string(r.kind) << " n=" << r.n << " " << r.sp.to_string());
        CHECK(static_cast<long>(nodes.size()) == r.expected);
        CHECK(node_count_formula(r.kind, r.n, r.sp) == r.expected);
        CHECK(count_by_census(r.kind, r.n, r.sp) == r.expected);
    }
}

TEST_CASE("hypersurface closed forms") {
    for (unsigned n : {4u, 6u, 8u}) {
        const Integer closed = Integer(3) * n * n * (n - 2) * (n - 2) / 8;
        CHECK(node_count_formula(P4, n, {{1, 1, 1, 1}, 0}) == closed);
    }
    for (unsigned n : {3u, 5u}) {
        const Integer closed = Integer(3) * (n - 1) * (n - 1) * (n - 1) * (n - 1) / 8;
        CHECK(node_count_formula(P4, n, {{1, 1, 1, 1}, 0}) == closed);
    }
}

TEST_CASE("every enumerated node is an ordinary double point") {
    for (const auto& r : table()) {
        const auto v = chmutov_variety(r.kind, r.n, r.sp);
        const auto nodes = enumerate_nodes(v);
        std::set<std::vector<unsigned>> seen;
        for (const auto& p : nodes) {
            CHECK(verify_node(v, p) == NodeStatus::Ok);
            CHECK(p.coords[0] == FieldElement(1));
            CHECK(seen.insert(p.indices).second);
            CHECK(p.label == chmutov_label(r.n, p.indices));
        }
        CHECK(std::is_sorted(nodes.begin(), nodes.end(),
                             [](const Node& a, const Node& b) { return a.indices < b.indices; }));
    }
}

TEST_CASE("odd degree sign symmetry") {
    for (unsigned n : {3u, 5u}) {
        for (int mask = 0; mask < 16; ++mask) {
            SignPattern sp{{}, 0}, neg{{}, 0};
            for (int j = 0; j < 4; ++j) {
                sp.signs.push_back(mask >> j & 1 ? -1 : 1);
                neg.signs.push_back(-sp.signs.back());
            }
            CHECK(enumerate_nodes(chmutov_variety(P4, n, sp)).size() ==
                  enumerate_nodes(chmutov_variety(P4, n, neg)).size());
        }
    }
}

TEST_CASE("verify_node examples") {
    const auto cubic = chmutov_variety(P4, 3, {{1, 1, 1, 1}, 0});
    const FieldElement h(Rational(1, 2));
    CHECK(verify_node(cubic, affine_node({-h, -h, h, h})) == NodeStatus::Ok);
    CHECK(verify_node(cubic, affine_node({h, h, h, h})) == NodeStatus::NotOnVariety);
    CHECK_THROWS_AS(verify_node(cubic, affine_node({h, h})), ValidationError);

    // Quadric sum x_i^2 over Q(i): the origin is a node, (1:1:i:0:0) is smooth.
    const FieldPtr qi = make_field({1, 0, 1}, "Q(i)");
    NodalVariety quad;
    quad.kind = P4;
    quad.degree = 2;
    quad.field = qi;
    quad.defining = Polynomial(5);
    for (int j = 1; j < 5; ++j) quad.defining.add_term([&] {
        Monomial m(5, 0);
        m[j] = 2;
        return m;
    }(), FieldElement(1));
    CHECK(verify_node(quad, affine_node({0, 0, 0, 0})) == NodeStatus::Ok);
    Node smooth;
    smooth.coords = {FieldElement(1), FieldElement(1), FieldElement::generator(qi), FieldElement(0), FieldElement(0)};
    CHECK(verify_node(quad, smooth) == NodeStatus::NotSingular);

    // x0 (x2^2 + x3^2 + x4^2) + x1^3: singular at the origin with a degenerate Hessian.
    NodalVariety cusp;
    cusp.kind = P4;
    cusp.degree = 3;
    cusp.defining = Polynomial(5);
    cusp.defining.add_term({0, 3, 0, 0, 0}, FieldElement(1));
    cusp.defining.add_term({1, 0, 2, 0, 0}, FieldElement(1));
    cusp.defining.add_term({1, 0, 0, 2, 0}, FieldElement(1));
    cusp.defining.add_term({1, 0, 0, 0, 2}, FieldElement(1));
    CHECK(verify_node(cusp, affine_node({0, 0, 0, 0})) == NodeStatus::Degenerate);
    CHECK(verify_node(cusp, affine_node({0, 0, 0, 0}), false) == NodeStatus::Ok);
}

TEST_CASE("chmutov labels") {
    CHECK(chmutov_label(3, {1, 1, 2, 2}) == "++--");
    CHECK(chmutov_label(4, {1, 2, 3, 2}) == "+0-0");
    CHECK(to_string(NodeStatus::NotSingular) == "not_singular");
    CHECK(parse_variety_kind(to_string(DS)) == DS);
}

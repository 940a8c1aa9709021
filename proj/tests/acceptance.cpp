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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "nodal/arnold.hpp"
#include "nodal/catalog.hpp"
#include "nodal/chebyshev.hpp"
#include "nodal/defect.hpp"
#include "nodal/reslattice.hpp"
#include "test_support.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace nodal;
using nodal::testing::fm_count;
using nodal::testing::random_int_rows;
using nodal::testing::rng;
using nodal::testing::uniform;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

/// Collects failed sub-checks of one criterion.
struct Check {
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
    template <class A, class B>
    void equal(const A& actual, const B& expected, const std::string& what) {
        if (!(actual == expected)) {
            std::ostringstream os;
            os << what << ": got " << actual << ", expected " << expected;
            failures.push_back(os.str());
        }
    }
    void within(double secs, double limit, const std::string& what) {
        if (secs > limit) {
            std::ostringstream os;
            os << what << ": " << secs << " s exceeds " << limit << " s";
            failures.push_back(os.str());
        }
    }
};

const Catalog& catalog() {
    static const Catalog c;
    return c;
}

struct Loaded {
    NodalVariety v;
    NodeSet nodes;
};

Loaded load_variety(const std::string& name) {
    const auto e = catalog().load(name);
    if (!e.variety) throw Error(name + " is not a variety entry");
    return {*e.variety, e.nodes};
}

IntersectionMatrix load_matrix(const std::string& name) {
    const auto e = catalog().load(name);
    if (!e.matrix) throw Error(name + " has no intersection matrix");
    return *e.matrix;
}

struct DefectCase {
    std::string name;
    std::size_t s, d;
    double limit_s;
};

// Values as listed in the acceptance criteria.
const std::vector<DefectCase>& defect_cases() {
    static const std::vector<DefectCase> c = {
        {"quadric-node", 1, 1, 0.001},
        {"chmutov-cubic", 6, 2, 0.1},
        {"chmutov-ds4-case1", 12, 3, 1},
        {"chmutov-ds4-case2", 12, 3, 1},
        {"chmutov-ds4-case3", 9, 1, 1},
        {"chmutov-ds4-case4", 6, 0, 1},
        {"chmutov-quartic-p4-pppp", 24, 2, 30},
        {"chmutov-quartic-p4-ppmm", 33, 7, 30},
        {"chmutov-quartic-p4-pppm", 30, 8, 30},
        {"chmutov-quintic", 96, 10, 120},
        {"schoen-quintic", 125, 24, 300},
        {"chmutov-ds6-pppp1", 54, 6, 600},
        {"chmutov-ds6-pppm1", 36, 0, 600},
        {"chmutov-ds6-ppmp1", 51, 5, 600},
        {"chmutov-ds6-pmmp1", 44, 2, 600},
        {"chmutov-ds8-pppp1", 144, 9, 600},
        {"chmutov-ds8-pppm1", 108, 0, 600},
        {"chmutov-ds8-ppmp1", 136, 7, 600},
        {"chmutov-ds8-pmmp1", 123, 3, 600},
    };
    return c;
}

std::map<std::string, std::size_t> exact_defects;

Check criterion1() {
    Check c;
    for (const auto& dc : defect_cases()) {
        const auto l = load_variety(dc.name);
        const auto t = Clock::now();
        const auto r = defect_exact(l.v, l.nodes);
        const double secs = seconds_since(t);
        exact_defects[dc.name] = r.defect;
        c.equal(r.s, dc.s, dc.name + " s");
        c.equal(r.defect, dc.d, dc.name + " d");
        c.within(secs, dc.limit_s, dc.name);
    }
    return c;
}

std::uint64_t inert_prime_for(const NodalVariety& v) {
    if (!v.field) return 181;
    const auto& m = v.field->minpoly();
    if (m == MinimalPolynomial({-3, 0, 1}) || m == MinimalPolynomial({-5, 0, 1})) return 173;
    return 181;
}

Check criterion2() {
    Check c;
    const std::vector<std::pair<std::string, std::size_t>> published = {{"chmutov-quartic-p4-pppp", 2},
                                                                       {"chmutov-quartic-p4-ppmm", 7},
                                                                       {"chmutov-quartic-p4-pppm", 8}};
    for (const auto& [name, d] : published) {
        const auto l = load_variety(name);
        c.equal(defect_modular(l.v, l.nodes, 181).defect, d, name + " d'(181)");
    }
    const auto q = load_variety("chmutov-quintic");
    c.equal(defect_modular(q.v, q.nodes, 173).defect, std::size_t{10}, "chmutov-quintic d'(173)");
    for (const auto& dc : defect_cases()) {
        if (dc.name == "quadric-node" || dc.name == "schoen-quintic") continue;
        const auto l = load_variety(dc.name);
        const std::uint64_t p = inert_prime_for(l.v);
        const auto r = defect_modular(l.v, l.nodes, p);
        c.equal(r.defect, exact_defects.at(dc.name), dc.name + " d'(" + std::to_string(p) + ") vs exact");
    }
    c.expect(is_inert(MinimalPolynomial({-2, 0, 1}), 181), "181 inert for x^2-2");
    c.expect(is_inert(MinimalPolynomial({2, 0, -4, 0, 1}), 181), "181 inert for x^4-4x^2+2");
    c.expect(is_inert(MinimalPolynomial({-3, 0, 1}), 173), "173 inert for x^2-3");
    c.expect(is_inert(MinimalPolynomial({-5, 0, 1}), 173), "173 inert for x^2-5");
    return c;
}

Check criterion3() {
    Check c;
    const auto t = Clock::now();
    const std::vector<std::pair<std::string, std::size_t>> cases = {
        {"chmutov-quartic-p4-pppp", 24}, {"chmutov-quartic-p4-ppmm", 33}, {"chmutov-quartic-p4-pppm", 30},
        {"chmutov-quintic", 96},         {"chmutov-ds6-pppp1", 54},       {"chmutov-ds6-pppm1", 36},
        {"chmutov-ds6-ppmp1", 51},       {"chmutov-ds6-pmmp1", 44},       {"chmutov-ds8-pppp1", 144},
        {"chmutov-ds8-pppm1", 108},      {"chmutov-ds8-ppmp1", 136},      {"chmutov-ds8-pmmp1", 123}};
    for (const auto& [name, s] : cases) {
        const auto e = catalog().load(name);
        const auto nodes = enumerate_nodes(*e.variety);
        c.equal(nodes.size(), s, name + " node count");
        for (const auto& p : nodes)
            if (verify_node(*e.variety, p, true) != NodeStatus::Ok) {
                c.failures.push_back(name + " node " + p.label + " fails verification");
                break;
            }
    }
    c.within(seconds_since(t), 60, "node suite");
    return c;
}

Check criterion4() {
    Check c;
    const std::vector<std::pair<std::string, long>> counts = {{"chmutov-cubic-relations", 6},
                                                            {"chmutov-ds4-case1-relations", 24},
                                                            {"chmutov-ds4-case2-relations", 24},
                                                            {"cubic-d4-matrix", 102},
                                                            {"ci-quadrics-s6", 46}};
    for (const auto& [name, n] : counts) {
        const auto m = load_matrix(name);
        const auto t = Clock::now();
        const auto r = count_projective(m);
        if (name == "cubic-d4-matrix") {
            c.within(seconds_since(t), 1, name);
            c.equal(r.total, Integer(512), name + " total");
        }
        if (name == "ci-quadrics-s6") c.equal(r.total, Integer(64), name + " total");
        c.equal(r.projective_count, Integer(n), name + " count");
    }
    const auto km = load_matrix("kummer-16");
    c.equal(rank(km.rows), std::size_t{6}, "kummer-16 rank");
    CountOptions one, many;
    many.workers = 4;
    const auto a = count_projective(km, one), b = count_projective(km, many);
    c.expect(a.projective_count > 0, "kummer-16 count positive");
    c.expect(a.projective_count % 2 == 0, "kummer-16 count even");
    c.equal(b.projective_count, a.projective_count, "kummer-16 count with 4 workers");
    for (const auto& x : catalog().load("kummer-16").expected)
        if (x.key == "projective_count") c.equal(a.projective_count, Integer(x.value.get<long>()), "kummer-16 golden");
    // Fourier-Motzkin brute force on a random 8-column sub-problem.
    std::vector<std::size_t> cols(16);
    std::iota(cols.begin(), cols.end(), 0);
    std::shuffle(cols.begin(), cols.end(), rng());
    cols.resize(8);
    std::sort(cols.begin(), cols.end());
    std::vector<std::vector<Rational>> sub(km.k(), std::vector<Rational>(8));
    for (std::size_t i = 0; i < km.k(); ++i)
        for (std::size_t j = 0; j < 8; ++j) sub[i][j] = km.rows(i, cols[j]);
    c.equal(count_projective(make_intersection_matrix(sub, 8)).projective_count, Integer(fm_count(sub)),
            "kummer 8-column sub-problem vs Fourier-Motzkin");
    c.notes.push_back("kummer-16 count " + a.projective_count.get_str());
    return c;
}

IntersectionMatrix random_matrix(std::size_t k, std::size_t s, double zero_col) {
    auto rows = random_int_rows(k, s, -3, 3);
    std::bernoulli_distribution z(zero_col);
    for (std::size_t j = 0; j < s; ++j)
        if (z(rng()))
            for (auto& r : rows) r[j] = 0;
    return make_intersection_matrix(rows, s);
}

Check criterion5() {
    Check c;
    std::size_t skipped = 0;
    for (const auto& name : catalog().list()) {
        const auto e = catalog().load(name);
        if (!e.matrix) continue;
        if (e.matrix->s() > 20) {
            ++skipped;
            continue;
        }
        const auto r = count_projective(*e.matrix);
        c.expect((r.projective_count > 0) == nullhomologous_columns(*e.matrix).empty(), name + " criterion");
    }
    for (int t = 0; t < 500; ++t) {
        const auto m = random_matrix(uniform(1, 5), uniform(1, 10), 0.1);
        const auto r = count_projective(m);
        if ((r.projective_count > 0) != nullhomologous_columns(m).empty()) {
            c.failures.push_back("random matrix " + std::to_string(t) + " violates the criterion");
        }
    }
    int disagree = 0;
    for (int t = 0; t < 1000; ++t) {
        const auto m = random_matrix(uniform(1, 5), uniform(1, 10), 0.05);
        if (primal_oracle(m).has_value() == dual_oracle(m).has_value()) ++disagree;
    }
    c.equal(disagree, 0, "primal/dual disagreements");
    if (skipped) c.notes.push_back(std::to_string(skipped) + " catalog matrix over the 2^20 flip cap not counted");
    return c;
}

Check criterion6() {
    Check c;
    const auto q = betti_report(VarietyKind::HypersurfaceP4, 5, 96, 10);
    c.equal(q.v_hat.b2, 11, "quintic b2");
    c.equal(q.v_hat.b3, 32, "quintic b3");
    c.equal(q.v_hat.e, -8, "quintic e");
    c.equal(q.h11, 11, "quintic h11");
    c.equal(q.h21, 15, "quintic h21");
    const auto o = betti_report(VarietyKind::DoubleSolidP3, 8, 144, 9);
    c.equal(o.v_hat.b2, 10, "octic b2");
    c.equal(o.v_hat.b3, 30, "octic b3");
    c.equal(o.v_hat.e, -8, "octic e");
    c.equal(o.h11, 10, "octic h11");
    c.equal(o.h21, 14, "octic h21");
    for (int t = 0; t < 100; ++t) {
        const bool hyp = uniform(0, 1) == 0;
        const unsigned n = hyp ? static_cast<unsigned>(uniform(3, 8)) : static_cast<unsigned>(2 * uniform(2, 5));
        const long long s = uniform(0, 40), d = uniform(0, s), s1 = uniform(0, s);
        try {
            const auto r = betti_report(hyp ? VarietyKind::HypersurfaceP4 : VarietyKind::DoubleSolidP3, n, s, d, s1);
            c.expect(r.v_tilde.e == r.e_smooth + 4 * s, "e(V~) = e(V_t) + 4s");
        } catch (const ValidationError&) {
            // inputs with negative b3 are rejected
        }
    }
    return c;
}

Check criterion7() {
    Check c;
    std::vector<Integer> a4;
    for (unsigned d = 2; d <= 5; ++d) a4.push_back(arnold_number(4, d));
    c.expect(a4 == std::vector<Integer>{1, 10, 45, 135}, "A_4(2..5) = 1, 10, 45, 135");
    std::vector<Integer> row;
    for (const auto& r : mu3_upper_row(2, 12)) row.push_back(r.combined_upper);
    c.expect(row == std::vector<Integer>{1, 4, 16, 31, 66, 104, 174, 246, 360, 480, 645}, "mu3 combined-upper row");
    c.equal(slab_volume(3), Rational(23, 48), "a_3");
    c.equal(slab_volume(4), Rational(11, 24), "a_4");
    const double la = std::sqrt(6 / M_PI), lc = std::sqrt(2 / M_PI);
    const double a49 = std::sqrt(49.0) * slab_volume(49).get_d();
    const double c50 = std::sqrt(50.0) * chmutov_density(50).get_d();
    c.expect(std::abs(a49 - la) / la < 0.05, "sqrt(49) a_49 within 5%");
    c.expect(std::abs(c50 - lc) / lc < 0.02, "sqrt(50) c_50 within 2%");
    const auto t = Clock::now();
    for (long d = 2; d <= 12; ++d) {
        long brute = 0;
        for (long x = 1; x < d; ++x)
            for (long y = 1; y < d; ++y)
                for (long z = 1; z < d; ++z) {
                    const long twice = 2 * (x + y + z);
                    if (d + 2 < twice && twice <= 3 * d) ++brute;
                }
        c.equal(arnold_number(3, static_cast<unsigned>(d)), Integer(brute), "A_3(" + std::to_string(d) + ")");
    }
    c.within(seconds_since(t), 1, "A_3 brute force");
    return c;
}

Check criterion8() {
    Check c;
    const auto t = Clock::now();
    for (unsigned n = 2; n <= 16; n += 2) {
        const auto f = cheb_half(n);
        const auto res = chebyshev(n) + Polynomial::constant(1, FieldElement(1)) -
                         Polynomial::constant(1, FieldElement(pow(Rational(2), n - 1))) * (f * f);
        c.expect(res.is_zero(), "T_n + 1 = 2^(n-1) F_n^2 at n = " + std::to_string(n));
    }
    for (unsigned n : {3u, 4u, 5u, 6u, 8u})
        for (int sign : {1, -1}) {
            const auto fac = cheb_sum_factors(n, sign);
            Polynomial prod = Polynomial::constant(2, fac.scalar);
            for (const auto& f : fac.factors) prod = prod * f;
            const auto tx = chebyshev(n).embed(2, 0), ty = chebyshev(n).embed(2, 1);
            c.expect((prod - (sign > 0 ? tx + ty : tx - ty)).is_zero(),
                     "factorization n = " + std::to_string(n) + (sign > 0 ? " +" : " -"));
        }
    for (unsigned m = 0; m <= 6; ++m)
        for (unsigned n = 0; n <= 6; ++n)
            c.expect(chebyshev(m).compose(chebyshev(n)) == chebyshev(m * n),
                     "T_" + std::to_string(m) + " o T_" + std::to_string(n));
    c.within(seconds_since(t), 5, "Chebyshev suite");
    return c;
}

std::pair<int, std::string> run_capture(const std::string& cmd) {
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) throw Error("cannot run " + cmd);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    const int status = pclose(p);
    return {WEXITSTATUS(status), out};
}

Check criterion9() {
    Check c;
    std::size_t compared = 0;
    for (const auto& name : catalog().list()) {
        const auto e = catalog().load(name);
        if (!e.matrix) continue;
        const std::string base = std::string(NODALRES_BIN) + " count --catalog " + name;
        const auto one = run_capture(base + " --workers 1 2>/dev/null");
        const auto eight = run_capture(base + " --workers 8 2>/dev/null");
        c.expect(one == eight, name + " output differs between 1 and 8 workers");
        if (one.first == 0) ++compared;
        else c.notes.push_back(name + " rejected by the flip cap with both worker counts");
    }
    c.notes.push_back(std::to_string(compared) + " counts compared");
    return c;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
        {"defect golden suite (exact)", criterion1},
        {"modular reproduction and inert primes", criterion2},
        {"node counts and node verification", criterion3},
        {"resolution counting", criterion4},
        {"existence criterion and oracle duality", criterion5},
        {"Betti and Euler numbers", criterion6},
        {"Arnold bounds and slab volumes", criterion7},
        {"Chebyshev identities", criterion8},
        {"count determinism across worker counts", criterion9},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t = Clock::now();
        Check c;
        try {
            c = criteria[i].second();
        } catch (const std::exception& ex) {
            c.failures.push_back(std::string("exception: ") + ex.what());
        }
        const bool ok = c.failures.empty();
        failed += !ok;
        std::printf("criterion %zu: %s  %s (%.2f s)\n", i + 1, ok ? "PASS" : "FAIL", criteria[i].first.c_str(),
                    seconds_since(t));
        for (const auto& f : c.failures) std::printf("    failed: %s\n", f.c_str());
        for (const auto& n : c.notes) std::printf("    note: %s\n", n.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed ? 1 : 0;
}

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

#include "nodal/defect.hpp"

#include <chrono>

namespace nodal {

int evaluation_degree(VarietyKind kind, unsigned n) {
    const int ni = static_cast<int>(n);
    if (kind == VarietyKind::HypersurfaceP4) return 2 * ni - 5;
    if (n % 2) throw ValidationError("double solids need an even branch degree");
    return 3 * ni / 2 - 4;
}

EvaluationMatrix evaluation_matrix(const NodalVariety& v, const NodeSet& nodes) {
    EvaluationMatrix em;
    em.degree = evaluation_degree(v.kind, v.degree);
    em.basis = monomial_basis(v.dim() + 1, em.degree);
    em.matrix = Matrix<FieldElement>(nodes.size(), em.basis.size());
    for (std::size_t r = 0; r < nodes.size(); ++r) {
        const auto& c = nodes[r].coords;
        if (static_cast<int>(c.size()) != v.dim() + 1)
            throw ValidationError("node " + std::to_string(r) + " has the wrong number of coordinates");
        Integer l = 1;
        for (const auto& x : c) {
            const Integer dl = x.denominator_lcm();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), dl.get_mpz_t());
        }
        em.row_scale.push_back(l);
        std::vector<FieldElement> pt;
        for (const auto& x : c) pt.push_back(FieldElement(Rational(l)) * x);
        // Power tables, then one product per monomial.
        std::vector<std::vector<FieldElement>> pw(pt.size());
        for (std::size_t i = 0; i < pt.size(); ++i) {
            pw[i].push_back(FieldElement(1));
            for (int e = 1; e <= em.degree; ++e) pw[i].push_back(pw[i].back() * pt[i]);
        }
        for (std::size_t j = 0; j < em.basis.size(); ++j) {
            FieldElement val(1);
            for (std::size_t i = 0; i < pt.size(); ++i)
                if (em.basis[j][i]) val *= pw[i][em.basis[j][i]];
            em.matrix(r, j) = val;
        }
    }
    return em;
}

namespace {
double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

DefectReport make_report(std::size_t s, std::size_t cols, std::size_t rk) {
    DefectReport r;
    r.s = s;
    r.cols = cols;
    r.rank = rk;
    r.defect = s - rk;
    r.vanishing_dim = cols - rk;
    return r;
}

FieldPtr node_field(const NodalVariety& v, const NodeSet& nodes) {
    FieldPtr f = v.field;
    for (const auto& n : nodes) f = common_field(f, common_field(n.coords));
    return f;
}
}  // namespace

DefectReport defect_exact(const NodalVariety& v, const NodeSet& nodes) {
    const auto start = std::chrono::steady_clock::now();
    const EvaluationMatrix em = evaluation_matrix(v, nodes);
    DefectReport r = make_report(nodes.size(), em.basis.size(), rank(em.matrix));
    r.method = "exact";
    r.runtime_ms = elapsed_ms(start);
    return r;
}

DefectReport defect_modular(const NodalVariety& v, const NodeSet& nodes, std::uint64_t p) {
    const auto start = std::chrono::steady_clock::now();
    const FieldPtr f = node_field(v, nodes);
    if (p == 2) throw UnsuitablePrime("p = 2 is never used for reduction");
    if (f) {
        if (!is_inert(f->minpoly(), p))
            throw UnsuitablePrime(std::to_string(p) + " is not inert for " + f->minpoly().to_string());
    } else if (!is_prime(p)) {
        throw UnsuitablePrime(std::to_string(p) + " is not prime");
    }
    const EvaluationMatrix em = evaluation_matrix(v, nodes);
    const FiniteFieldPtr target = residue_field(f, p);
    DefectReport r = make_report(nodes.size(), em.basis.size(), rank(reduce_matrix(em.matrix, target)));
    r.method = "modular(" + std::to_string(p) + ")";
    r.prime = p;
    r.runtime_ms = elapsed_ms(start);
    return r;
}

BettiReport betti_report(VarietyKind kind, unsigned n, long long s, long long d, long long s1) {
    if (s < 0 || d < 0 || s1 < 0) throw ValidationError("s, d and s1 must be nonnegative");
    if (d > s) throw ValidationError("defect d exceeds node count s");
    if (s1 > s) throw ValidationError("s1 exceeds node count s");
    const long long nn = n;
    BettiReport r;
    r.kind = kind;
    r.n = n;
    r.s = s;
    r.d = d;
    r.s1 = s1;
    if (kind == VarietyKind::HypersurfaceP4) {
        r.b3_smooth = nn * nn * nn * nn - 5 * nn * nn * nn + 10 * nn * nn - 10 * nn + 4;
    } else {
        if (n % 2) throw ValidationError("double solids need an even branch degree");
        r.b3_smooth = nn * nn * nn - 4 * nn * nn + 6 * nn - 4;
    }
    r.e_smooth = 4 - r.b3_smooth;

    r.v = {1, r.b3_smooth - s + d, 1 + d, r.e_smooth + s};
    r.v_hat = {1 + d, r.b3_smooth - 2 * s + 2 * d, 1 + d, r.e_smooth + 2 * s};
    if (r.v.b3 < 0 || r.v_hat.b3 < 0)
        throw ValidationError("inconsistent input: third Betti number would be negative");
    r.v_tilde = {1 + d + s, r.v_hat.b3, 1 + d + s, r.e_smooth + 4 * s};
    r.v_bar = {1 + d + s1, r.v_hat.b3, 1 + d + s1, r.v_hat.e + 2 * s1};
    r.h11 = r.v_hat.b2;
    r.h21 = (r.v_hat.b3 - 2) / 2;
    return r;
}

}  // namespace nodal

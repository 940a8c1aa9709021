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

#include "nodal/chmutov.hpp"
#include "nodal/matrix.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace nodal {

/// Degree of the vanishing-form basis: 2n - 5 for hypersurfaces in P4,
/// 3n/2 - 4 for double solids (n even).
int evaluation_degree(VarietyKind kind, unsigned n);

/// Rows: nodes (homogeneous, scaled by the lcm of their coordinate
/// denominators); columns: degree-D monomials in grlex order.
struct EvaluationMatrix {
    int degree = 0;
    std::vector<Monomial> basis;
    std::vector<Integer> row_scale;
    Matrix<FieldElement> matrix;
};

EvaluationMatrix evaluation_matrix(const NodalVariety& v, const NodeSet& nodes);

struct DefectReport {
    std::size_t s = 0;
    std::size_t cols = 0;
    std::size_t rank = 0;
    std::size_t defect = 0;
    std::string method;  ///< "exact" or "modular(p)"
    std::optional<std::uint64_t> prime;
    std::size_t vanishing_dim = 0;
    double runtime_ms = 0;
};

DefectReport defect_exact(const NodalVariety& v, const NodeSet& nodes);

/// d'(p) = s - rank mod p. Requires p inert for the coordinate field.
DefectReport defect_modular(const NodalVariety& v, const NodeSet& nodes, std::uint64_t p);

struct BettiNumbers {
    long long b2 = 0, b3 = 0, b4 = 0, e = 0;
};

/// Betti and Euler numbers of the nodal variety V, a small resolution V-hat,
/// the big resolution V-tilde and a mixed resolution V-bar (s1 nodes blown
/// up), plus the smoothing V_t.
struct BettiReport {
    VarietyKind kind = VarietyKind::HypersurfaceP4;
    unsigned n = 0;
    long long s = 0, d = 0, s1 = 0;
    long long b3_smooth = 0, e_smooth = 0;
    BettiNumbers v, v_hat, v_tilde, v_bar;
    long long h11 = 0, h21 = 0;
};

BettiReport betti_report(VarietyKind kind, unsigned n, long long s, long long d, long long s1 = 0);

}  // namespace nodal

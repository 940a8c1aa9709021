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

#include "nodal/matrix.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace nodal {

/// k x s matrix whose rows span the divisor space A inside Q^s; column j
/// belongs to the exceptional curve over node j.
struct IntersectionMatrix {
    Matrix<Rational> rows;
    std::vector<std::string> labels;

    std::size_t s() const { return rows.cols(); }
    std::size_t k() const { return rows.rows(); }
};

IntersectionMatrix make_intersection_matrix(const std::vector<std::vector<Rational>>& rows, std::size_t s,
                                            std::vector<std::string> labels = {});

/// Basis of B = A^perp in reduced row echelon form.
std::vector<std::vector<Rational>> relations(const IntersectionMatrix& m);

/// Rows: an echelon basis of the orthogonal complement of span(relations).
IntersectionMatrix build_lattice_from_relations(const std::vector<std::vector<Rational>>& relations, std::size_t s,
                                                std::vector<std::string> labels = {});

/// Column j multiplied by eps[j].
IntersectionMatrix flip(const IntersectionMatrix& m, const std::vector<int>& eps);

/// Indices (0-based) of identically zero columns.
std::vector<std::size_t> nullhomologous_columns(const IntersectionMatrix& m);

/// Outcome of the strict-positivity decision. When projective, `lambda`
/// holds row coefficients and `certificate` = lambda^T M >= 1 entrywise.
/// Otherwise `certificate` is a nonzero y >= 0 with M y = 0 and sum y = 1.
struct ProjectivityResult {
    bool projective = false;
    std::vector<Rational> lambda;
    std::vector<Rational> certificate;
};

/// Primal oracle alone: some lambda with lambda^T M >= 1, if any.
std::optional<ProjectivityResult> primal_oracle(const IntersectionMatrix& m);
/// Dual oracle alone: some y >= 0, sum y = 1, M y = 0, if any.
std::optional<ProjectivityResult> dual_oracle(const IntersectionMatrix& m);

/// Runs both oracles and returns the certificate of the one that succeeds.
/// Throws Error if both or neither succeed.
ProjectivityResult is_projective(const IntersectionMatrix& m);

struct CountOptions {
    unsigned workers = 1;
    std::size_t cap = 20;
    bool witnesses = false;
    /// Called with the number of finished flips (of 2^(s-1)); may be empty.
    std::function<void(std::uint64_t, std::uint64_t)> progress;
};

struct FlipWitness {
    std::vector<int> eps;
    std::vector<Rational> divisor;
};

struct CountReport {
    std::size_t s = 0;
    std::size_t dim_a = 0;
    Integer total;
    Integer projective_count;
    std::vector<std::size_t> nullhomologous;
    std::vector<FlipWitness> witnesses;
};

/// Number of sign vectors eps in {+-1}^s for which flip(M, eps) is
/// projective. Only eps with eps[0] = +1 are solved; the global negation
/// doubles the count. Throws ValidationError for s = 0 or s > cap.
CountReport count_projective(const IntersectionMatrix& m, const CountOptions& opt = {});

}  // namespace nodal

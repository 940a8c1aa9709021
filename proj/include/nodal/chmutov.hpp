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

#include "nodal/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nodal {

enum class VarietyKind { HypersurfaceP4, DoubleSolidP3 };

std::string to_string(VarietyKind kind);
VarietyKind parse_variety_kind(const std::string& text);

/// Number of affine coordinates: 4 for hypersurfaces in P4, 3 for the branch
/// surface of a double solid in P3.
int affine_dim(VarietyKind kind);

/// Sign data of a Chmutov variety: sum_j signs[j] T_n(x_j) + constant.
/// Hypersurfaces have four signs and constant 0; double solids three signs
/// and constant +1 or -1.
struct SignPattern {
    std::vector<int> signs;
    int constant = 0;

    std::string to_string() const;
    friend bool operator==(const SignPattern&, const SignPattern&) = default;
};

/// A hypersurface in P4 or the branch surface of a double solid in P3.
/// `defining` is homogeneous in affine_dim + 1 variables, x0 first.
struct NodalVariety {
    std::string name;
    VarietyKind kind = VarietyKind::HypersurfaceP4;
    unsigned degree = 0;
    FieldPtr field;
    Polynomial defining;
    std::optional<SignPattern> chmutov;

    int dim() const { return affine_dim(kind); }
};

/// An ordinary double point in homogeneous coordinates. Chmutov nodes carry
/// their index tuple (k_1, ..., k_m) with coordinates cos(k_j pi / n).
struct Node {
    std::vector<FieldElement> coords;
    std::vector<unsigned> indices;
    std::string label;
};

using NodeSet = std::vector<Node>;

/// Chmutov hypersurface or double solid over Q(cos(pi/n)).
NodalVariety chmutov_variety(VarietyKind kind, unsigned n, const SignPattern& signs);

/// All nodes of a Chmutov variety, lexicographic in the index tuple.
NodeSet enumerate_nodes(const NodalVariety& v);

/// Node count from the parity census of the indices: floor((n-1)/2) even and
/// floor(n/2) odd indices per coordinate.
Integer node_count_formula(VarietyKind kind, unsigned n, const SignPattern& signs);

enum class NodeStatus { Ok, NotOnVariety, NotSingular, Degenerate };
std::string to_string(NodeStatus s);

/// Exact test in the chart of the first nonzero coordinate: F = 0, all
/// partials vanish, and (optionally) the Hessian is nonsingular.
NodeStatus verify_node(const NodalVariety& v, const Node& p, bool check_nondegenerate = true);

/// '+', '-' or '0' per coordinate from the sign of cos(k pi / n).
std::string chmutov_label(unsigned n, const std::vector<unsigned>& indices);

}  // namespace nodal

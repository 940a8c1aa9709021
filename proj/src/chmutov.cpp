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

#include "nodal/chmutov.hpp"

#include "nodal/chebyshev.hpp"
#include "nodal/matrix.hpp"

namespace nodal {

std::string to_string(VarietyKind kind) {
    return kind == VarietyKind::HypersurfaceP4 ? "hypersurface-P4" : "double-solid-P3";
}

VarietyKind parse_variety_kind(const std::string& text) {
    if (text == "hypersurface-P4" || text == "hypersurface") return VarietyKind::HypersurfaceP4;
    if (text == "double-solid-P3" || text == "double-solid") return VarietyKind::DoubleSolidP3;
    throw ValidationError("unknown variety kind '" + text + "'");
}

int affine_dim(VarietyKind kind) { return kind == VarietyKind::HypersurfaceP4 ? 4 : 3; }

std::string SignPattern::to_string() const {
    std::string s = "(";
    for (int v : signs) s += v > 0 ? '+' : '-';
    if (constant) s += std::string(";") + (constant > 0 ? "+1" : "-1");
    return s + ")";
}

namespace {
void check_signs(VarietyKind kind, unsigned n, const SignPattern& sp) {
    if (static_cast<int>(sp.signs.size()) != affine_dim(kind))
        throw ValidationError("sign pattern needs " + std::to_string(affine_dim(kind)) + " entries");
    for (int v : sp.signs)
        if (v != 1 && v != -1) throw ValidationError("signs must be +1 or -1");
    if (kind == VarietyKind::HypersurfaceP4 && sp.constant != 0)
        throw ValidationError("hypersurface sign patterns have no constant term");
    if (kind == VarietyKind::DoubleSolidP3) {
        if (sp.constant != 1 && sp.constant != -1) throw ValidationError("double solid constant must be +1 or -1");
        if (n % 2) throw ValidationError("double solids need an even branch degree, got " + std::to_string(n));
    }
}
}  // namespace

NodalVariety chmutov_variety(VarietyKind kind, unsigned n, const SignPattern& signs) {
    check_signs(kind, n, signs);
    const CosField cf = cos_field(n);
    const int m = affine_dim(kind);
    const Polynomial tn = chebyshev(n);
    Polynomial affine(m);
    for (int j = 0; j < m; ++j) affine += FieldElement(signs.signs[j]) * tn.embed(m, j);
    if (signs.constant) affine += Polynomial::constant(m, FieldElement(signs.constant));
    NodalVariety v;
    v.kind = kind;
    v.degree = n;
    v.field = cf.field;
    v.defining = affine.homogenize(static_cast<int>(n));
    v.chmutov = signs;
    v.name = "chmutov-" + std::string(kind == VarietyKind::HypersurfaceP4 ? "p4" : "ds") + "-n" +
             std::to_string(n) + signs.to_string();
    return v;
}

std::string chmutov_label(unsigned n, const std::vector<unsigned>& indices) {
    std::string s;
    for (unsigned k : indices) s += 2 * k < n ? '+' : (2 * k == n ? '0' : '-');
    return s;
}

NodeSet enumerate_nodes(const NodalVariety& v) {
    if (!v.chmutov) throw ValidationError("enumerate_nodes needs a Chmutov variety");
    const unsigned n = v.degree;
    const int m = v.dim();
    const auto& sp = *v.chmutov;
    std::vector<FieldElement> cosk(n);
    for (unsigned k = 1; k < n; ++k) {
        cosk[k] = cos_multiple(n, k);
        if (v.field && !cosk[k].field()) cosk[k] = FieldElement(v.field, cosk[k].coeffs());
    }
    const FieldElement one = v.field ? FieldElement(v.field, {1}) : FieldElement(1);
    NodeSet out;
    if (n < 2) return out;
    std::vector<unsigned> k(m, 1);
    while (true) {
        int sum = sp.constant;
        for (int j = 0; j < m; ++j) sum += sp.signs[j] * (k[j] % 2 ? -1 : 1);
        if (sum == 0) {
            Node node;
            node.coords.push_back(one);
            for (int j = 0; j < m; ++j) node.coords.push_back(cosk[k[j]]);
            node.indices = k;
            node.label = chmutov_label(n, k);
            out.push_back(std::move(node));
        }
        int j = m - 1;
        while (j >= 0 && k[j] == n - 1) k[j--] = 1;
        if (j < 0) break;
        ++k[j];
    }
    return out;
}

Integer node_count_formula(VarietyKind kind, unsigned n, const SignPattern& signs) {
    check_signs(kind, n, signs);
    const int m = affine_dim(kind);
    const Integer even = (n - 1) / 2, odd = n / 2;
    Integer total = 0;
    for (int mask = 0; mask < (1 << m); ++mask) {
        int sum = signs.constant;
        Integer prod = 1;
        for (int j = 0; j < m; ++j) {
            const bool is_odd = (mask >> j) & 1;
            sum += signs.signs[j] * (is_odd ? -1 : 1);
            prod *= is_odd ? odd : even;
        }
        if (sum == 0) total += prod;
    }
    return total;
}

std::string to_string(NodeStatus s) {
    switch (s) {
        case NodeStatus::Ok: return "ok";
        case NodeStatus::NotOnVariety: return "not_on_variety";
        case NodeStatus::NotSingular: return "not_singular";
        case NodeStatus::Degenerate: return "degenerate";
    }
    return "unknown";
}

NodeStatus verify_node(const NodalVariety& v, const Node& p, bool check_nondegenerate) {
    const int nv = v.defining.nvars();
    if (static_cast<int>(p.coords.size()) != nv)
        throw ValidationError("node has " + std::to_string(p.coords.size()) + " coordinates, expected " +
                              std::to_string(nv));
    common_field(p.coords);
    int chart = -1;
    for (int j = 0; j < nv && chart < 0; ++j)
        if (!p.coords[j].is_zero()) chart = j;
    if (chart < 0) throw ValidationError("node has all coordinates zero");
    const FieldElement inv = p.coords[chart].inverse();
    std::vector<FieldElement> pt;
    for (int j = 0; j < nv; ++j)
        if (j != chart) pt.push_back(p.coords[j] * inv);
    const Polynomial g = v.defining.dehomogenize(chart);
    if (!g.evaluate(pt).is_zero()) return NodeStatus::NotOnVariety;
    const auto grad = g.gradient();
    for (const auto& d : grad)
        if (!d.evaluate(pt).is_zero()) return NodeStatus::NotSingular;
    if (!check_nondegenerate) return NodeStatus::Ok;
    const std::size_t m = grad.size();
    Matrix<FieldElement> h(m, m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a; b < m; ++b) h(a, b) = h(b, a) = grad[a].derivative(static_cast<int>(b)).evaluate(pt);
    return rank_gauss(h) == m ? NodeStatus::Ok : NodeStatus::Degenerate;
}

}  // namespace nodal

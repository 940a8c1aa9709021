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

#include "nodal/json_io.hpp"

namespace nodal {

FieldPtr FieldRegistry::get(const std::vector<Integer>& minpoly, const std::string& name) {
    std::vector<std::string> key;
    for (const auto& c : minpoly) key.push_back(c.get_str());
    std::lock_guard<std::mutex> lock(mu_);
    auto it = fields_.find(key);
    if (it != fields_.end()) return it->second;
    FieldPtr f = make_field(minpoly, name);
    fields_.emplace(std::move(key), f);
    return f;
}

FieldRegistry& default_registry() {
    static FieldRegistry reg;
    return reg;
}

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
    throw ValidationError("expected a rational as a string \"p/q\" or an integer, got " + j.dump());
}

Json integer_to_json(const Integer& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
    if (j.is_string()) {
        const Rational q = parse_rational(j.get<std::string>());
        if (q.get_den() != 1) throw ValidationError("expected an integer, got " + j.dump());
        return q.get_num();
    }
    throw ValidationError("expected an integer, got " + j.dump());
}

Json minpoly_to_json(const MinimalPolynomial& m) {
    Json a = Json::array();
    for (const auto& c : m.coeffs()) a.push_back(integer_to_json(c));
    return a;
}

std::vector<Integer> minpoly_from_json(const Json& j) {
    if (!j.is_array()) throw ValidationError("minimal polynomial must be an array of integers");
    std::vector<Integer> c;
    for (const auto& v : j) c.push_back(integer_from_json(v));
    return c;
}

Json to_json(const FieldElement& x) {
    if (!x.field()) return to_json(x.coeffs()[0]);
    Json coeffs = Json::array();
    for (const auto& c : x.coeffs()) coeffs.push_back(to_json(c));
    return Json{{"minpoly", minpoly_to_json(x.field()->minpoly())}, {"coeffs", coeffs}};
}

FieldElement field_element_from_json(const Json& j, FieldRegistry& reg) {
    if (j.is_string() || j.is_number_integer()) return FieldElement(rational_from_json(j));
    if (!j.is_object() || !j.contains("minpoly") || !j.contains("coeffs"))
        throw ValidationError("field element must be a rational or {\"minpoly\", \"coeffs\"}: " + j.dump());
    FieldPtr f = reg.get(minpoly_from_json(j.at("minpoly")));
    std::vector<Rational> c;
    for (const auto& v : j.at("coeffs")) c.push_back(rational_from_json(v));
    return FieldElement(f, std::move(c));
}

Json to_json(const Polynomial& p) {
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms()) terms.push_back(Json{{"exp", m}, {"coeff", to_json(c)}});
    return Json{{"nvars", p.nvars()}, {"terms", terms}};
}

Polynomial polynomial_from_json(const Json& j, FieldRegistry& reg) {
    if (!j.is_object() || !j.contains("nvars") || !j.contains("terms"))
        throw ValidationError("polynomial must have \"nvars\" and \"terms\"");
    const int nv = j.at("nvars").get<int>();
    Polynomial p(nv);
    for (const auto& t : j.at("terms")) {
        const auto exp = t.at("exp").get<Monomial>();
        if (static_cast<int>(exp.size()) != nv) throw ValidationError("term exponent length does not match nvars");
        p.add_term(exp, field_element_from_json(t.at("coeff"), reg));
    }
    return p;
}

Json rational_rows_to_json(const std::vector<std::vector<Rational>>& rows) {
    Json out = Json::array();
    for (const auto& r : rows) {
        Json row = Json::array();
        for (const auto& q : r) row.push_back(to_json(q));
        out.push_back(row);
    }
    return out;
}

std::vector<std::vector<Rational>> rational_rows_from_json(const Json& j) {
    if (!j.is_array()) throw ValidationError("expected an array of rows");
    std::vector<std::vector<Rational>> rows;
    for (const auto& r : j) {
        if (!r.is_array()) throw ValidationError("matrix row must be an array");
        std::vector<Rational> row;
        for (const auto& v : r) row.push_back(rational_from_json(v));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const IntersectionMatrix& m) {
    std::vector<std::vector<Rational>> rows;
    for (std::size_t i = 0; i < m.k(); ++i) rows.push_back(m.rows.row_vector(i));
    return Json{{"s", m.s()}, {"labels", m.labels}, {"rows", rational_rows_to_json(rows)}};
}

IntersectionMatrix intersection_matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("s") || !j.contains("rows"))
        throw ValidationError("matrix must have \"s\" and \"rows\"");
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return make_intersection_matrix(rational_rows_from_json(j.at("rows")), j.at("s").get<std::size_t>(),
                                    std::move(labels));
}

Json to_json(const DefectReport& r) {
    Json j{{"s", r.s},           {"cols", r.cols},         {"rank", r.rank},
           {"defect", r.defect}, {"method", r.method}};
    if (r.prime) j["prime"] = *r.prime;
    j["vanishing_dim"] = r.vanishing_dim;
    j["runtime_ms"] = r.runtime_ms;
    return j;
}

DefectReport defect_report_from_json(const Json& j) {
    DefectReport r;
    r.s = j.at("s").get<std::size_t>();
    r.cols = j.at("cols").get<std::size_t>();
    r.rank = j.at("rank").get<std::size_t>();
    r.defect = j.at("defect").get<std::size_t>();
    r.method = j.at("method").get<std::string>();
    if (j.contains("prime")) r.prime = j.at("prime").get<std::uint64_t>();
    r.vanishing_dim = j.at("vanishing_dim").get<std::size_t>();
    r.runtime_ms = j.value("runtime_ms", 0.0);
    if (r.defect + r.rank != r.s || r.vanishing_dim + r.rank != r.cols)
        throw ValidationError("inconsistent defect report");
    return r;
}

Json to_json(const CountReport& r) {
    Json j{{"s", r.s},
           {"dim_a", r.dim_a},
           {"total", integer_to_json(r.total)},
           {"projective_count", integer_to_json(r.projective_count)},
           {"nullhomologous_columns", r.nullhomologous}};
    if (!r.witnesses.empty()) {
        Json w = Json::array();
        for (const auto& fw : r.witnesses) {
            Json div = Json::array();
            for (const auto& q : fw.divisor) div.push_back(to_json(q));
            w.push_back(Json{{"eps", fw.eps}, {"divisor", div}});
        }
        j["witnesses"] = w;
    }
    return j;
}

CountReport count_report_from_json(const Json& j) {
    CountReport r;
    r.s = j.at("s").get<std::size_t>();
    r.dim_a = j.at("dim_a").get<std::size_t>();
    r.total = integer_from_json(j.at("total"));
    r.projective_count = integer_from_json(j.at("projective_count"));
    r.nullhomologous = j.at("nullhomologous_columns").get<std::vector<std::size_t>>();
    if (j.contains("witnesses"))
        for (const auto& w : j.at("witnesses")) {
            FlipWitness fw;
            fw.eps = w.at("eps").get<std::vector<int>>();
            for (const auto& q : w.at("divisor")) fw.divisor.push_back(rational_from_json(q));
            r.witnesses.push_back(std::move(fw));
        }
    return r;
}

namespace {
Json betti_json(const BettiNumbers& b) { return Json{{"b2", b.b2}, {"b3", b.b3}, {"b4", b.b4}, {"e", b.e}}; }
BettiNumbers betti_from(const Json& j) {
    return {j.at("b2").get<long long>(), j.at("b3").get<long long>(), j.at("b4").get<long long>(),
            j.at("e").get<long long>()};
}
}  // namespace

Json to_json(const BettiReport& r) {
    return Json{{"kind", to_string(r.kind)},
                {"n", r.n},
                {"s", r.s},
                {"d", r.d},
                {"s1", r.s1},
                {"smoothing", Json{{"b3", r.b3_smooth}, {"e", r.e_smooth}}},
                {"V", betti_json(r.v)},
                {"V_hat", betti_json(r.v_hat)},
                {"V_tilde", betti_json(r.v_tilde)},
                {"V_bar", betti_json(r.v_bar)},
                {"h11", r.h11},
                {"h21", r.h21}};
}

BettiReport betti_report_from_json(const Json& j) {
    BettiReport r;
    r.kind = parse_variety_kind(j.at("kind").get<std::string>());
    r.n = j.at("n").get<unsigned>();
    r.s = j.at("s").get<long long>();
    r.d = j.at("d").get<long long>();
    r.s1 = j.at("s1").get<long long>();
    r.b3_smooth = j.at("smoothing").at("b3").get<long long>();
    r.e_smooth = j.at("smoothing").at("e").get<long long>();
    r.v = betti_from(j.at("V"));
    r.v_hat = betti_from(j.at("V_hat"));
    r.v_tilde = betti_from(j.at("V_tilde"));
    r.v_bar = betti_from(j.at("V_bar"));
    r.h11 = j.at("h11").get<long long>();
    r.h21 = j.at("h21").get<long long>();
    return r;
}

Json to_json(const BoundsRow& r) {
    Json j{{"n", r.n}, {"d", r.d}, {"arnold", integer_to_json(r.arnold)}, {"bruce", integer_to_json(r.bruce)}};
    j["miyaoka"] = r.miyaoka ? integer_to_json(*r.miyaoka) : Json(nullptr);
    j["combined_upper"] = integer_to_json(r.combined_upper);
    j["known_lower"] = r.known_lower ? integer_to_json(*r.known_lower) : Json(nullptr);
    j["source"] = r.source;
    return j;
}

Json to_json(const NodalVariety& v, const NodeSet& nodes) {
    Json j{{"name", v.name}, {"kind", to_string(v.kind)}, {"degree", v.degree}};
    if (v.chmutov) {
        j["signs"] = v.chmutov->signs;
        j["constant"] = v.chmutov->constant;
    }
    j["field"] = v.field ? minpoly_to_json(v.field->minpoly()) : Json(nullptr);
    j["defining"] = to_json(v.defining);
    Json ns = Json::array(), labels = Json::array();
    for (const auto& n : nodes) {
        Json c = Json::array();
        for (const auto& x : n.coords) c.push_back(to_json(x));
        ns.push_back(c);
        labels.push_back(n.label);
    }
    j["nodes"] = ns;
    j["labels"] = labels;
    return j;
}

}  // namespace nodal

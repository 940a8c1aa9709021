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

#include "nodal/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>

#ifndef NODALRES_DEFAULT_CATALOG_DIR
#define NODALRES_DEFAULT_CATALOG_DIR "catalog"
#endif

namespace nodal {

namespace fs = std::filesystem;

std::string to_string(EntryKind k) {
    switch (k) {
        case EntryKind::Variety: return "variety";
        case EntryKind::RelationSet: return "relation-set";
        case EntryKind::IntersectionMatrix: return "intersection-matrix";
        case EntryKind::BoundsDatum: return "bounds-datum";
    }
    return "?";
}

EntryKind parse_entry_kind(const std::string& text) {
    for (auto k : {EntryKind::Variety, EntryKind::RelationSet, EntryKind::IntersectionMatrix, EntryKind::BoundsDatum})
        if (to_string(k) == text) return k;
    throw ValidationError("unknown entry kind '" + text + "'");
}

fs::path default_catalog_dir() {
    if (const char* env = std::getenv("NODALRES_CATALOG_DIR"); env && *env) return env;
    return NODALRES_DEFAULT_CATALOG_DIR;
}

Catalog::Catalog(fs::path dir) : dir_(std::move(dir)) {}

std::vector<std::string> Catalog::list() const {
    std::vector<std::string> names;
    if (!fs::is_directory(dir_)) throw Error("catalog directory not found: " + dir_.string());
    for (const auto& f : fs::directory_iterator(dir_))
        if (f.is_regular_file() && f.path().extension() == ".json") names.push_back(f.path().stem().string());
    std::sort(names.begin(), names.end());
    return names;
}

bool Catalog::contains(const std::string& name) const { return fs::is_regular_file(dir_ / (name + ".json")); }

Json Catalog::raw(const std::string& name) const {
    const fs::path p = dir_ / (name + ".json");
    std::ifstream in(p);
    if (!in) throw Error("unknown catalog entry '" + name + "' (looked in " + dir_.string() + ")");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError("catalog entry '" + name + "': malformed JSON: " + e.what());
    }
}

CatalogEntry Catalog::load(const std::string& name) const {
    CatalogEntry e = parse(raw(name));
    if (e.name != name) throw ValidationError("catalog entry '" + name + "': name field is '" + e.name + "'");
    return e;
}

namespace {

[[noreturn]] void fail(const CatalogEntry& e, const std::string& check, const std::string& what) {
    throw ValidationError("catalog entry '" + e.name + "': check '" + check + "' failed: " + what);
}

bool rows_orthogonal(const Matrix<Rational>& a, const std::vector<std::vector<Rational>>& rel) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (const auto& r : rel) {
            Rational dot = 0;
            for (std::size_t j = 0; j < a.cols(); ++j) dot += a(i, j) * r[j];
            if (sgn(dot) != 0) return false;
        }
    return true;
}

std::size_t rows_rank(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty()) return 0;
    return rank(Matrix<Rational>(rows));
}

void load_variety(CatalogEntry& e) {
    const Json& p = e.payload;
    const VarietyKind kind = parse_variety_kind(p.at("kind").get<std::string>());
    const unsigned degree = p.at("degree").get<unsigned>();
    if (p.value("generator", std::string()) == "chmutov") {
        SignPattern sp{p.at("signs").get<std::vector<int>>(), p.value("constant", 0)};
        e.variety = chmutov_variety(kind, degree, sp);
        e.nodes = enumerate_nodes(*e.variety);
        const Integer expected = node_count_formula(kind, degree, sp);
        if (Integer(static_cast<unsigned long>(e.nodes.size())) != expected)
            fail(e, "node-count-formula",
                 std::to_string(e.nodes.size()) + " enumerated, formula gives " + expected.get_str());
        e.checks.push_back("node-count-formula");
    } else {
        NodalVariety v;
        v.name = e.name;
        v.kind = kind;
        v.degree = degree;
        if (!p.at("field").is_null()) v.field = default_registry().get(minpoly_from_json(p.at("field")));
        v.defining = polynomial_from_json(p.at("defining"));
        if (v.defining.nvars() != affine_dim(kind) + 1) fail(e, "schema", "defining polynomial has wrong arity");
        for (const auto& [m, c] : v.defining.terms())
            if (total_degree(m) != degree) fail(e, "schema", "defining polynomial is not homogeneous of the stated degree");
        std::vector<std::string> labels;
        if (p.contains("labels")) labels = p.at("labels").get<std::vector<std::string>>();
        const auto& nodes = p.at("nodes");
        if (!labels.empty() && labels.size() != nodes.size()) fail(e, "schema", "labels and nodes differ in length");
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            Node n;
            for (const auto& c : nodes[i]) n.coords.push_back(field_element_from_json(c));
            if (static_cast<int>(n.coords.size()) != v.dim() + 1) fail(e, "schema", "node of wrong dimension");
            n.label = labels.empty() ? std::to_string(i + 1) : labels[i];
            e.nodes.push_back(std::move(n));
        }
        e.variety = std::move(v);
    }
    std::set<std::string> seen;
    for (std::size_t i = 0; i < e.nodes.size(); ++i) {
        std::string key;
        for (const auto& c : e.nodes[i].coords) key += c.to_string() + ";";
        if (!seen.insert(key).second) fail(e, "distinct-nodes", "node " + std::to_string(i + 1) + " repeated");
        const NodeStatus st = verify_node(*e.variety, e.nodes[i]);
        if (st != NodeStatus::Ok)
            fail(e, "node-verification", "node " + std::to_string(i + 1) + " (" + e.nodes[i].label + "): " + to_string(st));
    }
    e.checks.push_back("distinct-nodes");
    e.checks.push_back("node-verification");
}

void load_relation_set(CatalogEntry& e, const Catalog& cat) {
    const Json& p = e.payload;
    const std::size_t s = p.at("s").get<std::size_t>();
    std::vector<std::string> labels;
    if (p.contains("labels")) labels = p.at("labels").get<std::vector<std::string>>();
    if (!labels.empty() && labels.size() != s) fail(e, "schema", "label count differs from s");
    e.relations = rational_rows_from_json(p.at("relations"));
    for (const auto& r : e.relations)
        if (r.size() != s) fail(e, "schema", "relation of wrong length");
    e.matrix = build_lattice_from_relations(e.relations, s, labels);
    if (!rows_orthogonal(e.matrix->rows, e.relations)) fail(e, "orthogonality", "derived A is not orthogonal to B");
    if (e.matrix->k() + rows_rank(e.relations) != s) fail(e, "complementarity", "dim A + dim B != s");
    e.checks.push_back("orthogonality");
    e.checks.push_back("complementarity");
    if (p.contains("variety")) {
        const std::string vname = p.at("variety").get<std::string>();
        const CatalogEntry v = cat.load(vname);
        if (v.kind != EntryKind::Variety) fail(e, "label-match", "'" + vname + "' is not a variety");
        std::vector<std::string> node_labels, own = labels;
        for (const auto& n : v.nodes) node_labels.push_back(n.label);
        std::sort(node_labels.begin(), node_labels.end());
        std::sort(own.begin(), own.end());
        if (node_labels != own) fail(e, "label-match", "labels do not match the nodes of '" + vname + "'");
        e.checks.push_back("label-match");
    }
}

void load_matrix(CatalogEntry& e) {
    const Json& p = e.payload;
    e.matrix = intersection_matrix_from_json(p);
    if (!e.matrix->labels.empty() && e.matrix->labels.size() != e.matrix->s())
        fail(e, "schema", "label count differs from s");
    if (p.contains("relations")) {
        e.relations = rational_rows_from_json(p.at("relations"));
        for (const auto& r : e.relations)
            if (r.size() != e.matrix->s()) fail(e, "schema", "relation of wrong length");
        if (!rows_orthogonal(e.matrix->rows, e.relations)) fail(e, "orthogonality", "rows not orthogonal to relations");
        if (rank(e.matrix->rows) + rows_rank(e.relations) != e.matrix->s())
            fail(e, "complementarity", "rank A + rank B != s");
        e.checks.push_back("orthogonality");
        e.checks.push_back("complementarity");
    }
}

std::optional<Integer> opt_integer(const Json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return integer_from_json(j.at(key));
}

void load_bounds(CatalogEntry& e) {
    BoundsDatum b;
    b.n = e.payload.at("n").get<unsigned>();
    unsigned last = 0;
    for (const auto& r : e.payload.at("rows")) {
        KnownBound k;
        k.d = r.at("d").get<unsigned>();
        if (k.d <= last) fail(e, "schema", "bounds rows must have increasing d");
        last = k.d;
        k.upper_published = opt_integer(r, "upper_published");
        k.upper_corrected = opt_integer(r, "upper_corrected");
        k.lower = opt_integer(r, "lower");
        k.lower_published = opt_integer(r, "lower_published");
        k.lower_source = r.value("lower_source", std::string());
        b.rows.push_back(std::move(k));
    }
    e.bounds = std::move(b);
}

}  // namespace

CatalogEntry Catalog::parse(const Json& j) const {
    CatalogEntry e;
    try {
        e.name = j.at("name").get<std::string>();
        e.schema_version = j.at("schema_version").get<int>();
        e.kind = parse_entry_kind(j.at("kind").get<std::string>());
        e.provenance = j.value("provenance", std::string());
        e.description = j.value("description", std::string());
        e.payload = j.at("payload");
        if (j.contains("expected"))
            for (const auto& [key, v] : j.at("expected").items()) {
                Expectation x{key, v.at("value"), v.at("tag").get<std::string>(), v};
                if (x.tag != "published" && x.tag != "computed")
                    throw ValidationError("expectation '" + key + "' has tag '" + x.tag + "'");
                e.expected.push_back(std::move(x));
            }
    } catch (const nlohmann::json::exception& ex) {
        throw ValidationError("catalog entry '" + e.name + "': check 'schema' failed: " + ex.what());
    }
    if (e.schema_version != kCatalogSchemaVersion)
        fail(e, "schema", "unsupported schema_version " + std::to_string(e.schema_version));
    try {
        switch (e.kind) {
            case EntryKind::Variety: load_variety(e); break;
            case EntryKind::RelationSet: load_relation_set(e, *this); break;
            case EntryKind::IntersectionMatrix: load_matrix(e); break;
            case EntryKind::BoundsDatum: load_bounds(e); break;
        }
    } catch (const nlohmann::json::exception& ex) {
        fail(e, "schema", ex.what());
    }
    return e;
}

namespace {

struct Evaluator {
    const CatalogEntry& e;
    const RunOptions& opt;
    std::optional<DefectReport> exact;
    std::optional<CountReport> count;

    void note(const std::string& what) {
        if (opt.progress) opt.progress(e.name + ": " + what);
    }

    const DefectReport& defect() {
        if (!exact) {
            note("exact defect");
            exact = defect_exact(*e.variety, e.nodes);
        }
        return *exact;
    }

    const CountReport& counted() {
        if (!count) {
            note("counting projective flips");
            CountOptions co;
            co.workers = opt.workers;
            co.cap = std::max<std::size_t>(co.cap, e.matrix->s());
            count = count_projective(*e.matrix, co);
        }
        return *count;
    }

    std::vector<BoundsRow> bound_rows(const Expectation& x) {
        unsigned lo = e.bounds->rows.front().d, hi = e.bounds->rows.back().d;
        if (x.meta.contains("d")) {
            lo = x.meta.at("d").at(0).get<unsigned>();
            hi = x.meta.at("d").at(1).get<unsigned>();
        }
        if (e.bounds->n == 3) return mu3_upper_row(lo, hi);
        if (e.bounds->n == 4) return mu4_rows(lo, hi);
        throw ValidationError("bounds tables exist for n = 3 and n = 4 only");
    }

    Json actual(const Expectation& x) {
        const std::string& k = x.key;
        switch (e.kind) {
            case EntryKind::Variety:
                if (k == "node_count") return e.nodes.size();
                if (k == "defect") return defect().defect;
                if (k == "rank") return defect().rank;
                if (k == "defect_modular") {
                    const auto p = x.meta.at("prime").get<std::uint64_t>();
                    note("modular defect p = " + std::to_string(p));
                    return defect_modular(*e.variety, e.nodes, p).defect;
                }
                if (k == "betti") {
                    const auto r = betti_report(e.variety->kind, e.variety->degree,
                                                static_cast<long long>(e.nodes.size()),
                                                static_cast<long long>(defect().defect));
                    return Json{{"b2", r.v_hat.b2}, {"b3", r.v_hat.b3}, {"e", r.v_hat.e}, {"h11", r.h11}, {"h21", r.h21}};
                }
                break;
            case EntryKind::RelationSet:
            case EntryKind::IntersectionMatrix:
                if (k == "rank") return rank(e.matrix->rows);
                if (k == "relations_rank") return rows_rank(e.relations);
                if (k == "projective_count") return integer_to_json(counted().projective_count);
                if (k == "total") return integer_to_json(counted().total);
                if (k == "nullhomologous_columns") return nullhomologous_columns(*e.matrix);
                break;
            case EntryKind::BoundsDatum: {
                Json out = Json::array();
                for (const auto& r : bound_rows(x)) {
                    if (k == "arnold") out.push_back(integer_to_json(r.arnold));
                    else if (k == "bruce") out.push_back(integer_to_json(r.bruce));
                    else if (k == "combined_upper") out.push_back(integer_to_json(r.combined_upper));
                    else if (k == "miyaoka") out.push_back(r.miyaoka ? integer_to_json(*r.miyaoka) : Json(nullptr));
                    else throw ValidationError("unknown expectation key '" + k + "'");
                }
                return out;
            }
        }
        throw ValidationError("unknown expectation key '" + k + "' for a " + to_string(e.kind));
    }
};

}  // namespace

std::vector<ExpectationResult> run_expectations(const CatalogEntry& e, const RunOptions& opt) {
    Evaluator ev{e, opt, {}, {}};
    std::vector<ExpectationResult> out;
    for (const auto& x : e.expected) {
        ExpectationResult r{e.name, x.key, x.tag, x.value, nullptr, false, {}};
        try {
            r.actual = ev.actual(x);
            r.pass = r.actual == r.expected;
        } catch (const std::exception& ex) {
            r.note = ex.what();
        }
        if (x.meta.contains("prime")) r.key += "@" + std::to_string(x.meta.at("prime").get<std::uint64_t>());
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<ExpectationResult> run_expectations(const Catalog& c, const std::string& name, const RunOptions& opt) {
    try {
        return run_expectations(c.load(name), opt);
    } catch (const std::exception& ex) {
        return {ExpectationResult{name, "load", "", nullptr, nullptr, false, ex.what()}};
    }
}

std::vector<ExpectationResult> run_all_expectations(const Catalog& c, const RunOptions& opt) {
    std::vector<ExpectationResult> out;
    for (const auto& name : c.list()) {
        auto rows = run_expectations(c, name, opt);
        out.insert(out.end(), rows.begin(), rows.end());
    }
    return out;
}

Json to_json(const ExpectationResult& r) {
    Json j{{"entry", r.entry}, {"key", r.key}, {"tag", r.tag}, {"expected", r.expected},
           {"actual", r.actual}, {"pass", r.pass}};
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

void attach_known_bounds(std::vector<BoundsRow>& rows, const BoundsDatum& b) {
    for (auto& row : rows) {
        if (row.n != b.n) continue;
        for (const auto& k : b.rows) {
            if (k.d != row.d || !k.lower) continue;
            row.known_lower = k.lower;
            if (!k.lower_source.empty()) row.source += "; lower: " + k.lower_source;
        }
    }
}

}  // namespace nodal

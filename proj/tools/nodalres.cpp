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

// nodalres: command-line front end. Reports go to stdout, progress and
// diagnostics to stderr. Exit codes: 0 success, 1 usage error, 2 validation
// failure.

#include "nodal/catalog.hpp"
#include "nodal/chebyshev.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace nodal;

namespace {

class UsageError : public Error {
public:
    using Error::Error;
};

struct Common {
    std::string format = "json";
    std::string catalog_dir;
    std::string catalog_name;
    std::string file;
    std::string chmutov;

    Catalog catalog() const { return catalog_dir.empty() ? Catalog() : Catalog(catalog_dir); }
};

void add_format(CLI::App* app, Common& c) {
    app->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
}

void add_input(CLI::App* app, Common& c, bool chmutov) {
    auto* a = app->add_option("--catalog", c.catalog_name, "Catalog entry name");
    auto* b = app->add_option("--file", c.file, "Catalog-format JSON file");
    a->excludes(b);
    if (chmutov) {
        auto* d = app->add_option("--chmutov", c.chmutov,
                                  "Chmutov variety as p4:N:SIGNS or ds:N:SIGNS:(+1|-1), e.g. ds:8:++-:+1");
        d->excludes(a)->excludes(b);
    }
}

// ---------- output ----------

std::string scalar_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

std::string csv_cell(const Json& v) {
    std::string s = scalar_text(v);
    if (s.find_first_of(",\"\n") != std::string::npos) {
        std::string q = "\"";
        for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
        return q + "\"";
    }
    return s;
}

// Arrays of flat objects become tables; everything else becomes key/value rows.
void emit(const Json& j, const std::string& format, const std::string& table_key = {}) {
    if (format == "json") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    const Json* table = nullptr;
    if (j.is_array()) table = &j;
    else if (!table_key.empty() && j.contains(table_key)) table = &j.at(table_key);
    if (format == "csv") {
        if (table && !table->empty() && table->front().is_object()) {
            bool first = true;
            for (const auto& [k, v] : table->front().items()) {
                std::cout << (first ? "" : ",") << k;
                first = false;
            }
            std::cout << "\n";
            for (const auto& row : *table) {
                first = true;
                for (const auto& [k, v] : row.items()) {
                    std::cout << (first ? "" : ",") << csv_cell(v);
                    first = false;
                }
                std::cout << "\n";
            }
            return;
        }
        std::cout << "key,value\n";
        for (const auto& [k, v] : j.items()) std::cout << k << "," << csv_cell(v) << "\n";
        return;
    }
    // text
    if (j.is_object())
        for (const auto& [k, v] : j.items()) {
            if (table && &v == table) continue;
            std::cout << k << ": " << (v.is_array() || v.is_object() ? v.dump() : scalar_text(v)) << "\n";
        }
    if (table)
        for (const auto& row : *table) {
            std::string line;
            if (row.is_object())
                for (const auto& [k, v] : row.items()) line += (line.empty() ? "" : "  ") + k + "=" + scalar_text(v);
            else line = scalar_text(row);
            std::cout << line << "\n";
        }
}

// ---------- input ----------

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(path + ": malformed JSON: " + e.what());
    }
}

CatalogEntry load_entry(const Common& c) {
    const Catalog cat = c.catalog();
    if (!c.catalog_name.empty()) {
        if (!cat.contains(c.catalog_name)) throw UsageError("unknown catalog entry '" + c.catalog_name + "'");
        return cat.load(c.catalog_name);
    }
    if (!c.file.empty()) {
        Json j = read_json_file(c.file);
        // A bare matrix file {"s", "rows"} is accepted as an intersection matrix.
        if (!j.contains("kind") && j.contains("rows"))
            j = Json{{"schema_version", kCatalogSchemaVersion}, {"name", c.file}, {"kind", "intersection-matrix"}, {"payload", j}};
        return cat.parse(j);
    }
    throw UsageError("an input is required: --catalog NAME or --file PATH");
}

std::pair<NodalVariety, NodeSet> load_variety(const Common& c) {
    if (!c.chmutov.empty()) {
        std::vector<std::string> parts;
        std::stringstream ss(c.chmutov);
        for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
        if (parts.size() < 3) throw UsageError("--chmutov expects p4:N:SIGNS or ds:N:SIGNS:CONST");
        VarietyKind kind;
        if (parts[0] == "p4") kind = VarietyKind::HypersurfaceP4;
        else if (parts[0] == "ds") kind = VarietyKind::DoubleSolidP3;
        else throw UsageError("--chmutov kind must be p4 or ds");
        unsigned n;
        try {
            n = static_cast<unsigned>(std::stoul(parts[1]));
        } catch (const std::exception&) {
            throw UsageError("--chmutov degree is not a number");
        }
        SignPattern sp;
        for (char ch : parts[2]) {
            if (ch != '+' && ch != '-') throw UsageError("--chmutov signs must be + or -");
            sp.signs.push_back(ch == '+' ? 1 : -1);
        }
        if (parts.size() > 3) {
            if (parts[3] == "+1" || parts[3] == "1") sp.constant = 1;
            else if (parts[3] == "-1") sp.constant = -1;
            else throw UsageError("--chmutov constant must be +1 or -1");
        }
        NodalVariety v = chmutov_variety(kind, n, sp);
        NodeSet nodes = enumerate_nodes(v);
        return {std::move(v), std::move(nodes)};
    }
    CatalogEntry e = load_entry(c);
    if (e.kind != EntryKind::Variety) throw UsageError("'" + e.name + "' is a " + to_string(e.kind) + ", not a variety");
    return {*e.variety, e.nodes};
}

IntersectionMatrix load_matrix(const Common& c) {
    CatalogEntry e = load_entry(c);
    if (!e.matrix) throw UsageError("'" + e.name + "' has no intersection matrix");
    return *e.matrix;
}

// ---------- subcommands ----------

int cmd_nodes(const Common& c) {
    const auto [v, nodes] = load_variety(c);
    Json out{{"variety", v.name}, {"kind", to_string(v.kind)}, {"degree", v.degree}, {"s", nodes.size()}};
    Json rows = Json::array();
    bool ok = true;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const NodeStatus st = verify_node(v, nodes[i]);
        ok = ok && st == NodeStatus::Ok;
        Json coords = Json::array();
        for (const auto& x : nodes[i].coords) coords.push_back(x.to_string());
        rows.push_back(Json{{"index", i + 1}, {"label", nodes[i].label}, {"status", to_string(st)}, {"coords", coords}});
    }
    out["all_verified"] = ok;
    out["nodes"] = rows;
    emit(out, c.format, "nodes");
    return ok ? 0 : 2;
}

int cmd_defect(const Common& c, const std::vector<std::uint64_t>& primes, bool modular_only, bool no_timing) {
    const auto [v, nodes] = load_variety(c);
    Json out{{"variety", v.name}, {"s", nodes.size()}};
    Json reports = Json::array();
    auto fix = [&](DefectReport r) {
        if (no_timing) r.runtime_ms = 0;
        return r;
    };
    if (!modular_only) {
        std::cerr << "exact rank over " << (v.field ? "Q(a)" : "Q") << " ...\n";
        const DefectReport r = fix(defect_exact(v, nodes));
        out["defect_exact"] = r.defect;
        reports.push_back(to_json(r));
    } else if (primes.empty()) {
        throw UsageError("--modular-only needs --prime");
    }
    Json dp = Json::object();
    for (auto p : primes) {
        std::cerr << "rank mod " << p << " ...\n";
        const DefectReport r = fix(defect_modular(v, nodes, p));
        dp[std::to_string(p)] = r.defect;
        reports.push_back(to_json(r));
    }
    if (!primes.empty()) out["defect_modular"] = dp;
    out["reports"] = reports;
    emit(out, c.format, "reports");
    return 0;
}

int cmd_count(const Common& c, unsigned workers, std::size_t cap, bool witnesses) {
    if (workers < 1) throw UsageError("--workers must be at least 1");
    const IntersectionMatrix m = load_matrix(c);
    CountOptions opt;
    opt.workers = workers;
    opt.cap = cap;
    opt.witnesses = witnesses;
    if (m.s() >= 16)
        opt.progress = [](std::uint64_t done, std::uint64_t total) {
            std::cerr << "\rflips " << done << "/" << total << std::flush;
            if (done == total) std::cerr << "\n";
        };
    const CountReport r = count_projective(m, opt);
    emit(to_json(r), c.format, "witnesses");
    return 0;
}

int cmd_relations(const Common& c) {
    const IntersectionMatrix m = load_matrix(c);
    const auto rel = relations(m);
    Json out{{"s", m.s()}, {"labels", m.labels}, {"dim_a", rank(m.rows)}, {"dim_b", rel.size()},
             {"relations", rational_rows_to_json(rel)}};
    emit(out, c.format);
    return 0;
}

int cmd_betti(const Common& c, const std::string& kind, unsigned n, long long s, long long d, long long s1) {
    BettiReport r;
    if (!c.catalog_name.empty() || !c.file.empty() || !c.chmutov.empty()) {
        const auto [v, nodes] = load_variety(c);
        std::cerr << "exact defect ...\n";
        const DefectReport dr = defect_exact(v, nodes);
        r = betti_report(v.kind, v.degree, static_cast<long long>(nodes.size()), static_cast<long long>(dr.defect), s1);
    } else {
        if (kind.empty() || n == 0 || s < 0 || d < 0) throw UsageError("betti needs an input or --kind, --n, --s and --d");
        r = betti_report(parse_variety_kind(kind), n, s, d, s1);
    }
    emit(to_json(r), c.format);
    return 0;
}

std::pair<unsigned, unsigned> parse_range(const std::string& text) {
    const auto pos = text.find("..");
    try {
        if (pos == std::string::npos) {
            const unsigned v = static_cast<unsigned>(std::stoul(text));
            return {v, v};
        }
        return {static_cast<unsigned>(std::stoul(text.substr(0, pos))),
                static_cast<unsigned>(std::stoul(text.substr(pos + 2)))};
    } catch (const std::exception&) {
        throw UsageError("range must look like 2..12");
    }
}

int cmd_arnold(const Common& c, bool mu3, bool mu4, const std::string& range, unsigned asymptotic) {
    if (asymptotic) {
        const AsymptoticReport r = asymptotic_check(asymptotic);
        Json rows = Json::array();
        for (const auto& e : r.entries)
            rows.push_back(Json{{"n", e.n}, {"a", to_string(e.a)}, {"c", to_string(e.c)}, {"sqrt_n_a", e.sqrt_n_a},
                                {"sqrt_n_c", e.sqrt_n_c}, {"rel_dev_a", e.rel_dev_a}, {"rel_dev_c", e.rel_dev_c}});
        Json out{{"limit_a", r.limit_a}, {"limit_c", r.limit_c}, {"a_strictly_decreasing", r.a_strictly_decreasing},
                 {"deviations_shrink", r.deviations_shrink}, {"entries", rows}};
        emit(out, c.format, "entries");
        return 0;
    }
    if (mu3 == mu4) throw UsageError("choose exactly one of --mu3 and --mu4");
    auto [lo, hi] = range.empty() ? std::pair<unsigned, unsigned>{2, mu3 ? 12u : 5u} : parse_range(range);
    if (lo < 2 || hi < lo) throw UsageError("degree range must satisfy 2 <= a <= b");
    auto rows = mu3 ? mu3_upper_row(lo, hi) : mu4_rows(lo, hi);
    const Catalog cat = c.catalog();
    const std::string datum = mu3 ? "mu3-bounds" : "mu4-bounds";
    if (cat.contains(datum)) attach_known_bounds(rows, *cat.load(datum).bounds);
    Json out = Json::array();
    for (const auto& r : rows) {
        Json j = to_json(r);
        j.erase("n");
        out.push_back(j);
    }
    emit(out, c.format);
    return 0;
}

std::vector<Integer> parse_minpoly(const std::string& text) {
    std::vector<Integer> c;
    std::stringstream ss(text);
    for (std::string p; std::getline(ss, p, ',');) {
        try {
            c.emplace_back(p);
        } catch (const std::exception&) {
            throw UsageError("--minpoly expects comma-separated integers c0,c1,...,1");
        }
    }
    return c;
}

int cmd_inert(const Common& c, const std::string& minpoly, unsigned n, std::uint64_t prime, std::uint64_t start) {
    MinimalPolynomial m({0, 1});
    if (!minpoly.empty()) m = MinimalPolynomial(parse_minpoly(minpoly));
    else if (n) {
        const CosField f = cos_field(n);
        if (!f.field) throw ValidationError("Q(cos(pi/" + std::to_string(n) + ")) is Q; every prime is inert");
        m = f.field->minpoly();
    } else {
        throw UsageError("inert-prime needs --minpoly or --n");
    }
    Json coeffs = Json::array();
    for (const auto& x : m.coeffs()) coeffs.push_back(integer_to_json(x));
    Json out{{"minpoly", coeffs}};
    if (prime) {
        out["prime"] = prime;
        out["inert"] = is_inert(m, prime);
    } else {
        out["prime"] = find_inert_prime(m, start);
        out["inert"] = true;
    }
    emit(out, c.format);
    return 0;
}

Json poly_coeffs(const Polynomial& p) {
    Json a = Json::array();
    for (int e = 0; e <= p.degree(); ++e) a.push_back(p.coefficient(static_cast<unsigned>(e)).to_string());
    return a;
}

int cmd_cheb(const Common& c, unsigned n, const std::string& show, int sign) {
    Json out{{"n", n}};
    if (show == "coefficients") {
        out["coefficients"] = poly_coeffs(chebyshev(n));
    } else if (show == "half") {
        out["half"] = poly_coeffs(cheb_half(n));
        out["identity"] = "T_n + 1 = 2^(n-1) F_n^2";
    } else {
        const ChebFactorization f = cheb_sum_factors(n, sign);
        out["sign"] = sign;
        out["scalar"] = f.scalar.to_string();
        Json fs = Json::array();
        for (std::size_t i = 0; i < f.factors.size(); ++i)
            fs.push_back(Json{{"mu", f.mu[i]}, {"factor", f.factors[i].to_string()}});
        out["factors"] = fs;
    }
    emit(out, c.format, "factors");
    return 0;
}

int cmd_catalog(const Common& c, const std::string& verb, const std::string& name, bool all, unsigned workers) {
    const Catalog cat = c.catalog();
    if (verb == "list") {
        Json rows = Json::array();
        for (const auto& n : cat.list()) {
            const Json raw = cat.raw(n);
            rows.push_back(Json{{"name", n}, {"kind", raw.value("kind", "")}, {"provenance", raw.value("provenance", "")}});
        }
        emit(rows, c.format);
        return 0;
    }
    if (verb == "show") {
        if (name.empty()) throw UsageError("catalog show needs a NAME");
        if (!cat.contains(name)) throw UsageError("unknown catalog entry '" + name + "'");
        const CatalogEntry e = cat.load(name);
        Json out{{"name", e.name}, {"kind", to_string(e.kind)}, {"provenance", e.provenance}};
        if (!e.description.empty()) out["description"] = e.description;
        out["checks"] = e.checks;
        if (e.variety) out["variety"] = to_json(*e.variety, e.nodes);
        if (e.matrix) out["matrix"] = to_json(*e.matrix);
        if (!e.relations.empty()) out["relations"] = rational_rows_to_json(e.relations);
        if (e.bounds) out["bounds"] = e.payload.at("rows");
        Json exp = Json::object();
        for (const auto& x : e.expected) exp[x.key] = x.meta;
        out["expected"] = exp;
        emit(out, c.format);
        return 0;
    }
    if (verb == "check") {
        if (all == !name.empty()) throw UsageError("catalog check needs exactly one of NAME and --all");
        RunOptions opt;
        opt.workers = workers;
        opt.progress = [](const std::string& s) { std::cerr << s << "\n"; };
        const auto rows = all ? run_all_expectations(cat, opt) : run_expectations(cat, name, opt);
        Json out = Json::array();
        bool ok = true;
        for (const auto& r : rows) {
            ok = ok && r.pass;
            out.push_back(to_json(r));
        }
        if (c.format == "json") emit(Json{{"pass", ok}, {"results", out}}, "json");
        else if (c.format == "csv") emit(out, "csv");
        else
            for (const auto& r : rows)
                std::cout << (r.pass ? "PASS " : "FAIL ") << r.entry << " " << r.key << " expected=" << r.expected.dump()
                          << " actual=" << r.actual.dump() << " [" << r.tag << "]"
                          << (r.note.empty() ? "" : " " + r.note) << "\n";
        return ok ? 0 : 2;
    }
    throw UsageError("catalog verbs: list, show, check");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nodalres: nodal threefolds, defects and small resolutions"};
    app.require_subcommand(1);
    Common c;
    app.add_option("--catalog-dir", c.catalog_dir, "Catalog directory (overrides NODALRES_CATALOG_DIR)");

    auto* nodes = app.add_subcommand("nodes", "Enumerate and verify nodes");
    add_input(nodes, c, true);
    add_format(nodes, c);

    std::vector<std::uint64_t> primes;
    bool modular_only = false, no_timing = false;
    auto* defect = app.add_subcommand("defect", "Exact defect and modular d'(p)");
    add_input(defect, c, true);
    add_format(defect, c);
    defect->add_option("--prime", primes, "Inert prime for d'(p); repeatable");
    defect->add_flag("--modular-only", modular_only, "Skip the exact computation");
    defect->add_flag("--no-timing", no_timing, "Report runtime_ms as 0");

    unsigned workers = 1;
    std::size_t cap = 20;
    bool witnesses = false;
    auto* count = app.add_subcommand("count", "Count projective small resolutions");
    add_input(count, c, false);
    add_format(count, c);
    count->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
    count->add_option("--cap", cap, "Largest s accepted");
    count->add_flag("--witnesses", witnesses, "Dump one ample divisor per projective flip");

    auto* rel = app.add_subcommand("relations", "Relation basis B of a matrix");
    add_input(rel, c, false);
    add_format(rel, c);

    std::string kind;
    unsigned n = 0;
    long long s = -1, d = -1, s1 = 0;
    auto* betti = app.add_subcommand("betti", "Betti and Hodge numbers");
    add_input(betti, c, true);
    add_format(betti, c);
    betti->add_option("--kind", kind, "hypersurface-P4 or double-solid-P3");
    betti->add_option("--n", n, "Degree");
    betti->add_option("--s", s, "Number of nodes");
    betti->add_option("--d", d, "Defect");
    betti->add_option("--s1", s1, "Nodes blown up in the mixed resolution");

    bool mu3 = false, mu4 = false;
    std::string range;
    unsigned asymptotic = 0;
    auto* arnold = app.add_subcommand("arnold", "Node-count bounds");
    add_format(arnold, c);
    arnold->add_flag("--mu3", mu3, "Surfaces in P3");
    arnold->add_flag("--mu4", mu4, "Hypersurfaces in P4");
    arnold->add_option("--d", range, "Degree range a..b");
    arnold->add_option("--asymptotic", asymptotic, "Density table up to n (>= 10)");

    std::string minpoly;
    unsigned cos_n = 0;
    std::uint64_t prime = 0, start = 3;
    auto* inert = app.add_subcommand("inert-prime", "Test or find an inert prime");
    add_format(inert, c);
    inert->add_option("--minpoly", minpoly, "Coefficients c0,c1,...,1");
    inert->add_option("--n", cos_n, "Use the minimal polynomial of Q(cos(pi/n))");
    inert->add_option("--prime", prime, "Prime to test");
    inert->add_option("--start", start, "Search start");

    unsigned cheb_n = 0;
    std::string show = "coefficients";
    int sign = 1;
    auto* cheb = app.add_subcommand("cheb", "Chebyshev polynomials and identities");
    add_format(cheb, c);
    cheb->add_option("--n", cheb_n, "Degree")->required();
    cheb->add_option("--show", show, "What to print")->check(CLI::IsMember({"coefficients", "factors", "half"}));
    cheb->add_option("--sign", sign, "+1 or -1 for factors of T_n(x) +- T_n(y)")->check(CLI::IsMember({1, -1}));

    std::string verb, name;
    bool all = false;
    auto* cat = app.add_subcommand("catalog", "List, show or check catalog entries");
    add_format(cat, c);
    cat->add_option("verb", verb, "list | show | check")->required()->check(CLI::IsMember({"list", "show", "check"}));
    cat->add_option("name", name, "Entry name");
    cat->add_flag("--all", all, "Check every entry");
    cat->add_option("--workers", workers, "Worker threads for counts")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (*nodes) return cmd_nodes(c);
        if (*defect) return cmd_defect(c, primes, modular_only, no_timing);
        if (*count) return cmd_count(c, workers, cap, witnesses);
        if (*rel) return cmd_relations(c);
        if (*betti) return cmd_betti(c, kind, n, s, d, s1);
        if (*arnold) return cmd_arnold(c, mu3, mu4, range, asymptotic);
        if (*inert) return cmd_inert(c, minpoly, cos_n, prime, start);
        if (*cheb) return cmd_cheb(c, cheb_n, show, sign);
        if (*cat) return cmd_catalog(c, verb, name, all, workers);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}

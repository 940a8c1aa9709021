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

#include "nodal/json_io.hpp"

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace nodal {

inline constexpr int kCatalogSchemaVersion = 1;

enum class EntryKind { Variety, RelationSet, IntersectionMatrix, BoundsDatum };
std::string to_string(EntryKind k);
EntryKind parse_entry_kind(const std::string& text);

/// One golden value. `value` is compared exactly against the computed result;
/// `meta` keeps the whole JSON object (prime, notes, published_value, ...).
struct Expectation {
    std::string key;
    Json value;
    std::string tag;  ///< "published" or "computed"
    Json meta;
};

struct KnownBound {
    unsigned d = 0;
    std::optional<Integer> upper_published;
    std::optional<Integer> upper_corrected;
    std::optional<Integer> lower;
    std::string lower_source;
    std::optional<Integer> lower_published;  ///< original claim when later corrected
};

/// Tabulated node-count bounds for hypersurfaces in P^n.
struct BoundsDatum {
    unsigned n = 0;
    std::vector<KnownBound> rows;
};

struct CatalogEntry {
    int schema_version = kCatalogSchemaVersion;
    std::string name;
    EntryKind kind = EntryKind::Variety;
    std::string provenance;
    std::string description;
    Json payload;
    std::vector<Expectation> expected;

    std::optional<NodalVariety> variety;
    NodeSet nodes;
    std::optional<IntersectionMatrix> matrix;  ///< derived from relations for relation sets
    std::vector<std::vector<Rational>> relations;
    std::optional<BoundsDatum> bounds;
    std::vector<std::string> checks;  ///< load-time checks that passed
};

/// $NODALRES_CATALOG_DIR if set, else the directory baked in at build time.
std::filesystem::path default_catalog_dir();

class Catalog {
public:
    explicit Catalog(std::filesystem::path dir = default_catalog_dir());

    const std::filesystem::path& dir() const { return dir_; }
    /// Entry names, sorted.
    std::vector<std::string> list() const;
    bool contains(const std::string& name) const;
    /// Parses and validates; throws Error for unknown names and
    /// ValidationError naming the failing check.
    CatalogEntry load(const std::string& name) const;
    /// Same as load, for an entry given as JSON (e.g. a user file).
    CatalogEntry parse(const Json& j) const;
    Json raw(const std::string& name) const;

private:
    std::filesystem::path dir_;
};

struct ExpectationResult {
    std::string entry;
    std::string key;
    std::string tag;
    Json expected;
    Json actual;
    bool pass = false;
    std::string note;
};

struct RunOptions {
    unsigned workers = 1;
    std::function<void(const std::string&)> progress;
};

/// Recomputes every expectation of the entry. Failures (including thrown
/// errors) become rows with pass = false.
std::vector<ExpectationResult> run_expectations(const CatalogEntry& e, const RunOptions& opt = {});
std::vector<ExpectationResult> run_expectations(const Catalog& c, const std::string& name, const RunOptions& opt = {});
/// Every entry in name order; entries that fail to load give one failing row.
std::vector<ExpectationResult> run_all_expectations(const Catalog& c, const RunOptions& opt = {});

Json to_json(const ExpectationResult& r);

/// Fills known_lower and extends `source` from the tabulated bounds.
void attach_known_bounds(std::vector<BoundsRow>& rows, const BoundsDatum& b);

}  // namespace nodal

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

#include "nodal/arnold.hpp"
#include "nodal/defect.hpp"
#include "nodal/reslattice.hpp"

#include <json.hpp>

#include <map>
#include <mutex>

namespace nodal {

using Json = nlohmann::ordered_json;

/// Shares one NumberField object per minimal polynomial, so elements parsed
/// from different places combine without copying fields.
class FieldRegistry {
public:
    FieldPtr get(const std::vector<Integer>& minpoly, const std::string& name = {});

private:
    std::mutex mu_;
    std::map<std::vector<std::string>, FieldPtr> fields_;
};

FieldRegistry& default_registry();

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);
Json integer_to_json(const Integer& z);
Integer integer_from_json(const Json& j);

Json minpoly_to_json(const MinimalPolynomial& m);
std::vector<Integer> minpoly_from_json(const Json& j);

/// "p/q" for rationals, {"minpoly", "coeffs"} for number-field elements.
Json to_json(const FieldElement& x);
FieldElement field_element_from_json(const Json& j, FieldRegistry& reg = default_registry());

Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j, FieldRegistry& reg = default_registry());

Json to_json(const IntersectionMatrix& m);
IntersectionMatrix intersection_matrix_from_json(const Json& j);
std::vector<std::vector<Rational>> rational_rows_from_json(const Json& j);
Json rational_rows_to_json(const std::vector<std::vector<Rational>>& rows);

Json to_json(const DefectReport& r);
DefectReport defect_report_from_json(const Json& j);

Json to_json(const CountReport& r);
CountReport count_report_from_json(const Json& j);

Json to_json(const BettiReport& r);
BettiReport betti_report_from_json(const Json& j);

Json to_json(const BoundsRow& r);

Json to_json(const NodalVariety& v, const NodeSet& nodes);

}  // namespace nodal

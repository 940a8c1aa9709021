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

#include <vector>

namespace nodal {

/// T_n by the three-term recurrence, as a univariate polynomial over Q.
Polynomial chebyshev(unsigned n);

/// T_n from the closed sum  sum_j (-1)^j C(n, 2j) x^(n-2j) (1 - x^2)^j.
Polynomial chebyshev_closed_form(unsigned n);

/// Monic F_n of degree n/2 with T_n + 1 = 2^(n-1) F_n^2 (n even, n >= 2).
Polynomial cheb_half(unsigned n);

/// Degrees n for which Q(cos(pi/n)) is built in.
const std::vector<unsigned>& supported_degrees();

/// The field Q(cos(pi/n)) (null for Q) and cos(pi/n) inside it. The field
/// object is shared across calls.
struct CosField {
    FieldPtr field;
    FieldElement cos_pi_n;
};
CosField cos_field(unsigned n);

/// cos(k pi / n) = T_k(cos(pi/n)), exact.
FieldElement cos_multiple(unsigned n, unsigned k);

/// c * prod C(mu) = T_n(x) + sign * T_n(y) in Q(cos(pi/n))[x, y].
struct ChebFactorization {
    unsigned n = 0;
    int sign = 1;
    FieldElement scalar;
    std::vector<unsigned> mu;
    std::vector<Polynomial> factors;
};

/// The line and conic factors C(mu), mu odd for sign +1 and even for sign -1,
/// in increasing mu. The identity is verified by expansion before returning.
ChebFactorization cheb_sum_factors(unsigned n, int sign);

}  // namespace nodal

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

#include "nodal/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nodal {

/// A_n(d): lattice points k in (0, d)^n with (n-2)d/2 + 1 < sum k <= nd/2.
Integer arnold_number(unsigned n, unsigned d);

/// Floor of the applicable of the three Bruce formulas.
Integer bruce_bound(unsigned n, unsigned d);

/// floor(4 d (d-1)^2 / 9) for d >= 3; nullopt below degree 3.
std::optional<Integer> miyaoka_bound(unsigned d);

struct BoundsRow {
    unsigned n = 0, d = 0;
    Integer arnold;
    Integer bruce;
    std::optional<Integer> miyaoka;
    Integer combined_upper;
    std::optional<Integer> known_lower;
    std::string source;
};

/// Surfaces in P3: combined_upper = min(A_3(d), Miyaoka when applicable).
std::vector<BoundsRow> mu3_upper_row(unsigned d_min, unsigned d_max);

/// Hypersurfaces in P4: combined_upper = min(A_4(d), Bruce).
std::vector<BoundsRow> mu4_rows(unsigned d_min, unsigned d_max);

/// binom(n, floor(n/2)) / 2^n.
Rational chmutov_density(unsigned n);

/// Volume of {x in [0,1]^n : (n-2)/2 <= sum x <= n/2}, exact.
Rational slab_volume(unsigned n);

/// Volume of {x in [0,1]^n : sum x <= t}, exact.
Rational cube_slice_volume(unsigned n, const Rational& t);

/// a_n = (2/pi) (n+1)/(n+2) * int_0^inf (sin x / x)^(n+2) dx by adaptive
/// Gauss-Kronrod quadrature; a floating-point cross-check only.
double slab_volume_quadrature(unsigned n);

struct AsymptoticEntry {
    unsigned n = 0;
    Rational a, c;
    std::string sqrt_n_a, sqrt_n_c;  ///< 50 significant digits
    double rel_dev_a = 0, rel_dev_c = 0;
};

struct AsymptoticReport {
    std::string limit_a, limit_c;  ///< sqrt(6/pi), sqrt(2/pi) to 50 digits
    std::vector<AsymptoticEntry> entries;
    bool a_strictly_decreasing = false;  ///< over 3 <= n <= n_max
    bool deviations_shrink = false;      ///< |dev| nonincreasing over the last ten n
};

AsymptoticReport asymptotic_check(unsigned n_max);

}  // namespace nodal

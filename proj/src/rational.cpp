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

#include "nodal/rational.hpp"

#include <cctype>

namespace nodal {

Rational parse_rational(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ValidationError("empty rational literal");
    if (s.front() == '+') s.erase(s.begin());
    const auto slash = s.find('/');
    auto check_digits = [&](const std::string& part, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && !part.empty() && part[0] == '-') i = 1;
        if (i >= part.size()) return false;
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
        return true;
    };
    Rational q;
    if (slash == std::string::npos) {
        if (!check_digits(s, true)) throw ValidationError("malformed rational '" + std::string(text) + "'");
        q = Rational(Integer(s), 1);
    } else {
        const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!check_digits(num, true) || !check_digits(den, false))
            throw ValidationError("malformed rational '" + std::string(text) + "'");
        Integer d(den);
        if (d == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
        q = Rational(Integer(num), d);
        q.canonicalize();
    }
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Rational pow(const Rational& base, unsigned long exp) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exp);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exp);
    return r;
}

}  // namespace nodal

/*
   Copyright 2026 The charproj authors

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

#include "charproj/rational.hpp"

#include <cctype>

namespace charproj {

Rational::Rational(long n, long d) {
    if (d == 0) throw value_error("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw value_error("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational::Rational(const mpq_class& q) : v_(q) {
    v_.canonicalize();
}

Rational Rational::parse(std::string_view s) {
    // grammar: [+-]? digits ( '/' digits )?
    std::size_t i = 0;
    auto fail = [&]() -> Rational {
        throw value_error("malformed rational \"" + std::string(s) + "\" (expected p or p/q)");
    };
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    std::size_t num_begin = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == num_begin) return fail();
    if (i < s.size()) {
        if (s[i] != '/') return fail();
        ++i;
        std::size_t den_begin = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == den_begin || i != s.size()) return fail();
    }
    // mpq_set_str rejects an explicit leading '+' that the grammar allows
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    mpq_class q(digits, 10);
    if (q.get_den() == 0) throw value_error("rational \"" + std::string(s) + "\" has denominator zero");
    q.canonicalize();
    return Rational(q);
}

std::string Rational::str() const {
    return v_.get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw division_by_zero_error("rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw division_by_zero_error("inverse of rational zero");
    return Rational(mpq_class(1) / v_);
}

} // namespace charproj

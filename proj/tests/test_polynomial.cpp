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

#include "doctest.h"
#include "test_support.hpp"

#include "charproj/errors.hpp"

using namespace test_support;

namespace {
const Polynomial kHecke7Charpoly =
    // X^7 + 3X^6 + 5X^5 + 7X^4 + X^3 - 5X^2 - 3X - 9
    qpoly({"-9", "-3", "-5", "1", "7", "5", "3", "1"});
}

TEST_CASE("ring operations") {
    const Polynomial xm1 = qpoly({"-1", "1"});
    const Polynomial xp1 = qpoly({"1", "1"});
    CHECK(xm1 * xp1 == qpoly({"-1", "0", "1"}));
    CHECK(xp1 * xp1 * xm1 == qpoly({"-1", "-1", "1", "1"})); // X^3 + X^2 - X - 1
    const Polynomial f = qpoly({"2", "0", "5"});
    CHECK(f + Polynomial(Q()) == f);
    CHECK((f - f).is_zero());
    CHECK(Polynomial(Q()).degree() == -1);
    CHECK(qpoly({"3"}).degree() == 0);

    // trailing zero coefficients are trimmed on construction
    CHECK(qpoly({"1", "1", "0", "0"}) == xp1);
}

TEST_CASE("division with remainder") {
    const Polynomial xm1 = qpoly({"-1", "1"});
    {
        const DivRem d = divrem(qpoly({"-1", "0", "1"}), xm1);
        CHECK(d.quot == qpoly({"1", "1"}));
        CHECK(d.rem.is_zero());
    }
    {
        const DivRem d = divrem(qpoly({"1", "0", "1"}), xm1);
        CHECK(d.quot == qpoly({"1", "1"}));
        CHECK(d.rem == qpoly({"2"}));
    }
    {
        const DivRem d = divrem(kHecke7Charpoly, xm1);
        CHECK(d.quot == qpoly({"9", "12", "17", "16", "9", "4", "1"}));
        CHECK(d.rem.is_zero());
    }
    CHECK_THROWS_AS(divrem(xm1, Polynomial(Q())), division_by_zero_error);

    Rng rng(23);
    for (int t = 0; t < 60; ++t) {
        const Polynomial f = rand_poly(Q(), rng, rand_int(rng, 0, 8));
        const Polynomial g = rand_poly(Q(), rng, rand_int(rng, 0, 5));
        const DivRem d = divrem(f, g);
        CHECK(d.quot * g + d.rem == f);
        CHECK(d.rem.degree() < g.degree());
    }
}

TEST_CASE("extended euclid") {
    const Polynomial xm1 = qpoly({"-1", "1"});
    const Polynomial xp1 = qpoly({"1", "1"});
    {
        const Xgcd b = xgcd(xm1, xp1);
        CHECK(b.d == Polynomial::one(Q()));
        CHECK(b.u == qpoly({"-1/2"}));
        CHECK(b.v == qpoly({"1/2"}));
    }
    {
        const Xgcd b = xgcd(xm1 * xm1, xm1);
        CHECK(b.d == xm1);
        CHECK(b.u.is_zero());
        CHECK(b.v == Polynomial::one(Q()));
    }
    {
        // u with (X-1)u = 1 mod (X+1)^2; hand-solved: u = -(X+3)/4
        const Xgcd b = xgcd(xm1, xp1 * xp1);
        CHECK(b.d == Polynomial::one(Q()));
        CHECK(b.u == qpoly({"-3/4", "-1/4"}));
        CHECK(mod(b.u * xm1, xp1 * xp1) == Polynomial::one(Q()));
    }
    CHECK_THROWS_AS(xgcd(Polynomial(Q()), Polynomial(Q())), value_error);

    Rng rng(31);
    for (int t = 0; t < 60; ++t) {
        const Polynomial f = rand_poly(Q(), rng, rand_int(rng, 0, 6));
        const Polynomial g = rand_poly(Q(), rng, rand_int(rng, 0, 6));
        const Xgcd b = xgcd(f, g);
        CHECK(b.u * f + b.v * g == b.d);
        CHECK(b.d.leading().is_one());
        CHECK(mod(f, b.d).is_zero());
        CHECK(mod(g, b.d).is_zero());
    }
}

TEST_CASE("gcd and lcm") {
    const Polynomial xm1 = qpoly({"-1", "1"});
    const Polynomial xp1 = qpoly({"1", "1"});
    const Polynomial xp2 = qpoly({"2", "1"});
    CHECK(gcd(xm1 * xp1, xm1 * xp2) == xm1);
    CHECK(lcm(xm1 * xp1, xm1 * xp2) == xm1 * xp1 * xp2);
    CHECK(gcd(xp1, xp2) == Polynomial::one(Q()));
    // gcd of scaled inputs is still monic
    CHECK(gcd(xm1 * qelem("6"), xm1 * qelem("-10")) == xm1);
}

TEST_CASE("synthetic division") {
    {
        const SyntheticDiv s = synthetic_divide(qpoly({"-1", "0", "1"}), qelem(1));
        CHECK(s.quot == qpoly({"1", "1"}));
        CHECK(s.rem.is_zero());
    }
    {
        const SyntheticDiv s = synthetic_divide(qpoly({"-1", "-1", "1", "1"}), qelem(-1));
        CHECK(s.quot == qpoly({"-1", "0", "1"}));
        CHECK(s.rem.is_zero());
    }
    {
        const SyntheticDiv s = synthetic_divide(qpoly({"1", "1"}), qelem(1));
        CHECK(s.quot == Polynomial::one(Q()));
        CHECK(s.rem == qelem(2));
    }
    Rng rng(37);
    for (int t = 0; t < 40; ++t) {
        const Polynomial f = rand_poly(Q(), rng, rand_int(rng, 0, 7));
        const FieldElement alpha = rand_element(Q(), rng);
        const SyntheticDiv s = synthetic_divide(f, alpha);
        const DivRem d = divrem(f, Polynomial::x_minus(alpha));
        CHECK(s.quot == d.quot);
        CHECK(Polynomial::constant(s.rem) == d.rem);
        CHECK(s.rem == f.eval(alpha));
    }
}

TEST_CASE("root valuation") {
    const Polynomial xm1 = qpoly({"-1", "1"});
    const Polynomial xp1 = qpoly({"1", "1"});
    {
        const RootValuation rv = root_valuation(xp1 * xp1 * xm1, qelem(-1));
        CHECK(rv.nu == 2);
        CHECK(rv.cofactor == xm1);
    }
    {
        const Polynomial f = pow(Polynomial::x(Q()), 8) * xp1 * xp1 * xm1;
        const RootValuation rv = root_valuation(f, qelem(0));
        CHECK(rv.nu == 8);
        CHECK(rv.cofactor == xp1 * xp1 * xm1);
    }
    {
        const RootValuation rv = root_valuation(qpoly({"1", "0", "1"}), qelem(2));
        CHECK(rv.nu == 0);
        CHECK(rv.cofactor == qpoly({"1", "0", "1"}));
    }
    Rng rng(41);
    for (int t = 0; t < 40; ++t) {
        const Polynomial f = rand_poly(Q(), rng, rand_int(rng, 1, 6));
        const FieldElement alpha = qelem(rand_int(rng, -3, 3));
        const RootValuation rv = root_valuation(f, alpha);
        CHECK_FALSE(rv.cofactor.eval(alpha).is_zero());
        CHECK(pow(Polynomial::x_minus(alpha), rv.nu) * rv.cofactor == f);
    }
}

TEST_CASE("evaluation") {
    const Context g = FieldContext::extension({rat("1"), rat("0"), rat("1")});
    const FieldElement i(g, {rat("0"), rat("1")});
    CHECK(embed_coeffs(qpoly({"1", "0", "1"}), g).eval(i).is_zero());
    CHECK(qpoly({"-1", "1"}).eval(qelem(1)).is_zero());
    CHECK(qpoly({"9", "12", "17", "16", "9", "4", "1"}).eval(qelem(1)) == qelem(68));
}

TEST_CASE("taylor shift") {
    const Polynomial x2 = qpoly({"0", "0", "1"});
    CHECK(taylor_shift(x2, qelem(1)) == qpoly({"1", "2", "1"}));
    // (X-1)^2 (X+1) shifted by 1 is X^2 (X+2)
    const Polynomial f = qpoly({"-1", "1"}) * qpoly({"-1", "1"}) * qpoly({"1", "1"});
    CHECK(taylor_shift(f, qelem(1)) == qpoly({"0", "0", "2", "1"}));

    Rng rng(43);
    for (int t = 0; t < 40; ++t) {
        const Polynomial p = rand_poly(Q(), rng, rand_int(rng, 0, 7));
        const FieldElement alpha = rand_element(Q(), rng);
        CHECK(taylor_shift(taylor_shift(p, alpha), -alpha) == p);
        // shift agrees with composition: g(x) = p(x + alpha) pointwise
        const FieldElement x0 = rand_element(Q(), rng);
        CHECK(taylor_shift(p, alpha).eval(x0) == p.eval(x0 + alpha));
    }
}

TEST_CASE("squarefree part") {
    const Polynomial xm1 = qpoly({"-1", "1"});
    const Polynomial xp1 = qpoly({"1", "1"});
    CHECK(squarefree_part(xp1 * xp1 * xm1) == xp1 * xm1);
    CHECK(squarefree_part(pow(Polynomial::x(Q()), 8) * xp1 * xp1 * xm1) ==
          Polynomial::x(Q()) * xp1 * xm1);
    // the leading coefficient is preserved: the contract is f / gcd(f, f')
    CHECK(squarefree_part(qpoly({"2", "0", "2"})) == qpoly({"2", "0", "2"}));
    CHECK(squarefree_part(qpoly({"2", "0", "2"})).monic() == qpoly({"1", "0", "1"}));

    Rng rng(47);
    for (int t = 0; t < 30; ++t) {
        const Polynomial f = rand_poly(Q(), rng, rand_int(rng, 1, 6));
        const Polynomial sf = squarefree_part(f);
        CHECK(gcd(sf, sf.derivative()) == Polynomial::one(Q()));
        CHECK(mod(f, sf).is_zero()); // squarefree part divides f
    }
}

TEST_CASE("squarefree decomposition") {
    const Polynomial xm1 = qpoly({"-1", "1"});
    const Polynomial xp1 = qpoly({"1", "1"});
    const Polynomial xm2 = qpoly({"-2", "1"});
    const Polynomial f = xm1 * pow(xp1, 2) * pow(xm2, 3) * qelem("6");
    const auto parts = squarefree_decomposition(f);
    REQUIRE(parts.size() == 3);
    CHECK(parts[0].factor == xm1);
    CHECK(parts[0].multiplicity == 1);
    CHECK(parts[1].factor == xp1);
    CHECK(parts[1].multiplicity == 2);
    CHECK(parts[2].factor == xm2);
    CHECK(parts[2].multiplicity == 3);

    Polynomial rebuilt = Polynomial::constant(f.leading());
    for (const auto& [factor, mult] : parts) rebuilt = rebuilt * pow(factor, mult);
    CHECK(rebuilt == f);
}

TEST_CASE("rational roots") {
    {
        const auto roots = rational_roots(kHecke7Charpoly);
        REQUIRE(roots.size() == 1);
        CHECK(roots[0].root == rat("1"));
        CHECK(roots[0].multiplicity == 1);
    }
    {
        const auto roots = rational_roots(qpoly({"-1", "-1", "1", "1"}));
        REQUIRE(roots.size() == 2);
        CHECK(roots[0].root == rat("-1"));
        CHECK(roots[0].multiplicity == 2);
        CHECK(roots[1].root == rat("1"));
        CHECK(roots[1].multiplicity == 1);
    }
    {
        // (2X - 1)(X + 3): non-integer root, ascending order
        const auto roots = rational_roots(qpoly({"-3", "5", "2"}));
        REQUIRE(roots.size() == 2);
        CHECK(roots[0].root == rat("-3"));
        CHECK(roots[1].root == rat("1/2"));
    }
    CHECK(rational_roots(qpoly({"1", "0", "1"})).empty());
    CHECK(rational_roots(qpoly({"5"})).empty());
    {
        // zero constant coefficient: root at 0
        const auto roots = rational_roots(qpoly({"0", "0", "-1", "1"}));
        REQUIRE(roots.size() == 2);
        CHECK(roots[0].root == rat("0"));
        CHECK(roots[0].multiplicity == 2);
        CHECK(roots[1].root == rat("1"));
    }
}

TEST_CASE("modular reduction, squaring, powers") {
    Rng rng(53);
    for (int t = 0; t < 30; ++t) {
        const Polynomial f = rand_poly(Q(), rng, rand_int(rng, 0, 8));
        const Polynomial g = rand_poly(Q(), rng, rand_int(rng, 1, 4));
        CHECK(mod(f, g) == divrem(f, g).rem);
        CHECK(sqr(f) == f * f);
        CHECK(pow(f, 3) == f * f * f);
        CHECK(pow(f, 0) == Polynomial::one(Q()));
    }
}

TEST_CASE("monic and derivative") {
    const Polynomial f = qpoly({"2", "4", "6"});
    CHECK(f.monic() == qpoly({"1/3", "2/3", "1"}));
    CHECK(f.derivative() == qpoly({"4", "12"}));
    CHECK(qpoly({"7"}).derivative().is_zero());
    CHECK(Polynomial(Q()).derivative().is_zero());
}

TEST_CASE("coefficient embedding") {
    const Context g = FieldContext::extension({rat("1"), rat("0"), rat("1")});
    const Polynomial f = qpoly({"1", "2", "3"});
    const Polynomial fe = embed_coeffs(f, g);
    CHECK(fe.context()->same(*g));
    CHECK(fe.degree() == f.degree());
    for (int i = 0; i <= f.degree(); ++i)
        CHECK(fe.coeff(std::size_t(i)).as_rational() ==
              f.coeff(std::size_t(i)).as_rational());
}

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

TEST_CASE("rational arithmetic stays reduced") {
    const Rational half = rat("1/2");
    const Rational third = rat("1/3");
    CHECK((half + third) == rat("5/6"));
    CHECK((half * rat("2/3")) == third);
    CHECK((rat("2/4")).str() == "1/2");
    CHECK((rat("-6/4")).str() == "-3/2");
    CHECK(rat("4").str() == "4");
    CHECK(rat("4").denominator() == 1);
    CHECK(rat("-10/15") == rat("-2/3"));

    Rng rng(7);
    for (int i = 0; i < 100; ++i) {
        const Rational a = rand_rational(rng);
        const Rational b = rand_rational(rng);
        for (const Rational& r : {a + b, a - b, a * b}) {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), r.numerator().get_mpz_t(),
                    r.denominator().get_mpz_t());
            CHECK(g == 1);
            CHECK(r.denominator() > 0);
        }
    }
}

TEST_CASE("rational parse is strict") {
    CHECK(rat("+3/4") == rat("3/4"));
    CHECK_THROWS_AS(rat("1/0"), value_error);
    CHECK_THROWS_AS(rat("1.5"), value_error);
    CHECK_THROWS_AS(rat(""), value_error);
    CHECK_THROWS_AS(rat("2/"), value_error);
    CHECK_THROWS_AS(rat("a"), value_error);
    CHECK_THROWS_AS(rat("1 /2"), value_error);
}

TEST_CASE("field context construction and validation") {
    CHECK(Q()->is_rationals());
    CHECK(Q()->degree() == 1);

    const Context gauss = FieldContext::extension({rat("1"), rat("0"), rat("1")});
    CHECK(gauss->degree() == 2);
    CHECK_FALSE(gauss->is_rationals());
    CHECK(gauss->str() == "Q[Y]/(Y^2 + 1)");

    // non-monic
    CHECK_THROWS_AS(FieldContext::extension({rat("1"), rat("0"), rat("2")}),
                    invalid_modulus_error);
    // degree too small
    CHECK_THROWS_AS(FieldContext::extension({rat("1"), rat("1")}), invalid_modulus_error);
    // rational root (Y^2 - 1 = (Y-1)(Y+1))
    CHECK_THROWS_AS(FieldContext::extension({rat("-1"), rat("0"), rat("1")}),
                    invalid_modulus_error);
    // rational root of a cubic (Y^3 - 8)
    CHECK_THROWS_AS(
        FieldContext::extension({rat("-8"), rat("0"), rat("0"), rat("1")}),
        invalid_modulus_error);
}

TEST_CASE("gaussian field arithmetic") {
    const Context g = FieldContext::extension({rat("1"), rat("0"), rat("1")});
    const FieldElement i(g, {rat("0"), rat("1")});
    const FieldElement one = FieldElement::one(g);

    CHECK(i * i == FieldElement::from_int(g, -1));
    CHECK((one + i) * (one - i) == FieldElement::from_int(g, 2));
    CHECK(i.inverse() == -i);
    CHECK((one + i).inverse() == FieldElement(g, {rat("1/2"), rat("-1/2")}));
    CHECK((one + i) * (one + i).inverse() == one);

    // constant embedding
    const FieldElement c = FieldElement::from_rational(g, rat("3/2"));
    CHECK(c.coeffs() == std::vector<Rational>{rat("3/2"), rat("0")});
    CHECK(FieldElement::from_rational(g, rat("0")).is_zero());
    CHECK(FieldElement::from_rational(g, rat("1")).is_one());
    CHECK(c.is_rational());
    CHECK_FALSE(i.is_rational());
    CHECK(c.as_rational() == rat("3/2"));
}

TEST_CASE("field axioms on random triples") {
    const Context g = FieldContext::extension(
        {rat("2"), rat("-1"), rat("0"), rat("1")}); // Y^3 - Y + 2, no rational root
    for (const Context& ctx : {Q(), g}) {
        Rng rng(11);
        for (int t = 0; t < 60; ++t) {
            const FieldElement a = rand_element(ctx, rng);
            const FieldElement b = rand_element(ctx, rng);
            const FieldElement c = rand_element(ctx, rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + (-a) == FieldElement::zero(ctx));
            if (!b.is_zero()) CHECK((a * b) * b.inverse() == a);
        }
    }
}

TEST_CASE("powers") {
    const Context g = FieldContext::extension({rat("1"), rat("0"), rat("1")});
    const FieldElement i(g, {rat("0"), rat("1")});
    CHECK(i.pow(0).is_one());
    CHECK(i.pow(2) == FieldElement::from_int(g, -1));
    CHECK(i.pow(4).is_one());
    CHECK(qelem("3").pow(4) == qelem("81"));
    CHECK(qelem("-1/2").pow(3) == qelem("-1/8"));
}

TEST_CASE("division by zero and context mismatch are loud") {
    CHECK_THROWS_AS(qelem("0").inverse(), division_by_zero_error);
    const Context g = FieldContext::extension({rat("1"), rat("0"), rat("1")});
    CHECK_THROWS_AS(qelem("1") + FieldElement::one(g), context_mismatch_error);
}

TEST_CASE("reducible modulus surfaces on inversion") {
    // (Y^2+1)^2 = Y^4 + 2Y^2 + 1: monic, no rational roots, reducible.
    const Context bad = FieldContext::extension(
        {rat("1"), rat("0"), rat("2"), rat("0"), rat("1")});
    const FieldElement yy1(bad, {rat("1"), rat("0"), rat("1"), rat("0")}); // Y^2+1
    CHECK_FALSE(yy1.is_zero());
    CHECK_THROWS_AS(yy1.inverse(), reducible_modulus_error);
    // honest elements still invert fine
    const FieldElement y(bad, {rat("0"), rat("1"), rat("0"), rat("0")});
    CHECK((y * y.inverse()).is_one());
}

TEST_CASE("context identity") {
    CHECK(same_context(Q(), Q()));
    const Context a = FieldContext::extension({rat("1"), rat("0"), rat("1")});
    const Context b = FieldContext::extension({rat("1"), rat("0"), rat("1")});
    CHECK(a->same(*b)); // equal moduli mean the same field
    CHECK_FALSE(a->same(*Q()));
}

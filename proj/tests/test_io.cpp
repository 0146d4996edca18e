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

#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "test_support.hpp"

#include "charproj/errors.hpp"
#include "charproj/io.hpp"

using namespace test_support;
namespace io = charproj::io;
using nlohmann::json;

namespace {

Context gauss() { return FieldContext::extension({Rational(1), Rational(0), Rational(1)}); }

std::filesystem::path scratch_dir() {
    const auto dir = std::filesystem::temp_directory_path() / "charproj_io_tests";
    std::filesystem::create_directories(dir);
    return dir;
}

Matrix fx_matrix() {
    return qmat({{"1/2", "-3", "0"}, {"7", "2/9", "-1/4"}});
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    return std::string(std::istreambuf_iterator<char>(in), {});
}

} // namespace

TEST_CASE("scalar codec") {
    const FieldElement q = qelem("-7/3");
    const json jq = io::scalar_to_json(q);
    CHECK(jq.is_string());
    CHECK(jq.get<std::string>() == "-7/3");
    CHECK(io::scalar_from_json(jq, Q()) == q);

    const Context g = gauss();
    const FieldElement z(g, {Rational(1, 2), Rational(-3)}); // 1/2 - 3i
    const json jz = io::scalar_to_json(z);
    CHECK(jz.is_array());
    CHECK(jz == json::array({"1/2", "-3"}));
    CHECK(io::scalar_from_json(jz, g) == z);

    // short coordinate arrays are padded with zeros
    CHECK(io::scalar_from_json(json::array({"3"}), g) ==
          FieldElement::from_rational(g, Rational(3)));

    // over an extension a bare string is not a scalar
    CHECK_THROWS_AS(io::scalar_from_json(json("3"), g), io_error);
    // over Q an array is not a scalar
    CHECK_THROWS_AS(io::scalar_from_json(json::array({"3"}), Q()), io_error);
    // malformed rational text is an I/O problem, not a crash
    CHECK_THROWS_AS(io::scalar_from_json(json("1.5"), Q()), io_error);
    CHECK_THROWS_AS(io::scalar_from_json(json(3), Q()), io_error);
    // more coordinates than the field degree
    CHECK_THROWS_AS(io::scalar_from_json(json::array({"1", "2", "3"}), g), io_error);
}

TEST_CASE("polynomial codec") {
    const Polynomial f = qpoly({"-9", "-3", "-5", "1", "7", "5", "3", "1"});
    const json j = io::polynomial_to_json(f);
    CHECK(j.is_array());
    CHECK(j[0] == "-9");
    CHECK(io::polynomial_from_json(j, Q()) == f);

    // zero polynomial round trips through the empty array
    CHECK(io::polynomial_to_json(Polynomial(Q())) == json::array());
    CHECK(io::polynomial_from_json(json::array(), Q()).is_zero());

    // trailing zero coefficients are trimmed on parse
    CHECK(io::polynomial_from_json(json::array({"1", "0"}), Q()) == qpoly({"1"}));

    const Context g = gauss();
    const Polynomial over_ext(g, {FieldElement(g, {Rational(0), Rational(1)}),
                                  FieldElement::one(g)}); // X + i
    const json je = io::polynomial_to_json(over_ext);
    CHECK(je[0] == json::array({"0", "1"}));
    CHECK(io::polynomial_from_json(je, g) == over_ext);

    CHECK_THROWS_AS(io::polynomial_from_json(json{{"a", 1}}, Q()), io_error);
}

TEST_CASE("matrix codec") {
    Rng rng(211);
    const Matrix m = rand_matrix(Q(), rng, 3, 2);
    const json j = io::matrix_to_json(m);
    CHECK(j["rows"] == 3);
    CHECK(j["cols"] == 2);
    CHECK(!j.contains("field")); // Q is the default field
    CHECK(io::matrix_from_json(j) == m);
    CHECK(io::context_from_json(j)->is_rationals());

    const Context g = gauss();
    Matrix mg(g, 2, 2);
    mg.at(0, 1) = FieldElement(g, {Rational(0), Rational(1)});
    const json jg = io::matrix_to_json(mg);
    CHECK(jg["field"]["modulus"] == json::array({"1", "0", "1"}));
    const Matrix back = io::matrix_from_json(jg);
    CHECK(back == mg);
    CHECK(back.context()->same(*g));

    // zero-column matrices (empty kernels) survive the round trip
    const Matrix empty(Q(), 3, 0);
    CHECK(io::matrix_from_json(io::matrix_to_json(empty)) == empty);

    CHECK_THROWS_AS(io::matrix_from_json(json::array({1, 2})), io_error);
    CHECK_THROWS_AS(io::matrix_from_json(json{{"rows", 2}, {"cols", 2}}), io_error);
    CHECK_THROWS_AS(io::matrix_from_json(json{{"rows", 2},
                                              {"cols", 1},
                                              {"entries", {{"1"}}}}),
                    io_error); // row count disagrees
    CHECK_THROWS_AS(io::matrix_from_json(json{{"rows", 1},
                                              {"cols", 2},
                                              {"entries", {{"1"}}}}),
                    io_error); // column count disagrees
    CHECK_THROWS_AS(io::matrix_from_json(json{{"rows", -1},
                                              {"cols", 2},
                                              {"entries", json::array()}}),
                    io_error);
}

TEST_CASE("eigenvalue codec") {
    const auto r = EigenvalueDescriptor::rational(rat("-2/5"));
    const json jr = io::eigenvalue_to_json(r);
    CHECK(jr == json{{"rational", "-2/5"}});
    CHECK(io::eigenvalue_from_json(jr).is_rational());
    CHECK(io::eigenvalue_from_json(jr).str() == r.str());

    const auto a = EigenvalueDescriptor::algebraic({Rational(1), Rational(0), Rational(1)},
                                                   {Rational(0), Rational(1)});
    const json ja = io::eigenvalue_to_json(a);
    CHECK(ja["modulus"] == json::array({"1", "0", "1"}));
    CHECK(ja["element"] == json::array({"0", "1"}));
    const auto back = io::eigenvalue_from_json(ja);
    CHECK(!back.is_rational());
    CHECK(back.str() == a.str());

    CHECK_THROWS_AS(io::eigenvalue_from_json(json::array()), io_error);
    CHECK_THROWS_AS(io::eigenvalue_from_json(json{{"modulus", {"1", "0", "1"}}}), io_error);
    // a reducible modulus is rejected when the descriptor is rebuilt
    CHECK_THROWS_AS(io::eigenvalue_from_json(json{{"modulus", {"-1", "0", "1"}},
                                                  {"element", {"0", "1"}}}),
                    io_error);
}

TEST_CASE("projection serialization") {
    const ProjectionResult p =
        projector(imat({{1, 1}, {0, 2}}), EigenvalueDescriptor::rational(rat("2")));
    const json j = io::projection_to_json(p);
    const std::vector<std::string> keys = {"annihilator", "eigenvalue", "nu",
                                           "proj_poly",   "projector",  "variant"};
    for (const auto& k : keys) CHECK(j.contains(k));
    CHECK(j["nu"] == 1);
    CHECK(j["variant"] == "euclid");
    CHECK(io::matrix_from_json(j["projector"]) == p.projector);
    CHECK(io::polynomial_from_json(j["proj_poly"], Q()) == p.proj_poly);
    CHECK(io::polynomial_from_json(j["annihilator"], Q()) == p.annihilator);
}

TEST_CASE("decomposition codec") {
    const BlockDecomposition d({{"a", imat({{-1}})}, {"b", imat({{2, 1}, {0, 2}})}},
                               imat({{1, 0, 0}, {1, 1, 0}, {0, -1, 1}}));
    const json j = io::decomposition_to_json(d);
    CHECK(j["ambient_dim"] == 3);
    CHECK(j["blocks"].size() == 2);
    CHECK(j["blocks"][0]["label"] == "a");

    const BlockDecomposition back = io::decomposition_from_json(j);
    CHECK(back.blocks().size() == 2);
    CHECK(back.blocks()[1].label == "b");
    CHECK(back.blocks()[1].op == d.blocks()[1].op);
    CHECK(back.change_of_basis() == d.change_of_basis());
    CHECK(back.ambient_operator() == d.ambient_operator());

    CHECK_THROWS_AS(io::decomposition_from_json(json{{"blocks", json::array()}}), io_error);
    json bad = j;
    bad["ambient_dim"] = 5;
    CHECK_THROWS_AS(io::decomposition_from_json(bad), io_error);
    json nolabel = j;
    nolabel["blocks"][0].erase("label");
    CHECK_THROWS_AS(io::decomposition_from_json(nolabel), io_error);
    // engine-level validation surfaces as io_error too: singular basis
    json singular = j;
    singular["change_of_basis"] =
        io::matrix_to_json(Matrix(Q(), 3, 3));
    CHECK_THROWS_AS(io::decomposition_from_json(singular), io_error);
}

TEST_CASE("canonical dump is byte-stable") {
    const json j{{"b", 1}, {"a", 2}};
    CHECK(io::dump_canonical(j) == "{\n  \"a\": 2,\n  \"b\": 1\n}\n");
    // serializing twice gives identical bytes
    const Matrix m = fx_matrix();
    const std::string once = io::dump_canonical(io::matrix_to_json(m));
    const std::string twice =
        io::dump_canonical(io::matrix_to_json(io::matrix_from_json(json::parse(once))));
    CHECK(once == twice);
    CHECK(once.back() == '\n');
}

TEST_CASE("file loading") {
    const auto dir = scratch_dir();

    CHECK_THROWS_AS(io::load_json_file((dir / "does_not_exist.json").string()), io_error);
    try {
        io::load_json_file((dir / "does_not_exist.json").string());
        FAIL("missing file must throw");
    } catch (const io_error& e) {
        CHECK(std::string(e.what()).find("cannot open") != std::string::npos);
    }

    const auto broken = dir / "broken.json";
    io::write_text_file(broken.string(), "{\n  \"a\": 1,\n}\n");
    try {
        io::load_json_file(broken.string());
        FAIL("malformed JSON must throw");
    } catch (const io_error& e) {
        // the parser's message pinpoints the failure
        CHECK(std::string(e.what()).find("line") != std::string::npos);
    }

    const auto good = dir / "good.json";
    const json payload = io::matrix_to_json(fx_matrix());
    io::write_text_file(good.string(), io::dump_canonical(payload));
    CHECK(slurp(good) == io::dump_canonical(payload));
    CHECK(io::matrix_from_json(io::load_json_file(good.string())) == fx_matrix());
}

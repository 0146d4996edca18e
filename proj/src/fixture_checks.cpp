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

#include "charproj/fixture_checks.hpp"

#include <filesystem>
#include <functional>

#include "charproj/errors.hpp"
#include "charproj/io.hpp"

namespace charproj::fixtures {

namespace {

const Context& Q() { return FieldContext::rationals(); }

Matrix int_matrix(const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<Rational>> r;
    r.reserve(rows.size());
    for (const auto& row : rows)
        r.emplace_back(row.begin(), row.end());
    return Matrix::from_rationals(Q(), r);
}

Matrix str_matrix(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::vector<Rational>> r;
    for (const auto& row : rows) {
        std::vector<Rational> parsed;
        parsed.reserve(row.size());
        for (const std::string& s : row)
            parsed.push_back(Rational::parse(s));
        r.push_back(std::move(parsed));
    }
    return Matrix::from_rationals(Q(), r);
}

Polynomial str_poly(const std::vector<std::string>& coeffs) {
    std::vector<Rational> parsed;
    parsed.reserve(coeffs.size());
    for (const std::string& s : coeffs)
        parsed.push_back(Rational::parse(s));
    return Polynomial::from_rationals(Q(), parsed);
}

} // namespace

Matrix t3_level30() {
    return int_matrix({{0, 0, -14, 2, 19, 7, -3},
                       {0, 0, -10, 1, 15, 4, -3},
                       {1, 0, -9, 1, 11, 3, -3},
                       {0, 0, -5, 0, 8, 3, -3},
                       {0, 0, -5, 1, 6, 2, 0},
                       {0, 1, -2, 0, 2, 0, -2},
                       {0, 0, -3, 0, 4, 2, 0}});
}

Polynomial t3_charpoly() {
    return str_poly({"-9", "-3", "-5", "1", "7", "5", "3", "1"});
}

Polynomial t3_projection_poly() {
    return str_poly({"9/68", "12/68", "17/68", "16/68", "9/68", "4/68", "1/68"});
}

Matrix t3_projector() {
    const std::vector<std::string> half{"-1/2", "1/2", "-1/2", "-1/2", "1/2", "1/2", "2"};
    const std::vector<std::string> quarter{"-1/4", "1/4", "-1/4", "-1/4", "1/4", "1/4", "1"};
    const std::vector<std::string> zero(7, "0");
    return str_matrix({half, half, quarter, zero, quarter, zero, quarter});
}

std::vector<std::string> level30_block_labels() {
    return {"S2(15)new-V1", "S2(15)new-V2", "S2(30)new"};
}

Matrix level30_change_of_basis() {
    return int_matrix({{1, -1, -1, -1, 1, 1, 0, 3, 1},
                       {0, 1, 0, -1, 0, -1, 0, -1, 0},
                       {1, 0, 0, 0, 0, 0, 0, 3, -14},
                       {0, 1, 0, 0, 0, 0, 0, 2, -10},
                       {0, 0, 1, 0, 0, 0, 0, 2, -9},
                       {0, 0, 0, 1, 0, 0, 0, 1, -5},
                       {0, 0, 0, 0, 1, 0, 0, 1, -5},
                       {0, 0, 0, 0, 0, 1, 0, 0, -2},
                       {0, 0, 0, 0, 0, 0, 1, 1, -3}});
}

Matrix level30_adapted_projector() {
    const Matrix p7 = t3_projector();
    Matrix out(Q(), 9, 9);
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = 0; j < 7; ++j)
            out.at(i + 2, j + 2) = p7.at(i, j);
    return out;
}

Matrix miller_basis_projector() {
    // rank one: every row is a multiple of the same eigenvector pattern
    const std::vector<std::string> col{"21/8", "7/4", "7/4", "9/8", "7/8",
                                       "1/2",  "3/8", "1/8", "1/4"};
    const std::vector<long> row{1, -1, 1, 1, -1, -1, -4, -1, 1};
    Matrix out(Q(), 9, 9);
    for (std::size_t i = 0; i < 9; ++i) {
        const Rational c = Rational::parse(col[i]);
        for (std::size_t j = 0; j < 9; ++j)
            out.at(i, j) = FieldElement::from_rational(Q(), c * Rational(row[j]));
    }
    return out;
}

Polynomial level30_ambient_projection_poly() {
    return str_poly({"9/272", "30/272", "50/272", "62/272", "58/272", "38/272", "18/272",
                     "6/272", "1/272"});
}

Polynomial floor30_annihilator() {
    return str_poly({"-1", "-1", "1", "1"});
}

Polynomial floor30_projection_poly() {
    return str_poly({"3/4", "-1/2", "-1/4"});
}

Matrix floor30_projector() {
    return str_matrix({{"1/2", "1/2", "-1/2"}, {"0", "1", "0"}, {"-1/2", "1/2", "1/2"}});
}

Polynomial level90_annihilator() {
    return str_poly({"0", "0", "0", "0", "0", "0", "0", "0", "-1", "-1", "1", "1"});
}

Polynomial level90_projection_poly() {
    return str_poly({"0", "0", "0", "0", "0", "0", "0", "0", "19/4", "-1/2", "-17/4"});
}

Matrix level90_projector() {
    std::vector<std::vector<std::string>> rows(11, std::vector<std::string>(11, "0"));
    rows[2] = {"-1/2", "-1/2", "1/2", "3/2", "-1/2", "1/2", "0", "-1/2", "-1/2", "-1/2", "2"};
    rows[5] = {"0", "-1", "0", "1", "0", "1", "0", "1", "0", "-1", "0"};
    rows[8] = {"1/2", "-1/2", "-1/2", "-1/2", "1/2", "1/2", "0", "3/2", "1/2", "-1/2", "-2"};
    return str_matrix(rows);
}

namespace {

void require(bool cond, const std::string& what) {
    if (!cond)
        throw integrity_error(what);
}

std::string check_t3(const std::string& path) {
    const Matrix m = io::matrix_from_json(io::load_json_file(path));
    require(m == t3_level30(), "operator matrix differs from the reference values");
    const Polynomial cp = charpoly(m);
    require(cp == t3_charpoly(), "characteristic polynomial mismatch");
    require(minpoly(m) == cp, "minimal polynomial should equal the characteristic one");
    const Polynomial g = polyproj(cp, FieldElement::from_int(Q(), 1), 1);
    require(g == t3_projection_poly(), "projection polynomial mismatch");
    const Matrix pi = eval_at(g, m);
    require(pi == t3_projector(), "projector matrix mismatch");
    require(pi.trace().is_one(), "projector trace should be 1");
    require(kernel(m - Matrix::identity(Q(), 7)).cols() == 1,
            "eigenspace of 1 should be a line");
    return "charpoly, minpoly, projection polynomial and projector for eigenvalue 1 "
           "all reproduced";
}

std::string check_all_level30(const std::string& path) {
    const BlockDecomposition d = io::decomposition_from_json(io::load_json_file(path));
    require(d.blocks().size() == 3, "expected three blocks");
    const std::vector<std::string> labels = level30_block_labels();
    for (std::size_t i = 0; i < 3; ++i)
        require(d.blocks()[i].label == labels[i], "block label mismatch");
    const Matrix minus_one = int_matrix({{-1}});
    require(d.blocks()[0].op == minus_one && d.blocks()[1].op == minus_one,
            "the two lines should carry the scalar -1");
    require(d.blocks()[2].op == t3_level30(), "7x7 block differs from the reference values");
    require(d.change_of_basis() == level30_change_of_basis(), "change of basis mismatch");

    ProjectorOptions opt;
    opt.annihilator = AnnihilatorChoice::CharPoly;
    const RecombinedProjection rec =
        recombine_block_projection(d, EigenvalueDescriptor::rational(Rational(1)), opt);
    require(rec.block_diagonal == level30_adapted_projector(),
            "block-diagonal projector mismatch");
    require(rec.ambient.projector == miller_basis_projector(),
            "ambient (Miller basis) projector mismatch");
    require(rec.ambient.proj_poly == level30_ambient_projection_poly(),
            "ambient projection polynomial mismatch");
    const ProjectionResult direct =
        projector(d.ambient_operator(), EigenvalueDescriptor::rational(Rational(1)), opt);
    require(direct.projector == rec.ambient.projector,
            "recombined projector differs from the direct ambient computation");
    return "recombination reproduces both 9x9 projector matrices and the ambient "
           "projection polynomial";
}

std::string check_miller(const std::string& path) {
    const Matrix m = io::matrix_from_json(io::load_json_file(path));
    require(m == miller_basis_projector(), "matrix differs from the reference values");
    require(m * m == m, "projector should be idempotent");
    require(m.trace().is_one(), "trace should be 1");
    return "Miller-basis projector is idempotent with trace 1 and matches the "
           "reference values";
}

std::string check_stored_projection(const std::string& path, const std::string& label,
                                    const Polynomial& ann, const Polynomial& proj_poly,
                                    const Matrix& proj, long trace) {
    const nlohmann::json j = io::load_json_file(path);
    require(j.value("label", "") == label, "label mismatch");
    require(j.value("nu", std::size_t{0}) == 2, "nu should be 2");
    const EigenvalueDescriptor alpha = io::eigenvalue_from_json(j.at("eigenvalue"));
    require(alpha.is_rational() && alpha.rational_value() == Rational(-1),
            "eigenvalue should be -1");
    require(io::polynomial_from_json(j.at("annihilator"), Q()) == ann,
            "stored annihilator mismatch");
    const Polynomial stored_poly = io::polynomial_from_json(j.at("proj_poly"), Q());
    require(stored_poly == proj_poly, "stored projection polynomial mismatch");
    const Matrix stored_proj = io::matrix_from_json(j.at("projector"));
    require(stored_proj == proj, "stored projector mismatch");
    require(stored_proj * stored_proj == stored_proj, "projector should be idempotent");
    require(stored_proj.trace() == FieldElement::from_int(Q(), trace),
            "trace should be " + std::to_string(trace));
    // consistency: the stored polynomial is what the engine derives from the
    // stored annihilator
    require(polyproj(ann, FieldElement::from_int(Q(), -1), 2) == proj_poly,
            "stored polynomial is not the one derived from the annihilator");
    return "projector is idempotent with trace " + std::to_string(trace) +
           " and matches the polynomial derived from its annihilator";
}

} // namespace

const std::vector<std::string>& required_files() {
    static const std::vector<std::string> files{
        "t3_level30_7x7.json", "all_level30.json", "miller_basis_9x9.json",
        "proj_level30_3x3.json", "proj_level90_11x11.json"};
    return files;
}

std::vector<CheckLine> run_fixture_checks(const std::string& dir) {
    using Check = std::function<std::string(const std::string&)>;
    const std::vector<std::pair<std::string, Check>> checks{
        {"t3_level30_7x7.json", check_t3},
        {"all_level30.json", check_all_level30},
        {"miller_basis_9x9.json", check_miller},
        {"proj_level30_3x3.json",
         [](const std::string& p) {
             return check_stored_projection(p, "S2(30,1)", floor30_annihilator(),
                                            floor30_projection_poly(), floor30_projector(), 2);
         }},
        {"proj_level90_11x11.json",
         [](const std::string& p) {
             return check_stored_projection(p, "S2(90,1)", level90_annihilator(),
                                            level90_projection_poly(), level90_projector(), 2);
         }},
    };

    std::vector<CheckLine> out;
    for (const auto& [name, check] : checks) {
        const std::string path = dir + "/" + name;
        if (!std::filesystem::exists(path)) {
            out.push_back({name, false, "missing fixture (expected at " + path + ")"});
            continue;
        }
        try {
            out.push_back({name, true, check(path)});
        } catch (const std::exception& e) {
            out.push_back({name, false, e.what()});
        }
    }
    return out;
}

bool all_passed(const std::vector<CheckLine>& lines) {
    for (const CheckLine& l : lines)
        if (!l.ok) return false;
    return true;
}

} // namespace charproj::fixtures

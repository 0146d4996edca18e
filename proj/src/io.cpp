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

#include "charproj/io.hpp"

#include <fstream>
#include <sstream>

#include "charproj/errors.hpp"

namespace charproj::io {

using nlohmann::json;

namespace {

Rational rational_from_json(const json& j, const char* what) {
    if (!j.is_string())
        throw io_error(std::string(what) + ": expected a rational string, got " +
                       std::string(j.type_name()));
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const value_error& e) {
        throw io_error(std::string(what) + ": " + e.what());
    }
}

std::vector<Rational> rational_list_from_json(const json& j, const char* what) {
    if (!j.is_array())
        throw io_error(std::string(what) + ": expected an array of rational strings");
    std::vector<Rational> out;
    out.reserve(j.size());
    for (const json& c : j)
        out.push_back(rational_from_json(c, what));
    return out;
}

json rational_list_to_json(const std::vector<Rational>& v) {
    json out = json::array();
    for (const Rational& r : v)
        out.push_back(r.str());
    return out;
}

} // namespace

json scalar_to_json(const FieldElement& e) {
    if (e.context()->is_rationals())
        return e.as_rational().str();
    json out = json::array();
    for (const Rational& c : e.coeffs())
        out.push_back(c.str());
    return out;
}

FieldElement scalar_from_json(const json& j, const Context& ctx) {
    if (ctx->is_rationals())
        return FieldElement::from_rational(ctx, rational_from_json(j, "scalar"));
    // over an extension every scalar is spelled as a coordinate array
    std::vector<Rational> coords = rational_list_from_json(j, "scalar");
    if (coords.size() > ctx->degree())
        throw io_error("scalar has " + std::to_string(coords.size()) +
                       " coordinates in a field of degree " + std::to_string(ctx->degree()));
    coords.resize(ctx->degree(), Rational(0));
    return FieldElement(ctx, std::move(coords));
}

json polynomial_to_json(const Polynomial& f) {
    json out = json::array();
    for (const FieldElement& c : f.coeffs())
        out.push_back(scalar_to_json(c));
    return out;
}

Polynomial polynomial_from_json(const json& j, const Context& ctx) {
    if (!j.is_array())
        throw io_error("polynomial: expected an array of coefficients");
    std::vector<FieldElement> coeffs;
    coeffs.reserve(j.size());
    for (const json& c : j)
        coeffs.push_back(scalar_from_json(c, ctx));
    return Polynomial(ctx, std::move(coeffs));
}

Context context_from_json(const json& matrix_obj) {
    if (!matrix_obj.contains("field"))
        return FieldContext::rationals();
    const json& f = matrix_obj.at("field");
    if (!f.is_object() || !f.contains("modulus"))
        throw io_error("field: expected an object with a \"modulus\" key");
    try {
        return FieldContext::extension(rational_list_from_json(f.at("modulus"), "modulus"));
    } catch (const invalid_modulus_error& e) {
        throw io_error(std::string("field: ") + e.what());
    }
}

json matrix_to_json(const Matrix& m) {
    json out;
    out["rows"] = m.rows();
    out["cols"] = m.cols();
    if (!m.context()->is_rationals())
        out["field"] = json{{"modulus", rational_list_to_json(m.context()->modulus())}};
    json entries = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(scalar_to_json(m.at(i, j)));
        entries.push_back(std::move(row));
    }
    out["entries"] = std::move(entries);
    return out;
}

Matrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw io_error("matrix: expected an object with \"rows\", \"cols\" and \"entries\"");
    if (!j.at("rows").is_number_unsigned() || !j.at("cols").is_number_unsigned())
        throw io_error("matrix: \"rows\" and \"cols\" must be non-negative integers");
    const std::size_t rows = j.at("rows").get<std::size_t>();
    const std::size_t cols = j.at("cols").get<std::size_t>();
    const Context ctx = context_from_json(j);
    const json& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != rows)
        throw io_error("matrix: \"entries\" must be an array of " + std::to_string(rows) +
                       " rows");
    std::vector<FieldElement> flat;
    flat.reserve(rows * cols);
    for (const json& row : entries) {
        if (!row.is_array() || row.size() != cols)
            throw io_error("matrix: every row must be an array of " + std::to_string(cols) +
                           " scalars");
        for (const json& c : row)
            flat.push_back(scalar_from_json(c, ctx));
    }
    return Matrix(ctx, rows, cols, std::move(flat));
}

json eigenvalue_to_json(const EigenvalueDescriptor& a) {
    if (a.is_rational())
        return json{{"rational", a.rational_value().str()}};
    return json{{"modulus", rational_list_to_json(a.extension_context()->modulus())},
                {"element", rational_list_to_json(a.element_coeffs())}};
}

EigenvalueDescriptor eigenvalue_from_json(const json& j) {
    if (!j.is_object())
        throw io_error("eigenvalue: expected an object");
    if (j.contains("rational"))
        return EigenvalueDescriptor::rational(rational_from_json(j.at("rational"), "eigenvalue"));
    if (j.contains("modulus") && j.contains("element")) {
        try {
            return EigenvalueDescriptor::algebraic(
                rational_list_from_json(j.at("modulus"), "modulus"),
                rational_list_from_json(j.at("element"), "element"));
        } catch (const invalid_modulus_error& e) {
            throw io_error(std::string("eigenvalue: ") + e.what());
        }
    }
    throw io_error("eigenvalue: expected \"rational\" or \"modulus\" + \"element\"");
}

json projection_to_json(const ProjectionResult& p) {
    json out;
    out["eigenvalue"] = eigenvalue_to_json(p.eigenvalue);
    out["nu"] = p.nu;
    out["proj_poly"] = polynomial_to_json(p.proj_poly);
    out["projector"] = matrix_to_json(p.projector);
    out["annihilator"] = polynomial_to_json(p.annihilator);
    out["variant"] = variant_name(p.variant);
    return out;
}

json decomposition_to_json(const BlockDecomposition& d) {
    json blocks = json::array();
    for (const Block& b : d.blocks())
        blocks.push_back(json{{"label", b.label}, {"matrix", matrix_to_json(b.op)}});
    return json{{"ambient_dim", d.ambient_dim()},
                {"blocks", std::move(blocks)},
                {"change_of_basis", matrix_to_json(d.change_of_basis())}};
}

BlockDecomposition decomposition_from_json(const json& j) {
    if (!j.is_object() || !j.contains("blocks") || !j.contains("change_of_basis"))
        throw io_error("decomposition: expected \"blocks\" and \"change_of_basis\"");
    const json& blocks_json = j.at("blocks");
    if (!blocks_json.is_array() || blocks_json.empty())
        throw io_error("decomposition: \"blocks\" must be a non-empty array");
    std::vector<Block> blocks;
    for (const json& b : blocks_json) {
        if (!b.is_object() || !b.contains("label") || !b.contains("matrix"))
            throw io_error("decomposition: every block needs \"label\" and \"matrix\"");
        blocks.push_back(Block{b.at("label").get<std::string>(),
                               matrix_from_json(b.at("matrix"))});
    }
    Matrix cob = matrix_from_json(j.at("change_of_basis"));
    if (j.contains("ambient_dim") &&
        j.at("ambient_dim").get<std::size_t>() != cob.rows())
        throw io_error("decomposition: \"ambient_dim\" disagrees with the change of basis");
    try {
        return BlockDecomposition(std::move(blocks), std::move(cob));
    } catch (const error& e) {
        throw io_error(std::string("decomposition: ") + e.what());
    }
}

std::string dump_canonical(const json& j) {
    // nlohmann's default object storage is an ordered std::map, so keys are
    // already sorted; the fixed indent makes the bytes stable
    return j.dump(2) + "\n";
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw io_error("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        // e.what() already carries the line/column of the failure
        throw io_error(path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out)
        throw io_error("cannot open " + path + " for writing");
    out << text;
    if (!out)
        throw io_error("failed writing " + path);
}

} // namespace charproj::io

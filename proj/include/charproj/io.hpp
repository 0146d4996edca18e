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

#ifndef CHARPROJ_IO_HPP
#define CHARPROJ_IO_HPP

#include <string>

#include <json.hpp>

#include "charproj/decomp.hpp"

namespace charproj::io {

/**
 * JSON contracts (shared by fixtures and the CLI):
 *
 * scalar: "p/q" string over Q; array of such strings (coordinates of
 *   1, Y, ..., lowest first) over an extension.
 * polynomial: array of scalars, lowest degree first.
 * matrix: {"rows": R, "cols": C, "entries": [[scalar, ...], ...]} plus
 *   "field": {"modulus": [rational strings]} when not over Q.
 * eigenvalue: {"rational": "p/q"} or
 *   {"modulus": [rational strings], "element": [rational strings]}.
 * projection: {"annihilator", "eigenvalue", "nu", "proj_poly",
 *   "projector", "variant"}.
 * decomposition: {"ambient_dim", "blocks": [{"label", "matrix"}],
 *   "change_of_basis"}.
 */

nlohmann::json scalar_to_json(const FieldElement& e);
FieldElement scalar_from_json(const nlohmann::json& j, const Context& ctx);

nlohmann::json polynomial_to_json(const Polynomial& f);
Polynomial polynomial_from_json(const nlohmann::json& j, const Context& ctx);

/// The context a matrix object declares: Q unless a "field" key is present.
Context context_from_json(const nlohmann::json& matrix_obj);

nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

nlohmann::json eigenvalue_to_json(const EigenvalueDescriptor& a);
EigenvalueDescriptor eigenvalue_from_json(const nlohmann::json& j);

nlohmann::json projection_to_json(const ProjectionResult& p);

nlohmann::json decomposition_to_json(const BlockDecomposition& d);
BlockDecomposition decomposition_from_json(const nlohmann::json& j);

/// Canonical text: sorted keys, two-space indent, trailing newline —
/// byte-stable for diffing and regression comparison.
std::string dump_canonical(const nlohmann::json& j);

/// Parse a JSON file; io_error carries the parser's line/column message.
nlohmann::json load_json_file(const std::string& path);

void write_text_file(const std::string& path, const std::string& text);

} // namespace charproj::io

#endif

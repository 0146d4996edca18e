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

// Command-line front end.
//
// Result-producing commands (projector, polyproj, recombine, tower) print a
// human summary to stderr and canonical JSON to stdout (or --output FILE).
// Report commands (dims, check) print their report to stdout. Exit codes:
// 0 success, 1 engine error (not an eigenvalue, singular matrix, ...),
// 2 I/O or parse error (missing file, malformed JSON, bad flag value).

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "charproj/decomp.hpp"
#include "charproj/errors.hpp"
#include "charproj/fixture_checks.hpp"
#include "charproj/io.hpp"
#include "charproj/projection.hpp"

namespace {

using namespace charproj;

constexpr int kExitOk = 0;
constexpr int kExitEngine = 1;
constexpr int kExitIo = 2;

// ---------------------------------------------------------------- flag sets

struct EigenvalueFlags {
    std::string eigenvalue; // rational text form
    std::string modulus;    // comma-separated rationals, lowest first
    std::string element;    // comma-separated rationals, lowest first
};

struct EngineFlags {
    std::string variant = "euclid";
    std::string annihilator = "minpoly";
    bool squarefree = false;
    std::uint64_t seed = kDefaultSeed;
};

void add_eigenvalue_flags(CLI::App* sub, EigenvalueFlags& e) {
    auto* eig = sub->add_option("--eigenvalue", e.eigenvalue,
                                "Rational eigenvalue, e.g. 1, -1 or 3/4");
    auto* mod = sub->add_option(
        "--modulus", e.modulus,
        "Monic modulus of Q[Y]/(m(Y)) as comma-separated rational coefficients, "
        "lowest first (e.g. 1,0,1 for Y^2+1)");
    auto* elem = sub->add_option(
        "--element", e.element,
        "Eigenvalue as an element of the extension: comma-separated rational "
        "coordinates, lowest first (e.g. 0,1 for Y)");
    eig->excludes(mod)->excludes(elem);
    mod->needs(elem);
    elem->needs(mod);
}

void add_variant_flag(CLI::App* sub, EngineFlags& f) {
    sub->add_option("--variant", f.variant, "Algorithm variant")
        ->check(CLI::IsMember({"euclid", "division-free"}))
        ->capture_default_str();
}

void add_engine_flags(CLI::App* sub, EngineFlags& f, bool with_squarefree = true) {
    add_variant_flag(sub, f);
    sub->add_option("--annihilator", f.annihilator,
                    "Annihilator choice: minpoly, charpoly or file:PATH")
        ->capture_default_str();
    if (with_squarefree)
        sub->add_flag("--squarefree", f.squarefree,
                      "Use the squarefree part of the minimal polynomial "
                      "(semisimple operators only)");
    sub->add_option("--seed", f.seed, "Random seed for the minimal-polynomial search")
        ->capture_default_str();
}

// ------------------------------------------------------------- interpreters

std::vector<Rational> parse_rational_list(const std::string& text, const char* what) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(Rational::parse(item));
    if (out.empty())
        throw value_error(std::string(what) + ": empty coefficient list");
    return out;
}

EigenvalueDescriptor make_eigenvalue(const EigenvalueFlags& e) {
    if (!e.eigenvalue.empty())
        return EigenvalueDescriptor::rational(Rational::parse(e.eigenvalue));
    if (!e.modulus.empty())
        return EigenvalueDescriptor::algebraic(parse_rational_list(e.modulus, "--modulus"),
                                               parse_rational_list(e.element, "--element"));
    throw value_error("an eigenvalue is required: --eigenvalue R, or --modulus M --element E");
}

/// Load a polynomial file: a JSON array of coefficients, lowest first.
/// Plain "p/q" strings are rational coefficients; arrays of strings are
/// extension coordinates and require the eigenvalue to carry a modulus.
Polynomial load_polynomial_file(const std::string& path, const EigenvalueDescriptor& alpha) {
    const nlohmann::json j = io::load_json_file(path);
    if (!j.is_array() || j.empty())
        throw io_error(path + ": expected a non-empty array of coefficients");
    bool all_strings = true;
    for (const auto& c : j)
        if (!c.is_string()) all_strings = false;
    if (all_strings)
        return io::polynomial_from_json(j, FieldContext::rationals());
    if (alpha.is_rational())
        throw io_error(path +
                       ": extension coefficients need --modulus to name their field");
    return io::polynomial_from_json(j, alpha.extension_context());
}

ProjectorOptions make_options(const EngineFlags& f, const EigenvalueDescriptor& alpha) {
    ProjectorOptions opt;
    opt.variant = variant_from_name(f.variant);
    opt.squarefree = f.squarefree;
    opt.seed = f.seed;
    if (f.annihilator == "minpoly") {
        opt.annihilator = AnnihilatorChoice::MinPoly;
    } else if (f.annihilator == "charpoly") {
        opt.annihilator = AnnihilatorChoice::CharPoly;
    } else if (f.annihilator.rfind("file:", 0) == 0) {
        opt.annihilator = AnnihilatorChoice::Supplied;
        opt.supplied = load_polynomial_file(f.annihilator.substr(5), alpha);
    } else {
        throw value_error("--annihilator: expected minpoly, charpoly or file:PATH, got \"" +
                          f.annihilator + "\"");
    }
    return opt;
}

// ------------------------------------------------------------------ output

void emit(const nlohmann::json& j, const std::string& output_path) {
    const std::string text = io::dump_canonical(j);
    if (output_path.empty())
        std::cout << text;
    else
        io::write_text_file(output_path, text);
}

void emit_text(const std::string& text, const std::string& output_path) {
    if (output_path.empty())
        std::cout << text;
    else
        io::write_text_file(output_path, text);
}

void summarize(const ProjectionResult& r) {
    std::cerr << "field:        " << r.projector.context()->str() << "\n"
              << "annihilator:  degree " << r.annihilator.degree() << "\n"
              << "eigenvalue:   " << r.eigenvalue.str() << "   nu: " << r.nu << "\n"
              << "variant:      " << variant_name(r.variant) << "\n"
              << "proj_poly:    " << r.proj_poly.str() << "\n"
              << "projector:    " << r.projector.rows() << "x" << r.projector.cols()
              << ", trace " << r.projector.trace().str() << "\n";
}

// ---------------------------------------------------------------- commands

/// Run `load` (I/O phase), then `engine` (computation phase), mapping
/// exceptions to the documented exit codes.
template <typename LoadFn, typename EngineFn>
int phased(LoadFn&& load, EngineFn&& engine) {
    try {
        load();
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    try {
        engine();
        return kExitOk;
    } catch (const io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitEngine;
    }
}

struct ProjectorArgs {
    std::string matrix_path;
    EigenvalueFlags eig;
    EngineFlags flags;
    std::string output;
};

int cmd_projector(const ProjectorArgs& a) {
    std::optional<Matrix> m;
    std::optional<EigenvalueDescriptor> alpha;
    std::optional<ProjectorOptions> opt;
    return phased(
        [&] {
            m = io::matrix_from_json(io::load_json_file(a.matrix_path));
            alpha = make_eigenvalue(a.eig);
            opt = make_options(a.flags, *alpha);
        },
        [&] {
            const ProjectionResult r = projector(*m, *alpha, *opt);
            summarize(r);
            emit(io::projection_to_json(r), a.output);
        });
}

struct PolyprojArgs {
    std::string poly_path;
    EigenvalueFlags eig;
    EngineFlags flags; // only the variant applies
    std::string output;
};

int cmd_polyproj(const PolyprojArgs& a) {
    std::optional<Polynomial> ann;
    std::optional<EigenvalueDescriptor> alpha;
    std::optional<Variant> variant;
    return phased(
        [&] {
            alpha = make_eigenvalue(a.eig);
            ann = load_polynomial_file(a.poly_path, *alpha);
            variant = variant_from_name(a.flags.variant);
        },
        [&] {
            Polynomial f = *ann;
            if (!alpha->is_rational() && f.context()->is_rationals())
                f = embed_coeffs(f, alpha->extension_context());
            const FieldElement av = alpha->resolve(f.context());
            const std::size_t nu = root_valuation(f, av).nu;
            if (nu == 0)
                throw not_eigenvalue_error(alpha->str() +
                                           " is not a root of the annihilator");
            const Polynomial g = *variant == Variant::EuclidDirect
                                     ? polyproj(f, av, nu)
                                     : polyproj_division_free(f, av, nu);
            std::cerr << "field:        " << f.context()->str() << "\n"
                      << "annihilator:  degree " << f.degree() << "\n"
                      << "eigenvalue:   " << alpha->str() << "   nu: " << nu << "\n"
                      << "variant:      " << variant_name(*variant) << "\n"
                      << "proj_poly:    " << g.str() << "\n";
            nlohmann::json out;
            out["annihilator"] = io::polynomial_to_json(f);
            out["eigenvalue"] = io::eigenvalue_to_json(*alpha);
            out["nu"] = nu;
            out["proj_poly"] = io::polynomial_to_json(g);
            out["variant"] = variant_name(*variant);
            emit(out, a.output);
        });
}

struct DimsArgs {
    std::string matrix_path;
    std::string output;
};

int cmd_dims(const DimsArgs& a) {
    std::optional<Matrix> m;
    return phased(
        [&] { m = io::matrix_from_json(io::load_json_file(a.matrix_path)); },
        [&] {
            const Polynomial cp = charpoly(*m);
            std::ostringstream out;
            out << "operator:  " << m->rows() << "x" << m->cols() << " over "
                << m->context()->str() << "\n";
            out << "charpoly:  " << cp.str() << "\n";
            out << "squarefree decomposition:\n";
            const auto sqf = squarefree_decomposition(cp);
            for (const auto& [factor, multiplicity] : sqf)
                out << "  (" << factor.str() << ")^" << multiplicity << "\n";

            out << "rational eigenvalues:\n";
            const bool rational_base = m->context()->is_rationals();
            bool any_root = false;
            if (rational_base) {
                for (const auto& [root, multiplicity] : rational_roots(cp)) {
                    any_root = true;
                    const auto alpha = EigenvalueDescriptor::rational(root);
                    out << "  " << root.str() << ": multiplicity " << multiplicity
                        << ", characteristic dimension " << char_dimension(*m, alpha)
                        << "\n";
                }
            } else {
                // over an extension, report the linear factors of the
                // squarefree parts instead of searching rational roots
                for (const auto& [factor, multiplicity] : sqf) {
                    if (factor.degree() != 1) continue;
                    any_root = true;
                    const FieldElement root = -factor.coeff(0);
                    out << "  " << root.str() << ": multiplicity " << multiplicity
                        << "\n";
                }
            }
            if (!any_root) out << "  none\n";

            out << "residual (irrational spectrum, supply a modulus to project):\n";
            bool any_residual = false;
            for (const auto& [factor, multiplicity] : sqf) {
                Polynomial res = factor;
                if (rational_base)
                    for (const auto& [root, mult] : rational_roots(factor)) {
                        (void)mult; // roots of a squarefree factor are simple
                        res = synthetic_divide(res, FieldElement::from_rational(
                                                        res.context(), root))
                                  .quot;
                    }
                else if (res.degree() == 1)
                    continue;
                if (res.degree() < 1) continue;
                any_residual = true;
                out << "  degree " << res.degree() << " factor (" << res.str() << ")^"
                    << multiplicity << "\n";
            }
            if (!any_residual) out << "  none\n";
            emit_text(out.str(), a.output);
        });
}

struct RecombineArgs {
    std::string decomposition_path;
    EigenvalueFlags eig;
    EngineFlags flags;
    std::string output;
};

int cmd_recombine(const RecombineArgs& a) {
    std::optional<BlockDecomposition> d;
    std::optional<EigenvalueDescriptor> alpha;
    std::optional<ProjectorOptions> opt;
    return phased(
        [&] {
            d = io::decomposition_from_json(io::load_json_file(a.decomposition_path));
            alpha = make_eigenvalue(a.eig);
            opt = make_options(a.flags, *alpha);
        },
        [&] {
            const RecombinedProjection r = recombine_block_projection(*d, *alpha, *opt);
            std::cerr << "blocks:\n";
            for (std::size_t i = 0; i < r.per_block.size(); ++i)
                std::cerr << "  " << d->blocks()[i].label << ": "
                          << r.per_block[i].projector.rows() << "x"
                          << r.per_block[i].projector.cols() << ", trace "
                          << r.per_block[i].projector.trace().str() << "\n";
            summarize(r.ambient);
            nlohmann::json out;
            out["ambient"] = io::projection_to_json(r.ambient);
            out["block_diagonal"] = io::matrix_to_json(r.block_diagonal);
            nlohmann::json blocks = nlohmann::json::array();
            for (std::size_t i = 0; i < r.per_block.size(); ++i) {
                nlohmann::json b;
                b["label"] = d->blocks()[i].label;
                b["projector"] = io::matrix_to_json(r.per_block[i].projector);
                b["trace"] = io::scalar_to_json(r.per_block[i].projector.trace());
                blocks.push_back(std::move(b));
            }
            out["blocks"] = std::move(blocks);
            emit(out, a.output);
        });
}

struct TowerArgs {
    std::string floor_path;
    std::string upper_path;
    std::string descent_path;
    EigenvalueFlags eig;
    EngineFlags flags;
    std::string output;
};

int cmd_tower(const TowerArgs& a) {
    std::optional<Matrix> floor_op, upper_op, descent;
    std::optional<EigenvalueDescriptor> alpha;
    std::optional<ProjectorOptions> opt;
    return phased(
        [&] {
            floor_op = io::matrix_from_json(io::load_json_file(a.floor_path));
            upper_op = io::matrix_from_json(io::load_json_file(a.upper_path));
            descent = io::matrix_from_json(io::load_json_file(a.descent_path));
            alpha = make_eigenvalue(a.eig);
            opt = make_options(a.flags, *alpha);
        },
        [&] {
            const Matrix pi = tower_projection(*floor_op, *alpha, *descent, *upper_op,
                                               *opt);
            std::cerr << "field:        " << pi.context()->str() << "\n"
                      << "eigenvalue:   " << alpha->str() << "\n"
                      << "projector:    " << pi.rows() << "x" << pi.cols() << ", trace "
                      << pi.trace().str() << "\n"
                      << "verified against the direct computation\n";
            emit(io::matrix_to_json(pi), a.output);
        });
}

int cmd_check(const std::string& dir) {
    const auto lines = fixtures::run_fixture_checks(dir);
    for (const auto& l : lines)
        std::cout << (l.ok ? "PASS" : "FAIL") << " " << l.name << ": " << l.detail
                  << "\n";
    const bool ok = fixtures::all_passed(lines);
    std::cout << (ok ? "all fixture checks passed" : "fixture checks FAILED") << "\n";
    return ok ? kExitOk : kExitEngine;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact characteristic projections of linear operators over Q "
                 "and its simple extensions"};
    app.require_subcommand(1);

    ProjectorArgs pa;
    auto* proj = app.add_subcommand(
        "projector", "Projector onto the characteristic subspace of an eigenvalue");
    proj->add_option("matrix", pa.matrix_path, "Operator matrix (JSON)")->required();
    add_eigenvalue_flags(proj, pa.eig);
    add_engine_flags(proj, pa.flags);
    proj->add_option("--output", pa.output, "Write the result JSON to this file");

    PolyprojArgs ya;
    auto* poly = app.add_subcommand(
        "polyproj", "Projection polynomial from an annihilator polynomial");
    poly->add_option("annihilator", ya.poly_path,
                     "Annihilator polynomial (JSON array, lowest first)")
        ->required();
    add_eigenvalue_flags(poly, ya.eig);
    add_variant_flag(poly, ya.flags);
    poly->add_option("--output", ya.output, "Write the result JSON to this file");

    DimsArgs da;
    auto* dims = app.add_subcommand(
        "dims", "Spectrum report: charpoly, squarefree factors, eigenvalues "
                "and characteristic dimensions");
    dims->add_option("matrix", da.matrix_path, "Operator matrix (JSON)")->required();
    dims->add_option("--output", da.output, "Write the report to this file");

    RecombineArgs ra;
    auto* rec = app.add_subcommand(
        "recombine", "Blockwise projection glued back to the ambient space");
    rec->add_option("decomposition", ra.decomposition_path,
                    "Block decomposition (JSON)")
        ->required();
    add_eigenvalue_flags(rec, ra.eig);
    add_engine_flags(rec, ra.flags);
    rec->add_option("--output", ra.output, "Write the result JSON to this file");

    TowerArgs ta;
    auto* tow = app.add_subcommand(
        "tower", "Upper-floor projector through the descent map of a tower");
    tow->add_option("--floor", ta.floor_path, "Ground-floor operator (JSON)")
        ->required();
    tow->add_option("--upper", ta.upper_path, "Upper-floor operator (JSON)")
        ->required();
    tow->add_option("--descent", ta.descent_path,
                    "Descent map from the upper to the ground floor (JSON)")
        ->required();
    add_eigenvalue_flags(tow, ta.eig);
    add_engine_flags(tow, ta.flags, /*with_squarefree=*/false);
    tow->add_option("--output", ta.output, "Write the result JSON to this file");

    std::string check_dir;
    auto* chk = app.add_subcommand("check", "Reference-data regression suite");
    chk->add_option("fixtures", check_dir, "Directory holding the fixture files")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitIo;
    }

    if (proj->parsed()) return cmd_projector(pa);
    if (poly->parsed()) return cmd_polyproj(ya);
    if (dims->parsed()) return cmd_dims(da);
    if (rec->parsed()) return cmd_recombine(ra);
    if (tow->parsed()) return cmd_tower(ta);
    if (chk->parsed()) return cmd_check(check_dir);
    return kExitIo; // unreachable: a subcommand is required
}

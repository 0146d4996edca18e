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

#ifndef CHARPROJ_PROJECTION_HPP
#define CHARPROJ_PROJECTION_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "charproj/matrix.hpp"

namespace charproj {

enum class Variant {
    EuclidDirect,  ///< Bezout cofactor via the extended Euclidean algorithm
    DivisionFree,  ///< telescoping product: shifts, squarings, one scalar division
};

enum class AnnihilatorChoice {
    MinPoly,  ///< minimal polynomial of the operator
    CharPoly, ///< characteristic polynomial of the operator
    Supplied, ///< caller-provided polynomial, verified to annihilate
};

struct ProjectorOptions {
    Variant variant = Variant::EuclidDirect;
    AnnihilatorChoice annihilator = AnnihilatorChoice::MinPoly;
    /// Required when annihilator == Supplied; verified by evaluation.
    std::optional<Polynomial> supplied;
    /// Convenience: use squarefree_part(minpoly) as a supplied annihilator,
    /// triggering the simple-root fast path. Only valid when the operator is
    /// semisimple — otherwise the squarefree part fails the annihilation
    /// check (not_annihilator_error), on purpose. Overrides `annihilator`.
    bool squarefree = false;
    std::uint64_t seed = kDefaultSeed;
};

/**
 * An eigenvalue, either rational or algebraic. The algebraic form carries a
 * monic modulus m(Y) with rational coefficients plus an element of
 * Q[Y]/(m(Y)); computations then run over that extension.
 */
class EigenvalueDescriptor {
public:
    static EigenvalueDescriptor rational(Rational r);
    static EigenvalueDescriptor algebraic(std::vector<Rational> modulus,
                                          std::vector<Rational> element);

    bool is_rational() const { return rat_.has_value(); }
    const Rational& rational_value() const;
    /// The extension context of an algebraic descriptor.
    const Context& extension_context() const;
    const std::vector<Rational>& element_coeffs() const { return elem_; }

    /// The field everything is computed in, given the operator's context:
    /// a rational eigenvalue adopts the operator's field; an algebraic one
    /// requires the operator over Q (which gets embedded) or over the very
    /// same extension.
    Context working_context(const Context& op_ctx) const;

    /// The eigenvalue as an element of ctx (must be compatible).
    FieldElement resolve(const Context& ctx) const;

    std::string str() const;

private:
    EigenvalueDescriptor() = default;

    std::optional<Rational> rat_;
    Context ext_;               // set in the algebraic case
    std::vector<Rational> elem_;
};

/**
 * Everything the projection pipeline produced: the eigenvalue, the
 * multiplicity nu actually used, the projection polynomial (reduced modulo
 * the annihilator), its value at the operator, the annihilator itself, and
 * which algorithm variant ran.
 *
 * Invariants (enforced by construction, re-checked by the test suite):
 * projector is idempotent, commutes with the operator,
 * (operator - alpha I)^nu * projector = 0, and proj_poly evaluated at the
 * operator equals projector.
 *
 * nu is 0 only in the recombination corner case where alpha is an
 * eigenvalue of no block: the projector is then legitimately zero.
 */
struct ProjectionResult {
    EigenvalueDescriptor eigenvalue;
    std::size_t nu;
    Polynomial proj_poly;
    Matrix projector;
    Polynomial annihilator;
    Variant variant;
};

/**
 * The Bezout construction. Requires annihilator = (X-alpha)^nu * Q with
 * Q(alpha) != 0; returns g = Q*B where B is the Bezout cofactor from
 * xgcd(Q, (X-alpha)^nu), so that g = 1 mod (X-alpha)^nu and g = 0 mod Q.
 * deg g < deg annihilator always. nu = 1 takes the classical shortcut
 * g = Q / Q(alpha).
 *
 * nu must be the exact multiplicity of alpha in the annihilator:
 * multiplicity_error otherwise (too large: the divisibility fails; too
 * small: Q(alpha) = 0).
 */
Polynomial polyproj(const Polynomial& annihilator, const FieldElement& alpha, std::size_t nu);

/**
 * Division-free variant of polyproj. Writes P := annihilator/(X-alpha)^nu
 * as a + (X-alpha)^mu * Qt with a = P(alpha), picks the least e with
 * 2^e * mu >= nu, and evaluates
 *
 *   a^(-2^e) * P * prod_{j=1..e} (a^(2^(j-1)) + (-1)^j (X-alpha)^(2^(j-1) mu) Qt^(2^(j-1)))
 *
 * using only Taylor shifts, squarings and multiplications, one scalar
 * division at the end, and one final reduction modulo the annihilator.
 * The result equals polyproj's output exactly (both are the canonical
 * representative modulo the annihilator).
 */
Polynomial polyproj_division_free(const Polynomial& annihilator, const FieldElement& alpha,
                                  std::size_t nu);

/**
 * Full pipeline: base-change the operator into the eigenvalue's field if
 * needed, pick the annihilator, read off nu as the full multiplicity of
 * alpha in it, build the projection polynomial with the requested variant,
 * and evaluate it at the operator.
 *
 * Errors: not_eigenvalue_error when alpha is not a root of the annihilator;
 * not_annihilator_error when a supplied polynomial (or the squarefree
 * convenience) fails to annihilate the operator.
 */
ProjectionResult projector(const Matrix& m, const EigenvalueDescriptor& alpha,
                           const ProjectorOptions& options = {});

/// Brute-force oracle, independent of the Bezout construction: a basis of
/// Ker (m - alpha I)^nu as matrix columns.
Matrix generalized_eigenspace_oracle(const Matrix& m, const FieldElement& alpha, std::size_t nu);

/// Algebraic multiplicity of alpha in charpoly(m): the dimension of the
/// characteristic subspace. 0 when alpha is not an eigenvalue. For an
/// algebraic alpha over a rational matrix this counts how many times the
/// eigenvalue's minimal polynomial divides the characteristic polynomial.
std::size_t char_dimension(const Matrix& m, const EigenvalueDescriptor& alpha);

/// The dimension of the image of a projector, read off its trace. The trace
/// of an idempotent is the rank; anything but a non-negative rational
/// integer signals a corrupted projector (integrity_error).
std::size_t projector_rank_by_trace(const ProjectionResult& p);

/// Monic minimal polynomial over Q of a field element (degree 1 for a
/// rational element, up to the context degree otherwise).
Polynomial element_min_poly(const FieldElement& a);

std::string variant_name(Variant v);          // "euclid" / "division-free"
Variant variant_from_name(const std::string& s);

} // namespace charproj

#endif

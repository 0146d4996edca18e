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

#ifndef CHARPROJ_FIELD_HPP
#define CHARPROJ_FIELD_HPP

#include <memory>
#include <string>
#include <vector>

#include "charproj/rational.hpp"

namespace charproj {

enum class FieldKind {
    Rationals, ///< the field Q
    Extension, ///< a simple extension Q[Y]/(m(Y))
};

class FieldContext;
using Context = std::shared_ptr<const FieldContext>;

/**
 * Description of the exact field computations happen in: either Q itself, or
 * a simple extension Q[Y]/(m(Y)) for a monic modulus m of degree >= 2.
 *
 * Contexts are immutable and shared. Construction validates that the modulus
 * is monic of degree >= 2 and has no rational root (a cheap necessary
 * condition for irreducibility; full irreducibility is NOT verified — a
 * reducible modulus surfaces later as reducible_modulus_error on inversion).
 */
class FieldContext {
public:
    /// The shared context for Q.
    static const Context& rationals();

    /// Build Q[Y]/(m(Y)). `modulus` lists the coefficients of m lowest
    /// degree first, including the leading 1.
    static Context extension(std::vector<Rational> modulus);

    FieldKind kind() const { return kind_; }
    bool is_rationals() const { return kind_ == FieldKind::Rationals; }

    /// Dimension over Q: 1 for Q itself, deg(modulus) for an extension.
    std::size_t degree() const;

    /// Modulus coefficients (lowest first, monic); empty for Q.
    const std::vector<Rational>& modulus() const { return modulus_; }

    /// Structural equality; contexts built independently from equal moduli
    /// describe the same field.
    bool same(const FieldContext& other) const;

    std::string str() const; // "Q" or "Q[Y]/(Y^2 + 1)"

private:
    FieldContext(FieldKind kind, std::vector<Rational> modulus)
        : kind_(kind), modulus_(std::move(modulus)) {}

    FieldKind kind_;
    std::vector<Rational> modulus_;
};

bool same_context(const Context& a, const Context& b);
void require_same_context(const Context& a, const Context& b);

/**
 * An element of the field described by a Context.
 *
 * Stored as the coordinate vector over Q in the basis 1, Y, ..., Y^(d-1)
 * (a single coordinate over Q itself). Elements are immutable values; all
 * arithmetic returns fresh elements. Mixing contexts is an error, never an
 * implicit coercion — the one sanctioned entry point from Q into an
 * extension is from_rational.
 */
class FieldElement {
public:
    FieldElement(Context ctx, std::vector<Rational> coeffs);

    static FieldElement zero(const Context& ctx);
    static FieldElement one(const Context& ctx);
    /// Embed a rational into any context (the explicit coercion).
    static FieldElement from_rational(const Context& ctx, const Rational& r);
    static FieldElement from_int(const Context& ctx, long n);

    const Context& context() const { return ctx_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;

    /// True when all coordinates above the constant one vanish.
    bool is_rational() const;
    /// The constant coordinate as a rational; throws value_error unless
    /// is_rational().
    Rational as_rational() const;

    FieldElement operator-() const;
    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);

    /// Multiplicative inverse. Throws division_by_zero_error on zero and
    /// reducible_modulus_error when a nonzero element is not invertible
    /// (which certifies the modulus was reducible).
    FieldElement inverse() const;

    FieldElement pow(std::size_t e) const;

    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    std::string str() const;

private:
    Context ctx_;
    std::vector<Rational> c_; // size == ctx_->degree()
};

} // namespace charproj

#endif

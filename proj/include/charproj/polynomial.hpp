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

#ifndef CHARPROJ_POLYNOMIAL_HPP
#define CHARPROJ_POLYNOMIAL_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "charproj/field.hpp"

namespace charproj {

/**
 * Dense univariate polynomial over a field context.
 *
 * Coefficients are stored lowest degree first with no trailing zeros; the
 * zero polynomial has an empty coefficient vector and degree -1. Polynomials
 * are immutable values. Multiplication is classical O(n^2) — instance sizes
 * here never justify more.
 */
class Polynomial {
public:
    /// The zero polynomial over ctx.
    explicit Polynomial(Context ctx);
    /// From coefficients (lowest first); trailing zeros are stripped.
    Polynomial(Context ctx, std::vector<FieldElement> coeffs);

    static Polynomial from_rationals(const Context& ctx, const std::vector<Rational>& coeffs);
    static Polynomial constant(const FieldElement& c);
    static Polynomial one(const Context& ctx);
    /// The monomial X.
    static Polynomial x(const Context& ctx);
    /// The monic linear polynomial X - alpha.
    static Polynomial x_minus(const FieldElement& alpha);

    const Context& context() const { return ctx_; }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    /// Leading coefficient; throws value_error on the zero polynomial.
    const FieldElement& leading() const;
    /// Coefficient of X^i (zero beyond the degree).
    FieldElement coeff(std::size_t i) const;
    const std::vector<FieldElement>& coeffs() const { return c_; }

    /// Horner evaluation at a point of the same context.
    FieldElement eval(const FieldElement& x) const;

    Polynomial monic() const;
    Polynomial derivative() const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const FieldElement& s);
    friend Polynomial operator*(const FieldElement& s, const Polynomial& a) { return a * s; }

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Human form "a_n*X^n + ... + a_0".
    std::string str(const std::string& var = "X") const;

private:
    Context ctx_;
    std::vector<FieldElement> c_;
};

struct DivRem {
    Polynomial quot, rem;
};

/// Euclidean division f = quot*g + rem with deg rem < deg g. g must be nonzero.
DivRem divrem(const Polynomial& f, const Polynomial& g);

/// Remainder of f modulo g.
Polynomial mod(const Polynomial& f, const Polynomial& g);

struct Xgcd {
    Polynomial d, u, v; // u*f + v*g = d, d monic
};

/// Extended Euclid. The gcd is normalized monic and the certificate
/// u*f + v*g = d holds exactly, with the usual minimal-degree cofactors.
Xgcd xgcd(const Polynomial& f, const Polynomial& g);

Polynomial gcd(const Polynomial& f, const Polynomial& g);
Polynomial lcm(const Polynomial& f, const Polynomial& g);

struct SyntheticDiv {
    Polynomial quot;
    FieldElement rem;
};

/// Division by (X - alpha) via Horner's ladder: multiply-adds only, no
/// coefficient divisions. rem == f(alpha).
SyntheticDiv synthetic_divide(const Polynomial& f, const FieldElement& alpha);

struct RootValuation {
    std::size_t nu;      ///< largest nu with (X - alpha)^nu dividing f
    Polynomial cofactor; ///< f / (X - alpha)^nu, nonzero at alpha
};

/// Multiplicity of alpha as a root of f (0 when alpha is no root), computed
/// by repeated synthetic division. f must be nonzero.
RootValuation root_valuation(const Polynomial& f, const FieldElement& alpha);

/// f(X + alpha), by a dedicated Horner-style recomposition.
Polynomial taylor_shift(const Polynomial& f, const FieldElement& alpha);

/// Dedicated squaring (exploits symmetry of the convolution).
Polynomial sqr(const Polynomial& f);

Polynomial pow(const Polynomial& f, std::size_t e);

/// f / gcd(f, f'): same roots, all simple. Characteristic zero only, which
/// every context here is.
Polynomial squarefree_part(const Polynomial& f);

struct SquarefreeFactor {
    Polynomial factor; ///< monic, squarefree, pairwise coprime
    std::size_t multiplicity;
};

/// Yun's squarefree decomposition: f = lc * prod factor_i^multiplicity_i.
std::vector<SquarefreeFactor> squarefree_decomposition(const Polynomial& f);

struct RationalRoot {
    Rational root;
    std::size_t multiplicity;
};

/// All rational roots with multiplicities (ascending), for polynomials over
/// Q. Complete: candidates come from integer factorization of the constant
/// term after a monicizing substitution.
std::vector<RationalRoot> rational_roots(const Polynomial& f);

/// Coefficient-wise embedding of a polynomial over Q into a larger context.
Polynomial embed_coeffs(const Polynomial& f, const Context& target);

} // namespace charproj

#endif

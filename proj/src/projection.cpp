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

#include "charproj/projection.hpp"

#include <utility>

#include "charproj/errors.hpp"

namespace charproj {

// --- EigenvalueDescriptor ---

EigenvalueDescriptor EigenvalueDescriptor::rational(Rational r) {
    EigenvalueDescriptor d;
    d.rat_ = std::move(r);
    return d;
}

EigenvalueDescriptor EigenvalueDescriptor::algebraic(std::vector<Rational> modulus,
                                                     std::vector<Rational> element) {
    EigenvalueDescriptor d;
    d.ext_ = FieldContext::extension(std::move(modulus));
    element.resize(d.ext_->degree(), Rational(0));
    d.elem_ = std::move(element);
    return d;
}

const Rational& EigenvalueDescriptor::rational_value() const {
    if (!rat_)
        throw value_error("eigenvalue is algebraic, not rational");
    return *rat_;
}

const Context& EigenvalueDescriptor::extension_context() const {
    if (rat_)
        throw value_error("eigenvalue is rational, it has no extension context");
    return ext_;
}

Context EigenvalueDescriptor::working_context(const Context& op_ctx) const {
    if (rat_) return op_ctx;
    if (op_ctx->is_rationals()) return ext_;
    if (same_context(op_ctx, ext_)) return op_ctx;
    throw context_mismatch_error("operator field " + op_ctx->str() +
                                 " does not match the eigenvalue field " + ext_->str());
}

FieldElement EigenvalueDescriptor::resolve(const Context& ctx) const {
    if (rat_) return FieldElement::from_rational(ctx, *rat_);
    if (!same_context(ctx, ext_))
        throw context_mismatch_error("cannot place an element of " + ext_->str() +
                                     " into " + ctx->str());
    return FieldElement(ctx, elem_);
}

std::string EigenvalueDescriptor::str() const {
    if (rat_) return rat_->str();
    return FieldElement(ext_, elem_).str() + " in " + ext_->str();
}

// --- projection polynomials ---

namespace {

/// Shared validation: annihilator = (X-alpha)^nu * Q with Q(alpha) != 0.
/// Returns Q.
Polynomial cofactor_for(const Polynomial& annihilator, const FieldElement& alpha,
                        std::size_t nu) {
    if (annihilator.is_zero())
        throw value_error("annihilator must be nonzero");
    if (nu == 0)
        throw value_error("nu must be positive");
    const RootValuation rv = root_valuation(annihilator, alpha);
    if (rv.nu < nu)
        throw multiplicity_error("(X - " + alpha.str() + ")^" + std::to_string(nu) +
                                 " does not divide the annihilator (multiplicity is only " +
                                 std::to_string(rv.nu) + ")");
    if (rv.nu > nu)
        throw multiplicity_error("nu = " + std::to_string(nu) +
                                 " is not the full multiplicity of " + alpha.str() +
                                 " (the annihilator has it with multiplicity " +
                                 std::to_string(rv.nu) + ", so the cofactor vanishes there)");
    return rv.cofactor;
}

} // namespace

Polynomial polyproj(const Polynomial& annihilator, const FieldElement& alpha, std::size_t nu) {
    const Polynomial q = cofactor_for(annihilator, alpha, nu);
    if (nu == 1) {
        // simple root: g = Q / Q(alpha)
        return q * q.eval(alpha).inverse();
    }
    const Polynomial power = pow(Polynomial::x_minus(alpha), nu);
    const Xgcd bez = xgcd(q, power); // u*Q + v*(X-alpha)^nu = 1
    if (bez.d.degree() != 0)
        throw integrity_error("gcd(Q, (X-alpha)^nu) is not constant despite Q(alpha) != 0");
    return q * bez.u;
}

Polynomial polyproj_division_free(const Polynomial& annihilator, const FieldElement& alpha,
                                  std::size_t nu) {
    const Context& ctx = annihilator.context();
    const Polynomial p = cofactor_for(annihilator, alpha, nu);
    const FieldElement a = p.eval(alpha);
    if (p.degree() == 0) {
        // annihilator = c*(X-alpha)^nu: the whole space is the
        // characteristic space
        return Polynomial::one(ctx);
    }

    // p = a + (X-alpha)^mu * qt, both read off the Taylor expansion at alpha
    const Polynomial shifted = taylor_shift(p, alpha) - Polynomial::constant(a);
    std::size_t mu = 0;
    while (shifted.coeff(mu).is_zero()) ++mu; // shifted != 0 since deg p >= 1
    std::vector<FieldElement> tail(shifted.coeffs().begin() +
                                       static_cast<std::ptrdiff_t>(mu),
                                   shifted.coeffs().end());
    const Polynomial qt = taylor_shift(Polynomial(ctx, std::move(tail)), -alpha);

    std::size_t e = 0;
    while ((static_cast<std::size_t>(1) << e) * mu < nu) ++e;

    // With r = (X-alpha)^mu * qt, telescope p = a + r against conjugate
    // factors: (a + r)(a - r) = a^2 - r^2, then repeatedly
    // (a^(2^(j-1)) - r^(2^(j-1)))(a^(2^(j-1)) + r^(2^(j-1))) = a^(2^j) - r^(2^j),
    // so the sign is negative in the first factor only. No intermediate
    // reduction — only shifts, squarings and multiplications.
    Polynomial acc = p;
    Polynomial s_pow = pow(Polynomial::x_minus(alpha), mu);
    Polynomial qt_pow = qt;
    FieldElement a_pow = a;
    for (std::size_t j = 1; j <= e; ++j) {
        if (j > 1) {
            s_pow = sqr(s_pow);
            qt_pow = sqr(qt_pow);
            a_pow = a_pow * a_pow;
        }
        Polynomial factor = Polynomial::constant(a_pow) + s_pow * qt_pow *
                                FieldElement::from_int(ctx, j == 1 ? -1 : 1);
        acc = acc * factor;
    }

    // the single scalar division, then one reduction to the canonical
    // representative
    const FieldElement scale = a.pow(static_cast<std::size_t>(1) << e).inverse();
    return mod(acc * scale, annihilator);
}

// --- pipeline ---

ProjectionResult projector(const Matrix& m, const EigenvalueDescriptor& alpha,
                           const ProjectorOptions& options) {
    if (!m.is_square())
        throw dimension_error("projector: operator must be square");
    const Context wctx = alpha.working_context(m.context());
    const Matrix mw = base_change_context(m, wctx);
    const FieldElement a = alpha.resolve(wctx);

    Polynomial ann(wctx);
    bool check_annihilates = false;
    if (options.squarefree) {
        ann = squarefree_part(minpoly(mw, options.seed));
        check_annihilates = true;
    } else {
        switch (options.annihilator) {
        case AnnihilatorChoice::MinPoly:
            ann = minpoly(mw, options.seed);
            break;
        case AnnihilatorChoice::CharPoly:
            ann = charpoly(mw);
            break;
        case AnnihilatorChoice::Supplied:
            if (!options.supplied)
                throw value_error("annihilator choice Supplied requires a polynomial");
            ann = options.supplied->context()->is_rationals() && !wctx->is_rationals()
                      ? embed_coeffs(*options.supplied, wctx)
                      : *options.supplied;
            require_same_context(ann.context(), wctx);
            check_annihilates = true;
            break;
        }
    }
    if (check_annihilates && !eval_at(ann, mw).is_zero())
        throw not_annihilator_error(
            options.squarefree
                ? "the squarefree part of the minimal polynomial does not annihilate the "
                  "operator (it is not semisimple); drop the squarefree shortcut"
                : "the supplied polynomial does not annihilate the operator");

    const std::size_t nu = root_valuation(ann, a).nu;
    if (nu == 0)
        throw not_eigenvalue_error(alpha.str() + " is not a root of the annihilator " +
                                   ann.str());

    const Polynomial g = options.variant == Variant::EuclidDirect
                             ? polyproj(ann, a, nu)
                             : polyproj_division_free(ann, a, nu);
    Matrix pi = eval_at(g, mw);
    return ProjectionResult{alpha, nu, g, std::move(pi), std::move(ann), options.variant};
}

Matrix generalized_eigenspace_oracle(const Matrix& m, const FieldElement& alpha,
                                     std::size_t nu) {
    if (!m.is_square())
        throw dimension_error("generalized_eigenspace_oracle: operator must be square");
    require_same_context(m.context(), alpha.context());
    const Matrix shifted = m - Matrix::identity(m.context(), m.rows()) * alpha;
    return kernel(pow(shifted, nu));
}

Polynomial element_min_poly(const FieldElement& a) {
    const Context& q = FieldContext::rationals();
    const std::size_t d = a.context()->degree();
    // stack the coordinate vectors of 1, a, a^2, ... until the first
    // linear dependence; that dependence is the minimal polynomial
    std::vector<FieldElement> powers{FieldElement::one(a.context())};
    for (std::size_t k = 1;; ++k) {
        Matrix prev(q, d, k);
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t i = 0; i < d; ++i)
                prev.at(i, j) = FieldElement::from_rational(q, powers[j].coeffs()[i]);
        const FieldElement next = powers.back() * a;
        Matrix target(q, d, 1);
        for (std::size_t i = 0; i < d; ++i)
            target.at(i, 0) = FieldElement::from_rational(q, next.coeffs()[i]);
        try {
            const Matrix c = solve(prev, target);
            std::vector<FieldElement> coeffs(k + 1, FieldElement::zero(q));
            for (std::size_t j = 0; j < k; ++j)
                coeffs[j] = -c.at(j, 0);
            coeffs[k] = FieldElement::one(q);
            return Polynomial(q, std::move(coeffs));
        } catch (const inconsistent_system_error&) {
            powers.push_back(next); // independent: extend the chain
        }
        if (k > d)
            throw integrity_error("element_min_poly: no dependence up to the field degree");
    }
}

std::size_t char_dimension(const Matrix& m, const EigenvalueDescriptor& alpha) {
    if (!m.is_square())
        throw dimension_error("char_dimension: operator must be square");
    if (m.rows() == 0) return 0;
    const Polynomial cp = charpoly(m);
    if (alpha.is_rational() || same_context(m.context(), alpha.extension_context()))
        return root_valuation(cp, alpha.resolve(m.context())).nu;
    if (!m.context()->is_rationals())
        throw context_mismatch_error("char_dimension: operator field " + m.context()->str() +
                                     " does not match the eigenvalue field");
    // rational operator, algebraic eigenvalue: count how many times the
    // eigenvalue's minimal polynomial divides the characteristic polynomial
    const Polynomial mu =
        element_min_poly(alpha.resolve(alpha.extension_context()));
    std::size_t v = 0;
    Polynomial rest = cp;
    for (;;) {
        const DivRem d = divrem(rest, mu);
        if (!d.rem.is_zero()) break;
        rest = d.quot;
        ++v;
    }
    return v;
}

std::size_t projector_rank_by_trace(const ProjectionResult& p) {
    const FieldElement t = p.projector.trace();
    if (!t.is_rational())
        throw integrity_error("projector trace " + t.str() + " is not rational");
    const Rational r = t.as_rational();
    if (!r.is_integer() || r.sign() < 0)
        throw integrity_error("projector trace " + r.str() +
                              " is not a non-negative integer");
    return static_cast<std::size_t>(r.numerator().get_ui());
}

std::string variant_name(Variant v) {
    return v == Variant::EuclidDirect ? "euclid" : "division-free";
}

Variant variant_from_name(const std::string& s) {
    if (s == "euclid") return Variant::EuclidDirect;
    if (s == "division-free") return Variant::DivisionFree;
    throw value_error("unknown variant '" + s + "' (expected euclid or division-free)");
}

} // namespace charproj

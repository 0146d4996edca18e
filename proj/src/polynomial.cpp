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

#include "charproj/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "int_factor.hpp"

namespace charproj {

namespace {

void normalize(std::vector<FieldElement>& c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

} // namespace

Polynomial::Polynomial(Context ctx) : ctx_(std::move(ctx)) {
    if (!ctx_) throw value_error("polynomial without context");
}

Polynomial::Polynomial(Context ctx, std::vector<FieldElement> coeffs)
    : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
    if (!ctx_) throw value_error("polynomial without context");
    for (const FieldElement& e : c_) require_same_context(ctx_, e.context());
    normalize(c_);
}

Polynomial Polynomial::from_rationals(const Context& ctx, const std::vector<Rational>& coeffs) {
    std::vector<FieldElement> c;
    c.reserve(coeffs.size());
    for (const Rational& r : coeffs) c.push_back(FieldElement::from_rational(ctx, r));
    return Polynomial(ctx, std::move(c));
}

Polynomial Polynomial::constant(const FieldElement& c) {
    return Polynomial(c.context(), {c});
}

Polynomial Polynomial::one(const Context& ctx) {
    return constant(FieldElement::one(ctx));
}

Polynomial Polynomial::x(const Context& ctx) {
    return Polynomial(ctx, {FieldElement::zero(ctx), FieldElement::one(ctx)});
}

Polynomial Polynomial::x_minus(const FieldElement& alpha) {
    return Polynomial(alpha.context(), {-alpha, FieldElement::one(alpha.context())});
}

bool Polynomial::is_one() const {
    return c_.size() == 1 && c_[0].is_one();
}

const FieldElement& Polynomial::leading() const {
    if (is_zero()) throw value_error("leading coefficient of the zero polynomial");
    return c_.back();
}

FieldElement Polynomial::coeff(std::size_t i) const {
    if (i >= c_.size()) return FieldElement::zero(ctx_);
    return c_[i];
}

FieldElement Polynomial::eval(const FieldElement& x) const {
    require_same_context(ctx_, x.context());
    FieldElement acc = FieldElement::zero(ctx_);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) throw value_error("monic normalization of the zero polynomial");
    if (leading().is_one()) return *this;
    return *this * leading().inverse();
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return Polynomial(ctx_);
    std::vector<FieldElement> d;
    d.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        d.push_back(c_[i] * FieldElement::from_int(ctx_, static_cast<long>(i)));
    return Polynomial(ctx_, std::move(d));
}

Polynomial Polynomial::operator-() const {
    std::vector<FieldElement> c;
    c.reserve(c_.size());
    for (const FieldElement& e : c_) c.push_back(-e);
    return Polynomial(ctx_, std::move(c));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    require_same_context(a.ctx_, b.ctx_);
    std::vector<FieldElement> c = a.c_.size() >= b.c_.size() ? a.c_ : b.c_;
    const std::vector<FieldElement>& small = a.c_.size() >= b.c_.size() ? b.c_ : a.c_;
    for (std::size_t i = 0; i < small.size(); ++i) c[i] = c[i] + small[i];
    return Polynomial(a.ctx_, std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + (-b);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_context(a.ctx_, b.ctx_);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.ctx_);
    std::vector<FieldElement> c(a.c_.size() + b.c_.size() - 1, FieldElement::zero(a.ctx_));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    }
    return Polynomial(a.ctx_, std::move(c));
}

Polynomial operator*(const Polynomial& a, const FieldElement& s) {
    require_same_context(a.ctx_, s.context());
    std::vector<FieldElement> c;
    c.reserve(a.c_.size());
    for (const FieldElement& e : a.c_) c.push_back(e * s);
    return Polynomial(a.ctx_, std::move(c));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    return same_context(a.ctx_, b.ctx_) && a.c_ == b.c_;
}

std::string Polynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        const FieldElement& c = c_[i];
        std::string cs;
        bool negated = false;
        if (c.is_rational() && !first && c.as_rational().sign() < 0) {
            cs = (-c).str();
            negated = true;
        } else {
            cs = c.str();
        }
        os << (first ? "" : (negated ? " - " : " + "));
        first = false;
        const bool unit = (cs == "1");
        if (i == 0) {
            os << cs;
        } else {
            if (!unit) os << cs << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

DivRem divrem(const Polynomial& f, const Polynomial& g) {
    require_same_context(f.context(), g.context());
    if (g.is_zero()) throw division_by_zero_error("polynomial division by zero");
    const Context& ctx = f.context();
    if (f.degree() < g.degree()) return {Polynomial(ctx), f};
    const FieldElement lead_inv = g.leading().inverse();
    std::vector<FieldElement> r = f.coeffs();
    const std::size_t gn = g.coeffs().size();
    std::vector<FieldElement> q(r.size() - gn + 1, FieldElement::zero(ctx));
    for (std::size_t i = r.size(); i-- > 0;) {
        if (i + 1 < gn) break;
        if (r[i].is_zero()) continue;
        const std::size_t off = i + 1 - gn;
        FieldElement t = r[i] * lead_inv;
        q[off] = t;
        for (std::size_t j = 0; j < gn; ++j) r[off + j] = r[off + j] - t * g.coeffs()[j];
    }
    return {Polynomial(ctx, std::move(q)), Polynomial(ctx, std::move(r))};
}

Polynomial mod(const Polynomial& f, const Polynomial& g) {
    return divrem(f, g).rem;
}

Xgcd xgcd(const Polynomial& f, const Polynomial& g) {
    require_same_context(f.context(), g.context());
    const Context& ctx = f.context();
    if (f.is_zero() && g.is_zero()) throw value_error("xgcd(0, 0) is undefined");
    // invariants: r0 = u0*f + v0*g, r1 = u1*f + v1*g
    Polynomial r0 = f, r1 = g;
    Polynomial u0 = Polynomial::one(ctx), v0 = Polynomial(ctx);
    Polynomial u1 = Polynomial(ctx), v1 = Polynomial::one(ctx);
    while (!r1.is_zero()) {
        DivRem d = divrem(r0, r1);
        Polynomial r2 = d.rem;
        Polynomial u2 = u0 - d.quot * u1;
        Polynomial v2 = v0 - d.quot * v1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    const FieldElement scale = r0.leading().inverse();
    return {r0 * scale, u0 * scale, v0 * scale};
}

Polynomial gcd(const Polynomial& f, const Polynomial& g) {
    require_same_context(f.context(), g.context());
    if (f.is_zero() && g.is_zero()) throw value_error("gcd(0, 0) is undefined");
    Polynomial r0 = f, r1 = g;
    while (!r1.is_zero()) {
        Polynomial r2 = mod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    return r0.monic();
}

Polynomial lcm(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() || g.is_zero()) return Polynomial(f.context());
    return divrem(f * g, gcd(f, g)).quot.monic();
}

SyntheticDiv synthetic_divide(const Polynomial& f, const FieldElement& alpha) {
    require_same_context(f.context(), alpha.context());
    const Context& ctx = f.context();
    if (f.is_zero()) return {Polynomial(ctx), FieldElement::zero(ctx)};
    if (f.degree() == 0) return {Polynomial(ctx), f.coeff(0)};
    // Horner ladder: b_{n-1} = a_n, b_{i-1} = a_i + alpha*b_i, rem = a_0 + alpha*b_0
    const std::vector<FieldElement>& a = f.coeffs();
    std::vector<FieldElement> b(a.size() - 1, FieldElement::zero(ctx));
    b[b.size() - 1] = a.back();
    for (std::size_t i = a.size() - 1; i-- > 1;) b[i - 1] = a[i] + alpha * b[i];
    FieldElement rem = a[0] + alpha * b[0];
    return {Polynomial(ctx, std::move(b)), rem};
}

RootValuation root_valuation(const Polynomial& f, const FieldElement& alpha) {
    require_same_context(f.context(), alpha.context());
    if (f.is_zero()) throw value_error("root valuation in the zero polynomial");
    std::size_t nu = 0;
    Polynomial cur = f;
    while (true) {
        SyntheticDiv d = synthetic_divide(cur, alpha);
        if (!d.rem.is_zero()) break;
        ++nu;
        cur = std::move(d.quot);
    }
    return {nu, cur};
}

Polynomial taylor_shift(const Polynomial& f, const FieldElement& alpha) {
    require_same_context(f.context(), alpha.context());
    const Context& ctx = f.context();
    if (f.is_zero()) return f;
    // Horner recomposition: res <- res*(X + alpha) + a_i, where the multiply
    // by (X + alpha) is a shift plus a scaled add.
    std::vector<FieldElement> res;
    res.reserve(f.coeffs().size());
    for (std::size_t i = f.coeffs().size(); i-- > 0;) {
        res.insert(res.begin(), FieldElement::zero(ctx));
        for (std::size_t j = 0; j + 1 < res.size(); ++j) res[j] = res[j] + alpha * res[j + 1];
        res[0] = res[0] + f.coeffs()[i];
    }
    return Polynomial(ctx, std::move(res));
}

Polynomial sqr(const Polynomial& f) {
    if (f.is_zero()) return f;
    const Context& ctx = f.context();
    const std::vector<FieldElement>& a = f.coeffs();
    const std::size_t n = a.size();
    std::vector<FieldElement> c(2 * n - 1, FieldElement::zero(ctx));
    const FieldElement two = FieldElement::from_int(ctx, 2);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        c[2 * i] = c[2 * i] + a[i] * a[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            if (a[j].is_zero()) continue;
            c[i + j] = c[i + j] + two * a[i] * a[j];
        }
    }
    return Polynomial(ctx, std::move(c));
}

Polynomial pow(const Polynomial& f, std::size_t e) {
    Polynomial result = Polynomial::one(f.context());
    Polynomial base = f;
    while (e > 0) {
        if (e & 1) result = result * base;
        if (e >>= 1) base = sqr(base);
    }
    return result;
}

Polynomial squarefree_part(const Polynomial& f) {
    if (f.is_zero()) throw value_error("squarefree part of the zero polynomial");
    if (f.degree() == 0) return f;
    Polynomial g = gcd(f, f.derivative());
    return divrem(f, g).quot;
}

std::vector<SquarefreeFactor> squarefree_decomposition(const Polynomial& f) {
    if (f.is_zero()) throw value_error("squarefree decomposition of the zero polynomial");
    std::vector<SquarefreeFactor> out;
    if (f.degree() == 0) return out;
    // Yun's algorithm (characteristic zero)
    Polynomial fp = f.derivative();
    Polynomial g = gcd(f, fp);
    Polynomial w = divrem(f, g).quot;
    Polynomial z = divrem(fp, g).quot - w.derivative();
    std::size_t i = 1;
    while (w.degree() > 0) {
        Polynomial gi = gcd(w, z); // z may be zero; then gi = monic(w)
        if (gi.degree() > 0) out.push_back({gi, i});
        w = divrem(w, gi).quot;
        z = divrem(z, gi).quot - w.derivative();
        ++i;
    }
    return out;
}

std::vector<RationalRoot> rational_roots(const Polynomial& f) {
    if (!f.context()->is_rationals())
        throw context_mismatch_error("rational root extraction needs a polynomial over Q");
    if (f.is_zero()) throw value_error("rational roots of the zero polynomial");
    std::vector<RationalRoot> out;
    if (f.degree() == 0) return out;

    // root at zero first
    RootValuation at0 = root_valuation(f, FieldElement::zero(f.context()));
    if (at0.nu > 0) out.push_back({Rational(0), at0.nu});
    Polynomial h = at0.cofactor;
    if (h.degree() == 0) return out;

    // Monicize, then substitute X -> Y/d to reach a monic integer polynomial:
    // rational roots of h are exactly r/d for integer roots r of the result.
    Polynomial hm = h.monic();
    mpz_class d = 1;
    for (const FieldElement& c : hm.coeffs())
        mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.as_rational().denominator().get_mpz_t());
    const std::size_t n = static_cast<std::size_t>(hm.degree());
    std::vector<mpz_class> g(n + 1);
    mpz_class dpow = 1; // d^(n-i) scaling, built from the top down
    for (std::size_t i = n + 1; i-- > 0;) {
        Rational scaled = hm.coeff(i).as_rational() * Rational(dpow, mpz_class(1));
        g[i] = scaled.numerator(); // exact: dpow = d^(n-i) clears the denominator
        dpow *= d;
    }

    auto eval_int = [&](const mpz_class& x) {
        mpz_class acc = 0;
        for (std::size_t i = n + 1; i-- > 0;) acc = acc * x + g[i];
        return acc;
    };

    std::vector<RationalRoot> found;
    mpz_class c0 = abs(g[0]);
    for (const mpz_class& r : detail::divisors(c0)) {
        for (int s : {1, -1}) {
            mpz_class cand = s * r;
            if (eval_int(cand) == 0) {
                Rational root(cand, d);
                RootValuation v = root_valuation(h, FieldElement::from_rational(f.context(), root));
                found.push_back({root, v.nu});
            }
        }
    }
    std::sort(found.begin(), found.end(),
              [](const RationalRoot& a, const RationalRoot& b) { return a.root < b.root; });
    out.insert(out.end(), found.begin(), found.end());
    std::sort(out.begin(), out.end(),
              [](const RationalRoot& a, const RationalRoot& b) { return a.root < b.root; });
    return out;
}

Polynomial embed_coeffs(const Polynomial& f, const Context& target) {
    if (!f.context()->is_rationals())
        throw context_mismatch_error("can only embed a polynomial over Q into a larger context");
    std::vector<FieldElement> c;
    c.reserve(f.coeffs().size());
    for (const FieldElement& e : f.coeffs())
        c.push_back(FieldElement::from_rational(target, e.as_rational()));
    return Polynomial(target, std::move(c));
}

} // namespace charproj

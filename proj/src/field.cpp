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

#include "charproj/field.hpp"

#include <algorithm>
#include <sstream>

#include "charproj/polynomial.hpp"

namespace charproj {

namespace {

// --- small helpers on raw Q-coefficient vectors (lowest degree first) ---

void trim(std::vector<Rational>& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
}

// c -= q * shift(x^k * m), classical remainder by the monic modulus.
void reduce_by_monic(std::vector<Rational>& c, const std::vector<Rational>& mod) {
    const std::size_t d = mod.size() - 1; // degree of the modulus
    if (c.size() <= d) {
        c.resize(d, Rational(0));
        return;
    }
    for (std::size_t i = c.size(); i-- > d;) {
        if (c[i].is_zero()) continue;
        Rational t = c[i];
        c[i] = Rational(0);
        for (std::size_t j = 0; j < d; ++j) c[i - d + j] -= t * mod[j];
    }
    c.resize(d);
}

std::vector<Rational> mul_raw(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

struct QXgcd {
    std::vector<Rational> g, u; // u*a + (.)*b = g
};

// extended gcd over Q[X] on raw vectors; tracks only the cofactor of a.
QXgcd xgcd_raw(std::vector<Rational> a, std::vector<Rational> b) {
    trim(a);
    trim(b);
    std::vector<Rational> r0 = a, r1 = b;
    std::vector<Rational> u0 = {Rational(1)}, u1;
    while (!r1.empty()) {
        // one division step: r0 = q*r1 + r2, u2 = u0 - q*u1
        std::vector<Rational> q;
        std::vector<Rational> r = r0;
        const Rational lead = r1.back();
        while (r.size() >= r1.size() && !r.empty()) {
            Rational t = r.back() / lead;
            std::size_t off = r.size() - r1.size();
            if (q.size() < off + 1) q.resize(off + 1, Rational(0));
            q[off] = t;
            for (std::size_t j = 0; j < r1.size(); ++j) r[off + j] -= t * r1[j];
            trim(r);
        }
        std::vector<Rational> u2 = u0;
        if (!q.empty() && !u1.empty()) {
            std::vector<Rational> qu = mul_raw(q, u1);
            if (u2.size() < qu.size()) u2.resize(qu.size(), Rational(0));
            for (std::size_t i = 0; i < qu.size(); ++i) u2[i] -= qu[i];
            trim(u2);
        }
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    return {r0, u0};
}

} // namespace

// --- FieldContext ---

const Context& FieldContext::rationals() {
    static const Context ctx(new FieldContext(FieldKind::Rationals, {}));
    return ctx;
}

Context FieldContext::extension(std::vector<Rational> modulus) {
    while (!modulus.empty() && modulus.back().is_zero()) modulus.pop_back();
    if (modulus.size() < 3)
        throw invalid_modulus_error("extension modulus must have degree >= 2");
    if (!modulus.back().is_one())
        throw invalid_modulus_error("extension modulus must be monic");
    // Cheap sanity: a modulus with a rational root is certainly reducible.
    Polynomial m = Polynomial::from_rationals(rationals(), modulus);
    if (!rational_roots(m).empty())
        throw invalid_modulus_error("extension modulus has a rational root: " + m.str("Y"));
    return Context(new FieldContext(FieldKind::Extension, std::move(modulus)));
}

std::size_t FieldContext::degree() const {
    return kind_ == FieldKind::Rationals ? 1 : modulus_.size() - 1;
}

bool FieldContext::same(const FieldContext& other) const {
    if (kind_ != other.kind_) return false;
    return modulus_ == other.modulus_;
}

std::string FieldContext::str() const {
    if (kind_ == FieldKind::Rationals) return "Q";
    Polynomial m = Polynomial::from_rationals(rationals(), modulus_);
    return "Q[Y]/(" + m.str("Y") + ")";
}

bool same_context(const Context& a, const Context& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->same(*b);
}

void require_same_context(const Context& a, const Context& b) {
    if (!same_context(a, b))
        throw context_mismatch_error("mixed field contexts: " + a->str() + " vs " + b->str() +
                                     " (use from_rational / base_change_context to embed explicitly)");
}

// --- FieldElement ---

FieldElement::FieldElement(Context ctx, std::vector<Rational> coeffs)
    : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
    if (!ctx_) throw value_error("field element without context");
    if (c_.size() != ctx_->degree())
        throw value_error("field element needs exactly " + std::to_string(ctx_->degree()) +
                          " coordinates, got " + std::to_string(c_.size()));
}

FieldElement FieldElement::zero(const Context& ctx) {
    return FieldElement(ctx, std::vector<Rational>(ctx->degree(), Rational(0)));
}

FieldElement FieldElement::one(const Context& ctx) {
    std::vector<Rational> c(ctx->degree(), Rational(0));
    c[0] = Rational(1);
    return FieldElement(ctx, std::move(c));
}

FieldElement FieldElement::from_rational(const Context& ctx, const Rational& r) {
    std::vector<Rational> c(ctx->degree(), Rational(0));
    c[0] = r;
    return FieldElement(ctx, std::move(c));
}

FieldElement FieldElement::from_int(const Context& ctx, long n) {
    return from_rational(ctx, Rational(n));
}

bool FieldElement::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_zero(); });
}

bool FieldElement::is_one() const {
    if (!c_[0].is_one()) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

bool FieldElement::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

Rational FieldElement::as_rational() const {
    if (!is_rational())
        throw value_error("field element " + str() + " is not rational");
    return c_[0];
}

FieldElement FieldElement::operator-() const {
    std::vector<Rational> c;
    c.reserve(c_.size());
    for (const Rational& r : c_) c.push_back(-r);
    return FieldElement(ctx_, std::move(c));
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    require_same_context(a.ctx_, b.ctx_);
    std::vector<Rational> c = a.c_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.c_[i];
    return FieldElement(a.ctx_, std::move(c));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    require_same_context(a.ctx_, b.ctx_);
    std::vector<Rational> c = a.c_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.c_[i];
    return FieldElement(a.ctx_, std::move(c));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    require_same_context(a.ctx_, b.ctx_);
    if (a.ctx_->is_rationals())
        return FieldElement(a.ctx_, {a.c_[0] * b.c_[0]});
    std::vector<Rational> c = mul_raw(a.c_, b.c_);
    reduce_by_monic(c, a.ctx_->modulus());
    return FieldElement(a.ctx_, std::move(c));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    return a * b.inverse();
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw division_by_zero_error("inverse of the zero element of " + ctx_->str());
    if (ctx_->is_rationals())
        return FieldElement(ctx_, {c_[0].inverse()});
    // Bezout against the modulus: u*rep + v*m = g. Invertible iff g is a
    // nonzero constant; a nonconstant g witnesses a factor of the modulus.
    QXgcd bez = xgcd_raw(c_, ctx_->modulus());
    if (bez.g.size() != 1)
        throw reducible_modulus_error("element " + str() + " is not invertible in " + ctx_->str() +
                                      ": the modulus is reducible");
    Rational scale = bez.g[0].inverse();
    std::vector<Rational> u = bez.u;
    for (Rational& r : u) r *= scale;
    u.resize(ctx_->degree(), Rational(0));
    return FieldElement(ctx_, std::move(u));
}

FieldElement FieldElement::pow(std::size_t e) const {
    FieldElement result = one(ctx_);
    FieldElement base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    return same_context(a.ctx_, b.ctx_) && a.c_ == b.c_;
}

std::string FieldElement::str() const {
    if (ctx_->is_rationals()) return c_[0].str();
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ", ";
        os << c_[i].str();
    }
    os << ']';
    return os.str();
}

} // namespace charproj

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

#include "charproj/matrix.hpp"

#include <random>
#include <sstream>
#include <utility>

#include "charproj/errors.hpp"

namespace charproj {

namespace {

void require_square(const Matrix& m, const char* what) {
    if (!m.is_square())
        throw dimension_error(std::string(what) + ": matrix is " + std::to_string(m.rows()) +
                              "x" + std::to_string(m.cols()) + ", expected square");
}

} // namespace

Matrix::Matrix(Context ctx, std::size_t rows, std::size_t cols)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols),
      e_(rows * cols, FieldElement::zero(ctx_)) {}

Matrix::Matrix(Context ctx, std::size_t rows, std::size_t cols, std::vector<FieldElement> entries)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != rows_ * cols_)
        throw dimension_error("matrix: got " + std::to_string(e_.size()) + " entries for a " +
                              std::to_string(rows_) + "x" + std::to_string(cols_) + " shape");
    for (const FieldElement& x : e_)
        require_same_context(ctx_, x.context());
}

Matrix Matrix::identity(const Context& ctx, std::size_t n) {
    Matrix m(ctx, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = FieldElement::one(ctx);
    return m;
}

Matrix Matrix::from_rationals(const Context& ctx, const std::vector<std::vector<Rational>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    std::vector<FieldElement> entries;
    entries.reserve(r * c);
    for (const auto& row : rows) {
        if (row.size() != c)
            throw dimension_error("matrix: ragged rows (" + std::to_string(row.size()) +
                                  " vs " + std::to_string(c) + ")");
        for (const Rational& x : row)
            entries.push_back(FieldElement::from_rational(ctx, x));
    }
    return Matrix(ctx, r, c, std::move(entries));
}

bool Matrix::is_zero() const {
    for (const FieldElement& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

FieldElement Matrix::trace() const {
    require_square(*this, "trace");
    FieldElement t = FieldElement::zero(ctx_);
    for (std::size_t i = 0; i < rows_; ++i)
        t = t + at(i, i);
    return t;
}

Matrix Matrix::transpose() const {
    Matrix t(ctx_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

Matrix Matrix::column(std::size_t j) const {
    if (j >= cols_)
        throw dimension_error("column index " + std::to_string(j) + " out of range");
    Matrix c(ctx_, rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i)
        c.at(i, 0) = at(i, j);
    return c;
}

Matrix Matrix::operator-() const {
    Matrix r(ctx_, rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k)
        r.e_[k] = -e_[k];
    return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_context(a.ctx_, b.ctx_);
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw dimension_error("matrix sum: shapes differ");
    Matrix r(a.ctx_, a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.e_.size(); ++k)
        r.e_[k] = a.e_[k] + b.e_[k];
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    require_same_context(a.ctx_, b.ctx_);
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw dimension_error("matrix difference: shapes differ");
    Matrix r(a.ctx_, a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.e_.size(); ++k)
        r.e_[k] = a.e_[k] - b.e_[k];
    return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same_context(a.ctx_, b.ctx_);
    if (a.cols_ != b.rows_)
        throw dimension_error("matrix product: " + std::to_string(a.rows_) + "x" +
                              std::to_string(a.cols_) + " times " + std::to_string(b.rows_) +
                              "x" + std::to_string(b.cols_));
    Matrix r(a.ctx_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const FieldElement& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const FieldElement& bkj = b.at(k, j);
                if (bkj.is_zero()) continue;
                r.at(i, j) = r.at(i, j) + aik * bkj;
            }
        }
    return r;
}

Matrix operator*(const Matrix& a, const FieldElement& s) {
    require_same_context(a.ctx_, s.context());
    Matrix r(a.ctx_, a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.e_.size(); ++k)
        r.e_[k] = a.e_[k] * s;
    return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
    if (!same_context(a.ctx_, b.ctx_) || a.rows_ != b.rows_ || a.cols_ != b.cols_)
        return false;
    return a.e_ == b.e_;
}

std::string Matrix::str() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) out << "; ";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) out << ", ";
            out << at(i, j).str();
        }
    }
    out << "]";
    return out.str();
}

Rref rref(const Matrix& m) {
    Matrix r = m;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
        // deterministic pivot: first nonzero entry at or below `row`
        std::size_t p = row;
        while (p < r.rows() && r.at(p, col).is_zero()) ++p;
        if (p == r.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < r.cols(); ++j)
                std::swap(r.at(p, j), r.at(row, j));
        const FieldElement inv = r.at(row, col).inverse();
        for (std::size_t j = col; j < r.cols(); ++j)
            r.at(row, j) = r.at(row, j) * inv;
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == row || r.at(i, col).is_zero()) continue;
            const FieldElement f = r.at(i, col);
            for (std::size_t j = col; j < r.cols(); ++j)
                r.at(i, j) = r.at(i, j) - f * r.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return Rref{std::move(r), std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
    return rref(m).pivot_cols.size();
}

Matrix kernel(const Matrix& m) {
    const Rref r = rref(m);
    std::vector<std::size_t> free_cols;
    {
        std::size_t pi = 0;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (pi < r.pivot_cols.size() && r.pivot_cols[pi] == c) { ++pi; continue; }
            free_cols.push_back(c);
        }
    }
    Matrix k(m.context(), m.cols(), free_cols.size());
    for (std::size_t b = 0; b < free_cols.size(); ++b) {
        const std::size_t f = free_cols[b];
        k.at(f, b) = FieldElement::one(m.context());
        for (std::size_t row = 0; row < r.pivot_cols.size(); ++row)
            k.at(r.pivot_cols[row], b) = -r.reduced.at(row, f);
    }
    return k;
}

Matrix solve(const Matrix& a, const Matrix& b) {
    require_same_context(a.context(), b.context());
    if (a.rows() != b.rows())
        throw dimension_error("solve: lhs has " + std::to_string(a.rows()) +
                              " rows, rhs has " + std::to_string(b.rows()));
    // Eliminate on the augmented matrix, but only pick pivots in the
    // left block; a leftover nonzero right block in a zero row means the
    // system is inconsistent.
    Matrix aug(a.context(), a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) aug.at(i, a.cols() + j) = b.at(i, j);
    }
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < aug.rows(); ++col) {
        std::size_t p = row;
        while (p < aug.rows() && aug.at(p, col).is_zero()) ++p;
        if (p == aug.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < aug.cols(); ++j)
                std::swap(aug.at(p, j), aug.at(row, j));
        const FieldElement inv = aug.at(row, col).inverse();
        for (std::size_t j = col; j < aug.cols(); ++j)
            aug.at(row, j) = aug.at(row, j) * inv;
        for (std::size_t i = 0; i < aug.rows(); ++i) {
            if (i == row || aug.at(i, col).is_zero()) continue;
            const FieldElement f = aug.at(i, col);
            for (std::size_t j = col; j < aug.cols(); ++j)
                aug.at(i, j) = aug.at(i, j) - f * aug.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < aug.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (!aug.at(i, a.cols() + j).is_zero())
                throw inconsistent_system_error("solve: no solution (column " +
                                                std::to_string(j) + ")");
    // free variables are zero, so each pivot row reads off one coordinate
    Matrix x(a.context(), a.cols(), b.cols());
    for (std::size_t r2 = 0; r2 < pivots.size(); ++r2)
        for (std::size_t j = 0; j < b.cols(); ++j)
            x.at(pivots[r2], j) = aug.at(r2, a.cols() + j);
    return x;
}

Matrix inverse(const Matrix& m) {
    require_square(m, "inverse");
    if (rank(m) < m.rows())
        throw singular_matrix_error("inverse: matrix of rank " +
                                    std::to_string(rank(m)) + " is singular");
    return solve(m, Matrix::identity(m.context(), m.rows()));
}

Matrix pow(const Matrix& m, std::size_t e) {
    require_square(m, "pow");
    Matrix acc = Matrix::identity(m.context(), m.rows());
    Matrix base = m;
    while (e) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

Polynomial charpoly(const Matrix& m) {
    require_square(m, "charpoly");
    const Context& ctx = m.context();
    const std::size_t n = m.rows();
    if (n == 0) return Polynomial::one(ctx);

    // similarity reduction to upper Hessenberg form
    Matrix h = m;
    for (std::size_t col = 0; col + 2 < n; ++col) {
        std::size_t p = col + 1;
        while (p < n && h.at(p, col).is_zero()) ++p;
        if (p == n) continue;
        if (p != col + 1) {
            for (std::size_t j = 0; j < n; ++j) std::swap(h.at(p, j), h.at(col + 1, j));
            for (std::size_t i = 0; i < n; ++i) std::swap(h.at(i, p), h.at(i, col + 1));
        }
        const FieldElement inv = h.at(col + 1, col).inverse();
        for (std::size_t i = col + 2; i < n; ++i) {
            if (h.at(i, col).is_zero()) continue;
            const FieldElement t = h.at(i, col) * inv;
            // row_i -= t * row_{col+1}, and the inverse similarity
            // col_{col+1} += t * col_i keeps the spectrum intact
            for (std::size_t j = 0; j < n; ++j)
                h.at(i, j) = h.at(i, j) - t * h.at(col + 1, j);
            for (std::size_t i2 = 0; i2 < n; ++i2)
                h.at(i2, col + 1) = h.at(i2, col + 1) + t * h.at(i2, i);
        }
    }

    // p_m = (X - h[m-1][m-1]) p_{m-1}
    //       - sum_i h[m-1-i][m-1] * (prod of i subdiagonal entries) * p_{m-1-i}
    std::vector<Polynomial> p;
    p.push_back(Polynomial::one(ctx));
    for (std::size_t mm = 1; mm <= n; ++mm) {
        Polynomial pm = Polynomial::x_minus(h.at(mm - 1, mm - 1)) * p[mm - 1];
        FieldElement sub = FieldElement::one(ctx);
        for (std::size_t i = 1; i < mm; ++i) {
            sub = sub * h.at(mm - i, mm - i - 1);
            if (sub.is_zero()) break; // all further products vanish too
            const FieldElement& hi = h.at(mm - 1 - i, mm - 1);
            if (hi.is_zero()) continue;
            pm = pm - Polynomial::constant(hi * sub) * p[mm - 1 - i];
        }
        p.push_back(pm);
    }
    return p[n];
}

namespace {

long draw_small(std::mt19937_64& rng) {
    // hand-rolled draw on [-9, 9]: stable across platforms, unlike
    // std::uniform_int_distribution
    return static_cast<long>(rng() % 19u) - 9;
}

FieldElement random_element(const Context& ctx, std::mt19937_64& rng) {
    std::vector<Rational> c;
    c.reserve(ctx->degree());
    for (std::size_t i = 0; i < ctx->degree(); ++i)
        c.emplace_back(draw_small(rng));
    return FieldElement(ctx, std::move(c));
}

/// Monic annihilator of a linearly recurrent sequence (Berlekamp-Massey).
/// Returns g with sum_j g[j] * s[i+j] == 0 for all valid i, deg g minimal.
Polynomial sequence_minpoly(const Context& ctx, const std::vector<FieldElement>& s) {
    const FieldElement zero = FieldElement::zero(ctx);
    std::vector<FieldElement> c{FieldElement::one(ctx)}; // connection poly C(X)
    std::vector<FieldElement> b{FieldElement::one(ctx)};
    std::size_t l = 0, gap = 1;
    FieldElement bd = FieldElement::one(ctx); // last nonzero discrepancy
    for (std::size_t k = 0; k < s.size(); ++k) {
        FieldElement delta = s[k];
        for (std::size_t i = 1; i <= l && i < c.size(); ++i)
            delta = delta + c[i] * s[k - i];
        if (delta.is_zero()) {
            ++gap;
            continue;
        }
        const FieldElement coef = delta / bd;
        std::vector<FieldElement> next = c;
        if (next.size() < b.size() + gap) next.resize(b.size() + gap, zero);
        for (std::size_t i = 0; i < b.size(); ++i)
            next[i + gap] = next[i + gap] - coef * b[i];
        if (2 * l <= k) {
            b = std::move(c);
            bd = delta;
            l = k + 1 - l;
            gap = 1;
        } else {
            ++gap;
        }
        c = std::move(next);
    }
    // reverse C at length l to get the monic annihilator X^l + c1 X^(l-1) + ...
    std::vector<FieldElement> g(l + 1, zero);
    for (std::size_t i = 0; i <= l; ++i)
        g[l - i] = i < c.size() ? c[i] : zero;
    return Polynomial(ctx, std::move(g));
}

} // namespace

Polynomial minpoly(const Matrix& m, std::uint64_t seed) {
    require_square(m, "minpoly");
    const Context& ctx = m.context();
    const std::size_t n = m.rows();
    if (n == 0) return Polynomial::one(ctx);

    std::mt19937_64 rng(seed);
    Polynomial acc = Polynomial::one(ctx);
    for (std::size_t attempt = 0; attempt < 2 * n; ++attempt) {
        Matrix u(ctx, 1, n), v(ctx, n, 1);
        for (std::size_t i = 0; i < n; ++i) {
            u.at(0, i) = random_element(ctx, rng);
            v.at(i, 0) = random_element(ctx, rng);
        }
        std::vector<FieldElement> s;
        s.reserve(2 * n);
        Matrix w = v;
        for (std::size_t i = 0; i < 2 * n; ++i) {
            s.push_back((u * w).at(0, 0));
            if (i + 1 < 2 * n) w = m * w;
        }
        acc = lcm(acc, sequence_minpoly(ctx, s));
        if (static_cast<std::size_t>(acc.degree()) == n || eval_at(acc, m).is_zero())
            return acc;
    }
    // certified fallback; reached only with pathological random draws
    return minpoly_krylov(m);
}

Polynomial minpoly_krylov(const Matrix& m) {
    require_square(m, "minpoly");
    const Context& ctx = m.context();
    const std::size_t n = m.rows();
    Polynomial acc = Polynomial::one(ctx);
    for (std::size_t start = 0; start < n; ++start) {
        if (static_cast<std::size_t>(acc.degree()) == n) break;
        // grow the chain e, m e, m^2 e, ... until dependent
        Matrix vec(ctx, n, 1);
        vec.at(start, 0) = FieldElement::one(ctx);
        std::vector<Matrix> cols;
        for (;;) {
            bool dependent = false;
            Matrix coeffs(ctx, 0, 0);
            if (!cols.empty()) {
                Matrix k(ctx, n, cols.size());
                for (std::size_t j = 0; j < cols.size(); ++j)
                    for (std::size_t i = 0; i < n; ++i)
                        k.at(i, j) = cols[j].at(i, 0);
                try {
                    coeffs = solve(k, vec);
                    dependent = true;
                } catch (const inconsistent_system_error&) {
                    dependent = false;
                }
            }
            if (dependent) {
                std::vector<FieldElement> local(cols.size() + 1, FieldElement::zero(ctx));
                for (std::size_t j = 0; j < cols.size(); ++j)
                    local[j] = -coeffs.at(j, 0);
                local[cols.size()] = FieldElement::one(ctx);
                acc = lcm(acc, Polynomial(ctx, std::move(local)));
                break;
            }
            cols.push_back(vec);
            vec = m * vec;
        }
    }
    return acc;
}

Matrix eval_at(const Polynomial& f, const Matrix& m) {
    require_square(m, "eval_at");
    require_same_context(f.context(), m.context());
    const std::size_t n = m.rows();
    if (f.is_zero()) return Matrix(m.context(), n, n);
    Matrix acc = Matrix::identity(m.context(), n) * f.leading();
    for (int i = f.degree() - 1; i >= 0; --i)
        acc = acc * m + Matrix::identity(m.context(), n) * f.coeff(static_cast<std::size_t>(i));
    return acc;
}

Matrix base_change_context(const Matrix& m, const Context& target) {
    if (same_context(m.context(), target)) return m;
    if (!m.context()->is_rationals())
        throw context_mismatch_error("base_change_context: can only embed Q-matrices, got " +
                                     m.context()->str());
    Matrix r(target, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r.at(i, j) = FieldElement::from_rational(target, m.at(i, j).as_rational());
    return r;
}

bool has_rational_entries(const Matrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_rational()) return false;
    return true;
}

Matrix rational_matrix(const Matrix& m) {
    if (m.context()->is_rationals()) return m;
    const Context& q = FieldContext::rationals();
    Matrix r(q, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r.at(i, j) = FieldElement::from_rational(q, m.at(i, j).as_rational());
    return r;
}

} // namespace charproj

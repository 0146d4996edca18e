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

#ifndef CHARPROJ_MATRIX_HPP
#define CHARPROJ_MATRIX_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "charproj/polynomial.hpp"

namespace charproj {

/// Default seed for the randomized minimal polynomial computation; the CLI
/// and every library entry point taking a seed default to this value, so
/// results are reproducible out of the box.
inline constexpr std::uint64_t kDefaultSeed = 12345;

/**
 * Dense matrix over a field context, row-major. Entries are exact field
 * elements; there is no floating point anywhere in this library.
 *
 * Matrices are values. Zero-column matrices are allowed (kernels of
 * injective maps produce them).
 */
class Matrix {
public:
    Matrix(Context ctx, std::size_t rows, std::size_t cols); // zero-filled
    Matrix(Context ctx, std::size_t rows, std::size_t cols, std::vector<FieldElement> entries);

    static Matrix identity(const Context& ctx, std::size_t n);
    /// Convenience: build from rationals, embedding into ctx.
    static Matrix from_rationals(const Context& ctx, const std::vector<std::vector<Rational>>& rows);

    const Context& context() const { return ctx_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;

    const FieldElement& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    FieldElement& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }

    FieldElement trace() const;
    Matrix transpose() const;
    Matrix column(std::size_t j) const;

    Matrix operator-() const;
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const FieldElement& s);
    friend Matrix operator*(const FieldElement& s, const Matrix& a) { return a * s; }

    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    std::string str() const;

private:
    Context ctx_;
    std::size_t rows_, cols_;
    std::vector<FieldElement> e_;
};

struct Rref {
    Matrix reduced;
    std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form with deterministic pivoting (first nonzero
/// entry of each column, scanning left to right).
Rref rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Right kernel basis as matrix columns, one per non-pivot column of the
/// rref, in ascending column order; free coordinates form an identity
/// pattern, so the basis is canonical. May have zero columns.
Matrix kernel(const Matrix& m);

/// Solve a*x = b (b may have several columns). Free variables are set to
/// zero, making the solution canonical. Throws inconsistent_system_error
/// when no solution exists.
Matrix solve(const Matrix& a, const Matrix& b);

/// Inverse of a square matrix; throws singular_matrix_error.
Matrix inverse(const Matrix& m);

Matrix pow(const Matrix& m, std::size_t e);

/// Characteristic polynomial det(X*I - m), monic, computed by similarity
/// reduction to Hessenberg form followed by the standard recurrence. Exact
/// field divisions only; no fraction-free detour is needed over a field.
Polynomial charpoly(const Matrix& m);

/// Minimal polynomial, Las Vegas: random Wiedemann sequences compressed by
/// Berlekamp-Massey, lcm-accumulated, and certified by evaluating the
/// candidate at m. Retries with fresh vectors at most 2n times, then falls
/// back to the deterministic Krylov method. The result is always certified,
/// so the seed changes the path, never the value.
Polynomial minpoly(const Matrix& m, std::uint64_t seed = kDefaultSeed);

/// Deterministic minimal polynomial: lcm of the minimal polynomials of the
/// standard basis vectors, found by growing Krylov chains. Quadratically
/// slower than Wiedemann; serves as the independent oracle in tests and as
/// the fallback path.
Polynomial minpoly_krylov(const Matrix& m);

/// f(m) by Horner's scheme: exactly deg(f) matrix multiplications.
Matrix eval_at(const Polynomial& f, const Matrix& m);

/// Entry-wise embedding of a matrix over Q into an extension context.
Matrix base_change_context(const Matrix& m, const Context& target);

/// True when every entry lies in Q (all higher coordinates vanish).
bool has_rational_entries(const Matrix& m);

/// Project a matrix with rational entries back onto the Q context.
Matrix rational_matrix(const Matrix& m);

} // namespace charproj

#endif

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

#ifndef CHARPROJ_ERRORS_HPP
#define CHARPROJ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace charproj {

/// Base class of every error thrown by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A malformed argument value (bad string format, zero denominator, ...).
struct value_error : error {
    using error::error;
};

/// Two values living in different field contexts were combined.
struct context_mismatch_error : error {
    using error::error;
};

/// Incompatible matrix shapes, or a square matrix was required.
struct dimension_error : error {
    using error::error;
};

/// Division by the zero element of a field.
struct division_by_zero_error : error {
    using error::error;
};

/// A modulus rejected at context construction (non-monic, degree < 2, or it
/// has a rational root).
struct invalid_modulus_error : error {
    using error::error;
};

/// A nonzero element turned out to be non-invertible modulo the modulus.
/// This can only happen when the modulus is reducible; irreducibility is not
/// verified up front, so this error is the signal.
struct reducible_modulus_error : error {
    using error::error;
};

/// A linear system has no solution.
struct inconsistent_system_error : error {
    using error::error;
};

/// A square matrix expected to be invertible was singular.
struct singular_matrix_error : error {
    using error::error;
};

/// The requested scalar is not an eigenvalue (not a root of the annihilator).
struct not_eigenvalue_error : error {
    using error::error;
};

/// A multiplicity precondition failed: either (X - alpha)^nu does not divide
/// the annihilator, or nu is smaller than the full multiplicity.
struct multiplicity_error : error {
    using error::error;
};

/// A supplied polynomial does not annihilate the operator.
struct not_annihilator_error : error {
    using error::error;
};

/// An intertwining relation required by an operation does not hold.
struct intertwiner_error : error {
    using error::error;
};

/// find_in_span: the target vector is not in the span of the basis.
struct not_in_span_error : error {
    using error::error;
};

/// find_in_span: the purported basis has dependent columns.
struct dependent_basis_error : error {
    using error::error;
};

/// An internal cross-check failed; indicates corrupted data or a library bug.
struct integrity_error : error {
    using error::error;
};

/// File access or JSON parsing problems.
struct io_error : error {
    using error::error;
};

} // namespace charproj

#endif

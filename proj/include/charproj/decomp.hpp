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

#ifndef CHARPROJ_DECOMP_HPP
#define CHARPROJ_DECOMP_HPP

#include <string>
#include <vector>

#include "charproj/projection.hpp"

namespace charproj {

struct Block {
    std::string label;
    Matrix op; // square operator acting on the block
};

/**
 * A splitting of an ambient space into operator-stable blocks. The change
 * of basis has one row per block coordinate, expressed in the ambient
 * basis: a vector with ambient coordinates x has block coordinates
 * change_of_basis_rows-applied... concretely the ambient operator is
 * change_of_basis^-1 * blockdiag(ops) * change_of_basis.
 */
class BlockDecomposition {
public:
    BlockDecomposition(std::vector<Block> blocks, Matrix change_of_basis);

    const std::vector<Block>& blocks() const { return blocks_; }
    const Matrix& change_of_basis() const { return cob_; }
    std::size_t ambient_dim() const { return cob_.rows(); }
    const Context& context() const { return cob_.context(); }

    Matrix block_diagonal_operator() const;
    /// change_of_basis^-1 * blockdiag(ops) * change_of_basis
    Matrix ambient_operator() const;

private:
    std::vector<Block> blocks_;
    Matrix cob_;
};

/// j intertwines source_op with target_op: j * source_op = target_op * j,
/// and j is injective (full column rank).
struct Intertwiner {
    Matrix j;
    Matrix source_op;
    Matrix target_op;
};

struct IntertwinerCheck {
    bool ok;
    std::size_t witness_column; // first offending column when !ok
    std::string reason;
};

/// Verify both intertwiner invariants. Shape or context incompatibility
/// throws; a well-shaped non-intertwiner comes back ok = false with the
/// first offending column as witness.
IntertwinerCheck check_intertwiner(const Intertwiner& i);

struct TransportResult {
    ProjectionResult source;
    ProjectionResult target;
    /// j * pi_source == pi_target * j, checked exactly. Always true when
    /// the preconditions hold — false would expose a defect in the
    /// projection engine itself.
    bool verified;
};

/// Compute the projection on both ends of an intertwiner independently and
/// verify the transport identity j * pi_source = pi_target * j.
TransportResult equivariant_transport(const Intertwiner& i, const EigenvalueDescriptor& alpha,
                                      const ProjectorOptions& options = {});

struct RecombinedProjection {
    /// Projection data against the ambient operator
    /// change_of_basis^-1 * blockdiag(ops) * change_of_basis.
    ProjectionResult ambient;
    /// The projector in block coordinates (block-diagonal).
    Matrix block_diagonal;
    /// Per-block results sharing one projection polynomial; a block where
    /// alpha is not an eigenvalue carries the zero projector.
    std::vector<ProjectionResult> per_block;
};

/**
 * Blockwise projection glued back to the ambient space. One annihilator is
 * chosen for the whole decomposition (MinPoly: lcm of the block minimal
 * polynomials; CharPoly: product of the block characteristic polynomials;
 * Supplied: as given), one projection polynomial is built from it, and each
 * block evaluates that same polynomial.
 *
 * When alpha is an eigenvalue of no block the result is the zero projector
 * with nu = 0, reported as success.
 */
RecombinedProjection recombine_block_projection(const BlockDecomposition& d,
                                                const EigenvalueDescriptor& alpha,
                                                const ProjectorOptions& options = {});

/// p^-1 * m * p. Throws singular_matrix_error when p is not invertible.
Matrix conjugate_operator(const Matrix& m, const Matrix& p);

/// Coordinates of v in the given basis (columns): returns c with
/// basis * c = v. Throws dependent_basis_error when the columns are
/// dependent, not_in_span_error when v is outside the span.
Matrix find_in_span(const Matrix& basis, const Matrix& v);

/**
 * Tower shortcut for a semisimple ground floor: descent intertwines the
 * upper operator with the floor one (descent * v_upper = u_floor * descent)
 * and alpha is a nonzero simple root of the floor minimal polynomial. The
 * upper projector is then alpha^-1 * lift(u_floor * pi_floor * descent),
 * where the lift inverts descent between the characteristic subspaces.
 * The result is asserted equal to the directly computed upper projector
 * (integrity_error on mismatch — that equality is the point of the
 * identity).
 */
Matrix tower_projection(const Matrix& u_floor, const EigenvalueDescriptor& alpha,
                        const Matrix& descent, const Matrix& v_upper,
                        const ProjectorOptions& options = {});

} // namespace charproj

#endif

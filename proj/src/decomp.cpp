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

#include "charproj/decomp.hpp"

#include <utility>

#include "charproj/errors.hpp"

namespace charproj {

BlockDecomposition::BlockDecomposition(std::vector<Block> blocks, Matrix change_of_basis)
    : blocks_(std::move(blocks)), cob_(std::move(change_of_basis)) {
    if (blocks_.empty())
        throw value_error("decomposition needs at least one block");
    std::size_t total = 0;
    for (const Block& b : blocks_) {
        if (!b.op.is_square())
            throw dimension_error("block '" + b.label + "' is not square");
        require_same_context(b.op.context(), cob_.context());
        total += b.op.rows();
    }
    if (!cob_.is_square() || cob_.rows() != total)
        throw dimension_error("change of basis is " + std::to_string(cob_.rows()) + "x" +
                              std::to_string(cob_.cols()) + " but the blocks sum to dimension " +
                              std::to_string(total));
    if (rank(cob_) != total)
        throw singular_matrix_error("change of basis is singular");
}

Matrix BlockDecomposition::block_diagonal_operator() const {
    Matrix d(context(), ambient_dim(), ambient_dim());
    std::size_t off = 0;
    for (const Block& b : blocks_) {
        for (std::size_t i = 0; i < b.op.rows(); ++i)
            for (std::size_t j = 0; j < b.op.cols(); ++j)
                d.at(off + i, off + j) = b.op.at(i, j);
        off += b.op.rows();
    }
    return d;
}

Matrix BlockDecomposition::ambient_operator() const {
    return conjugate_operator(block_diagonal_operator(), cob_);
}

IntertwinerCheck check_intertwiner(const Intertwiner& i) {
    require_same_context(i.j.context(), i.source_op.context());
    require_same_context(i.j.context(), i.target_op.context());
    if (!i.source_op.is_square() || !i.target_op.is_square())
        throw dimension_error("intertwiner endpoints must be square operators");
    if (i.j.cols() != i.source_op.rows() || i.j.rows() != i.target_op.rows())
        throw dimension_error("intertwiner map is " + std::to_string(i.j.rows()) + "x" +
                              std::to_string(i.j.cols()) + ", incompatible with operators of sizes " +
                              std::to_string(i.target_op.rows()) + " and " +
                              std::to_string(i.source_op.rows()));
    const Rref r = rref(i.j);
    if (r.pivot_cols.size() != i.j.cols()) {
        // witness: the first column not reached by a pivot
        std::size_t witness = 0, pi = 0;
        for (std::size_t c = 0; c < i.j.cols(); ++c) {
            if (pi < r.pivot_cols.size() && r.pivot_cols[pi] == c) { ++pi; continue; }
            witness = c;
            break;
        }
        return {false, witness, "j does not have full column rank"};
    }
    const Matrix gap = i.j * i.source_op - i.target_op * i.j;
    for (std::size_t c = 0; c < gap.cols(); ++c)
        for (std::size_t row = 0; row < gap.rows(); ++row)
            if (!gap.at(row, c).is_zero())
                return {false, c, "j*source != target*j"};
    return {true, 0, ""};
}

TransportResult equivariant_transport(const Intertwiner& i, const EigenvalueDescriptor& alpha,
                                      const ProjectorOptions& options) {
    const IntertwinerCheck chk = check_intertwiner(i);
    if (!chk.ok)
        throw intertwiner_error(chk.reason + " (witness column " +
                                std::to_string(chk.witness_column) + ")");
    ProjectionResult src = projector(i.source_op, alpha, options);
    ProjectionResult tgt = projector(i.target_op, alpha, options);
    const Matrix jw = base_change_context(i.j, src.projector.context());
    const bool verified = jw * src.projector == tgt.projector * jw;
    return TransportResult{std::move(src), std::move(tgt), verified};
}

RecombinedProjection recombine_block_projection(const BlockDecomposition& d,
                                                const EigenvalueDescriptor& alpha,
                                                const ProjectorOptions& options) {
    const Context wctx = alpha.working_context(d.context());
    const FieldElement a = alpha.resolve(wctx);

    // one annihilator for the whole decomposition
    Polynomial ann(wctx);
    if (options.squarefree || options.annihilator == AnnihilatorChoice::Supplied) {
        // delegate validation (and the squarefree convenience) to the
        // single-operator pipeline on the block-diagonal operator
        Polynomial probe(wctx);
        if (options.squarefree) {
            probe = squarefree_part(
                minpoly(base_change_context(d.block_diagonal_operator(), wctx), options.seed));
            if (!eval_at(probe, base_change_context(d.block_diagonal_operator(), wctx)).is_zero())
                throw not_annihilator_error(
                    "the squarefree part of the minimal polynomial does not annihilate the "
                    "decomposition; it is not semisimple");
        } else {
            if (!options.supplied)
                throw value_error("annihilator choice Supplied requires a polynomial");
            probe = options.supplied->context()->is_rationals() && !wctx->is_rationals()
                        ? embed_coeffs(*options.supplied, wctx)
                        : *options.supplied;
            require_same_context(probe.context(), wctx);
            if (!eval_at(probe, base_change_context(d.block_diagonal_operator(), wctx)).is_zero())
                throw not_annihilator_error(
                    "the supplied polynomial does not annihilate the decomposition");
        }
        ann = probe;
    } else if (options.annihilator == AnnihilatorChoice::MinPoly) {
        ann = Polynomial::one(wctx);
        for (const Block& b : d.blocks())
            ann = lcm(ann, minpoly(base_change_context(b.op, wctx), options.seed));
    } else { // CharPoly
        ann = Polynomial::one(wctx);
        for (const Block& b : d.blocks())
            ann = ann * charpoly(base_change_context(b.op, wctx));
    }

    const std::size_t nu = root_valuation(ann, a).nu;
    Polynomial g(wctx); // zero when alpha is an eigenvalue of no block
    if (nu > 0)
        g = options.variant == Variant::EuclidDirect ? polyproj(ann, a, nu)
                                                     : polyproj_division_free(ann, a, nu);

    std::vector<ProjectionResult> per_block;
    Matrix diag(wctx, d.ambient_dim(), d.ambient_dim());
    std::size_t off = 0;
    for (const Block& b : d.blocks()) {
        const Matrix bw = base_change_context(b.op, wctx);
        Matrix pi = eval_at(g, bw);
        for (std::size_t i = 0; i < pi.rows(); ++i)
            for (std::size_t j = 0; j < pi.cols(); ++j)
                diag.at(off + i, off + j) = pi.at(i, j);
        off += pi.rows();
        per_block.push_back(ProjectionResult{alpha, nu, g, std::move(pi), ann, options.variant});
    }

    const Matrix cob = base_change_context(d.change_of_basis(), wctx);
    Matrix ambient_proj = conjugate_operator(diag, cob);
    ProjectionResult ambient{alpha, nu, g, std::move(ambient_proj), ann, options.variant};
    return RecombinedProjection{std::move(ambient), std::move(diag), std::move(per_block)};
}

Matrix conjugate_operator(const Matrix& m, const Matrix& p) {
    if (!m.is_square() || !p.is_square() || m.rows() != p.rows())
        throw dimension_error("conjugation needs square matrices of equal size");
    return inverse(p) * m * p;
}

Matrix find_in_span(const Matrix& basis, const Matrix& v) {
    if (rank(basis) != basis.cols())
        throw dependent_basis_error("basis columns are linearly dependent");
    try {
        return solve(basis, v);
    } catch (const inconsistent_system_error&) {
        throw not_in_span_error("the vector is not in the span of the basis");
    }
}

Matrix tower_projection(const Matrix& u_floor, const EigenvalueDescriptor& alpha,
                        const Matrix& descent, const Matrix& v_upper,
                        const ProjectorOptions& options) {
    if (!u_floor.is_square() || !v_upper.is_square())
        throw dimension_error("tower operators must be square");
    if (descent.rows() != u_floor.rows() || descent.cols() != v_upper.rows())
        throw dimension_error("descent map is " + std::to_string(descent.rows()) + "x" +
                              std::to_string(descent.cols()) + ", expected " +
                              std::to_string(u_floor.rows()) + "x" +
                              std::to_string(v_upper.rows()));
    require_same_context(u_floor.context(), v_upper.context());
    require_same_context(u_floor.context(), descent.context());

    const Context wctx = alpha.working_context(u_floor.context());
    const Matrix fl = base_change_context(u_floor, wctx);
    const Matrix up = base_change_context(v_upper, wctx);
    const Matrix dn = base_change_context(descent, wctx);
    const FieldElement a = alpha.resolve(wctx);

    if (dn * up != fl * dn)
        throw intertwiner_error("descent does not intertwine the upper operator "
                                "with the floor operator");
    if (a.is_zero())
        throw value_error("tower shortcut needs a nonzero eigenvalue "
                          "(the floor inverse is multiplication by 1/alpha)");
    const Polynomial floor_min = minpoly(fl, options.seed);
    const std::size_t floor_nu = root_valuation(floor_min, a).nu;
    if (floor_nu == 0)
        throw not_eigenvalue_error(alpha.str() +
                                   " is not an eigenvalue of the floor operator");
    if (floor_nu != 1)
        throw multiplicity_error(alpha.str() +
                                 " is not a simple root of the floor minimal polynomial "
                                 "(the ground floor is not semisimple there)");

    const Polynomial g = polyproj(floor_min, a, 1);
    const Matrix pi_floor = eval_at(g, fl);

    // the upper characteristic subspace is Ker(v - alpha): the descent is an
    // isomorphism between the characteristic subspaces and the floor one is
    // a plain eigenspace, so v - alpha vanishes up there too
    const Matrix k = kernel(up - Matrix::identity(wctx, up.rows()) * a);
    Matrix cand(wctx, up.rows(), up.rows());
    try {
        // lift: solve descent*K * c = u * pi_floor * descent column by column
        const Matrix c = solve(dn * k, fl * pi_floor * dn);
        cand = (k * c) * a.inverse();
    } catch (const inconsistent_system_error&) {
        throw integrity_error("descent is not an isomorphism between the characteristic "
                              "subspaces: the floor projection cannot be lifted");
    }

    const ProjectionResult direct = projector(up, alpha, options);
    if (cand != direct.projector)
        throw integrity_error("tower identity violated: the lifted projector differs from "
                              "the directly computed one");
    return cand;
}

} // namespace charproj

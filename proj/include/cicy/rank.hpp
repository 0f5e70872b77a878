#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cicy/field.hpp"
#include "cicy/poly.hpp"

namespace cicy {

/// One matrix column as (row index, nonzero coefficient) pairs.
using SparseEntry = std::pair<uint32_t, uint32_t>;

/// Exact rank of a sparse matrix over F_p, built column by column.
///
/// Left-to-right sparse column echelon: each column is scattered into a dense
/// accumulator and reduced against the stored pivot rows in row order; the
/// first surviving entry becomes a new unit pivot whose tail lies strictly
/// below it, so a single pass per column suffices. Only structural zeros are
/// skipped. Requires p < 46341 so a*b + c stays in 32 bits.
class RankEngine {
public:
    RankEngine(uint32_t nrows, PrimeField F);

    void add_column(std::span<const SparseEntry> col);
    size_t column_count() const { return offsets_.size() - 1; }

    /// Run the elimination. May be called once; columns are consumed.
    uint64_t rank();

    /// After rank(): dimension of the cokernel of the column span.
    uint64_t corank() const { return nrows_ - rank_; }

    /// After rank(): a basis of the left kernel (vectors of length nrows).
    /// Dense transpose elimination, intended for test-sized matrices.
    std::vector<std::vector<uint32_t>> left_kernel_basis() const;

    /// Peak number of stored pivot-row entries (diagnostic).
    uint64_t fill_entries() const { return fill_; }

private:
    PrimeField F_;
    uint32_t nrows_;
    uint64_t magic_;  // Lemire fastmod constant
    bool ran_ = false;
    uint64_t rank_ = 0;
    uint64_t fill_ = 0;

    uint32_t fastmod(uint32_t v) const {
        uint64_t low = magic_ * v;
        return (uint32_t)(((__uint128_t)low * F_.p()) >> 64);
    }

    // columns, CSR; retained for left_kernel_basis
    std::vector<uint32_t> idx_;
    std::vector<uint32_t> coef_;
    std::vector<uint64_t> offsets_{0};
};

/// Rank over F_p of the coefficient matrix whose rows are indexed by the
/// target basis monomials and whose columns are the given polynomials.
/// Every column must be homogeneous of the target multidegree.
uint64_t sparse_rank(const std::vector<SparsePoly>& columns, const GradedPieceBasis& target,
                     const PrimeField& F);

/// Dense reference rank, for tests and small systems.
uint64_t dense_rank(std::vector<std::vector<uint32_t>> rows, const PrimeField& F);

}  // namespace cicy

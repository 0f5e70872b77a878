#include "cicy/rank.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace cicy {

RankEngine::RankEngine(uint32_t nrows, PrimeField F) : F_(F), nrows_(nrows) {
    if (F.p() >= 46341) throw std::invalid_argument("RankEngine: prime too large for 32-bit accumulation");
    magic_ = UINT64_MAX / F.p() + 1;
}

void RankEngine::add_column(std::span<const SparseEntry> col) {
    if (ran_) throw std::logic_error("RankEngine: add_column after rank()");
    std::vector<SparseEntry> entries(col.begin(), col.end());
    std::sort(entries.begin(), entries.end());
    for (size_t i = 0; i < entries.size(); ++i) {
        auto [r, c] = entries[i];
        if (r >= nrows_) throw std::out_of_range("RankEngine: row index out of range");
        if (c >= F_.p()) throw std::invalid_argument("RankEngine: coefficient not reduced");
        while (i + 1 < entries.size() && entries[i + 1].first == r) c = F_.add(c, entries[++i].second);
        if (c == 0) continue;
        idx_.push_back(r);
        coef_.push_back(c);
    }
    offsets_.push_back(idx_.size());
}

uint64_t RankEngine::rank() {
    if (ran_) throw std::logic_error("RankEngine: rank() called twice");
    ran_ = true;
    const uint32_t p = F_.p();
    size_t ncols = offsets_.size() - 1;
    size_t nwords = (nrows_ + 63) / 64;

    std::vector<uint32_t> buf(nrows_, 0);
    std::vector<uint64_t> bits(nwords, 0);
    std::vector<int32_t> pivot_of_row(nrows_, -1);
    std::vector<std::vector<SparseEntry>> rows;

    for (size_t c = 0; c < ncols && rank_ < nrows_; ++c) {
        uint64_t begin = offsets_[c], end = offsets_[c + 1];
        if (begin == end) continue;
        for (uint64_t t = begin; t < end; ++t) {
            uint32_t r = idx_[t];
            buf[r] = coef_[t];
            bits[r >> 6] |= 1ull << (r & 63);
        }
        uint32_t lead = UINT32_MAX;
        for (size_t w = idx_[begin] >> 6; w < nwords; ++w) {
            uint64_t word = bits[w];
            while (word) {
                uint32_t r = (uint32_t)(w * 64 + std::countr_zero(word));
                word &= word - 1;
                uint32_t v = buf[r];
                if (v == 0) continue;
                int32_t piv = pivot_of_row[r];
                if (piv < 0) { lead = r; goto found; }
                // buf += (p - v) * pivot row; pivot rows are monic with lead at r
                {
                    uint32_t factor = p - v;
                    const auto& prow = rows[piv];
                    for (auto& [i, pc] : prow) {
                        buf[i] = fastmod(buf[i] + factor * pc);
                        bits[i >> 6] |= 1ull << (i & 63);
                    }
                    // the in-flight word snapshot misses bits this axpy set in
                    // the current word; reload the tail beyond r
                    uint64_t fresh = bits[w];
                    uint64_t above = r & 63 ? ~((2ull << (r & 63)) - 1) : ~1ull;
                    word |= fresh & above;
                }
            }
            bits[w] = 0;
        }
    found:
        if (lead == UINT32_MAX) continue;  // column reduced to zero
        // gather the surviving tail into a new monic pivot row
        uint32_t inv = F_.inv(buf[lead]);
        std::vector<SparseEntry> row;
        for (size_t w = lead >> 6; w < nwords; ++w) {
            uint64_t word = bits[w];
            bits[w] = 0;
            while (word) {
                uint32_t r = (uint32_t)(w * 64 + std::countr_zero(word));
                word &= word - 1;
                if (buf[r]) {
                    row.emplace_back(r, F_.mul(buf[r], inv));
                    buf[r] = 0;
                }
            }
        }
        fill_ += row.size();
        pivot_of_row[lead] = (int32_t)rows.size();
        rows.push_back(std::move(row));
        ++rank_;
    }
    return rank_;
}

std::vector<std::vector<uint32_t>> RankEngine::left_kernel_basis() const {
    if (!ran_) throw std::logic_error("RankEngine: rank() not run");
    if (nrows_ > 4096) throw std::logic_error("left_kernel_basis: matrix too large for the dense path");
    size_t ncols = offsets_.size() - 1;
    // dense transpose: rows of M^T are the columns; kernel of M^T = left kernel of M
    std::vector<std::vector<uint32_t>> mt(ncols, std::vector<uint32_t>(nrows_, 0));
    for (size_t c = 0; c < ncols; ++c)
        for (uint64_t t = offsets_[c]; t < offsets_[c + 1]; ++t) mt[c][idx_[t]] = coef_[t];

    // Gauss-Jordan, tracking pivot columns
    std::vector<int32_t> pivot_col_of(ncols, -1);
    std::vector<bool> is_pivot_col(nrows_, false);
    size_t prow = 0;
    for (uint32_t col = 0; col < nrows_ && prow < ncols; ++col) {
        size_t sel = prow;
        while (sel < ncols && mt[sel][col] == 0) ++sel;
        if (sel == ncols) continue;
        std::swap(mt[sel], mt[prow]);
        uint32_t inv = F_.inv(mt[prow][col]);
        for (uint32_t j = 0; j < nrows_; ++j) mt[prow][j] = F_.mul(mt[prow][j], inv);
        for (size_t i = 0; i < ncols; ++i) {
            if (i == prow || mt[i][col] == 0) continue;
            uint32_t f = mt[i][col];
            for (uint32_t j = 0; j < nrows_; ++j)
                mt[i][j] = F_.sub(mt[i][j], F_.mul(f, mt[prow][j]));
        }
        pivot_col_of[prow] = (int32_t)col;
        is_pivot_col[col] = true;
        ++prow;
    }
    std::vector<std::vector<uint32_t>> basis;
    for (uint32_t free_col = 0; free_col < nrows_; ++free_col) {
        if (is_pivot_col[free_col]) continue;
        std::vector<uint32_t> w(nrows_, 0);
        w[free_col] = 1;
        for (size_t i = 0; i < prow; ++i)
            w[pivot_col_of[i]] = F_.neg(mt[i][free_col]);
        basis.push_back(std::move(w));
    }
    return basis;
}

uint64_t sparse_rank(const std::vector<SparsePoly>& columns, const GradedPieceBasis& target,
                     const PrimeField& F) {
    RankEngine engine((uint32_t)target.size(), F);
    std::vector<SparseEntry> col;
    for (const auto& poly : columns) {
        if (poly.is_zero()) {
            engine.add_column({});
            continue;
        }
        auto deg = poly.homogeneous_degree();
        if (!deg || *deg != target.degree)
            throw std::invalid_argument("sparse_rank: column degree mismatch");
        col.clear();
        for (auto& [m, c] : poly.terms()) col.emplace_back(target.position(m), c);
        engine.add_column(col);
    }
    return engine.rank();
}

uint64_t dense_rank(std::vector<std::vector<uint32_t>> rows, const PrimeField& F) {
    uint64_t rank = 0;
    size_t nr = rows.size();
    if (nr == 0) return 0;
    size_t nc = rows[0].size();
    size_t pivot_row = 0;
    for (size_t col = 0; col < nc && pivot_row < nr; ++col) {
        size_t sel = pivot_row;
        while (sel < nr && rows[sel][col] == 0) ++sel;
        if (sel == nr) continue;
        std::swap(rows[sel], rows[pivot_row]);
        uint32_t inv = F.inv(rows[pivot_row][col]);
        for (size_t j = col; j < nc; ++j) rows[pivot_row][j] = F.mul(rows[pivot_row][j], inv);
        for (size_t i = 0; i < nr; ++i) {
            if (i == pivot_row || rows[i][col] == 0) continue;
            uint32_t c = rows[i][col];
            for (size_t j = col; j < nc; ++j)
                rows[i][j] = F.sub(rows[i][j], F.mul(c, rows[pivot_row][j]));
        }
        ++pivot_row;
        ++rank;
    }
    return rank;
}

}  // namespace cicy

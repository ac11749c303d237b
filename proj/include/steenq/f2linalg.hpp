#pragma once

/* Dense bit-packed linear algebra over GF(2). Rows are uint64 blocks; rank
 * and kernel extraction use plain Gaussian elimination, which is more than
 * fast enough for the slice dimensions that arise here (hundreds).
 */

#include <cstdint>
#include <optional>
#include <vector>

namespace steenq {

class BitMatrix {
public:
    explicit BitMatrix(size_t ncols) : ncols_(ncols), words_((ncols + 63) / 64) {}

    size_t rows() const { return rows_.size(); }
    size_t cols() const { return ncols_; }

    /* Appends a row with ones at the given column indices. */
    void add_row(const std::vector<size_t>& ones) {
        std::vector<uint64_t> row(words_, 0);
        for (size_t c : ones) row[c >> 6] ^= (uint64_t{1} << (c & 63));
        rows_.push_back(std::move(row));
    }

    size_t rank() const {
        auto work = rows_;
        return eliminate(work, nullptr);
    }

    /* A nonzero combination of row indices that XORs to zero, if the rows
     * are dependent. */
    std::optional<std::vector<size_t>> dependency() const {
        auto work = rows_;
        std::vector<std::vector<uint64_t>> trace;
        size_t idwords = (rows_.size() + 63) / 64;
        trace.resize(rows_.size());
        for (size_t r = 0; r < rows_.size(); ++r) {
            trace[r].assign(idwords, 0);
            trace[r][r >> 6] = uint64_t{1} << (r & 63);
        }
        eliminate(work, &trace);
        for (size_t r = 0; r < work.size(); ++r) {
            bool zero = true;
            for (uint64_t w : work[r])
                if (w) {
                    zero = false;
                    break;
                }
            if (!zero) continue;
            std::vector<size_t> combo;
            for (size_t i = 0; i < rows_.size(); ++i)
                if (trace[r][i >> 6] & (uint64_t{1} << (i & 63))) combo.push_back(i);
            if (!combo.empty()) return combo;
        }
        return std::nullopt;
    }

private:
    /* Row-reduces work in place; returns the rank. When trace is non-null it
     * receives the same row operations, so zero rows of work correspond to
     * kernel combinations recorded in trace. */
    size_t eliminate(std::vector<std::vector<uint64_t>>& work,
                     std::vector<std::vector<uint64_t>>* trace) const {
        size_t rank = 0;
        for (size_t col = 0; col < ncols_ && rank < work.size(); ++col) {
            size_t w = col >> 6;
            uint64_t bit = uint64_t{1} << (col & 63);
            size_t pivot = rank;
            while (pivot < work.size() && !(work[pivot][w] & bit)) ++pivot;
            if (pivot == work.size()) continue;
            std::swap(work[pivot], work[rank]);
            if (trace) std::swap((*trace)[pivot], (*trace)[rank]);
            for (size_t r = 0; r < work.size(); ++r) {
                if (r == rank || !(work[r][w] & bit)) continue;
                for (size_t k = 0; k < words_; ++k) work[r][k] ^= work[rank][k];
                if (trace)
                    for (size_t k = 0; k < (*trace)[r].size(); ++k)
                        (*trace)[r][k] ^= (*trace)[rank][k];
            }
            ++rank;
        }
        return rank;
    }

    size_t ncols_;
    size_t words_;
    std::vector<std::vector<uint64_t>> rows_;
};

} // namespace steenq

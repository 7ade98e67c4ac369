#pragma once

#include <vector>

#include "gaeta/fp.hpp"

namespace gaeta {

/// Dense matrix over F_p, row major.
class FpMat {
public:
    FpMat() = default;
    FpMat(long long rows, long long cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows * cols), 0) {}

    long long rows() const { return rows_; }
    long long cols() const { return cols_; }
    uint32_t& at(long long i, long long j) { return a_[static_cast<size_t>(i * cols_ + j)]; }
    uint32_t at(long long i, long long j) const {
        return a_[static_cast<size_t>(i * cols_ + j)];
    }

    FpMat transposed() const {
        FpMat t(cols_, rows_);
        for (long long i = 0; i < rows_; ++i)
            for (long long j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    /// Row-reduces in place; returns the rank and records pivot columns.
    long long rref(const Fp& f, std::vector<long long>* pivots = nullptr) {
        long long rank = 0;
        for (long long col = 0; col < cols_ && rank < rows_; ++col) {
            long long piv = -1;
            for (long long i = rank; i < rows_; ++i)
                if (at(i, col) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) continue;
            if (piv != rank)
                for (long long j = col; j < cols_; ++j) std::swap(at(piv, j), at(rank, j));
            uint32_t inv = f.inv(at(rank, col));
            for (long long j = col; j < cols_; ++j) at(rank, j) = f.mul(at(rank, j), inv);
            for (long long i = 0; i < rows_; ++i) {
                if (i == rank || at(i, col) == 0) continue;
                uint32_t m = at(i, col);
                for (long long j = col; j < cols_; ++j)
                    at(i, j) = f.sub(at(i, j), f.mul(m, at(rank, j)));
            }
            if (pivots) pivots->push_back(col);
            ++rank;
        }
        return rank;
    }

    long long rank(const Fp& f) const {
        FpMat copy = *this;
        return copy.rref(f);
    }

    /// Basis of the right kernel, one column vector per basis element.
    std::vector<std::vector<uint32_t>> kernel(const Fp& f) const {
        FpMat copy = *this;
        std::vector<long long> pivots;
        long long rank = copy.rref(f, &pivots);
        std::vector<bool> is_pivot(cols_, false);
        for (long long c : pivots) is_pivot[static_cast<size_t>(c)] = true;
        std::vector<std::vector<uint32_t>> basis;
        for (long long freec = 0; freec < cols_; ++freec) {
            if (is_pivot[static_cast<size_t>(freec)]) continue;
            std::vector<uint32_t> v(cols_, 0);
            v[static_cast<size_t>(freec)] = 1;
            for (long long r = 0; r < rank; ++r)
                v[static_cast<size_t>(pivots[static_cast<size_t>(r)])] =
                    f.neg(copy.at(r, freec));
            basis.push_back(std::move(v));
        }
        return basis;
    }

private:
    long long rows_ = 0, cols_ = 0;
    std::vector<uint32_t> a_;
};

} // namespace gaeta

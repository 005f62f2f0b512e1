#pragma once

#include "dgcalc/rational.hpp"

#include <vector>

namespace dgcalc {

/// Dense matrix of exact rationals, row major. Rows/cols may be zero;
/// a k x 0 or 0 x k matrix is a legal (empty) linear map.
class RatMat {
public:
    RatMat() = default;
    RatMat(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

    static RatMat identity(int n);
    static RatMat mul(const RatMat& a, const RatMat& b);
    bool is_zero() const;

    friend bool operator==(const RatMat& a, const RatMat& b);

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

/// Rank by exact Gaussian elimination.
int rank(const RatMat& m);

/// Basis of the right kernel {v : m v = 0}, one column vector per basis element.
std::vector<std::vector<Rational>> kernel_basis(const RatMat& m);

/// Rank of the subspace spanned by a set of row vectors.
int span_rank(const std::vector<std::vector<Rational>>& rows);

/// dim( span(rows) ∩ {v : v[i] = 0 for all i >= keep} ) for coordinate-aligned
/// truncations: vectors in the span supported on the first `keep` coordinates.
int span_intersect_prefix_dim(const std::vector<std::vector<Rational>>& rows, int keep);

/// Solve m x = b; returns false when inconsistent.
bool solve(const RatMat& m, const std::vector<Rational>& b, std::vector<Rational>& x);

/// True when b lies in the span of the given row vectors.
bool in_span(const std::vector<std::vector<Rational>>& rows, const std::vector<Rational>& b);

}  // namespace dgcalc

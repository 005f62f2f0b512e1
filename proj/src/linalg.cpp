#include "dgcalc/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace dgcalc {

RatMat RatMat::identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

RatMat RatMat::mul(const RatMat& a, const RatMat& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("RatMat::mul: shape mismatch");
    RatMat r(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (int j = 0; j < b.cols(); ++j) {
                if (b.at(k, j).is_zero()) continue;
                r.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        }
    return r;
}

bool RatMat::is_zero() const {
    for (const auto& v : data_)
        if (!v.is_zero()) return false;
    return true;
}

bool operator==(const RatMat& a, const RatMat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

namespace {

// Row echelon reduction in place; returns pivot columns.
std::vector<int> echelon(std::vector<std::vector<Rational>>& rows, int cols) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
        int sel = -1;
        for (int i = r; i < static_cast<int>(rows.size()); ++i) {
            if (!rows[i][c].is_zero()) { sel = i; break; }
        }
        if (sel < 0) continue;
        std::swap(rows[r], rows[sel]);
        Rational inv = Rational(1) / rows[r][c];
        for (int j = c; j < cols; ++j) rows[r][j] *= inv;
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            Rational f = rows[i][c];
            for (int j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r == 0 ? 0 : r);
    return pivots;
}

std::vector<std::vector<Rational>> to_rows(const RatMat& m) {
    std::vector<std::vector<Rational>> rows(m.rows(), std::vector<Rational>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) rows[i][j] = m.at(i, j);
    return rows;
}

}  // namespace

int rank(const RatMat& m) {
    auto rows = to_rows(m);
    return static_cast<int>(echelon(rows, m.cols()).size());
}

std::vector<std::vector<Rational>> kernel_basis(const RatMat& m) {
    auto rows = to_rows(m);
    std::vector<int> pivots = echelon(rows, m.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(m.cols());
        v[free] = Rational(1);
        for (size_t i = 0; i < pivots.size(); ++i) {
            // rows are in reduced echelon form: pivot entry is 1
            v[pivots[i]] = -rows[i][free];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

int span_rank(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty()) return 0;
    auto copy = rows;
    return static_cast<int>(echelon(copy, static_cast<int>(rows[0].size())).size());
}

int span_intersect_prefix_dim(const std::vector<std::vector<Rational>>& rows, int keep) {
    if (rows.empty()) return 0;
    int cols = static_cast<int>(rows[0].size());
    // dim(W ∩ ker P) = dim W - rank(P|W), P = projection onto coordinates >= keep
    std::vector<std::vector<Rational>> tail;
    tail.reserve(rows.size());
    for (const auto& v : rows) tail.emplace_back(v.begin() + keep, v.end());
    (void)cols;
    return span_rank(rows) - span_rank(tail);
}

bool solve(const RatMat& m, const std::vector<Rational>& b, std::vector<Rational>& x) {
    if (static_cast<int>(b.size()) != m.rows()) throw std::invalid_argument("solve: size mismatch");
    std::vector<std::vector<Rational>> rows(m.rows(), std::vector<Rational>(m.cols() + 1));
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) rows[i][j] = m.at(i, j);
        rows[i][m.cols()] = b[i];
    }
    std::vector<int> pivots = echelon(rows, m.cols() + 1);
    x.assign(m.cols(), Rational(0));
    for (size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == m.cols()) return false;  // 0 = 1 row
        x[pivots[i]] = rows[i][m.cols()];
    }
    return true;
}

bool in_span(const std::vector<std::vector<Rational>>& rows, const std::vector<Rational>& b) {
    if (rows.empty()) {
        for (const auto& v : b)
            if (!v.is_zero()) return false;
        return true;
    }
    RatMat m(static_cast<int>(b.size()), static_cast<int>(rows.size()));
    for (int j = 0; j < m.cols(); ++j)
        for (int i = 0; i < m.rows(); ++i) m.at(i, j) = rows[j][i];
    std::vector<Rational> x;
    return solve(m, b, x);
}

}  // namespace dgcalc

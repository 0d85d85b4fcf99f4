#include "fusion/matrix.hpp"

#include <stdexcept>

namespace fusion {

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<std::vector<Rational>>& cols, int rows) {
    RatMatrix m(rows, static_cast<int>(cols.size()));
    for (int c = 0; c < m.cols_; ++c) {
        if (static_cast<int>(cols[c].size()) != rows) throw std::invalid_argument("from_columns: size mismatch");
        for (int r = 0; r < rows; ++r) m.at(r, c) = cols[c][r];
    }
    return m;
}

std::vector<Rational> RatMatrix::column(int c) const {
    std::vector<Rational> v(rows_, Rational(0));
    for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

RatMatrix operator*(const RatMatrix& x, const RatMatrix& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("RatMatrix: shape mismatch in product");
    RatMatrix z(x.rows_, y.cols_);
    for (int i = 0; i < x.rows_; ++i)
        for (int k = 0; k < x.cols_; ++k) {
            if (x.at(i, k).is_zero()) continue;
            for (int j = 0; j < y.cols_; ++j) {
                if (y.at(k, j).is_zero()) continue;
                z.at(i, j) += x.at(i, k) * y.at(k, j);
            }
        }
    return z;
}

std::vector<Rational> RatMatrix::apply(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("RatMatrix: apply size mismatch");
    std::vector<Rational> out(rows_, Rational(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
    return out;
}

RatMatrix RatMatrix::pow(long k) const {
    if (rows_ != cols_) throw std::invalid_argument("RatMatrix: pow of non-square matrix");
    RatMatrix acc = identity(rows_);
    RatMatrix base = *this;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        if (k >>= 1) base = base * base;
    }
    return acc;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RatMatrix RatMatrix::augmented(const RatMatrix& right) const {
    if (rows_ != right.rows_) throw std::invalid_argument("RatMatrix: augment shape mismatch");
    RatMatrix m(rows_, cols_ + right.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
        for (int j = 0; j < right.cols_; ++j) m.at(i, cols_ + j) = right.at(i, j);
    }
    return m;
}

std::vector<int> RatMatrix::rref() {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
        int p = -1;
        for (int r = row; r < rows_; ++r)
            if (!at(r, col).is_zero()) { p = r; break; }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < cols_; ++j) std::swap(at(p, j), at(row, j));
        Rational inv = at(row, col).inverse();
        for (int j = col; j < cols_; ++j) at(row, j) *= inv;
        for (int r = 0; r < rows_; ++r) {
            if (r == row || at(r, col).is_zero()) continue;
            Rational f = at(r, col);
            for (int j = col; j < cols_; ++j) at(r, j) -= f * at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int RatMatrix::rank() const {
    RatMatrix m = *this;
    return static_cast<int>(m.rref().size());
}

Rational RatMatrix::det() const {
    if (rows_ != cols_) throw std::invalid_argument("RatMatrix: det of non-square matrix");
    RatMatrix m = *this;
    Rational d(1);
    for (int col = 0; col < cols_; ++col) {
        int p = -1;
        for (int r = col; r < rows_; ++r)
            if (!m.at(r, col).is_zero()) { p = r; break; }
        if (p < 0) return Rational(0);
        if (p != col) {
            for (int j = 0; j < cols_; ++j) std::swap(m.at(p, j), m.at(col, j));
            d = -d;
        }
        d *= m.at(col, col);
        Rational inv = m.at(col, col).inverse();
        for (int r = col + 1; r < rows_; ++r) {
            if (m.at(r, col).is_zero()) continue;
            Rational f = m.at(r, col) * inv;
            for (int j = col; j < cols_; ++j) m.at(r, j) -= f * m.at(col, j);
        }
    }
    return d;
}

RatMatrix RatMatrix::kernel() const {
    RatMatrix m = *this;
    std::vector<int> pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Rational>> cols;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols_, Rational(0));
        v[free] = Rational(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(static_cast<int>(r), free);
        cols.push_back(std::move(v));
    }
    return from_columns(cols, cols_);
}

bool RatMatrix::solve(const std::vector<Rational>& b, std::vector<Rational>& x) const {
    RatMatrix aug = augmented(from_columns({b}, rows_));
    std::vector<int> pivots = aug.rref();
    for (int p : pivots)
        if (p == cols_) return false;  // pivot in the b column: inconsistent
    x.assign(cols_, Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(static_cast<int>(r), cols_);
    return true;
}

RatMatrix RatMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("RatMatrix: inverse of non-square matrix");
    RatMatrix aug = augmented(identity(rows_));
    std::vector<int> pivots = aug.rref();
    if (static_cast<int>(pivots.size()) != rows_) throw std::domain_error("RatMatrix: singular matrix");
    RatMatrix inv(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
    return inv;
}

}  // namespace fusion

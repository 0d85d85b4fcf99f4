#pragma once

#include <vector>

#include "fusion/rational.hpp"

namespace fusion {

/// Dense matrix over Q with exact arithmetic.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, Rational(0)) {}

    static RatMatrix identity(int n);
    static RatMatrix from_columns(const std::vector<std::vector<Rational>>& cols, int rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

    std::vector<Rational> column(int c) const;

    friend RatMatrix operator*(const RatMatrix& x, const RatMatrix& y);
    friend bool operator==(const RatMatrix& x, const RatMatrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    std::vector<Rational> apply(const std::vector<Rational>& v) const;
    RatMatrix pow(long k) const;
    RatMatrix transpose() const;
    RatMatrix augmented(const RatMatrix& right) const;

    /// In-place reduced row echelon form; returns pivot column indices.
    std::vector<int> rref();
    int rank() const;
    Rational det() const;

    /// Columns spanning the null space.
    RatMatrix kernel() const;

    /// Solve A x = b; returns false when inconsistent.
    bool solve(const std::vector<Rational>& b, std::vector<Rational>& x) const;
    /// Inverse; throws DomainError for singular input.
    RatMatrix inverse() const;

private:
    int rows_, cols_;
    std::vector<Rational> a_;
};

}  // namespace fusion

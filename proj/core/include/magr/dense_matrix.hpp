#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace magr {

/// Row-major dense matrix of 64-bit reals. The single carrier for feature
/// matrices X, weight matrices W, and Hessians H = X^T X.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols);
    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> data);

    // Convenience for literals in tests: {{1, 2}, {3, 4}}.
    static DenseMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    std::vector<double>& values() { return data_; }
    const std::vector<double>& values() const { return data_; }

    bool all_finite() const;
    double max_abs() const;
    double frobenius_norm() const;
    // Max |entry| of one column, or of rows [row_begin, row_end) of it.
    double col_max_abs(std::size_t c) const;
    double col_max_abs(std::size_t c, std::size_t row_begin, std::size_t row_end) const;

    DenseMatrix transposed() const;

    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

// C = A * B. Parallel over rows of A; each output row is computed by one
// thread, so the result does not depend on the thread count.
DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);

// Entry-wise difference a - b.
DenseMatrix subtract(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace magr

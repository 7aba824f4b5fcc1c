#ifndef SOLVCO_MATRIX_HPP
#define SOLVCO_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "solvco/scalar.hpp"

namespace solvco {

using Vec = std::vector<ScalarValue>;

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const ScalarValue& c, const Vec& v);
bool vec_is_zero(const Vec& v);

// Dense row-major matrix over the exact scalar field.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static Matrix identity(size_t n);
    static Matrix from_columns(const std::vector<Vec>& cols, size_t rows);
    static Matrix from_rows(const std::vector<Vec>& rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    ScalarValue& at(size_t i, size_t j) { return entries_[i * cols_ + j]; }
    const ScalarValue& at(size_t i, size_t j) const { return entries_[i * cols_ + j]; }

    Vec row(size_t i) const;
    Vec column(size_t j) const;
    std::vector<Vec> columns() const;

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }
    ScalarValue trace() const;
    Matrix transpose() const;

    Matrix operator-() const;
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const ScalarValue& c, const Matrix& a);
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Vec apply(const Vec& v) const;
    Matrix power(size_t e) const;

private:
    size_t rows_, cols_;
    std::vector<ScalarValue> entries_;
};

} // namespace solvco

#endif

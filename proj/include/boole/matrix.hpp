#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "boole/rational.hpp"

namespace boole {

/// Dense row-major matrix.
template <typename T>
class Matrix {
public:
    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    /// Throws std::invalid_argument on ragged input.
    Matrix(std::initializer_list<std::initializer_list<T>> init) : rows_(init.size()) {
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw std::invalid_argument("matrix: ragged rows");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n, T(0));
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<T>& data() const noexcept { return data_; }

    std::vector<T> column(std::size_t j) const {
        std::vector<T> out;
        out.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
        return out;
    }

    /// Copy with column `j` overwritten by `values`.
    Matrix with_column(std::size_t j, const std::vector<T>& values) const {
        if (j >= cols_) throw std::out_of_range("matrix: column index");
        if (values.size() != rows_) throw std::invalid_argument("matrix: column length mismatch");
        Matrix out = *this;
        for (std::size_t i = 0; i < rows_; ++i) out(i, j) = values[i];
        return out;
    }

    void swap_rows(std::size_t r1, std::size_t r2) {
        if (r1 == r2) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(r1, j), (*this)(r2, j));
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using ExactMatrix = Matrix<Rational>;

/// Square system `matrix * x = rhs`.
struct LinearSystem {
    ExactMatrix matrix;
    std::vector<Rational> rhs;

    LinearSystem(ExactMatrix m, std::vector<Rational> b) : matrix(std::move(m)), rhs(std::move(b)) {
        if (!matrix.is_square()) throw std::invalid_argument("linear system: matrix is not square");
        if (matrix.rows() != rhs.size()) throw std::invalid_argument("linear system: rhs length mismatch");
    }

    std::size_t size() const noexcept { return rhs.size(); }
};

/// Row `i` of `m` dotted with `x`.
inline Rational row_dot(const ExactMatrix& m, std::size_t i, const std::vector<Rational>& x) {
    Rational acc;
    for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * x[j];
    return acc;
}

/// Rows of space-separated "p/q" tokens, one line per row.
inline std::string format_matrix(const ExactMatrix& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ' ';
            out += to_string(m(i, j));
        }
        out += '\n';
    }
    return out;
}

}  // namespace boole

#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "lef/rational.hpp"

namespace lef {

// Dense matrix over an exact ring (Int, Rational) or std::complex<double>.
// Sizes here never exceed a few dozen rows, so no attempt is made to be
// clever about storage or blocking.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, T{}) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static Matrix from_rows(std::initializer_list<std::initializer_list<T>> rows) {
        Matrix m(rows.size(), rows.begin()->size());
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != m.cols_) throw std::invalid_argument("ragged row list");
            std::size_t j = 0;
            for (const auto& v : row) m(i, j++) = v;
            ++i;
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const Matrix&) const = default;

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
        Matrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == T{}) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }

    Matrix operator+(const Matrix& o) const {
        check_same_shape(o);
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        check_same_shape(o);
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
        return r;
    }

    Matrix scaled(const T& s) const {
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * s;
        return r;
    }

    T trace() const {
        if (!square()) throw std::invalid_argument("trace of non-square matrix");
        T t{};
        for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }

    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rational>;

// Characteristic polynomial by the Samuelson-Berkowitz iteration: division
// free, so it works verbatim over Int.  Returns coefficients indexed by
// degree; the result is monic of degree n.
template <class T>
std::vector<T> charpoly(const Matrix<T>& a) {
    if (!a.square()) throw std::invalid_argument("charpoly of non-square matrix");
    const std::size_t n = a.rows();
    std::vector<T> c{T(1)};  // highest-degree coefficient first while iterating
    for (std::size_t i = 0; i < n; ++i) {
        // Principal (i+1)x(i+1) block: leading i x i block M, row strip
        // R = a(i, 0..i-1), column strip S = a(0..i-1, i), corner a(i,i).
        std::vector<T> col(i + 2);
        col[0] = T(1);
        col[1] = -a(i, i);
        std::vector<T> w(i);
        for (std::size_t r = 0; r < i; ++r) w[r] = a(r, i);
        for (std::size_t k = 2; k <= i + 1; ++k) {
            T s{};
            for (std::size_t r = 0; r < i; ++r) s += a(i, r) * w[r];
            col[k] = -s;
            if (k <= i) {
                std::vector<T> w2(i);
                for (std::size_t r = 0; r < i; ++r) {
                    T acc{};
                    for (std::size_t m = 0; m < i; ++m) acc += a(r, m) * w[m];
                    w2[r] = acc;
                }
                w.swap(w2);
            }
        }
        // Multiply by the Toeplitz matrix built from col.
        std::vector<T> nc(i + 2);
        for (std::size_t j = 0; j < i + 2; ++j) {
            T acc{};
            const std::size_t kmax = std::min(j, i);
            for (std::size_t k = 0; k <= kmax; ++k) acc += col[j - k] * c[k];
            nc[j] = acc;
        }
        c.swap(nc);
    }
    std::reverse(c.begin(), c.end());
    return c;
}

// determinant via the constant coefficient of the characteristic polynomial
template <class T>
T determinant(const Matrix<T>& a) {
    auto c = charpoly(a);
    T d = c[0];
    return (a.rows() % 2 == 0) ? d : -d;
}

RatMatrix to_rational(const IntMatrix& m);

// Least common denominator scaling: returns an integer matrix M with
// M = den * a.
IntMatrix clear_denominators(const RatMatrix& a, Int& den);

// Exact Gauss-Jordan inverse; throws std::domain_error on singular input.
RatMatrix inverse(const RatMatrix& a);

}  // namespace lef

#pragma once

// Dense matrix template shared by the whole library.  Integer
// instantiations carry counts and adjacency structure; the rational
// instantiation is the substrate of the exact linear algebra kernel.

#include <cstddef>
#include <initializer_list>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cwbd/errors.hpp"

namespace cwbd {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

template <typename T>
class basic_matrix {
public:
    basic_matrix() : rows_(0), cols_(0) {}

    basic_matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    // Row-major nested initializer, e.g. {{0,1},{1,0}}.
    basic_matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw internal_error("ragged matrix initializer");
            for (const auto& v : r) data_.push_back(v);
        }
    }

    static basic_matrix identity(std::size_t n) {
        basic_matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static basic_matrix constant(std::size_t rows, std::size_t cols, const T& v) {
        return basic_matrix(rows, cols, v);
    }

    // J: the all-ones matrix.
    static basic_matrix ones(std::size_t rows, std::size_t cols) {
        return basic_matrix(rows, cols, T(1));
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const basic_matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const basic_matrix& o) const { return !(*this == o); }

    basic_matrix transpose() const {
        basic_matrix m(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    T trace() const {
        if (rows_ != cols_) throw internal_error("trace of non-square matrix");
        T s(0);
        for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, i);
        return s;
    }

    basic_matrix operator+(const basic_matrix& o) const {
        require_same_shape(o);
        basic_matrix m(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] + o.data_[i];
        return m;
    }

    basic_matrix operator-(const basic_matrix& o) const {
        require_same_shape(o);
        basic_matrix m(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] - o.data_[i];
        return m;
    }

    basic_matrix operator*(const basic_matrix& o) const {
        if (cols_ != o.rows_) throw internal_error("matrix product shape mismatch");
        basic_matrix m(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == T(0)) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    m(i, j) += a * o(k, j);
            }
        return m;
    }

    basic_matrix operator*(const T& s) const {
        basic_matrix m(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] * s;
        return m;
    }

    basic_matrix operator-() const { return *this * T(-1); }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    bool is_zero() const {
        for (const auto& v : data_)
            if (v != T(0)) return false;
        return true;
    }

    template <typename U>
    basic_matrix<U> cast() const {
        basic_matrix<U> m(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(i, j) = U((*this)(i, j));
        return m;
    }

private:
    void require_same_shape(const basic_matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw internal_error("matrix shape mismatch");
    }

    std::size_t rows_, cols_;
    std::vector<T> data_;
};

using IntMatrix = basic_matrix<long long>;
using BigIntMatrix = basic_matrix<BigInt>;
using RationalMatrix = basic_matrix<Rational>;

// Horizontal concatenation (A : B).
template <typename T>
basic_matrix<T> hcat(const basic_matrix<T>& a, const basic_matrix<T>& b) {
    if (a.rows() != b.rows()) throw internal_error("hcat row mismatch");
    basic_matrix<T> m(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
    }
    return m;
}

template <typename T>
basic_matrix<T> kronecker(const basic_matrix<T>& a, const basic_matrix<T>& b) {
    basic_matrix<T> m(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j) == T(0)) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return m;
}

template <typename T>
struct SymmetryReport {
    bool is_completely_symmetric = false;
    T diagonal_value{0};    // meaningful only when the flag is set
    T offdiagonal_value{0}; // meaningful only when the flag is set
};

// A square matrix is completely symmetric iff it equals d*I + o*(J - I).
template <typename T>
SymmetryReport<T> complete_symmetry(const basic_matrix<T>& m) {
    SymmetryReport<T> rep;
    if (m.rows() != m.cols()) return rep;
    const std::size_t n = m.rows();
    if (n == 0) { rep.is_completely_symmetric = true; return rep; }
    rep.diagonal_value = m(0, 0);
    rep.offdiagonal_value = n > 1 ? m(0, 1) : T(0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const T& want = i == j ? rep.diagonal_value : rep.offdiagonal_value;
            if (m(i, j) != want) return rep;
        }
    rep.is_completely_symmetric = true;
    return rep;
}

} // namespace cwbd

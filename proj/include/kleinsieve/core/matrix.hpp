#pragma once

#include <cassert>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace kleinsieve {

/// Dense row-major matrix over an exact ring.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init) : rows_(init.size()) {
        cols_ = rows_ == 0 ? 0 : init.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            assert(row.size() == cols_);
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::vector<T> column(std::size_t c) const {
        std::vector<T> out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
        return out;
    }
    const std::vector<T>& data() const noexcept { return data_; }

    std::vector<T> apply(std::span<const T> v) const {
        assert(v.size() == cols_);
        std::vector<T> out(rows_, T{});
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
        return out;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    Matrix submatrix(std::span<const int> idx) const {
        Matrix s(idx.size(), idx.size());
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < idx.size(); ++j) s(i, j) = (*this)(idx[i], idx[j]);
        return s;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        assert(a.cols_ == b.rows_);
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T{}) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
            }
        return out;
    }

    friend Matrix operator-(const Matrix& a) {
        Matrix out = a;
        for (auto& x : out.data_) x = -x;
        return out;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;
    friend auto operator<=>(const Matrix& a, const Matrix& b) {
        if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
        if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
        return a.data_ <=> b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<int>;

} // namespace kleinsieve

#pragma once

#include <cassert>
#include <vector>

#include "tnp/scalar.hpp"

namespace tnp {

using Vec = std::vector<Scalar>;

inline Vec zero_vec(int n, const FieldDescriptor& fd) { return Vec(n, Scalar::zero(fd)); }

inline bool vec_is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

inline Vec vec_add(const Vec& a, const Vec& b) {
    Vec out(a);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
    return out;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
    Vec out(a);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
    return out;
}

inline Vec vec_scale(const Scalar& c, const Vec& a) {
    Vec out(a);
    for (auto& x : out) x *= c;
    return out;
}

/// Dense exact matrix; rows of equal length over one field.
class Matrix {
public:
    Matrix(int rows, int cols, const FieldDescriptor& fd)
        : rows_(rows), cols_(cols), fd_(fd), data_(static_cast<std::size_t>(rows) * cols, Scalar::zero(fd)) {}

    static Matrix identity(int n, const FieldDescriptor& fd) {
        Matrix m(n, n, fd);
        for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(fd);
        return m;
    }

    static Matrix from_rows(const std::vector<Vec>& rows, int cols, const FieldDescriptor& fd) {
        Matrix m(static_cast<int>(rows.size()), cols, fd);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            assert(static_cast<int>(rows[r].size()) == cols);
            for (int c = 0; c < cols; ++c) m.at(static_cast<int>(r), c) = rows[r][c];
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldDescriptor& field() const { return fd_; }

    Scalar& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Scalar& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    Vec row(int r) const {
        Vec out;
        out.reserve(cols_);
        for (int c = 0; c < cols_; ++c) out.push_back(at(r, c));
        return out;
    }

    Vec apply(const Vec& v) const {
        assert(static_cast<int>(v.size()) == cols_);
        Vec out = zero_vec(rows_, fd_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c)
                if (!at(r, c).is_zero() && !v[c].is_zero()) out[r] += at(r, c) * v[c];
        return out;
    }

    Matrix multiply(const Matrix& o) const {
        assert(cols_ == o.rows_);
        Matrix out(rows_, o.cols_, fd_);
        for (int r = 0; r < rows_; ++r)
            for (int k = 0; k < cols_; ++k) {
                if (at(r, k).is_zero()) continue;
                for (int c = 0; c < o.cols_; ++c)
                    if (!o.at(k, c).is_zero()) out.at(r, c) += at(r, k) * o.at(k, c);
            }
        return out;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    /// In-place reduced row echelon form. Returns pivot column list.
    std::vector<int> rref() {
        std::vector<int> pivots;
        int r = 0;
        for (int c = 0; c < cols_ && r < rows_; ++c) {
            int sel = -1;
            for (int rr = r; rr < rows_; ++rr)
                if (!at(rr, c).is_zero()) {
                    sel = rr;
                    break;
                }
            if (sel < 0) continue;
            swap_rows(r, sel);
            const Scalar inv = at(r, c).inv();
            for (int cc = c; cc < cols_; ++cc) at(r, cc) *= inv;
            for (int rr = 0; rr < rows_; ++rr) {
                if (rr == r || at(rr, c).is_zero()) continue;
                const Scalar f = at(rr, c);
                for (int cc = c; cc < cols_; ++cc) at(rr, cc) -= f * at(r, cc);
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

private:
    void swap_rows(int a, int b) {
        if (a == b) return;
        for (int c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
    }

    int rows_, cols_;
    FieldDescriptor fd_;
    std::vector<Scalar> data_;
};

}  // namespace tnp

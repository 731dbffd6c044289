#pragma once

#include <algorithm>
#include <vector>

#include "tnp/matrix.hpp"

namespace tnp {

/// A linear subspace given by its canonical RREF basis matrix.
/// Two subspaces are equal iff their RREF rows are identical.
class Subspace {
public:
    Subspace(int ambient, const FieldDescriptor& fd) : ambient_(ambient), fd_(fd) {}

    static Subspace zero(int ambient, const FieldDescriptor& fd) { return Subspace(ambient, fd); }

    static Subspace full(int ambient, const FieldDescriptor& fd) {
        Subspace s(ambient, fd);
        for (int i = 0; i < ambient; ++i) {
            Vec v = zero_vec(ambient, fd);
            v[i] = Scalar::one(fd);
            s.rows_.push_back(std::move(v));
            s.pivots_.push_back(i);
        }
        return s;
    }

    static Subspace span(const std::vector<Vec>& vectors, int ambient, const FieldDescriptor& fd) {
        if (vectors.empty()) return zero(ambient, fd);
        Matrix m = Matrix::from_rows(vectors, ambient, fd);
        auto piv = m.rref();
        Subspace s(ambient, fd);
        for (std::size_t r = 0; r < piv.size(); ++r) s.rows_.push_back(m.row(static_cast<int>(r)));
        s.pivots_ = piv;
        return s;
    }

    int ambient() const { return ambient_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    const FieldDescriptor& field() const { return fd_; }
    const std::vector<Vec>& basis() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    bool is_zero() const { return rows_.empty(); }
    bool is_full() const { return dim() == ambient_; }

    bool contains(const Vec& v) const {
        // reduce v against the RREF rows
        Vec w = v;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Scalar& c = w[pivots_[r]];
            if (!c.is_zero()) w = vec_sub(w, vec_scale(c, rows_[r]));
        }
        return vec_is_zero(w);
    }

    bool contains(const Subspace& o) const {
        for (const auto& v : o.rows_)
            if (!contains(v)) return false;
        return true;
    }

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && rows_ == o.rows_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    Subspace sum(const Subspace& o) const {
        std::vector<Vec> all = rows_;
        all.insert(all.end(), o.rows_.begin(), o.rows_.end());
        return span(all, ambient_, fd_);
    }

    Subspace intersect(const Subspace& o) const {
        // w in both spans  <=>  w = a.A = b.B; solve [A^T | -B^T] kernel
        const int da = dim(), db = o.dim();
        if (da == 0 || db == 0) return zero(ambient_, fd_);
        Matrix m(ambient_, da + db, fd_);
        for (int c = 0; c < da; ++c)
            for (int r = 0; r < ambient_; ++r) m.at(r, c) = rows_[c][r];
        for (int c = 0; c < db; ++c)
            for (int r = 0; r < ambient_; ++r) m.at(r, da + c) = -o.rows_[c][r];
        std::vector<Vec> gens;
        for (const auto& k : nullspace_vectors(m)) {
            Vec w = zero_vec(ambient_, fd_);
            for (int c = 0; c < da; ++c)
                if (!k[c].is_zero()) w = vec_add(w, vec_scale(k[c], rows_[c]));
            if (!vec_is_zero(w)) gens.push_back(std::move(w));
        }
        return span(gens, ambient_, fd_);
    }

    /// Standard basis vectors indexed outside the pivot set; spans a complement.
    std::vector<Vec> complement_basis() const {
        std::vector<Vec> out;
        for (int i = 0; i < ambient_; ++i) {
            if (std::find(pivots_.begin(), pivots_.end(), i) != pivots_.end()) continue;
            Vec v = zero_vec(ambient_, fd_);
            v[i] = Scalar::one(fd_);
            out.push_back(std::move(v));
        }
        return out;
    }

    /// Raw kernel basis of M (Mv = 0), one vector per free column, before canonicalization.
    static std::vector<Vec> nullspace_vectors(Matrix m) {
        const int cols = m.cols();
        const FieldDescriptor fd = m.field();
        auto piv = m.rref();
        std::vector<bool> is_pivot(cols, false);
        for (int c : piv) is_pivot[c] = true;
        std::vector<Vec> out;
        for (int fc = 0; fc < cols; ++fc) {
            if (is_pivot[fc]) continue;
            Vec v = zero_vec(cols, fd);
            v[fc] = Scalar::one(fd);
            for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m.at(static_cast<int>(r), fc);
            out.push_back(std::move(v));
        }
        return out;
    }

private:
    int ambient_;
    FieldDescriptor fd_;
    std::vector<Vec> rows_;
    std::vector<int> pivots_;
};

/// Exact kernel {v : Mv = 0} as a canonical subspace.
inline Subspace nullspace(const Matrix& m) {
    auto vecs = Subspace::nullspace_vectors(m);
    return Subspace::span(vecs, m.cols(), m.field());
}

/// Space of n x n matrices, flattened row-major (index r*n + c), kept in RREF.
/// Entry (r, c) of a member is the coefficient of e_r in phi(e_c).
class LinearMapSpace {
public:
    LinearMapSpace(int n, Subspace s) : n_(n), space_(std::move(s)) {}

    int map_dim() const { return n_; }
    int dim() const { return space_.dim(); }
    const Subspace& space() const { return space_; }

    Matrix basis_matrix(int k) const {
        Matrix m(n_, n_, space_.field());
        const Vec& v = space_.basis()[k];
        for (int r = 0; r < n_; ++r)
            for (int c = 0; c < n_; ++c) m.at(r, c) = v[static_cast<std::size_t>(r) * n_ + c];
        return m;
    }

    bool contains(const Matrix& m) const {
        Vec v = zero_vec(n_ * n_, space_.field());
        for (int r = 0; r < n_; ++r)
            for (int c = 0; c < n_; ++c) v[static_cast<std::size_t>(r) * n_ + c] = m.at(r, c);
        return space_.contains(v);
    }

private:
    int n_;
    Subspace space_;
};

}  // namespace tnp

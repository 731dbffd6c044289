#pragma once

#include <map>
#include <optional>
#include <set>
#include <tuple>

#include "tnp/matrix.hpp"

namespace tnp {

struct masked_product_error : std::runtime_error {
    explicit masked_product_error(const std::string& what) : std::runtime_error(what) {}
};

struct dimension_error : std::runtime_error {
    explicit dimension_error(const std::string& what) : std::runtime_error(what) {}
};

/// A bilinear operation on k^n given by sparse structure constants
///   e_i * e_j = sum_k c[i][j][k] e_k.
/// Zero coefficients are never stored. A pair (i, j) may be masked, meaning the
/// product e_i * e_j is undefined (windowed models only); evaluating through a
/// masked pair raises masked_product_error.
class BilinearOp {
public:
    BilinearOp(int dim, const FieldDescriptor& fd) : dim_(dim), fd_(fd) {}

    int dim() const { return dim_; }
    const FieldDescriptor& field() const { return fd_; }

    void set(int i, int j, int k, const Scalar& c) {
        check_index(i);
        check_index(j);
        check_index(k);
        const auto key = std::make_tuple(i, j, k);
        if (c.is_zero())
            coeffs_.erase(key);
        else
            coeffs_[key] = c;
    }

    Scalar coeff(int i, int j, int k) const {
        const auto it = coeffs_.find(std::make_tuple(i, j, k));
        return it == coeffs_.end() ? Scalar::zero(fd_) : it->second;
    }

    const std::map<std::tuple<int, int, int>, Scalar>& entries() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }

    void add_mask(int i, int j) {
        check_index(i);
        check_index(j);
        mask_.insert({i, j});
    }

    bool is_masked(int i, int j) const { return mask_.count({i, j}) != 0; }
    const std::set<std::pair<int, int>>& mask() const { return mask_; }
    bool has_mask() const { return !mask_.empty(); }

    /// e_i * e_j as a coordinate vector; nullopt when the pair is masked.
    std::optional<Vec> basis_product(int i, int j) const {
        if (is_masked(i, j)) return std::nullopt;
        Vec out = zero_vec(dim_, fd_);
        const auto lo = coeffs_.lower_bound(std::make_tuple(i, j, 0));
        const auto hi = coeffs_.upper_bound(std::make_tuple(i, j, dim_));
        for (auto it = lo; it != hi; ++it) out[std::get<2>(it->first)] = it->second;
        return out;
    }

    /// Bilinear evaluation; nullopt when a contributing pair is masked.
    std::optional<Vec> eval_opt(const Vec& x, const Vec& y) const {
        if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
            throw dimension_error("vector length does not match operation dimension");
        Vec out = zero_vec(dim_, fd_);
        for (int i = 0; i < dim_; ++i) {
            if (x[i].is_zero()) continue;
            for (int j = 0; j < dim_; ++j) {
                if (y[j].is_zero()) continue;
                if (is_masked(i, j)) return std::nullopt;
                const Scalar s = x[i] * y[j];
                const auto lo = coeffs_.lower_bound(std::make_tuple(i, j, 0));
                const auto hi = coeffs_.upper_bound(std::make_tuple(i, j, dim_));
                for (auto it = lo; it != hi; ++it) out[std::get<2>(it->first)] += s * it->second;
            }
        }
        return out;
    }

    Vec eval(const Vec& x, const Vec& y) const {
        auto r = eval_opt(x, y);
        if (!r) throw masked_product_error("product is undefined on a masked index pair");
        return *r;
    }

    /// Transpose in the two arguments: (i, j) entries become (j, i).
    BilinearOp flipped() const {
        BilinearOp out(dim_, fd_);
        for (const auto& [key, c] : coeffs_)
            out.set(std::get<1>(key), std::get<0>(key), std::get<2>(key), c);
        for (const auto& [i, j] : mask_) out.add_mask(j, i);
        return out;
    }

    bool operator==(const BilinearOp& o) const {
        return dim_ == o.dim_ && fd_ == o.fd_ && coeffs_ == o.coeffs_ && mask_ == o.mask_;
    }

private:
    void check_index(int i) const {
        if (i < 0 || i >= dim_) throw dimension_error("structure-constant index out of range");
    }

    int dim_;
    FieldDescriptor fd_;
    std::map<std::tuple<int, int, int>, Scalar> coeffs_;
    std::set<std::pair<int, int>> mask_;
};

}  // namespace tnp

#pragma once

#include <future>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "tnp/checks.hpp"
#include "tnp/rng.hpp"
#include "tnp/subspace.hpp"

namespace tnp {

// ---------------------------------------------------------------------------
// Linear-map solution spaces. Unknowns are the n x n entries of phi, flattened
// row-major: column r*n + c holds the coefficient of e_r in phi(e_c).
// ---------------------------------------------------------------------------

namespace detail {

/// Appends the n rows (one per output coordinate k) of the equation
///   phi(e_i * e_j) = delta * (phi(e_i) * e_j + e_i * phi(e_j))
/// for one (i, j) pair over the given operation.
inline void delta_rows(const Algebra& a, const BilinearOp& op, const Scalar& delta, int i, int j,
                       std::vector<Vec>& rows) {
    const int n = a.dim;
    const auto prod = op.basis_product(i, j);
    if (!prod) return;  // masked pair contributes no equation
    for (int k = 0; k < n; ++k) {
        Vec row = zero_vec(n * n, a.field);
        for (int c = 0; c < n; ++c)
            if (!(*prod)[c].is_zero()) row[static_cast<std::size_t>(k) * n + c] += (*prod)[c];
        for (int c = 0; c < n; ++c) {
            // (phi(e_i) * e_j)_k picks phi-entry (c, i) with weight (e_c * e_j)_k
            const Scalar w1 = op.coeff(c, j, k);
            if (!w1.is_zero()) row[static_cast<std::size_t>(c) * n + i] -= delta * w1;
            const Scalar w2 = op.coeff(i, c, k);
            if (!w2.is_zero()) row[static_cast<std::size_t>(c) * n + j] -= delta * w2;
        }
        if (!vec_is_zero(row)) rows.push_back(std::move(row));
    }
}

}  // namespace detail

/// All phi with phi(x*y) = delta (phi(x)*y + x*phi(y)), as a subspace of End(A).
inline LinearMapSpace delta_derivation_space(const Algebra& a, const std::string& opname,
                                             const Scalar& delta) {
    const BilinearOp& op = a.op(opname);
    std::vector<Vec> rows;
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) detail::delta_rows(a, op, delta, i, j, rows);
    const int cols = a.dim * a.dim;
    Matrix m = rows.empty() ? Matrix(0, cols, a.field) : Matrix::from_rows(rows, cols, a.field);
    return LinearMapSpace(a.dim, nullspace(m));
}

/// Simultaneous ordinary derivations (delta = 1) of every listed operation.
inline LinearMapSpace derivation_space(const Algebra& a, const std::vector<std::string>& opnames) {
    const Scalar one = Scalar::one(a.field);
    std::vector<Vec> rows;
    for (const auto& opname : opnames) {
        const BilinearOp& op = a.op(opname);
        for (int i = 0; i < a.dim; ++i)
            for (int j = 0; j < a.dim; ++j) detail::delta_rows(a, op, one, i, j, rows);
    }
    const int cols = a.dim * a.dim;
    Matrix m = rows.empty() ? Matrix(0, cols, a.field) : Matrix::from_rows(rows, cols, a.field);
    return LinearMapSpace(a.dim, nullspace(m));
}

/// Gamma((A, *)): all phi with phi(x*y) = x*phi(y) = phi(x)*y.
inline LinearMapSpace centroid_space(const Algebra& a, const std::string& opname) {
    const BilinearOp& op = a.op(opname);
    const int n = a.dim;
    std::vector<Vec> rows;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const auto prod = op.basis_product(i, j);
            if (!prod) continue;
            for (int k = 0; k < n; ++k) {
                // phi(e_i e_j)_k - (e_i phi(e_j))_k
                Vec row = zero_vec(n * n, a.field);
                for (int c = 0; c < n; ++c)
                    if (!(*prod)[c].is_zero()) row[static_cast<std::size_t>(k) * n + c] += (*prod)[c];
                for (int c = 0; c < n; ++c) {
                    const Scalar w = op.coeff(i, c, k);
                    if (!w.is_zero()) row[static_cast<std::size_t>(c) * n + j] -= w;
                }
                if (!vec_is_zero(row)) rows.push_back(row);
                // phi(e_i e_j)_k - (phi(e_i) e_j)_k
                Vec row2 = zero_vec(n * n, a.field);
                for (int c = 0; c < n; ++c)
                    if (!(*prod)[c].is_zero()) row2[static_cast<std::size_t>(k) * n + c] += (*prod)[c];
                for (int c = 0; c < n; ++c) {
                    const Scalar w = op.coeff(c, j, k);
                    if (!w.is_zero()) row2[static_cast<std::size_t>(c) * n + i] -= w;
                }
                if (!vec_is_zero(row2)) rows.push_back(row2);
            }
        }
    Matrix m = rows.empty() ? Matrix(0, n * n, a.field) : Matrix::from_rows(rows, n * n, a.field);
    return LinearMapSpace(n, nullspace(m));
}

// ---------------------------------------------------------------------------
// Subspace arithmetic driven by an operation.
// ---------------------------------------------------------------------------

/// span{ u * v : u in U, v in V } for the chosen operation.
inline Subspace subspace_product(const Algebra& a, const std::string& opname, const Subspace& u,
                                 const Subspace& v) {
    const BilinearOp& op = a.op(opname);
    std::vector<Vec> gens;
    for (const auto& x : u.basis())
        for (const auto& y : v.basis()) {
            Vec w = op.eval(x, y);
            if (!vec_is_zero(w)) gens.push_back(std::move(w));
        }
    return Subspace::span(gens, a.dim, a.field);
}

enum class AnnKind { left, right, two_sided };

/// Left/right/two-sided annihilator of a subspace I, as a kernel computation.
inline Subspace annihilator(const Algebra& a, const std::string& opname, AnnKind kind,
                            const Subspace& of) {
    const BilinearOp& op = a.op(opname);
    const int n = a.dim;
    std::vector<Vec> rows;
    for (const auto& b : of.basis()) {
        for (int k = 0; k < n; ++k) {
            if (kind == AnnKind::left || kind == AnnKind::two_sided) {
                // (v o b)_k = sum_i v_i (e_i o b)_k
                Vec row = zero_vec(n, a.field);
                for (int i = 0; i < n; ++i) row[i] = op.eval(a.basis_vector(i), b)[k];
                if (!vec_is_zero(row)) rows.push_back(std::move(row));
            }
            if (kind == AnnKind::right || kind == AnnKind::two_sided) {
                Vec row = zero_vec(n, a.field);
                for (int i = 0; i < n; ++i) row[i] = op.eval(b, a.basis_vector(i))[k];
                if (!vec_is_zero(row)) rows.push_back(std::move(row));
            }
        }
    }
    Matrix m = rows.empty() ? Matrix(0, n, a.field) : Matrix::from_rows(rows, n, a.field);
    return nullspace(m);
}

/// Smallest subspace containing seed and closed under left/right multiplication
/// by A for every listed operation. Dimension grows strictly or the loop stops,
/// so at most dim(A) rounds run.
inline Subspace ideal_closure(const Algebra& a, const std::vector<std::string>& opnames,
                              const Subspace& seed) {
    Subspace cur = seed;
    const Subspace full = Subspace::full(a.dim, a.field);
    while (true) {
        Subspace next = cur;
        for (const auto& opname : opnames) {
            next = next.sum(subspace_product(a, opname, full, cur));
            next = next.sum(subspace_product(a, opname, cur, full));
        }
        if (next == cur) return cur;
        cur = next;
    }
}

inline bool is_ideal(const Algebra& a, const std::vector<std::string>& opnames, const Subspace& s) {
    return ideal_closure(a, opnames, s) == s;
}

/// Non-trivial circ-ideal I with (A . I) o A <= I and A o (A . I) <= I.
inline bool is_transposed_quasi_ideal(const Algebra& a, const Subspace& s) {
    if (s.is_zero() || s.is_full()) return false;
    if (!is_ideal(a, {"circ"}, s)) return false;
    const Subspace full = Subspace::full(a.dim, a.field);
    const Subspace adots = subspace_product(a, "dot", full, s);
    if (!s.contains(subspace_product(a, "circ", adots, full))) return false;
    if (!s.contains(subspace_product(a, "circ", full, adots))) return false;
    return true;
}

struct SolvabilityReport {
    bool solvable = false;
    bool right_nilpotent = false;
    bool nilpotent = false;
    std::optional<int> derived_length;    // least k with A^(k) = 0
    std::optional<int> right_nil_index;   // least k with A_L^k = 0
    std::optional<int> nil_index;         // least k with A^k = 0
};

/// Derived series A^(n), left-iterated series A_L^n and lower series A^n,
/// each run to vanishing or stabilization.
inline SolvabilityReport solvability_report(const Algebra& a, const std::string& opname) {
    SolvabilityReport rep;
    const Subspace full = Subspace::full(a.dim, a.field);

    // derived series
    Subspace cur = full;
    for (int k = 1; k <= 2 * a.dim + 2; ++k) {
        Subspace next = subspace_product(a, opname, cur, cur);
        if (next.is_zero()) {
            rep.solvable = true;
            rep.derived_length = k;
            break;
        }
        if (next == cur) break;
        cur = next;
    }

    // right series A_L^1 = A, A_L^n = A_L^{n-1} o A
    cur = full;
    for (int k = 2; k <= 2 * a.dim + 2; ++k) {
        Subspace next = subspace_product(a, opname, cur, full);
        if (next.is_zero()) {
            rep.right_nilpotent = true;
            rep.right_nil_index = k;
            break;
        }
        if (next == cur) break;
        cur = next;
    }

    // lower series A^n = sum_{i+j=n} A^i o A^j
    std::vector<Subspace> chain{full};  // chain[i] = A^{i+1}
    const int cap = 4 * a.dim + 4;
    for (int k = 2; k <= cap; ++k) {
        Subspace next = Subspace::zero(a.dim, a.field);
        for (int i = 1; i <= k - 1; ++i)
            next = next.sum(subspace_product(a, opname, chain[i - 1], chain[k - i - 1]));
        if (next.is_zero()) {
            rep.nilpotent = true;
            rep.nil_index = k;
            break;
        }
        if (next == chain.back() && static_cast<int>(chain.size()) > a.dim) break;
        chain.push_back(next);
    }
    return rep;
}

struct SimplicityReport {
    bool simple = false;
    std::string method;  // "exhaustive" or "generator_spin"
    std::optional<Subspace> witness;
    std::uint64_t seed = 0;
};

/// Over GF(p): exhaustive spin of every projective point (a certificate).
/// Over Q: basis vectors plus 64 seeded pseudo-random vectors (a heuristic,
/// flagged via method = "generator_spin").
inline SimplicityReport is_simple(const Algebra& a, const std::vector<std::string>& opnames,
                                  int jobs = 1, std::uint64_t seed = 1) {
    SimplicityReport rep;
    const int n = a.dim;
    const Subspace full = Subspace::full(a.dim, a.field);

    bool any_product = false;
    for (const auto& opname : opnames)
        if (!a.op(opname).is_zero()) any_product = true;
    if (!any_product) {
        rep.simple = false;
        rep.method = a.field.kind == FieldKind::prime ? "exhaustive" : "generator_spin";
        rep.witness = std::nullopt;
        return rep;
    }

    auto spin = [&](const Vec& v) -> std::optional<Subspace> {
        Subspace s = ideal_closure(a, opnames, Subspace::span({v}, n, a.field));
        if (!s.is_full()) return s;
        return std::nullopt;
    };

    if (a.field.kind == FieldKind::prime) {
        const std::uint64_t p = a.field.p;
        // projective points: first nonzero coordinate normalized to 1
        std::uint64_t count = 0, pw = 1;
        for (int i = 0; i < n; ++i) {
            count += pw;
            if (pw > 2000000) break;
            pw *= p;
        }
        if (count > 1000000)
            throw input_error("projective enumeration overflow: dimension too large for exhaustive mode");

        auto point_at = [&](std::uint64_t idx) -> Vec {
            // points grouped by leading index: block `lead` holds p^(n-1-lead) points
            Vec v = zero_vec(n, a.field);
            std::uint64_t off = idx;
            for (int lead = 0; lead < n; ++lead) {
                std::uint64_t size = 1;
                for (int t = lead + 1; t < n; ++t) size *= p;
                if (off < size) {
                    v[lead] = Scalar::one(a.field);
                    std::uint64_t rest = off;
                    for (int t = n - 1; t > lead; --t) {
                        v[t] = Scalar::from_residue(rest % p, a.field);
                        rest /= p;
                    }
                    return v;
                }
                off -= size;
            }
            throw std::logic_error("projective point index out of range");
        };

        rep.method = "exhaustive";
        const int workers = std::max(1, jobs);
        std::vector<std::future<std::pair<std::uint64_t, std::optional<Subspace>>>> futs;
        const std::uint64_t chunk = (count + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const std::uint64_t lo = w * chunk, hi = std::min<std::uint64_t>(count, lo + chunk);
            futs.push_back(std::async(workers == 1 ? std::launch::deferred : std::launch::async,
                                      [&, lo, hi]() -> std::pair<std::uint64_t, std::optional<Subspace>> {
                                          for (std::uint64_t i = lo; i < hi; ++i) {
                                              auto wtn = spin(point_at(i));
                                              if (wtn) return {i, wtn};
                                          }
                                          return {count, std::nullopt};
                                      }));
        }
        std::uint64_t best = count;
        std::optional<Subspace> best_witness;
        for (auto& f : futs) {
            auto [idx, wtn] = f.get();
            if (wtn && idx < best) {
                best = idx;
                best_witness = wtn;
            }
        }
        if (best_witness) {
            rep.simple = false;
            rep.witness = best_witness;
        } else {
            rep.simple = true;
        }
        return rep;
    }

    rep.method = "generator_spin";
    rep.seed = seed;
    for (int i = 0; i < n; ++i) {
        auto wtn = spin(a.basis_vector(i));
        if (wtn) {
            rep.simple = false;
            rep.witness = wtn;
            return rep;
        }
    }
    Rng rng(seed);
    for (int t = 0; t < 64; ++t) {
        Vec v = zero_vec(n, a.field);
        for (int i = 0; i < n; ++i) v[i] = Scalar::from_int(rng.range(-2, 2), a.field);
        if (vec_is_zero(v)) continue;
        auto wtn = spin(v);
        if (wtn) {
            rep.simple = false;
            rep.witness = wtn;
            return rep;
        }
    }
    rep.simple = true;  // heuristic: no proper closure found among sampled generators
    return rep;
}

}  // namespace tnp

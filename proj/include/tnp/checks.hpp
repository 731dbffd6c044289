#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tnp/algebra.hpp"
#include "tnp/subspace.hpp"

namespace tnp {

/// First violating basis tuple of a multilinear identity, with the residual
/// coordinate vector (lhs - rhs) and the sub-identity that failed.
struct Witness {
    std::string component;
    std::vector<int> tuple;
    Vec residual;
};

struct CheckReport {
    std::string id;
    bool pass = false;
    bool applicable = true;
    std::optional<Witness> witness;
    std::string note;
};

enum class AxiomId {
    comm_assoc,
    novikov_left,
    novikov_right,
    tnp,
    np,
    lie,
    transposed_poisson,
    rdnp,
    poisson_leibniz,
};

enum class IdentityId { tid1, tid2, tid3, tid4, difflem, half_id1, half_id2, hom_novikov, prop212_b };

inline std::string to_string(AxiomId a) {
    switch (a) {
        case AxiomId::comm_assoc: return "comm-assoc";
        case AxiomId::novikov_left: return "novikov-left";
        case AxiomId::novikov_right: return "novikov-right";
        case AxiomId::tnp: return "tnp";
        case AxiomId::np: return "np";
        case AxiomId::lie: return "lie";
        case AxiomId::transposed_poisson: return "transposed-poisson";
        case AxiomId::rdnp: return "rdnp";
        case AxiomId::poisson_leibniz: return "poisson-leibniz";
    }
    throw std::logic_error("unreachable");
}

inline std::optional<AxiomId> axiom_from_string(const std::string& s) {
    for (AxiomId a : {AxiomId::comm_assoc, AxiomId::novikov_left, AxiomId::novikov_right,
                      AxiomId::tnp, AxiomId::np, AxiomId::lie, AxiomId::transposed_poisson,
                      AxiomId::rdnp, AxiomId::poisson_leibniz})
        if (to_string(a) == s) return a;
    return std::nullopt;
}

inline std::string to_string(IdentityId i) {
    switch (i) {
        case IdentityId::tid1: return "tid1";
        case IdentityId::tid2: return "tid2";
        case IdentityId::tid3: return "tid3";
        case IdentityId::tid4: return "tid4";
        case IdentityId::difflem: return "difflem";
        case IdentityId::half_id1: return "half1";
        case IdentityId::half_id2: return "half2";
        case IdentityId::hom_novikov: return "hom-novikov";
        case IdentityId::prop212_b: return "prop212b";
    }
    throw std::logic_error("unreachable");
}

inline std::optional<IdentityId> identity_from_string(const std::string& s) {
    for (IdentityId i : {IdentityId::tid1, IdentityId::tid2, IdentityId::tid3, IdentityId::tid4,
                         IdentityId::difflem, IdentityId::half_id1, IdentityId::half_id2,
                         IdentityId::hom_novikov, IdentityId::prop212_b})
        if (to_string(i) == s) return i;
    return std::nullopt;
}

namespace detail {

using OVec = std::optional<Vec>;

/// One multilinear sub-identity; residual() is lhs - rhs on a basis tuple,
/// nullopt meaning a masked product was hit and the tuple is skipped.
struct IdentityComponent {
    std::string name;
    int arity;
    std::function<OVec(const std::vector<int>&)> residual;
};

inline OVec mul(const BilinearOp& op, const OVec& a, const OVec& b) {
    if (!a || !b) return std::nullopt;
    return op.eval_opt(*a, *b);
}

inline OVec lift(Vec v) { return OVec(std::move(v)); }

inline OVec sub(const OVec& a, const OVec& b) {
    if (!a || !b) return std::nullopt;
    return vec_sub(*a, *b);
}

inline OVec add(const OVec& a, const OVec& b) {
    if (!a || !b) return std::nullopt;
    return vec_add(*a, *b);
}

inline OVec scale(const Scalar& c, const OVec& a) {
    if (!a) return std::nullopt;
    return vec_scale(c, *a);
}

/// Runs components in order, each over all basis tuples in lexicographic order.
/// The first nonzero residual becomes the witness.
inline CheckReport run_components(const std::string& id, int dim,
                                  const std::vector<IdentityComponent>& comps) {
    CheckReport rep;
    rep.id = id;
    for (const auto& comp : comps) {
        std::vector<int> tuple(comp.arity, 0);
        while (true) {
            const OVec r = comp.residual(tuple);
            if (r && !vec_is_zero(*r)) {
                rep.pass = false;
                rep.witness = Witness{comp.name, tuple, *r};
                return rep;
            }
            int pos = comp.arity - 1;
            while (pos >= 0 && tuple[pos] == dim - 1) tuple[pos--] = 0;
            if (pos < 0) break;
            ++tuple[pos];
        }
    }
    rep.pass = true;
    return rep;
}

// Component builders. B(i) is the i-th basis product argument.

inline IdentityComponent comm(const Algebra& a, const BilinearOp& op, std::string name = "comm") {
    return {std::move(name), 2, [&a, &op](const std::vector<int>& t) {
                return sub(mul(op, lift(a.basis_vector(t[0])), lift(a.basis_vector(t[1]))),
                           mul(op, lift(a.basis_vector(t[1])), lift(a.basis_vector(t[0]))));
            }};
}

inline IdentityComponent assoc(const Algebra& a, const BilinearOp& op, std::string name = "assoc") {
    return {std::move(name), 3, [&a, &op](const std::vector<int>& t) {
                const OVec x = lift(a.basis_vector(t[0])), y = lift(a.basis_vector(t[1])),
                           z = lift(a.basis_vector(t[2]));
                return sub(mul(op, mul(op, x, y), z), mul(op, x, mul(op, y, z)));
            }};
}

// (x o y) o z = (x o z) o y
inline IdentityComponent right_commutativity(const Algebra& a, const BilinearOp& op) {
    return {"right-commutativity", 3, [&a, &op](const std::vector<int>& t) {
                const OVec x = lift(a.basis_vector(t[0])), y = lift(a.basis_vector(t[1])),
                           z = lift(a.basis_vector(t[2]));
                return sub(mul(op, mul(op, x, y), z), mul(op, mul(op, x, z), y));
            }};
}

// (x o y) o z - x o (y o z) = (y o x) o z - y o (x o z)
inline IdentityComponent left_symmetry(const Algebra& a, const BilinearOp& op) {
    return {"left-symmetry", 3, [&a, &op](const std::vector<int>& t) {
                const OVec x = lift(a.basis_vector(t[0])), y = lift(a.basis_vector(t[1])),
                           z = lift(a.basis_vector(t[2]));
                const OVec l = sub(mul(op, mul(op, x, y), z), mul(op, x, mul(op, y, z)));
                const OVec r = sub(mul(op, mul(op, y, x), z), mul(op, y, mul(op, x, z)));
                return sub(l, r);
            }};
}

// (x . y) o z = (x . z) o y
inline IdentityComponent tnp_compat1(const Algebra& a, const BilinearOp& dot, const BilinearOp& circ) {
    return {"tnp-compat1", 3, [&a, &dot, &circ](const std::vector<int>& t) {
                const OVec x = lift(a.basis_vector(t[0])), y = lift(a.basis_vector(t[1])),
                           z = lift(a.basis_vector(t[2]));
                return sub(mul(circ, mul(dot, x, y), z), mul(circ, mul(dot, x, z), y));
            }};
}

// 2 z . (x o y) = (z . x) o y + x o (z . y)
inline IdentityComponent tnp_compat2(const Algebra& a, const BilinearOp& dot, const BilinearOp& circ) {
    const Scalar two = Scalar::from_int(2, a.field);
    return {"tnp-compat2", 3, [&a, &dot, &circ, two](const std::vector<int>& t) {
                const OVec x = lift(a.basis_vector(t[0])), y = lift(a.basis_vector(t[1])),
                           z = lift(a.basis_vector(t[2]));
                const OVec l = scale(two, mul(dot, z, mul(circ, x, y)));
                const OVec r = add(mul(circ, mul(dot, z, x), y), mul(circ, x, mul(dot, z, y)));
                return sub(l, r);
            }};
}

inline IdentityComponent antisymmetry(const Algebra& a, const BilinearOp& br) {
    return {"antisymmetry", 2, [&a, &br](const std::vector<int>& t) {
                return add(mul(br, lift(a.basis_vector(t[0])), lift(a.basis_vector(t[1]))),
                           mul(br, lift(a.basis_vector(t[1])), lift(a.basis_vector(t[0]))));
            }};
}

inline IdentityComponent jacobi(const Algebra& a, const BilinearOp& br) {
    return {"jacobi", 3, [&a, &br](const std::vector<int>& t) {
                const OVec x = lift(a.basis_vector(t[0])), y = lift(a.basis_vector(t[1])),
                           z = lift(a.basis_vector(t[2]));
                return add(add(mul(br, mul(br, x, y), z), mul(br, mul(br, y, z), x)),
                           mul(br, mul(br, z, x), y));
            }};
}

// 2 z . [x, y] = [z . x, y] + [x, z . y]
inline IdentityComponent tp_compat(const Algebra& a, const BilinearOp& dot, const BilinearOp& br) {
    const Scalar two = Scalar::from_int(2, a.field);
    return {"tp-compat", 3, [&a, &dot, &br, two](const std::vector<int>& t) {
                const OVec x = lift(a.basis_vector(t[0])), y = lift(a.basis_vector(t[1])),
                           z = lift(a.basis_vector(t[2]));
                const OVec l = scale(two, mul(dot, z, mul(br, x, y)));
                const OVec r = add(mul(br, mul(dot, z, x), y), mul(br, x, mul(dot, z, y)));
                return sub(l, r);
            }};
}

// (x . y) o z = x . (y o z)
inline IdentityComponent np_compat1(const Algebra& a, const BilinearOp& dot, const BilinearOp& circ) {
    return {"np-compat1", 3, [&a, &dot, &circ](const std::vector<int>& t) {
                const OVec x = lift(a.basis_vector(t[0])), y = lift(a.basis_vector(t[1])),
                           z = lift(a.basis_vector(t[2]));
                return sub(mul(circ, mul(dot, x, y), z), mul(dot, x, mul(circ, y, z)));
            }};
}

// (x o y) . z - (y o x) . z = x o (y . z) - y o (x . z)
inline IdentityComponent np_compat2(const Algebra& a, const BilinearOp& dot, const BilinearOp& circ) {
    return {"np-compat2", 3, [&a, &dot, &circ](const std::vector<int>& t) {
                const OVec x = lift(a.basis_vector(t[0])), y = lift(a.basis_vector(t[1])),
                           z = lift(a.basis_vector(t[2]));
                const OVec l = sub(mul(dot, mul(circ, x, y), z), mul(dot, mul(circ, y, x), z));
                const OVec r = sub(mul(circ, x, mul(dot, y, z)), mul(circ, y, mul(dot, x, z)));
                return sub(l, r);
            }};
}

// right Novikov, stated directly on the diamond:
// (a <> b) <> c - a <> (b <> c) = (a <> c) <> b - a <> (c <> b)
inline IdentityComponent right_nov1(const Algebra& a, const BilinearOp& dia) {
    return {"right-novikov1", 3, [&a, &dia](const std::vector<int>& t) {
                const OVec x = lift(a.basis_vector(t[0])), y = lift(a.basis_vector(t[1])),
                           z = lift(a.basis_vector(t[2]));
                const OVec l = sub(mul(dia, mul(dia, x, y), z), mul(dia, x, mul(dia, y, z)));
                const OVec r = sub(mul(dia, mul(dia, x, z), y), mul(dia, x, mul(dia, z, y)));
                return sub(l, r);
            }};
}

// a <> (b <> c) = b <> (a <> c)
inline IdentityComponent right_nov2(const Algebra& a, const BilinearOp& dia) {
    return {"right-novikov2", 3, [&a, &dia](const std::vector<int>& t) {
                const OVec x = lift(a.basis_vector(t[0])), y = lift(a.basis_vector(t[1])),
                           z = lift(a.basis_vector(t[2]));
                return sub(mul(dia, x, mul(dia, y, z)), mul(dia, y, mul(dia, x, z)));
            }};
}

// (a <> b) . c = a <> (b . c)
inline IdentityComponent rdnp_compat1(const Algebra& a, const BilinearOp& dot, const BilinearOp& dia) {
    return {"rdnp-compat1", 3, [&a, &dot, &dia](const std::vector<int>& t) {
                const OVec x = lift(a.basis_vector(t[0])), y = lift(a.basis_vector(t[1])),
                           z = lift(a.basis_vector(t[2]));
                return sub(mul(dot, mul(dia, x, y), z), mul(dia, x, mul(dot, y, z)));
            }};
}

// (a . b) <> c = (a <> c) . b + a . (b <> c)
inline IdentityComponent rdnp_compat2(const Algebra& a, const BilinearOp& dot, const BilinearOp& dia) {
    return {"rdnp-compat2", 3, [&a, &dot, &dia](const std::vector<int>& t) {
                const OVec x = lift(a.basis_vector(t[0])), y = lift(a.basis_vector(t[1])),
                           z = lift(a.basis_vector(t[2]));
                const OVec l = mul(dia, mul(dot, x, y), z);
                const OVec r = add(mul(dot, mul(dia, x, z), y), mul(dot, x, mul(dia, y, z)));
                return sub(l, r);
            }};
}

// [x, z . y] = z . [x, y] + [x, z] . y
inline IdentityComponent leibniz(const Algebra& a, const BilinearOp& dot, const BilinearOp& br) {
    return {"leibniz", 3, [&a, &dot, &br](const std::vector<int>& t) {
                const OVec x = lift(a.basis_vector(t[0])), y = lift(a.basis_vector(t[1])),
                           z = lift(a.basis_vector(t[2]));
                const OVec l = mul(br, x, mul(dot, z, y));
                const OVec r = add(mul(dot, z, mul(br, x, y)), mul(dot, mul(br, x, z), y));
                return sub(l, r);
            }};
}

inline std::vector<IdentityComponent> axiom_components(const Algebra& a, AxiomId axiom) {
    auto need = [&](const std::string& opname) -> const BilinearOp& {
        if (!a.has_op(opname))
            throw input_error("axiom " + std::string() + "requires operation '" + opname + "'");
        return a.op(opname);
    };
    std::vector<IdentityComponent> comps;
    switch (axiom) {
        case AxiomId::comm_assoc: {
            const auto& dot = need("dot");
            comps = {comm(a, dot), assoc(a, dot)};
            break;
        }
        case AxiomId::novikov_left: {
            const auto& circ = need("circ");
            comps = {right_commutativity(a, circ), left_symmetry(a, circ)};
            break;
        }
        case AxiomId::novikov_right: {
            const auto& circ = need("circ");
            comps = {right_nov1(a, circ), right_nov2(a, circ)};
            break;
        }
        case AxiomId::tnp: {
            const auto& dot = need("dot");
            const auto& circ = need("circ");
            comps = {comm(a, dot), assoc(a, dot), right_commutativity(a, circ),
                     left_symmetry(a, circ), tnp_compat1(a, dot, circ), tnp_compat2(a, dot, circ)};
            break;
        }
        case AxiomId::np: {
            const auto& dot = need("dot");
            const auto& circ = need("circ");
            comps = {comm(a, dot), assoc(a, dot), right_commutativity(a, circ),
                     left_symmetry(a, circ), np_compat1(a, dot, circ), np_compat2(a, dot, circ)};
            break;
        }
        case AxiomId::lie: {
            const auto& circ = need("circ");
            comps = {antisymmetry(a, circ), jacobi(a, circ)};
            break;
        }
        case AxiomId::transposed_poisson: {
            const auto& dot = need("dot");
            const auto& circ = need("circ");
            comps = {comm(a, dot), assoc(a, dot), antisymmetry(a, circ), jacobi(a, circ),
                     tp_compat(a, dot, circ)};
            break;
        }
        case AxiomId::rdnp: {
            const auto& dot = need("dot");
            const auto& circ = need("circ");
            comps = {comm(a, dot), assoc(a, dot), right_nov1(a, circ), right_nov2(a, circ),
                     rdnp_compat1(a, dot, circ), rdnp_compat2(a, dot, circ)};
            break;
        }
        case AxiomId::poisson_leibniz: {
            const auto& dot = need("dot");
            const auto& circ = need("circ");
            comps = {leibniz(a, dot, circ)};
            break;
        }
    }
    return comps;
}

}  // namespace detail

/// Axiom check over all basis tuples; masked algebras are rejected.
/// Completeness on basis tuples follows from multilinearity.
inline CheckReport check_axiom(const Algebra& a, AxiomId axiom) {
    if (a.any_mask())
        throw input_error("check_axiom requires a full algebra (no partial-product mask)");
    return detail::run_components(to_string(axiom), a.dim, detail::axiom_components(a, axiom));
}

/// As check_axiom but tuples that hit a masked product are skipped.
/// Used by windowed models and by constructions whose inputs carry masks.
inline CheckReport check_axiom_masked(const Algebra& a, AxiomId axiom) {
    return detail::run_components(to_string(axiom), a.dim, detail::axiom_components(a, axiom));
}

/// Matrix of left multiplication L_op(v): x -> v * x on the chosen operation.
inline Matrix left_multiplication(const Algebra& a, const std::string& opname, const Vec& v) {
    const BilinearOp& op = a.op(opname);
    Matrix m(a.dim, a.dim, a.field);
    for (int c = 0; c < a.dim; ++c) {
        const Vec col = op.eval(v, a.basis_vector(c));
        for (int r = 0; r < a.dim; ++r) m.at(r, c) = col[r];
    }
    return m;
}

inline Vec apply_map(const Matrix& phi, const Vec& v) { return phi.apply(v); }

inline CheckReport check_identity(const Algebra& a, IdentityId id,
                                  const Matrix* aux = nullptr) {
    using namespace detail;
    const int n = a.dim;
    auto bv = [&](int i) { return a.basis_vector(i); };
    std::vector<IdentityComponent> comps;
    CheckReport rep;
    rep.id = to_string(id);

    auto need_aux = [&]() -> const Matrix& {
        if (!aux) throw input_error("identity " + to_string(id) + " requires an auxiliary linear map");
        return *aux;
    };

    switch (id) {
        case IdentityId::tid1: {
            const auto& dot = a.op("dot");
            const auto& circ = a.op("circ");
            comps.push_back({"tid1", 3, [&, bv](const std::vector<int>& t) {
                                 return sub(mul(dot, mul(circ, lift(bv(t[0])), lift(bv(t[1]))), lift(bv(t[2]))),
                                            mul(dot, mul(circ, lift(bv(t[0])), lift(bv(t[2]))), lift(bv(t[1]))));
                             }});
            break;
        }
        case IdentityId::tid2: {
            const auto& dot = a.op("dot");
            const auto& circ = a.op("circ");
            comps.push_back({"tid2", 4, [&, bv](const std::vector<int>& t) {
                                 // (x o y) o (h . z) = (x o z) o (h . y); tuple order (x, y, z, h)
                                 const OVec x = lift(bv(t[0])), y = lift(bv(t[1])), z = lift(bv(t[2])),
                                            h = lift(bv(t[3]));
                                 return sub(mul(circ, mul(circ, x, y), mul(dot, h, z)),
                                            mul(circ, mul(circ, x, z), mul(dot, h, y)));
                             }});
            break;
        }
        case IdentityId::tid3: {
            const auto& dot = a.op("dot");
            const auto& circ = a.op("circ");
            comps.push_back({"tid3", 4, [&, bv](const std::vector<int>& t) {
                                 const OVec x = lift(bv(t[0])), y = lift(bv(t[1])), z = lift(bv(t[2])),
                                            h = lift(bv(t[3]));
                                 const OVec l = sub(mul(circ, mul(circ, x, y), mul(dot, h, z)),
                                                    mul(circ, mul(circ, y, x), mul(dot, h, z)));
                                 const OVec r = sub(mul(circ, mul(dot, h, x), mul(circ, y, z)),
                                                    mul(circ, mul(dot, h, y), mul(circ, x, z)));
                                 return sub(l, r);
                             }});
            break;
        }
        case IdentityId::tid4: {
            if (a.field.characteristic() == 3) {
                rep.pass = true;
                rep.applicable = false;
                rep.note = "not applicable in characteristic 3";
                return rep;
            }
            const auto& dot = a.op("dot");
            const auto& circ = a.op("circ");
            comps.push_back({"tid4", 4, [&, bv](const std::vector<int>& t) {
                                 const OVec x = lift(bv(t[0])), y = lift(bv(t[1])), z = lift(bv(t[2])),
                                            h = lift(bv(t[3]));
                                 return sub(mul(circ, mul(circ, x, y), mul(dot, h, z)),
                                            mul(circ, mul(circ, y, x), mul(dot, h, z)));
                             }});
            break;
        }
        case IdentityId::difflem: {
            const auto& dot = a.op("dot");
            const auto& dia = a.op("circ");
            comps.push_back({"difflem", 3, [&, bv](const std::vector<int>& t) {
                                 const OVec x = lift(bv(t[0])), y = lift(bv(t[1])), z = lift(bv(t[2]));
                                 const OVec l = sub(mul(dia, mul(dot, x, y), z), mul(dia, mul(dot, x, z), y));
                                 const OVec r = sub(mul(dot, x, mul(dia, y, z)), mul(dot, x, mul(dia, z, y)));
                                 return sub(l, r);
                             }});
            break;
        }
        case IdentityId::half_id1: {
            const auto& circ = a.op("circ");
            const Matrix& phi = need_aux();
            comps.push_back({"half1", 3, [&, bv, &phi = phi](const std::vector<int>& t) {
                                 const OVec x = lift(bv(t[0])), y = lift(bv(t[1])), z = lift(bv(t[2]));
                                 return sub(mul(circ, mul(circ, x, y), lift(phi.apply(bv(t[2])))),
                                            mul(circ, mul(circ, x, lift(phi.apply(bv(t[1])))), z));
                             }});
            break;
        }
        case IdentityId::half_id2: {
            const auto& circ = a.op("circ");
            const Matrix& phi = need_aux();
            comps.push_back({"half2", 3, [&, bv, &phi = phi](const std::vector<int>& t) {
                                 const OVec x = lift(bv(t[0])), y = lift(bv(t[1])), z = lift(bv(t[2]));
                                 const OVec pz = lift(phi.apply(bv(t[2])));
                                 const OVec l = sub(mul(circ, mul(circ, x, y), pz),
                                                    mul(circ, mul(circ, y, x), pz));
                                 const OVec r = sub(mul(circ, lift(phi.apply(bv(t[0]))), mul(circ, y, z)),
                                                    mul(circ, lift(phi.apply(bv(t[1]))), mul(circ, x, z)));
                                 return sub(l, r);
                             }});
            break;
        }
        case IdentityId::hom_novikov: {
            const auto& circ = a.op("circ");
            const Matrix& alpha = need_aux();
            comps.push_back({"hom-novikov1", 3, [&, bv, &alpha = alpha](const std::vector<int>& t) {
                                 const OVec x = lift(bv(t[0])), y = lift(bv(t[1])), z = lift(bv(t[2]));
                                 const OVec az = lift(alpha.apply(bv(t[2])));
                                 const OVec l = sub(mul(circ, mul(circ, x, y), az),
                                                    mul(circ, lift(alpha.apply(bv(t[0]))), mul(circ, y, z)));
                                 const OVec r = sub(mul(circ, mul(circ, y, x), az),
                                                    mul(circ, lift(alpha.apply(bv(t[1]))), mul(circ, x, z)));
                                 return sub(l, r);
                             }});
            comps.push_back({"hom-novikov2", 3, [&, bv, &alpha = alpha](const std::vector<int>& t) {
                                 const OVec x = lift(bv(t[0])), y = lift(bv(t[1])), z = lift(bv(t[2]));
                                 return sub(mul(circ, mul(circ, x, y), lift(alpha.apply(bv(t[2])))),
                                            mul(circ, mul(circ, x, z), lift(alpha.apply(bv(t[1])))));
                             }});
            break;
        }
        case IdentityId::prop212_b: {
            const auto& dot = a.op("dot");
            const auto& circ = a.op("circ");
            comps.push_back({"prop212b", 3, [&, bv](const std::vector<int>& t) {
                                 const OVec xy = mul(dot, lift(bv(t[0])), lift(bv(t[1])));
                                 return sub(mul(circ, xy, lift(bv(t[2]))), mul(circ, lift(bv(t[2])), xy));
                             }});
            break;
        }
    }
    return detail::run_components(to_string(id), n, comps);
}

/// phi(x * y) = x * phi(y) = phi(x) * y on all basis pairs.
inline CheckReport centroid_membership(const Algebra& a, const std::string& opname,
                                       const Matrix& phi) {
    using namespace detail;
    const auto& op = a.op(opname);
    auto bv = [&](int i) { return a.basis_vector(i); };
    std::vector<IdentityComponent> comps;
    comps.push_back({"centroid-right", 2, [&, bv](const std::vector<int>& t) -> OVec {
                         const OVec xy = mul(op, lift(bv(t[0])), lift(bv(t[1])));
                         if (!xy) return std::nullopt;
                         return sub(lift(phi.apply(*xy)), mul(op, lift(bv(t[0])), lift(phi.apply(bv(t[1])))));
                     }});
    comps.push_back({"centroid-left", 2, [&, bv](const std::vector<int>& t) -> OVec {
                         const OVec xy = mul(op, lift(bv(t[0])), lift(bv(t[1])));
                         if (!xy) return std::nullopt;
                         return sub(lift(phi.apply(*xy)), mul(op, lift(phi.apply(bv(t[0]))), lift(bv(t[1]))));
                     }});
    return detail::run_components("centroid-membership", a.dim, comps);
}

}  // namespace tnp

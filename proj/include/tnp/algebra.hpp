#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>

#include "tnp/bilinear_op.hpp"

namespace tnp {

using json = nlohmann::ordered_json;

struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// A structure-constant algebra: a field, a dimension, and up to two named
/// bilinear operations. "dot" holds the commutative product, "circ" the
/// Novikov product (or a bracket / right-Novikov diamond, depending on which
/// axiom sees the algebra).
struct Algebra {
    std::string name;
    FieldDescriptor field = rational_field();
    int dim = 0;
    std::vector<std::string> labels;  // optional; empty means default e1..en
    std::optional<BilinearOp> dot;
    std::optional<BilinearOp> circ;
    json meta = json::object();

    const BilinearOp& op(const std::string& opname) const {
        if (opname == "dot" && dot) return *dot;
        if (opname == "circ" && circ) return *circ;
        throw input_error("algebra '" + name + "' has no operation '" + opname + "'");
    }

    bool has_op(const std::string& opname) const {
        return (opname == "dot" && dot) || (opname == "circ" && circ);
    }

    bool any_mask() const {
        return (dot && dot->has_mask()) || (circ && circ->has_mask());
    }

    std::string label(int i) const {
        if (i >= 0 && i < static_cast<int>(labels.size())) return labels[i];
        return "e" + std::to_string(i + 1);
    }

    /// Resolve a basis label to its index; -1 when unknown.
    int label_index(const std::string& l) const {
        for (int i = 0; i < dim; ++i)
            if (label(i) == l) return i;
        return -1;
    }

    Vec basis_vector(int i) const {
        Vec v = zero_vec(dim, field);
        v[i] = Scalar::one(field);
        return v;
    }
};

inline FieldDescriptor field_from_json(const json& jf) {
    if (!jf.is_object() || !jf.contains("kind")) throw input_error("malformed field descriptor");
    const std::string kind = jf.at("kind").get<std::string>();
    if (kind == "rational") return rational_field();
    if (kind == "prime") {
        if (!jf.contains("p")) throw input_error("prime field needs \"p\"");
        return prime_field(jf.at("p").get<std::uint64_t>());
    }
    throw input_error("unknown field kind: " + kind);
}

inline json field_to_json(const FieldDescriptor& fd) {
    json j;
    if (fd.kind == FieldKind::rational) {
        j["kind"] = "rational";
    } else {
        j["kind"] = "prime";
        j["p"] = fd.p;
    }
    return j;
}

inline Algebra algebra_from_json(const json& j) {
    Algebra a;
    if (!j.is_object()) throw input_error("algebra document must be a JSON object");
    a.name = j.value("name", std::string());
    a.field = field_from_json(j.at("field"));
    a.dim = j.at("dim").get<int>();
    if (a.dim <= 0) throw input_error("algebra dimension must be positive");
    if (j.contains("labels")) {
        for (const auto& l : j.at("labels")) a.labels.push_back(l.get<std::string>());
        if (!a.labels.empty() && static_cast<int>(a.labels.size()) != a.dim)
            throw input_error("label count does not match dimension");
    }
    auto read_op = [&](const std::string& opname) -> std::optional<BilinearOp> {
        if (!j.contains("ops") || !j.at("ops").contains(opname)) return std::nullopt;
        BilinearOp op(a.dim, a.field);
        for (const auto& entry : j.at("ops").at(opname)) {
            if (!entry.is_array() || entry.size() != 4)
                throw input_error("op entry must be [i, j, k, \"scalar\"]");
            const int i = entry[0].get<int>(), jj = entry[1].get<int>(), k = entry[2].get<int>();
            try {
                op.set(i, jj, k, Scalar::parse(entry[3].get<std::string>(), a.field));
            } catch (const dimension_error& e) {
                throw input_error(std::string(e.what()) + " in op '" + opname + "'");
            }
        }
        if (j.contains("mask") && j.at("mask").contains(opname))
            for (const auto& pr : j.at("mask").at(opname)) {
                if (!pr.is_array() || pr.size() != 2) throw input_error("mask entry must be [i, j]");
                op.add_mask(pr[0].get<int>(), pr[1].get<int>());
            }
        return op;
    };
    a.dot = read_op("dot");
    a.circ = read_op("circ");
    if (j.contains("meta")) a.meta = j.at("meta");
    return a;
}

inline json algebra_to_json(const Algebra& a) {
    json j;
    j["name"] = a.name;
    j["field"] = field_to_json(a.field);
    j["dim"] = a.dim;
    if (!a.labels.empty()) j["labels"] = a.labels;
    json ops = json::object();
    json masks = json::object();
    auto write_op = [&](const std::string& opname, const BilinearOp& op) {
        json entries = json::array();
        for (const auto& [key, c] : op.entries())
            entries.push_back(json::array(
                {std::get<0>(key), std::get<1>(key), std::get<2>(key), c.str()}));
        ops[opname] = entries;
        if (op.has_mask()) {
            json m = json::array();
            for (const auto& [i, jj] : op.mask()) m.push_back(json::array({i, jj}));
            masks[opname] = m;
        }
    };
    if (a.dot) write_op("dot", *a.dot);
    if (a.circ) write_op("circ", *a.circ);
    j["ops"] = ops;
    if (!masks.empty()) j["mask"] = masks;
    if (!a.meta.empty()) j["meta"] = a.meta;
    return j;
}

}  // namespace tnp

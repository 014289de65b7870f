#pragma once

#include <json.hpp>

#include <array>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "weightsys/canonical.hpp"
#include "weightsys/diagram.hpp"
#include "weightsys/error.hpp"
#include "weightsys/scalar.hpp"
#include "weightsys/tensor.hpp"
#include "weightsys/weight_system.hpp"

namespace weightsys {

using json = nlohmann::json;

/// Diagram as read from JSON: named half-edges, before any checking.
struct RawDiagram {
    int legs = 0;
    int loop_count = 0;
    std::vector<std::array<std::string, 3>> vertices;
    std::vector<std::pair<int, std::string>> legs_map;  // (label, half-edge)
    std::vector<std::pair<std::string, std::string>> edges;
};

/**
 * Checks leg labels, then that every half-edge occurs exactly once, then that
 * the edges form a fixed-point-free involution on the half-edges.
 */
inline std::optional<Error> validate(const RawDiagram& raw) {
    if (raw.legs < 0) return Error(ErrorKind::BadLegRange, "negative leg count");
    if (raw.loop_count < 0) return Error(ErrorKind::InvalidDiagram, "negative loop_count");
    std::vector<char> label_seen(raw.legs + 1, 0);
    for (const auto& [label, h] : raw.legs_map) {
        if (label < 1 || label > raw.legs)
            return Error(ErrorKind::BadLegRange, "leg label " + std::to_string(label) + " outside 1.." +
                                                     std::to_string(raw.legs));
        if (label_seen[label]) return Error(ErrorKind::DuplicateLegLabel, "leg label " + std::to_string(label));
        label_seen[label] = 1;
    }
    for (int l = 1; l <= raw.legs; ++l)
        if (!label_seen[l]) return Error(ErrorKind::BadLegRange, "leg label " + std::to_string(l) + " missing");

    std::unordered_map<std::string, int> occurrences;
    for (const auto& v : raw.vertices)
        for (const auto& h : v) ++occurrences[h];
    for (const auto& [label, h] : raw.legs_map) ++occurrences[h];
    for (const auto& [h, count] : occurrences)
        if (count != 1)
            return Error(ErrorKind::DanglingHalfEdge, "half-edge " + h + " occurs " + std::to_string(count) + " times");

    std::unordered_map<std::string, std::string> partner;
    for (const auto& [a, b] : raw.edges) {
        for (const auto* h : {&a, &b})
            if (!occurrences.count(*h))
                return Error(ErrorKind::DanglingHalfEdge, "edge end " + *h + " is not a vertex slot or leg");
        if (a == b) return Error(ErrorKind::PairingNotInvolution, "half-edge " + a + " paired with itself");
        for (const auto* h : {&a, &b})
            if (partner.count(*h)) return Error(ErrorKind::PairingNotInvolution, "half-edge " + *h + " in two edges");
        partner[a] = b;
        partner[b] = a;
    }
    for (const auto& [h, count] : occurrences)
        if (!partner.count(h)) return Error(ErrorKind::PairingNotInvolution, "half-edge " + h + " unpaired");
    return std::nullopt;
}

inline FixedDiagram build(const RawDiagram& raw) {
    if (auto err = validate(raw)) throw *err;
    const int nv = static_cast<int>(raw.vertices.size());
    std::unordered_map<std::string, int> index;
    for (int v = 0; v < nv; ++v)
        for (int s = 0; s < 3; ++s) index[raw.vertices[v][s]] = 3 * v + s;
    for (const auto& [label, h] : raw.legs_map) index[h] = 3 * nv + label - 1;
    std::vector<int> partner(3 * nv + raw.legs);
    for (const auto& [a, b] : raw.edges) {
        partner[index[a]] = index[b];
        partner[index[b]] = index[a];
    }
    return FixedDiagram(nv, raw.legs, std::move(partner), raw.loop_count);
}

namespace detail {

inline std::string half_edge_name(const FixedDiagram& d, int h) {
    if (d.is_leg(h)) return "l" + std::to_string(d.leg_label(h));
    return "v" + std::to_string(d.vertex_of(h)) + "." + std::to_string(d.position_of(h));
}

inline const json& require(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::ParseError, std::string("missing key '") + key + "'");
    return j.at(key);
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, path + ": " + e.what());
    }
}

}  // namespace detail

inline RawDiagram raw_diagram_from_json(const json& j) {
    RawDiagram raw;
    try {
        raw.legs = detail::require(j, "legs").get<int>();
        raw.loop_count = j.value("loop_count", 0);
        for (const auto& v : detail::require(j, "vertices")) {
            if (!v.is_array() || v.size() != 3) throw Error(ErrorKind::ParseError, "vertex must list 3 half-edges");
            raw.vertices.push_back({v[0].get<std::string>(), v[1].get<std::string>(), v[2].get<std::string>()});
        }
        const json legs_map = j.value("legs_map", json::object());
        for (const auto& [label, h] : legs_map.items()) {
            std::size_t used = 0;
            const int l = std::stoi(label, &used);
            if (used != label.size()) throw Error(ErrorKind::ParseError, "leg label '" + label + "'");
            raw.legs_map.emplace_back(l, h.get<std::string>());
        }
        for (const auto& e : detail::require(j, "edges")) {
            if (!e.is_array() || e.size() != 2) throw Error(ErrorKind::ParseError, "edge must list 2 half-edges");
            raw.edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
        }
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    } catch (const std::invalid_argument&) {
        throw Error(ErrorKind::ParseError, "non-numeric leg label");
    }
    return raw;
}

inline FixedDiagram diagram_from_json(const json& j) { return build(raw_diagram_from_json(j)); }

inline json diagram_to_json(const FixedDiagram& d) {
    json j;
    j["legs"] = d.num_legs();
    j["loop_count"] = d.loop_count();
    json vertices = json::array();
    for (int v = 0; v < d.num_vertices(); ++v)
        vertices.push_back({detail::half_edge_name(d, 3 * v), detail::half_edge_name(d, 3 * v + 1),
                            detail::half_edge_name(d, 3 * v + 2)});
    j["vertices"] = std::move(vertices);
    json legs = json::object();
    for (int l = 1; l <= d.num_legs(); ++l) legs[std::to_string(l)] = "l" + std::to_string(l);
    j["legs_map"] = std::move(legs);
    json edges = json::array();
    for (auto [a, b] : d.edges()) edges.push_back({detail::half_edge_name(d, a), detail::half_edge_name(d, b)});
    j["edges"] = std::move(edges);
    return j;
}

inline FixedDiagram load_diagram(const std::string& path) { return diagram_from_json(detail::read_json_file(path)); }

// ---------------------------------------------------------------------------
// Scalars: rationals as "p/q" strings or integers, complex values as [re, im] or a number.

inline json scalar_to_json(const Rational& x) {
    if (x.get_den() == 1 && x.get_num().fits_slong_p()) return x.get_num().get_si();
    return x.get_str();
}

inline json scalar_to_json(const Complex& x) { return json::array({x.real(), x.imag()}); }

template <Scalar T>
T scalar_from_json(const json& j);

template <>
inline Rational scalar_from_json<Rational>(const json& j) {
    if (j.is_number_integer()) return Rational(mpz_class(j.dump()));
    if (j.is_string()) {
        Rational q;
        if (q.set_str(j.get<std::string>(), 10) != 0) throw Error(ErrorKind::ParseError, "bad rational " + j.dump());
        if (sgn(q.get_den()) == 0) throw Error(ErrorKind::ParseError, "zero denominator " + j.dump());
        q.canonicalize();
        return q;
    }
    throw Error(ErrorKind::ParseError, "expected an exact value, got " + j.dump());
}

template <>
inline Complex scalar_from_json<Complex>(const json& j) {
    if (j.is_number()) return Complex(j.get<double>(), 0.0);
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return Complex(j[0].get<double>(), j[1].get<double>());
    throw Error(ErrorKind::ParseError, "expected [re, im], got " + j.dump());
}

// ---------------------------------------------------------------------------
// Tensors: {"dim", "backend", "entries": [[i,j,k,num,den] | [i,j,k,re,im]], "lie"?}, 0-based indices.

inline json tensor_to_json(const RationalTensor& c) {
    json entries = json::array();
    const int n = c.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const Rational& v = c(i, j, k);
                if (sgn(v) == 0) continue;
                json num = v.get_num().fits_slong_p() ? json(v.get_num().get_si()) : json(v.get_num().get_str());
                json den = v.get_den().fits_slong_p() ? json(v.get_den().get_si()) : json(v.get_den().get_str());
                entries.push_back({i, j, k, num, den});
            }
    return {{"dim", n}, {"backend", "rational"}, {"lie", c.is_lie()}, {"entries", std::move(entries)}};
}

inline json tensor_to_json(const ComplexTensor& c) {
    json entries = json::array();
    const int n = c.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const Complex& v = c(i, j, k);
                if (v == Complex(0.0, 0.0)) continue;
                entries.push_back({i, j, k, v.real(), v.imag()});
            }
    return {{"dim", n}, {"backend", "complex"}, {"lie", c.is_lie()}, {"entries", std::move(entries)}};
}

inline json tensor_to_json(const AnyTensor& t) {
    return std::visit([](const auto& c) { return tensor_to_json(c); }, t);
}

namespace detail {

inline mpz_class integer_from_json(const json& j) {
    if (j.is_number_integer()) return mpz_class(j.dump());
    if (j.is_string()) {
        mpz_class z;
        if (z.set_str(j.get<std::string>(), 10) != 0) throw Error(ErrorKind::ParseError, "bad integer " + j.dump());
        return z;
    }
    throw Error(ErrorKind::ParseError, "expected an integer, got " + j.dump());
}

}  // namespace detail

inline AnyTensor tensor_from_json(const json& j) {
    try {
        const int n = detail::require(j, "dim").get<int>();
        if (n < 0) throw Error(ErrorKind::ParseError, "negative dim");
        const std::string backend = j.value("backend", std::string("rational"));
        const bool lie = j.value("lie", false);
        auto index = [n](const json& e, int p) {
            const int x = e[p].get<int>();
            if (x < 0 || x >= n) throw Error(ErrorKind::BadIndex, "tensor index " + std::to_string(x));
            return x;
        };
        const auto& entries = detail::require(j, "entries");
        if (backend == "rational") {
            RationalTensor c(n, lie);
            for (const auto& e : entries) {
                if (!e.is_array() || e.size() != 5) throw Error(ErrorKind::ParseError, "entry must be [i,j,k,num,den]");
                mpz_class den = detail::integer_from_json(e[4]);
                if (sgn(den) == 0) throw Error(ErrorKind::ParseError, "zero denominator");
                Rational q(detail::integer_from_json(e[3]), den);
                q.canonicalize();
                c(index(e, 0), index(e, 1), index(e, 2)) = q;
            }
            return c;
        }
        if (backend == "complex") {
            ComplexTensor c(n, lie);
            for (const auto& e : entries) {
                if (!e.is_array() || e.size() != 5) throw Error(ErrorKind::ParseError, "entry must be [i,j,k,re,im]");
                c(index(e, 0), index(e, 1), index(e, 2)) = Complex(e[3].get<double>(), e[4].get<double>());
            }
            return c;
        }
        throw Error(ErrorKind::ParseError, "unknown backend '" + backend + "'");
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

inline AnyTensor load_tensor(const std::string& path) { return tensor_from_json(detail::read_json_file(path)); }

// ---------------------------------------------------------------------------
// Table-backed weight systems: {"backend"?, "loop_value", "entries": [{"code" | "graph", "value"}]}.

using AnyWeightSystem = std::variant<WeightSystem<Rational>, WeightSystem<Complex>>;

namespace detail {

template <Scalar T>
WeightSystem<T> table_from_json(const json& j) {
    TableBacked<T> t{scalar_from_json<T>(require(j, "loop_value")), {}};
    for (const auto& e : require(j, "entries")) {
        std::string code;
        if (e.contains("code")) {
            code = e.at("code").get<std::string>();
        } else if (e.contains("graph")) {
            const auto g = diagram_from_json(e.at("graph"));
            if (!is_three_graph(g) || g.num_vertices() == 0)
                throw Error(ErrorKind::NotAThreeGraph, "table graphs must be connected with a vertex");
            code = canonical_form(g);
        } else {
            throw Error(ErrorKind::ParseError, "table entry needs 'code' or 'graph'");
        }
        t.table[code] = scalar_from_json<T>(require(e, "value"));
    }
    return WeightSystem<T>(std::move(t));
}

}  // namespace detail

inline AnyWeightSystem table_from_json(const json& j) {
    try {
        const std::string backend = j.value("backend", std::string("rational"));
        if (backend == "rational") return detail::table_from_json<Rational>(j);
        if (backend == "complex") return detail::table_from_json<Complex>(j);
        throw Error(ErrorKind::ParseError, "unknown backend '" + backend + "'");
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

template <Scalar T>
json table_to_json(const TableBacked<T>& t) {
    json entries = json::array();
    for (const auto& [code, v] : t.table) entries.push_back({{"code", code}, {"value", scalar_to_json(v)}});
    return {{"backend", ScalarTraits<T>::name}, {"loop_value", scalar_to_json(t.loop_value)}, {"entries", entries}};
}

// ---------------------------------------------------------------------------

/// {"check", "params", "seed", "residual", "pass"}; seed is null when nothing was random.
inline json make_report(const std::string& check, json params, std::optional<std::uint64_t> seed, double residual,
                        bool pass) {
    return {{"check", check},
            {"params", std::move(params)},
            {"seed", seed ? json(*seed) : json(nullptr)},
            {"residual", residual},
            {"pass", pass}};
}

}  // namespace weightsys

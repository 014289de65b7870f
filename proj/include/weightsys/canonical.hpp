#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "weightsys/diagram.hpp"

namespace weightsys {

namespace detail {

// Token encoding: a reference to position q of the w-th visited vertex is 3w+q;
// a leg with label l is -l. A component code starts with its vertex count.
using ComponentCode = std::vector<int>;

/**
 * Breadth-first traversal from vertex `root` entered at `offset`. Every newly
 * reached vertex is rotated so that its entry half-edge is position 0, so the
 * code depends only on the root choice. Returns false (leaving `code` partial)
 * as soon as the code is known to exceed `best`.
 */
inline bool traverse(const FixedDiagram& d, int root, int offset, int component_vertices,
                     std::vector<int>& number, std::vector<int>& rotation, std::vector<int>& order,
                     ComponentCode& code, const ComponentCode* best) {
    for (int v : order) number[v] = -1;
    order.clear();
    code.clear();
    code.push_back(component_vertices);
    bool tied = best != nullptr;
    auto emit = [&](int token) {
        if (tied) {
            int ref = (*best)[code.size()];
            if (token > ref) return false;
            if (token < ref) tied = false;
        }
        code.push_back(token);
        return true;
    };

    number[root] = 0;
    rotation[root] = offset;
    order.push_back(root);
    for (std::size_t idx = 0; idx < order.size(); ++idx) {
        const int v = order[idx];
        for (int p = 0; p < 3; ++p) {
            const int q = d.partner(3 * v + (rotation[v] + p) % 3);
            int token;
            if (d.is_leg(q)) {
                token = -d.leg_label(q);
            } else {
                const int w = d.vertex_of(q);
                if (number[w] < 0) {
                    number[w] = static_cast<int>(order.size());
                    rotation[w] = d.position_of(q);
                    order.push_back(w);
                }
                token = 3 * number[w] + (d.position_of(q) - rotation[w] + 3) % 3;
            }
            if (!emit(token)) return false;
        }
    }
    return true;
}

inline std::vector<ComponentCode> component_codes(const FixedDiagram& d) {
    int count = 0;
    const auto comp = component_ids(d, &count);
    std::vector<std::vector<int>> members(count);
    for (int v = 0; v < d.num_vertices(); ++v) members[comp[3 * v]].push_back(v);

    std::vector<ComponentCode> codes;
    codes.reserve(count);
    std::vector<int> number(d.num_vertices(), -1), rotation(d.num_vertices(), 0), order;
    ComponentCode best, trial;
    for (int c = 0; c < count; ++c) {
        const auto& verts = members[c];
        if (verts.empty()) {
            // A bare edge between two legs.
            for (int l = 1; l <= d.num_legs(); ++l) {
                const int h = d.leg_half_edge(l);
                if (comp[h] == c && d.leg_label(d.partner(h)) > l) {
                    codes.push_back({0, -l, -d.leg_label(d.partner(h))});
                    break;
                }
            }
            continue;
        }
        const int size = static_cast<int>(verts.size());
        best.clear();
        for (int v : verts) {
            for (int r = 0; r < 3; ++r) {
                const bool first = best.empty();
                if (traverse(d, v, r, size, number, rotation, order, trial, first ? nullptr : &best) &&
                    (first || trial < best))
                    std::swap(best, trial);
            }
        }
        codes.push_back(best);
    }
    std::sort(codes.begin(), codes.end());
    return codes;
}

inline std::string render_component(const ComponentCode& code) {
    std::string out = "[" + std::to_string(code[0]) + ":";
    for (std::size_t i = 1; i < code.size(); ++i) {
        if (i > 1) out += ',';
        const int t = code[i];
        if (t < 0)
            out += "L" + std::to_string(-t);
        else
            out += std::to_string(t / 3) + "." + std::to_string(t % 3);
    }
    return out + "]";
}

}  // namespace detail

/**
 * Canonical code of a fixed diagram, invariant under isomorphisms that fix every
 * leg label and preserve every cyclic order. Reversing a vertex is not an
 * isomorphism. Format: `k<legs>` then the sorted component codes, then `o<loops>`.
 */
inline std::string canonical_form(const FixedDiagram& d) {
    std::string out = "k" + std::to_string(d.num_legs());
    for (const auto& code : detail::component_codes(d)) out += detail::render_component(code);
    return out + "o" + std::to_string(d.loop_count());
}

inline bool are_isomorphic(const FixedDiagram& a, const FixedDiagram& b) {
    return a.num_legs() == b.num_legs() && a.num_vertices() == b.num_vertices() &&
           a.loop_count() == b.loop_count() && canonical_form(a) == canonical_form(b);
}

}  // namespace weightsys

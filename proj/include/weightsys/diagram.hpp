#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "weightsys/error.hpp"

namespace weightsys {

/**
 * A k-legged fixed diagram stored as a rotation system.
 *
 * Half-edges are numbered implicitly: vertex v owns half-edges 3v, 3v+1, 3v+2
 * in cyclic order, and leg label l (1-based) is half-edge 3V + l - 1. The only
 * free data is the pairing of half-edges into edges and the number of
 * vertexless loops. Two diagrams are equal as values only if their numbering
 * agrees; use canonical_form() for isomorphism.
 */
class FixedDiagram {
public:
    FixedDiagram() = default;

    FixedDiagram(int vertices, int legs, std::vector<int> partner, int loop_count = 0)
        : vertices_(vertices), legs_(legs), loops_(loop_count), partner_(std::move(partner)) {
        check();
    }

    int num_vertices() const noexcept { return vertices_; }
    int num_legs() const noexcept { return legs_; }
    int loop_count() const noexcept { return loops_; }
    int num_half_edges() const noexcept { return 3 * vertices_ + legs_; }
    int num_edges() const noexcept { return num_half_edges() / 2; }

    int partner(int h) const { return partner_.at(h); }
    std::span<const int> pairing() const noexcept { return partner_; }

    static constexpr int slot(int vertex, int position) noexcept { return 3 * vertex + position; }
    int leg_half_edge(int label) const {
        if (label < 1 || label > legs_) throw Error(ErrorKind::BadIndex, "leg " + std::to_string(label));
        return 3 * vertices_ + label - 1;
    }
    bool is_leg(int h) const noexcept { return h >= 3 * vertices_; }
    int vertex_of(int h) const noexcept { return h / 3; }
    int position_of(int h) const noexcept { return h % 3; }
    int leg_label(int h) const noexcept { return h - 3 * vertices_ + 1; }

    std::array<int, 3> vertex(int v) const {
        if (v < 0 || v >= vertices_) throw Error(ErrorKind::BadIndex, "vertex " + std::to_string(v));
        return {slot(v, 0), slot(v, 1), slot(v, 2)};
    }

    /// Edges as (a, b) with a < b, sorted by a. The position in this list is the edge id.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(num_edges());
        for (int h = 0; h < num_half_edges(); ++h)
            if (h < partner_[h]) out.emplace_back(h, partner_[h]);
        return out;
    }

    /// Edge id of every half-edge, consistent with edges().
    std::vector<int> edge_ids() const {
        std::vector<int> id(num_half_edges(), -1);
        int next = 0;
        for (int h = 0; h < num_half_edges(); ++h) {
            int p = partner_[h];
            if (h < p) {
                id[h] = next;
                id[p] = next;
                ++next;
            }
        }
        return id;
    }

    bool operator==(const FixedDiagram&) const = default;

private:
    void check() const {
        if (vertices_ < 0 || legs_ < 0 || loops_ < 0)
            throw Error(ErrorKind::InvalidDiagram, "negative size");
        const int n = num_half_edges();
        if (static_cast<int>(partner_.size()) != n)
            throw Error(ErrorKind::DanglingHalfEdge, "pairing covers " + std::to_string(partner_.size()) +
                                                         " of " + std::to_string(n) + " half-edges");
        for (int h = 0; h < n; ++h) {
            int p = partner_[h];
            if (p < 0 || p >= n) throw Error(ErrorKind::DanglingHalfEdge, std::to_string(h));
            if (p == h || partner_[p] != h)
                throw Error(ErrorKind::PairingNotInvolution, std::to_string(h));
        }
    }

    int vertices_ = 0;
    int legs_ = 0;
    int loops_ = 0;
    std::vector<int> partner_;
};

/// Incremental construction helper for the built-in diagrams.
class DiagramBuilder {
public:
    DiagramBuilder(int vertices, int legs)
        : vertices_(vertices), legs_(legs), partner_(3 * vertices + legs, -1) {}

    int slot(int v, int position) const { return 3 * v + position; }
    int leg(int label) const { return 3 * vertices_ + label - 1; }

    DiagramBuilder& join(int a, int b) {
        partner_.at(a) = b;
        partner_.at(b) = a;
        return *this;
    }
    DiagramBuilder& loops(int count) {
        loops_ = count;
        return *this;
    }

    FixedDiagram build() const { return FixedDiagram(vertices_, legs_, partner_, loops_); }

private:
    int vertices_;
    int legs_;
    int loops_ = 0;
    std::vector<int> partner_;
};

/// Linear combination of fixed diagrams with integer coefficients.
struct FormalTerm {
    long coefficient;
    FixedDiagram diagram;
};
using FormalSum = std::vector<FormalTerm>;

// ---------------------------------------------------------------------------
// Built-in diagrams

inline FixedDiagram empty_diagram() { return FixedDiagram(0, 0, {}, 0); }

inline FixedDiagram vertexless_loop() { return FixedDiagram(0, 0, {}, 1); }

/// One vertex whose cyclic order visits the given leg labels (a permutation of 1,2,3).
inline FixedDiagram tripod(std::array<int, 3> rotation = {1, 2, 3}) {
    auto sorted = rotation;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != std::array<int, 3>{1, 2, 3})
        throw Error(ErrorKind::NotAPermutation, "tripod rotation must permute 1,2,3");
    DiagramBuilder b(1, 3);
    for (int p = 0; p < 3; ++p) b.join(b.slot(0, p), b.leg(rotation[p]));
    return b.build();
}

/// u:(e1,e2,e3), v:(e1,e3,e2). With an antisymmetric tensor this evaluates to -sum c^2.
inline FixedDiagram theta() {
    DiagramBuilder b(2, 0);
    b.join(b.slot(0, 0), b.slot(1, 0));
    b.join(b.slot(0, 1), b.slot(1, 2));
    b.join(b.slot(0, 2), b.slot(1, 1));
    return b.build();
}

/// Planar K4: v1:(a12,a13,a14), v2:(a21,a24,a23), v3:(a31,a32,a34), v4:(a41,a43,a42).
inline FixedDiagram k4() {
    DiagramBuilder b(4, 0);
    b.join(b.slot(0, 0), b.slot(1, 0));  // a12
    b.join(b.slot(0, 1), b.slot(2, 0));  // a13
    b.join(b.slot(0, 2), b.slot(3, 0));  // a14
    b.join(b.slot(1, 2), b.slot(2, 1));  // a23
    b.join(b.slot(1, 1), b.slot(3, 2));  // a24
    b.join(b.slot(2, 2), b.slot(3, 1));  // a34
    return b.build();
}

/// k disjoint tripods; vertex i carries legs 3i-2, 3i-1, 3i in that order.
inline FixedDiagram tri_star(int k) {
    DiagramBuilder b(k, 3 * k);
    for (int v = 0; v < k; ++v)
        for (int p = 0; p < 3; ++p) b.join(b.slot(v, p), b.leg(3 * v + p + 1));
    return b.build();
}

/// P_pi: 2k legs, leg i joined to leg k + pi(i). `pi` is 0-based: pi[i] in [0, k).
inline FixedDiagram permutation_diagram(std::span<const int> pi) {
    const int k = static_cast<int>(pi.size());
    std::vector<char> seen(k, 0);
    for (int x : pi) {
        if (x < 0 || x >= k || seen[x])
            throw Error(ErrorKind::NotAPermutation, "image " + std::to_string(x));
        seen[x] = 1;
    }
    DiagramBuilder b(0, 2 * k);
    for (int i = 0; i < k; ++i) b.join(b.leg(i + 1), b.leg(k + pi[i] + 1));
    return b.build();
}

inline FixedDiagram identity_permutation_diagram(int k) {
    std::vector<int> id(k);
    std::iota(id.begin(), id.end(), 0);
    return permutation_diagram(id);
}

/// tripod(1,2,3) + tripod(1,3,2)
inline FormalSum as_element() {
    return {{1, tripod({1, 2, 3})}, {1, tripod({1, 3, 2})}};
}

/**
 * Three two-vertex 4-legged diagrams whose open evaluations are the three
 * terms of the quadratic Jacobi equations
 *   sum_a x_{ija} x_{akl} + x_{kia} x_{ajl} + x_{jka} x_{ail}.
 */
inline FormalSum ihx_element() {
    auto term = [](int a, int b, int c, int d) {
        DiagramBuilder g(2, 4);
        g.join(g.slot(0, 0), g.leg(a)).join(g.slot(0, 1), g.leg(b)).join(g.slot(0, 2), g.slot(1, 0));
        g.join(g.slot(1, 1), g.leg(c)).join(g.slot(1, 2), g.leg(d));
        return g.build();
    };
    return {{1, term(1, 2, 3, 4)}, {1, term(3, 1, 2, 4)}, {1, term(2, 3, 1, 4)}};
}

// ---------------------------------------------------------------------------
// Operations

/// Reverses the cyclic order at vertex v: (a,b,c) -> (a,c,b).
inline FixedDiagram flip_vertex(const FixedDiagram& d, int v) {
    if (v < 0 || v >= d.num_vertices()) throw Error(ErrorKind::BadIndex, "vertex " + std::to_string(v));
    const int x = FixedDiagram::slot(v, 1);
    const int y = FixedDiagram::slot(v, 2);
    auto relabel = [&](int h) { return h == x ? y : (h == y ? x : h); };
    std::vector<int> partner(d.num_half_edges());
    for (int h = 0; h < d.num_half_edges(); ++h)
        partner[relabel(h)] = relabel(d.partner(h));
    return FixedDiagram(d.num_vertices(), d.num_legs(), std::move(partner), d.loop_count());
}

/// g's vertices and legs first; h's legs are relabelled k_g+1..k_g+k_h.
inline FixedDiagram disjoint_union(const FixedDiagram& g, const FixedDiagram& h) {
    const int vg = g.num_vertices(), vh = h.num_vertices();
    const int kg = g.num_legs(), kh = h.num_legs();
    const int vertices = vg + vh;
    auto map_g = [&](int x) { return g.is_leg(x) ? 3 * vertices + g.leg_label(x) - 1 : x; };
    auto map_h = [&](int x) { return h.is_leg(x) ? 3 * vertices + kg + h.leg_label(x) - 1 : 3 * vg + x; };
    std::vector<int> partner(3 * vertices + kg + kh);
    for (int x = 0; x < g.num_half_edges(); ++x) partner[map_g(x)] = map_g(g.partner(x));
    for (int x = 0; x < h.num_half_edges(); ++x) partner[map_h(x)] = map_h(h.partner(x));
    return FixedDiagram(vertices, kg + kh, std::move(partner), g.loop_count() + h.loop_count());
}

/**
 * G.H: identify the i-labelled legs of g and h and splice the incident edges.
 * Chains of leg-to-leg edges are followed through; a closed chain of legs
 * becomes one vertexless loop.
 */
inline FixedDiagram glue(const FixedDiagram& g, const FixedDiagram& h) {
    const int k = g.num_legs();
    if (h.num_legs() != k)
        throw Error(ErrorKind::LegCountMismatch, std::to_string(k) + " vs " + std::to_string(h.num_legs()));
    const int hg = g.num_half_edges();
    const int total = hg + h.num_half_edges();
    auto partner = [&](int x) { return x < hg ? g.partner(x) : hg + h.partner(x - hg); };
    auto is_leg = [&](int x) { return x < hg ? g.is_leg(x) : h.is_leg(x - hg); };
    auto through = [&](int x) {
        return x < hg ? hg + h.leg_half_edge(g.leg_label(x)) : g.leg_half_edge(h.leg_label(x - hg));
    };
    const int vg = g.num_vertices();
    const int vertices = vg + h.num_vertices();
    auto new_id = [&](int x) { return x < hg ? x : 3 * vg + (x - hg); };

    std::vector<char> visited(total, 0);
    std::vector<int> out(3 * vertices, -1);
    for (int x = 0; x < total; ++x) {
        if (is_leg(x)) continue;
        int y = partner(x);
        while (is_leg(y)) {
            visited[y] = 1;
            int z = through(y);
            visited[z] = 1;
            y = partner(z);
        }
        out[new_id(x)] = new_id(y);
    }
    int loops = g.loop_count() + h.loop_count();
    for (int x = 0; x < total; ++x) {
        if (!is_leg(x) || visited[x]) continue;
        int y = x;
        do {
            visited[y] = 1;
            int z = through(y);
            visited[z] = 1;
            y = partner(z);
        } while (y != x);
        ++loops;
    }
    return FixedDiagram(vertices, 0, std::move(out), loops);
}

/// Connected components as vertex/leg membership; returns component id per half-edge.
inline std::vector<int> component_ids(const FixedDiagram& d, int* count = nullptr) {
    const int n = d.num_half_edges();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    };
    for (int v = 0; v < d.num_vertices(); ++v) {
        unite(3 * v, 3 * v + 1);
        unite(3 * v, 3 * v + 2);
    }
    for (int x = 0; x < n; ++x) unite(x, d.partner(x));
    std::vector<int> id(n, -1);
    std::vector<int> root_to_id(n, -1);
    int next = 0;
    for (int x = 0; x < n; ++x) {
        int r = find(x);
        if (root_to_id[r] < 0) root_to_id[r] = next++;
        id[x] = root_to_id[r];
    }
    if (count) *count = next;
    return id;
}

struct Component {
    FixedDiagram diagram;
    std::vector<int> leg_labels;  // original label of each leg, in increasing order
};

/// Splits d into connected components (vertexless loops are not included).
inline std::vector<Component> components(const FixedDiagram& d) {
    int count = 0;
    const auto id = component_ids(d, &count);
    std::vector<Component> out;
    out.reserve(count);
    for (int c = 0; c < count; ++c) {
        std::vector<int> verts, labels;
        for (int v = 0; v < d.num_vertices(); ++v)
            if (id[3 * v] == c) verts.push_back(v);
        for (int l = 1; l <= d.num_legs(); ++l)
            if (id[d.leg_half_edge(l)] == c) labels.push_back(l);
        const int nv = static_cast<int>(verts.size());
        std::vector<int> new_of(d.num_half_edges(), -1);
        for (int i = 0; i < nv; ++i)
            for (int p = 0; p < 3; ++p) new_of[3 * verts[i] + p] = 3 * i + p;
        for (std::size_t i = 0; i < labels.size(); ++i)
            new_of[d.leg_half_edge(labels[i])] = 3 * nv + static_cast<int>(i);
        std::vector<int> partner(3 * nv + labels.size());
        for (int x = 0; x < d.num_half_edges(); ++x)
            if (new_of[x] >= 0)
                partner[new_of[x]] = new_of[d.partner(x)];
        out.push_back({FixedDiagram(nv, static_cast<int>(labels.size()), std::move(partner), 0), std::move(labels)});
    }
    return out;
}

inline bool is_connected(const FixedDiagram& d) {
    int count = 0;
    component_ids(d, &count);
    return count + d.loop_count() == 1;
}

/// A 3-graph: no legs and connected with at least one vertex, or exactly one vertexless loop.
inline bool is_three_graph(const FixedDiagram& d) {
    if (d.num_legs() != 0) return false;
    if (d.num_vertices() == 0) return d.loop_count() == 1;
    return d.loop_count() == 0 && is_connected(d);
}

/**
 * Composition of two 3-graphs along edges: edge uv of g (stored as (a, b), a < b,
 * u the vertex of a) and u'v' of h are replaced by uu' and vv'. With `cross`
 * set, the other join uv', vu' is used instead.
 */
inline FixedDiagram edge_connected_sum(const FixedDiagram& g, int g_edge, const FixedDiagram& h, int h_edge,
                                       bool cross = false) {
    for (const auto* d : {&g, &h})
        if (!is_three_graph(*d) || d->num_vertices() == 0)
            throw Error(ErrorKind::NotAThreeGraph, "connected sum needs 3-graphs with vertices");
    const auto eg = g.edges();
    const auto eh = h.edges();
    if (g_edge < 0 || g_edge >= static_cast<int>(eg.size()))
        throw Error(ErrorKind::BadIndex, "edge " + std::to_string(g_edge));
    if (h_edge < 0 || h_edge >= static_cast<int>(eh.size()))
        throw Error(ErrorKind::BadIndex, "edge " + std::to_string(h_edge));
    auto [a, b] = eg[g_edge];
    auto [a2, b2] = eh[h_edge];
    if (g.vertex_of(a) == g.vertex_of(b)) throw Error(ErrorKind::LoopEdge, "edge " + std::to_string(g_edge));
    if (h.vertex_of(a2) == h.vertex_of(b2)) throw Error(ErrorKind::LoopEdge, "edge " + std::to_string(h_edge));

    const int off = 3 * g.num_vertices();
    std::vector<int> partner(3 * (g.num_vertices() + h.num_vertices()));
    for (int x = 0; x < g.num_half_edges(); ++x) partner[x] = g.partner(x);
    for (int x = 0; x < h.num_half_edges(); ++x) partner[off + x] = off + h.partner(x);
    auto join = [&](int x, int y) {
        partner[x] = y;
        partner[y] = x;
    };
    if (!cross) {
        join(a, off + a2);
        join(b, off + b2);
    } else {
        join(a, off + b2);
        join(b, off + a2);
    }
    return FixedDiagram(g.num_vertices() + h.num_vertices(), 0, std::move(partner), 0);
}

}  // namespace weightsys

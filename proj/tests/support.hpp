// Shared helpers for the unit tests. The oracles here are deliberately naive
// and independent of the library's canonical forms and contraction code.
#pragma once

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <vector>

#include "weightsys.hpp"

namespace wtest {

using namespace weightsys;

#define EXPECT_ERROR_KIND(stmt, expected_kind)                                           \
    do {                                                                                 \
        try {                                                                            \
            stmt;                                                                        \
            ADD_FAILURE() << "expected " << to_string(expected_kind) << ", nothing thrown"; \
        } catch (const ::weightsys::Error& e) {                                          \
            EXPECT_EQ(e.kind(), expected_kind) << e.what();                              \
        }                                                                                \
    } while (0)

/// Renumbers vertices by `perm` (new index of old vertex v is perm[v]) and
/// rotates each old vertex's triple by rot[v] positions.
inline FixedDiagram relabel(const FixedDiagram& d, const std::vector<int>& perm, const std::vector<int>& rot) {
    const int nv = d.num_vertices();
    auto map = [&](int h) {
        if (d.is_leg(h)) return h;
        const int v = d.vertex_of(h);
        return 3 * perm[v] + (d.position_of(h) + 3 - rot[v]) % 3;
    };
    std::vector<int> partner(d.num_half_edges());
    for (int h = 0; h < d.num_half_edges(); ++h) partner[map(h)] = map(d.partner(h));
    return FixedDiagram(nv, d.num_legs(), partner, d.loop_count());
}

/// Isomorphism by exhaustive search over vertex bijections and rotations.
inline bool brute_isomorphic(const FixedDiagram& a, const FixedDiagram& b) {
    if (a.num_vertices() != b.num_vertices() || a.num_legs() != b.num_legs() || a.loop_count() != b.loop_count())
        return false;
    const int nv = a.num_vertices();
    std::vector<int> perm(nv);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<int> rot(nv, 0);
        for (;;) {
            if (relabel(a, perm, rot) == b) return true;
            int i = 0;
            while (i < nv && ++rot[i] == 3) rot[i++] = 0;
            if (i == nv) break;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Number of cycles of a 0-based permutation, by following orbits.
inline int naive_cycles(const std::vector<int>& p) {
    std::vector<bool> seen(p.size());
    int c = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        ++c;
        for (std::size_t j = i; !seen[j]; j = p[j]) seen[j] = true;
    }
    return c;
}

/// Sign by counting inversions.
inline int inversion_sign(const std::vector<int>& p) {
    int inv = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) inv += p[i] > p[j];
    return inv % 2 == 0 ? 1 : -1;
}

inline std::vector<std::vector<int>> all_permutations(int k) {
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

/// A small corpus of 3-graphs used across tests.
inline std::vector<FixedDiagram> small_three_graphs() {
    std::vector<FixedDiagram> out;
    for (const auto& g : enumerate_fixed_diagrams(0, 4).items())
        if (g.num_vertices() > 0 && is_connected(g)) out.push_back(g);
    return out;
}

inline double cabs(const Complex& z) { return std::abs(z); }

}  // namespace wtest

#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "weightsys/canonical.hpp"
#include "weightsys/diagram.hpp"
#include "weightsys/error.hpp"

namespace weightsys {

/// Diagrams with a common leg count, deduplicated by canonical code and sorted by it.
class DiagramCorpus {
public:
    DiagramCorpus() = default;

    DiagramCorpus(int legs, const std::vector<FixedDiagram>& diagrams) : legs_(legs) {
        std::vector<std::pair<std::string, FixedDiagram>> keyed;
        keyed.reserve(diagrams.size());
        for (const auto& d : diagrams) {
            if (d.num_legs() != legs)
                throw Error(ErrorKind::LegCountMismatch,
                            "corpus has " + std::to_string(legs) + " legs, diagram has " + std::to_string(d.num_legs()));
            keyed.emplace_back(canonical_form(d), d);
        }
        adopt(std::move(keyed));
    }

    /// Takes (code, diagram) pairs whose codes are already canonical.
    static DiagramCorpus from_coded(int legs, std::vector<std::pair<std::string, FixedDiagram>> keyed) {
        DiagramCorpus c;
        c.legs_ = legs;
        c.adopt(std::move(keyed));
        return c;
    }

    int legs() const noexcept { return legs_; }
    std::size_t size() const noexcept { return items_.size(); }
    bool empty() const noexcept { return items_.empty(); }
    const std::vector<FixedDiagram>& items() const& noexcept { return items_; }
    const std::vector<std::string>& codes() const& noexcept { return codes_; }
    // Temporaries hand over their storage so range-for over a returned corpus is safe.
    std::vector<FixedDiagram> items() && noexcept { return std::move(items_); }
    std::vector<std::string> codes() && noexcept { return std::move(codes_); }
    const FixedDiagram& operator[](std::size_t i) const { return items_[i]; }

private:
    void adopt(std::vector<std::pair<std::string, FixedDiagram>> keyed) {
        std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        keyed.erase(std::unique(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first == b.first; }),
                    keyed.end());
        for (auto& [code, d] : keyed) {
            codes_.push_back(std::move(code));
            items_.push_back(std::move(d));
        }
    }

    int legs_ = 0;
    std::vector<FixedDiagram> items_;
    std::vector<std::string> codes_;
};

inline constexpr std::uint64_t kMatchingLimit = 1'000'000;
inline constexpr std::size_t kCorpusLimit = 100'000;
inline constexpr std::uint64_t kEnumerationWorkLimit = 50'000'000;

/// (m-1)!! for even m; saturates at UINT64_MAX.
inline std::uint64_t double_factorial_odd(int m) {
    std::uint64_t r = 1;
    for (int i = m - 1; i > 1; i -= 2) {
        if (r > UINT64_MAX / static_cast<std::uint64_t>(i)) return UINT64_MAX;
        r *= static_cast<std::uint64_t>(i);
    }
    return r;
}

/**
 * Calls visit(partner) for every perfect matching of {0..m-1}, as an involution
 * array, in lexicographic order: the smallest unmatched point is paired with each
 * larger unmatched point in increasing order.
 */
template <class Visit>
void for_each_matching(int m, Visit&& visit) {
    if (m % 2 != 0) return;
    std::vector<int> partner(m, -1);
    auto rec = [&](auto&& self, int first) -> void {
        while (first < m && partner[first] >= 0) ++first;
        if (first == m) {
            visit(static_cast<const std::vector<int>&>(partner));
            return;
        }
        for (int j = first + 1; j < m; ++j) {
            if (partner[j] >= 0) continue;
            partner[first] = j;
            partner[j] = first;
            self(self, first + 1);
            partner[first] = -1;
            partner[j] = -1;
        }
    };
    rec(rec, 0);
}

/// Perfect matching on [m] as 1-based pairs (a, b) with a < b, sorted by a.
using Matching = std::vector<std::pair<int, int>>;

inline std::vector<Matching> enumerate_matchings(int m) {
    if (m < 0 || m % 2 != 0) throw Error(ErrorKind::BadIndex, "matching on an odd set of size " + std::to_string(m));
    if (double_factorial_odd(m) > kMatchingLimit)
        throw Error(ErrorKind::TooLarge, "(" + std::to_string(m - 1) + ")!! matchings");
    std::vector<Matching> out;
    for_each_matching(m, [&](const std::vector<int>& partner) {
        Matching mt;
        for (int i = 0; i < m; ++i)
            if (i < partner[i]) mt.emplace_back(i + 1, partner[i] + 1);
        out.push_back(std::move(mt));
    });
    return out;
}

/// M.H where M is read as a 3k-legged diagram of leg-to-leg edges and H is tri_star(k).
inline FixedDiagram matching_glue(const Matching& matching, int k) {
    DiagramBuilder b(0, 3 * k);
    for (auto [x, y] : matching) b.join(b.leg(x), b.leg(y));
    return glue(b.build(), tri_star(k));
}

struct EnumerationOptions {
    /// Keep only diagrams in which every component carries at least one leg.
    bool every_component_has_leg = false;
};

namespace detail {

inline bool every_component_has_leg(const FixedDiagram& d) {
    int count = 0;
    const auto id = component_ids(d, &count);
    std::vector<char> has(count, 0);
    for (int l = 1; l <= d.num_legs(); ++l) has[id[d.leg_half_edge(l)]] = 1;
    return std::all_of(has.begin(), has.end(), [](char c) { return c != 0; });
}

}  // namespace detail

/**
 * All k-legged fixed diagrams without vertexless loops and with at most
 * `max_vertices` vertices, up to leg-fixing, orientation-preserving
 * isomorphism, sorted by canonical code.
 */
inline DiagramCorpus enumerate_fixed_diagrams(int k, int max_vertices, const EnumerationOptions& opt = {}) {
    if (k < 0 || max_vertices < 0) throw Error(ErrorKind::BadIndex, "negative size");
    std::uint64_t work = 0;
    for (int v = 0; v <= max_vertices; ++v)
        if ((3 * v + k) % 2 == 0) work += double_factorial_odd(3 * v + k);
    if (work > kEnumerationWorkLimit)
        throw Error(ErrorKind::TooLarge, std::to_string(work) + " matchings to canonicalise");

    std::unordered_map<std::string, FixedDiagram> seen;
    for (int v = 0; v <= max_vertices; ++v) {
        if ((3 * v + k) % 2 != 0) continue;
        for_each_matching(3 * v + k, [&](const std::vector<int>& partner) {
            FixedDiagram d(v, k, partner, 0);
            if (opt.every_component_has_leg && !detail::every_component_has_leg(d)) return;
            auto code = canonical_form(d);
            if (seen.find(code) == seen.end()) {
                if (seen.size() >= kCorpusLimit)
                    throw Error(ErrorKind::TooLarge, "more than " + std::to_string(kCorpusLimit) + " diagrams");
                seen.emplace(std::move(code), std::move(d));
            }
        });
    }
    std::vector<std::pair<std::string, FixedDiagram>> keyed(seen.begin(), seen.end());
    return DiagramCorpus::from_coded(k, std::move(keyed));
}

// ---------------------------------------------------------------------------
// Seeded random diagrams. Bounded draws use a plain modulus so that sequences
// are identical across standard library implementations.

inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

/// Uniform random perfect matching of the 3v+k half-edges.
inline FixedDiagram random_fixed_diagram(std::mt19937_64& rng, int k, int vertices) {
    const int m = 3 * vertices + k;
    if (m % 2 != 0) throw Error(ErrorKind::BadIndex, "odd half-edge count " + std::to_string(m));
    std::vector<int> perm(m);
    for (int i = 0; i < m; ++i) perm[i] = i;
    for (int i = m - 1; i > 0; --i)
        std::swap(perm[i], perm[draw_below(rng, static_cast<std::uint64_t>(i) + 1)]);
    std::vector<int> partner(m);
    for (int i = 0; i < m; i += 2) {
        partner[perm[i]] = perm[i + 1];
        partner[perm[i + 1]] = perm[i];
    }
    return FixedDiagram(vertices, k, std::move(partner), 0);
}

/**
 * `count` random k-legged diagrams (duplicates allowed) whose vertex count is
 * drawn uniformly from the admissible values in [0, max_vertices].
 */
inline std::vector<FixedDiagram> random_diagrams(std::uint64_t seed, std::size_t count, int k, int max_vertices,
                                                 int min_vertices = 0) {
    std::vector<int> sizes;
    for (int v = min_vertices; v <= max_vertices; ++v)
        if ((3 * v + k) % 2 == 0) sizes.push_back(v);
    if (sizes.empty()) throw Error(ErrorKind::BadIndex, "no admissible vertex count");
    std::mt19937_64 rng(seed);
    std::vector<FixedDiagram> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const int v = sizes[draw_below(rng, sizes.size())];
        out.push_back(random_fixed_diagram(rng, k, v));
    }
    return out;
}

}  // namespace weightsys

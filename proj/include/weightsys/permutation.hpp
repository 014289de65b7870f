#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

namespace weightsys {

/// Number of cycles of a 0-based permutation (fixed points included).
inline int cycle_count(std::span<const int> pi) {
    std::vector<char> seen(pi.size(), 0);
    int cycles = 0;
    for (std::size_t i = 0; i < pi.size(); ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(pi[j])) seen[j] = 1;
    }
    return cycles;
}

/// +1 or -1 from cycle parity.
inline int permutation_sign(std::span<const int> pi) {
    return (static_cast<int>(pi.size()) - cycle_count(pi)) % 2 == 0 ? 1 : -1;
}

inline std::uint64_t factorial(int k) {
    std::uint64_t f = 1;
    for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

/// The rank-th permutation of [0,k) in lexicographic order.
inline std::vector<int> unrank_permutation(int k, std::uint64_t rank) {
    std::vector<int> pool(k);
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<int> out;
    out.reserve(k);
    for (int i = k; i >= 1; --i) {
        const std::uint64_t f = factorial(i - 1);
        const auto pick = static_cast<std::size_t>(rank / f);
        rank %= f;
        out.push_back(pool[pick]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return out;
}

/// Falling factorial n (n-1) ... (n-k+1).
inline long falling_factorial(long n, int k) {
    long r = 1;
    for (int i = 0; i < k; ++i) r *= n - i;
    return r;
}

}  // namespace weightsys

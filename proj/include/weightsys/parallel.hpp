#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace weightsys {

/**
 * Splits [0, count) into at most `threads` contiguous chunks, runs
 * `chunk(begin, end)` for each, and returns the results in chunk order. The
 * chunking depends only on `count` and `threads`.
 */
template <class Result, class Fn>
std::vector<Result> parallel_chunks(std::uint64_t count, unsigned threads, Fn chunk) {
    threads = std::max(1u, threads);
    const std::uint64_t pieces = std::min<std::uint64_t>(threads, std::max<std::uint64_t>(count, 1));
    std::vector<Result> results(pieces);
    auto bounds = [&](std::uint64_t i) { return count * i / pieces; };
    if (pieces == 1) {
        results[0] = chunk(std::uint64_t{0}, count);
        return results;
    }
    std::vector<std::exception_ptr> errors(pieces);
    std::vector<std::thread> pool;
    pool.reserve(pieces);
    for (std::uint64_t i = 0; i < pieces; ++i)
        pool.emplace_back([&, i] {
            try {
                results[i] = chunk(bounds(i), bounds(i + 1));
            } catch (...) {
                errors[i] = std::current_exception();
            }
        });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

}  // namespace weightsys

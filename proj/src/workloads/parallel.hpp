#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace itbatch::detail {

// Splits [0, count) into contiguous chunks, one per worker. fn(begin, end)
// must only write cells it owns.
template <typename Fn>
void parallel_for(std::size_t count, unsigned workers, Fn&& fn) {
    const std::size_t n = std::min<std::size_t>(std::max(workers, 1u), count);
    if (n <= 1) {
        fn(std::size_t{0}, count);
        return;
    }
    const std::size_t chunk = (count + n - 1) / n;
    std::vector<std::jthread> pool;
    pool.reserve(n - 1);
    for (std::size_t w = 1; w < n; ++w) {
        const std::size_t begin = std::min(count, w * chunk);
        const std::size_t end = std::min(count, begin + chunk);
        pool.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    fn(std::size_t{0}, std::min(count, chunk));
}

}  // namespace itbatch::detail

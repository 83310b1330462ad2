#include "skoslint/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace skoslint {

std::vector<std::size_t> sample_indices(std::size_t n, double rate, std::uint64_t seed) {
    std::vector<std::size_t> indices(n);
    std::iota(indices.begin(), indices.end(), std::size_t{0});
    if (n == 0 || rate >= 1.0) return indices;

    auto k = static_cast<std::size_t>(std::llround(rate * static_cast<double>(n)));
    k = std::min(n, std::max<std::size_t>(k, 1));

    // Partial Fisher-Yates with raw engine output; std::uniform_int_distribution
    // is not reproducible across standard libraries.
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t j = i + static_cast<std::size_t>(rng() % (n - i));
        std::swap(indices[i], indices[j]);
    }
    indices.resize(k);
    std::sort(indices.begin(), indices.end());
    return indices;
}

std::size_t extrapolate_total(std::size_t count, double rate) {
    if (rate >= 1.0 || rate <= 0.0) return count;
    return static_cast<std::size_t>(std::llround(static_cast<double>(count) / rate));
}

}  // namespace skoslint

#pragma once

#include <cstdint>
#include <vector>

namespace skoslint {

// Deterministic seeded subsample: returns sorted indices into [0, n).
// rate >= 1 selects everything; otherwise round(rate*n) items, at least
// one when n > 0. mt19937_64 keeps the selection stable across platforms.
std::vector<std::size_t> sample_indices(std::size_t n, double rate, std::uint64_t seed);

// round(count / rate): scales a subsampled count back to the full set.
std::size_t extrapolate_total(std::size_t count, double rate);

}  // namespace skoslint

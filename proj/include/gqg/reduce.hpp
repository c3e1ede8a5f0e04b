#pragma once

#include <span>
#include <vector>

namespace gqg {

// Fixed pairwise (recursive halving) summation. Deterministic independent of
// thread count: callers materialize per-term values, this reduces serially.
double pairwise_sum(std::span<const double> terms);

inline double pairwise_sum(const std::vector<double>& terms) {
    return pairwise_sum(std::span<const double>(terms));
}

}  // namespace gqg

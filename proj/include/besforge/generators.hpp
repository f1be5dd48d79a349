#pragma once

#include "besforge/core.hpp"

#include <cstdint>

namespace besforge {

/// Parts A = B = C = Z_m with edges (a, b, a + b mod m): m^2 edges, linear.
TripartiteLinearSystem group_system(int m);

struct RandomLinearResult
{
    TripartiteLinearSystem system;
    int requested = 0;
    int achieved = 0;
};

inline constexpr int random_linear_rejection_limit = 1'000'000;

/// Greedy random partial system: a uniformly drawn tripartite triple is kept
/// iff none of its three pairs is already covered. Stops at target_edges or
/// after random_linear_rejection_limit consecutive rejections.
RandomLinearResult random_linear(int na, int nb, int nc, int target_edges, std::uint64_t seed);

} // namespace besforge

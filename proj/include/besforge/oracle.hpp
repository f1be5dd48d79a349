#pragma once

// Exact minimum span of e-edge configurations, for small hosts.

#include "besforge/core.hpp"

#include <cstdint>

namespace besforge {

struct MinSpanResult
{
    int span = 0;
    Configuration witness;
    std::uint64_t nodes = 0; // search nodes visited
};

inline constexpr std::uint64_t default_span_guard = 10'000'000;

/// Branch and bound over edges in lexicographic order, pruning any partial
/// selection whose union already reaches the incumbent. The witness is the
/// lexicographically first optimal subset regardless of `threads`.
/// Throws ParameterError when e > |E| or C(|E|, e) > guard.
MinSpanResult min_span(const TripleSystem & host, int e, std::uint64_t guard = default_span_guard, int threads = 1);
MinSpanResult min_span(const TripartiteLinearSystem & host, int e, std::uint64_t guard = default_span_guard,
                       int threads = 1);

/// True iff some e edges span at most v vertices; stops at the first witness.
bool exists_config(const TripleSystem & host, int v, int e, std::uint64_t guard = default_span_guard);
bool exists_config(const TripartiteLinearSystem & host, int v, int e, std::uint64_t guard = default_span_guard);

} // namespace besforge

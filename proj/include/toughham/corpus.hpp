#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "toughham/graph.hpp"
#include "toughham/rational.hpp"

namespace toughham {

// All non-isomorphic simple graphs on exactly n vertices, by canonical
// augmentation: each class on n-1 vertices is extended by one vertex with
// every possible neighborhood, and children are deduplicated by the
// minimum edge-mask over all vertex permutations. Practical for n <= 7
// (the counts 1, 2, 4, 11, 34, 156, 1044 are a built-in cross-check for
// tests); n = 8 takes minutes.
std::vector<Graph> enumerate_graphs(int n);

// splitmix64 of (seed, index): the per-graph seed derivation used by the
// deterministic random streams.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

// Deterministic G(n, p) stream: graph i has n = n_lo + (i mod span) and p
// cycling through ps once per span, seeded with derive_seed(seed, i).
std::vector<Graph> gnp_stream(int n_lo, int n_hi, const std::vector<Rational>& ps,
                              std::uint64_t seed, long count);

std::vector<Graph> load_graph6_file(const std::string& path);

}  // namespace toughham

#pragma once

#include <cstdint>

#include "toughham/graph.hpp"
#include "toughham/rational.hpp"

namespace toughham {

Graph complete(int n);

// Sides are contiguous label blocks, side A = {0..a-1} first.
Graph complete_bipartite(int a, int b);

Graph cycle_graph(int n);   // requires n >= 3
Graph path_graph(int n);
Graph petersen();

// g2's labels are shifted up by g1.n().
Graph disjoint_union(const Graph& g1, const Graph& g2);

// The forbidden pattern: one edge {0,1} plus k isolated vertices.
Graph p2_union_kp1(int k);

// Erdos-Renyi sample. Deterministic function of (n, p, seed): edges are
// drawn for pairs (u, v), u < v, in row-major order from std::mt19937_64
// (whose output sequence is fixed by the standard), with the exact
// threshold test draw * p.den() < p.num() * 2^64.
Graph random_gnp(int n, const Rational& p, std::uint64_t seed);

}  // namespace toughham

#pragma once

#include <optional>

#include "toughham/graph.hpp"
#include "toughham/structure.hpp"

namespace toughham {

// Brute-force reference implementations. Deliberately simple and written
// against the definitions, not the solver code paths: the test suites and
// the counterexample hunt use them as independent ground truth. All are
// exponential; callers keep n small (the full-subset routines cap at 22).

// Minimum |S| / c(G-S) over all 2^n subsets with c(G-S) >= 2; same
// tie-break as toughness(): ratio, then |S|, then lexicographic.
ToughnessResult brute_force_toughness(const Graph& g);

// Maximum independent set by scanning all subsets, lex-smallest witness.
std::pair<int, VertexSet> brute_force_independence(const Graph& g);

// Smallest vertex set whose removal disconnects g (or n-1 for complete).
int brute_force_connectivity(const Graph& g);

// Hamiltonicity by permutation backtracking without the production
// solver's pruning machinery.
bool brute_force_hamiltonian(const Graph& g);

// Length of a longest cycle by exhaustive simple-path search; 0 if acyclic.
int brute_force_longest_cycle_length(const Graph& g);

}  // namespace toughham

#pragma once

#include <cstdint>
#include <vector>

namespace fishcat {

// All maximal cliques of a graph on at most 64 vertices given as adjacency
// bitmasks. Bron-Kerbosch with pivoting; output order is deterministic.
std::vector<std::uint64_t> maximal_cliques(const std::vector<std::uint64_t>& adj);

// Size of the largest clique (0 for the empty graph on 0 vertices).
int max_clique_size(const std::vector<std::uint64_t>& adj);

}  // namespace fishcat

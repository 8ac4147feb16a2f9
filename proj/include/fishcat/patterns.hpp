#pragma once

#include <string>
#include <vector>

#include "fishcat/matching.hpp"

namespace fishcat {

// A forbidden configuration together with its conventional name.
struct Pattern {
    Matching m;
    std::string name;
};

// The five length-4 forbidden configurations P1..P5.
Pattern pattern_p(int i);

// The four infinite families generalizing P2..P5:
//   family 2 at k: the k-chain
//   family 3 at k: arc, then a disjoint (k-2)-chain, then a disjoint arc
//   family 4 at k: arc followed by a disjoint (k-1)-chain
//   family 5 at k: (k-1)-chain followed by a disjoint arc
// k = 1 degenerates to a single arc for every family; family 3 at k = 2 is
// taken as two disjoint arcs. Throws BadFamilyIndex.
Pattern build_family(int i, int k);

// "P1".."P5", "P2k:7".."P5k:7", or a custom arc list such as "1-3,2-4".
Pattern parse_pattern(const std::string& name);

// The k arcs a_1 < a_2 < b_1 < a_3 < b_2 < ... < a_k < b_{k-1} < b_k.
Matching chain_matching(int k);

// Sub-matching induced by a set of arc indices, endpoints re-ranked.
Matching sub_matching(const Matching& m, const std::vector<int>& arc_indices);

// True iff some |Q|-subset of arcs of m, with all endpoints taken in relative
// order, is order-isomorphic to q.
bool contains(const Matching& m, const Matching& q);
bool contains(const Matching& m, const Pattern& q);

// Stoimenow matchings of size n avoiding q, in enumeration order.
std::vector<Matching> enumerate_avoiding(int n, const Pattern& q);
void for_each_avoiding(int n, const Pattern& q,
                       const std::function<bool(const Matching&)>& visit);

}  // namespace fishcat

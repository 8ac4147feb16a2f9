#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fishcat/matching.hpp"

namespace fishcat {

// Strict partial order on {0, ..., n-1}, n <= 64, stored as up-set bitmasks.
// Construction validates irreflexivity and transitivity.
class Poset {
  public:
    Poset() = default;
    Poset(int n, const std::vector<std::pair<int, int>>& relations);

    // {"n":k,"relations":[[i,j],...]} with 1-based elements, i < j in the order.
    static Poset from_json(const std::string& text);
    std::string json() const;

    int size() const { return n_; }
    bool less(int i, int j) const { return (up_[i] >> j) & 1; }
    std::uint64_t up_mask(int i) const { return up_[i]; }
    std::uint64_t down_mask(int i) const { return down_[i]; }
    std::vector<std::pair<int, int>> relations() const;

    friend bool operator==(const Poset&, const Poset&) = default;

  private:
    int n_ = 0;
    std::vector<std::uint64_t> up_;    // up_[i] = elements strictly above i
    std::vector<std::uint64_t> down_;  // down_[i] = elements strictly below i
};

// Poset on the arcs of m with arc_i < arc_j iff closer(i) < opener(j).
Poset omega(const Matching& m);

// True iff the distinct strict down-sets are linearly ordered by inclusion.
bool is_two_plus_two_free(const Poset& p);

// Index of each element's strict down-set (resp. up-set) in the inclusion
// chain of distinct down-sets (resp. up-sets). Throws Not22Free.
std::vector<int> down_levels(const Poset& p);
std::vector<int> up_levels(const Poset& p);

// Isomorphism-invariant key: sorted multiset of (downLevel, upLevel) pairs.
using CanonicalForm = std::vector<std::pair<int, int>>;
CanonicalForm canonical_form(const Poset& p);

// Rebuilds a poset from its canonical form; i < j iff the implied right
// endpoint of i precedes the level of j.
Poset poset_from_canonical_form(const CanonicalForm& form);

struct PosetStats {
    int mag = 0;  // distinct strict down-sets
    int min = 0;  // minimal elements
    int h = 0;    // largest chain
    int w = 0;    // largest antichain
    int smc = 0;  // size of the shortest maximal chain
    int ssd = 0;  // summands in the ordinal sum decomposition
};
PosetStats poset_stats(const Poset& p);

// True iff some |Q|-subset of p induces a subposet isomorphic to q
// (relations and incomparabilities both match).
bool contains_induced(const Poset& p, const Poset& q);

// Exhaustive isomorphism test by backtracking (test oracle; small n only).
bool brute_force_isomorphic(const Poset& a, const Poset& b);

Poset chain_poset(int n);
Poset antichain_poset(int n);
Poset poset_three_plus_one();  // 3-chain plus an incomparable element
Poset poset_n_shape();         // a < c, a < d, b < d
Poset poset_two_plus_two();
Poset ordinal_sum(const Poset& a, const Poset& b);

enum class PosetAvoid { None, ThreePlusOne, NShape };

// Distinct-up-to-isomorphism images of the matching poset map, deduplicated
// by canonical form, optionally filtered by induced-pattern avoidance.
std::vector<Poset> enumerate_posets(int n, PosetAvoid avoid = PosetAvoid::None);

}  // namespace fishcat

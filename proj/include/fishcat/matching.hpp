#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fishcat/error.hpp"

namespace fishcat {

// An arc of a perfect matching on {0, ..., 2n-1}; open < close.
struct Arc {
    int open = 0;
    int close = 0;
    friend bool operator==(const Arc&, const Arc&) = default;
};

// How an (unordered) pair of arcs sits relative to each other.
enum class ArcRelation { Crossing, Nesting, Disjoint };

// Perfect matching of {0, ..., 2n-1} stored as a partner involution.
// External text/JSON formats are 1-based ("a-b,a-b" and {"n":k,"arcs":[[a,b],...]}),
// all in-memory positions are 0-based.
class Matching {
  public:
    Matching() = default;

    // Validates: every position used exactly once, openers before closers.
    // Throws DuplicatePosition / NotPerfect / OpenerAfterCloser.
    static Matching from_arcs(const std::vector<Arc>& arcs);
    static Matching from_partner(std::vector<int> partner);

    // "a-b,a-b,..." with 1-based endpoints; "" is the empty matching.
    static Matching parse(const std::string& text);
    std::string str() const;

    // {"n":k,"arcs":[[a,b],...]} with 1-based endpoints.
    static Matching from_json(const std::string& text);
    std::string json() const;

    int size() const { return static_cast<int>(partner_.size()) / 2; }
    int points() const { return static_cast<int>(partner_.size()); }
    int partner(int pos) const { return partner_[pos]; }
    bool is_opener(int pos) const { return partner_[pos] > pos; }
    const std::vector<int>& partner_word() const { return partner_; }

    // Arcs sorted by opener.
    std::vector<Arc> arcs() const;

    friend bool operator==(const Matching&, const Matching&) = default;
    friend bool operator<(const Matching& a, const Matching& b) {
        return a.partner_ < b.partner_;
    }

  private:
    std::vector<int> partner_;  // involution without fixed points
};

ArcRelation classify(const Arc& a, const Arc& b);

// True iff no nested arc pair has adjacent openers (Type I) or adjacent
// closers (Type II).
bool is_stoimenow(const Matching& m);

// Streams every Stoimenow matching with n arcs exactly once, in lexicographic
// order of the position word (a closer sorts before an opener; closers are
// keyed by the opener of the arc they close, ascending). Visitor returns
// false to stop early.
void for_each_stoimenow(int n, const std::function<bool(const Matching&)>& visit);
std::vector<Matching> enumerate_stoimenow(int n);

// m1 followed by m2 shifted past it.
Matching merge(const Matching& m1, const Matching& m2);

// Irreducible blocks: splits at every balanced prefix, each re-indexed from 0.
std::vector<Matching> blocks(const Matching& m);
int stat_bl(const Matching& m);

// Position reversal p -> 2n-1-p. Preserves the Stoimenow property.
Matching reverse(const Matching& m);

// Largest k such that m contains k pairwise crossing arcs.
int stat_cr(const Matching& m);
// Largest k such that m contains k pairwise disjoint arcs (left to right).
int stat_nr(const Matching& m);

// The maximal crossings of m: inclusion-maximal sets of pairwise intersecting
// arcs (crossing or nesting), as arc-index bitmasks in a deterministic order.
// On nonnesting matchings these are exactly the maximal pairwise-crossing
// sets; in general the intersecting reading is the one that transports to
// maximal antichains (equivalently, distinct strict down-sets) of the arc
// order. Throws TooLarge past the 60-arc bitmask bound.
std::vector<std::uint64_t> maximal_crossings(const Matching& m);
int stat_mcr(const Matching& m);

// Inclusion-maximal sets of pairwise crossing arcs in the strict sense.
// Coincides with maximal_crossings on P1- and P2-avoiders but not on all
// Stoimenow matchings (first divergence at n=6).
std::vector<std::uint64_t> maximal_pure_crossings(const Matching& m);

// Number of openers strictly before the first closer.
int stat_fcr(const Matching& m);

// For each arc [a,b], the set of arcs whose closers precede a (bitmask).
std::vector<std::uint64_t> downset_signatures(const Matching& m);
int distinct_signature_count(const Matching& m);

struct MatchStats {
    int cr = 0;
    int nr = 0;
    int mcr = 0;
    int fcr = 0;
    int bl = 0;
};
MatchStats match_stats(const Matching& m);

}  // namespace fishcat

#include "doctest.h"

#include <algorithm>
#include <set>

#include "fishcat/matching.hpp"

using namespace fishcat;

namespace {

// Subset-enumeration oracles, independent of the clique machinery.

bool pairwise(const std::vector<Arc>& arcs, const std::vector<int>& subset, ArcRelation want) {
    for (std::size_t i = 0; i < subset.size(); ++i)
        for (std::size_t j = i + 1; j < subset.size(); ++j)
            if (classify(arcs[subset[i]], arcs[subset[j]]) != want) return false;
    return true;
}

std::vector<std::vector<int>> all_subsets(int n) {
    std::vector<std::vector<int>> out;
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1) s.push_back(i);
        out.push_back(s);
    }
    return out;
}

int oracle_largest(const Matching& m, ArcRelation want) {
    std::vector<Arc> arcs = m.arcs();
    int best = 0;
    for (const auto& s : all_subsets(m.size()))
        if (!s.empty() && pairwise(arcs, s, want)) best = std::max(best, static_cast<int>(s.size()));
    return best;
}

bool pairwise_intersecting(const std::vector<Arc>& arcs, const std::vector<int>& subset) {
    for (std::size_t i = 0; i < subset.size(); ++i)
        for (std::size_t j = i + 1; j < subset.size(); ++j)
            if (classify(arcs[subset[i]], arcs[subset[j]]) == ArcRelation::Disjoint) return false;
    return true;
}

std::set<std::vector<int>> oracle_maximal(const Matching& m, bool pure_crossing) {
    std::vector<Arc> arcs = m.arcs();
    std::vector<std::vector<int>> good;
    for (const auto& s : all_subsets(m.size())) {
        if (s.empty()) continue;
        bool ok = pure_crossing ? pairwise(arcs, s, ArcRelation::Crossing)
                                : pairwise_intersecting(arcs, s);
        if (ok) good.push_back(s);
    }
    std::set<std::vector<int>> maximal;
    for (const auto& s : good) {
        bool is_max = true;
        for (const auto& t : good)
            if (t.size() > s.size() && std::includes(t.begin(), t.end(), s.begin(), s.end()))
                is_max = false;
        if (is_max) maximal.insert(s);
    }
    return maximal;
}

std::set<std::vector<int>> oracle_maximal_crossings(const Matching& m) {
    return oracle_maximal(m, false);
}

std::set<std::vector<int>> masks_to_sets(const std::vector<std::uint64_t>& masks) {
    std::set<std::vector<int>> out;
    for (std::uint64_t mask : masks) {
        std::vector<int> s;
        for (int i = 0; i < 64; ++i)
            if ((mask >> i) & 1) s.push_back(i);
        out.insert(s);
    }
    return out;
}

const std::vector<long long> kFishburn = {1, 1, 2, 5, 15, 53, 217, 1014};

}  // namespace

TEST_CASE("parsing and validation") {
    Matching m = Matching::parse("1-3,2-4");
    CHECK(m.size() == 2);
    CHECK(m.arcs() == std::vector<Arc>{{0, 2}, {1, 3}});
    CHECK(Matching::parse("1-3,2-4,5-6,7-8").str() == "1-3,2-4,5-6,7-8");
    CHECK_THROWS_WITH_AS(Matching::parse("1-3,2-3"), doctest::Contains("DuplicatePosition"), Error);
    CHECK_THROWS_WITH_AS(Matching::parse("1-2,4-6"), doctest::Contains("NotPerfect"), Error);
    CHECK_THROWS_WITH_AS(Matching::parse("3-1,2-4"), doctest::Contains("OpenerAfterCloser"), Error);
    CHECK(Matching::parse("").size() == 0);
}

TEST_CASE("json round trip") {
    Matching m = Matching::parse("1-3,2-4,5-6,7-8");
    CHECK(m.json() == R"({"arcs":[[1,3],[2,4],[5,6],[7,8]],"n":4})");
    CHECK(Matching::from_json(m.json()) == m);
    CHECK(Matching::from_json(Matching{}.json()) == Matching{});
}

TEST_CASE("stoimenow recognition") {
    CHECK_FALSE(is_stoimenow(Matching::parse("1-4,2-3")));
    CHECK(is_stoimenow(Matching::parse("1-3,2-4")));
    CHECK_FALSE(is_stoimenow(Matching::parse("1-5,2-4,3-6")));
    CHECK(is_stoimenow(Matching{}));
}

TEST_CASE("enumeration counts and order") {
    for (int n = 0; n <= 7; ++n)
        CHECK(static_cast<long long>(enumerate_stoimenow(n).size()) == kFishburn[n]);
    auto m3 = enumerate_stoimenow(3);
    REQUIRE(m3.size() == 5);
    CHECK(m3.front() == Matching::parse("1-2,3-4,5-6"));
    CHECK(m3[1] == Matching::parse("1-2,3-5,4-6"));
    CHECK(m3[2] == Matching::parse("1-3,2-4,5-6"));
    CHECK(m3[3] == Matching::parse("1-3,2-5,4-6"));
    CHECK(m3.back() == Matching::parse("1-4,2-5,3-6"));
    auto m0 = enumerate_stoimenow(0);
    REQUIRE(m0.size() == 1);
    CHECK(m0[0].size() == 0);
}

TEST_CASE("every enumerated matching is stoimenow and distinct") {
    for (int n = 0; n <= 6; ++n) {
        auto ms = enumerate_stoimenow(n);
        std::set<Matching> distinct(ms.begin(), ms.end());
        CHECK(distinct.size() == ms.size());
        for (const Matching& m : ms) CHECK(is_stoimenow(m));
    }
}

TEST_CASE("merge") {
    Matching m1 = Matching::parse("1-3,2-4");
    Matching m2 = Matching::parse("1-2,3-4");
    CHECK(merge(m1, m2) == Matching::parse("1-3,2-4,5-6,7-8"));
    CHECK(merge(Matching{}, m1) == m1);
    CHECK(merge(m1, Matching{}) == m1);
}

TEST_CASE("blocks") {
    CHECK(blocks(Matching::parse("1-3,2-4,5-6,7-8")).size() == 3);
    CHECK(stat_bl(Matching::parse("1-3,2-4,5-6,7-8")) == 3);
    CHECK(blocks(Matching::parse("1-4,2-5,3-6")).size() == 1);
    CHECK(blocks(Matching{}).empty());
    auto bs = blocks(Matching::parse("1-3,2-4,5-6,7-8"));
    CHECK(bs[0] == Matching::parse("1-3,2-4"));
    CHECK(bs[1] == Matching::parse("1-2"));
    CHECK(bs[2] == Matching::parse("1-2"));
}

TEST_CASE("merge statistics recurrences") {
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b + a <= 7; ++b)
            for (const Matching& m1 : enumerate_stoimenow(a))
                for (const Matching& m2 : enumerate_stoimenow(b)) {
                    Matching m = merge(m1, m2);
                    CHECK(stat_bl(m) == stat_bl(m1) + stat_bl(m2));
                    CHECK(stat_cr(m) == std::max(stat_cr(m1), stat_cr(m2)));
                }
}

TEST_CASE("largest crossing and noncrossing") {
    CHECK(stat_nr(Matching::parse("1-2,3-4,5-6")) == 3);
    CHECK(stat_cr(Matching::parse("1-4,2-5,3-6")) == 3);
    Matching chain = Matching::parse("1-3,2-5,4-6");
    CHECK(stat_cr(chain) == 2);
    CHECK(stat_nr(chain) == 2);
    CHECK(stat_cr(chain) == oracle_largest(chain, ArcRelation::Crossing));
    CHECK(stat_nr(chain) == oracle_largest(chain, ArcRelation::Disjoint));
    CHECK(stat_cr(Matching{}) == 0);
    CHECK(stat_nr(Matching{}) == 0);
}

TEST_CASE("cr and nr match the subset oracle on all matchings up to n=5") {
    for (int n = 0; n <= 5; ++n)
        for (const Matching& m : enumerate_stoimenow(n)) {
            CHECK(stat_cr(m) == oracle_largest(m, ArcRelation::Crossing));
            CHECK(stat_nr(m) == oracle_largest(m, ArcRelation::Disjoint));
        }
}

TEST_CASE("maximal crossings") {
    Matching chain = Matching::parse("1-3,2-5,4-6");
    auto sets = masks_to_sets(maximal_crossings(chain));
    CHECK(sets == std::set<std::vector<int>>{{0, 1}, {1, 2}});
    CHECK(stat_mcr(chain) == 2);
    CHECK(stat_fcr(chain) == 2);
    Matching noncross = Matching::parse("1-2,3-4,5-6");
    CHECK(stat_mcr(noncross) == 3);
    CHECK(stat_fcr(noncross) == 1);
    CHECK(stat_mcr(Matching{}) == 0);
    CHECK(stat_fcr(Matching{}) == 0);
}

TEST_CASE("maximal crossings match the subset oracle up to n=5") {
    for (int n = 0; n <= 5; ++n)
        for (const Matching& m : enumerate_stoimenow(n)) {
            CHECK(masks_to_sets(maximal_crossings(m)) == oracle_maximal(m, false));
            CHECK(masks_to_sets(maximal_pure_crossings(m)) == oracle_maximal(m, true));
        }
}

TEST_CASE("pure-crossing and intersecting maximal sets coincide only where nestings vanish") {
    // On nonnesting matchings every intersecting pair crosses, so both
    // notions agree; on general matchings they split, first at n=6.
    Matching counter = Matching::parse("1-3,2-8,4-6,5-11,7-9,10-12");
    CHECK(maximal_pure_crossings(counter).size() == 5);
    CHECK(stat_mcr(counter) == 4);
    CHECK(distinct_signature_count(counter) == 4);
    for (int n = 0; n <= 5; ++n)
        for (const Matching& m : enumerate_stoimenow(n))
            CHECK(maximal_pure_crossings(m).size() == maximal_crossings(m).size());
}

TEST_CASE("downset signatures") {
    Matching chain = Matching::parse("1-3,2-5,4-6");
    CHECK(downset_signatures(chain) == std::vector<std::uint64_t>{0, 0, 1});
    CHECK(distinct_signature_count(chain) == 2);
    CHECK(distinct_signature_count(Matching::parse("1-4,2-5,3-6")) == 1);
    CHECK(downset_signatures(Matching::parse("1-2,3-4")) == std::vector<std::uint64_t>{0, 1});
}

TEST_CASE("signature count equals maximal crossing count up to n=7") {
    for (int n = 0; n <= 7; ++n)
        for (const Matching& m : enumerate_stoimenow(n))
            CHECK(distinct_signature_count(m) == stat_mcr(m));
}

TEST_CASE("reverse") {
    CHECK(reverse(Matching::parse("1-2,3-4")) == Matching::parse("1-2,3-4"));
    CHECK(reverse(Matching::parse("1-2,3-5,4-6")) == Matching::parse("1-3,2-4,5-6"));
    for (int n = 0; n <= 6; ++n)
        for (const Matching& m : enumerate_stoimenow(n)) {
            CHECK(reverse(reverse(m)) == m);
            CHECK(is_stoimenow(reverse(m)) == is_stoimenow(m));
        }
}

TEST_CASE("openers before the first closer form an inclusion-maximal crossing") {
    for (int n = 1; n <= 7; ++n)
        for (const Matching& m : enumerate_stoimenow(n)) {
            int fcr = stat_fcr(m);
            std::vector<int> front;
            for (int i = 0; i < fcr; ++i) front.push_back(i);  // arcs sorted by opener
            CHECK(pairwise(m.arcs(), front, ArcRelation::Crossing));
            CHECK(oracle_maximal_crossings(m).count(front) == 1);
        }
}

TEST_CASE("maximal crossings use consecutive openers and closers on nonnesting matchings") {
    // Empirical boundary, nothing in the library assumes it: the property
    // holds on every nonnesting matching at desk scale but already fails on
    // general Stoimenow matchings at n=4 (second case below).
    for (int n = 1; n <= 6; ++n)
        for (const Matching& m : enumerate_stoimenow(n)) {
            bool nonnesting = true;
            std::vector<Arc> arcs = m.arcs();
            for (int i = 0; i < n && nonnesting; ++i)
                for (int j = i + 1; j < n && nonnesting; ++j)
                    if (classify(arcs[i], arcs[j]) == ArcRelation::Nesting) nonnesting = false;
            if (!nonnesting) continue;
            std::vector<int> closer_rank(m.points(), -1);
            int rank = 0;
            for (int p = 0; p < m.points(); ++p)
                if (!m.is_opener(p)) closer_rank[p] = rank++;
            for (const auto& clique : oracle_maximal_crossings(m)) {
                for (std::size_t t = 1; t < clique.size(); ++t) {
                    CHECK(clique[t] == clique[t - 1] + 1);  // consecutive openers
                    CHECK(closer_rank[arcs[clique[t]].close] ==
                          closer_rank[arcs[clique[t - 1]].close] + 1);
                }
            }
        }
    // counterexample on unrestricted matchings: arcs 1 and 3 cross maximally,
    // skipping arc 2
    Matching counter = Matching::parse("1-3,2-7,4-5,6-8");
    auto cliques = oracle_maximal_crossings(counter);
    CHECK(cliques.count({1, 3}) == 1);
}

TEST_CASE("clique statistics refuse matchings past the bitmask bound") {
    std::vector<Arc> arcs;
    for (int i = 0; i < 61; ++i) arcs.push_back({2 * i, 2 * i + 1});
    Matching big = Matching::from_arcs(arcs);
    CHECK_THROWS_WITH_AS(stat_mcr(big), doctest::Contains("TooLarge"), Error);
    CHECK_THROWS_WITH_AS(stat_cr(big), doctest::Contains("TooLarge"), Error);
    CHECK(stat_fcr(big) == 1);  // no bitmask needed
}

TEST_CASE("match_stats bundles the five statistics") {
    Matching m = Matching::parse("1-3,2-4,5-6,7-8");
    MatchStats s = match_stats(m);
    CHECK(s.cr == 2);
    CHECK(s.nr == 3);
    CHECK(s.bl == 3);
    CHECK(s.fcr == 2);
    CHECK(s.mcr == 3);
}

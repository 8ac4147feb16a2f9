#include "doctest.h"

#include <numeric>
#include <set>

#include "fishcat/poset.hpp"

using namespace fishcat;

namespace {

Poset relabel(const Poset& p, const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> rel;
    for (auto [i, j] : p.relations()) rel.push_back({perm[i], perm[j]});
    return Poset(p.size(), rel);
}

// ten-element poset given by its cover diagram (three ordinal summands)
Poset sample_poset_ten() {
    return Poset(10, {{0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 6},
                      {5, 9}, {6, 7}, {6, 8}, {7, 9}, {8, 9}});
}

// nine-element poset given by its cover diagram
Poset sample_poset_nine() {
    return Poset(9, {{0, 5}, {1, 4}, {2, 4}, {4, 5}, {3, 5}, {5, 6}, {5, 7},
                     {0, 8}, {4, 8}, {3, 8}});
}

const std::vector<long long> kFishburn = {1, 1, 2, 5, 15, 53, 217};

}  // namespace

TEST_CASE("construction validates and closes transitively") {
    Poset p(3, {{0, 1}, {1, 2}});
    CHECK(p.less(0, 2));
    CHECK_FALSE(p.less(2, 0));
    CHECK_THROWS_WITH_AS(Poset(2, {{0, 1}, {1, 0}}), doctest::Contains("NotPoset"), Error);
}

TEST_CASE("json round trip") {
    Poset p = poset_n_shape();
    CHECK(Poset::from_json(p.json()) == p);
}

TEST_CASE("matching to poset map") {
    CHECK(brute_force_isomorphic(omega(Matching::parse("1-2,3-4,5-6")), chain_poset(3)));
    CHECK(brute_force_isomorphic(omega(Matching::parse("1-4,2-5,3-6")), antichain_poset(3)));
    Poset p = omega(Matching::parse("1-3,2-5,4-6"));
    CHECK(p.relations() == std::vector<std::pair<int, int>>{{0, 2}});
    CHECK(omega(Matching{}).size() == 0);
}

TEST_CASE("two-plus-two freeness") {
    CHECK(is_two_plus_two_free(chain_poset(4)));
    CHECK(is_two_plus_two_free(poset_n_shape()));
    CHECK(is_two_plus_two_free(poset_three_plus_one()));
    CHECK_FALSE(is_two_plus_two_free(poset_two_plus_two()));
    CHECK_THROWS_WITH_AS(canonical_form(poset_two_plus_two()), doctest::Contains("Not22Free"),
                         Error);
}

TEST_CASE("canonical forms of the basic posets") {
    CHECK(canonical_form(antichain_poset(3)) == CanonicalForm{{0, 0}, {0, 0}, {0, 0}});
    CHECK(canonical_form(chain_poset(3)) == CanonicalForm{{0, 2}, {1, 1}, {2, 0}});
    CHECK(canonical_form(Poset(1, {})) == CanonicalForm{{0, 0}});
    CHECK(canonical_form(Poset()) == CanonicalForm{});
}

TEST_CASE("canonical form is invariant under relabelling") {
    for (int n = 1; n <= 5; ++n)
        for (const Poset& p : enumerate_posets(n)) {
            CanonicalForm form = canonical_form(p);
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            do {
                CHECK(canonical_form(relabel(p, perm)) == form);
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
}

TEST_CASE("canonical form determines the poset") {
    for (int n = 0; n <= 7; ++n)
        for (const Poset& p : enumerate_posets(n)) {
            Poset rebuilt = poset_from_canonical_form(canonical_form(p));
            CHECK(brute_force_isomorphic(rebuilt, p));
        }
}

TEST_CASE("statistics on the basic posets") {
    PosetStats c = poset_stats(chain_poset(3));
    CHECK(c.mag == 3);
    CHECK(c.min == 1);
    CHECK(c.h == 3);
    CHECK(c.w == 1);
    CHECK(c.smc == 3);
    CHECK(c.ssd == 3);
    PosetStats a = poset_stats(antichain_poset(3));
    CHECK(a.mag == 1);
    CHECK(a.min == 3);
    CHECK(a.h == 1);
    CHECK(a.w == 3);
    CHECK(a.smc == 1);
    CHECK(a.ssd == 1);
    PosetStats v = poset_stats(omega(Matching::parse("1-3,2-5,4-6")));
    CHECK(v.mag == 2);
    CHECK(v.min == 2);
    CHECK(v.h == 2);
    CHECK(v.w == 2);
    CHECK(v.smc == 1);
    CHECK(v.ssd == 1);
    CHECK(poset_stats(Poset()).mag == 0);
}

TEST_CASE("width matches a subset oracle") {
    for (int n = 1; n <= 6; ++n)
        for (const Poset& p : enumerate_posets(n)) {
            int best = 0;
            for (int mask = 1; mask < (1 << n); ++mask) {
                bool antichain = true;
                for (int i = 0; i < n && antichain; ++i)
                    for (int j = 0; j < n && antichain; ++j)
                        if (((mask >> i) & 1) && ((mask >> j) & 1) && p.less(i, j))
                            antichain = false;
                if (antichain) best = std::max(best, __builtin_popcount(mask));
            }
            CHECK(poset_stats(p).w == best);
        }
}

TEST_CASE("induced subposet containment") {
    CHECK(contains_induced(poset_three_plus_one(), poset_three_plus_one()));
    CHECK(contains_induced(poset_n_shape(), poset_n_shape()));
    CHECK_FALSE(contains_induced(antichain_poset(4), poset_three_plus_one()));
    CHECK(contains_induced(chain_poset(5), chain_poset(3)));
    CHECK_FALSE(contains_induced(chain_poset(5), antichain_poset(2)));
    CHECK_FALSE(contains_induced(poset_three_plus_one(), poset_n_shape()));
}

TEST_CASE("poset enumeration counts") {
    for (int n = 0; n <= 6; ++n)
        CHECK(static_cast<long long>(enumerate_posets(n).size()) == kFishburn[n]);
    CHECK(enumerate_posets(5, PosetAvoid::ThreePlusOne).size() == 42);
    CHECK(enumerate_posets(5, PosetAvoid::NShape).size() == 42);
}

TEST_CASE("worked sample posets have the expected shape") {
    Poset p10 = sample_poset_ten();
    CHECK(is_two_plus_two_free(p10));
    CHECK_FALSE(contains_induced(p10, poset_three_plus_one()));
    CHECK(poset_stats(p10).ssd == 3);
    Poset p9 = sample_poset_nine();
    CHECK(is_two_plus_two_free(p9));
    CHECK_FALSE(contains_induced(p9, poset_n_shape()));
    PosetStats s = poset_stats(p9);
    CHECK(s.h == 4);
    CHECK(s.w == 4);
    CHECK(s.mag == 4);
    CHECK(s.min == 4);
    CHECK(s.smc == 2);
    CHECK(s.ssd == 2);
}

TEST_CASE("ordinal sum") {
    Poset s = ordinal_sum(antichain_poset(2), chain_poset(2));
    CHECK(s.less(0, 2));
    CHECK(s.less(1, 3));
    CHECK_FALSE(s.less(0, 1));
    CHECK(poset_stats(s).ssd == 3);
}

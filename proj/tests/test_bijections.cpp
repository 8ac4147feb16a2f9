#include "doctest.h"

#include <algorithm>
#include <set>

#include "fishcat/bijections.hpp"
#include "fishcat/patterns.hpp"

using namespace fishcat;

namespace {

std::vector<Matching> avoiders(int n, int i) {
    return enumerate_avoiding(n, pattern_p(i));
}

}  // namespace

TEST_CASE("dyck paths") {
    CHECK(is_dyck_word("UUDUUDDDUDUD"));
    CHECK_FALSE(is_dyck_word("UDD"));
    CHECK_FALSE(is_dyck_word("UX"));
    CHECK(dyck_height(parse_dyck("UUDUUDDDUDUD")) == 3);
    CHECK(dyck_height(parse_dyck("UD")) == 1);
    const long long catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
    for (int n = 0; n <= 10; ++n)
        CHECK(static_cast<long long>(enumerate_dyck(n).size()) == catalan[n]);
}

TEST_CASE("height satisfies the first-return recurrence") {
    for (int n = 1; n <= 7; ++n)
        for (const DyckPath& mu : enumerate_dyck(n)) {
            auto [left, right] = dyck_first_return(mu);
            CHECK(dyck_height(mu) == std::max(dyck_height(left) + 1, dyck_height(right)));
        }
}

TEST_CASE("height distribution over semilength three") {
    // x + 3x^2 + x^3, counted directly from the five paths
    int count_by_height[4] = {0, 0, 0, 0};
    for (const DyckPath& mu : enumerate_dyck(3)) ++count_by_height[dyck_height(mu)];
    CHECK(count_by_height[1] == 1);
    CHECK(count_by_height[2] == 3);
    CHECK(count_by_height[3] == 1);
}

TEST_CASE("gamma pairing") {
    CHECK(gamma(parse_dyck("UUDUUDDDUDUD")) == Matching::parse("1-3,2-6,4-7,5-8,9-10,11-12"));
    CHECK(gamma(parse_dyck("UD")) == Matching::parse("1-2"));
    CHECK(gamma_inverse(Matching::parse("1-3,2-6,4-7,5-8,9-10,11-12")).steps == "UUDUUDDDUDUD");
    CHECK_THROWS_WITH_AS(gamma_inverse(Matching::parse("1-4,2-3")),
                         doctest::Contains("NotNonnesting"), Error);
    for (int n = 0; n <= 6; ++n)
        for (const DyckPath& mu : enumerate_dyck(n)) {
            Matching m = gamma(mu);
            CHECK(is_nonnesting(m));
            CHECK(dyck_height(mu) == stat_cr(m));
            CHECK(gamma_inverse(m) == mu);
        }
}

TEST_CASE("theta wraps a nonnesting matching") {
    CHECK(theta(Matching{}) == Matching::parse("1-2"));
    CHECK(theta(Matching::parse("1-2,3-5,4-6")) == Matching::parse("1-3,2-6,4-7,5-8"));
    for (int n = 0; n <= 6; ++n)
        for (const Matching& m : avoiders(n, 1)) {
            Matching star = theta(m);
            CHECK(is_nonnesting(star));
            CHECK(stat_bl(star) == 1);
            CHECK(stat_cr(star) == stat_cr(m) + 1);
        }
    CHECK_THROWS_WITH_AS(theta(Matching::parse("1-4,2-3")), doctest::Contains("PatternViolation"),
                         Error);
}

TEST_CASE("p1 split and glue") {
    auto [m1, m2] = split_p1(Matching::parse("1-3,2-6,4-7,5-8,9-10,11-12"));
    CHECK(m1 == Matching::parse("1-2,3-5,4-6"));
    CHECK(m2 == Matching::parse("1-2,3-4"));
    for (int n = 1; n <= 6; ++n)
        for (const Matching& m : avoiders(n, 1)) {
            auto [a, b] = split_p1(m);
            CHECK(glue_p1(a, b) == m);
        }
    // statistic recurrences of the gluing
    for (int asize = 0; asize <= 3; ++asize)
        for (int bsize = 0; asize + bsize <= 5; ++bsize)
            for (const Matching& a : avoiders(asize, 1))
                for (const Matching& b : avoiders(bsize, 1)) {
                    Matching m = glue_p1(a, b);
                    CHECK(stat_bl(m) == stat_bl(b) + 1);
                    if (a.size() == 0) {
                        CHECK(stat_mcr(m) == stat_mcr(b) + 1);
                        CHECK(stat_fcr(m) == 1);
                    } else {
                        CHECK(stat_mcr(m) == stat_mcr(a) + stat_mcr(b));
                        CHECK(stat_fcr(m) == stat_fcr(a) + 1);
                    }
                }
}

TEST_CASE("reduction arc") {
    CHECK(reduction_arc(Matching::parse("1-3,2-4,5-6,7-8")) == Arc{6, 7});
    CHECK(reduction_arc(Matching::parse("1-2,3-5,4-7,6-8")) == Arc{3, 6});
}

TEST_CASE("v map") {
    CHECK(v_map(Matching{}) == Matching::parse("1-2"));
    CHECK(v_map(Matching::parse("1-2")) == Matching::parse("1-3,2-4"));
    Matching big = v_map(Matching::parse("1-4,2-5,3-8,6-9,7-10"));
    CHECK(big == Matching::parse("1-5,2-6,3-9,4-10,7-11,8-12"));
    CHECK(reduction_arc(big) == Arc{2, 8});
    CHECK(v_map(Matching::parse("1-3,2-4,5-6,7-9,8-10")) ==
          Matching::parse("1-4,2-5,3-10,6-7,8-11,9-12"));
    for (int n = 0; n <= 6; ++n)
        for (const Matching& m : avoiders(n, 2)) {
            Matching v = v_map(m);
            CHECK(stat_bl(v) == 1);
            CHECK(is_stoimenow(v));
            CHECK_FALSE(contains(v, pattern_p(2)));
        }
}

TEST_CASE("p2 split and glue") {
    // second gluing example: two components assembled end to end
    Matching m1 = Matching::parse("1-3,2-4,5-6,7-9,8-10");
    Matching m2 = Matching::parse("1-2,3-5,4-6");
    CHECK(glue_p2(m1, m2) == Matching::parse("1-4,2-5,3-10,6-7,8-11,9-12,13-14,15-17,16-18"));
    for (int n = 1; n <= 6; ++n)
        for (const Matching& m : avoiders(n, 2)) {
            auto [a, b] = split_p2(m);
            CHECK(glue_p2(a, b) == m);
        }
    for (int asize = 0; asize <= 3; ++asize)
        for (int bsize = 0; asize + bsize <= 5; ++bsize)
            for (const Matching& a : avoiders(asize, 2))
                for (const Matching& b : avoiders(bsize, 2)) {
                    Matching m = glue_p2(a, b);
                    CHECK(stat_bl(m) == stat_bl(b) + 1);
                    if (a.size() == 0) {
                        CHECK(stat_mcr(m) == stat_mcr(b) + 1);
                        CHECK(stat_fcr(m) == 1);
                    } else {
                        CHECK(stat_mcr(m) == stat_mcr(a) + stat_mcr(b));
                        CHECK(stat_fcr(m) == stat_fcr(a) + 1);
                    }
                }
}

TEST_CASE("phi on the pinned instance, step by step") {
    Matching m = Matching::parse("1-3,2-10,4-7,5-8,6-11,9-12,13-16,14-18,15-21,17-19,20-22");
    auto steps = phi_steps(m, 4);
    REQUIRE(steps.size() == 4);
    CHECK(steps[1] == Matching::parse("1-5,2-7,3-8,4-10,6-11,9-12,13-16,14-18,15-21,17-19,20-22"));
    CHECK(steps[2] == Matching::parse("1-6,2-8,3-9,4-11,5-16,7-12,10-13,14-18,15-21,17-19,20-22"));
    CHECK(steps[3] == Matching::parse("1-7,2-9,3-10,4-12,5-16,6-18,8-13,11-14,15-21,17-19,20-22"));
    for (const Matching& step : steps) CHECK(is_stoimenow(step));
    CHECK(phi(m, 4) == steps[3]);
    CHECK(phi_inverse(steps[3], 4) == m);
}

TEST_CASE("phi fixes matchings already in the target class") {
    for (int n = 0; n <= 5; ++n)
        for (const Matching& m : enumerate_stoimenow(n)) {
            Pattern p2 = pattern_p(2), p4 = pattern_p(4);
            if (!contains(m, p2) && !contains(m, p4)) {
                CHECK(phi(m, 4) == m);
                CHECK(phi_inverse(m, 4) == m);
            }
        }
}

TEST_CASE("phi is a bijection between the avoidance classes") {
    for (int n = 0; n <= 6; ++n) {
        std::set<Matching> images;
        for (const Matching& m : avoiders(n, 2)) {
            Matching img = phi(m, 4);
            CHECK(is_stoimenow(img));
            CHECK_FALSE(contains(img, pattern_p(4)));
            CHECK(phi_inverse(img, 4) == m);
            images.insert(img);
        }
        std::set<Matching> target;
        for (const Matching& m : avoiders(n, 4)) target.insert(m);
        CHECK(images == target);
    }
}

TEST_CASE("phi handles other chain lengths") {
    for (int k : {2, 3, 5})
        for (int n = 0; n <= 5; ++n) {
            std::set<Matching> images;
            auto dom = enumerate_avoiding(n, build_family(2, k));
            for (const Matching& m : dom) {
                Matching img = phi(m, k);
                CHECK_FALSE(contains(img, build_family(4, k)));
                CHECK(phi_inverse(img, k) == m);
                images.insert(img);
            }
            CHECK(images.size() == dom.size());
        }
    CHECK_THROWS_WITH_AS(phi(Matching::parse("1-2"), 1), doctest::Contains("BadFamilyIndex"),
                         Error);
}

TEST_CASE("psi encodes avoiders as 101-avoiding sequences") {
    CHECK(psi_p2(Matching::parse("1-2")) == AscentSeq{0});
    CHECK(psi_p2(Matching::parse("1-3,2-4")) == AscentSeq{0, 0});
    CHECK(psi_p2(Matching::parse("1-2,3-4")) == AscentSeq{0, 1});
    CHECK(psi_p2(Matching{}) == AscentSeq{});
    for (int n = 0; n <= 6; ++n)
        for (const Matching& m : avoiders(n, 2)) {
            AscentSeq a = psi_p2(m);
            CHECK(is_ascent_sequence(a));
            CHECK_FALSE(contains_101(a));
            CHECK(psi_p2_inverse(a) == m);
        }
    CHECK_THROWS_WITH_AS(psi_p2(Matching::parse("1-3,2-5,4-7,6-8")),
                         doctest::Contains("PatternViolation"), Error);
}

TEST_CASE("psi inverse follows the last-zero decomposition") {
    AscentSeq a = {0, 1, 0, 0, 2, 2, 3, 2};
    auto [head, tail] = decompose_seq_101(a);
    CHECK(head == AscentSeq{0, 1, 0});
    CHECK(tail == AscentSeq{0, 0, 1, 0});
    CHECK(psi_p2_inverse(a) ==
          merge(v_map(psi_p2_inverse(head)), psi_p2_inverse(tail)));
    CHECK(compose_seq_101(head, tail) == a);
}

TEST_CASE("upsilon lands in the 3142-avoiding fishburn permutations") {
    CHECK(upsilon_p2(Matching::parse("1-2")) == Perm{1});
    CHECK(upsilon_p2(Matching::parse("1-3,2-4")) == Perm{2, 1});
    CHECK(upsilon_p2(Matching::parse("1-2,3-4")) == Perm{1, 2});
    for (int n = 0; n <= 6; ++n) {
        std::set<Perm> images;
        for (const Matching& m : avoiders(n, 2)) {
            Perm pi = upsilon_p2(m);
            CHECK(is_fishburn(pi));
            CHECK_FALSE(perm_contains(pi, {3, 1, 4, 2}));
            CHECK(upsilon_p2_inverse(pi) == m);
            images.insert(pi);
        }
        std::set<Perm> target;
        for (const Perm& pi : enumerate_fishburn(n, true)) target.insert(pi);
        CHECK(images == target);
    }
}

TEST_CASE("poset decomposition for the 3+1 class") {
    Poset p10(10, {{0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 6},
                   {5, 9}, {6, 7}, {6, 8}, {7, 9}, {8, 9}});
    auto [p_i, p_ii] = decompose_poset_3plus1(p10);
    CHECK(p_i.size() == 4);
    CHECK(p_ii.size() == 5);
    CHECK(canonical_form(compose_poset_3plus1(p_i, p_ii)) == canonical_form(p10));
    auto [s1, s2] = decompose_poset_3plus1(Poset(1, {}));
    CHECK(s1.size() == 0);
    CHECK(s2.size() == 0);
    for (int n = 1; n <= 6; ++n)
        for (const Poset& p : enumerate_posets(n, PosetAvoid::ThreePlusOne)) {
            auto [a, b] = decompose_poset_3plus1(p);
            Poset star = compose_poset_3plus1(a, Poset());
            CHECK(poset_stats(star).w == poset_stats(a).w + 1);
            CHECK(canonical_form(compose_poset_3plus1(a, b)) == canonical_form(p));
        }
}

TEST_CASE("poset decomposition for the N class") {
    Poset p9(9, {{0, 5}, {1, 4}, {2, 4}, {4, 5}, {3, 5}, {5, 6}, {5, 7}, {0, 8}, {4, 8}, {3, 8}});
    auto [p1, p2] = decompose_poset_N(p9);
    CHECK(p1.size() == 4);
    CHECK(p2.size() == 4);
    CHECK(canonical_form(compose_poset_N(p1, p2)) == canonical_form(p9));
    auto [c1, c2] = decompose_poset_N(chain_poset(2));
    CHECK(c1.size() == 0);
    CHECK(c2.size() == 1);
    for (int n = 1; n <= 6; ++n)
        for (const Poset& p : enumerate_posets(n, PosetAvoid::NShape)) {
            auto [a, b] = decompose_poset_N(p);
            Poset tilde = compose_poset_N(a, Poset());
            CHECK(poset_stats(tilde).w == poset_stats(a).w + 1);
            CHECK(canonical_form(compose_poset_N(a, b)) == canonical_form(p));
        }
}

TEST_CASE("sequence and permutation decompositions") {
    auto [a1, a2] = decompose_seq_101({0, 1, 0, 0, 2, 2, 3, 2});
    CHECK(a1 == AscentSeq{0, 1, 0});
    CHECK(a2 == AscentSeq{0, 0, 1, 0});
    auto [p1, p2] = decompose_perm_3142({4, 1, 3, 2, 8, 6, 5, 7});
    CHECK(p1 == Perm{1, 3, 2});
    CHECK(p2 == Perm{4, 2, 1, 3});
    auto [e1, e2] = decompose_seq_101({0});
    CHECK(e1.empty());
    CHECK(e2.empty());
    for (int n = 1; n <= 6; ++n) {
        for (const AscentSeq& a : enumerate_ascent_sequences(n, SeqAvoid::W101)) {
            auto [h, t] = decompose_seq_101(a);
            CHECK(compose_seq_101(h, t) == a);
        }
        for (const Perm& pi : enumerate_fishburn(n, true)) {
            auto [h, t] = decompose_perm_3142(pi);
            CHECK(compose_perm_3142(h, t) == pi);
            CHECK(lambda_map(lambda_inverse_3142(pi)) == pi);
        }
    }
}

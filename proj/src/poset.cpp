#include "fishcat/poset.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

#include "fishcat/bitcliques.hpp"
#include "json.hpp"

namespace fishcat {

Poset::Poset(int n, const std::vector<std::pair<int, int>>& relations) : n_(n) {
    if (n < 0 || n > 64) throw Error("TooLarge", "poset size must be in 0..64");
    up_.assign(n, 0);
    down_.assign(n, 0);
    for (auto [i, j] : relations) {
        if (i < 0 || j < 0 || i >= n || j >= n || i == j)
            throw Error("NotPoset", "bad relation " + std::to_string(i) + "<" + std::to_string(j));
        up_[i] |= std::uint64_t{1} << j;
    }
    // transitive closure, then antisymmetry check
    for (bool changed = true; changed;) {
        changed = false;
        for (int i = 0; i < n; ++i) {
            std::uint64_t acc = up_[i];
            for (std::uint64_t m = up_[i]; m != 0; m &= m - 1) acc |= up_[std::countr_zero(m)];
            if (acc != up_[i]) {
                up_[i] = acc;
                changed = true;
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        if ((up_[i] >> i) & 1) throw Error("NotPoset", "cycle through element " + std::to_string(i));
        for (std::uint64_t m = up_[i]; m != 0; m &= m - 1) down_[std::countr_zero(m)] |= std::uint64_t{1} << i;
    }
}

Poset Poset::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> rel;
    for (const auto& pair : j.at("relations"))
        rel.push_back({pair.at(0).get<int>() - 1, pair.at(1).get<int>() - 1});
    return Poset(n, rel);
}

std::string Poset::json() const {
    nlohmann::json j;
    j["n"] = n_;
    j["relations"] = nlohmann::json::array();
    for (auto [i, k] : relations()) j["relations"].push_back({i + 1, k + 1});
    return j.dump();
}

std::vector<std::pair<int, int>> Poset::relations() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; ++i)
        for (std::uint64_t m = up_[i]; m != 0; m &= m - 1) out.push_back({i, std::countr_zero(m)});
    return out;
}

Poset omega(const Matching& m) {
    std::vector<Arc> arcs = m.arcs();
    int n = m.size();
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (arcs[i].close < arcs[j].open) rel.push_back({i, j});
    return Poset(n, rel);
}

namespace {

// Distinct down-set (or up-set) masks sorted by inclusion; empty if they do
// not form a chain.
std::vector<std::uint64_t> mask_chain(const Poset& p, bool down) {
    std::set<std::uint64_t> distinct;
    for (int i = 0; i < p.size(); ++i) distinct.insert(down ? p.down_mask(i) : p.up_mask(i));
    std::vector<std::uint64_t> chain(distinct.begin(), distinct.end());
    std::sort(chain.begin(), chain.end(),
              [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) < std::popcount(b); });
    for (std::size_t t = 1; t < chain.size(); ++t)
        if ((chain[t - 1] & ~chain[t]) != 0) return {};
    return chain;
}

std::vector<int> levels_of(const Poset& p, bool down) {
    auto chain = mask_chain(p, down);
    if (p.size() > 0 && chain.empty()) throw Error("Not22Free", "strict sets are not a chain");
    std::map<std::uint64_t, int> rank;
    for (std::size_t t = 0; t < chain.size(); ++t) rank[chain[t]] = static_cast<int>(t);
    std::vector<int> lv(p.size());
    for (int i = 0; i < p.size(); ++i) lv[i] = rank[down ? p.down_mask(i) : p.up_mask(i)];
    return lv;
}

}  // namespace

bool is_two_plus_two_free(const Poset& p) {
    return p.size() == 0 || !mask_chain(p, true).empty();
}

std::vector<int> down_levels(const Poset& p) { return levels_of(p, true); }
std::vector<int> up_levels(const Poset& p) { return levels_of(p, false); }

CanonicalForm canonical_form(const Poset& p) {
    std::vector<int> dl = down_levels(p), ul = up_levels(p);
    CanonicalForm form(p.size());
    for (int i = 0; i < p.size(); ++i) form[i] = {dl[i], ul[i]};
    std::sort(form.begin(), form.end());
    return form;
}

Poset poset_from_canonical_form(const CanonicalForm& form) {
    int n = static_cast<int>(form.size());
    int mag = 0;
    for (auto [dl, ul] : form) mag = std::max(mag, dl + 1);
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            int right_i = mag - 1 - form[i].second;
            if (right_i < form[j].first) rel.push_back({i, j});
        }
    return Poset(n, rel);
}

namespace {

int longest_chain(const Poset& p) {
    int n = p.size();
    std::vector<int> order(n), dp(n, 1);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::popcount(p.down_mask(a)) < std::popcount(p.down_mask(b));
    });
    int best = n > 0 ? 1 : 0;
    for (int i : order) {
        for (std::uint64_t m = p.down_mask(i); m != 0; m &= m - 1)
            dp[i] = std::max(dp[i], dp[std::countr_zero(m)] + 1);
        best = std::max(best, dp[i]);
    }
    return best;
}

int widest_antichain(const Poset& p) {
    int n = p.size();
    std::vector<std::uint64_t> inc(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && !p.less(i, j) && !p.less(j, i)) inc[i] |= std::uint64_t{1} << j;
    return n == 0 ? 0 : max_clique_size(inc);
}

int shortest_maximal_chain(const Poset& p) {
    int n = p.size();
    if (n == 0) return 0;
    // covers_up[i]: j with i < j and nothing strictly between
    std::vector<std::uint64_t> covers(n, 0);
    for (int i = 0; i < n; ++i) {
        std::uint64_t via = 0;
        for (std::uint64_t m = p.up_mask(i); m != 0; m &= m - 1) via |= p.up_mask(std::countr_zero(m));
        covers[i] = p.up_mask(i) & ~via;
    }
    std::vector<int> memo(n, -1);
    auto rec = [&](auto&& self, int i) -> int {
        if (memo[i] >= 0) return memo[i];
        if (covers[i] == 0) return memo[i] = 1;
        int best = p.size() + 1;
        for (std::uint64_t m = covers[i]; m != 0; m &= m - 1)
            best = std::min(best, self(self, std::countr_zero(m)));
        return memo[i] = best + 1;
    };
    int best = n + 1;
    for (int i = 0; i < n; ++i)
        if (p.down_mask(i) == 0) best = std::min(best, rec(rec, i));
    return best;
}

int ordinal_summands(const Poset& p) {
    int n = p.size();
    if (n == 0) return 0;
    // any linear extension keeps ordinal summands contiguous
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int pa = std::popcount(p.down_mask(a)), pb = std::popcount(p.down_mask(b));
        return pa != pb ? pa < pb : a < b;
    });
    int cuts = 0;
    std::uint64_t prefix = 0;
    for (int t = 0; t < n - 1; ++t) {
        prefix |= std::uint64_t{1} << order[t];
        bool cut = true;
        for (int s = t + 1; s < n && cut; ++s)
            if ((p.down_mask(order[s]) & prefix) != prefix) cut = false;
        if (cut) ++cuts;
    }
    return cuts + 1;
}

}  // namespace

PosetStats poset_stats(const Poset& p) {
    PosetStats s;
    if (p.size() == 0) return s;
    s.mag = static_cast<int>(mask_chain(p, true).size());
    for (int i = 0; i < p.size(); ++i)
        if (p.down_mask(i) == 0) ++s.min;
    s.h = longest_chain(p);
    s.w = widest_antichain(p);
    s.smc = shortest_maximal_chain(p);
    s.ssd = ordinal_summands(p);
    return s;
}

namespace {

struct InducedSearch {
    const Poset& p;
    const Poset& q;
    std::vector<int> image;  // image[t] = element of p matched to q's element t
    std::uint64_t used = 0;

    bool consistent(int t, int cand) const {
        for (int s = 0; s < t; ++s) {
            if (q.less(s, t) != p.less(image[s], cand)) return false;
            if (q.less(t, s) != p.less(cand, image[s])) return false;
        }
        return true;
    }

    bool search(int t) {
        if (t == q.size()) return true;
        for (int cand = 0; cand < p.size(); ++cand) {
            if ((used >> cand) & 1) continue;
            if (!consistent(t, cand)) continue;
            image.push_back(cand);
            used |= std::uint64_t{1} << cand;
            if (search(t + 1)) return true;
            used &= ~(std::uint64_t{1} << cand);
            image.pop_back();
        }
        return false;
    }
};

}  // namespace

bool contains_induced(const Poset& p, const Poset& q) {
    if (q.size() > p.size()) return false;
    InducedSearch s{p, q, {}, 0};
    return s.search(0);
}

bool brute_force_isomorphic(const Poset& a, const Poset& b) {
    if (a.size() != b.size()) return false;
    InducedSearch s{a, b, {}, 0};  // size equality makes an embedding a bijection
    return s.search(0);
}

Poset chain_poset(int n) {
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i + 1 < n; ++i) rel.push_back({i, i + 1});
    return Poset(n, rel);
}

Poset antichain_poset(int n) { return Poset(n, {}); }

Poset poset_three_plus_one() { return Poset(4, {{0, 1}, {1, 2}}); }

Poset poset_n_shape() { return Poset(4, {{0, 2}, {0, 3}, {1, 3}}); }

Poset poset_two_plus_two() { return Poset(4, {{0, 1}, {2, 3}}); }

Poset ordinal_sum(const Poset& a, const Poset& b) {
    int na = a.size();
    std::vector<std::pair<int, int>> rel = a.relations();
    for (auto [i, j] : b.relations()) rel.push_back({i + na, j + na});
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < b.size(); ++j) rel.push_back({i, na + j});
    return Poset(na + b.size(), rel);
}

std::vector<Poset> enumerate_posets(int n, PosetAvoid avoid) {
    std::vector<Poset> out;
    std::set<CanonicalForm> seen;
    Poset forbidden;
    if (avoid == PosetAvoid::ThreePlusOne) forbidden = poset_three_plus_one();
    if (avoid == PosetAvoid::NShape) forbidden = poset_n_shape();
    for_each_stoimenow(n, [&](const Matching& m) {
        Poset p = omega(m);
        CanonicalForm form = canonical_form(p);
        if (!seen.insert(form).second) return true;
        if (avoid != PosetAvoid::None && contains_induced(p, forbidden)) return true;
        out.push_back(std::move(p));
        return true;
    });
    return out;
}

}  // namespace fishcat

#include "fishcat/patterns.hpp"

#include <algorithm>

namespace fishcat {

Matching chain_matching(int k) {
    // position word O O C O C ... O C C
    if (k == 0) return Matching{};
    if (k == 1) return Matching::from_arcs({{0, 1}});
    std::vector<Arc> arcs;
    arcs.push_back({0, 2});
    for (int j = 2; j < k; ++j) arcs.push_back({2 * (j - 1) - 1, 2 * j});
    arcs.push_back({2 * (k - 1) - 1, 2 * k - 1});
    return Matching::from_arcs(arcs);
}

Pattern pattern_p(int i) {
    switch (i) {
        case 1: return {Matching::parse("1-3,2-7,4-5,6-8"), "P1"};
        case 2: return {Matching::parse("1-3,2-5,4-7,6-8"), "P2"};
        case 3: return {Matching::parse("1-2,3-5,4-6,7-8"), "P3"};
        case 4: return {Matching::parse("1-2,3-5,4-7,6-8"), "P4"};
        case 5: return {Matching::parse("1-3,2-5,4-6,7-8"), "P5"};
        default: throw Error("BadFamilyIndex", "no pattern P" + std::to_string(i));
    }
}

Pattern build_family(int i, int k) {
    if (i < 2 || i > 5 || k < 1)
        throw Error("BadFamilyIndex",
                    "family " + std::to_string(i) + " at k=" + std::to_string(k));
    std::string name = "P" + std::to_string(i) + "k:" + std::to_string(k);
    if (k == 1) return {chain_matching(1), name};
    Matching arc = chain_matching(1);
    switch (i) {
        case 2: return {chain_matching(k), name};
        case 3: return {merge(merge(arc, chain_matching(k - 2)), arc), name};
        case 4: return {merge(arc, chain_matching(k - 1)), name};
        default: return {merge(chain_matching(k - 1), arc), name};
    }
}

Pattern parse_pattern(const std::string& name) {
    if (name.size() == 2 && name[0] == 'P' && name[1] >= '1' && name[1] <= '5')
        return pattern_p(name[1] - '0');
    auto colon = name.find("k:");
    if (name.size() > 4 && name[0] == 'P' && colon != std::string::npos) {
        int i = 0, k = 0;
        try {
            i = std::stoi(name.substr(1, colon - 1));
            k = std::stoi(name.substr(colon + 2));
        } catch (const std::exception&) {
            throw Error("BadFamilyIndex", "cannot parse pattern name '" + name + "'");
        }
        return build_family(i, k);
    }
    return {Matching::parse(name), "custom"};
}

Matching sub_matching(const Matching& m, const std::vector<int>& arc_indices) {
    std::vector<Arc> all = m.arcs();
    std::vector<int> points;
    for (int i : arc_indices) {
        points.push_back(all[i].open);
        points.push_back(all[i].close);
    }
    std::sort(points.begin(), points.end());
    std::vector<Arc> out;
    for (int i : arc_indices) {
        auto rank = [&](int p) {
            return static_cast<int>(std::lower_bound(points.begin(), points.end(), p) -
                                    points.begin());
        };
        out.push_back({rank(all[i].open), rank(all[i].close)});
    }
    return Matching::from_arcs(out);
}

namespace {

// Endpoint word of the arcs selected so far: for each endpoint in position
// order, (rank of its arc in selection order, opener flag).
std::vector<std::pair<int, bool>> selection_word(const std::vector<Arc>& arcs,
                                                 const std::vector<int>& chosen) {
    std::vector<std::pair<int, std::pair<int, bool>>> pts;
    for (int r = 0; r < static_cast<int>(chosen.size()); ++r) {
        const Arc& a = arcs[chosen[r]];
        pts.push_back({a.open, {r, true}});
        pts.push_back({a.close, {r, false}});
    }
    std::sort(pts.begin(), pts.end());
    std::vector<std::pair<int, bool>> word;
    word.reserve(pts.size());
    for (auto& p : pts) word.push_back(p.second);
    return word;
}

struct ContainSearch {
    const std::vector<Arc>& arcs;
    const std::vector<Arc>& pat;
    std::vector<std::vector<std::pair<int, bool>>> pat_words;  // per prefix length
    std::vector<int> chosen;

    ContainSearch(const std::vector<Arc>& a, const std::vector<Arc>& p)
        : arcs(a), pat(p) {
        pat_words.resize(p.size() + 1);
        std::vector<int> idx;
        for (int t = 0; t <= static_cast<int>(p.size()); ++t) {
            pat_words[t] = selection_word(pat, idx);
            if (t < static_cast<int>(p.size())) idx.push_back(t);
        }
    }

    bool search(int next) {
        int t = static_cast<int>(chosen.size());
        if (t == static_cast<int>(pat.size())) return true;
        int remaining = static_cast<int>(arcs.size()) - next;
        if (remaining < static_cast<int>(pat.size()) - t) return false;
        for (int i = next; i < static_cast<int>(arcs.size()); ++i) {
            chosen.push_back(i);
            if (selection_word(arcs, chosen) == pat_words[t + 1] && search(i + 1))
                return true;
            chosen.pop_back();
        }
        return false;
    }
};

}  // namespace

bool contains(const Matching& m, const Matching& q) {
    if (q.size() == 0) return true;
    if (q.size() > m.size()) return false;
    std::vector<Arc> arcs = m.arcs(), pat = q.arcs();
    ContainSearch s(arcs, pat);
    return s.search(0);
}

bool contains(const Matching& m, const Pattern& q) { return contains(m, q.m); }

void for_each_avoiding(int n, const Pattern& q,
                       const std::function<bool(const Matching&)>& visit) {
    for_each_stoimenow(n, [&](const Matching& m) {
        if (contains(m, q)) return true;
        return visit(m);
    });
}

std::vector<Matching> enumerate_avoiding(int n, const Pattern& q) {
    std::vector<Matching> out;
    for_each_avoiding(n, q, [&](const Matching& m) {
        out.push_back(m);
        return true;
    });
    return out;
}

}  // namespace fishcat

#include "fishcat/matching.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "fishcat/bitcliques.hpp"
#include "json.hpp"

namespace fishcat {

Matching Matching::from_partner(std::vector<int> partner) {
    Matching m;
    m.partner_ = std::move(partner);
    int len = static_cast<int>(m.partner_.size());
    if (len % 2 != 0) throw Error("NotPerfect", "odd number of positions");
    for (int p = 0; p < len; ++p) {
        int q = m.partner_[p];
        if (q < 0 || q >= len || q == p)
            throw Error("NotPerfect", "position " + std::to_string(p + 1) + " unmatched");
        if (m.partner_[q] != p)
            throw Error("NotPerfect", "partner map is not an involution");
    }
    return m;
}

Matching Matching::from_arcs(const std::vector<Arc>& arcs) {
    int len = 2 * static_cast<int>(arcs.size());
    std::vector<int> partner(len, -1);
    for (const Arc& a : arcs) {
        if (a.open >= a.close)
            throw Error("OpenerAfterCloser", "arc " + std::to_string(a.open + 1) + "-" +
                                                 std::to_string(a.close + 1));
        for (int p : {a.open, a.close}) {
            if (p < 0 || p >= len)
                throw Error("NotPerfect", "position " + std::to_string(p + 1) + " out of range");
            if (partner[p] != -1)
                throw Error("DuplicatePosition", "position " + std::to_string(p + 1) + " reused");
        }
        partner[a.open] = a.close;
        partner[a.close] = a.open;
    }
    Matching m;
    m.partner_ = std::move(partner);
    return m;
}

Matching Matching::parse(const std::string& text) {
    std::vector<Arc> arcs;
    std::string token;
    auto flush = [&]() {
        if (token.empty()) return;
        auto dash = token.find('-');
        if (dash == std::string::npos)
            throw Error("NotPerfect", "malformed arc token '" + token + "'");
        int a = 0, b = 0;
        try {
            a = std::stoi(token.substr(0, dash));
            b = std::stoi(token.substr(dash + 1));
        } catch (const std::exception&) {
            throw Error("NotPerfect", "malformed arc token '" + token + "'");
        }
        arcs.push_back({a - 1, b - 1});
        token.clear();
    };
    for (char c : text) {
        if (c == ',' || c == ' ' || c == '\t')
            flush();
        else
            token.push_back(c);
    }
    flush();
    return from_arcs(arcs);
}

std::string Matching::str() const {
    std::ostringstream out;
    bool first = true;
    for (const Arc& a : arcs()) {
        if (!first) out << ",";
        out << a.open + 1 << "-" << a.close + 1;
        first = false;
    }
    return out.str();
}

Matching Matching::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    std::vector<Arc> arcs;
    for (const auto& pair : j.at("arcs"))
        arcs.push_back({pair.at(0).get<int>() - 1, pair.at(1).get<int>() - 1});
    Matching m = from_arcs(arcs);
    if (j.at("n").get<int>() != m.size())
        throw Error("NotPerfect", "arc count does not match n");
    return m;
}

std::string Matching::json() const {
    nlohmann::json j;
    j["n"] = size();
    j["arcs"] = nlohmann::json::array();
    for (const Arc& a : arcs()) j["arcs"].push_back({a.open + 1, a.close + 1});
    return j.dump();
}

std::vector<Arc> Matching::arcs() const {
    std::vector<Arc> out;
    out.reserve(size());
    for (int p = 0; p < points(); ++p)
        if (is_opener(p)) out.push_back({p, partner_[p]});
    return out;
}

ArcRelation classify(const Arc& a, const Arc& b) {
    const Arc& lo = a.open < b.open ? a : b;
    const Arc& hi = a.open < b.open ? b : a;
    if (lo.close < hi.open) return ArcRelation::Disjoint;
    return lo.close < hi.close ? ArcRelation::Crossing : ArcRelation::Nesting;
}

bool is_stoimenow(const Matching& m) {
    int len = m.points();
    for (int p = 0; p + 1 < len; ++p) {
        bool open0 = m.is_opener(p), open1 = m.is_opener(p + 1);
        if (open0 && open1 && m.partner(p) > m.partner(p + 1)) return false;   // Type I
        if (!open0 && !open1 && m.partner(p) > m.partner(p + 1)) return false;  // Type II
    }
    return true;
}

namespace {

struct Enumerator {
    int n;
    const std::function<bool(const Matching&)>& visit;
    std::vector<int> partner;
    std::vector<int> open;  // opener positions of currently open arcs, ascending
    int opened = 0;
    bool stopped = false;

    Enumerator(int n_, const std::function<bool(const Matching&)>& v)
        : n(n_), visit(v), partner(2 * n_, -1) {}

    void run(int pos) {
        if (stopped) return;
        if (pos == 2 * n) {
            if (!visit(Matching::from_partner(partner))) stopped = true;
            return;
        }
        // closers first, by ascending opener of the arc being closed
        for (std::size_t i = 0; i < open.size() && !stopped; ++i) {
            int o = open[i];
            // Type I: o-1 is the opener of a still-open arc
            if (o > 0 && partner[o - 1] == -1) continue;
            // Type II: the arc closed at pos-1 would sit strictly inside [o, pos]
            if (pos > 0 && partner[pos - 1] != -1 && partner[pos - 1] < pos - 1 &&
                partner[pos - 1] > o)
                continue;
            partner[o] = pos;
            partner[pos] = o;
            open.erase(open.begin() + static_cast<std::ptrdiff_t>(i));
            run(pos + 1);
            open.insert(open.begin() + static_cast<std::ptrdiff_t>(i), o);
            partner[o] = -1;
            partner[pos] = -1;
        }
        if (opened < n && !stopped) {
            open.push_back(pos);
            ++opened;
            run(pos + 1);
            --opened;
            open.pop_back();
        }
    }
};

}  // namespace

void for_each_stoimenow(int n, const std::function<bool(const Matching&)>& visit) {
    if (n == 0) {
        visit(Matching{});
        return;
    }
    Enumerator e(n, visit);
    e.run(0);
}

std::vector<Matching> enumerate_stoimenow(int n) {
    std::vector<Matching> out;
    for_each_stoimenow(n, [&](const Matching& m) {
        out.push_back(m);
        return true;
    });
    return out;
}

Matching merge(const Matching& m1, const Matching& m2) {
    int shift = m1.points();
    std::vector<int> partner(m1.partner_word());
    partner.resize(shift + m2.points());
    for (int p = 0; p < m2.points(); ++p) partner[shift + p] = m2.partner(p) + shift;
    return Matching::from_partner(std::move(partner));
}

std::vector<Matching> blocks(const Matching& m) {
    std::vector<Matching> out;
    int start = 0, balance = 0;
    for (int p = 0; p < m.points(); ++p) {
        balance += m.is_opener(p) ? 1 : -1;
        if (balance == 0) {
            std::vector<int> part(m.partner_word().begin() + start,
                                  m.partner_word().begin() + p + 1);
            for (int& q : part) q -= start;
            out.push_back(Matching::from_partner(std::move(part)));
            start = p + 1;
        }
    }
    return out;
}

int stat_bl(const Matching& m) {
    int count = 0, balance = 0;
    for (int p = 0; p < m.points(); ++p) {
        balance += m.is_opener(p) ? 1 : -1;
        if (balance == 0) ++count;
    }
    return count;
}

Matching reverse(const Matching& m) {
    int len = m.points();
    std::vector<int> partner(len);
    for (int p = 0; p < len; ++p) partner[p] = len - 1 - m.partner(len - 1 - p);
    return Matching::from_partner(std::move(partner));
}

namespace {

std::vector<std::uint64_t> relation_adjacency(const Matching& m, bool include_nesting) {
    if (m.size() > 60) throw Error("TooLarge", "bitmask bound is 60 arcs");
    std::vector<Arc> arcs = m.arcs();
    int n = m.size();
    std::vector<std::uint64_t> adj(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            ArcRelation rel = classify(arcs[i], arcs[j]);
            if (rel == ArcRelation::Crossing || (include_nesting && rel == ArcRelation::Nesting)) {
                adj[i] |= std::uint64_t{1} << j;
                adj[j] |= std::uint64_t{1} << i;
            }
        }
    return adj;
}

}  // namespace

int stat_cr(const Matching& m) { return max_clique_size(relation_adjacency(m, false)); }

int stat_nr(const Matching& m) {
    std::vector<Arc> arcs = m.arcs();
    int n = m.size(), best = 0;
    std::vector<int> dp(n, 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < i; ++j)
            if (arcs[j].close < arcs[i].open) dp[i] = std::max(dp[i], dp[j] + 1);
        best = std::max(best, dp[i]);
    }
    return best;
}

std::vector<std::uint64_t> maximal_crossings(const Matching& m) {
    return maximal_cliques(relation_adjacency(m, true));
}

std::vector<std::uint64_t> maximal_pure_crossings(const Matching& m) {
    return maximal_cliques(relation_adjacency(m, false));
}

int stat_mcr(const Matching& m) {
    return static_cast<int>(maximal_crossings(m).size());
}

int stat_fcr(const Matching& m) {
    for (int p = 0; p < m.points(); ++p)
        if (!m.is_opener(p)) return p;
    return 0;
}

std::vector<std::uint64_t> downset_signatures(const Matching& m) {
    std::vector<Arc> arcs = m.arcs();
    int n = m.size();
    std::vector<std::uint64_t> sig(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (arcs[j].close < arcs[i].open) sig[i] |= std::uint64_t{1} << j;
    return sig;
}

int distinct_signature_count(const Matching& m) {
    auto sig = downset_signatures(m);
    std::set<std::uint64_t> distinct(sig.begin(), sig.end());
    return static_cast<int>(distinct.size());
}

MatchStats match_stats(const Matching& m) {
    MatchStats s;
    s.cr = stat_cr(m);
    s.nr = stat_nr(m);
    s.mcr = stat_mcr(m);
    s.fcr = stat_fcr(m);
    s.bl = stat_bl(m);
    return s;
}

}  // namespace fishcat

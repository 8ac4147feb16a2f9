#include "fishcat/bijections.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "fishcat/patterns.hpp"

namespace fishcat {

bool is_dyck_word(const std::string& steps) {
    int h = 0;
    for (char c : steps) {
        if (c == 'U')
            ++h;
        else if (c == 'D')
            --h;
        else
            return false;
        if (h < 0) return false;
    }
    return h == 0;
}

DyckPath parse_dyck(const std::string& steps) {
    if (!is_dyck_word(steps)) throw Error("NotDyck", "'" + steps + "' is not a Dyck word");
    return DyckPath{steps};
}

int dyck_height(const DyckPath& path) {
    int h = 0, best = 0;
    for (char c : path.steps) {
        h += c == 'U' ? 1 : -1;
        best = std::max(best, h);
    }
    return best;
}

std::vector<DyckPath> enumerate_dyck(int n) {
    std::vector<DyckPath> out;
    std::string cur;
    int ups = 0, h = 0;
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(cur.size()) == 2 * n) {
            out.push_back(DyckPath{cur});
            return;
        }
        if (h > 0) {
            cur.push_back('D');
            --h;
            self(self);
            ++h;
            cur.pop_back();
        }
        if (ups < n) {
            cur.push_back('U');
            ++ups;
            ++h;
            self(self);
            --h;
            --ups;
            cur.pop_back();
        }
    };
    rec(rec);
    return out;
}

std::pair<DyckPath, DyckPath> dyck_first_return(const DyckPath& path) {
    if (path.steps.empty()) throw Error("NotDyck", "empty path has no first return");
    int h = 0;
    for (std::size_t i = 0; i < path.steps.size(); ++i) {
        h += path.steps[i] == 'U' ? 1 : -1;
        if (h == 0)
            return {DyckPath{path.steps.substr(1, i - 1)}, DyckPath{path.steps.substr(i + 1)}};
    }
    throw Error("NotDyck", "path never returns to the axis");
}

bool is_nonnesting(const Matching& m) {
    std::vector<Arc> arcs = m.arcs();
    for (std::size_t i = 0; i < arcs.size(); ++i)
        for (std::size_t j = i + 1; j < arcs.size(); ++j)
            if (classify(arcs[i], arcs[j]) == ArcRelation::Nesting) return false;
    return true;
}

Matching gamma(const DyckPath& path) {
    std::vector<int> ups, downs;
    for (int p = 0; p < static_cast<int>(path.steps.size()); ++p)
        (path.steps[p] == 'U' ? ups : downs).push_back(p);
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < ups.size(); ++i) arcs.push_back({ups[i], downs[i]});
    return Matching::from_arcs(arcs);
}

DyckPath gamma_inverse(const Matching& m) {
    if (!is_nonnesting(m)) throw Error("NotNonnesting", "matching has a nesting pair");
    std::string steps(m.points(), 'D');
    for (int p = 0; p < m.points(); ++p)
        if (m.is_opener(p)) steps[p] = 'U';
    return DyckPath{steps};
}

namespace {

void require(bool ok, const char* code, const std::string& what) {
    if (!ok) throw Error(code, what);
}

void require_p1_avoider(const Matching& m, const char* who) {
    require(is_stoimenow(m), "PatternViolation", std::string(who) + ": not a Stoimenow matching");
    require(is_nonnesting(m), "PatternViolation", std::string(who) + ": input has a nesting pair");
}

void require_p2_avoider(const Matching& m, const char* who) {
    require(is_stoimenow(m), "PatternViolation", std::string(who) + ": not a Stoimenow matching");
    static const Pattern p2 = pattern_p(2);
    require(!contains(m, p2), "PatternViolation", std::string(who) + ": input contains P2");
}

// Splits off the first irreducible block.
std::pair<Matching, Matching> split_first_block(const Matching& m) {
    int balance = 0, cut = 0;
    for (int p = 0; p < m.points(); ++p) {
        balance += m.is_opener(p) ? 1 : -1;
        if (balance == 0) {
            cut = p + 1;
            break;
        }
    }
    std::vector<int> head(m.partner_word().begin(), m.partner_word().begin() + cut);
    std::vector<int> tail(m.partner_word().begin() + cut, m.partner_word().end());
    for (int& q : tail) q -= cut;
    return {Matching::from_partner(std::move(head)), Matching::from_partner(std::move(tail))};
}

Matching repair_by_rank(const std::vector<int>& openers, const std::vector<int>& closers) {
    std::vector<int> points;
    points.insert(points.end(), openers.begin(), openers.end());
    points.insert(points.end(), closers.begin(), closers.end());
    std::sort(points.begin(), points.end());
    auto rank = [&](int p) {
        return static_cast<int>(std::lower_bound(points.begin(), points.end(), p) - points.begin());
    };
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < openers.size(); ++i)
        arcs.push_back({rank(openers[i]), rank(closers[i])});
    return Matching::from_arcs(arcs);
}

}  // namespace

Matching theta(const Matching& m1) {
    require_p1_avoider(m1, "theta");
    std::vector<int> openers{-1}, closers;  // fresh opener before everything
    for (int p = 0; p < m1.points(); ++p)
        (m1.is_opener(p) ? openers : closers).push_back(p);
    closers.push_back(m1.points());  // fresh closer after everything
    return repair_by_rank(openers, closers);
}

Matching glue_p1(const Matching& m1, const Matching& m2) {
    require_p1_avoider(m2, "glue_p1");
    return merge(theta(m1), m2);
}

std::pair<Matching, Matching> split_p1(const Matching& m) {
    require_p1_avoider(m, "split_p1");
    require(m.size() > 0, "PatternViolation", "split_p1: empty matching");
    auto [block, rest] = split_first_block(m);
    std::vector<int> openers, closers;
    for (int p = 1; p < block.points() - 1; ++p)
        (block.is_opener(p) ? openers : closers).push_back(p);
    return {repair_by_rank(openers, closers), rest};
}

Arc reduction_arc(const Matching& m) {
    require(m.size() > 0, "NotPerfect", "empty matching has no reduction arc");
    int last_opener = 0;
    for (int p = 0; p < m.points(); ++p)
        if (m.is_opener(p)) last_opener = p;
    int closer = last_opener + 1;
    return {m.partner(closer), closer};
}

Matching v_map(const Matching& m1) {
    require_p2_avoider(m1, "v_map");
    if (m1.size() == 0) return Matching::parse("1-2");
    std::vector<Arc> arcs = m1.arcs();
    int first_closer = arcs[0].close;
    int last_opener = arcs.back().open;
    int opener_pos;
    if (last_opener < first_closer) {
        // the first and last arcs overlap, so m1 is a crossing: new opener first
        opener_pos = 0;
    } else {
        // run of openers below the first closer whose arcs reach past the last opener
        int run_start = -1;
        for (int p = 0; p < first_closer; ++p)
            if (m1.partner(p) > last_opener) {
                run_start = p;
                break;
            }
        opener_pos = run_start >= 0 ? run_start : first_closer;
    }
    // opener_pos <= last_opener always, so the new arc is [opener_pos, last_opener + 2]
    std::vector<Arc> out;
    auto shift = [&](int p) { return p + (p >= opener_pos ? 1 : 0) + (p > last_opener ? 1 : 0); };
    for (const Arc& a : arcs) out.push_back({shift(a.open), shift(a.close)});
    out.push_back({opener_pos, last_opener + 2});
    return Matching::from_arcs(out);
}

Matching glue_p2(const Matching& m1, const Matching& m2) {
    require_p2_avoider(m2, "glue_p2");
    return merge(v_map(m1), m2);
}

namespace {

std::pair<Matching, Matching> split_p2_unchecked(const Matching& m) {
    auto [block, rest] = split_first_block(m);
    Arc red = reduction_arc(block);
    std::vector<int> openers, closers;
    for (int p = 0; p < block.points(); ++p) {
        if (p == red.open || p == red.close) continue;
        (block.is_opener(p) ? openers : closers).push_back(p);
    }
    Matching m1 = Matching{};
    if (!openers.empty()) {
        std::vector<Arc> arcs;
        std::vector<int> points;
        points.insert(points.end(), openers.begin(), openers.end());
        points.insert(points.end(), closers.begin(), closers.end());
        std::sort(points.begin(), points.end());
        auto rank = [&](int p) {
            return static_cast<int>(std::lower_bound(points.begin(), points.end(), p) -
                                    points.begin());
        };
        for (int p : openers) arcs.push_back({rank(p), rank(block.partner(p))});
        m1 = Matching::from_arcs(arcs);
    }
    return {m1, rest};
}

}  // namespace

std::pair<Matching, Matching> split_p2(const Matching& m) {
    require_p2_avoider(m, "split_p2");
    require(m.size() > 0, "PatternViolation", "split_p2: empty matching");
    return split_p2_unchecked(m);
}

namespace {

// Word of (arc index, opener flag) tokens in position order.
using Token = std::pair<int, bool>;

std::vector<Token> word_of(const Matching& m) {
    std::vector<Arc> arcs = m.arcs();
    std::vector<Token> word(m.points());
    for (int i = 0; i < static_cast<int>(arcs.size()); ++i) {
        word[arcs[i].open] = {i, true};
        word[arcs[i].close] = {i, false};
    }
    return word;
}

Matching matching_from_word(const std::vector<Token>& word) {
    int n = static_cast<int>(word.size()) / 2;
    std::vector<Arc> arcs(n);
    std::vector<bool> seen(n, false);
    for (int p = 0; p < static_cast<int>(word.size()); ++p) {
        int id = word[p].first;
        if (!seen[id]) {
            arcs[id].open = p;
            seen[id] = true;
        } else {
            arcs[id].close = p;
        }
    }
    return Matching::from_arcs(arcs);
}

// Lexicographically first occurrence of "arc followed by a disjoint
// (k-1)-chain" (leftmost first opener, then leftmost second opener, ...).
// Returns arc indices or empty.
std::vector<int> first_arc_chain_occurrence(const std::vector<Arc>& arcs, int k) {
    int n = static_cast<int>(arcs.size());
    std::vector<int> occ;
    auto rec = [&](auto&& self, int next) -> bool {
        int t = static_cast<int>(occ.size());
        if (t == k) return true;
        for (int i = next; i <= n - (k - t); ++i) {
            if (t == 1 && arcs[occ[0]].close > arcs[i].open) continue;  // disjoint gap
            if (t >= 2) {
                const Arc& prev = arcs[occ[t - 1]];
                if (!(prev.open < arcs[i].open && arcs[i].open < prev.close &&
                      prev.close < arcs[i].close))
                    continue;  // consecutive chain arcs cross
                if (t >= 3 && arcs[occ[t - 2]].close > arcs[i].open) continue;
            }
            occ.push_back(i);
            if (self(self, i + 1)) return true;
            occ.pop_back();
        }
        return false;
    };
    return rec(rec, 0) ? occ : std::vector<int>{};
}

// Occurrence of a k-chain maximizing (last closer, second-to-last closer, ...)
// lexicographically. Returns arc indices in chain order or empty.
std::vector<int> last_chain_occurrence(const std::vector<Arc>& arcs, int k) {
    int n = static_cast<int>(arcs.size());
    std::vector<int> by_closer(n);
    std::iota(by_closer.begin(), by_closer.end(), 0);
    std::sort(by_closer.begin(), by_closer.end(),
              [&](int a, int b) { return arcs[a].close > arcs[b].close; });
    std::vector<int> occ;  // chain arcs from the right end
    auto rec = [&](auto&& self) -> bool {
        int t = static_cast<int>(occ.size());
        if (t == k) return true;
        for (int i : by_closer) {
            if (t > 0) {
                const Arc& next = arcs[occ[t - 1]];  // arc to the right in the chain
                if (!(arcs[i].open < next.open && next.open < arcs[i].close &&
                      arcs[i].close < next.close))
                    continue;
                if (t >= 2 && arcs[i].close > arcs[occ[t - 2]].open) continue;
            }
            occ.push_back(i);
            if (self(self)) return true;
            occ.pop_back();
        }
        return false;
    };
    if (!rec(rec)) return {};
    std::reverse(occ.begin(), occ.end());
    return occ;
}

Matching move_openers(const Matching& m, const std::vector<int>& arc_ids, Token target) {
    std::vector<Token> word = word_of(m);
    std::vector<Token> moved;
    std::vector<Token> kept;
    for (const Token& t : word) {
        bool is_moved = t.second && std::find(arc_ids.begin(), arc_ids.end(), t.first) != arc_ids.end();
        (is_moved ? moved : kept).push_back(t);
    }
    std::vector<Token> out;
    for (const Token& t : kept) {
        if (t == target) out.insert(out.end(), moved.begin(), moved.end());
        out.push_back(t);
    }
    return matching_from_word(out);
}

}  // namespace

std::vector<Matching> phi_steps(const Matching& m, int k) {
    if (k < 2) throw Error("BadFamilyIndex", "phi needs k >= 2");
    require(is_stoimenow(m), "PatternViolation", "phi: not a Stoimenow matching");
    require(!contains(m, build_family(2, k)), "PatternViolation", "phi: input contains the k-chain");
    std::vector<Matching> steps{m};
    int cap = 2 * m.size() * m.size() + 1;
    for (int iter = 0; iter < cap; ++iter) {
        const Matching& cur = steps.back();
        std::vector<Arc> arcs = cur.arcs();
        std::vector<int> occ = first_arc_chain_occurrence(arcs, k);
        if (occ.empty()) return steps;
        const Arc& first = arcs[occ[0]];
        const Arc& second = arcs[occ[1]];
        // crossing run with consecutive openers and closers, upward from
        // occ[1]; it never reaches the third occurrence arc when k >= 4, and
        // must stop short of it at k = 3 to keep the image Stoimenow
        int third = k >= 3 ? occ[2] : -1;
        std::vector<int> run{occ[1]};
        std::vector<Token> word = word_of(cur);
        for (int s = 1;; ++s) {
            int o = second.open + s, c = second.close + s;
            if (c >= cur.points() || !word[o].second || word[c].second) break;
            if (word[o].first != word[c].first || word[o].first == third) break;
            run.push_back(word[o].first);
        }
        // openers inside the first arc whose closers lie right of the run head's closer
        Token target{-1, true};
        for (int p = first.open + 1; p < first.close; ++p)
            if (cur.is_opener(p) && cur.partner(p) > second.close) {
                target = word[p];
                break;
            }
        if (target.first < 0) target = word[first.close];
        steps.push_back(move_openers(cur, run, target));
    }
    throw Error("IterationCapExceeded", "phi did not stabilize within the move cap");
}

Matching phi(const Matching& m, int k) { return phi_steps(m, k).back(); }

Matching phi_inverse(const Matching& m, int k) {
    if (k < 2) throw Error("BadFamilyIndex", "phi_inverse needs k >= 2");
    require(is_stoimenow(m), "PatternViolation", "phi_inverse: not a Stoimenow matching");
    require(!contains(m, build_family(4, k)),
            "PatternViolation", "phi_inverse: input contains the arc-chain pattern");
    Matching cur = m;
    int cap = 2 * m.size() * m.size() + 1;
    for (int iter = 0; iter < cap; ++iter) {
        std::vector<Arc> arcs = cur.arcs();
        std::vector<int> occ = last_chain_occurrence(arcs, k);
        if (occ.empty()) return cur;
        const Arc& first = arcs[occ[0]];
        const Arc& second = arcs[occ[1]];
        // crossing run with consecutive openers and closers, downward from
        // occ[1]; it never reaches occ[0] when k >= 3
        std::vector<int> run{occ[1]};
        std::vector<Token> word = word_of(cur);
        for (int s = 1;; ++s) {
            int o = second.open - s, c = second.close - s;
            if (o < 0 || !word[o].second || word[c].second) break;
            if (word[o].first != word[c].first || word[o].first == occ[0]) break;
            run.push_back(word[o].first);
        }
        std::reverse(run.begin(), run.end());  // keep opener order
        // reinsertion zone ends at the third chain arc's opener; with no third
        // arc (k = 2) it ends at the run's first closer
        int boundary = k >= 3 ? arcs[occ[2]].open
                              : second.close - static_cast<int>(run.size()) + 1;
        Token target{-1, true};
        for (int p = first.close + 1; p < boundary; ++p)
            if (cur.is_opener(p) && cur.partner(p) > second.close) {
                target = word[p];
                break;
            }
        if (target.first < 0) target = word[boundary];
        cur = move_openers(cur, run, target);
    }
    throw Error("IterationCapExceeded", "phi_inverse did not stabilize within the move cap");
}

namespace {

AscentSeq psi_rec(const Matching& m) {
    if (m.size() == 0) return {};
    auto [m1, m2] = split_p2_unchecked(m);
    AscentSeq prefix = psi_rec(m1);
    prefix.push_back(0);
    int shift = *std::max_element(prefix.begin(), prefix.end()) + 1;
    for (int v : psi_rec(m2)) prefix.push_back(v + shift);
    return prefix;
}

}  // namespace

AscentSeq psi_p2(const Matching& m) {
    require_p2_avoider(m, "psi");
    return psi_rec(m);
}

namespace {

Matching psi_inv_rec(const AscentSeq& a) {
    if (a.empty()) return Matching{};
    int last_zero = 0;
    for (int i = 0; i < static_cast<int>(a.size()); ++i)
        if (a[i] == 0) last_zero = i;
    AscentSeq head(a.begin(), a.begin() + last_zero);
    int shift = 1;
    for (int v : head) shift = std::max(shift, v + 1);
    AscentSeq tail(a.begin() + last_zero + 1, a.end());
    for (int& v : tail) {
        if (v < shift) throw Error("PatternViolation", "sequence does not decompose at its last zero");
        v -= shift;
    }
    return merge(v_map(psi_inv_rec(head)), psi_inv_rec(tail));
}

}  // namespace

Matching psi_p2_inverse(const AscentSeq& a) {
    require(is_ascent_sequence(a), "PatternViolation", "psi_inverse: not an ascent sequence");
    require(!contains_101(a), "PatternViolation", "psi_inverse: sequence contains 101");
    return psi_inv_rec(a);
}

Perm upsilon_p2(const Matching& m) { return lambda_map(psi_p2(m)); }

AscentSeq lambda_inverse_3142(const Perm& pi) {
    require(is_fishburn(pi), "PatternViolation", "lambda_inverse: not a Fishburn permutation");
    require(!perm_contains(pi, {3, 1, 4, 2}), "PatternViolation",
            "lambda_inverse: permutation contains 3142");
    if (pi.empty()) return {};
    auto [left, right] = decompose_perm_3142(pi);
    return compose_seq_101(lambda_inverse_3142(left), lambda_inverse_3142(right));
}

Matching upsilon_p2_inverse(const Perm& pi) { return psi_p2_inverse(lambda_inverse_3142(pi)); }

namespace {

Poset induced_subposet(const Poset& p, const std::vector<int>& elements) {
    std::vector<std::pair<int, int>> rel;
    int k = static_cast<int>(elements.size());
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (p.less(elements[i], elements[j])) rel.push_back({i, j});
    return Poset(k, rel);
}

// First ordinal summand as element lists (ascending indices).
std::pair<std::vector<int>, std::vector<int>> first_summand_elements(const Poset& p) {
    int n = p.size();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int pa = std::popcount(p.down_mask(a)), pb = std::popcount(p.down_mask(b));
        return pa != pb ? pa < pb : a < b;
    });
    std::uint64_t prefix = 0;
    for (int t = 0; t < n - 1; ++t) {
        prefix |= std::uint64_t{1} << order[t];
        bool cut = true;
        for (int s = t + 1; s < n && cut; ++s)
            if ((p.down_mask(order[s]) & prefix) != prefix) cut = false;
        if (cut) {
            std::vector<int> head(order.begin(), order.begin() + t + 1);
            std::vector<int> tail(order.begin() + t + 1, order.end());
            std::sort(head.begin(), head.end());
            std::sort(tail.begin(), tail.end());
            return {head, tail};
        }
    }
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    return {all, {}};
}

// Elements ordered by (level ascending, up-set size descending, index).
std::vector<int> level_labelling(const Poset& p) {
    std::vector<int> dl = down_levels(p);
    std::vector<int> order(p.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (dl[a] != dl[b]) return dl[a] < dl[b];
        int ua = std::popcount(p.up_mask(a)), ub = std::popcount(p.up_mask(b));
        if (ua != ub) return ua > ub;
        return a < b;
    });
    return order;
}

void require_avoids(const Poset& p, const Poset& q, const char* who) {
    require(is_two_plus_two_free(p), "PatternViolation", std::string(who) + ": poset is not (2+2)-free");
    require(!contains_induced(p, q), "PatternViolation",
            std::string(who) + ": poset contains the forbidden subposet");
}

}  // namespace

std::pair<Poset, Poset> decompose_poset_3plus1(const Poset& p) {
    require_avoids(p, poset_three_plus_one(), "decompose_poset_3plus1");
    require(p.size() > 0, "PatternViolation", "decompose_poset_3plus1: empty poset");
    auto [head, tail] = first_summand_elements(p);
    Poset star = induced_subposet(p, head);
    Poset p_ii = induced_subposet(p, tail);
    std::vector<int> label = level_labelling(star);
    int k = star.size();
    std::vector<std::pair<int, int>> rel;
    for (int t = 0; t + 1 < k; ++t)
        for (int s = 0; s + 1 < k; ++s)
            if (star.less(label[t], label[s + 1])) rel.push_back({t, s});
    return {Poset(k - 1, rel), p_ii};
}

Poset compose_poset_3plus1(const Poset& p_i, const Poset& p_ii) {
    require_avoids(p_i, poset_three_plus_one(), "compose_poset_3plus1");
    require_avoids(p_ii, poset_three_plus_one(), "compose_poset_3plus1");
    int k = p_i.size() + 1;
    std::vector<int> label = level_labelling(p_i);
    std::vector<std::pair<int, int>> rel;
    for (int a = 0; a + 1 < k; ++a)
        for (int b = 1; b < k; ++b)
            if (p_i.less(label[a], label[b - 1])) rel.push_back({a, b});
    return ordinal_sum(Poset(k, rel), p_ii);
}

std::pair<Poset, Poset> decompose_poset_N(const Poset& p) {
    require_avoids(p, poset_n_shape(), "decompose_poset_N");
    require(p.size() > 0, "PatternViolation", "decompose_poset_N: empty poset");
    auto [head, tail] = first_summand_elements(p);
    Poset tilde = induced_subposet(p, head);
    Poset p_ii = induced_subposet(p, tail);
    int isolated = -1;
    for (int i = 0; i < tilde.size(); ++i)
        if (tilde.up_mask(i) == 0 && tilde.down_mask(i) == 0) {
            isolated = i;
            break;
        }
    require(isolated >= 0, "NoIsolatedElement", "first summand has no isolated element");
    std::vector<int> rest;
    for (int i = 0; i < tilde.size(); ++i)
        if (i != isolated) rest.push_back(i);
    return {induced_subposet(tilde, rest), p_ii};
}

Poset compose_poset_N(const Poset& p1, const Poset& p2) {
    require_avoids(p1, poset_n_shape(), "compose_poset_N");
    require_avoids(p2, poset_n_shape(), "compose_poset_N");
    Poset tilde(p1.size() + 1, p1.relations());  // extra element is isolated
    return ordinal_sum(tilde, p2);
}

std::pair<AscentSeq, AscentSeq> decompose_seq_101(const AscentSeq& a) {
    require(is_ascent_sequence(a), "PatternViolation", "decompose_seq_101: not an ascent sequence");
    require(!contains_101(a), "PatternViolation", "decompose_seq_101: sequence contains 101");
    require(!a.empty(), "PatternViolation", "decompose_seq_101: empty sequence");
    int last_zero = 0;
    for (int i = 0; i < static_cast<int>(a.size()); ++i)
        if (a[i] == 0) last_zero = i;
    AscentSeq head(a.begin(), a.begin() + last_zero);
    int shift = 1;
    for (int v : head) shift = std::max(shift, v + 1);
    AscentSeq tail(a.begin() + last_zero + 1, a.end());
    for (int& v : tail) v -= shift;
    return {head, tail};
}

AscentSeq compose_seq_101(const AscentSeq& a1, const AscentSeq& a2) {
    AscentSeq out = a1;
    out.push_back(0);
    int shift = *std::max_element(out.begin(), out.end()) + 1;
    for (int v : a2) out.push_back(v + shift);
    return out;
}

std::pair<Perm, Perm> decompose_perm_3142(const Perm& pi) {
    require(is_fishburn(pi), "PatternViolation", "decompose_perm_3142: not a Fishburn permutation");
    require(!perm_contains(pi, {3, 1, 4, 2}), "PatternViolation",
            "decompose_perm_3142: permutation contains 3142");
    require(!pi.empty(), "PatternViolation", "decompose_perm_3142: empty permutation");
    int k = pi[0];
    Perm left(pi.begin() + 1, pi.begin() + k);
    for (int v : left)
        require(v < k, "PatternViolation", "decompose_perm_3142: no direct-sum split at the first value");
    Perm right(pi.begin() + k, pi.end());
    for (int& v : right) v -= k;
    return {left, right};
}

Perm compose_perm_3142(const Perm& p1, const Perm& p2) {
    int k = static_cast<int>(p1.size()) + 1;
    Perm out{k};
    out.insert(out.end(), p1.begin(), p1.end());
    for (int v : p2) out.push_back(v + k);
    return out;
}

}  // namespace fishcat

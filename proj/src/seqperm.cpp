#include "fishcat/seqperm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fishcat {

bool is_ascent_sequence(const AscentSeq& a) {
    if (a.empty()) return true;
    if (a[0] != 0) return false;
    int asc = 0;
    for (std::size_t i = 1; i < a.size(); ++i) {
        if (a[i] < 0 || a[i] > asc + 1) return false;
        if (a[i] > a[i - 1]) ++asc;
    }
    return true;
}

bool contains_101(const AscentSeq& a) {
    int n = static_cast<int>(a.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (a[j] >= a[i]) continue;
            for (int k = j + 1; k < n; ++k)
                if (a[k] == a[i]) return true;
        }
    return false;
}

bool contains_0101(const AscentSeq& a) {
    int n = static_cast<int>(a.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (a[j] <= a[i]) continue;
            for (int k = j + 1; k < n; ++k) {
                if (a[k] != a[i]) continue;
                for (int l = k + 1; l < n; ++l)
                    if (a[l] == a[j]) return true;
            }
        }
    return false;
}

namespace {

void seq_backtrack(int n, AscentSeq& cur, int asc,
                   const std::function<bool(const AscentSeq&)>& visit, bool& stop) {
    if (stop) return;
    if (static_cast<int>(cur.size()) == n) {
        if (!visit(cur)) stop = true;
        return;
    }
    int hi = cur.empty() ? 0 : asc + 1;
    for (int v = 0; v <= hi && !stop; ++v) {
        int nasc = asc + (!cur.empty() && v > cur.back() ? 1 : 0);
        cur.push_back(v);
        seq_backtrack(n, cur, nasc, visit, stop);
        cur.pop_back();
    }
}

}  // namespace

std::vector<AscentSeq> enumerate_ascent_sequences(int n, SeqAvoid avoid) {
    std::vector<AscentSeq> out;
    AscentSeq cur;
    bool stop = false;
    seq_backtrack(n, cur, 0, [&](const AscentSeq& a) {
        if (avoid == SeqAvoid::W101 && contains_101(a)) return true;
        if (avoid == SeqAvoid::W0101 && contains_0101(a)) return true;
        out.push_back(a);
        return true;
    }, stop);
    return out;
}

SeqStats seq_stats(const AscentSeq& a) {
    SeqStats s;
    int n = static_cast<int>(a.size());
    for (int i = 0; i < n; ++i) {
        if (i + 1 < n && a[i] < a[i + 1]) ++s.asc;
        if (a[i] == 0) ++s.zero;
        bool lm = true, rm = true;
        for (int j = 0; j < i; ++j)
            if (a[j] >= a[i]) lm = false;
        for (int j = i + 1; j < n; ++j)
            if (a[j] <= a[i]) rm = false;
        if (lm) ++s.lmax;
        if (rm) ++s.rmin;
    }
    return s;
}

std::vector<std::pair<int, int>> rgf_runs(const AscentSeq& a) {
    if (a.empty()) return {};
    if (a[0] != 0) throw Error("NotRGF", "sequence must start with 0");
    std::vector<std::pair<int, int>> runs;
    int n = static_cast<int>(a.size());
    int run_start = 0, max_so_far = 0;
    bool in_run = true;
    for (int i = 1; i < n; ++i) {
        if (a[i] > max_so_far + 1)
            throw Error("NotRGF", "entry " + std::to_string(i + 1) + " skips a value");
        if (in_run) {
            if (a[i] >= a[i - 1]) {
                max_so_far = std::max(max_so_far, a[i]);
            } else {
                runs.push_back({run_start, i});
                in_run = false;
            }
        } else {
            if (a[i] == max_so_far + 1) {
                run_start = i;
                max_so_far = a[i];
                in_run = true;
            } else if (a[i] > a[i - 1]) {
                throw Error("NotRGF", "rise inside a separator at entry " + std::to_string(i + 1));
            }
        }
    }
    if (in_run) runs.push_back({run_start, n});
    return runs;
}

AscentSeq delta(const AscentSeq& a) {
    if (!a.empty() && !is_ascent_sequence(a))
        throw Error("NotAscentSequence", "delta needs a valid ascent sequence");
    std::vector<int> asc_list;
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
        if (a[i] < a[i + 1]) asc_list.push_back(static_cast<int>(i));
    AscentSeq cur = a;
    for (int j : asc_list)
        for (int i = 0; i < j; ++i)
            if (cur[i] >= cur[j + 1]) ++cur[i];
    return cur;
}

Perm transpose(const AscentSeq& modified) {
    int n = static_cast<int>(modified.size());
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int i, int j) {
        return modified[i] != modified[j] ? modified[i] < modified[j] : i > j;
    });
    Perm pi(n);
    for (int t = 0; t < n; ++t) pi[t] = idx[t] + 1;
    return pi;
}

Perm lambda_map(const AscentSeq& a) { return transpose(delta(a)); }

bool is_fishburn(const Perm& pi) {
    int n = static_cast<int>(pi.size());
    for (int i = 0; i + 1 < n; ++i) {
        if (pi[i] >= pi[i + 1]) continue;
        for (int j = i + 2; j < n; ++j)
            if (pi[j] + 1 == pi[i]) return false;
    }
    return true;
}

PermStats perm_stats(const Perm& pi) {
    PermStats s;
    int n = static_cast<int>(pi.size());
    for (int i = 0; i < n; ++i) {
        bool lm = true, rm = true;
        for (int j = 0; j < i; ++j)
            if (pi[j] >= pi[i]) lm = false;
        for (int j = i + 1; j < n; ++j)
            if (pi[j] <= pi[i]) rm = false;
        if (lm) ++s.lmax;
        if (rm) ++s.rmin;
    }
    s.idr = n > 0 ? 1 : 0;
    while (s.idr < n && pi[s.idr] < pi[s.idr - 1]) ++s.idr;
    s.contains3142 = perm_contains(pi, {3, 1, 4, 2});
    return s;
}

bool perm_contains(const Perm& pi, const Perm& pattern) {
    int n = static_cast<int>(pi.size()), k = static_cast<int>(pattern.size());
    if (k > n) return false;
    std::vector<int> chosen;
    auto rec = [&](auto&& self, int next) -> bool {
        int t = static_cast<int>(chosen.size());
        if (t == k) return true;
        for (int i = next; i <= n - (k - t); ++i) {
            bool ok = true;
            for (int s = 0; s < t && ok; ++s)
                if ((pattern[s] < pattern[t]) != (pi[chosen[s]] < pi[i])) ok = false;
            if (!ok) continue;
            chosen.push_back(i);
            if (self(self, i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    return rec(rec, 0);
}

std::vector<Perm> enumerate_fishburn(int n, bool avoid3142) {
    if (n > 9) throw Error("TooLarge", "factorial filter is capped at n=9");
    std::vector<Perm> out;
    Perm pi(n);
    std::iota(pi.begin(), pi.end(), 1);
    if (n == 0) return {Perm{}};
    do {
        if (!is_fishburn(pi)) continue;
        if (avoid3142 && perm_contains(pi, {3, 1, 4, 2})) continue;
        out.push_back(pi);
    } while (std::next_permutation(pi.begin(), pi.end()));
    return out;
}

AscentSeq parse_seq(const std::string& text) {
    AscentSeq out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        if (token.find_first_not_of(" \t") == std::string::npos) continue;
        out.push_back(std::stoi(token));
    }
    return out;
}

std::string seq_str(const AscentSeq& a) {
    std::ostringstream out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) out << ",";
        out << a[i];
    }
    return out.str();
}

Perm parse_perm(const std::string& text) {
    Perm out;
    std::istringstream in(text);
    int v;
    while (in >> v) out.push_back(v);
    std::vector<bool> seen(out.size() + 1, false);
    for (int x : out) {
        if (x < 1 || x > static_cast<int>(out.size()) || seen[x])
            throw Error("NotPermutation", "values must be a permutation of 1..n");
        seen[x] = true;
    }
    return out;
}

std::string perm_str(const Perm& pi) {
    std::ostringstream out;
    for (std::size_t i = 0; i < pi.size(); ++i) {
        if (i) out << " ";
        out << pi[i];
    }
    return out.str();
}

}  // namespace fishcat

#include "fishcat/bitcliques.hpp"

#include <algorithm>
#include <bit>

namespace fishcat {

namespace {

void bron_kerbosch(std::uint64_t r, std::uint64_t p, std::uint64_t x,
                   const std::vector<std::uint64_t>& adj,
                   std::vector<std::uint64_t>& out) {
    if (p == 0 && x == 0) {
        out.push_back(r);
        return;
    }
    // pivot: vertex of P|X with most neighbours in P
    std::uint64_t px = p | x;
    int pivot = -1, best = -1;
    for (std::uint64_t m = px; m != 0; m &= m - 1) {
        int v = std::countr_zero(m);
        int deg = std::popcount(p & adj[v]);
        if (deg > best) {
            best = deg;
            pivot = v;
        }
    }
    std::uint64_t cand = p & ~adj[pivot];
    for (std::uint64_t m = cand; m != 0; m &= m - 1) {
        int v = std::countr_zero(m);
        std::uint64_t bit = std::uint64_t{1} << v;
        bron_kerbosch(r | bit, p & adj[v], x & adj[v], adj, out);
        p &= ~bit;
        x |= bit;
    }
}

}  // namespace

std::vector<std::uint64_t> maximal_cliques(const std::vector<std::uint64_t>& adj) {
    std::vector<std::uint64_t> out;
    int n = static_cast<int>(adj.size());
    if (n == 0) return out;
    std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    bron_kerbosch(0, all, 0, adj, out);
    std::sort(out.begin(), out.end(), [](std::uint64_t a, std::uint64_t b) {
        int la = std::countr_zero(a), lb = std::countr_zero(b);
        return la != lb ? la < lb : a < b;
    });
    return out;
}

int max_clique_size(const std::vector<std::uint64_t>& adj) {
    int best = 0;
    for (std::uint64_t c : maximal_cliques(adj)) best = std::max(best, std::popcount(c));
    return best;
}

}  // namespace fishcat

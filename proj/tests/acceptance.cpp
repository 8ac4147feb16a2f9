// Acceptance suite: runs every verification criterion at its pinned size
// range and prints one pass/fail line per criterion. Exits nonzero on any
// failure.

#include <algorithm>
#include <cstdio>

#include "fishcat/verify.hpp"

int main() {
    std::vector<fishcat::CheckResult> results = fishcat::acceptance_checks();
    bool all_pass = true;
    int index = 0;
    for (const fishcat::CheckResult& c : results) {
        ++index;
        std::printf("[%2d] %-4s %7.2fs  %s\n", index, c.pass ? "pass" : "FAIL", c.seconds,
                    c.name.c_str());
        if (!c.detail.empty()) std::printf("     %s\n", c.detail.c_str());
        all_pass = all_pass && c.pass;
    }
    std::printf("%d/%d criteria passed\n", static_cast<int>(std::count_if(
                    results.begin(), results.end(),
                    [](const fishcat::CheckResult& c) { return c.pass; })),
                static_cast<int>(results.size()));
    return all_pass ? 0 : 1;
}

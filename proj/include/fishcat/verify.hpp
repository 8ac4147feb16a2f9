#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fishcat/bijections.hpp"
#include "fishcat/matching.hpp"
#include "fishcat/poset.hpp"
#include "fishcat/seqperm.hpp"
#include "fishcat/series.hpp"

namespace fishcat {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

struct VerifyReport {
    std::string suite;
    std::vector<CheckResult> checks;
    double seconds = 0;
    bool pass() const;
    std::string json() const;
    std::string table() const;
    std::string csv() const;
};

std::vector<std::string> suite_names();

// Runs one suite; max_n (when given) replaces each check's default range,
// subject to per-structure feasibility caps.
VerifyReport run_suite(const std::string& suite, std::optional<int> max_n,
                       bool parallel = true);

// All acceptance checks at their pinned default ranges.
std::vector<CheckResult> acceptance_checks(bool parallel = true);

// Per-n comparison of x^nr over P1-avoiders, x^h over (2+2,3+1)-free posets,
// and x^h over Dyck paths. Report-only by design.
struct ConjectureRow {
    int n = 0;
    Poly avoider_nr;
    Poly poset_h;
    Poly dyck_h;
    bool agree = false;
};
std::vector<ConjectureRow> conjecture_rows(int max_n);

// Enumeration cache directory; "" disables. Defaults to $FISHCAT_CACHE_DIR.
void set_cache_dir(std::string dir);
std::string cache_dir();

// Shared memoized enumerations (thread safe; disk-backed for matchings when a
// cache directory is set). avoid is a pattern name ("" for none).
std::shared_ptr<const std::vector<Matching>> cached_matchings(int n, const std::string& avoid);
std::shared_ptr<const std::vector<Poset>> cached_posets(int n, PosetAvoid avoid);
std::shared_ptr<const std::vector<AscentSeq>> cached_seqs(int n, SeqAvoid avoid);
std::shared_ptr<const std::vector<Perm>> cached_perms(int n, bool avoid3142);

}  // namespace fishcat

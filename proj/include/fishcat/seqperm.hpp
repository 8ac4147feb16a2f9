#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fishcat/error.hpp"

namespace fishcat {

// Ascent sequence (alpha_1, ..., alpha_n): alpha_1 = 0 and each later entry
// is at most one plus the number of ascents in the preceding prefix.
using AscentSeq = std::vector<int>;

// Permutation of {1..n} in one-line notation.
using Perm = std::vector<int>;

bool is_ascent_sequence(const AscentSeq& a);

// Word-pattern occurrences are equality-typed subsequences:
// 101 -> (b, a, b') with b = b' > a; 0101 -> (a, b, a', b') with a = a' < b = b'.
bool contains_101(const AscentSeq& a);
bool contains_0101(const AscentSeq& a);

enum class SeqAvoid { None, W101, W0101 };

std::vector<AscentSeq> enumerate_ascent_sequences(int n, SeqAvoid avoid = SeqAvoid::None);

struct SeqStats {
    int asc = 0;   // strict ascents
    int zero = 0;  // zero entries
    int lmax = 0;  // left-to-right maxima (strict; first entry counts)
    int rmin = 0;  // right-to-left minima (strict; last entry counts)
};
SeqStats seq_stats(const AscentSeq& a);

// Maximal weakly increasing runs of a 101-avoiding sequence, as [begin, end)
// index ranges; each run starts one above the previous maximum, and the
// separating segments are weakly decreasing below it. Throws NotRGF when the
// structure is violated.
std::vector<std::pair<int, int>> rgf_runs(const AscentSeq& a);

// The bump procedure: at each ascent index j (taken in increasing order of
// the original ascent list), add 1 to every earlier entry >= the entry at j+1.
AscentSeq delta(const AscentSeq& a);

// Sorts indices by (entry ascending, index descending); the index sequence is
// the image permutation.
Perm transpose(const AscentSeq& modified);

// transpose after delta; lands in the Fishburn permutations.
Perm lambda_map(const AscentSeq& a);

// True iff no i, j with j > i+1 and pi_j + 1 = pi_i < pi_{i+1}.
bool is_fishburn(const Perm& pi);

struct PermStats {
    int lmax = 0;
    int rmin = 0;
    int idr = 0;  // length of the initial strictly decreasing run
    bool contains3142 = false;
};
PermStats perm_stats(const Perm& pi);

// Classical pattern containment (order-isomorphic subsequence).
bool perm_contains(const Perm& pi, const Perm& pattern);

// All Fishburn permutations of length n by filtering S_n; n <= 9.
std::vector<Perm> enumerate_fishburn(int n, bool avoid3142 = false);

AscentSeq parse_seq(const std::string& text);     // comma-separated
std::string seq_str(const AscentSeq& a);
Perm parse_perm(const std::string& text);         // space-separated one-line
std::string perm_str(const Perm& pi);

}  // namespace fishcat

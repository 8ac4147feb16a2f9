#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fishcat/matching.hpp"
#include "fishcat/poset.hpp"
#include "fishcat/seqperm.hpp"

namespace fishcat {

// Lattice path over steps U = (1,1), D = (1,-1) staying weakly above the axis.
struct DyckPath {
    std::string steps;
    friend bool operator==(const DyckPath&, const DyckPath&) = default;
    friend bool operator<(const DyckPath& a, const DyckPath& b) { return a.steps < b.steps; }
};

bool is_dyck_word(const std::string& steps);
DyckPath parse_dyck(const std::string& steps);
int dyck_height(const DyckPath& path);
std::vector<DyckPath> enumerate_dyck(int n);
// First-return split: path = U left D right.
std::pair<DyckPath, DyckPath> dyck_first_return(const DyckPath& path);

bool is_nonnesting(const Matching& m);

// Pairs the i-th up-step with the i-th down-step; the height of the path is
// the largest crossing of the image.
Matching gamma(const DyckPath& path);
// Inverse: openers become up-steps. Throws NotNonnesting.
DyckPath gamma_inverse(const Matching& m);

// Wraps a nonnesting matching with a fresh outer opener/closer pair and
// re-pairs openers with closers by rank; the image is irreducible.
Matching theta(const Matching& m1);
Matching glue_p1(const Matching& m1, const Matching& m2);
// Inverse of glue_p1: first irreducible block loses its first opener and last
// closer (remaining endpoints re-paired by rank), rest is the second part.
std::pair<Matching, Matching> split_p1(const Matching& m);

// The arc whose closer sits immediately right of the last opener.
Arc reduction_arc(const Matching& m);
// Adds a reduction arc: its closer right after the last opener, its opener
// before the run of openers below the first closer whose arcs reach past the
// last opener (or before the first closer when that run is empty; at the very
// front when the first and last original arcs overlap).
Matching v_map(const Matching& m1);
Matching glue_p2(const Matching& m1, const Matching& m2);
std::pair<Matching, Matching> split_p2(const Matching& m);

// Repeatedly moves the crossing run at the second arc of the leftmost
// arc-plus-chain occurrence leftwards until none remains (k >= 2).
// Throws IterationCapExceeded when the n*2n move cap is hit.
std::vector<Matching> phi_steps(const Matching& m, int k);
Matching phi(const Matching& m, int k);
Matching phi_inverse(const Matching& m, int k);

// Recursive ascent-sequence encoding of a P2-avoider; image is the set of
// 101-avoiding ascent sequences.
AscentSeq psi_p2(const Matching& m);
Matching psi_p2_inverse(const AscentSeq& a);

// lambda_map after psi_p2; image is the set of 3142-avoiding Fishburn
// permutations.
Perm upsilon_p2(const Matching& m);
Matching upsilon_p2_inverse(const Perm& pi);
AscentSeq lambda_inverse_3142(const Perm& pi);

// Structure decompositions mirroring the Catalan recurrence.
std::pair<Poset, Poset> decompose_poset_3plus1(const Poset& p);
Poset compose_poset_3plus1(const Poset& p_i, const Poset& p_ii);
std::pair<Poset, Poset> decompose_poset_N(const Poset& p);
Poset compose_poset_N(const Poset& p1, const Poset& p2);
std::pair<AscentSeq, AscentSeq> decompose_seq_101(const AscentSeq& a);
AscentSeq compose_seq_101(const AscentSeq& a1, const AscentSeq& a2);
std::pair<Perm, Perm> decompose_perm_3142(const Perm& pi);
Perm compose_perm_3142(const Perm& p1, const Perm& p2);

}  // namespace fishcat

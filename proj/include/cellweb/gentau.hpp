#pragma once

// Generalized tau-invariants, abstracted over any family carrying tau sets and
// the partial maps f_{i,j}: iterated partition refinement up to order k, its
// fixpoint, and matching two families through their common refinement.

#include "cellweb/kl.hpp"
#include "cellweb/perm.hpp"
#include "cellweb/tableau.hpp"
#include "cellweb/web.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace cellweb {

// A finite family of objects with tau-invariants and precomputed f-tables.
// Generators are 1..n-1; f_{i,j} is defined on x iff x lies in D_{i,j}
// (i in tau(x), j not in tau(x), |i-j| = 1).
struct TauSystem {
    int n = 0; // generator indices run 1..n-1
    std::vector<std::string> labels;
    std::vector<std::uint64_t> tau;
    std::vector<std::vector<int>> ftab; // [pair_index(i,j)][x] = image index or -1

    std::size_t size() const { return tau.size(); }
    static int pair_index(int i, int j); // adjacent (i,j), both orders
    int f(int i, int j, int x) const { return ftab[pair_index(i, j)][x]; }
    bool in_d(int i, int j, int x) const {
        return (tau[x] >> i & 1) && !(tau[x] >> j & 1);
    }
};

TauSystem perm_system(int n);
TauSystem tableau_system(const std::vector<int>& shape);
TauSystem tableau_system_all(int n); // every shape with n boxes
TauSystem web_system(int n); // reduced webs with 3n boundary points
TauSystem klcell_system(const KLTable& t, const Cell& cell);
// disjoint union (f never crosses sides); labels prefixed "a:" / "b:"
TauSystem disjoint_union(const TauSystem& a, const TauSystem& b);

// blocks numbered by first occurrence, so ids are deterministic
struct TauPartition {
    std::vector<int> block;
    int nblocks = 0;
    bool operator==(const TauPartition& o) const = default;
};

// order 0: equal tau sets; order k: order k-1 plus matching f_{i,j}-images
// up to order k-1, for every adjacent pair
TauPartition order_k_partition(const TauSystem& s, int k);
// stable partition and the smallest k with order-k == order-(k+1)
std::pair<TauPartition, int> fixpoint_partition(const TauSystem& s);

struct MatchResult {
    bool matched = false;    // bijective: every block holds exactly one object per side
    bool functional = false; // every block holds exactly one b-object (a-side may repeat)
    int stable_order = 0;
    std::string detail; // human-readable failure reason, empty when matched
    std::vector<std::pair<int, int>> pairs; // (index in a, index in b), set when functional
};

// run fixpoint refinement on the disjoint union; matched iff every block
// contains exactly one object from each side.  When b is a set of canonical
// representatives (e.g. tableaux vs. permutations) the match is functional
// instead: each a-object pairs with the unique b-object in its block.
MatchResult match_across(const TauSystem& a, const TauSystem& b);

} // namespace cellweb

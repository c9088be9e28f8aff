#pragma once

// Hecke algebra of S_n, Kazhdan-Lusztig polynomials P_{y,w} and mu, the KL
// graph, left cells, the T_{s_i} action on cell bases, and f^KL.
//
// P_{y,w} is computed by the classical length-increasing recursion and then
// (mandatorily) validated against the two defining conditions: bar-invariance
// of every C_w and the degree bound deg P_{y,w} <= (l(w)-l(y)-1)/2.
//
// Normalization (paper's): C_w = v^{l(w)/2} sum_{y<=w} (-1)^{l(w)-l(y)}
// v^{-l(y)} bar(P_{y,w}) T_y.

#include "cellweb/laurent.hpp"
#include "cellweb/perm.hpp"
#include "cellweb/tableau.hpp"

#include <iosfwd>
#include <map>
#include <vector>

namespace cellweb {

// Cached data for one symmetric group; elements are addressed by their
// lexicographic rank in one-line order.
struct SymmetricGroup {
    int n;
    std::vector<Permutation> elems;
    std::vector<int> len;
    std::vector<std::uint64_t> taum;
    std::vector<int> inv;                      // index of w^{-1}
    std::vector<std::vector<int>> left_mult;   // left_mult[i-1][w] = index of s_i w

    explicit SymmetricGroup(int n);
    int size() const { return (int)elems.size(); }
    int index(const Permutation& p) const; // lexicographic rank
};

// Hecke algebra element relative to a SymmetricGroup: element index -> coefficient.
struct HeckeElement {
    std::map<int, LaurentPoly> terms;
    void add(int w, const LaurentPoly& c);
    bool operator==(const HeckeElement& o) const = default;
};

// left multiplication by T_{s_i}
HeckeElement hecke_mul_generator(const SymmetricGroup& G, const HeckeElement& h, int i);
// left multiplication by T_{s_i}^{-1} = v^-1 T_{s_i} + (v^-1 - 1) T_e
HeckeElement hecke_mul_generator_inverse(const SymmetricGroup& G, const HeckeElement& h, int i);
// bar(T_w) = (T_{w^-1})^{-1} for every w, indexed by w (computed by length induction)
std::vector<HeckeElement> hecke_bar_basis(const SymmetricGroup& G);

class KLTable {
public:
    // Computes all P_{y,w} and mu for S_n and runs the defining-condition
    // verification pass.  threads = 0 means hardware concurrency.
    // The resource guard refuses n > 7 unless force is set (the configured
    // upper bound itself is 9).
    explicit KLTable(int n, int threads = 0, bool force = false);

    const SymmetricGroup& group() const { return G_; }
    int n() const { return G_.n; }

    bool leq(int y, int w) const; // Bruhat order on element indices
    LaurentPoly P(int y, int w) const;
    int mu(int y, int w) const; // symmetric
    // pairs (y, mu) with y < w and mu(y,w) != 0
    const std::vector<std::pair<int, int>>& mu_down(int w) const { return mu_down_[w]; }

    // C_w in the T-basis (paper normalization)
    HeckeElement c_basis_element(int w) const;

    // cache I/O ("kltable" versioned text format); load verifies n and re-derives mu
    void save(std::ostream& out) const;
    static KLTable load(std::istream& in);

private:
    KLTable(int n, std::nullptr_t); // internal: group + Bruhat only
    SymmetricGroup G_;
    std::vector<std::vector<std::uint64_t>> leq_bits_; // leq_bits_[w] packed over y
    std::vector<std::vector<std::pair<int, LaurentPoly>>> nonone_; // P != 1 entries per w
    std::vector<std::vector<std::pair<int, int>>> mu_down_;
    void compute_bruhat();
    void compute_polynomials(int threads);
    void verify_defining_conditions(int threads) const;
};

struct Cell {
    std::vector<int> members; // element indices, sorted
    StandardTableau rightTableau;
};

// Left cells from the mu/tau preorder (strongly connected components of the
// x -> y edges with mu(x,y) != 0 and tau(x) not a subset of tau(y)); validated
// against the RS Q-fibers before returning.
std::vector<Cell> left_cells(const KLTable& t);

// T_{s_i} . C_w expanded in the cell basis: -C_w if s_i in tau(w), otherwise
// v C_w + v^(1/2) sum mu(w,y) C_y over cell members y with s_i in tau(y).
std::vector<std::pair<int, LaurentPoly>> ts_action_on_cell(const KLTable& t, const Cell& cell,
                                                           int i, int w);

// the unique cell member C' in D^KL_{j,i} appearing as a summand of T_{s_j} C_w
int f_kl(const KLTable& t, const Cell& cell, int i, int j, int w);

} // namespace cellweb

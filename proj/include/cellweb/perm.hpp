#pragma once

// Permutations of S_n in one-line notation, with length, Bruhat order, left
// tau-invariants, dual Knuth steps, and the map f^Sn.
//
// Convention (left action): s_i . x permutes the VALUES i, i+1 of the one-line
// notation, i.e. left multiplication by the simple transposition s_i.
// Generator indices run 1..n-1.

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace cellweb {

struct Permutation {
    std::vector<int> w; // one-line notation, values 1..n

    Permutation() = default;
    explicit Permutation(std::vector<int> one_line);

    int n() const { return (int)w.size(); }
    int operator()(int i) const { return w[i - 1]; } // 1-based image

    static Permutation identity(int n);
    static Permutation simple(int i, int n); // s_i, 1 <= i <= n-1

    bool operator==(const Permutation& o) const = default;
    auto operator<=>(const Permutation& o) const = default;
};

// (compose(a,b))(i) = a(b(i))
Permutation compose(const Permutation& a, const Permutation& b);
Permutation invert(const Permutation& a);
// s_i . x (left multiplication: swaps values i, i+1)
Permutation left_mul_simple(int i, const Permutation& x);

int length(const Permutation& x); // inversion count
bool bruhat_leq(const Permutation& x, const Permutation& y);

// {i : i+1 appears left of i in one-line notation} = {i : s_i x < x}
std::set<int> tau(const Permutation& x);
std::uint64_t tau_mask(const Permutation& x); // bit i set iff i in tau(x)

// x in D_{i,j} iff i in tau(x) and j not in tau(x), |i-j| = 1
bool in_descent_set(int i, int j, const Permutation& x);
// the unique element of D_{j,i} among {s_i x, s_j x}
Permutation f_sn(int i, int j, const Permutation& x);

// dual Knuth step of type i (2 <= i <= n-1)
bool dual_knuth_related(const Permutation& x, const Permutation& y, int i);

// Text form: digit string for n <= 9 ("54312"), comma-separated otherwise.
std::string perm_str(const Permutation& x);
Permutation perm_parse(std::string_view s);

// all elements of S_n in lexicographic one-line order
std::vector<Permutation> all_permutations(int n);

} // namespace cellweb

#pragma once

// Independent brute-force Kazhdan-Lusztig solver used only by tests.
//
// Instead of the production recursion, this solves the two defining conditions
// directly: writing C_w = sum_y a_y T_y with a_w = v^(-l(w)/2), bar-invariance
// reads, coefficientwise against the precomputed bar images of the T-basis,
//
//     a_x = sum_y bar(a_y) * [T_x] bar(T_y).
//
// Processing x by decreasing length makes the right side known up to the
// diagonal term bar(a_x) v^(-l(x)), and the degree bound on P_{x,w} splits the
// exponent ranges of a_x and v^(-l(x)) bar(a_x), so every coefficient of
// P_{x,w} can be read off directly and the residual equation checked exactly.

#include "cellweb/kl.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cellweb::testing {

// all P_{y,w} for y < w (including the 1 entries; absent pairs are y not<= w)
inline std::map<std::pair<int, int>, LaurentPoly> kl_oracle(const SymmetricGroup& G) {
    auto bar_basis = hecke_bar_basis(G);
    std::map<std::pair<int, int>, LaurentPoly> table;
    std::vector<int> by_length(G.size());
    for (int k = 0; k < G.size(); ++k) by_length[k] = k;
    std::sort(by_length.begin(), by_length.end(),
              [&](int a, int b) { return G.len[a] > G.len[b]; });
    for (int w = 0; w < G.size(); ++w) {
        int lw = G.len[w];
        std::map<int, LaurentPoly> a; // coefficients of C_w on T_y
        a[w] = LaurentPoly::monomial(1, -lw);
        for (int x : by_length) {
            if (G.len[x] >= lw || a.count(x)) continue;
            // contribution of all already-solved longer y at T_x
            LaurentPoly rhs;
            for (const auto& [y, ay] : a) {
                auto it = bar_basis[y].terms.find(x);
                if (it != bar_basis[y].terms.end()) rhs += ay.bar() * it->second;
            }
            int lx = G.len[x], d = lw - lx;
            int sign = d % 2 ? -1 : 1;
            // a_x = sign * sum_k p_k v^((lw - 2lx - 2k)/2); the matching
            // diagonal term contributes sign * p_k v^((2k - lw)/2)
            LaurentPoly p, ax;
            for (int k = 0; 2 * k <= d - 1; ++k) {
                Int pk = sign * rhs.coeff(lw - 2 * lx - 2 * k);
                if (pk == 0) continue;
                p += LaurentPoly::monomial(pk, 2 * k);
                ax += LaurentPoly::monomial(sign * pk, lw - 2 * lx - 2 * k);
            }
            LaurentPoly residual = ax - ax.bar().shifted(-2 * lx) - rhs;
            if (!residual.is_zero())
                throw std::runtime_error("kl_oracle: defining conditions unsolvable");
            if (!ax.is_zero()) a[x] = ax;
            if (!p.is_zero()) table[{x, w}] = p;
        }
    }
    return table;
}

} // namespace cellweb::testing

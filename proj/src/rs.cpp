#include "cellweb/rs.hpp"

#include <algorithm>
#include <stdexcept>

namespace cellweb {

std::pair<StandardTableau, StandardTableau> rs(const Permutation& w) {
    std::vector<std::vector<int>> p, q;
    for (int step = 1; step <= w.n(); ++step) {
        int v = w(step);
        size_t r = 0;
        for (;; ++r) {
            if (r == p.size()) {
                p.emplace_back();
                q.emplace_back();
            }
            auto& row = p[r];
            // bump the smallest entry strictly greater than v
            auto it = std::upper_bound(row.begin(), row.end(), v);
            if (it == row.end()) {
                row.push_back(v);
                q[r].push_back(step);
                break;
            }
            std::swap(*it, v);
        }
    }
    StandardTableau P, Q;
    P.rows = std::move(p);
    Q.rows = std::move(q);
    return {P, Q};
}

Permutation rs_inverse(const StandardTableau& P, const StandardTableau& Q) {
    if (P.shape() != Q.shape()) throw std::invalid_argument("rs_inverse: shape mismatch");
    int n = P.size();
    auto p = P.rows;
    std::vector<int> one_line(n);
    for (int step = n; step >= 1; --step) {
        auto [r, c] = Q.cell_of(step);
        if (c != (int)p[r - 1].size()) throw std::invalid_argument("rs_inverse: invalid pair");
        int v = p[r - 1][c - 1];
        p[r - 1].pop_back();
        for (int row = r - 2; row >= 0; --row) {
            // reverse bump: replace the largest entry strictly smaller than v
            auto it = std::lower_bound(p[row].begin(), p[row].end(), v);
            if (it == p[row].begin()) throw std::invalid_argument("rs_inverse: invalid pair");
            --it;
            std::swap(*it, v);
        }
        one_line[step - 1] = v;
    }
    return Permutation(std::move(one_line));
}

} // namespace cellweb

#include "cellweb/gentau.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cellweb {

int TauSystem::pair_index(int i, int j) {
    if (i < 1 || j < 1 || (i - j) * (i - j) != 1)
        throw std::invalid_argument("TauSystem: (i,j) must be adjacent generators");
    return 2 * (std::min(i, j) - 1) + (i > j ? 1 : 0);
}

namespace {

// fill ftab from a callback computing f_{i,j}(x) for x in D_{i,j}
template <typename Fn>
void build_ftab(TauSystem& s, Fn&& f) {
    int pairs = s.n >= 3 ? 2 * (s.n - 2) : 0;
    s.ftab.assign(pairs, std::vector<int>(s.size(), -1));
    for (int lo = 1; lo + 1 <= s.n - 1; ++lo) {
        for (int flip = 0; flip < 2; ++flip) {
            int i = flip ? lo + 1 : lo, j = flip ? lo : lo + 1;
            auto& row = s.ftab[TauSystem::pair_index(i, j)];
            for (std::size_t x = 0; x < s.size(); ++x)
                if (s.in_d(i, j, (int)x)) row[x] = f(i, j, (int)x);
        }
    }
}

} // namespace

TauSystem perm_system(int n) {
    TauSystem s;
    s.n = n;
    auto elems = all_permutations(n);
    std::map<Permutation, int> index;
    for (std::size_t k = 0; k < elems.size(); ++k) {
        s.labels.push_back(perm_str(elems[k]));
        s.tau.push_back(tau_mask(elems[k]));
        index.emplace(elems[k], (int)k);
    }
    build_ftab(s, [&](int i, int j, int x) { return index.at(f_sn(i, j, elems[x])); });
    return s;
}

TauSystem tableau_system(const std::vector<int>& shape) {
    TauSystem s;
    int n = 0;
    for (int p : shape) n += p;
    s.n = n;
    auto elems = all_standard_tableaux(shape);
    std::map<StandardTableau, int> index;
    for (std::size_t k = 0; k < elems.size(); ++k) {
        s.labels.push_back(yt_str(elems[k]));
        s.tau.push_back(tau_mask(elems[k]));
        index.emplace(elems[k], (int)k);
    }
    build_ftab(s, [&](int i, int j, int x) { return index.at(f_yt(i, j, elems[x])); });
    return s;
}

TauSystem tableau_system_all(int n) {
    TauSystem s;
    s.n = n;
    auto elems = all_standard_tableaux_n(n);
    std::map<StandardTableau, int> index;
    for (std::size_t k = 0; k < elems.size(); ++k) {
        s.labels.push_back(yt_str(elems[k]));
        s.tau.push_back(tau_mask(elems[k]));
        index.emplace(elems[k], (int)k);
    }
    build_ftab(s, [&](int i, int j, int x) { return index.at(f_yt(i, j, elems[x])); });
    return s;
}

TauSystem web_system(int n) {
    TauSystem s;
    s.n = 3 * n;
    auto tableaux = all_standard_tableaux({n, n, n});
    std::vector<Web> webs;
    std::map<std::string, int> index;
    for (std::size_t k = 0; k < tableaux.size(); ++k) {
        webs.push_back(tableau_to_web(tableaux[k]));
        s.labels.push_back(yt_str(tableaux[k]));
        s.tau.push_back(tau_web_mask(webs[k]));
        index.emplace(canonical_key(webs[k]), (int)k);
    }
    build_ftab(s, [&](int i, int j, int x) {
        return index.at(canonical_key(f_web(i, j, webs[x])));
    });
    return s;
}

TauSystem klcell_system(const KLTable& t, const Cell& cell) {
    TauSystem s;
    s.n = t.n();
    std::map<int, int> index; // group element index -> position in cell
    for (std::size_t k = 0; k < cell.members.size(); ++k) {
        int w = cell.members[k];
        s.labels.push_back(perm_str(t.group().elems[w]));
        s.tau.push_back(t.group().taum[w]);
        index.emplace(w, (int)k);
    }
    build_ftab(s, [&](int i, int j, int x) {
        return index.at(f_kl(t, cell, i, j, cell.members[x]));
    });
    return s;
}

TauSystem disjoint_union(const TauSystem& a, const TauSystem& b) {
    if (a.n != b.n)
        throw std::invalid_argument("disjoint_union: systems have different generator ranks");
    TauSystem s;
    s.n = a.n;
    for (std::size_t k = 0; k < a.size(); ++k) {
        s.labels.push_back("a:" + a.labels[k]);
        s.tau.push_back(a.tau[k]);
    }
    for (std::size_t k = 0; k < b.size(); ++k) {
        s.labels.push_back("b:" + b.labels[k]);
        s.tau.push_back(b.tau[k]);
    }
    int pairs = s.n >= 3 ? 2 * (s.n - 2) : 0;
    s.ftab.assign(pairs, std::vector<int>(s.size(), -1));
    int off = (int)a.size();
    for (int p = 0; p < pairs; ++p) {
        for (std::size_t x = 0; x < a.size(); ++x) s.ftab[p][x] = a.ftab[p][x];
        for (std::size_t x = 0; x < b.size(); ++x)
            s.ftab[p][off + x] = b.ftab[p][x] == -1 ? -1 : b.ftab[p][x] + off;
    }
    return s;
}

namespace {

TauPartition canonicalize(const std::vector<std::vector<int>>& sigs) {
    TauPartition p;
    p.block.resize(sigs.size());
    std::map<std::vector<int>, int> ids;
    for (std::size_t x = 0; x < sigs.size(); ++x) {
        auto [it, inserted] = ids.emplace(sigs[x], p.nblocks);
        if (inserted) ++p.nblocks;
        p.block[x] = it->second;
    }
    return p;
}

TauPartition order_zero(const TauSystem& s) {
    std::vector<std::vector<int>> sigs(s.size());
    for (std::size_t x = 0; x < s.size(); ++x)
        sigs[x] = {(int)(s.tau[x] & 0xffffffffu), (int)(s.tau[x] >> 32)};
    return canonicalize(sigs);
}

TauPartition refine(const TauSystem& s, const TauPartition& prev) {
    std::vector<std::vector<int>> sigs(s.size());
    for (std::size_t x = 0; x < s.size(); ++x) {
        auto& sig = sigs[x];
        sig.push_back(prev.block[x]);
        for (const auto& row : s.ftab)
            sig.push_back(row[x] == -1 ? -1 : prev.block[row[x]]);
    }
    return canonicalize(sigs);
}

} // namespace

TauPartition order_k_partition(const TauSystem& s, int k) {
    TauPartition p = order_zero(s);
    for (int r = 0; r < k; ++r) p = refine(s, p);
    return p;
}

std::pair<TauPartition, int> fixpoint_partition(const TauSystem& s) {
    TauPartition p = order_zero(s);
    for (int k = 0;; ++k) {
        TauPartition q = refine(s, p);
        if (q == p) return {p, k};
        p = std::move(q);
    }
}

MatchResult match_across(const TauSystem& a, const TauSystem& b) {
    MatchResult r;
    TauSystem u = disjoint_union(a, b);
    auto [p, k] = fixpoint_partition(u);
    r.stable_order = k;
    int off = (int)a.size();
    std::vector<std::vector<int>> from_a(p.nblocks), from_b(p.nblocks);
    for (std::size_t x = 0; x < a.size(); ++x) from_a[p.block[x]].push_back((int)x);
    for (std::size_t x = 0; x < b.size(); ++x) from_b[p.block[off + x]].push_back((int)x);
    r.functional = true;
    bool bijective = true;
    for (int blk = 0; blk < p.nblocks; ++blk) {
        if (from_b[blk].size() != 1 || from_a[blk].empty()) {
            r.functional = false;
            if (r.detail.empty())
                r.detail = "block " + std::to_string(blk) + " holds " +
                           std::to_string(from_a[blk].size()) + " objects from a and " +
                           std::to_string(from_b[blk].size()) + " from b";
        }
        if (from_a[blk].size() != 1 || from_b[blk].size() != 1) bijective = false;
    }
    if (r.functional)
        for (int blk = 0; blk < p.nblocks; ++blk)
            for (int x : from_a[blk]) r.pairs.emplace_back(x, from_b[blk][0]);
    std::sort(r.pairs.begin(), r.pairs.end());
    r.matched = r.functional && bijective;
    if (r.matched) r.detail.clear();
    return r;
}

} // namespace cellweb

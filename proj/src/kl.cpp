#include "cellweb/kl.hpp"

#include "cellweb/parallel.hpp"
#include "cellweb/rs.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cellweb {

SymmetricGroup::SymmetricGroup(int n_) : n(n_) {
    if (n < 1 || n > 12) throw std::invalid_argument("SymmetricGroup: n out of range");
    elems = all_permutations(n);
    int N = (int)elems.size();
    len.resize(N);
    taum.resize(N);
    inv.resize(N);
    left_mult.assign(n - 1 >= 0 ? n - 1 : 0, std::vector<int>(N));
    for (int w = 0; w < N; ++w) {
        len[w] = length(elems[w]);
        taum[w] = tau_mask(elems[w]);
        inv[w] = index(invert(elems[w]));
        for (int i = 1; i <= n - 1; ++i)
            left_mult[i - 1][w] = index(left_mul_simple(i, elems[w]));
    }
}

int SymmetricGroup::index(const Permutation& p) const {
    if (p.n() != n) throw std::invalid_argument("SymmetricGroup::index: size mismatch");
    // lexicographic rank via Lehmer code
    long long fact = 1;
    for (int i = 2; i < n; ++i) fact *= i; // (n-1)!
    long long rank = 0;
    std::vector<bool> used(n + 1, false);
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int v = 1; v < p.w[i]; ++v)
            if (!used[v]) ++smaller;
        rank += smaller * fact;
        used[p.w[i]] = true;
        if (n - 1 - i > 0) fact /= (n - 1 - i);
    }
    return (int)rank;
}

void HeckeElement::add(int w, const LaurentPoly& c) {
    auto it = terms.find(w);
    if (it == terms.end()) {
        if (!c.is_zero()) terms.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
}

HeckeElement hecke_mul_generator(const SymmetricGroup& G, const HeckeElement& h, int i) {
    static const LaurentPoly v = LaurentPoly::v();
    static const LaurentPoly vm1 = LaurentPoly::v() - LaurentPoly(1);
    HeckeElement r;
    for (const auto& [w, c] : h.terms) {
        int sw = G.left_mult[i - 1][w];
        if (G.len[sw] > G.len[w]) {
            r.add(sw, c);
        } else {
            r.add(sw, v * c);
            r.add(w, vm1 * c);
        }
    }
    return r;
}

HeckeElement hecke_mul_generator_inverse(const SymmetricGroup& G, const HeckeElement& h, int i) {
    // T_s^-1 = v^-1 T_s + (v^-1 - 1) T_e
    static const LaurentPoly vinv = LaurentPoly::monomial(1, -2);
    static const LaurentPoly vinv_m1 = LaurentPoly::monomial(1, -2) - LaurentPoly(1);
    HeckeElement ts = hecke_mul_generator(G, h, i);
    HeckeElement r;
    for (const auto& [w, c] : ts.terms) r.add(w, vinv * c);
    for (const auto& [w, c] : h.terms) r.add(w, vinv_m1 * c);
    return r;
}

std::vector<HeckeElement> hecke_bar_basis(const SymmetricGroup& G) {
    int N = G.size();
    std::vector<HeckeElement> bar(N);
    std::vector<int> order(N);
    for (int i = 0; i < N; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return G.len[a] < G.len[b]; });
    for (int w : order) {
        if (G.len[w] == 0) {
            bar[w].add(w, LaurentPoly(1));
            continue;
        }
        int s = 1;
        while (!((G.taum[w] >> s) & 1)) ++s;
        int sw = G.left_mult[s - 1][w];
        // T_w = T_s T_sw, so bar(T_w) = T_s^-1 bar(T_sw)
        bar[w] = hecke_mul_generator_inverse(G, bar[sw], s);
    }
    return bar;
}

KLTable::KLTable(int n, std::nullptr_t) : G_(n) {}

KLTable::KLTable(int n, int threads, bool force) : G_(n) {
    if (n > 9) throw std::invalid_argument("KLTable: n exceeds configured bound 9");
    if (n > 7 && !force)
        throw std::invalid_argument("KLTable: n > 7 exceeds the memory guard (pass force to override)");
    compute_bruhat();
    compute_polynomials(threads);
    verify_defining_conditions(threads);
}

bool KLTable::leq(int y, int w) const {
    return (leq_bits_[w][y >> 6] >> (y & 63)) & 1;
}

void KLTable::compute_bruhat() {
    int N = G_.size();
    int words = (N + 63) / 64;
    leq_bits_.assign(N, std::vector<std::uint64_t>(words, 0));
    parallel_for(N, 0, [&](std::size_t w) {
        for (int y = 0; y < N; ++y) {
            if (G_.len[y] > G_.len[w]) continue;
            if (bruhat_leq(G_.elems[y], G_.elems[(int)w]))
                leq_bits_[w][y >> 6] |= (std::uint64_t)1 << (y & 63);
        }
    });
}

LaurentPoly KLTable::P(int y, int w) const {
    if (y == w) return LaurentPoly(1);
    if (!leq(y, w)) return {};
    const auto& row = nonone_[w];
    auto it = std::lower_bound(row.begin(), row.end(), y,
                               [](const auto& a, int b) { return a.first < b; });
    if (it != row.end() && it->first == y) return it->second;
    return LaurentPoly(1);
}

void KLTable::compute_polynomials(int threads) {
    int N = G_.size();
    nonone_.assign(N, {});
    mu_down_.assign(N, {});
    static const LaurentPoly u = LaurentPoly::v();

    int maxlen = G_.n * (G_.n - 1) / 2;
    std::vector<std::vector<int>> strata(maxlen + 1);
    for (int w = 0; w < N; ++w) strata[G_.len[w]].push_back(w);

    auto derive_mu_row = [&](int w) {
        for (int y = 0; y < N; ++y) {
            if (y == w || !leq(y, w)) continue;
            int d = G_.len[w] - G_.len[y];
            if (d % 2 == 0) continue;
            int m = 0;
            if (d == 1) {
                m = 1;
            } else {
                LaurentPoly p = P(y, w);
                if (!p.is_zero() && p.max_exp() == d - 1) // v-degree (d-1)/2 attained
                    m = p.coeff(d - 1).convert_to<int>();
            }
            if (m != 0) mu_down_[w].emplace_back(y, m);
        }
    };

    for (int L = 0; L <= maxlen; ++L) {
        auto& ws = strata[L];
        if (L > 0) {
            parallel_for(ws.size(), threads, [&](std::size_t idx) {
                int w = ws[idx];
                int s = 1;
                while (!((G_.taum[w] >> s) & 1)) ++s;
                int vv = G_.left_mult[s - 1][w];
                // mu edges of vv with left descent s, used in the correction sum
                std::vector<std::pair<int, int>> zs;
                for (const auto& [z, m] : mu_down_[vv])
                    if ((G_.taum[z] >> s) & 1) zs.emplace_back(z, m);
                for (int y = 0; y < N; ++y) {
                    if (y == w || !leq(y, w)) continue;
                    int sy = G_.left_mult[s - 1][y];
                    LaurentPoly p;
                    if (G_.len[sy] < G_.len[y])
                        p = P(sy, vv) + u * P(y, vv);
                    else
                        p = u * P(sy, vv) + P(y, vv);
                    for (const auto& [z, m] : zs) {
                        if (!leq(y, z)) continue;
                        p -= LaurentPoly::monomial(m, G_.len[w] - G_.len[z]) * P(y, z);
                    }
                    if (p.is_zero())
                        throw std::runtime_error("KL recursion produced zero polynomial");
                    if (!p.is_one()) nonone_[w].emplace_back(y, std::move(p));
                }
            });
        }
        parallel_for(ws.size(), threads, [&](std::size_t idx) { derive_mu_row(ws[idx]); });
    }
}

int KLTable::mu(int y, int w) const {
    if (y == w) return 0;
    if (G_.len[y] > G_.len[w]) std::swap(y, w);
    const auto& row = mu_down_[w];
    auto it = std::lower_bound(row.begin(), row.end(), y,
                               [](const auto& a, int b) { return a.first < b; });
    if (it != row.end() && it->first == y) return it->second;
    return 0;
}

HeckeElement KLTable::c_basis_element(int w) const {
    HeckeElement c;
    int lw = G_.len[w];
    for (int y = 0; y < G_.size(); ++y) {
        if (!leq(y, w)) continue;
        int ly = G_.len[y];
        LaurentPoly a = P(y, w).bar().shifted(lw - 2 * ly);
        if ((lw - ly) % 2 != 0) a = -a;
        c.add(y, a);
    }
    return c;
}

void KLTable::verify_defining_conditions(int threads) const {
    int N = G_.size();
    // degree bound, P_{w,w}=1 (implicit), mu nonnegativity
    for (int w = 0; w < N; ++w) {
        for (const auto& [y, p] : nonone_[w]) {
            int d = G_.len[w] - G_.len[y];
            if (p.is_zero() || p.min_exp() < 0 || p.max_exp() > d - 1 || p.has_half_exponents())
                throw std::runtime_error("KL degree bound violated");
            if (p.coeff(0) != 1)
                throw std::runtime_error("KL constant term != 1");
        }
        for (const auto& [y, m] : mu_down_[w])
            if (m < 0) throw std::runtime_error("negative mu coefficient");
    }
    // bar-invariance of every C_w
    auto bar_basis = hecke_bar_basis(G_);
    parallel_for(N, threads, [&](std::size_t w) {
        HeckeElement c = c_basis_element((int)w);
        HeckeElement barc;
        for (const auto& [y, a] : c.terms) {
            LaurentPoly ab = a.bar();
            for (const auto& [z, bz] : bar_basis[y].terms) barc.add(z, ab * bz);
        }
        if (!(barc == c))
            throw std::runtime_error("C_w is not bar-invariant: w=" + perm_str(G_.elems[w]));
    });
}

void KLTable::save(std::ostream& out) const {
    out << "kltable 1\n";
    out << "n " << G_.n << "\n";
    for (int w = 0; w < G_.size(); ++w)
        for (const auto& [y, p] : nonone_[w])
            out << "P\t" << perm_str(G_.elems[y]) << "\t" << perm_str(G_.elems[w]) << "\t"
                << p.str() << "\n";
}

KLTable KLTable::load(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "kltable 1")
        throw std::invalid_argument("KLTable::load: bad header");
    if (!std::getline(in, line) || line.rfind("n ", 0) != 0)
        throw std::invalid_argument("KLTable::load: missing n");
    int n = std::stoi(line.substr(2));
    KLTable t(n, nullptr);
    t.compute_bruhat();
    t.nonone_.assign(t.G_.size(), {});
    t.mu_down_.assign(t.G_.size(), {});
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string tag, ys, ws, ps;
        std::getline(ss, tag, '\t');
        std::getline(ss, ys, '\t');
        std::getline(ss, ws, '\t');
        std::getline(ss, ps, '\t');
        if (tag != "P") throw std::invalid_argument("KLTable::load: bad record");
        int y = t.G_.index(perm_parse(ys));
        int w = t.G_.index(perm_parse(ws));
        t.nonone_[w].emplace_back(y, LaurentPoly::parse(ps));
    }
    for (auto& row : t.nonone_)
        std::sort(row.begin(), row.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    // re-derive mu from the polynomials
    for (int w = 0; w < t.G_.size(); ++w) {
        for (int y = 0; y < t.G_.size(); ++y) {
            if (y == w || !t.leq(y, w)) continue;
            int d = t.G_.len[w] - t.G_.len[y];
            if (d % 2 == 0) continue;
            int m = 0;
            if (d == 1) m = 1;
            else {
                LaurentPoly p = t.P(y, w);
                if (!p.is_zero() && p.max_exp() == d - 1) m = p.coeff(d - 1).convert_to<int>();
            }
            if (m != 0) t.mu_down_[w].emplace_back(y, m);
        }
    }
    return t;
}

std::vector<Cell> left_cells(const KLTable& t) {
    const auto& G = t.group();
    int N = G.size();
    // directed edges x -> y when x precedes y in the left preorder:
    // mu(x,y) != 0 and tau(x) not a subset of tau(y)
    std::vector<std::vector<int>> adj(N);
    for (int w = 0; w < N; ++w) {
        for (const auto& [y, m] : t.mu_down(w)) {
            (void)m;
            if ((G.taum[y] & ~G.taum[w]) != 0) adj[y].push_back(w);
            if ((G.taum[w] & ~G.taum[y]) != 0) adj[w].push_back(y);
        }
    }
    // iterative Tarjan SCC
    std::vector<int> idx(N, -1), low(N, 0), comp(N, -1), stack_;
    std::vector<bool> on_stack(N, false);
    int counter = 0, ncomp = 0;
    std::vector<std::pair<int, size_t>> call;
    for (int root = 0; root < N; ++root) {
        if (idx[root] != -1) continue;
        call.emplace_back(root, 0);
        while (!call.empty()) {
            auto& [u, ei] = call.back();
            if (ei == 0) {
                idx[u] = low[u] = counter++;
                stack_.push_back(u);
                on_stack[u] = true;
            }
            bool descended = false;
            while (ei < adj[u].size()) {
                int v = adj[u][ei++];
                if (idx[v] == -1) {
                    call.emplace_back(v, 0);
                    descended = true;
                    break;
                }
                if (on_stack[v]) low[u] = std::min(low[u], idx[v]);
            }
            if (descended) continue;
            if (low[u] == idx[u]) {
                for (;;) {
                    int v = stack_.back();
                    stack_.pop_back();
                    on_stack[v] = false;
                    comp[v] = ncomp;
                    if (v == u) break;
                }
                ++ncomp;
            }
            int u_done = u;
            call.pop_back();
            if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[u_done]);
        }
    }
    std::vector<Cell> cells(ncomp);
    for (int w = 0; w < N; ++w) cells[comp[w]].members.push_back(w);
    // attach right tableaux and validate against the RS Q-fibers
    std::map<std::string, int> q_owner;
    for (int c = 0; c < ncomp; ++c) {
        std::sort(cells[c].members.begin(), cells[c].members.end());
        cells[c].rightTableau = rs(G.elems[cells[c].members[0]]).second;
        std::string key = yt_str(cells[c].rightTableau);
        for (int w : cells[c].members)
            if (!(rs(G.elems[w]).second == cells[c].rightTableau))
                throw std::runtime_error("left cell is not an RS Q-fiber");
        auto [it, fresh] = q_owner.emplace(key, c);
        if (!fresh) throw std::runtime_error("two left cells share a Q-tableau");
    }
    std::sort(cells.begin(), cells.end(),
              [](const Cell& a, const Cell& b) { return a.members < b.members; });
    return cells;
}

std::vector<std::pair<int, LaurentPoly>> ts_action_on_cell(const KLTable& t, const Cell& cell,
                                                           int i, int w) {
    if (!std::binary_search(cell.members.begin(), cell.members.end(), w))
        throw std::invalid_argument("ts_action_on_cell: w not in cell");
    const auto& G = t.group();
    std::vector<std::pair<int, LaurentPoly>> out;
    if ((G.taum[w] >> i) & 1) {
        out.emplace_back(w, LaurentPoly(-1));
        return out;
    }
    out.emplace_back(w, LaurentPoly::v());
    for (int y : cell.members) {
        if (!((G.taum[y] >> i) & 1)) continue;
        int m = t.mu(y, w);
        if (m != 0) out.emplace_back(y, LaurentPoly::monomial(m, 1));
    }
    return out;
}

int f_kl(const KLTable& t, const Cell& cell, int i, int j, int w) {
    if (std::abs(i - j) != 1) throw std::invalid_argument("f_kl: |i-j| != 1");
    const auto& G = t.group();
    if (!((G.taum[w] >> i) & 1) || ((G.taum[w] >> j) & 1))
        throw std::invalid_argument("f_kl: C_w not in D^KL_{i,j}");
    auto sum = ts_action_on_cell(t, cell, j, w);
    int found = -1;
    for (const auto& [y, c] : sum) {
        (void)c;
        if (y == w) continue;
        if (((G.taum[y] >> j) & 1) && !((G.taum[y] >> i) & 1)) {
            if (found != -1) throw std::runtime_error("f_kl: uniqueness violated");
            found = y;
        }
    }
    if (found == -1) throw std::runtime_error("f_kl: no candidate found");
    return found;
}

} // namespace cellweb

#include "cellweb/verify.hpp"

#include "cellweb/gentau.hpp"
#include "cellweb/kl.hpp"
#include "cellweb/rs.hpp"
#include "cellweb/web.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

namespace cellweb {

namespace {

int get_int(const std::map<std::string, std::string>& params, const std::string& key, int dflt) {
    auto it = params.find(key);
    if (it == params.end()) return dflt;
    return std::stoi(it->second);
}

using Matrix = std::vector<std::vector<long long>>;

Matrix identity_matrix(int d) {
    Matrix m(d, std::vector<long long>(d, 0));
    for (int k = 0; k < d; ++k) m[k][k] = 1;
    return m;
}

Matrix mul(const Matrix& a, const Matrix& b) {
    int d = (int)a.size();
    Matrix r(d, std::vector<long long>(d, 0));
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) {
            long long v = a[i][k];
            if (!v) continue;
            for (int j = 0; j < d; ++j) r[i][j] += v * b[k][j];
        }
    return r;
}

long long trace(const Matrix& m) {
    long long t = 0;
    for (std::size_t k = 0; k < m.size(); ++k) t += m[k][k];
    return t;
}

// the q=-1 action of each generator on the reduced-web basis of size [n,n,n]
struct WebModule {
    std::vector<StandardTableau> tableaux;
    std::vector<Web> basis;
    std::map<std::string, int> index;
    std::vector<Matrix> gen; // gen[i-1] for s_i, column = source basis element
};

WebModule web_module(int n) {
    WebModule m;
    m.tableaux = all_standard_tableaux({n, n, n});
    for (std::size_t k = 0; k < m.tableaux.size(); ++k) {
        m.basis.push_back(tableau_to_web(m.tableaux[k]));
        m.index.emplace(canonical_key(m.basis[k]), (int)k);
    }
    int d = (int)m.basis.size();
    for (int i = 1; i <= 3 * n - 1; ++i) {
        Matrix g(d, std::vector<long long>(d, 0));
        for (int col = 0; col < d; ++col) {
            WebSumZ s;
            s.add(m.basis[col], 1);
            for (const auto& [key, wc] : apply_generator(i, s).terms) {
                auto it = m.index.find(key);
                if (it == m.index.end())
                    throw std::runtime_error("web action left the reduced-web span");
                g[it->second][col] = wc.second;
            }
        }
        m.gen.push_back(std::move(g));
    }
    return m;
}

// matrices of every group element from generator matrices, by length recursion
std::vector<Matrix> group_matrices(const SymmetricGroup& G, const std::vector<Matrix>& gen) {
    std::vector<int> order(G.size());
    for (int w = 0; w < G.size(); ++w) order[w] = w;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return G.len[a] < G.len[b]; });
    std::vector<Matrix> out(G.size());
    int d = (int)gen.front().size();
    for (int w : order) {
        if (G.len[w] == 0) {
            out[w] = identity_matrix(d);
            continue;
        }
        for (int i = 1; i <= G.n - 1; ++i) {
            int sw = G.left_mult[i - 1][w];
            if (G.len[sw] < G.len[w]) {
                out[w] = mul(gen[i - 1], out[sw]);
                break;
            }
        }
    }
    return out;
}

std::string set_str(const std::set<int>& s) {
    std::string r = "{";
    for (int x : s) r += (r.size() > 1 ? "," : "") + std::to_string(x);
    return r + "}";
}

// ---- individual checks; each returns (pass, payload) ----

std::pair<bool, std::string> check_rs_example() {
    auto [P, Q] = rs(perm_parse("54312"));
    StandardTableau p_want = yt_parse("1,2/3/4/5"), q_want = yt_parse("1,5/2/3/4");
    if (P == p_want && Q == q_want) return {true, "P=" + yt_str(P) + " Q=" + yt_str(Q)};
    return {false, "rs(54312) gave P=" + yt_str(P) + " Q=" + yt_str(Q)};
}

std::pair<bool, std::string> check_f_yt_chain() {
    StandardTableau t = yt_parse("1,2,5/3,4/6");
    const std::pair<int, int> steps[] = {{5, 4}, {4, 3}, {2, 1}, {3, 4}};
    for (auto [i, j] : steps) t = f_yt(i, j, t);
    StandardTableau want = yt_parse("1,4,6/2,5/3");
    if (!(t == want)) return {false, "chain ended at " + yt_str(t)};
    if (!is_column_superstandard(t)) return {false, "endpoint not column superstandard"};
    // the constructive path must land on the same canonical form
    StandardTableau u = yt_parse("1,2,5/3,4/6");
    for (auto [i, j] : to_superstandard_path(u)) u = f_yt(i, j, u);
    if (!is_column_superstandard(u)) return {false, "constructive path failed"};
    return {true, "endpoint " + yt_str(t)};
}

std::pair<bool, std::string> check_tau_commute(int n) {
    for (const auto& x : all_permutations(n)) {
        auto [P, Q] = rs(x);
        if (tau(x) != tau(P))
            return {false, "tau(" + perm_str(x) + ") != tau(P)"};
        if (tau(invert(x)) != tau(Q))
            return {false, "tau(" + perm_str(x) + "^-1) != tau(Q)"};
        for (int lo = 1; lo + 1 <= n - 1; ++lo)
            for (int flip = 0; flip < 2; ++flip) {
                int i = flip ? lo + 1 : lo, j = flip ? lo : lo + 1;
                if (!in_descent_set(i, j, x)) continue;
                Permutation fx = f_sn(i, j, x);
                auto [fP, fQ] = rs(fx);
                if (!(fP == f_yt(i, j, P)))
                    return {false, "P(f_sn) != f_yt(P) at " + perm_str(x) + " (i,j)=(" +
                                       std::to_string(i) + "," + std::to_string(j) + ")"};
                if (!(fQ == Q))
                    return {false, "Q not preserved by f_sn at " + perm_str(x)};
            }
    }
    return {true, std::to_string(all_permutations(n).size()) + " permutations checked"};
}

std::pair<bool, std::string> check_cells(int n, int threads) {
    KLTable t(n, threads);
    auto cells = left_cells(t); // throws if cells differ from the RS Q-fibers
    std::size_t want = all_standard_tableaux_n(n).size();
    if (cells.size() != want)
        return {false, "cell count " + std::to_string(cells.size()) + " != #SYT " +
                           std::to_string(want)};
    return {true, std::to_string(cells.size()) + " cells equal the RS Q-fibers"};
}

std::pair<bool, std::string> check_klexchange(int n, int threads) {
    KLTable t(n, threads);
    auto cells = left_cells(t);
    const auto& G = t.group();
    long checked = 0;
    for (const auto& cell : cells)
        for (int w : cell.members)
            for (int lo = 1; lo + 1 <= n - 1; ++lo)
                for (int flip = 0; flip < 2; ++flip) {
                    int i = flip ? lo + 1 : lo, j = flip ? lo : lo + 1;
                    if (!in_descent_set(i, j, G.elems[w])) continue;
                    int got = f_kl(t, cell, i, j, w);
                    int want = G.index(f_sn(i, j, G.elems[w]));
                    ++checked;
                    if (got != want)
                        return {false, "f_kl != f_sn at w=" + perm_str(G.elems[w]) + " (i,j)=(" +
                                           std::to_string(i) + "," + std::to_string(j) + ")"};
                }
    return {true, std::to_string(checked) + " exchange instances agree"};
}

std::pair<bool, std::string> check_kk_roundtrip(int n) {
    long count = 0;
    for (int m = 1; m <= n; ++m)
        for (const auto& T : all_standard_tableaux({m, m, m})) {
            StandardTableau back = web_to_tableau(tableau_to_web(T));
            ++count;
            if (!(back == T))
                return {false, yt_str(T) + " round-tripped to " + yt_str(back)};
        }
    return {true, std::to_string(count) + " tableaux round-tripped"};
}

std::pair<bool, std::string> check_gentau_match(int n) {
    auto r = match_across(tableau_system({n, n, n}), web_system(n));
    if (!r.matched) return {false, r.detail};
    return {true, std::to_string(r.pairs.size()) + " matched pairs, stable at order " +
                      std::to_string(r.stable_order)};
}

std::pair<bool, std::string> check_s_squared(int n) {
    WebModule m = web_module(n);
    int g = 3 * n - 1, d = (int)m.basis.size();
    Matrix id = identity_matrix(d);
    for (int i = 1; i <= g; ++i)
        if (mul(m.gen[i - 1], m.gen[i - 1]) != id)
            return {false, "s_" + std::to_string(i) + "^2 != identity"};
    for (int i = 1; i + 1 <= g; ++i) {
        Matrix a = mul(m.gen[i - 1], mul(m.gen[i], m.gen[i - 1]));
        Matrix b = mul(m.gen[i], mul(m.gen[i - 1], m.gen[i]));
        if (a != b) return {false, "braid relation fails at i=" + std::to_string(i)};
    }
    for (int i = 1; i <= g; ++i)
        for (int j = i + 2; j <= g; ++j)
            if (mul(m.gen[i - 1], m.gen[j - 1]) != mul(m.gen[j - 1], m.gen[i - 1]))
                return {false, "distant generators do not commute (" + std::to_string(i) + "," +
                                   std::to_string(j) + ")"};
    for (int k = 0; k < d; ++k) {
        auto t = tau_web(m.basis[k]);
        for (int i = 1; i <= g; ++i) {
            bool negates = true;
            for (int r = 0; r < d; ++r)
                if (m.gen[i - 1][r][k] != (r == k ? -1 : 0)) negates = false;
            if (negates != (t.count(i) > 0))
                return {false, "s_i W = -W iff i in tau(W) fails at basis " + std::to_string(k) +
                                   " i=" + std::to_string(i)};
        }
    }
    return {true, "relations hold on a " + std::to_string(d) + "-dimensional span"};
}

std::pair<bool, std::string> check_negative_coefficient(int n, int threads) {
    auto hits = find_negative_coefficient(n, threads, 8);
    for (const auto& h : hits)
        if (h.coeff == -2)
            return {true, "s_" + std::to_string(h.generator) + " . web(" + yt_str(h.source) +
                              ") contains a term with coefficient -2"};
    if (hits.empty()) return {false, "no negative coefficient found"};
    return {false, "negative coefficients found but none equal to -2"};
}

std::pair<bool, std::string> check_character_n2(int threads) {
    WebModule m = web_module(2);
    SymmetricGroup G(6);
    auto web_mats = group_matrices(G, m.gen);

    KLTable t(6, threads);
    auto cells = left_cells(t);
    const Cell* cell = nullptr;
    for (const auto& c : cells)
        if (c.rightTableau.shape() == std::vector<int>{2, 2, 2}) {
            cell = &c;
            break;
        }
    if (!cell) return {false, "no [2,2,2] cell found"};
    int d = (int)cell->members.size();
    if (d != (int)m.basis.size())
        return {false, "cell dimension " + std::to_string(d) + " != web span dimension"};
    std::map<int, int> pos;
    for (int k = 0; k < d; ++k) pos.emplace(cell->members[k], k);
    std::vector<Matrix> gen;
    for (int i = 1; i <= 5; ++i) {
        Matrix g(d, std::vector<long long>(d, 0));
        for (int col = 0; col < d; ++col)
            for (auto [y, coeff] : ts_action_on_cell(t, *cell, i, cell->members[col])) {
                Rational val = coeff.evaluate(1, 1); // specialize v = 1
                if (denominator(val) != 1)
                    return {false, "non-integral specialization in cell action"};
                g[pos.at(y)][col] = numerator(val).convert_to<long long>();
            }
        gen.push_back(std::move(g));
    }
    auto cell_mats = group_matrices(G, gen);
    for (int w = 0; w < G.size(); ++w)
        if (trace(web_mats[w]) != trace(cell_mats[w]))
            return {false, "character differs at w=" + perm_str(G.elems[w]) + ": web " +
                               std::to_string(trace(web_mats[w])) + " vs cell " +
                               std::to_string(trace(cell_mats[w]))};
    return {true, "720 traces agree between the web module and the [2,2,2] cell module"};
}

} // namespace

std::vector<std::string> known_checks() {
    return {"rs-example",       "f-yt-chain", "tau-commute", "cells-equal-rs-fibers",
            "klexchange",       "kk-roundtrip", "gentau-match", "s-squared",
            "negative-coefficient", "character-n2"};
}

VerifyReport run_check(const std::string& name,
                       const std::map<std::string, std::string>& params) {
    VerifyReport r;
    r.check = name;
    r.params = params;
    int threads = get_int(params, "threads", 0);
    auto start = std::chrono::steady_clock::now();
    std::pair<bool, std::string> res;
    if (name == "rs-example") res = check_rs_example();
    else if (name == "f-yt-chain") res = check_f_yt_chain();
    else if (name == "tau-commute") res = check_tau_commute(get_int(params, "n", 5));
    else if (name == "cells-equal-rs-fibers") res = check_cells(get_int(params, "n", 4), threads);
    else if (name == "klexchange") res = check_klexchange(get_int(params, "n", 4), threads);
    else if (name == "kk-roundtrip") res = check_kk_roundtrip(get_int(params, "n", 3));
    else if (name == "gentau-match") res = check_gentau_match(get_int(params, "n", 3));
    else if (name == "s-squared") res = check_s_squared(get_int(params, "n", 2));
    else if (name == "negative-coefficient")
        res = check_negative_coefficient(get_int(params, "n", 6), threads);
    else if (name == "character-n2") res = check_character_n2(threads);
    else throw std::invalid_argument("unknown check: " + name);
    r.pass = res.first;
    r.payload = res.second;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

} // namespace cellweb

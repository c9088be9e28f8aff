#include "cellweb/tableau.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace cellweb {

namespace {

bool rows_are_standard(const std::vector<std::vector<int>>& rows) {
    int n = 0;
    for (const auto& r : rows) n += (int)r.size();
    std::vector<bool> seen(n + 1, false);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].empty()) return false;
        if (i + 1 < rows.size() && rows[i + 1].size() > rows[i].size()) return false;
        for (size_t j = 0; j < rows[i].size(); ++j) {
            int v = rows[i][j];
            if (v < 1 || v > n || seen[v]) return false;
            seen[v] = true;
            if (j + 1 < rows[i].size() && rows[i][j + 1] <= v) return false;
            if (i + 1 < rows.size() && j < rows[i + 1].size() && rows[i + 1][j] <= v) return false;
        }
    }
    return true;
}

} // namespace

StandardTableau::StandardTableau(std::vector<std::vector<int>> r) : rows(std::move(r)) {
    if (!rows_are_standard(rows)) throw std::invalid_argument("not a standard tableau");
}

int StandardTableau::size() const {
    int n = 0;
    for (const auto& r : rows) n += (int)r.size();
    return n;
}

std::vector<int> StandardTableau::shape() const {
    std::vector<int> s;
    for (const auto& r : rows) s.push_back((int)r.size());
    return s;
}

int StandardTableau::row_of(int entry) const { return cell_of(entry).first; }

std::pair<int, int> StandardTableau::cell_of(int entry) const {
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j)
            if (rows[i][j] == entry) return {(int)i + 1, (int)j + 1};
    throw std::invalid_argument("entry not in tableau");
}

bool is_yamanouchi(const YamanouchiWord& w) {
    int p = 0, z = 0, m = 0;
    for (char c : w) {
        if (c == '+') ++p;
        else if (c == '0') ++z;
        else if (c == '-') ++m;
        else return false;
        if (!(p >= z && z >= m)) return false;
    }
    return true;
}

bool is_balanced_yamanouchi(const YamanouchiWord& w) {
    if (!is_yamanouchi(w) || w.size() % 3 != 0) return false;
    size_t p = std::count(w.begin(), w.end(), '+');
    return p == w.size() / 3 && (size_t)std::count(w.begin(), w.end(), '0') == p;
}

std::set<int> tau(const StandardTableau& Y) {
    std::set<int> r;
    int n = Y.size();
    std::vector<int> row(n + 1, 0);
    for (size_t i = 0; i < Y.rows.size(); ++i)
        for (int v : Y.rows[i]) row[v] = (int)i + 1;
    for (int i = 1; i < n; ++i)
        if (row[i + 1] > row[i]) r.insert(i);
    return r;
}

std::uint64_t tau_mask(const StandardTableau& Y) {
    std::uint64_t m = 0;
    for (int i : tau(Y)) m |= (std::uint64_t)1 << i;
    return m;
}

bool in_descent_set(int i, int j, const StandardTableau& Y) {
    auto m = tau_mask(Y);
    return (m >> i & 1) && !(m >> j & 1);
}

namespace {

// swap values i, i+1; returns empty optional-style flag via bool
bool try_swap(const StandardTableau& Y, int i, StandardTableau& out) {
    auto rows = Y.rows;
    for (auto& r : rows)
        for (int& v : r) {
            if (v == i) v = i + 1;
            else if (v == i + 1) v = i;
        }
    if (!rows_are_standard(rows)) return false;
    out.rows = std::move(rows);
    return true;
}

} // namespace

StandardTableau f_yt(int i, int j, const StandardTableau& Y) {
    if (std::abs(i - j) != 1) throw std::invalid_argument("f_yt: |i-j| != 1");
    if (!in_descent_set(i, j, Y)) throw std::invalid_argument("f_yt: Y not in D^YT_{i,j}");
    StandardTableau a, b;
    bool a_ok = try_swap(Y, i, a) && in_descent_set(j, i, a);
    bool b_ok = try_swap(Y, j, b) && in_descent_set(j, i, b);
    if (a_ok == b_ok) throw std::runtime_error("f_yt: uniqueness violated");
    return a_ok ? a : b;
}

StandardTableau column_superstandard(const std::vector<int>& shape) {
    std::vector<std::vector<int>> rows(shape.size());
    for (size_t i = 0; i < shape.size(); ++i) rows[i].resize(shape[i]);
    int next = 1;
    for (int c = 0; c < (shape.empty() ? 0 : shape[0]); ++c)
        for (size_t r = 0; r < shape.size() && (int)shape[r] > c; ++r)
            rows[r][c] = next++;
    return StandardTableau(rows);
}

bool is_column_superstandard(const StandardTableau& Y) {
    return Y == column_superstandard(Y.shape());
}

std::vector<std::pair<int, int>> to_superstandard_path(const StandardTableau& Y) {
    StandardTableau cur = Y;
    std::vector<std::pair<int, int>> path;
    int n = Y.size();

    // go(lo, hi): put the sub-tableau occupied by labels lo..hi (a standard
    // sub-board) into column superstandard order, following the lemma's proof.
    std::function<void(int, int)> go = [&](int lo, int hi) {
        if (hi - lo + 1 <= 1) return;
        // column index of each active label; one-column sub-boards are done
        int min_col = n + 1, max_col = 0;
        for (int v = lo; v <= hi; ++v) {
            int c = cur.cell_of(v).second;
            min_col = std::min(min_col, c);
            max_col = std::max(max_col, c);
        }
        if (min_col == max_col) return;
        // phase 1: push the largest non-descent rightward until s_{hi-1} leaves tau
        for (;;) {
            auto t = tau_mask(cur);
            int k = -1;
            for (int i = hi - 1; i >= lo; --i)
                if (!(t >> i & 1)) { k = i; break; }
            if (k == -1 || k == hi - 1) break;
            cur = f_yt(k + 1, k, cur);
            path.emplace_back(k + 1, k);
        }
        // phase 2: order labels lo..hi-1
        go(lo, hi - 1);
        // phase 3: drop the (now sequentially numbered) first column of the sub-board
        int c1 = 0;
        for (int v = lo; v <= hi; ++v)
            if (cur.cell_of(v).second == min_col) ++c1;
        go(lo + c1, hi);
    };
    go(1, n);

    if (!is_column_superstandard(cur))
        throw std::runtime_error("to_superstandard_path: did not reach canonical form");
    return path;
}

YamanouchiWord tableau_to_yamanouchi(const StandardTableau& T) {
    auto sh = T.shape();
    if (sh.size() != 3 || sh[0] != sh[1] || sh[1] != sh[2])
        throw std::invalid_argument("tableau_to_yamanouchi: shape must be [n,n,n]");
    int n3 = T.size();
    YamanouchiWord w(n3, '?');
    const char sym[3] = {'+', '0', '-'};
    for (int r = 0; r < 3; ++r)
        for (int v : T.rows[r]) w[v - 1] = sym[r];
    return w;
}

StandardTableau yamanouchi_to_tableau(const YamanouchiWord& w) {
    if (!is_balanced_yamanouchi(w))
        throw std::invalid_argument("yamanouchi_to_tableau: not a balanced Yamanouchi word");
    std::vector<std::vector<int>> rows(3);
    for (size_t i = 0; i < w.size(); ++i)
        rows[w[i] == '+' ? 0 : w[i] == '0' ? 1 : 2].push_back((int)i + 1);
    return StandardTableau(rows);
}

std::string yt_str(const StandardTableau& Y) {
    std::ostringstream out;
    for (size_t i = 0; i < Y.rows.size(); ++i) {
        if (i) out << "/";
        for (size_t j = 0; j < Y.rows[i].size(); ++j) {
            if (j) out << ",";
            out << Y.rows[i][j];
        }
    }
    return out.str();
}

StandardTableau yt_parse(std::string_view s) {
    std::vector<std::vector<int>> rows(1);
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) throw std::invalid_argument("yt_parse: empty entry");
        rows.back().push_back(std::stoi(cur));
        cur.clear();
    };
    for (char c : s) {
        if (std::isspace((unsigned char)c)) continue;
        if (c == ',') flush();
        else if (c == '/') { flush(); rows.emplace_back(); }
        else if (std::isdigit((unsigned char)c)) cur += c;
        else throw std::invalid_argument("yt_parse: bad character");
    }
    flush();
    return StandardTableau(std::move(rows));
}

std::vector<std::vector<int>> all_partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rem, int max_part) {
        if (rem == 0) { out.push_back(cur); return; }
        for (int p = std::min(rem, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<StandardTableau> all_standard_tableaux(const std::vector<int>& shape) {
    int n = 0;
    for (int s : shape) n += s;
    std::vector<std::vector<int>> rows(shape.size());
    for (size_t i = 0; i < shape.size(); ++i) rows[i].assign(shape[i], 0);
    std::vector<int> filled(shape.size(), 0); // boxes filled per row
    std::vector<StandardTableau> out;
    std::function<void(int)> rec = [&](int v) {
        if (v > n) {
            StandardTableau t;
            t.rows = rows;
            out.push_back(std::move(t));
            return;
        }
        for (size_t r = 0; r < shape.size(); ++r) {
            int c = filled[r];
            if (c >= shape[r]) continue;
            if (r > 0 && filled[r - 1] <= c) continue; // column would not increase
            rows[r][c] = v;
            filled[r]++;
            rec(v + 1);
            filled[r]--;
        }
    };
    rec(1);
    return out;
}

std::vector<StandardTableau> all_standard_tableaux_n(int n) {
    std::vector<StandardTableau> out;
    for (const auto& sh : all_partitions(n)) {
        auto v = all_standard_tableaux(sh);
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

Int hook_length_count(const std::vector<int>& shape) {
    int n = 0;
    for (int s : shape) n += s;
    Int num = 1;
    for (int i = 2; i <= n; ++i) num *= i;
    std::vector<int> col_height((shape.empty() ? 0 : shape[0]), 0);
    for (size_t r = 0; r < shape.size(); ++r)
        for (int c = 0; c < shape[r]; ++c) col_height[c]++;
    Int den = 1;
    for (size_t r = 0; r < shape.size(); ++r)
        for (int c = 0; c < shape[r]; ++c)
            den *= (shape[r] - c - 1) + (col_height[c] - (int)r - 1) + 1;
    return num / den;
}

} // namespace cellweb

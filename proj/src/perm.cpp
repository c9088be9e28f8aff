#include "cellweb/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cellweb {

Permutation::Permutation(std::vector<int> one_line) : w(std::move(one_line)) {
    std::vector<bool> seen(w.size(), false);
    for (int v : w) {
        if (v < 1 || v > (int)w.size() || seen[v - 1])
            throw std::invalid_argument("not a permutation of 1..n");
        seen[v - 1] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    Permutation p;
    p.w = std::move(v);
    return p;
}

Permutation Permutation::simple(int i, int n) {
    if (i < 1 || i >= n) throw std::invalid_argument("simple: index out of range");
    Permutation p = identity(n);
    std::swap(p.w[i - 1], p.w[i]);
    return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.n() != b.n()) throw std::invalid_argument("compose: size mismatch");
    Permutation r;
    r.w.resize(a.n());
    for (int i = 0; i < a.n(); ++i) r.w[i] = a.w[b.w[i] - 1];
    return r;
}

Permutation invert(const Permutation& a) {
    Permutation r;
    r.w.resize(a.n());
    for (int i = 0; i < a.n(); ++i) r.w[a.w[i] - 1] = i + 1;
    return r;
}

Permutation left_mul_simple(int i, const Permutation& x) {
    if (i < 1 || i >= x.n()) throw std::invalid_argument("left_mul_simple: index out of range");
    Permutation r = x;
    for (int& v : r.w) {
        if (v == i) v = i + 1;
        else if (v == i + 1) v = i;
    }
    return r;
}

int length(const Permutation& x) {
    int inv = 0;
    for (int i = 0; i < x.n(); ++i)
        for (int j = i + 1; j < x.n(); ++j)
            if (x.w[i] > x.w[j]) ++inv;
    return inv;
}

// Standard dominance ("dot") criterion: x <= y iff for all (i,j),
// #{k <= j : x(k) >= i} <= #{k <= j : y(k) >= i}.
bool bruhat_leq(const Permutation& x, const Permutation& y) {
    if (x.n() != y.n()) throw std::invalid_argument("bruhat_leq: size mismatch");
    int n = x.n();
    std::vector<int> cx(n + 2, 0), cy(n + 2, 0);
    for (int j = 0; j < n; ++j) {
        for (int i = x.w[j]; i >= 1; --i) cx[i]++;
        for (int i = y.w[j]; i >= 1; --i) cy[i]++;
        for (int i = 1; i <= n; ++i)
            if (cx[i] > cy[i]) return false;
    }
    return true;
}

std::set<int> tau(const Permutation& x) {
    std::set<int> r;
    std::vector<int> pos(x.n() + 1);
    for (int i = 0; i < x.n(); ++i) pos[x.w[i]] = i;
    for (int i = 1; i < x.n(); ++i)
        if (pos[i + 1] < pos[i]) r.insert(i);
    return r;
}

std::uint64_t tau_mask(const Permutation& x) {
    std::uint64_t m = 0;
    std::vector<int> pos(x.n() + 1);
    for (int i = 0; i < x.n(); ++i) pos[x.w[i]] = i;
    for (int i = 1; i < x.n(); ++i)
        if (pos[i + 1] < pos[i]) m |= (std::uint64_t)1 << i;
    return m;
}

bool in_descent_set(int i, int j, const Permutation& x) {
    auto m = tau_mask(x);
    return (m >> i & 1) && !(m >> j & 1);
}

Permutation f_sn(int i, int j, const Permutation& x) {
    if (std::abs(i - j) != 1) throw std::invalid_argument("f_sn: |i-j| != 1");
    if (!in_descent_set(i, j, x)) throw std::invalid_argument("f_sn: x not in D_{i,j}");
    Permutation a = left_mul_simple(i, x);
    Permutation b = left_mul_simple(j, x);
    bool a_ok = in_descent_set(j, i, a);
    bool b_ok = in_descent_set(j, i, b);
    if (a_ok == b_ok) throw std::runtime_error("f_sn: uniqueness violated");
    return a_ok ? a : b;
}

bool dual_knuth_related(const Permutation& x, const Permutation& y, int i) {
    if (x.n() != y.n()) throw std::invalid_argument("dual_knuth_related: size mismatch");
    if (i < 2 || i > x.n() - 1) throw std::invalid_argument("dual_knuth_related: index out of range");
    std::vector<int> px(x.n() + 1), py(y.n() + 1);
    for (int k = 0; k < x.n(); ++k) px[x.w[k]] = k;
    for (int k = 0; k < y.n(); ++k) py[y.w[k]] = k;
    // case 1: transpose values i, i+1 with i-1 positioned between them
    auto differ_by_swap = [&](int a, int b) {
        if (px[a] != py[b] || px[b] != py[a]) return false;
        for (int v = 1; v <= x.n(); ++v)
            if (v != a && v != b && px[v] != py[v]) return false;
        return true;
    };
    auto between = [&](int v, int a, int b) {
        int lo = std::min(px[a], px[b]), hi = std::max(px[a], px[b]);
        return lo < px[v] && px[v] < hi;
    };
    if (differ_by_swap(i, i + 1) && between(i - 1, i, i + 1)) return true;
    if (differ_by_swap(i - 1, i) && between(i + 1, i - 1, i)) return true;
    return false;
}

std::string perm_str(const Permutation& x) {
    std::ostringstream out;
    for (int i = 0; i < x.n(); ++i) {
        if (x.n() > 9 && i) out << ",";
        out << x.w[i];
    }
    return out.str();
}

Permutation perm_parse(std::string_view s) {
    std::vector<int> v;
    if (s.find(',') != std::string_view::npos) {
        std::string cur;
        for (char c : s) {
            if (c == ',') {
                v.push_back(std::stoi(cur));
                cur.clear();
            } else if (!std::isspace((unsigned char)c)) {
                cur += c;
            }
        }
        if (!cur.empty()) v.push_back(std::stoi(cur));
    } else {
        for (char c : s) {
            if (std::isspace((unsigned char)c)) continue;
            if (!std::isdigit((unsigned char)c) || c == '0')
                throw std::invalid_argument("perm_parse: bad character");
            v.push_back(c - '0');
        }
    }
    return Permutation(std::move(v));
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> r;
    Permutation p = Permutation::identity(n);
    do {
        r.push_back(p);
    } while (std::next_permutation(p.w.begin(), p.w.end()));
    return r;
}

} // namespace cellweb

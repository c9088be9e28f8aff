#include "cellweb/parallel.hpp"
#include "cellweb/web.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <stdexcept>

namespace cellweb {

SkeinRing<long long> skein_symmetric() { return {3, -2}; }

SkeinRing<LaurentPoly> skein_q() {
    LaurentPoly circle = LaurentPoly::monomial(1, 4) + LaurentPoly(1) + LaurentPoly::monomial(1, -4);
    LaurentPoly bigon = LaurentPoly::monomial(1, 2) + LaurentPoly::monomial(1, -2);
    return {circle, bigon};
}

SkeinRing<LaurentPoly> skein_hecke() {
    // specialize q = -v^(-1/2): [3]_q = v + 1 + v^-1, [2]_q = -(v^(1/2) + v^(-1/2))
    LaurentPoly circle = LaurentPoly::v(1) + LaurentPoly(1) + LaurentPoly::v(-1);
    LaurentPoly bigon = -(LaurentPoly::vhalf(1) + LaurentPoly::vhalf(-1));
    return {circle, bigon};
}

// ---------------------------------------------------------------------------
// surgery scratchpad: in-place dart splicing with deferred renumbering
// ---------------------------------------------------------------------------

namespace {

struct Work {
    Web w;
    std::vector<bool> vdead, edead;

    explicit Work(const Web& src)
        : w(src), vdead(src.num_vertices(), false), edead(src.edges.size(), false) {}

    void replace_dart(int v, int old_d, int new_d) {
        for (int& d : w.rot[v])
            if (d == old_d) {
                d = new_d;
                return;
            }
        throw std::logic_error("web surgery: dart to replace not found");
    }

    // new edge whose darts take over the rotation slots of two old darts
    void splice_edge(int tail, int head, int old_tail_dart, int old_head_dart) {
        int e = (int)w.edges.size();
        w.edges.emplace_back(tail, head);
        edead.push_back(false);
        replace_dart(tail, old_tail_dart, 2 * e);
        replace_dart(head, old_head_dart, 2 * e + 1);
    }

    Web compact() const {
        Web r;
        r.boundary = w.boundary;
        int nv = (int)w.rot.size();
        std::vector<int> vmap(nv, -1), emap(w.edges.size(), -1);
        for (int v = 0; v < w.boundary; ++v) {
            if (vdead[v]) throw std::logic_error("web surgery: boundary vertex deleted");
            vmap[v] = v;
        }
        for (int v = w.boundary; v < nv; ++v) {
            if (vdead[v]) continue;
            vmap[v] = r.boundary + (int)r.internal_sink.size();
            r.internal_sink.push_back(w.is_sink(v));
        }
        for (int e = 0; e < (int)w.edges.size(); ++e) {
            if (edead[e]) continue;
            emap[e] = (int)r.edges.size();
            auto [t, h] = w.edges[e];
            r.edges.emplace_back(vmap[t], vmap[h]);
        }
        r.rot.resize(r.num_vertices());
        for (int v = 0; v < nv; ++v) {
            if (vmap[v] == -1) continue;
            for (int d : w.rot[v]) {
                if (emap[d / 2] == -1)
                    throw std::logic_error("web surgery: live vertex references dead edge");
                r.rot[vmap[v]].push_back(2 * emap[d / 2] + d % 2);
            }
        }
        return r;
    }
};

struct Feature {
    bool found = false;
    bool bigon = false;
    std::vector<int> darts; // face darts in orbit order (2 or 4)
};

Feature find_feature(const Web& w, int rule_pick) {
    FaceData fd = compute_faces(w);
    int web_darts = 2 * (int)w.edges.size();
    std::vector<int> bigons, squares;
    for (int f = 0; f < fd.nfaces; ++f) {
        const auto& ds = fd.face_darts[f];
        if (ds.size() != 2 && ds.size() != 4) continue;
        bool all_web = true, all_internal = true;
        for (int d : ds) {
            if (d >= web_darts) { all_web = false; break; }
            if (w.is_boundary(w.dart_vertex(d))) all_internal = false;
        }
        if (!all_web || !all_internal) continue;
        (ds.size() == 2 ? bigons : squares).push_back(f);
    }
    auto innermost = [&](std::vector<int>& v) {
        std::sort(v.begin(), v.end(), [&](int a, int b) {
            return fd.depth[a] != fd.depth[b] ? fd.depth[a] > fd.depth[b] : a < b;
        });
    };
    Feature feat;
    std::vector<int>& pool = bigons.empty() ? squares : bigons;
    if (pool.empty()) return feat;
    innermost(pool);
    feat.found = true;
    feat.bigon = !bigons.empty();
    feat.darts = fd.face_darts[pool[rule_pick % (int)pool.size()]];
    return feat;
}

// bigon collapse; factor_is_theta reports the closed theta component case
Web collapse_bigon(const Web& w, const Feature& f, bool& is_theta) {
    int e1 = f.darts[0] / 2, e2 = f.darts[1] / 2;
    if (e1 == e2) throw std::logic_error("bigon collapse: degenerate face");
    int v = w.edges[e1].first, u = w.edges[e1].second; // v source side, u sink
    if (!((w.edges[e2].first == v && w.edges[e2].second == u)))
        throw std::logic_error("bigon collapse: face edges do not share endpoints");
    auto third = [&](int vert, int a, int b) {
        for (int d : w.rot[vert])
            if (d != a && d != b) return d;
        throw std::logic_error("bigon collapse: no third dart");
    };
    int du = third(u, 2 * e1 + 1, 2 * e2 + 1); // head dart of eu at u
    int dv = third(v, 2 * e1, 2 * e2);         // tail dart of ev at v
    int eu = du / 2, ev = dv / 2;
    Work work(w);
    work.vdead[u] = work.vdead[v] = true;
    work.edead[e1] = work.edead[e2] = true;
    if (eu == ev) {
        is_theta = true;
        work.edead[eu] = true;
        return work.compact();
    }
    is_theta = false;
    int x = w.edges[eu].first;  // tail of the edge entering u
    int y = w.edges[ev].second; // head of the edge leaving v
    work.edead[eu] = work.edead[ev] = true;
    work.splice_edge(x, y, 2 * eu, 2 * ev + 1);
    return work.compact();
}

// one smoothing of a square face; `circles` counts freed closed loops
Web collapse_square(const Web& w, const Feature& f, int which, int& circles) {
    std::array<int, 4> corner{}, leg{};
    for (int k = 0; k < 4; ++k) {
        int d = f.darts[k];
        int prev = f.darts[(k + 3) % 4];
        corner[k] = w.dart_vertex(d);
        leg[k] = -1;
        for (int x : w.rot[corner[k]])
            if (x != d && x != (prev ^ 1)) leg[k] = x;
        if (leg[k] == -1) throw std::logic_error("square collapse: no leg dart");
    }
    // adjacent-leg pairings; `which` selects the smoothing
    std::array<int, 4> partner{};
    if (which == 0) { partner = {1, 0, 3, 2}; }
    else { partner = {3, 2, 1, 0}; }

    Work work(w);
    for (int k = 0; k < 4; ++k) {
        work.vdead[corner[k]] = true;
        work.edead[f.darts[k] / 2] = true;
        work.edead[leg[k] / 2] = true;
    }
    auto leg_index_of_dart = [&](int d) {
        for (int k = 0; k < 4; ++k)
            if (leg[k] == d) return k;
        return -1;
    };
    circles = 0;
    std::array<bool, 4> done{};
    // chains whose ends attach to surviving vertices
    for (int a = 0; a < 4; ++a) {
        if (done[a] || leg_index_of_dart(leg[a] ^ 1) != -1) continue;
        int start_dart = leg[a] ^ 1; // at a surviving vertex
        int cur = partner[a];
        done[a] = true;
        while (true) {
            done[cur] = true;
            int outer = leg[cur] ^ 1;
            int shared = leg_index_of_dart(outer);
            if (shared == -1) {
                // merged strand: orient from the tail-side attachment
                int t_dart = start_dart % 2 == 0 ? start_dart : outer;
                int h_dart = start_dart % 2 == 0 ? outer : start_dart;
                if (t_dart % 2 != 0 || h_dart % 2 != 1)
                    throw std::logic_error("square collapse: strand ends with equal polarity");
                work.splice_edge(w.dart_vertex(t_dart), w.dart_vertex(h_dart), t_dart, h_dart);
                break;
            }
            done[shared] = true;
            cur = partner[shared];
        }
    }
    // remaining legs close up into free circles
    for (int a = 0; a < 4; ++a) {
        if (done[a]) continue;
        int cur = a;
        while (!done[cur]) {
            done[cur] = true;
            int shared = leg_index_of_dart(leg[cur] ^ 1);
            if (shared == -1) throw std::logic_error("square collapse: broken circle chain");
            done[shared] = true;
            cur = partner[shared];
        }
        ++circles;
    }
    return work.compact();
}

template <typename C>
C pow_of(const C& base, int k) {
    C r{};
    r += C(1);
    for (int i = 0; i < k; ++i) r = r * base;
    return r;
}

} // namespace

template <typename C>
WebSumT<C> reduce(std::vector<std::pair<Web, C>> terms, const SkeinRing<C>& ring, int rule_pick) {
    WebSumT<C> out;
    auto& stack = terms;
    while (!stack.empty()) {
        auto [w, c] = std::move(stack.back());
        stack.pop_back();
        if (c == C{}) continue;
        Feature f = find_feature(w, rule_pick);
        if (!f.found) {
            out.add(w, c);
            continue;
        }
        if (f.bigon) {
            bool theta = false;
            Web w2 = collapse_bigon(w, f, theta);
            C c2 = c * ring.bigon;
            if (theta) c2 = c2 * ring.circle;
            stack.emplace_back(std::move(w2), std::move(c2));
        } else {
            for (int which = 0; which < 2; ++which) {
                int circles = 0;
                Web w2 = collapse_square(w, f, which, circles);
                stack.emplace_back(std::move(w2), c * pow_of(ring.circle, circles));
            }
        }
    }
    return out;
}

template WebSumT<long long> reduce(std::vector<std::pair<Web, long long>>,
                                   const SkeinRing<long long>&, int);
template WebSumT<LaurentPoly> reduce(std::vector<std::pair<Web, LaurentPoly>>,
                                     const SkeinRing<LaurentPoly>&, int);

// ---------------------------------------------------------------------------
// generator actions
// ---------------------------------------------------------------------------

Web double_y_smoothing(int i, const Web& w) {
    if (i < 1 || i >= w.boundary)
        throw std::invalid_argument("double_y_smoothing: generator index out of range");
    Web r = w;
    int bi = i - 1, bj = i;
    int ei = w.rot[bi][0] / 2, ej = w.rot[bj][0] / 2;
    int ti = w.edges[ei].second, tj = w.edges[ej].second;
    int u = r.num_vertices(); // new sink between the two boundary strands
    r.internal_sink.push_back(true);
    int wv = u + 1; // new source above it
    r.internal_sink.push_back(false);
    int E = (int)r.edges.size();
    r.edges[ei] = {bi, u};
    r.edges[ej] = {bj, u};
    r.edges.emplace_back(wv, u);      // E: connector
    r.edges.emplace_back(wv, ti);     // E+1
    r.edges.emplace_back(wv, tj);     // E+2
    r.rot.resize(r.num_vertices());
    auto replace = [&](int v, int old_d, int new_d) {
        for (int& d : r.rot[v])
            if (d == old_d) {
                d = new_d;
                return;
            }
        throw std::logic_error("double_y_smoothing: dart not found");
    };
    replace(ti, 2 * ei + 1, 2 * (E + 1) + 1);
    replace(tj, 2 * ej + 1, 2 * (E + 2) + 1);
    // CCW: at u the connector comes in from above between the boundary strands;
    // at wv the reattached strands leave up-right/up-left over the connector
    r.rot[u] = {2 * E + 1, 2 * ei + 1, 2 * ej + 1};
    r.rot[wv] = {2 * (E + 2), 2 * (E + 1), 2 * E};
    r.validate();
    return r;
}

bool is_reduced(const Web& w) {
    // closed loops are not representable (every vertex is univalent or
    // trivalent), so reduced means: no internal bigon or square face
    return !find_feature(w, 0).found;
}

WebSumZ apply_generator(int i, const WebSumZ& s) {
    std::vector<std::pair<Web, long long>> terms;
    for (const auto& [k, wc] : s.terms) {
        terms.emplace_back(wc.first, wc.second);
        terms.emplace_back(double_y_smoothing(i, wc.first), wc.second);
    }
    return reduce(std::move(terms), skein_symmetric());
}

WebSum apply_generator_hecke(int i, const WebSum& s) {
    std::vector<std::pair<Web, LaurentPoly>> terms;
    for (const auto& [k, wc] : s.terms) {
        terms.emplace_back(wc.first, wc.second * LaurentPoly::v(1));
        terms.emplace_back(double_y_smoothing(i, wc.first), wc.second * LaurentPoly::vhalf(1));
    }
    return reduce(std::move(terms), skein_hecke());
}

Web f_web(int i, int j, const Web& w) {
    if (i < 1 || j < 1 || i >= w.boundary || j >= w.boundary || (i - j) * (i - j) != 1)
        throw std::invalid_argument("f_web: need adjacent generator indices");
    auto t = tau_web(w);
    if (!t.count(i) || t.count(j))
        throw std::invalid_argument("f_web: web not in D_{i,j}");
    WebSumZ s;
    s.add(w, 1);
    WebSumZ acted = apply_generator(j, s);
    const Web* found = nullptr;
    for (const auto& [k, wc] : acted.terms) {
        auto tw = tau_web(wc.first);
        if (tw.count(j) && !tw.count(i)) {
            if (found) throw std::runtime_error("f_web: target in D_{j,i} is not unique");
            found = &wc.first;
        }
    }
    if (!found) throw std::runtime_error("f_web: no term of s_j . W lies in D_{j,i}");
    return *found;
}

// ---------------------------------------------------------------------------
// negative-coefficient search
// ---------------------------------------------------------------------------

namespace {

// shared scan; a non-null countdown lets callers stop early once enough
// hits have been collected
void scan_negative(int n, int threads, const std::function<void(const NegativeTerm&)>& emit,
                   std::atomic<long long>* remaining) {
    auto tableaux = all_standard_tableaux({n, n, n});
    std::mutex out_mutex;
    parallel_for(tableaux.size(), threads, [&](std::size_t idx) {
        if (remaining && remaining->load(std::memory_order_relaxed) <= 0) return;
        const StandardTableau& T = tableaux[idx];
        Web w = tableau_to_web(T);
        auto t = tau_web(w);
        std::vector<NegativeTerm> local;
        for (int k = 1; k < w.boundary; ++k) {
            if (t.count(k)) continue;
            WebSumZ s;
            s.add(w, 1);
            WebSumZ acted = apply_generator(k, s);
            for (const auto& [key, wc] : acted.terms)
                if (wc.second < 0) local.push_back({T, k, wc.first, wc.second});
        }
        if (!local.empty()) {
            std::lock_guard<std::mutex> lock(out_mutex);
            for (const auto& hit : local) emit(hit);
            if (remaining) remaining->fetch_sub((long long)local.size());
        }
    });
}

} // namespace

void find_negative_coefficient(int n, int threads,
                               const std::function<void(const NegativeTerm&)>& emit) {
    scan_negative(n, threads, emit, nullptr);
}

std::vector<NegativeTerm> find_negative_coefficient(int n, int threads, std::size_t limit) {
    std::vector<NegativeTerm> out;
    std::atomic<long long> remaining{limit > (std::size_t)1 << 62 ? (long long)1 << 62
                                                                  : (long long)limit};
    scan_negative(n, threads, [&](const NegativeTerm& hit) {
        if (out.size() < limit) out.push_back(hit);
    }, limit == (std::size_t)-1 ? nullptr : &remaining);
    return out;
}

} // namespace cellweb

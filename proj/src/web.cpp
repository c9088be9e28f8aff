#include "cellweb/web.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace cellweb {

// ---------------------------------------------------------------------------
// structural validation
// ---------------------------------------------------------------------------

void Web::validate() const {
    if (boundary < 0) throw std::invalid_argument("web: negative boundary count");
    int nv = num_vertices();
    if ((int)rot.size() != nv) throw std::invalid_argument("web: rotation table size mismatch");
    std::vector<int> seen(2 * edges.size(), 0);
    for (int v = 0; v < nv; ++v) {
        if (is_boundary(v)) {
            if (rot[v].size() != 1)
                throw std::invalid_argument("web: boundary vertex degree != 1");
        } else if (rot[v].size() != 3) {
            throw std::invalid_argument("web: internal vertex degree != 3");
        }
        for (int d : rot[v]) {
            if (d < 0 || d >= 2 * (int)edges.size())
                throw std::invalid_argument("web: dart id out of range");
            if (dart_vertex(d) != v)
                throw std::invalid_argument("web: dart listed at the wrong vertex");
            ++seen[d];
        }
    }
    for (int c : seen)
        if (c != 1) throw std::invalid_argument("web: dart not listed exactly once");
    for (auto [t, h] : edges) {
        if (t < 0 || t >= nv || h < 0 || h >= nv)
            throw std::invalid_argument("web: edge endpoint out of range");
        if (!is_boundary(t) && is_sink(t))
            throw std::invalid_argument("web: edge tail is a sink");
        if (is_boundary(h) || !is_sink(h))
            throw std::invalid_argument("web: edge head is not a sink");
    }
}

// ---------------------------------------------------------------------------
// m-diagram and web construction
// ---------------------------------------------------------------------------

MDiagram m_diagram(const StandardTableau& T) {
    auto sh = T.shape();
    if (sh.size() != 3 || sh[0] != sh[1] || sh[1] != sh[2])
        throw std::invalid_argument("m_diagram: shape must be [n,n,n]");
    int n = sh[0];
    MDiagram m;
    m.n = n;
    std::vector<int> stack; // unmatched points awaiting a partner to their right
    for (int p = 1; p <= 3 * n; ++p) {
        int r = T.row_of(p);
        if (r == 1) stack.push_back(p);
        else if (r == 2) { m.left_arcs.emplace_back(stack.back(), p); stack.pop_back(); }
    }
    stack.clear();
    for (int p = 1; p <= 3 * n; ++p) {
        int r = T.row_of(p);
        if (r == 2) stack.push_back(p);
        else if (r == 3) { m.right_arcs.emplace_back(stack.back(), p); stack.pop_back(); }
    }
    return m;
}

namespace {

// geometric data for one arc drawn as rise / horizontal run / fall; boundary
// point p sits at x = 4p, so the four verticals an arc can own (4a, 4b-1,
// 4b, 4a+1 across the two families) never collide between arcs
struct ArcGeom {
    int a, b;           // span in boundary-point units
    bool left;          // family
    int height = 0;
    int x_rise, x_fall; // x of the start (rising) and end (falling) verticals
    int x_lo, x_hi;     // x-interval of the horizontal run
    bool rightward;     // traversal direction of the horizontal run
    int y_target;       // middle point whose Y the arc falls into
    int start_boundary; // 0-indexed boundary vertex where the strand starts
};

struct Crossing {
    int high, low;   // arc indices; the high arc's vertical meets the low arc's horizontal
    bool on_rise;    // which vertical of the high arc
    int x;
    int sink = -1, source = -1; // vertex ids once created
};

// angle of the connector dart: the free quadrant between two perpendicular
// axis directions 90 degrees apart
int quadrant_bisector(int a, int b) {
    if (a > b) std::swap(a, b);
    if (b - a == 90) return (a + b) / 2;
    if (a == 0 && b == 270) return 315;
    throw std::logic_error("web: crossing segment directions are not perpendicular");
}

} // namespace

Web tableau_to_web(const StandardTableau& T) {
    MDiagram m = m_diagram(T);
    int n = m.n, B = 3 * n;

    std::vector<ArcGeom> arcs;
    for (auto [a, b] : m.left_arcs)
        arcs.push_back({a, b, true, 0, 4 * a, 4 * b - 1, 4 * a, 4 * b - 1, true, b, a - 1});
    for (auto [a, b] : m.right_arcs)
        arcs.push_back({a, b, false, 0, 4 * b, 4 * a + 1, 4 * a + 1, 4 * b, false, a, b - 1});

    // nesting depth, then fixed ids, decide the vertical stacking: outermost
    // highest, so nested arcs never touch and crossing pairs meet exactly once
    int A = (int)arcs.size();
    std::vector<int> depth_of(A, 0), order(A);
    for (int i = 0; i < A; ++i)
        for (int j = 0; j < A; ++j)
            if (arcs[j].a < arcs[i].a && arcs[i].b < arcs[j].b) ++depth_of[i];
    for (int i = 0; i < A; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        return depth_of[i] != depth_of[j] ? depth_of[i] < depth_of[j] : i < j;
    });
    for (int r = 0; r < A; ++r) arcs[order[r]].height = A - r;

    std::vector<Crossing> crossings;
    for (int i = 0; i < A; ++i)
        for (int j = i + 1; j < A; ++j) {
            int hi = arcs[i].height > arcs[j].height ? i : j;
            int lo = hi == i ? j : i;
            bool rise_in = arcs[lo].x_lo < arcs[hi].x_rise && arcs[hi].x_rise < arcs[lo].x_hi;
            bool fall_in = arcs[lo].x_lo < arcs[hi].x_fall && arcs[hi].x_fall < arcs[lo].x_hi;
            if (rise_in && fall_in)
                throw std::logic_error("web: arc verticals doubly covered despite nesting heights");
            if (rise_in || fall_in)
                crossings.push_back({hi, lo, rise_in, rise_in ? arcs[hi].x_rise : arcs[hi].x_fall});
        }

    // vertices: boundary, then one Y per middle point, then sink+source per crossing
    std::vector<int> middles;
    for (int p = 1; p <= B; ++p)
        if (T.row_of(p) == 2) middles.push_back(p);
    Web w;
    w.boundary = B;
    std::vector<int> y_vertex(B + 1, -1);
    for (int p : middles) {
        y_vertex[p] = w.boundary + (int)w.internal_sink.size();
        w.internal_sink.push_back(true);
    }
    for (auto& c : crossings) {
        c.sink = w.boundary + (int)w.internal_sink.size();
        w.internal_sink.push_back(true);
        c.source = w.boundary + (int)w.internal_sink.size();
        w.internal_sink.push_back(false);
    }
    int nv = w.num_vertices();
    std::vector<std::vector<std::pair<int, int>>> ang(nv); // (angle, dart) per vertex

    auto add_edge = [&](int tail, int head, int tail_angle, int head_angle) {
        int e = (int)w.edges.size();
        w.edges.emplace_back(tail, head);
        ang[tail].emplace_back(tail_angle, 2 * e);
        ang[head].emplace_back(head_angle, 2 * e + 1);
    };

    // per-crossing segment directions; the connector runs source -> sink
    std::vector<std::array<int, 4>> cdir(crossings.size()); // Vin, Vout, Hin, Hout
    for (size_t ci = 0; ci < crossings.size(); ++ci) {
        const auto& c = crossings[ci];
        bool v_up = c.on_rise;
        bool h_right = arcs[c.low].rightward;
        int Vin = v_up ? 270 : 90, Vout = v_up ? 90 : 270;
        int Hin = h_right ? 180 : 0, Hout = h_right ? 0 : 180;
        cdir[ci] = {Vin, Vout, Hin, Hout};
        add_edge(c.source, c.sink, quadrant_bisector(Vin, Hin), quadrant_bisector(Vout, Hout));
    }

    // middle-point verticals (never crossed: every horizontal runs above them)
    for (int p : middles) add_edge(p - 1, y_vertex[p], 90, 270);

    // walk each arc's strand through its crossings in traversal order
    for (int u = 0; u < A; ++u) {
        struct Ev { int key; int c; bool as_vertical; };
        std::vector<Ev> rise, run, fall;
        for (size_t ci = 0; ci < crossings.size(); ++ci) {
            const auto& c = crossings[ci];
            if (c.high == u) {
                (c.on_rise ? rise : fall).push_back({arcs[c.low].height, (int)ci, true});
            } else if (c.low == u) {
                run.push_back({c.x, (int)ci, false});
            }
        }
        std::sort(rise.begin(), rise.end(), [](auto& x, auto& y) { return x.key < y.key; });
        std::sort(fall.begin(), fall.end(), [](auto& x, auto& y) { return x.key > y.key; });
        std::sort(run.begin(), run.end(), [&](auto& x, auto& y) {
            return arcs[u].rightward ? x.key < y.key : x.key > y.key;
        });
        std::vector<Ev> evs = std::move(rise);
        evs.insert(evs.end(), run.begin(), run.end());
        evs.insert(evs.end(), fall.begin(), fall.end());

        int attach = arcs[u].start_boundary, out_angle = 90;
        for (const auto& ev : evs) {
            const auto& c = crossings[ev.c];
            const auto& d = cdir[ev.c];
            add_edge(attach, c.sink, out_angle, ev.as_vertical ? d[0] : d[2]);
            attach = c.source;
            out_angle = ev.as_vertical ? d[1] : d[3];
        }
        add_edge(attach, y_vertex[arcs[u].y_target], out_angle, arcs[u].left ? 135 : 45);
    }

    w.rot.resize(nv);
    for (int v = 0; v < nv; ++v) {
        std::sort(ang[v].begin(), ang[v].end());
        for (size_t k = 1; k < ang[v].size(); ++k)
            if (ang[v][k].first == ang[v][k - 1].first)
                throw std::logic_error("web: colliding dart angles at a vertex");
        for (auto [angle, d] : ang[v]) w.rot[v].push_back(d);
    }
    w.validate();
    return w;
}

// ---------------------------------------------------------------------------
// extended map: virtual edges close the picture along the boundary line
// ---------------------------------------------------------------------------

namespace {

struct ExtMap {
    int web_darts = 0;
    int total_darts = 0;
    std::vector<std::vector<int>> rot;
    std::vector<int> vert, pos;

    int twin(int d) const { return d ^ 1; }
    int face_next(int d) const { // next dart of the face lying to the right
        int t = d ^ 1;
        const auto& r = rot[vert[t]];
        return r[(pos[t] + 1) % r.size()];
    }
};

ExtMap build_ext(const Web& w) {
    int B = w.boundary, E = (int)w.edges.size(), nv = w.num_vertices();
    ExtMap m;
    m.web_darts = 2 * E;
    m.total_darts = 2 * E + (B > 0 ? 2 * (B - 1) : 0);
    m.rot.resize(nv);
    m.vert.assign(m.total_darts, -1);
    m.pos.assign(m.total_darts, -1);
    for (int v = 0; v < nv; ++v) {
        if (w.is_boundary(v)) {
            // CCW from the positive x-axis: right virtual, web edge, left virtual
            if (v < B - 1) m.rot[v].push_back(2 * E + 2 * v);
            m.rot[v].push_back(w.rot[v][0]);
            if (v > 0) m.rot[v].push_back(2 * E + 2 * (v - 1) + 1);
        } else {
            m.rot[v] = w.rot[v];
        }
        for (size_t k = 0; k < m.rot[v].size(); ++k) {
            m.vert[m.rot[v][k]] = v;
            m.pos[m.rot[v][k]] = (int)k;
        }
    }
    return m;
}

} // namespace

FaceData compute_faces(const Web& w) {
    FaceData f;
    if (w.boundary == 0) {
        if (!w.edges.empty()) throw std::invalid_argument("compute_faces: closed web without boundary");
        f.nfaces = 1;
        f.face_darts = {{}};
        f.depth = {0};
        f.outer = 0;
        return f;
    }
    if (w.boundary < 2) throw std::invalid_argument("compute_faces: boundary too small");
    ExtMap m = build_ext(w);
    f.face_of_dart.assign(m.total_darts, -1);
    for (int d0 = 0; d0 < m.total_darts; ++d0) {
        if (f.face_of_dart[d0] != -1) continue;
        int id = f.nfaces++;
        f.face_darts.emplace_back();
        int d = d0;
        do {
            f.face_of_dart[d] = id;
            f.face_darts[id].push_back(d);
            d = m.face_next(d);
        } while (d != d0);
    }
    // the face to the right of the left-to-right virtual dart at vertex 0 is
    // the unbounded region under the boundary line
    f.outer = f.face_of_dart[m.web_darts];
    f.depth.assign(f.nfaces, -1);
    f.depth[f.outer] = 0;
    std::deque<int> bfs{f.outer};
    std::vector<std::vector<int>> adj(f.nfaces);
    for (int e = 0; e < (int)w.edges.size(); ++e) {
        int a = f.face_of_dart[2 * e], b = f.face_of_dart[2 * e + 1];
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    while (!bfs.empty()) {
        int a = bfs.front();
        bfs.pop_front();
        for (int b : adj[a])
            if (f.depth[b] == -1) {
                f.depth[b] = f.depth[a] + 1;
                bfs.push_back(b);
            }
    }
    for (int d : f.depth)
        if (d == -1) throw std::logic_error("compute_faces: face unreachable across web edges");
    f.left_face.resize(w.boundary);
    f.right_face.resize(w.boundary);
    for (int v = 0; v < w.boundary; ++v) {
        int d = w.rot[v][0];
        f.right_face[v] = f.face_of_dart[d];
        f.left_face[v] = f.face_of_dart[d ^ 1];
    }
    return f;
}

YamanouchiWord web_to_yamanouchi(const Web& w) {
    FaceData f = compute_faces(w);
    YamanouchiWord word;
    for (int v = 0; v < w.boundary; ++v) {
        int dl = f.depth[f.left_face[v]], dr = f.depth[f.right_face[v]];
        word += dl < dr ? '+' : dl == dr ? '0' : '-';
    }
    if (!is_balanced_yamanouchi(word))
        throw std::invalid_argument("web_to_yamanouchi: depth word is not balanced Yamanouchi: " + word);
    return word;
}

StandardTableau web_to_tableau(const Web& w) { return yamanouchi_to_tableau(web_to_yamanouchi(w)); }

std::set<int> tau_web(const Web& w) {
    std::set<int> s;
    for (int i = 1; i < w.boundary; ++i) {
        int ha = w.edges[w.rot[i - 1][0] / 2].second;
        int hb = w.edges[w.rot[i][0] / 2].second;
        if (ha == hb) s.insert(i);
    }
    return s;
}

std::uint64_t tau_web_mask(const Web& w) {
    std::uint64_t m = 0;
    for (int i : tau_web(w)) m |= 1ull << i;
    return m;
}

// ---------------------------------------------------------------------------
// canonical key: anchored breadth-first traversal of the extended map
// ---------------------------------------------------------------------------

std::string canonical_key(const Web& w) {
    if (w.boundary == 0 && w.edges.empty()) return "web:0";
    ExtMap m = build_ext(w);
    int nv = w.num_vertices();
    std::vector<int> vid(nv, -1), eid(m.total_darts / 2, -1);
    int next_v = 0, next_e = 0;
    std::deque<std::pair<int, int>> bfs; // (vertex, dart at vertex to start the scan)
    vid[0] = next_v++;
    bfs.emplace_back(0, m.rot[0][0]);
    std::string key = "web:" + std::to_string(w.boundary) + ":";
    while (!bfs.empty()) {
        auto [v, start] = bfs.front();
        bfs.pop_front();
        key += w.is_boundary(v) ? 'b' : w.is_sink(v) ? 's' : 'o';
        int deg = (int)m.rot[v].size(), p0 = m.pos[start];
        for (int k = 0; k < deg; ++k) {
            int d = m.rot[v][(p0 + k) % deg];
            int e = d / 2;
            if (eid[e] == -1) eid[e] = next_e++;
            key += d >= m.web_darts ? 'V' : d % 2 == 0 ? 'T' : 'H';
            key += std::to_string(eid[e]);
            int u = m.vert[d ^ 1];
            if (vid[u] == -1) {
                vid[u] = next_v++;
                bfs.emplace_back(u, d ^ 1);
            }
        }
        key += ';';
    }
    if (next_v != nv)
        throw std::invalid_argument("canonical_key: web has components detached from the boundary");
    return key;
}

// ---------------------------------------------------------------------------
// serialization
// ---------------------------------------------------------------------------

std::string web_str(const Web& w) {
    std::ostringstream out;
    out << "web 1\n";
    out << "boundary " << w.boundary << "\n";
    out << "internal " << w.internal_count() << "\n";
    for (int k = 0; k < w.internal_count(); ++k)
        out << "tag " << k << " " << (w.internal_sink[k] ? "sink" : "source") << "\n";
    out << "edges " << w.edges.size() << "\n";
    for (auto [t, h] : w.edges) out << "edge " << t << " " << h << "\n";
    for (int v = 0; v < w.num_vertices(); ++v) {
        out << "rot " << v;
        for (int d : w.rot[v]) out << " " << d;
        out << "\n";
    }
    return out.str();
}

Web web_parse(std::string_view s) {
    std::istringstream in{std::string(s)};
    std::string word;
    int version = 0;
    if (!(in >> word >> version) || word != "web" || version != 1)
        throw std::invalid_argument("web_parse: expected 'web 1' header");
    Web w;
    int internal = 0, nedges = 0;
    if (!(in >> word >> w.boundary) || word != "boundary")
        throw std::invalid_argument("web_parse: expected boundary line");
    if (!(in >> word >> internal) || word != "internal" || internal < 0)
        throw std::invalid_argument("web_parse: expected internal line");
    w.internal_sink.assign(internal, false);
    for (int k = 0; k < internal; ++k) {
        int idx;
        std::string tag;
        if (!(in >> word >> idx >> tag) || word != "tag" || idx != k ||
            (tag != "sink" && tag != "source"))
            throw std::invalid_argument("web_parse: bad tag line");
        w.internal_sink[k] = tag == "sink";
    }
    if (!(in >> word >> nedges) || word != "edges" || nedges < 0)
        throw std::invalid_argument("web_parse: expected edges line");
    for (int e = 0; e < nedges; ++e) {
        int t, h;
        if (!(in >> word >> t >> h) || word != "edge")
            throw std::invalid_argument("web_parse: bad edge line");
        w.edges.emplace_back(t, h);
    }
    w.rot.resize(w.num_vertices());
    for (int v = 0; v < w.num_vertices(); ++v) {
        int idx;
        if (!(in >> word >> idx) || word != "rot" || idx != v)
            throw std::invalid_argument("web_parse: bad rotation line");
        int deg = (v < w.boundary) ? 1 : 3;
        for (int k = 0; k < deg; ++k) {
            int d;
            if (!(in >> d)) throw std::invalid_argument("web_parse: truncated rotation line");
            w.rot[v].push_back(d);
        }
    }
    w.validate();
    return w;
}

} // namespace cellweb

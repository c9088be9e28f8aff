#include "cellweb/render.hpp"

#include <algorithm>
#include <sstream>

namespace cellweb {

namespace {

struct Layout {
    std::vector<double> x, y;
};

// boundary pinned to the baseline; internal vertices stacked by BFS layer and
// smoothed toward the average of their neighbours
Layout layout_web(const Web& w) {
    int nv = w.num_vertices();
    Layout l;
    l.x.assign(nv, 0.0);
    l.y.assign(nv, 0.0);
    std::vector<int> layer(nv, -1);
    std::vector<std::vector<int>> adj(nv);
    for (auto [t, h] : w.edges) {
        adj[t].push_back(h);
        adj[h].push_back(t);
    }
    std::vector<int> queue;
    for (int v = 0; v < w.boundary; ++v) {
        layer[v] = 0;
        queue.push_back(v);
        l.x[v] = 40.0 * (v + 1);
        l.y[v] = 360.0;
    }
    for (std::size_t q = 0; q < queue.size(); ++q)
        for (int u : adj[queue[q]])
            if (layer[u] == -1) {
                layer[u] = layer[queue[q]] + 1;
                queue.push_back(u);
            }
    for (int v = w.boundary; v < nv; ++v) {
        if (layer[v] == -1) layer[v] = 1; // detached component: park it on layer 1
        l.y[v] = 360.0 - 70.0 * layer[v];
        l.x[v] = 40.0 * (v - w.boundary + 1);
    }
    for (int pass = 0; pass < 60; ++pass)
        for (int v = w.boundary; v < nv; ++v) {
            if (adj[v].empty()) continue;
            double s = 0;
            for (int u : adj[v]) s += l.x[u];
            l.x[v] = s / adj[v].size();
        }
    return l;
}

} // namespace

std::string web_to_dot(const Web& w) {
    std::ostringstream out;
    out << "digraph web {\n";
    out << "  rankdir=BT;\n";
    for (int v = 0; v < w.num_vertices(); ++v) {
        out << "  v" << v << " [label=\"" << (w.is_boundary(v) ? "b" + std::to_string(v + 1)
                                                               : std::to_string(v))
            << "\",shape=" << (w.is_boundary(v) ? "square" : "circle") << ",style="
            << (w.is_boundary(v) ? "solid" : w.is_sink(v) ? "filled" : "solid") << "];\n";
    }
    for (auto [t, h] : w.edges) out << "  v" << t << " -> v" << h << ";\n";
    out << "}\n";
    return out.str();
}

std::string web_to_svg(const Web& w, bool annotate_depths) {
    Layout l = layout_web(w);
    double width = std::max(80.0, 40.0 * (w.boundary + 1));
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << (int)width
        << "\" height=\"400\" viewBox=\"0 0 " << (int)width << " 400\">\n";
    out << "  <defs><marker id=\"arr\" viewBox=\"0 0 10 10\" refX=\"8\" refY=\"5\" "
           "markerWidth=\"5\" markerHeight=\"5\" orient=\"auto-start-reverse\">"
           "<path d=\"M 0 0 L 10 5 L 0 10 z\"/></marker></defs>\n";
    out << "  <line x1=\"0\" y1=\"360\" x2=\"" << (int)width
        << "\" y2=\"360\" stroke=\"#999\" stroke-dasharray=\"4 3\"/>\n";
    for (auto [t, h] : w.edges) {
        out << "  <line x1=\"" << l.x[t] << "\" y1=\"" << l.y[t] << "\" x2=\"" << l.x[h]
            << "\" y2=\"" << l.y[h] << "\" stroke=\"black\" marker-end=\"url(#arr)\"/>\n";
    }
    for (int v = 0; v < w.num_vertices(); ++v) {
        if (w.is_boundary(v)) {
            out << "  <rect x=\"" << l.x[v] - 3 << "\" y=\"" << l.y[v] - 3
                << "\" width=\"6\" height=\"6\"/>\n";
            out << "  <text x=\"" << l.x[v] << "\" y=\"" << l.y[v] + 16
                << "\" font-size=\"10\" text-anchor=\"middle\">" << v + 1 << "</text>\n";
        } else {
            out << "  <circle cx=\"" << l.x[v] << "\" cy=\"" << l.y[v] << "\" r=\"4\" fill=\""
                << (w.is_sink(v) ? "black" : "white") << "\" stroke=\"black\"/>\n";
        }
    }
    if (annotate_depths && w.boundary > 0) {
        FaceData fd = compute_faces(w);
        int web_darts = 2 * (int)w.edges.size();
        for (int f = 0; f < fd.nfaces; ++f) {
            double sx = 0, sy = 0;
            int cnt = 0;
            for (int d : fd.face_darts[f]) {
                int v = d < web_darts ? w.dart_vertex(d)
                                      : (d - web_darts) / 2 + (d - web_darts) % 2;
                sx += l.x[v];
                sy += l.y[v];
                ++cnt;
            }
            if (!cnt) continue;
            double tx = sx / cnt, ty = f == fd.outer ? 390.0 : sy / cnt;
            out << "  <text x=\"" << tx << "\" y=\"" << ty
                << "\" font-size=\"11\" fill=\"#c00\" text-anchor=\"middle\">" << fd.depth[f]
                << "</text>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

std::string tableau_to_dot(const StandardTableau& t) {
    std::ostringstream out;
    out << "digraph tableau {\n  node [shape=plaintext];\n  t [label=<\n"
        << "    <table border=\"0\" cellborder=\"1\" cellspacing=\"0\">\n";
    for (const auto& row : t.rows) {
        out << "      <tr>";
        for (int e : row) out << "<td>" << e << "</td>";
        out << "</tr>\n";
    }
    out << "    </table>>];\n}\n";
    return out.str();
}

std::string tableau_to_svg(const StandardTableau& t) {
    int cell = 30;
    int rows = (int)t.rows.size();
    int cols = rows ? (int)t.rows[0].size() : 0;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << cols * cell + 20
        << "\" height=\"" << rows * cell + 20 << "\">\n";
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < (int)t.rows[r].size(); ++c) {
            int x = 10 + c * cell, y = 10 + r * cell;
            out << "  <rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell
                << "\" height=\"" << cell << "\" fill=\"none\" stroke=\"black\"/>\n";
            out << "  <text x=\"" << x + cell / 2 << "\" y=\"" << y + cell / 2 + 5
                << "\" font-size=\"14\" text-anchor=\"middle\">" << t.rows[r][c]
                << "</text>\n";
        }
    out << "</svg>\n";
    return out.str();
}

} // namespace cellweb

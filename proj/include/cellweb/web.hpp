#pragma once

// sl3-webs as boundary-anchored planar combinatorial maps: construction from
// tableaux via M-diagrams, face/depth computation, the Khovanov-Kuperberg
// bijection in both directions, skein reduction, symmetric-group and Hecke
// actions, web tau-invariants and f^web.
//
// A web lives in the upper half-plane: boundary vertices 1..3n sit
// left-to-right on the boundary line (stored 0-indexed), each a univalent
// source; internal vertices are trivalent, all-source or all-sink.  Every
// edge is stored as (tail, head) with the tail on the source side.  The
// planar embedding is a rotation system: rot[v] lists the darts at v in
// counterclockwise order; edge e owns darts 2e (at tail) and 2e+1 (at head).
// Face traversal closes the outer face through virtual edges along the
// boundary line.

#include "cellweb/laurent.hpp"
#include "cellweb/tableau.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cellweb {

struct Web {
    int boundary = 0;                        // number of boundary vertices (3n)
    std::vector<bool> internal_sink;         // tag per internal vertex
    std::vector<std::pair<int, int>> edges;  // (tail, head), tail on the source side
    std::vector<std::vector<int>> rot;       // per vertex: CCW dart ids

    int internal_count() const { return (int)internal_sink.size(); }
    int num_vertices() const { return boundary + internal_count(); }
    bool is_boundary(int v) const { return v < boundary; }
    bool is_sink(int v) const { return v >= boundary && internal_sink[v - boundary]; }
    int dart_vertex(int d) const { auto [t, h] = edges[d / 2]; return d % 2 ? h : t; }
    int dart_other(int d) const { auto [t, h] = edges[d / 2]; return d % 2 ? t : h; }

    void validate() const; // structural invariants incl. Euler relation
    bool operator==(const Web& o) const = default;
};

struct MDiagram {
    int n = 0;                                   // boundary points 1..3n
    std::vector<std::pair<int, int>> left_arcs;  // (top, middle)
    std::vector<std::pair<int, int>> right_arcs; // (middle, bottom)
};

MDiagram m_diagram(const StandardTableau& T); // shape [n,n,n]
Web tableau_to_web(const StandardTableau& T);

// ---- faces and depths ----
struct FaceData {
    int nfaces = 0;
    std::vector<int> face_of_dart;            // web darts then virtual darts
    std::vector<std::vector<int>> face_darts; // per face, in orbit order
    std::vector<int> depth;                   // per face, BFS from the unbounded face
    int outer = -1;
    std::vector<int> left_face, right_face; // faces beside each boundary vertex's edge
};
FaceData compute_faces(const Web& w);

YamanouchiWord web_to_yamanouchi(const Web& w); // reduced webs only
StandardTableau web_to_tableau(const Web& w);

std::set<int> tau_web(const Web& w);
std::uint64_t tau_web_mask(const Web& w);
bool is_reduced(const Web& w);

// equal keys iff isomorphic as boundary-anchored embedded graphs; anchored
// traversal from boundary vertex 1 through the rotation system
std::string canonical_key(const Web& w);

// versioned text serialization; bit-exact round trip
std::string web_str(const Web& w);
Web web_parse(std::string_view s);

// ---- sums and reduction ----
template <typename C>
struct WebSumT {
    // canonical key -> (web, coefficient); no zero coefficients
    std::map<std::string, std::pair<Web, C>> terms;

    void add(const Web& w, const C& c) {
        if (c == C{}) return;
        auto key = canonical_key(w);
        auto it = terms.find(key);
        if (it == terms.end()) {
            terms.emplace(std::move(key), std::make_pair(w, c));
        } else {
            it->second.second += c;
            if (it->second.second == C{}) terms.erase(it);
        }
    }
    bool operator==(const WebSumT& o) const {
        if (terms.size() != o.terms.size()) return false;
        for (const auto& [k, wc] : terms) {
            auto it = o.terms.find(k);
            if (it == o.terms.end() || !(it->second.second == wc.second)) return false;
        }
        return true;
    }
};
using WebSum = WebSumT<LaurentPoly>;   // generic coefficients
using WebSumZ = WebSumT<long long>;    // specialized at q = -1

// circle and bigon factors for the coefficient ring in use
template <typename C>
struct SkeinRing {
    C circle, bigon;
};
SkeinRing<long long> skein_symmetric();  // q=-1: circle 3, bigon -2
SkeinRing<LaurentPoly> skein_q();        // circle [3]_q, bigon [2]_q
SkeinRing<LaurentPoly> skein_hecke();    // via v^(1/2) = -1/q: circle v+1+v^-1, bigon -(v^(1/2)+v^(-1/2))

// fully reduce a list of (possibly unreduced) terms; rule order: bigons before
// squares, innermost (deepest) face first, lowest face index as tie-break.
// rule_pick offsets the deterministic choice (used by the confluence tests).
template <typename C>
WebSumT<C> reduce(std::vector<std::pair<Web, C>> terms, const SkeinRing<C>& ring,
                  int rule_pick = 0);

// the double-Y smoothing of a crossing inserted at strands i, i+1 (unreduced)
Web double_y_smoothing(int i, const Web& w);

// s_i action at q=-1: identity smoothing + double-Y smoothing, then reduce
WebSumZ apply_generator(int i, const WebSumZ& s);
// T_{s_i} action: v * identity + v^(1/2) * double-Y, then reduce (hecke ring)
WebSum apply_generator_hecke(int i, const WebSum& s);

// the unique reduced term of s_j . W lying in D^web_{j,i} (coefficient +1)
Web f_web(int i, int j, const Web& w);

struct NegativeTerm {
    StandardTableau source; // the tableau whose web W was acted on
    int generator = 0;      // k with k not in tau(W)
    Web term;               // reduced term W' with negative coefficient
    long long coeff = 0;
};

// enumerate all reduced webs on 3n vertices, reduce s_k . W at q=-1 for every
// k not in tau(W), and stream every negative-coefficient term to the callback
// (called under a lock, in deterministic tableau order per worker chunk).
void find_negative_coefficient(int n, int threads,
                               const std::function<void(const NegativeTerm&)>& emit);
std::vector<NegativeTerm> find_negative_coefficient(int n, int threads = 0,
                                                    std::size_t limit = (std::size_t)-1);

} // namespace cellweb

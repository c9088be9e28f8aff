#include "doctest.h"

#include "cellweb/web.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace cellweb;

namespace {

// relabel internal vertices and edges; the web is the same embedded graph
Web shuffled_copy(const Web& w, std::mt19937& rng) {
    int b = w.boundary, m = w.internal_count();
    std::vector<int> vperm(m), eperm(w.edges.size());
    std::iota(vperm.begin(), vperm.end(), 0);
    std::iota(eperm.begin(), eperm.end(), 0);
    std::shuffle(vperm.begin(), vperm.end(), rng);
    std::shuffle(eperm.begin(), eperm.end(), rng);
    auto mapv = [&](int v) { return v < b ? v : b + vperm[v - b]; };
    auto mapd = [&](int d) { return 2 * eperm[d / 2] + d % 2; };
    Web out;
    out.boundary = b;
    out.internal_sink.resize(m);
    for (int v = 0; v < m; ++v) out.internal_sink[vperm[v]] = w.internal_sink[v];
    out.edges.resize(w.edges.size());
    for (std::size_t e = 0; e < w.edges.size(); ++e)
        out.edges[eperm[e]] = {mapv(w.edges[e].first), mapv(w.edges[e].second)};
    out.rot.resize(w.rot.size());
    for (std::size_t v = 0; v < w.rot.size(); ++v) {
        std::vector<int> darts;
        for (int d : w.rot[v]) darts.push_back(mapd(d));
        // rotate the cyclic order to a different starting dart
        if (darts.size() > 1) std::rotate(darts.begin(), darts.begin() + 1, darts.end());
        out.rot[mapv((int)v)] = darts;
    }
    return out;
}

} // namespace

TEST_CASE("tripod web") {
    Web w = tableau_to_web(yt_parse("1/2/3"));
    w.validate();
    CHECK(w.boundary == 3);
    CHECK(w.internal_count() == 1);
    CHECK(w.is_sink(3));
    CHECK(w.edges.size() == 3);
    CHECK(is_reduced(w));
    CHECK(web_to_yamanouchi(w) == "+0-");
    CHECK(web_to_tableau(w) == yt_parse("1/2/3"));
    CHECK(tau_web(w) == std::set<int>{1, 2});
}

TEST_CASE("m-diagram of the running six-box example") {
    StandardTableau t = yt_parse("1,3/2,5/4,6");
    MDiagram m = m_diagram(t);
    CHECK(m.n == 2);
    CHECK(m.left_arcs == std::vector<std::pair<int, int>>{{1, 2}, {3, 5}});
    CHECK(m.right_arcs == std::vector<std::pair<int, int>>{{2, 4}, {5, 6}});
    Web w = tableau_to_web(t);
    w.validate();
    CHECK(w.boundary == 6);
    CHECK(w.internal_count() == 4); // one crossing resolved into a sink/source pair
    CHECK(w.edges.size() == 9);
    CHECK(is_reduced(w));
    CHECK(web_to_tableau(w) == t);
}

TEST_CASE("depth-figure web structure") {
    Web w = tableau_to_web(yt_parse("1,3,7,9/2,5,8,11/4,6,10,12"));
    w.validate();
    CHECK(web_to_yamanouchi(w) == "+0+-0-+0+-0-");
    CHECK(w.edges.size() == 18);
    FaceData f = compute_faces(w);
    CHECK(f.nfaces == 11);
    std::map<int, int> depth_multiset;
    for (int d : f.depth) ++depth_multiset[d];
    CHECK(depth_multiset == std::map<int, int>{{0, 1}, {1, 8}, {2, 2}});
    CHECK(f.depth[f.outer] == 0);
}

TEST_CASE("kk round trip for n <= 3") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& t : all_standard_tableaux({n, n, n})) {
            Web w = tableau_to_web(t);
            w.validate();
            CHECK(is_reduced(w));
            CHECK(web_to_tableau(w) == t);
            CHECK(tau_web(w) == tau(t));
        }
}

TEST_CASE("canonical key is invariant under relabeling") {
    std::mt19937 rng(42);
    for (const auto& t : all_standard_tableaux({3, 3, 3})) {
        Web w = tableau_to_web(t);
        std::string key = canonical_key(w);
        for (int trial = 0; trial < 3; ++trial) {
            Web shuffled = shuffled_copy(w, rng);
            shuffled.validate();
            CHECK(canonical_key(shuffled) == key);
        }
    }
    // distinct webs get distinct keys
    std::set<std::string> keys;
    for (const auto& t : all_standard_tableaux({3, 3, 3}))
        keys.insert(canonical_key(tableau_to_web(t)));
    CHECK(keys.size() == 42);
}

TEST_CASE("serialization round trip") {
    for (const auto& t : all_standard_tableaux({2, 2, 2})) {
        Web w = tableau_to_web(t);
        Web back = web_parse(web_str(w));
        CHECK(back == w);
    }
    CHECK_THROWS_AS((void)web_parse("nonsense"), std::invalid_argument);
    CHECK_THROWS_AS((void)web_parse("web 2\n"), std::invalid_argument);
}

TEST_CASE("double-y smoothing and skein reduction") {
    Web w = tableau_to_web(yt_parse("1,3/2,5/4,6"));
    Web u = double_y_smoothing(1, w);
    u.validate();
    CHECK(u.internal_count() == w.internal_count() + 2);
    // reduction of an already-reduced web is itself
    auto ring = skein_symmetric();
    WebSumZ same = reduce<long long>({{w, 1}}, ring);
    CHECK(same.terms.size() == 1);
    CHECK(same.terms.begin()->second.second == 1);
    CHECK(canonical_key(same.terms.begin()->second.first) == canonical_key(w));
}

TEST_CASE("reduction is confluent across rule choices") {
    auto ring = skein_symmetric();
    for (const auto& t : all_standard_tableaux({2, 2, 2}))
        for (int i = 1; i <= 5; ++i) {
            Web u = double_y_smoothing(i, tableau_to_web(t));
            WebSumZ r0 = reduce<long long>({{u, 1}}, ring, 0);
            CHECK(r0 == reduce<long long>({{u, 1}}, ring, 1));
            CHECK(r0 == reduce<long long>({{u, 1}}, ring, 2));
        }
}

TEST_CASE("tau rule: s_i acts by -1 exactly on tau members") {
    for (const auto& t : all_standard_tableaux({2, 2, 2})) {
        Web w = tableau_to_web(t);
        auto tw = tau_web(w);
        for (int i = 1; i <= 5; ++i) {
            WebSumZ s;
            s.add(w, 1);
            WebSumZ img = apply_generator(i, s);
            WebSumZ minus;
            minus.add(w, -1);
            CHECK((img == minus) == (tw.count(i) > 0));
        }
    }
}

TEST_CASE("hecke quadratic relation on the six-vertex web span") {
    // (T - v)(T + 1) = 0, i.e. T^2 = (v - 1) T + v
    LaurentPoly v = LaurentPoly::v(1);
    for (const auto& t : all_standard_tableaux({2, 2, 2}))
        for (int i = 1; i <= 5; ++i) {
            WebSum s;
            s.add(tableau_to_web(t), LaurentPoly(1));
            WebSum ti = apply_generator_hecke(i, s);
            WebSum tii = apply_generator_hecke(i, ti);
            WebSum rhs;
            for (const auto& [k, wc] : ti.terms) rhs.add(wc.first, wc.second * (v - LaurentPoly(1)));
            for (const auto& [k, wc] : s.terms) rhs.add(wc.first, wc.second * v);
            CHECK(tii == rhs);
        }
}

TEST_CASE("f_web pairs with f_yt and is an involution pair") {
    for (const auto& t : all_standard_tableaux({3, 3, 3})) {
        Web w = tableau_to_web(t);
        auto tw = tau_web(w);
        for (int lo = 1; lo + 1 <= 8; ++lo)
            for (int flip = 0; flip < 2; ++flip) {
                int i = flip ? lo + 1 : lo, j = flip ? lo : lo + 1;
                if (!tw.count(i) || tw.count(j)) continue;
                Web y = f_web(i, j, w);
                CHECK(tau_web(y).count(j));
                CHECK(!tau_web(y).count(i));
                CHECK(canonical_key(f_web(j, i, y)) == canonical_key(w));
            }
    }
}

TEST_CASE("section-9 web tau table") {
    Web w1 = tableau_to_web(yt_parse("1,3,5/2,4,7/6,8,9"));
    Web w2 = tableau_to_web(yt_parse("1,3,5/2,6,7/4,8,9"));
    Web w3 = tableau_to_web(yt_parse("1,3,7,9/2,5,8,11/4,6,10,12"));
    CHECK(tau_web(w1) == std::set<int>{1, 3, 5, 7});
    CHECK(tau_web(f_web(1, 2, w1)) == std::set<int>{2, 5, 7});
    CHECK(tau_web(w2) == std::set<int>{1, 3, 5, 7});
    CHECK(tau_web(f_web(1, 2, w2)) == std::set<int>{2, 3, 5, 7});
    CHECK(tau_web(w3) == std::set<int>{1, 3, 5, 7, 9, 11});
    CHECK(tau_web(f_web(7, 6, w3)) == std::set<int>{1, 3, 6, 9, 11});
    CHECK(tau_web(f_web(1, 2, f_web(7, 6, w3))) == std::set<int>{2, 3, 6, 9, 11});
    // W_1 and W_2 are the only nine-vertex reduced webs with this tau
    int count = 0;
    for (const auto& t : all_standard_tableaux({3, 3, 3}))
        if (tau_web(tableau_to_web(t)) == std::set<int>{1, 3, 5, 7}) ++count;
    CHECK(count == 2);
}

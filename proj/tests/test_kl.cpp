#include "doctest.h"

#include "cellweb/kl.hpp"
#include "cellweb/rs.hpp"
#include "kl_oracle.hpp"

#include <sstream>

using namespace cellweb;

TEST_CASE("symmetric group cache") {
    SymmetricGroup g(4);
    CHECK(g.size() == 24);
    CHECK(g.elems[0] == Permutation::identity(4));
    CHECK(g.index(perm_parse("4321")) == 23);
    CHECK(g.len[23] == 6);
    for (int w = 0; w < g.size(); ++w) {
        CHECK(g.elems[g.inv[w]] == invert(g.elems[w]));
        for (int i = 1; i <= 3; ++i)
            CHECK(g.elems[g.left_mult[i - 1][w]] == left_mul_simple(i, g.elems[w]));
    }
}

TEST_CASE("hecke multiplication and bar basis") {
    SymmetricGroup g(3);
    HeckeElement e;
    e.add(g.index(Permutation::identity(3)), LaurentPoly(1));
    // T_s T_s = (v-1) T_s + v T_e
    HeckeElement ts = hecke_mul_generator(g, e, 1);
    HeckeElement ts2 = hecke_mul_generator(g, ts, 1);
    int s1 = g.index(perm_parse("213"));
    CHECK(ts2.terms.at(s1) == LaurentPoly::v(1) - LaurentPoly(1));
    CHECK(ts2.terms.at(0) == LaurentPoly::v(1));
    // inverse really inverts
    HeckeElement back = hecke_mul_generator_inverse(g, ts, 1);
    CHECK(back == e);
    // bar is an involution on the basis
    auto bar = hecke_bar_basis(g);
    for (int w = 0; w < g.size(); ++w) {
        HeckeElement twice;
        for (const auto& [y, c] : bar[w].terms)
            for (const auto& [z, d] : bar[y].terms) twice.add(z, c.bar() * d);
        HeckeElement tw;
        tw.add(w, LaurentPoly(1));
        CHECK(twice == tw);
    }
}

TEST_CASE("kl polynomials match the defining-condition oracle") {
    for (int n = 2; n <= 4; ++n) {
        KLTable t(n);
        auto oracle = testing::kl_oracle(t.group());
        for (int y = 0; y < t.group().size(); ++y)
            for (int w = 0; w < t.group().size(); ++w) {
                auto it = oracle.find({y, w});
                if (it != oracle.end()) {
                    CHECK(t.leq(y, w));
                    CHECK(t.P(y, w) == it->second);
                } else if (y != w) {
                    CHECK(!t.leq(y, w));
                }
            }
    }
}

TEST_CASE("frozen S_4 table: six nontrivial entries, all v + 1") {
    KLTable t(4);
    const SymmetricGroup& g = t.group();
    LaurentPoly vp1 = LaurentPoly::v(1) + LaurentPoly(1);
    std::map<std::pair<std::string, std::string>, LaurentPoly> nontrivial;
    for (int y = 0; y < g.size(); ++y)
        for (int w = 0; w < g.size(); ++w) {
            if (!t.leq(y, w) || y == w) continue;
            LaurentPoly p = t.P(y, w);
            if (!(p == LaurentPoly(1)))
                nontrivial[{perm_str(g.elems[y]), perm_str(g.elems[w])}] = p;
        }
    CHECK(nontrivial.size() == 6);
    for (const auto& [pair, p] : nontrivial) CHECK(p == vp1);
    CHECK(nontrivial.count({"1234", "3412"}));
    CHECK(nontrivial.count({"1324", "3412"}));
    CHECK(nontrivial.count({"1234", "4231"}));
    CHECK(nontrivial.count({"1243", "4231"}));
    CHECK(nontrivial.count({"2134", "4231"}));
    CHECK(nontrivial.count({"2143", "4231"}));
}

TEST_CASE("c basis in low rank") {
    KLTable t(3);
    const SymmetricGroup& g = t.group();
    // C_s = v^(-1/2) T_s - v^(1/2) T_e
    HeckeElement cs = t.c_basis_element(g.index(perm_parse("213")));
    CHECK(cs.terms.size() == 2);
    CHECK(cs.terms.at(g.index(perm_parse("213"))) == LaurentPoly::vhalf(-1));
    CHECK(cs.terms.at(0) == -LaurentPoly::vhalf(1));
    // every C_w is bar invariant
    auto bar = hecke_bar_basis(g);
    for (int w = 0; w < g.size(); ++w) {
        HeckeElement cw = t.c_basis_element(w), img;
        for (const auto& [y, c] : cw.terms)
            for (const auto& [z, d] : bar[y].terms) img.add(z, c.bar() * d);
        CHECK(img == cw);
    }
}

TEST_CASE("left cells agree with rs Q-fibers") {
    for (int n = 2; n <= 5; ++n) {
        KLTable t(n);
        auto cells = left_cells(t);
        std::map<StandardTableau, std::set<int>> fibers;
        for (int w = 0; w < t.group().size(); ++w)
            fibers[rs(t.group().elems[w]).second].insert(w);
        CHECK(cells.size() == fibers.size());
        for (const auto& c : cells) {
            CHECK(std::set<int>(c.members.begin(), c.members.end()) ==
                  fibers.at(c.rightTableau));
        }
    }
}

TEST_CASE("frozen S_3 cells") {
    KLTable t(3);
    auto cells = left_cells(t);
    std::set<std::set<std::string>> got;
    for (const auto& c : cells) {
        std::set<std::string> m;
        for (int w : c.members) m.insert(perm_str(t.group().elems[w]));
        got.insert(m);
    }
    std::set<std::set<std::string>> want = {
        {"123"}, {"321"}, {"132", "231"}, {"213", "312"}};
    CHECK(got == want);
}

TEST_CASE("ts action on a cell") {
    KLTable t(3);
    const SymmetricGroup& g = t.group();
    auto cells = left_cells(t);
    const Cell* cell = nullptr;
    for (const auto& c : cells)
        for (int w : c.members)
            if (g.elems[w] == perm_parse("213")) cell = &c;
    REQUIRE(cell != nullptr);
    int w213 = g.index(perm_parse("213")), w312 = g.index(perm_parse("312"));
    // frozen: T_{s_2} C_213 = v C_213 + v^(1/2) C_312
    auto act = ts_action_on_cell(t, *cell, 2, w213);
    std::map<int, LaurentPoly> m(act.begin(), act.end());
    CHECK(m.size() == 2);
    CHECK(m.at(w213) == LaurentPoly::v(1));
    CHECK(m.at(w312) == LaurentPoly::vhalf(1));
    // s_1 in tau(213): T_{s_1} C_213 = -C_213
    auto neg = ts_action_on_cell(t, *cell, 1, w213);
    CHECK(neg.size() == 1);
    CHECK(neg[0].first == w213);
    CHECK(neg[0].second == -LaurentPoly(1));
}

TEST_CASE("f_kl matches the permutation-level map") {
    for (int n = 3; n <= 4; ++n) {
        KLTable t(n);
        const SymmetricGroup& g = t.group();
        for (const auto& cell : left_cells(t))
            for (int w : cell.members)
                for (int lo = 1; lo + 1 <= n - 1; ++lo)
                    for (int flip = 0; flip < 2; ++flip) {
                        int i = flip ? lo + 1 : lo, j = flip ? lo : lo + 1;
                        if (!in_descent_set(i, j, g.elems[w])) continue;
                        int y = f_kl(t, cell, i, j, w);
                        CHECK(g.elems[y] == f_sn(i, j, g.elems[w]));
                    }
    }
}

TEST_CASE("table save/load round trip") {
    KLTable t(4);
    std::stringstream buf;
    t.save(buf);
    KLTable u = KLTable::load(buf);
    CHECK(u.n() == 4);
    for (int y = 0; y < t.group().size(); ++y)
        for (int w = 0; w < t.group().size(); ++w) {
            CHECK(t.leq(y, w) == u.leq(y, w));
            if (t.leq(y, w)) {
                CHECK(t.P(y, w) == u.P(y, w));
                CHECK(t.mu(y, w) == u.mu(y, w));
            }
        }
    std::stringstream bad("not a table\n");
    CHECK_THROWS(KLTable::load(bad));
}

TEST_CASE("resource guard") {
    CHECK_THROWS_AS(KLTable(8), std::invalid_argument);
    CHECK_THROWS_AS(KLTable(10, 0, true), std::invalid_argument);
}

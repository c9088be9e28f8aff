#include "doctest.h"

#include "cellweb/rs.hpp"

using namespace cellweb;

TEST_CASE("rs on worked examples") {
    auto [p, q] = rs(perm_parse("54312"));
    CHECK(p == yt_parse("1,2/3/4/5"));
    CHECK(q == yt_parse("1,5/2/3/4"));

    // hand-run row insertion of 2,5,4,1,3
    auto [p2, q2] = rs(perm_parse("25413"));
    CHECK(p2 == yt_parse("1,3/2,4/5"));
    CHECK(q2 == yt_parse("1,2/3,5/4"));

    auto [pi, qi] = rs(Permutation::identity(4));
    CHECK(pi == yt_parse("1,2,3,4"));
    CHECK(qi == yt_parse("1,2,3,4"));
}

TEST_CASE("rs is a bijection onto same-shape pairs") {
    for (int n = 1; n <= 5; ++n) {
        std::set<std::pair<StandardTableau, StandardTableau>> images;
        for (const auto& w : all_permutations(n)) {
            auto [p, q] = rs(w);
            CHECK(p.shape() == q.shape());
            CHECK(p.size() == n);
            CHECK(rs_inverse(p, q) == w);
            images.insert({p, q});
        }
        CHECK((int)images.size() == (int)all_permutations(n).size());
    }
}

TEST_CASE("rs symmetry: inverse permutation swaps P and Q") {
    for (const auto& w : all_permutations(5)) {
        auto [p, q] = rs(w);
        auto [pi, qi] = rs(invert(w));
        CHECK(pi == q);
        CHECK(qi == p);
    }
}

TEST_CASE("tau compatibility: tau(w) = tau of the recording data") {
    // descents of w correspond to the P-tableau, descents of w^-1 to Q
    for (const auto& w : all_permutations(5)) {
        auto [p, q] = rs(w);
        CHECK(tau(w) == tau(p));
        CHECK(tau(invert(w)) == tau(q));
    }
}

TEST_CASE("rs_inverse rejects mismatched shapes") {
    CHECK_THROWS_AS((void)rs_inverse(yt_parse("1,2/3"), yt_parse("1,2,3")),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)rs_inverse(yt_parse("1,2"), yt_parse("1,2,3")),
                    std::invalid_argument);
}

#include "doctest.h"

#include "cellweb/tableau.hpp"

#include <algorithm>
#include <random>

using namespace cellweb;

TEST_CASE("tableau validation and accessors") {
    StandardTableau t = yt_parse("1,3,5/2,4,7/6,8,9");
    CHECK(t.size() == 9);
    CHECK(t.shape() == std::vector<int>{3, 3, 3});
    CHECK(t.row_of(4) == 2);
    CHECK(t.cell_of(8) == std::pair<int, int>{3, 2});
    CHECK_THROWS_AS(StandardTableau({{1, 3}, {2, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(StandardTableau({{2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(StandardTableau({{1}, {2, 3}}), std::invalid_argument);
}

TEST_CASE("tau of tableaux") {
    CHECK(tau(yt_parse("1,3,5/2,4,7/6,8,9")) == std::set<int>{1, 3, 5, 7});
    CHECK(tau(yt_parse("1,2/3/4/5")) == std::set<int>{2, 3, 4});
    CHECK(tau(yt_parse("1,2,3")) == std::set<int>{});
    CHECK(tau_mask(yt_parse("1,3/2")) == 0b10u);
}

TEST_CASE("f_yt on the worked 12-box tableaux") {
    StandardTableau t2 = yt_parse("1,3,7,9/2,5,8,11/4,6,10,12");
    StandardTableau t3 = yt_parse("1,3,5,7/2,6,9,11/4,8,10,12");
    StandardTableau t4 = yt_parse("1,3,5,7/2,4,9,11/6,8,10,12");
    StandardTableau t5 = yt_parse("1,3,5,9/2,4,7,11/6,8,10,12");
    for (const auto& t : {t2, t3, t4, t5})
        CHECK(tau(t) == std::set<int>{1, 3, 5, 7, 9, 11});
    CHECK(f_yt(7, 6, t2) == yt_parse("1,3,6,9/2,5,8,11/4,7,10,12"));
    CHECK(f_yt(7, 6, t3) == yt_parse("1,3,5,8/2,6,9,11/4,7,10,12"));
    CHECK(f_yt(7, 6, t4) == yt_parse("1,3,5,6/2,4,9,11/7,8,10,12"));
    CHECK(f_yt(7, 6, t5) == yt_parse("1,3,5,9/2,4,6,11/7,8,10,12"));
    CHECK(tau(f_yt(7, 6, t2)) == std::set<int>{1, 3, 6, 9, 11});
    CHECK(tau(f_yt(7, 6, t3)) == std::set<int>{1, 3, 5, 6, 8, 9, 11});
    CHECK(tau(f_yt(7, 6, t4)) == std::set<int>{1, 3, 6, 9, 11});
    CHECK(tau(f_yt(7, 6, t5)) == std::set<int>{1, 3, 5, 6, 9, 11});
    CHECK(f_yt(1, 2, f_yt(7, 6, t2)) == yt_parse("1,2,6,9/3,5,8,11/4,7,10,12"));
    CHECK(f_yt(1, 2, f_yt(7, 6, t4)) == yt_parse("1,2,5,6/3,4,9,11/7,8,10,12"));
    CHECK(tau(f_yt(1, 2, f_yt(7, 6, t2))) == std::set<int>{2, 3, 6, 9, 11});
    CHECK(tau(f_yt(1, 2, f_yt(7, 6, t4))) == std::set<int>{2, 6, 9, 11});
}

TEST_CASE("f_yt nine-box example") {
    StandardTableau t1 = yt_parse("1,3,5/2,4,7/6,8,9");
    StandardTableau u = f_yt(1, 2, t1);
    CHECK(u == yt_parse("1,2,5/3,4,7/6,8,9"));
    CHECK(tau(u) == std::set<int>{2, 5, 7});
    CHECK(f_yt(2, 1, u) == t1);
}

TEST_CASE("f_yt errors") {
    CHECK_THROWS_AS((void)f_yt(1, 3, yt_parse("1,3/2,4")), std::invalid_argument);
    // 1 not in tau: not in D_{1,2}
    CHECK_THROWS_AS((void)f_yt(1, 2, yt_parse("1,2/3,4")), std::invalid_argument);
}

TEST_CASE("column superstandard and reduction paths") {
    CHECK(is_column_superstandard(yt_parse("1,4,6/2,5/3")));
    CHECK(!is_column_superstandard(yt_parse("1,2,5/3,4/6")));
    CHECK(column_superstandard({3, 2, 1}) == yt_parse("1,4,6/2,5/3"));
    CHECK(column_superstandard({2, 2, 2}) == yt_parse("1,4/2,5/3,6"));
    std::mt19937 rng(5);
    for (int n = 2; n <= 7; ++n) {
        auto all = all_standard_tableaux_n(n);
        std::shuffle(all.begin(), all.end(), rng);
        int budget = 40;
        for (const auto& t : all) {
            if (!budget--) break;
            StandardTableau u = t;
            for (auto [i, j] : to_superstandard_path(t)) u = f_yt(i, j, u);
            CHECK(is_column_superstandard(u));
            CHECK(u.shape() == t.shape());
        }
    }
}

TEST_CASE("yamanouchi words") {
    CHECK(is_yamanouchi("+0+-0-"));
    CHECK(is_yamanouchi("++00--"));
    CHECK(!is_yamanouchi("0+-"));
    CHECK(!is_yamanouchi("+-0"));
    CHECK(is_balanced_yamanouchi("+0-"));
    CHECK(!is_balanced_yamanouchi("++00--0"));
    CHECK(!is_balanced_yamanouchi("++--"));
}

TEST_CASE("fulton correspondence round trips") {
    CHECK(tableau_to_yamanouchi(yt_parse("1,3,7,9/2,5,8,11/4,6,10,12")) == "+0+-0-+0+-0-");
    CHECK(yamanouchi_to_tableau("+0-") == yt_parse("1/2/3"));
    for (int n = 1; n <= 3; ++n)
        for (const auto& t : all_standard_tableaux({n, n, n})) {
            YamanouchiWord w = tableau_to_yamanouchi(t);
            CHECK(is_balanced_yamanouchi(w));
            CHECK(yamanouchi_to_tableau(w) == t);
        }
    CHECK_THROWS_AS((void)tableau_to_yamanouchi(yt_parse("1,2/3")), std::invalid_argument);
    CHECK_THROWS_AS((void)yamanouchi_to_tableau("+-"), std::invalid_argument);
}

TEST_CASE("enumeration and hook lengths") {
    CHECK(all_standard_tableaux({2, 2, 2}).size() == 5);
    CHECK(all_standard_tableaux({3, 3, 3}).size() == 42);
    CHECK(all_standard_tableaux({4, 4, 4}).size() == 462);
    CHECK(all_standard_tableaux_n(6).size() == 76);
    CHECK(hook_length_count({4, 4, 4}) == 462);
    CHECK(hook_length_count({6, 6, 6}) == 87516);
    for (int n = 1; n <= 8; ++n)
        for (const auto& shape : all_partitions(n))
            CHECK(Int(all_standard_tableaux(shape).size()) == hook_length_count(shape));
}

TEST_CASE("tableau text form") {
    StandardTableau t = yt_parse("1,3,5/2,4,7/6,8,9");
    CHECK(yt_str(t) == "1,3,5/2,4,7/6,8,9");
    CHECK(yt_parse(yt_str(t)) == t);
    CHECK_THROWS_AS((void)yt_parse("1,3/2,x"), std::invalid_argument);
    CHECK_THROWS_AS((void)yt_parse("2,3/1"), std::invalid_argument);
}

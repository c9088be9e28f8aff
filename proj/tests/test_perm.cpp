#include "doctest.h"

#include "cellweb/perm.hpp"

#include <algorithm>
#include <set>

using namespace cellweb;

namespace {

std::vector<int> reduced_word(Permutation x) {
    // peel left descents: x = s_{word[0]} s_{word[1]} ... s_{word[L-1]}
    std::vector<int> word;
    for (;;) {
        auto t = tau(x);
        if (t.empty()) break;
        int i = *t.begin();
        word.push_back(i);
        x = left_mul_simple(i, x);
    }
    return word;
}

// subword-property oracle: {x : x <= y} from one reduced word of y
std::set<Permutation> bruhat_lower_oracle(const Permutation& y) {
    std::vector<int> word = reduced_word(y);
    int n = y.n(), L = (int)word.size();
    std::set<Permutation> out;
    for (unsigned mask = 0; mask < (1u << L); ++mask) {
        Permutation x = Permutation::identity(n);
        for (int k = L - 1; k >= 0; --k)
            if (mask >> k & 1) x = left_mul_simple(word[k], x);
        out.insert(x);
    }
    return out;
}

} // namespace

TEST_CASE("compose, invert, simple generators") {
    Permutation x = perm_parse("3142"), y = perm_parse("2413");
    CHECK(compose(x, invert(x)) == Permutation::identity(4));
    CHECK(compose(Permutation::identity(4), y) == y);
    CHECK(compose(x, y)(1) == x(y(1)));
    CHECK(Permutation::simple(2, 4) == perm_parse("1324"));
    // left multiplication swaps the values i, i+1
    CHECK(left_mul_simple(2, perm_parse("213")) == perm_parse("312"));
    CHECK(left_mul_simple(1, perm_parse("54312")) == perm_parse("54321"));
    CHECK_THROWS_AS(Permutation({1, 1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
}

TEST_CASE("length and tau") {
    CHECK(length(Permutation::identity(5)) == 0);
    CHECK(length(perm_parse("54321")) == 10);
    CHECK(length(perm_parse("54312")) == 9);
    CHECK(tau(perm_parse("54312")) == std::set<int>{2, 3, 4});
    for (const auto& x : all_permutations(5)) {
        auto t = tau(x);
        for (int i = 1; i <= 4; ++i)
            CHECK(t.count(i) == (length(left_mul_simple(i, x)) < length(x) ? 1u : 0u));
    }
}

TEST_CASE("bruhat order agrees with the subword oracle") {
    for (int n = 2; n <= 4; ++n)
        for (const auto& y : all_permutations(n)) {
            auto lower = bruhat_lower_oracle(y);
            for (const auto& x : all_permutations(n))
                CHECK(bruhat_leq(x, y) == (lower.count(x) > 0));
        }
}

TEST_CASE("bruhat order basic properties") {
    auto elems = all_permutations(5);
    for (const auto& x : elems) {
        CHECK(bruhat_leq(Permutation::identity(5), x));
        CHECK(bruhat_leq(x, perm_parse("54321")));
        CHECK(bruhat_leq(x, x));
    }
}

TEST_CASE("f_sn maps D_{i,j} to D_{j,i} and is an involution pair") {
    CHECK(in_descent_set(2, 1, perm_parse("312")));
    CHECK(f_sn(1, 2, perm_parse("213")) == perm_parse("312"));
    for (int n = 3; n <= 5; ++n)
        for (const auto& x : all_permutations(n))
            for (int lo = 1; lo + 1 <= n - 1; ++lo)
                for (int flip = 0; flip < 2; ++flip) {
                    int i = flip ? lo + 1 : lo, j = flip ? lo : lo + 1;
                    if (!in_descent_set(i, j, x)) continue;
                    Permutation y = f_sn(i, j, x);
                    CHECK(in_descent_set(j, i, y));
                    CHECK(f_sn(j, i, y) == x);
                    CHECK(dual_knuth_related(x, y, std::max(i, j)));
                }
}

TEST_CASE("dual knuth relation") {
    // 2143 and 3142 differ by transposing the values 2,3 with 1 in between
    CHECK(dual_knuth_related(perm_parse("2143"), perm_parse("3142"), 3));
    CHECK(!dual_knuth_related(perm_parse("2143"), perm_parse("2143"), 3));
    CHECK(!dual_knuth_related(perm_parse("1234"), perm_parse("2134"), 2));
}

TEST_CASE("perm text form") {
    CHECK(perm_str(perm_parse("54312")) == "54312");
    Permutation big = Permutation::identity(12);
    CHECK(perm_parse(perm_str(big)) == big);
    CHECK_THROWS_AS((void)perm_parse("142"), std::invalid_argument);
    auto s4 = all_permutations(4);
    CHECK(s4.size() == 24);
    CHECK(std::is_sorted(s4.begin(), s4.end()));
}

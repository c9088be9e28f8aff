#include "doctest.h"

#include "cellweb/kl.hpp"
#include "cellweb/web.hpp"

#include <sstream>

using namespace cellweb;

TEST_CASE("web text format is versioned and bit-exact") {
    Web w = tableau_to_web(yt_parse("1,3,5/2,4,7/6,8,9"));
    std::string text = web_str(w);
    CHECK(text.rfind("web 1\n", 0) == 0);
    CHECK(web_parse(text) == w);
    CHECK(web_str(web_parse(text)) == text); // canonical form fixed point
    CHECK_THROWS_AS((void)web_parse("web 2\nboundary 3\n"), std::invalid_argument);
    CHECK_THROWS_AS((void)web_parse(""), std::invalid_argument);
    // truncated body
    CHECK_THROWS_AS((void)web_parse(text.substr(0, text.size() / 2)), std::invalid_argument);
}

TEST_CASE("kl table format is versioned") {
    KLTable t(3);
    std::stringstream buf;
    t.save(buf);
    std::string text = buf.str();
    CHECK(text.rfind("kltable 1\n", 0) == 0);
    std::stringstream wrong("kltable 9\nn 3\n");
    CHECK_THROWS_AS((void)KLTable::load(wrong), std::invalid_argument);
    std::stringstream trunc(text.substr(0, text.size() / 3));
    CHECK_THROWS((void)KLTable::load(trunc));
}

TEST_CASE("laurent, tableau, permutation text forms survive round trips") {
    for (const char* s : {"v + 1", "v^(1/2) - v^(-1/2)", "0", "-3*v^2 + 2"})
        CHECK(LaurentPoly::parse(s).str() == s);
    for (const char* s : {"1,3,5/2,4,7/6,8,9", "1/2/3", "1,2,3,4"})
        CHECK(yt_str(yt_parse(s)) == s);
    for (const char* s : {"54312", "1", "312"})
        CHECK(perm_str(perm_parse(s)) == s);
}

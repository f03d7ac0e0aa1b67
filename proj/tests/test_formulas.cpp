#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "shrub/forest.hpp"
#include "shrub/formulas.hpp"
#include "shrub/perm.hpp"

using namespace shrub;

TEST_CASE("binomial and factorial") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(52, 26) == BigCount("495918532948104"));
    CHECK(factorial(0) == 1);
    CHECK(factorial(12) == 479001600);
}

TEST_CASE("fuss_count examples") {
    CHECK(fuss_count(2, 2) == 3);
    CHECK(fuss_count(3, 2) == 4);
    CHECK(fuss_count(5, 0) == 1);
    const std::vector<long> row123 = {1, 1, 3, 12, 55, 273};
    for (long m = 0; m < static_cast<long>(row123.size()); ++m) {
        CHECK(fuss_count(2, m) == row123[static_cast<std::size_t>(m)]);
    }
    const std::vector<long> row132 = {1, 1, 4, 22, 140, 969};
    for (long m = 0; m < static_cast<long>(row132.size()); ++m) {
        CHECK(fuss_count(3, m) == row132[static_cast<std::size_t>(m)]);
    }
}

TEST_CASE("schroder_count examples") {
    CHECK(schroder_count(3, 0) == 1);
    CHECK(schroder_count(3, 1) == 2);
    CHECK(schroder_count(3, 2) == 14);
    const std::vector<long> row = {1, 2, 14, 134, 1482, 17818};
    for (long m = 0; m < static_cast<long>(row.size()); ++m) {
        CHECK(schroder_count(3, m) == row[static_cast<std::size_t>(m)]);
    }
}

TEST_CASE("duchon_count examples") {
    const std::vector<long> row = {1, 2, 23, 377, 7229, 151491};
    for (long n = 0; n < static_cast<long>(row.size()); ++n) {
        CHECK(duchon_count(n) == row[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("unrestricted count") {
    CHECK(unrestricted_forest_count(2, 0) == 1);
    CHECK(unrestricted_forest_count(2, 4) == 5913600);
    CHECK(unrestricted_forest_count(3, 1) == 6);
    // ((k+1)n)! / (k+1)^n stays integral much further out
    CHECK(unrestricted_forest_count(2, 20) * BigCount("3486784401") ==
          factorial(60));
}

TEST_CASE("closed forms match brute force") {
    for (int k = 2; k <= 3; ++k) {
        for (int n = 0; n <= 3; ++n) {
            const PatternSet p123({parse_perm("123")});
            const PatternSet p132({parse_perm("132")});
            CHECK(enumerate_forests(k, n, &p123) == fuss_count(k, n));
            CHECK(enumerate_forests(k, n, &p132) == fuss_count(k + 1, n));
        }
    }
    for (int n = 0; n <= 3; ++n) {
        const PatternSet p213({parse_perm("213")});
        const PatternSet p231({parse_perm("231")});
        CHECK(enumerate_forests(2, n, &p213) == schroder_count(3, n));
        CHECK(enumerate_forests(2, n, &p231) == duchon_count(n));
    }
}

TEST_CASE("growth sanity") {
    // consecutive Fuss ratios approach the supercritical value 27/4 from below
    const BigCount a = fuss_count(2, 40);
    const BigCount b = fuss_count(2, 41);
    CHECK(4 * b < 27 * a);
    CHECK(10 * b > 64 * a);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <vector>

#include "shrub/errors.hpp"
#include "shrub/perm.hpp"

using namespace shrub;

namespace {

// Oracle: scan all index subsets of pattern length.
bool contains_naive(const Permutation& pi, const Permutation& pat) {
    const int n = pi.size();
    const int m = pat.size();
    if (m == 0) return true;
    if (m > n) return false;
    std::vector<int> idx(static_cast<std::size_t>(m));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        std::vector<int> vals;
        for (int i : idx) vals.push_back(pi[i]);
        bool iso = true;
        for (int a = 0; a < m && iso; ++a) {
            for (int b = a + 1; b < m && iso; ++b) {
                if ((vals[static_cast<std::size_t>(a)] < vals[static_cast<std::size_t>(b)]) !=
                    (pat[a] < pat[b])) {
                    iso = false;
                }
            }
        }
        if (iso) return true;
        int i = m - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - m + i) --i;
        if (i < 0) return false;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < m; ++j) {
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
}

std::vector<Permutation> all_perms(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

}  // namespace

TEST_CASE("permutation validation") {
    CHECK_NOTHROW(Permutation({2, 1, 3}));
    CHECK_NOTHROW(Permutation());
    CHECK_THROWS_AS(Permutation({0, 1}), invalid_input);
    CHECK_THROWS_AS(Permutation({1, 3}), invalid_input);
    CHECK_THROWS_AS(Permutation({1, 1, 2}), invalid_input);
    CHECK_THROWS_AS(Permutation({-1, 1}), invalid_input);
}

TEST_CASE("reduce") {
    CHECK(reduce({9, 8, 6, 7}) == Permutation({4, 3, 1, 2}));
    CHECK(reduce({5}) == Permutation({1}));
    CHECK(reduce({}) == Permutation());
    CHECK(reduce({3, 14, 15, 9, 26}) == Permutation({1, 3, 4, 2, 5}));
}

TEST_CASE("contains on the complete heap readout") {
    // 125349867 contains five of the six length-3 patterns; it avoids 231
    // because no ascent is ever followed by a value below its left foot.
    const Permutation heap({1, 2, 5, 3, 4, 9, 8, 6, 7});
    CHECK(contains(heap, Permutation({3, 2, 1})));
    CHECK(contains(heap, Permutation({1, 2, 3})));
    CHECK(contains(heap, Permutation({1, 3, 2})));
    CHECK(contains(heap, Permutation({2, 1, 3})));
    CHECK(!contains(heap, Permutation({2, 3, 1})));
    CHECK(contains(heap, Permutation({3, 1, 2})));
}

TEST_CASE("avoidance basics") {
    const Permutation inc({1, 2, 3, 4});
    CHECK(avoids(inc, Permutation({2, 1})));
    CHECK(!avoids(inc, Permutation({1, 2})));
    CHECK(avoids(Permutation(), Permutation({1})));
    // the empty pattern occurs in everything
    CHECK(contains(Permutation(), Permutation()));
}

TEST_CASE("contains matches the subset oracle exhaustively") {
    const auto patterns = all_perms(3);
    for (int n = 0; n <= 8; ++n) {
        for (const auto& pi : all_perms(n)) {
            for (const auto& pat : patterns) {
                CHECK(contains(pi, pat) == contains_naive(pi, pat));
            }
        }
    }
}

TEST_CASE("pattern sets") {
    CHECK_THROWS_AS(PatternSet({}), invalid_input);
    CHECK_THROWS_AS(PatternSet({Permutation({1, 2}), Permutation({1, 2})}),
                    invalid_input);
    CHECK_THROWS_AS(PatternSet({Permutation()}), invalid_input);
    const PatternSet ps({Permutation({1, 2, 3}), Permutation({3, 2, 1})});
    CHECK(avoids_all(Permutation({2, 3, 1}), ps));
    CHECK(!avoids_all(Permutation({1, 2, 3}), ps));
}

TEST_CASE("lif examples") {
    CHECK(lif(Permutation({1, 2, 3})) == 3);
    CHECK(lif(Permutation({1, 3, 2})) == 1);
    CHECK(lif(Permutation({2, 1})) == 1);
    CHECK(lif(Permutation()) == 0);
    CHECK(lif(Permutation({3, 1, 2})) == 1);  // rightmost inversion foot is 2
}

TEST_CASE("lif properties") {
    for (int n = 1; n <= 7; ++n) {
        for (const auto& pi : all_perms(n)) {
            const int v = lif(pi);
            CHECK(v >= 1);
            CHECK(v <= n);
            if (v == n) {
                CHECK(pi.is_increasing());
            }
            // definition: entries above the foot of the rightmost inversion
            int foot = 0;
            int best = 0;
            for (int i = 0; i < n; ++i) {
                if (pi[i] > best) {
                    best = pi[i];
                } else {
                    foot = pi[i];
                }
            }
            if (foot != 0) CHECK(v == n - foot);
        }
    }
}

TEST_CASE("appending a new maximum keeps lif meaningful") {
    // adding n+1 at the end: an increasing suffix extends, foot unchanged
    for (int n = 1; n <= 6; ++n) {
        for (const auto& pi : all_perms(n)) {
            std::vector<int> ext = pi.values();
            ext.push_back(n + 1);
            const int before = lif(pi);
            const int after = lif_of_values(ext);
            if (pi.is_increasing()) {
                CHECK(after == n + 1);
            } else {
                CHECK(after == before + 1);
            }
        }
    }
}

TEST_CASE("wire formats") {
    const Permutation pi({7, 15, 14, 8, 9, 10, 11, 13, 12, 1, 5, 6, 2, 4, 3});
    CHECK(format_perm_spaces(pi) == "7 15 14 8 9 10 11 13 12 1 5 6 2 4 3");
    CHECK(format_perm_compact(pi) == "7(15)(14)89(10)(11)(13)(12)156243");
    CHECK(parse_perm("7 15 14 8 9 10 11 13 12 1 5 6 2 4 3") == pi);
    CHECK(parse_perm("7(15)(14)89(10)(11)(13)(12)156243") == pi);

    const Permutation ex({1, 12, 11, 2, 3, 5, 4, 6, 8, 7, 10, 9});
    CHECK(format_perm_compact(ex) == "1(12)(11)2354687(10)9");
    CHECK(parse_perm("1(12)(11)2354687(10)9") == ex);

    CHECK(parse_perm("1 2 3") == Permutation({1, 2, 3}));
    CHECK(parse_perm("132") == Permutation({1, 3, 2}));
    CHECK(parse_perm("") == Permutation());
}

TEST_CASE("wire format round trips") {
    for (int n = 0; n <= 6; ++n) {
        for (const auto& pi : all_perms(n)) {
            CHECK(parse_perm(format_perm_spaces(pi)) == pi);
            CHECK(parse_perm(format_perm_compact(pi)) == pi);
        }
    }
    // two-digit values survive the compact form
    std::vector<int> big(12);
    std::iota(big.begin(), big.end(), 1);
    std::reverse(big.begin(), big.end());
    const Permutation pi(big);
    CHECK(parse_perm(format_perm_compact(pi)) == pi);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_perm("1 2 x"), invalid_input);
    CHECK_THROWS_AS(parse_perm("1(12"), invalid_input);
    CHECK_THROWS_AS(parse_perm("1()2"), invalid_input);
    CHECK_THROWS_AS(parse_perm("12a"), invalid_input);
    CHECK_THROWS_AS(parse_perm("1 2 2"), invalid_input);
}

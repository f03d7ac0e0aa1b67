#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "shrub/bijections.hpp"
#include "shrub/errors.hpp"
#include "shrub/forest.hpp"
#include "shrub/paths.hpp"
#include "shrub/perm.hpp"

using namespace shrub;

namespace {

const StepAlphabet kEN = StepAlphabet::east_north();
const StepAlphabet kClub = StepAlphabet::club();

// The 17-token worked example path for the 213/312 constructions.
const std::string kWorked213 = "BDABDDDDDDADDBDDD";

std::vector<std::string> generate(const StepAlphabet& a, const WedgeBound& b,
                                  std::pair<long, long> end) {
    std::vector<std::string> out;
    generate_paths(a, b, end, {}, [&](const std::string& t) { out.push_back(t); });
    return out;
}

std::set<std::vector<int>> brute_words(int k, int n, const char* pattern) {
    const PatternSet pats({parse_perm(pattern)});
    std::set<std::vector<int>> out;
    enumerate_forests(k, n, &pats, {},
                      [&](const std::vector<int>& labels) { out.insert(labels); });
    return out;
}

ShrubForest forest_of(const char* compact, int k = 2) {
    return forest_of_pi(parse_perm(compact), k);
}

// Within each shrub the leaves must be the k smallest still-unused labels
// larger than the root, scanning shrubs left to right.
void check_leaf_labels(const ShrubForest& f) {
    const int k = f.arity();
    std::set<int> remaining;
    for (int v = 1; v <= (k + 1) * f.shrubs(); ++v) remaining.insert(v);
    for (int i = 0; i < f.shrubs(); ++i) {
        const int root = f.root(i);
        remaining.erase(root);
        std::vector<int> expected;
        for (auto it = remaining.upper_bound(root);
             it != remaining.end() && static_cast<int>(expected.size()) < k; ++it) {
            expected.push_back(*it);
        }
        std::vector<int> leaves;
        for (int j = 0; j < k; ++j) leaves.push_back(f.leaf(i, j));
        std::sort(leaves.begin(), leaves.end());
        CHECK(leaves == expected);
        for (int v : leaves) remaining.erase(v);
    }
}

}  // namespace

TEST_CASE("height words") {
    const HeightWord w = HeightWord::of_path(LatticePath(kEN, "ENNNENENNNNN"));
    CHECK(w.heights == std::vector<int>{0, 3, 4});
    CHECK(w.w_prime() == std::vector<int>{5, 4, 1});
    CHECK(w.to_path(9).tokens() == "ENNNENENNNNN");

    const HeightWord empty = HeightWord::of_path(LatticePath(kEN, ""));
    CHECK(empty.heights.empty());
    CHECK(empty.to_path(0).tokens() == "");

    CHECK_THROWS_AS(HeightWord::of_path(LatticePath(kClub, "ADDD")), invalid_path);
    CHECK_THROWS_AS(w.to_path(3), invalid_input);  // rise below the last height

    // Heights read off any E/N path are weakly increasing, and w' keeps the
    // length.
    for (const auto& t : generate(kEN, WedgeBound(3, 1, Sense::below_line), {3, 9})) {
        const HeightWord h = HeightWord::of_path(LatticePath(kEN, t));
        CHECK(std::is_sorted(h.heights.begin(), h.heights.end()));
        CHECK(h.w_prime().size() == h.heights.size());
        CHECK(h.to_path(9).tokens() == t);
    }
}

TEST_CASE("block decompositions") {
    const BlockDecomposition b = BlockDecomposition::of_path("EENENEEEEEENNENNENEN");
    CHECK(b.east_runs == std::vector<int>{2, 1, 6, 0, 1, 0, 1, 1});
    CHECK(b.reassemble() == "EENENEEEEEENNENNENEN");

    CHECK(BlockDecomposition::of_path("").east_runs.empty());
    CHECK(BlockDecomposition::of_path("").reassemble() == "");
    CHECK(BlockDecomposition::of_path("EEN").east_runs == std::vector<int>{2});

    CHECK_THROWS_AS(BlockDecomposition::of_path("EE"), invalid_path);
    CHECK_THROWS_AS(BlockDecomposition::of_path("EXN"), invalid_path);

    // One block per North step, reassembly exact, over a generated family.
    for (const auto& t : generate(kEN, WedgeBound(2, 3, Sense::below_line), {6, 4})) {
        const BlockDecomposition d = BlockDecomposition::of_path(t);
        CHECK(d.reassemble() == t);
        CHECK(d.east_runs.size() ==
              static_cast<std::size_t>(std::count(t.begin(), t.end(), 'N')));
    }
}

TEST_CASE("123 bijection worked pairs") {
    CHECK(pi_of_forest(bij123_path_to_forest(LatticePath(kEN, "EENNNN"), 2)) ==
          parse_perm("265143"));
    CHECK(pi_of_forest(bij123_path_to_forest(LatticePath(kEN, "ENENNN"), 2)) ==
          parse_perm("365142"));
    CHECK(pi_of_forest(bij123_path_to_forest(LatticePath(kEN, "ENNENN"), 2)) ==
          parse_perm("465132"));

    CHECK(bij123_forest_to_path(forest_of("265143")).tokens() == "EENNNN");
    CHECK(bij123_forest_to_path(forest_of("365142")).tokens() == "ENENNN");
    CHECK(bij123_forest_to_path(forest_of("465132")).tokens() == "ENNENN");

    // A 123-avoiding single binary shrub must be 132.
    CHECK_THROWS_AS(bij123_forest_to_path(forest_of("123")), invalid_input);
    CHECK(bij123_forest_to_path(forest_of("132")).tokens() == "ENN");

    CHECK_THROWS_AS(bij123_path_to_forest(LatticePath(kEN, "NEENNN"), 2),
                    invalid_path);
    CHECK_THROWS_AS(bij123_path_to_forest(LatticePath(kEN, "ENNNEN"), 2),
                    invalid_path);
    CHECK_THROWS_AS(bij123_path_to_forest(LatticePath(kEN, "EN"), 2), invalid_path);
}

TEST_CASE("132 bijection worked pairs") {
    CHECK(pi_of_forest(bij132_path_to_forest(LatticePath(kEN, "ENNNENENNNNN"), 2)) ==
          parse_perm("567489123"));
    CHECK(pi_of_forest(bij132_path_to_forest(LatticePath(kEN, "ENNEENNNNNNN"), 2)) ==
          parse_perm("345678129"));
    CHECK(pi_of_forest(bij132_path_to_forest(LatticePath(kEN, "ENNN"), 2)) ==
          parse_perm("123"));

    CHECK(bij132_forest_to_path(forest_of("567489123")).tokens() == "ENNNENENNNNN");
    CHECK(bij132_forest_to_path(forest_of("345678129")).tokens() == "ENNEENNNNNNN");
    CHECK(bij132_forest_to_path(forest_of("123")).tokens() == "ENNN");

    CHECK_THROWS_AS(bij132_forest_to_path(forest_of("132")), invalid_input);
    CHECK_THROWS_AS(bij132_path_to_forest(LatticePath(kEN, "NENNNNNNNNNN"), 2),
                    invalid_path);
    // Ends on y = 2x, not on y = 3x.
    CHECK_THROWS_AS(bij132_path_to_forest(LatticePath(kEN, "EENNNN"), 2),
                    invalid_path);
}

TEST_CASE("213 bijection worked example") {
    CHECK(bij213_path_to_perm(LatticePath(kClub, kWorked213)) ==
          parse_perm("7 15 14 8 9 10 11 13 12 1 5 6 2 4 3"));
    CHECK(bij213_perm_to_path(parse_perm("7 15 14 8 9 10 11 13 12 1 5 6 2 4 3"))
              .tokens() == kWorked213);

    // A single (1,3) step reads bottom-up; a (2,2) step forms a 132 pattern.
    CHECK(bij213_path_to_perm(LatticePath(kClub, "ADDD")) == parse_perm("123"));
    CHECK(bij213_path_to_perm(LatticePath(kClub, "BDD")) == parse_perm("132"));
    CHECK(bij213_perm_to_path(parse_perm("123")).tokens() == "ADDD");
    CHECK(bij213_perm_to_path(parse_perm("132")).tokens() == "BDD");

    CHECK(bij213_path_to_perm(LatticePath(kClub, "")).empty());
    CHECK(bij213_perm_to_path(Permutation()).tokens() == "");

    CHECK_THROWS_AS(bij213_path_to_perm(LatticePath(kClub, "AD")), invalid_path);
    CHECK_THROWS_AS(bij213_path_to_perm(LatticePath(kClub, "DA")), invalid_path);
    CHECK_THROWS_AS(bij213_path_to_perm(LatticePath(kEN, "EN")), invalid_path);
    CHECK_THROWS_WITH_AS(bij213_perm_to_path(parse_perm("135246")),
                         "shrub word must avoid 213", invalid_input);
    CHECK_THROWS_AS(bij213_perm_to_path(parse_perm("213")), not_a_shrub_word);
}

TEST_CASE("312 bijection worked example") {
    CHECK(bij312_path_to_perm(LatticePath(kClub, kWorked213)) ==
          parse_perm("2 5 4 3 6 7 8 10 9 1 12 13 11 15 14"));
    CHECK(bij312_perm_to_path(parse_perm("2 5 4 3 6 7 8 10 9 1 12 13 11 15 14"))
              .tokens() == kWorked213);

    CHECK(bij312_path_to_perm(LatticePath(kClub, "ADDD")) == parse_perm("123"));
    CHECK(bij312_path_to_perm(LatticePath(kClub, "BDD")) == parse_perm("132"));
    CHECK(bij312_perm_to_path(parse_perm("123")).tokens() == "ADDD");
    CHECK(bij312_perm_to_path(parse_perm("132")).tokens() == "BDD");

    CHECK(bij312_path_to_perm(LatticePath(kClub, "")).empty());
    CHECK(bij312_perm_to_path(Permutation()).tokens() == "");

    CHECK_THROWS_AS(bij312_path_to_perm(LatticePath(kClub, "AD")), invalid_path);
    CHECK_THROWS_WITH_AS(bij312_perm_to_path(parse_perm("135246")),
                         "shrub word must avoid 312", invalid_input);
}

TEST_CASE("231 block map worked example") {
    CHECK(bij231_path_to_perm(LatticePath(kEN, "EENENEEEEEENNENNENEN")) ==
          parse_perm("1(12)(11)2354687(10)9"));
    CHECK(bij231_perm_to_path(parse_perm("1(12)(11)2354687(10)9")).tokens() ==
          "EENENEEEEEENNENNENEN");

    // The two one-shrub paths cover exactly the two one-shrub words; the
    // orientation below is what the construction produces.
    CHECK(bij231_path_to_perm(LatticePath(kEN, "EEENN")) == parse_perm("123"));
    CHECK(bij231_path_to_perm(LatticePath(kEN, "EENEN")) == parse_perm("132"));
    CHECK(bij231_perm_to_path(parse_perm("123")).tokens() == "EEENN");
    CHECK(bij231_perm_to_path(parse_perm("132")).tokens() == "EENEN");

    CHECK(bij231_path_to_perm(LatticePath(kEN, "")).empty());
    CHECK(bij231_perm_to_path(Permutation()).tokens() == "");

    CHECK_THROWS_AS(bij231_path_to_perm(LatticePath(kEN, "ENEEN")), invalid_path);
    CHECK_THROWS_AS(bij231_path_to_perm(LatticePath(kEN, "EEN")), invalid_path);
    CHECK_THROWS_WITH_AS(bij231_perm_to_path(parse_perm("245136")),
                         "shrub word must avoid 231", invalid_input);
}

TEST_CASE("123 and 132 round trips and images") {
    struct Family {
        const char* pattern;
        int k;
        int slope;  // bounding line y = slope * x
        int max_n;
        ShrubForest (*forward)(const LatticePath&, int);
        LatticePath (*back)(const ShrubForest&);
    };
    const Family families[] = {
        {"123", 2, 2, 4, bij123_path_to_forest, bij123_forest_to_path},
        {"132", 2, 3, 4, bij132_path_to_forest, bij132_forest_to_path},
        {"123", 3, 3, 2, bij123_path_to_forest, bij123_forest_to_path},
        {"132", 3, 4, 2, bij132_path_to_forest, bij132_forest_to_path},
    };
    for (const Family& fam : families) {
        const Permutation rho = parse_perm(fam.pattern);
        for (int n = 0; n <= fam.max_n; ++n) {
            const auto paths = generate(kEN, WedgeBound(fam.slope, 1, Sense::below_line),
                                        {n, fam.slope * n});
            std::set<std::vector<int>> image;
            for (const auto& t : paths) {
                const ShrubForest f = fam.forward(LatticePath(kEN, t), fam.k);
                CHECK(avoids(pi_of_forest(f), rho));
                CHECK(fam.back(f).tokens() == t);
                image.insert(f.labels());
            }
            CHECK(image.size() == paths.size());
            CHECK(image == brute_words(fam.k, n, fam.pattern));
            // The inverse-then-forward direction over the brute set.
            for (const auto& labels : image) {
                const ShrubForest f(fam.k, labels);
                CHECK(fam.forward(fam.back(f), fam.k) == f);
            }
        }
    }
}

TEST_CASE("132 leaf labels are the smallest available above the root") {
    for (int n = 0; n <= 3; ++n) {
        for (const auto& t :
             generate(kEN, WedgeBound(3, 1, Sense::below_line), {n, 3 * n})) {
            check_leaf_labels(bij132_path_to_forest(LatticePath(kEN, t), 2));
        }
    }
}

TEST_CASE("213 and 312 share one path family") {
    for (int n = 0; n <= 3; ++n) {
        const auto paths =
            generate(kClub, WedgeBound(1, 1, Sense::above_axis), {4 * n, 0});
        std::set<std::vector<int>> image213;
        std::set<std::vector<int>> image312;
        for (const auto& t : paths) {
            const LatticePath path(kClub, t);
            const Permutation a = bij213_path_to_perm(path);
            CHECK(bij213_path_to_perm_appending(path) == a);
            CHECK(bij213_perm_to_path(a).tokens() == t);
            image213.insert(a.values());

            const Permutation b = bij312_path_to_perm(path);
            CHECK(bij312_perm_to_path(b).tokens() == t);
            image312.insert(b.values());
        }
        CHECK(image213 == brute_words(2, n, "213"));
        CHECK(image312 == brute_words(2, n, "312"));
        // Both images are indexed by the same paths, so the composite map
        // matches them up one for one.
        CHECK(image213.size() == paths.size());
        CHECK(image312.size() == paths.size());
    }
}

TEST_CASE("231 round trips and image") {
    for (int n = 0; n <= 3; ++n) {
        const auto paths =
            generate(kEN, WedgeBound(2, 3, Sense::below_line), {3 * n, 2 * n});
        std::set<std::vector<int>> image;
        for (const auto& t : paths) {
            const Permutation a = bij231_path_to_perm(LatticePath(kEN, t));
            CHECK(bij231_perm_to_path(a).tokens() == t);
            image.insert(a.values());
        }
        CHECK(image.size() == paths.size());
        CHECK(image == brute_words(2, n, "231"));
    }
}

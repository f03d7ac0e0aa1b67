#pragma once

#include <string>
#include <vector>

#include "shrub/forest.hpp"
#include "shrub/paths.hpp"
#include "shrub/perm.hpp"

namespace shrub {

// East-step heights of an E/N path: w[i] = number of N steps before the
// (i+1)st E step. Weakly increasing by construction.
struct HeightWord {
    std::vector<int> heights;

    static HeightWord of_path(const LatticePath& path);
    // Rebuilds the E/N path with the given total number of N steps.
    LatticePath to_path(int total_rise) const;
    // The derived word of the 132 construction: reversed heights, each +1.
    std::vector<int> w_prime() const;
};

// An E/N path ending in N, split into maximal E^k N factors. east_runs[i] is
// the k of the (i+1)st factor; the factor count equals the number of N steps.
struct BlockDecomposition {
    std::vector<int> east_runs;

    static BlockDecomposition of_path(const std::string& en_tokens);
    std::string reassemble() const;
};

// 123: E/N paths weakly below y = kx ending at (n, kn) <-> 123-avoiding
// k-ary forests. Roots are the East-step positions in decreasing order;
// leaves take the remaining labels in decreasing order.
ShrubForest bij123_path_to_forest(const LatticePath& path, int k);
LatticePath bij123_forest_to_path(const ShrubForest& f);

// 132: E/N paths weakly below y = (k+1)x ending at (n, (k+1)n) <->
// 132-avoiding k-ary forests, via the height word w and its derived w'.
ShrubForest bij132_path_to_forest(const LatticePath& path, int k);
LatticePath bij132_forest_to_path(const ShrubForest& f);

// 213: paths over {A=(1,3), B=(2,2), D=(1,-1)} from (0,0) to (4n,0) weakly
// above the x-axis <-> 213-avoiding binary shrub words, by recursive
// up-segment labeling.
Permutation bij213_path_to_perm(const LatticePath& path);
LatticePath bij213_perm_to_path(const Permutation& pi);

// The alternate left-to-right appending construction of the same map,
// kept as an independent route for cross-checking.
Permutation bij213_path_to_perm_appending(const LatticePath& path);

// 312: the same path family <-> 312-avoiding binary shrub words, by the
// appending construction (root = (d+1)st highest possible value).
Permutation bij312_path_to_perm(const LatticePath& path);
LatticePath bij312_perm_to_path(const Permutation& pi);

// 231: E/N paths with 3n E and 2n N steps weakly below y = (2/3)x <->
// 231-avoiding binary shrub words, via the block-by-block map phi and its
// stated inverse.
Permutation bij231_path_to_perm(const LatticePath& path);
LatticePath bij231_perm_to_path(const Permutation& pi);

}  // namespace shrub

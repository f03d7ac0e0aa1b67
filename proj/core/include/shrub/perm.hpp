#pragma once

#include <compare>
#include <string>
#include <vector>

#include "shrub/errors.hpp"

namespace shrub {

// A permutation of {1,...,n}, stored one-based in one-line notation.
class Permutation {
public:
    Permutation() = default;
    // Validates that values is a permutation of {1,...,n}.
    explicit Permutation(std::vector<int> values);

    static Permutation identity(int n);

    int size() const { return static_cast<int>(values_.size()); }
    bool empty() const { return values_.empty(); }
    // 0-based position access; the stored value is 1-based.
    int operator[](int pos) const { return values_[static_cast<std::size_t>(pos)]; }
    const std::vector<int>& values() const { return values_; }

    bool is_increasing() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) {
        return a.values_ <=> b.values_;
    }

private:
    std::vector<int> values_;
};

// The unique permutation order-isomorphic to a window of distinct integers.
Permutation reduce(const std::vector<int>& window);

// Classical pattern containment: some subsequence of pi reduces to rho.
bool contains(const Permutation& pi, const Permutation& rho);
inline bool avoids(const Permutation& pi, const Permutation& rho) {
    return !contains(pi, rho);
}

// A nonempty list of distinct nonempty patterns.
class PatternSet {
public:
    explicit PatternSet(std::vector<Permutation> patterns);
    const std::vector<Permutation>& patterns() const { return patterns_; }

private:
    std::vector<Permutation> patterns_;
};

bool avoids_all(const Permutation& pi, const PatternSet& set);

// Last inversion foot. For a permutation with an inversion this is n - v where
// v is the rightmost entry that is not a left-to-right maximum; an increasing
// permutation scores n, the empty permutation 0.
int lif(const Permutation& pi);
// Same statistic on a raw label sequence (assumed a valid permutation).
int lif_of_values(const std::vector<int>& values);

// Wire formats. Space-separated: "7 15 14 ...". Compact: digits with values
// of two or more decimal digits parenthesized, "1(12)(11)2354687(10)9".
// parse_perm accepts either; text with any whitespace is read as the
// space-separated form, anything else as compact.
Permutation parse_perm(const std::string& text);
std::string format_perm_spaces(const Permutation& pi);
std::string format_perm_compact(const Permutation& pi);

}  // namespace shrub

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "shrub/bigint.hpp"
#include "shrub/perm.hpp"

namespace shrub {

// An ordered forest of n k-ary shrubs (a root with k leaf children), labeled
// by 1..(k+1)n in shrub-by-shrub, root-then-leaves order, with every root
// smaller than each of its leaves.
class ShrubForest {
public:
    // n is deduced from labels.size() / (k+1); validates the label set and
    // the root-below-leaves condition.
    ShrubForest(int k, std::vector<int> labels);

    int arity() const { return k_; }
    int shrubs() const { return n_; }
    const std::vector<int>& labels() const { return labels_; }
    int root(int shrub) const { return labels_[static_cast<std::size_t>(shrub * (k_ + 1))]; }
    int leaf(int shrub, int j) const {
        return labels_[static_cast<std::size_t>(shrub * (k_ + 1) + 1 + j)];
    }

    friend bool operator==(const ShrubForest&, const ShrubForest&) = default;

private:
    int k_ = 2;
    int n_ = 0;
    std::vector<int> labels_;
};

// Readout: the label sequence as a permutation of length (k+1)n.
Permutation pi_of_forest(const ShrubForest& f);

// Inverse readout; throws not_a_shrub_word naming the first bad block if some
// block of k+1 values violates the root-below-leaves condition.
ShrubForest forest_of_pi(const Permutation& pi, int k);

// A forest of general rooted heaps (mixed arity, mixed size), kept only for
// parsing and readout. Each tree is given by its per-node child counts in
// breadth-first order; labels are the breadth-first readouts of the trees,
// concatenated. Validation checks the child-above-parent condition.
class HeapForest {
public:
    struct TreeShape {
        std::vector<int> child_counts;  // breadth-first; size == node count
    };

    HeapForest(std::vector<TreeShape> shapes, std::vector<int> labels);

    const std::vector<TreeShape>& shapes() const { return shapes_; }
    const std::vector<int>& labels() const { return labels_; }

private:
    std::vector<TreeShape> shapes_;
    std::vector<int> labels_;
};

Permutation pi_of_heap_forest(const HeapForest& f);

struct EnumerateOptions {
    std::uint64_t node_budget = 1'000'000'000;  // visited search nodes
    int jobs = 1;
    // With jobs > 1, buffer each shard so the stream order matches the
    // single-threaded order. Counts are order-independent either way.
    bool deterministic_stream = true;
};

// Called once per enumerated forest with the label sequence (valid by
// construction, in the deterministic generation order).
using ForestSink = std::function<void(const std::vector<int>&)>;

// Counts (and optionally streams) every k-ary n-shrub labeling whose readout
// avoids all patterns in `patterns` (nullptr means unrestricted), placing
// labels shrub by shrub, root before leaves, candidates in increasing order,
// pruning as soon as a prefix contains a pattern. Throws budget_exceeded if
// the visited-node count passes options.node_budget.
BigCount enumerate_forests(int k, int n, const PatternSet* patterns,
                           const EnumerateOptions& options = {},
                           const ForestSink& sink = nullptr);

}  // namespace shrub

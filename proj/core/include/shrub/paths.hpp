#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "shrub/bigint.hpp"
#include "shrub/errors.hpp"

namespace shrub {

struct Step {
    char token;
    int dx;
    int dy;
    friend bool operator==(const Step&, const Step&) = default;
};

// A named step set. Tokens are distinct single letters; dx >= 0 throughout.
class StepAlphabet {
public:
    explicit StepAlphabet(std::vector<Step> steps);

    const std::vector<Step>& steps() const { return steps_; }
    const Step* find(char token) const;

    // The canonical alphabets used by the bijections:
    // E=(1,0), N=(0,1); optionally X=(1,1); and A=(1,3), B=(2,2), D=(1,-1).
    static StepAlphabet east_north();
    static StepAlphabet east_north_diag();
    static StepAlphabet club();

    friend bool operator==(const StepAlphabet&, const StepAlphabet&) = default;

private:
    std::vector<Step> steps_;
};

// A token sequence over an alphabet. Construction validates membership only;
// bounds are checked separately.
class LatticePath {
public:
    LatticePath(StepAlphabet alphabet, std::string tokens);

    const StepAlphabet& alphabet() const { return alphabet_; }
    const std::string& tokens() const { return tokens_; }
    std::size_t size() const { return tokens_.size(); }

    std::pair<long, long> endpoint() const;

    friend bool operator==(const LatticePath&, const LatticePath&) = default;

private:
    StepAlphabet alphabet_;
    std::string tokens_;
};

enum class Sense {
    below_line,  // q*y <= p*x at every lattice point
    above_axis,  // y >= 0 at every lattice point
};

// A wedge constraint: the line y = (p/q) x together with a sense. The slope
// is stored reduced; below_line checks use exact cross-multiplication.
class WedgeBound {
public:
    WedgeBound(long p, long q, Sense sense);

    long p() const { return p_; }
    long q() const { return q_; }
    Sense sense() const { return sense_; }

private:
    long p_;
    long q_;
    Sense sense_;
};

// True iff the path runs from (0,0) to endpoint with every intermediate
// lattice point (after each whole step) satisfying the bound.
bool check_bound(const LatticePath& path, const WedgeBound& bound,
                 std::pair<long, long> endpoint);

struct PathGenOptions {
    std::uint64_t node_budget = 1'000'000'000;
};

using PathSink = std::function<void(const std::string&)>;

// Streams every bound-respecting path from (0,0) to endpoint exactly once,
// in lexicographic token order, and returns the count.
BigCount generate_paths(const StepAlphabet& alphabet, const WedgeBound& bound,
                        std::pair<long, long> endpoint,
                        const PathGenOptions& options = {},
                        const PathSink& sink = nullptr);

// The affine step map (dx,dy) -> (dx+dy, ell*dx-dy). It carries paths weakly
// below y = ell*x ending on that line to paths weakly above the x-axis ending
// on the axis, bijectively. Output steps keep their canonical token when the
// image is one of the six canonical steps; otherwise fresh lowercase letters
// are assigned in input order.
StepAlphabet bw_transform_alphabet(const StepAlphabet& alphabet, long ell);
LatticePath bw_transform(const LatticePath& path, long ell);

}  // namespace shrub

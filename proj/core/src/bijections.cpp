#include "shrub/bijections.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

#include "shrub/errors.hpp"

namespace shrub {

namespace {

Permutation pattern_of(const char* digits) {
    std::vector<int> v;
    for (const char* c = digits; *c; ++c) v.push_back(*c - '0');
    return Permutation(std::move(v));
}

void require_avoids(const Permutation& pi, const char* digits, const char* role) {
    if (contains(pi, pattern_of(digits))) {
        throw invalid_input(std::string(role) + " must avoid " + digits);
    }
}

// Decodes a path whose steps are all E=(1,0) or N=(0,1); returns the token
// string normalized to 'E'/'N'.
std::string en_tokens(const LatticePath& path) {
    std::string out;
    out.reserve(path.size());
    for (char c : path.tokens()) {
        const Step* s = path.alphabet().find(c);
        if (s->dx == 1 && s->dy == 0) {
            out += 'E';
        } else if (s->dx == 0 && s->dy == 1) {
            out += 'N';
        } else {
            throw invalid_path("path must use unit East and North steps only");
        }
    }
    return out;
}

// Validates an E/N path weakly below y = (p/q) x that ends on the line, with
// `rise` N steps per E step overall; returns the number of E steps.
int validated_en_below(const std::string& tokens, long p, long q) {
    long x = 0;
    long y = 0;
    for (char c : tokens) {
        if (c == 'E') {
            ++x;
        } else {
            ++y;
        }
        if (q * y > p * x) {
            throw invalid_path("path rises above the bounding line");
        }
    }
    if (q * y != p * x) {
        throw invalid_path("path must end on the bounding line");
    }
    return static_cast<int>(x);
}

// The club-step path shape shared by the 213 and 312 maps: tokens normalized
// to A/B/D, checked weakly above the axis and ending on it.
std::string abd_tokens(const LatticePath& path) {
    std::string out;
    out.reserve(path.size());
    long y = 0;
    for (char c : path.tokens()) {
        const Step* s = path.alphabet().find(c);
        if (s->dx == 1 && s->dy == 3) {
            out += 'A';
        } else if (s->dx == 2 && s->dy == 2) {
            out += 'B';
        } else if (s->dx == 1 && s->dy == -1) {
            out += 'D';
        } else {
            throw invalid_path("path must use steps (1,3), (2,2), (1,-1) only");
        }
        y += s->dy;
        if (y < 0) throw invalid_path("path dips below the x-axis");
    }
    if (y != 0) throw invalid_path("path must end on the x-axis");
    return out;
}

}  // namespace

HeightWord HeightWord::of_path(const LatticePath& path) {
    const std::string tokens = en_tokens(path);
    HeightWord w;
    int h = 0;
    for (char c : tokens) {
        if (c == 'N') {
            ++h;
        } else {
            w.heights.push_back(h);
        }
    }
    return w;
}

LatticePath HeightWord::to_path(int total_rise) const {
    std::string tokens;
    int h = 0;
    for (int wi : heights) {
        if (wi < h) throw invalid_input("heights must be weakly increasing");
        tokens.append(static_cast<std::size_t>(wi - h), 'N');
        h = wi;
        tokens += 'E';
    }
    if (total_rise < h) throw invalid_input("total rise below the last height");
    tokens.append(static_cast<std::size_t>(total_rise - h), 'N');
    return LatticePath(StepAlphabet::east_north(), std::move(tokens));
}

std::vector<int> HeightWord::w_prime() const {
    std::vector<int> out(heights.rbegin(), heights.rend());
    for (int& v : out) ++v;
    return out;
}

BlockDecomposition BlockDecomposition::of_path(const std::string& en_tokens) {
    BlockDecomposition d;
    int run = 0;
    for (char c : en_tokens) {
        if (c == 'E') {
            ++run;
        } else if (c == 'N') {
            d.east_runs.push_back(run);
            run = 0;
        } else {
            throw invalid_path("blocks are defined for E/N paths only");
        }
    }
    if (run != 0) {
        throw invalid_path("path must end with a North step to split into blocks");
    }
    return d;
}

std::string BlockDecomposition::reassemble() const {
    std::string out;
    for (int k : east_runs) {
        out.append(static_cast<std::size_t>(k), 'E');
        out += 'N';
    }
    return out;
}

// ---------------------------------------------------------------------------
// 123

ShrubForest bij123_path_to_forest(const LatticePath& path, int k) {
    if (k < 2) throw invalid_input("shrub arity must be at least 2");
    const std::string tokens = en_tokens(path);
    const int n = validated_en_below(tokens, k, 1);
    const int L = (k + 1) * n;
    std::vector<char> is_root(static_cast<std::size_t>(L) + 1, 0);
    std::vector<int> roots;  // East positions, 1-based
    for (int j = 0; j < L; ++j) {
        if (tokens[static_cast<std::size_t>(j)] == 'E') {
            roots.push_back(j + 1);
            is_root[static_cast<std::size_t>(j + 1)] = 1;
        }
    }
    std::vector<int> leaves;  // remaining labels, decreasing
    for (int v = L; v >= 1; --v) {
        if (!is_root[static_cast<std::size_t>(v)]) leaves.push_back(v);
    }
    std::vector<int> labels;
    labels.reserve(static_cast<std::size_t>(L));
    std::size_t li = 0;
    for (int i = 0; i < n; ++i) {
        labels.push_back(roots[static_cast<std::size_t>(n - 1 - i)]);
        for (int j = 0; j < k; ++j) labels.push_back(leaves[li++]);
    }
    return ShrubForest(k, std::move(labels));
}

LatticePath bij123_forest_to_path(const ShrubForest& f) {
    require_avoids(pi_of_forest(f), "123", "forest readout");
    const int k = f.arity();
    const int n = f.shrubs();
    const int L = (k + 1) * n;
    std::vector<char> is_root(static_cast<std::size_t>(L) + 1, 0);
    for (int i = 0; i < n; ++i) is_root[static_cast<std::size_t>(f.root(i))] = 1;
    std::string tokens;
    tokens.reserve(static_cast<std::size_t>(L));
    for (int j = 1; j <= L; ++j) {
        tokens += is_root[static_cast<std::size_t>(j)] ? 'E' : 'N';
    }
    validated_en_below(tokens, k, 1);
    return LatticePath(StepAlphabet::east_north(), std::move(tokens));
}

// ---------------------------------------------------------------------------
// 132

namespace {

// Replays the filling rule: every vertex that was not pre-labeled must carry
// the smallest label above the most recent root that was still unused when it
// was filled. Throws if the forest does not have that shape.
void check_132_fill(const ShrubForest& f, const std::vector<char>& prelabeled) {
    const int k = f.arity();
    const int L = (k + 1) * f.shrubs();
    std::vector<char> used(static_cast<std::size_t>(L) + 1, 0);
    for (int i = 0; i < f.shrubs(); ++i) {
        if (prelabeled[static_cast<std::size_t>(i)]) {
            used[static_cast<std::size_t>(f.root(i))] = 1;
        }
    }
    int current_root = 0;
    for (int pos = 0; pos < L; ++pos) {
        const int v = f.labels()[static_cast<std::size_t>(pos)];
        const bool is_root = pos % (k + 1) == 0;
        if (is_root && prelabeled[static_cast<std::size_t>(pos / (k + 1))]) {
            current_root = v;
            continue;
        }
        int expect = current_root + 1;
        while (expect <= L && used[static_cast<std::size_t>(expect)]) ++expect;
        if (v != expect) {
            throw std::logic_error("filled label " + std::to_string(v) +
                                   " is not the smallest unused above root " +
                                   std::to_string(current_root));
        }
        used[static_cast<std::size_t>(v)] = 1;
        if (is_root) current_root = v;
    }
}

}  // namespace

ShrubForest bij132_path_to_forest(const LatticePath& path, int k) {
    if (k < 2) throw invalid_input("shrub arity must be at least 2");
    const std::string tokens = en_tokens(path);
    const int n = validated_en_below(tokens, k + 1, 1);
    const int L = (k + 1) * n;
    HeightWord w;
    {
        int h = 0;
        for (char c : tokens) {
            if (c == 'N') {
                ++h;
            } else {
                w.heights.push_back(h);
            }
        }
    }
    const std::vector<int> wp = w.w_prime();
    std::vector<int> labels(static_cast<std::size_t>(L), 0);
    std::vector<char> prelabeled(static_cast<std::size_t>(n), 0);
    std::vector<char> used(static_cast<std::size_t>(L) + 1, 0);
    for (int i = 0; i < n; ++i) {
        if (i == 0 || wp[static_cast<std::size_t>(i)] != wp[static_cast<std::size_t>(i - 1)]) {
            labels[static_cast<std::size_t>(i * (k + 1))] = wp[static_cast<std::size_t>(i)];
            prelabeled[static_cast<std::size_t>(i)] = 1;
            used[static_cast<std::size_t>(wp[static_cast<std::size_t>(i)])] = 1;
        }
    }
    int current_root = 0;
    for (int pos = 0; pos < L; ++pos) {
        if (labels[static_cast<std::size_t>(pos)] != 0) {
            current_root = labels[static_cast<std::size_t>(pos)];
            continue;
        }
        int v = current_root + 1;
        while (v <= L && used[static_cast<std::size_t>(v)]) ++v;
        if (v > L) {
            throw std::logic_error("ran out of labels above root " +
                                   std::to_string(current_root));
        }
        labels[static_cast<std::size_t>(pos)] = v;
        used[static_cast<std::size_t>(v)] = 1;
        if (pos % (k + 1) == 0) current_root = v;
    }
    ShrubForest f(k, std::move(labels));
    check_132_fill(f, prelabeled);
    return f;
}

LatticePath bij132_forest_to_path(const ShrubForest& f) {
    require_avoids(pi_of_forest(f), "132", "forest readout");
    const int k = f.arity();
    const int n = f.shrubs();
    if (n == 0) return LatticePath(StepAlphabet::east_north(), "");
    std::vector<int> y(static_cast<std::size_t>(n), 0);
    y[0] = f.root(0);
    for (int i = 1; i < n; ++i) {
        // The only possible descent between roots i-1 and i sits at the
        // boundary: last leaf of shrub i-1 against root i.
        const bool descent = f.leaf(i - 1, k - 1) > f.root(i);
        y[static_cast<std::size_t>(i)] = descent ? f.root(i) : y[static_cast<std::size_t>(i - 1)];
    }
    HeightWord w;
    w.heights.assign(y.rbegin(), y.rend());
    for (int& h : w.heights) --h;
    LatticePath path = w.to_path((k + 1) * n);
    validated_en_below(path.tokens(), k + 1, 1);
    return path;
}

// ---------------------------------------------------------------------------
// 213, recursive up-segment labeling

namespace {

struct Slot {
    bool is_segment;  // false: the midpoint of a (2,2) step
    int height;       // starting height of the unit up-segment
};

std::vector<Slot> slots_of(const std::string& abd) {
    std::vector<Slot> slots;
    int y = 0;
    for (char c : abd) {
        if (c == 'A') {
            slots.push_back({true, y});
            slots.push_back({true, y + 1});
            slots.push_back({true, y + 2});
            y += 3;
        } else if (c == 'B') {
            slots.push_back({true, y});
            slots.push_back({false, 0});
            slots.push_back({true, y + 1});
            y += 2;
        } else {
            --y;
        }
    }
    return slots;
}

void label_slots(const std::vector<Slot>& slots, std::vector<int>& labels,
                 std::size_t lo, std::size_t hi, int base) {
    if (lo >= hi) return;
    int min_height = -1;
    std::size_t chosen = hi;
    for (std::size_t i = lo; i < hi; ++i) {
        if (!slots[i].is_segment) continue;
        if (min_height < 0 || slots[i].height < min_height) {
            min_height = slots[i].height;
            chosen = i;
        } else if (slots[i].height == min_height) {
            chosen = i;  // rightmost among the lowest
        }
    }
    if (chosen == hi) {
        // A segment-free range is a lone midpoint holding one label.
        if (hi - lo != 1) {
            throw std::logic_error("midpoint run of length " +
                                   std::to_string(hi - lo));
        }
        labels[lo] = base;
        return;
    }
    labels[chosen] = base;
    const std::size_t right = hi - 1 - chosen;  // slots to the right
    label_slots(slots, labels, chosen + 1, hi, base + 1);
    label_slots(slots, labels, lo, chosen, base + 1 + static_cast<int>(right));
}

}  // namespace

Permutation bij213_path_to_perm(const LatticePath& path) {
    const std::string abd = abd_tokens(path);
    const std::vector<Slot> slots = slots_of(abd);
    std::vector<int> labels(slots.size(), 0);
    label_slots(slots, labels, 0, slots.size(), 1);
    return Permutation(std::move(labels));
}

LatticePath bij213_perm_to_path(const Permutation& pi) {
    forest_of_pi(pi, 2);  // must be a binary shrub word
    require_avoids(pi, "213", "shrub word");
    const int n = pi.size() / 3;
    std::vector<char> marked(static_cast<std::size_t>(pi.size()), 0);
    for (int i = 0; i < n; ++i) {
        if (pi[3 * i + 1] > pi[3 * i + 2]) {
            marked[static_cast<std::size_t>(3 * i + 1)] = 1;
        }
    }
    std::string tokens;
    long y = 0;
    for (int i = 0; i < n; ++i) {
        const int root = pi[3 * i];
        int drops = 0;
        for (int j = 0; j < 3 * i; ++j) {
            if (!marked[static_cast<std::size_t>(j)] && pi[j] > root) {
                ++drops;
                marked[static_cast<std::size_t>(j)] = 1;
            }
        }
        tokens.append(static_cast<std::size_t>(drops), 'D');
        y -= drops;
        if (y < 0) throw std::logic_error("descended below the axis");
        const bool decreasing = pi[3 * i + 1] > pi[3 * i + 2];
        tokens += decreasing ? 'B' : 'A';
        y += decreasing ? 2 : 3;
    }
    tokens.append(static_cast<std::size_t>(y), 'D');
    return LatticePath(StepAlphabet::club(), std::move(tokens));
}

// ---------------------------------------------------------------------------
// The appending constructions (213 alternate route, and 312)

namespace {

struct Upstep {
    char type;       // 'A' or 'B'
    int drops_after;  // D-run length following this upstep
};

std::vector<Upstep> upsteps_of(const std::string& abd) {
    std::vector<Upstep> out;
    for (char c : abd) {
        if (c == 'A' || c == 'B') {
            out.push_back({c, 0});
        } else if (!out.empty()) {
            ++out.back().drops_after;
        } else {
            throw invalid_path("path may not start with a descent");
        }
    }
    return out;
}

// Values that sit above some later smaller value.
std::set<int> inversion_tops(const std::vector<int>& word) {
    std::set<int> tops;
    int suffix_min = 0;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (suffix_min != 0 && *it > suffix_min) tops.insert(*it);
        if (suffix_min == 0 || *it < suffix_min) suffix_min = *it;
    }
    return tops;
}

}  // namespace

Permutation bij213_path_to_perm_appending(const LatticePath& path) {
    const std::string abd = abd_tokens(path);
    const std::vector<Upstep> ups = upsteps_of(abd);
    std::vector<int> word;
    for (std::size_t t = 0; t < ups.size(); ++t) {
        if (t == 0) {
            word = ups[0].type == 'A' ? std::vector<int>{1, 2, 3}
                                      : std::vector<int>{1, 3, 2};
            continue;
        }
        // ell is the top label of the last appended shrub; the new root sits
        // d labels below it, one further down after a decreasing-leaf shrub.
        const int ell = std::max(word[word.size() - 1], word[word.size() - 2]);
        const bool last_increasing = word[word.size() - 2] < word[word.size() - 1];
        const int d = ups[t - 1].drops_after;
        const int i = last_increasing ? ell - d : ell - d - 1;
        if (i < 0 || i > static_cast<int>(word.size())) {
            throw invalid_path("descent run too long for the current forest");
        }
        for (int& v : word) {
            if (v > i) v += 3;
        }
        if (ups[t].type == 'A') {
            word.insert(word.end(), {i + 1, i + 2, i + 3});
        } else {
            word.insert(word.end(), {i + 1, i + 3, i + 2});
        }
    }
    return Permutation(std::move(word));
}

Permutation bij312_path_to_perm(const LatticePath& path) {
    const std::string abd = abd_tokens(path);
    const std::vector<Upstep> ups = upsteps_of(abd);
    std::vector<int> word;
    for (std::size_t t = 0; t < ups.size(); ++t) {
        if (t == 0) {
            word = ups[0].type == 'A' ? std::vector<int>{1, 2, 3}
                                      : std::vector<int>{1, 3, 2};
            continue;
        }
        const int top = 3 * static_cast<int>(t);
        // Possible roots: values in 1..top+1 that do not top an inversion of
        // the current word. The (d+1)st highest of them becomes the new root.
        const std::set<int> tops = inversion_tops(word);
        std::vector<int> possible;
        for (int i = top + 1; i >= 1; --i) {
            if (!tops.count(i)) possible.push_back(i);
        }
        const int d = ups[t - 1].drops_after;
        if (d >= static_cast<int>(possible.size())) {
            throw invalid_path("descent run too long for the current forest");
        }
        const int root = possible[static_cast<std::size_t>(d)];
        for (int& v : word) {
            if (v >= root) ++v;
        }
        word.push_back(root);
        if (ups[t].type == 'A') {
            word.insert(word.end(), {top + 2, top + 3});
        } else {
            word.insert(word.end(), {top + 3, top + 2});
        }
    }
    return Permutation(std::move(word));
}

LatticePath bij312_perm_to_path(const Permutation& pi) {
    forest_of_pi(pi, 2);
    require_avoids(pi, "312", "shrub word");
    const int n = pi.size() / 3;
    if (n == 0) return LatticePath(StepAlphabet::club(), "");
    std::vector<int> word = pi.values();
    std::vector<Upstep> parts(static_cast<std::size_t>(n), Upstep{'A', 0});
    for (int t = n - 1; t >= 1; --t) {
        const int top = 3 * t;
        const int l1 = word[static_cast<std::size_t>(3 * t + 1)];
        const int l2 = word[static_cast<std::size_t>(3 * t + 2)];
        if (std::max(l1, l2) != top + 3 || std::min(l1, l2) != top + 2) {
            throw invalid_input("last shrub's leaves are not the two top labels");
        }
        const char type = l1 < l2 ? 'A' : 'B';
        const int root = word[static_cast<std::size_t>(3 * t)];
        word.resize(static_cast<std::size_t>(3 * t));
        for (int& v : word) {
            if (v > root) --v;
        }
        const std::set<int> tops = inversion_tops(word);
        int rank = -1;
        int seen = 0;
        for (int i = top + 1; i >= 1; --i) {
            if (tops.count(i)) continue;
            if (i == root) {
                rank = seen;
                break;
            }
            ++seen;
        }
        if (rank < 0) {
            throw invalid_input("root " + std::to_string(root) +
                                " is not a possible root at its step");
        }
        parts[static_cast<std::size_t>(t)] = {type, rank};
    }
    parts[0].type = word[1] < word[2] ? 'A' : 'B';
    std::string tokens;
    long y = 0;
    for (int t = 0; t < n; ++t) {
        if (t > 0) {
            tokens.append(static_cast<std::size_t>(parts[static_cast<std::size_t>(t)].drops_after), 'D');
            y -= parts[static_cast<std::size_t>(t)].drops_after;
        }
        tokens += parts[static_cast<std::size_t>(t)].type;
        y += parts[static_cast<std::size_t>(t)].type == 'A' ? 3 : 2;
    }
    if (y < 0) throw std::logic_error("descended below the axis");
    tokens.append(static_cast<std::size_t>(y), 'D');
    return LatticePath(StepAlphabet::club(), std::move(tokens));
}

// ---------------------------------------------------------------------------
// 231, the block-by-block map phi

namespace {

// Bars sit immediately before each left-to-right maximum except the first;
// stored as the 0-based positions of the barred elements.
std::set<std::size_t> derive_bars(const std::vector<int>& a) {
    std::set<std::size_t> bars;
    int best = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > best) {
            best = a[i];
            if (i > 0) bars.insert(i);
        }
    }
    return bars;
}

struct Barred {
    std::vector<int> a;
    std::set<std::size_t> bars;

    void check() const {
        if (bars != derive_bars(a)) {
            throw std::logic_error("maintained bars diverge from the "
                                   "left-to-right maxima");
        }
    }

    // a := 1 | (a)^{1+}
    void prepend_one() {
        for (int& v : a) ++v;
        a.insert(a.begin(), 1);
        std::set<std::size_t> shifted;
        for (std::size_t p : bars) shifted.insert(p + 1);
        if (a.size() > 1) shifted.insert(1);
        bars = std::move(shifted);
    }

    // Merge the first k blocks, prepend m = max(A_k) + 1.
    void merge_prepend(int k) {
        std::vector<std::size_t> boundaries(bars.begin(), bars.end());
        const int block_count = static_cast<int>(boundaries.size()) + 1;
        if (k > block_count) {
            throw std::logic_error("block exponent exceeds the block count");
        }
        const std::size_t end =
            k == block_count ? a.size() : boundaries[static_cast<std::size_t>(k - 1)];
        int m = 0;
        for (std::size_t i = 0; i < end; ++i) m = std::max(m, a[i]);
        ++m;
        for (int& v : a) {
            if (v >= m) ++v;
        }
        a.insert(a.begin(), m);
        std::set<std::size_t> next;
        for (std::size_t p : bars) {
            if (p >= end) next.insert(p + 1);
        }
        bars = std::move(next);
    }
};

}  // namespace

Permutation bij231_path_to_perm(const LatticePath& path) {
    const std::string tokens = en_tokens(path);
    const int east = validated_en_below(tokens, 2, 3);
    if (east % 3 != 0) {
        throw invalid_path("path must have three East steps per shrub");
    }
    const int n = east / 3;
    if (n == 0) return Permutation();
    const BlockDecomposition blocks = BlockDecomposition::of_path(tokens);
    const auto& runs = blocks.east_runs;
    if (static_cast<int>(runs.size()) != 2 * n) {
        throw invalid_path("expected " + std::to_string(2 * n) + " blocks");
    }
    Barred state;
    state.a = {1};
    int processed = 0;
    int east_seen = 0;
    for (int i = 2 * n; i >= 2; --i) {
        const int k = runs[static_cast<std::size_t>(i - 1)];
        if (k == 0) {
            state.prepend_one();
        } else {
            state.merge_prepend(k);
        }
        if (i % 2 == 0) state.prepend_one();
        state.check();
        ++processed;
        east_seen += k;
        // Well-definedness bookkeeping: the bar count after j processed
        // blocks is j - (E steps seen) + floor((j+1)/2).
        const int expected =
            processed - east_seen + (processed + 1) / 2;
        if (static_cast<int>(state.bars.size()) != expected) {
            throw std::logic_error("bar count " +
                                   std::to_string(state.bars.size()) +
                                   " off the invariant " +
                                   std::to_string(expected));
        }
    }
    return Permutation(std::move(state.a));
}

LatticePath bij231_perm_to_path(const Permutation& pi) {
    forest_of_pi(pi, 2);
    require_avoids(pi, "231", "shrub word");
    const int n = pi.size() / 3;
    if (n == 0) return LatticePath(StepAlphabet::east_north(), "");
    const auto& a = pi.values();
    std::string tokens;
    for (int i = 3 * n - 1; i >= 2; --i) {
        if (i % 3 == 1) continue;
        const int left = a[static_cast<std::size_t>(i - 1)];
        const int right = a[static_cast<std::size_t>(i)];
        if (left < right) {
            tokens.insert(tokens.begin(), 'N');
        } else {
            int count = 0;
            int best = 0;
            for (std::size_t j = static_cast<std::size_t>(i); j < a.size(); ++j) {
                if (a[j] > best) {
                    best = a[j];
                    if (a[j] < left) ++count;
                }
            }
            tokens.insert(tokens.begin(), 'N');
            tokens.insert(tokens.begin(), static_cast<std::size_t>(count), 'E');
        }
    }
    const int east = static_cast<int>(
        std::count(tokens.begin(), tokens.end(), 'E'));
    std::string prefix(static_cast<std::size_t>(3 * n - east), 'E');
    prefix += 'N';
    tokens.insert(0, prefix);
    validated_en_below(tokens, 2, 3);
    return LatticePath(StepAlphabet::east_north(), std::move(tokens));
}

}  // namespace shrub

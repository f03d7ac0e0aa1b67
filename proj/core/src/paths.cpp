#include "shrub/paths.hpp"

#include <algorithm>
#include <numeric>

namespace shrub {

StepAlphabet::StepAlphabet(std::vector<Step> steps) : steps_(std::move(steps)) {
    if (steps_.empty()) throw invalid_input("step alphabet must be nonempty");
    for (const auto& s : steps_) {
        if (s.dx < 0) {
            throw invalid_input(std::string("step '") + s.token +
                                "' has negative x displacement");
        }
    }
    for (std::size_t i = 0; i < steps_.size(); ++i) {
        for (std::size_t j = i + 1; j < steps_.size(); ++j) {
            if (steps_[i].token == steps_[j].token) {
                throw invalid_input(std::string("duplicate step token '") +
                                    steps_[i].token + "'");
            }
        }
    }
}

const Step* StepAlphabet::find(char token) const {
    for (const auto& s : steps_) {
        if (s.token == token) return &s;
    }
    return nullptr;
}

StepAlphabet StepAlphabet::east_north() {
    return StepAlphabet({{'E', 1, 0}, {'N', 0, 1}});
}

StepAlphabet StepAlphabet::east_north_diag() {
    return StepAlphabet({{'E', 1, 0}, {'N', 0, 1}, {'X', 1, 1}});
}

StepAlphabet StepAlphabet::club() {
    return StepAlphabet({{'A', 1, 3}, {'B', 2, 2}, {'D', 1, -1}});
}

LatticePath::LatticePath(StepAlphabet alphabet, std::string tokens)
    : alphabet_(std::move(alphabet)), tokens_(std::move(tokens)) {
    for (char c : tokens_) {
        if (!alphabet_.find(c)) {
            throw invalid_path(std::string("token '") + c +
                               "' is not in the step alphabet");
        }
    }
}

std::pair<long, long> LatticePath::endpoint() const {
    long x = 0;
    long y = 0;
    for (char c : tokens_) {
        const Step* s = alphabet_.find(c);
        x += s->dx;
        y += s->dy;
    }
    return {x, y};
}

WedgeBound::WedgeBound(long p, long q, Sense sense) : p_(p), q_(q), sense_(sense) {
    if (p_ < 1 || q_ < 1) throw invalid_input("wedge slope must be positive");
    const long g = std::gcd(p_, q_);
    p_ /= g;
    q_ /= g;
}

namespace {

bool point_ok(const WedgeBound& bound, long x, long y) {
    if (bound.sense() == Sense::below_line) {
        return bound.q() * y <= bound.p() * x;
    }
    return y >= 0;
}

}  // namespace

bool check_bound(const LatticePath& path, const WedgeBound& bound,
                 std::pair<long, long> endpoint) {
    long x = 0;
    long y = 0;
    if (!point_ok(bound, x, y)) return false;
    for (char c : path.tokens()) {
        const Step* s = path.alphabet().find(c);
        x += s->dx;
        y += s->dy;
        if (!point_ok(bound, x, y)) return false;
    }
    return x == endpoint.first && y == endpoint.second;
}

namespace {

struct PathGen {
    std::vector<Step> order;  // token-sorted
    const WedgeBound& bound;
    long ex;
    long ey;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    const PathSink* sink;
    std::string tokens;
    BigCount count = 0;

    void run(long x, long y) {
        if (++nodes > budget) {
            throw budget_exceeded("path generation budget of " +
                                  std::to_string(budget) + " exceeded");
        }
        if (x == ex && y == ey) {
            ++count;
            if (sink && *sink) (*sink)(tokens);
            // Fall through: zero-displacement extensions are impossible
            // (dx >= 0 and any dx == 0 step moves y), so stopping here is
            // only an optimization when the endpoint is on the boundary.
        }
        for (const auto& s : order) {
            const long nx = x + s.dx;
            const long ny = y + s.dy;
            if (nx > ex) continue;
            if (!point_ok(bound, nx, ny)) continue;
            if (nx == ex) {
                // Only y movement remains; a below-line bound caps y by the
                // line, an above-axis bound by nothing, so prune paths that
                // already overshot the target height with no x room left.
                if (ny > ey && !can_descend()) continue;
                if (ny < ey && !can_ascend()) continue;
            }
            tokens.push_back(s.token);
            run(nx, ny);
            tokens.pop_back();
        }
    }

    bool can_descend() const {
        return std::any_of(order.begin(), order.end(),
                           [](const Step& s) { return s.dx == 0 && s.dy < 0; });
    }

    bool can_ascend() const {
        return std::any_of(order.begin(), order.end(),
                           [](const Step& s) { return s.dx == 0 && s.dy > 0; });
    }
};

}  // namespace

BigCount generate_paths(const StepAlphabet& alphabet, const WedgeBound& bound,
                        std::pair<long, long> endpoint,
                        const PathGenOptions& options, const PathSink& sink) {
    if (endpoint.first < 0) throw invalid_input("endpoint x must be nonnegative");
    std::vector<Step> order = alphabet.steps();
    std::sort(order.begin(), order.end(),
              [](const Step& a, const Step& b) { return a.token < b.token; });
    PathGen gen{std::move(order), bound, endpoint.first, endpoint.second,
                options.node_budget, 0, &sink};
    if (point_ok(bound, 0, 0)) gen.run(0, 0);
    return gen.count;
}

namespace {

char canonical_token(int dx, int dy) {
    if (dx == 1 && dy == 0) return 'E';
    if (dx == 0 && dy == 1) return 'N';
    if (dx == 1 && dy == 1) return 'X';
    if (dx == 1 && dy == 3) return 'A';
    if (dx == 2 && dy == 2) return 'B';
    if (dx == 1 && dy == -1) return 'D';
    return '\0';
}

}  // namespace

StepAlphabet bw_transform_alphabet(const StepAlphabet& alphabet, long ell) {
    if (ell < 1) throw invalid_input("the transform slope must be a positive integer");
    std::vector<Step> out;
    out.reserve(alphabet.steps().size());
    std::string taken;
    for (const auto& s : alphabet.steps()) {
        const int dx = s.dx + s.dy;
        const int dy = static_cast<int>(ell) * s.dx - s.dy;
        if (dx < 0) {
            throw invalid_input(std::string("step '") + s.token +
                                "' maps to a negative x displacement");
        }
        char tok = canonical_token(dx, dy);
        if (tok == '\0' || taken.find(tok) != std::string::npos) {
            tok = 'a';
            while (taken.find(tok) != std::string::npos) ++tok;
        }
        taken.push_back(tok);
        out.push_back({tok, dx, dy});
    }
    return StepAlphabet(std::move(out));
}

LatticePath bw_transform(const LatticePath& path, long ell) {
    StepAlphabet target = bw_transform_alphabet(path.alphabet(), ell);
    std::string tokens;
    tokens.reserve(path.tokens().size());
    const auto& src = path.alphabet().steps();
    const auto& dst = target.steps();
    for (char c : path.tokens()) {
        for (std::size_t i = 0; i < src.size(); ++i) {
            if (src[i].token == c) {
                tokens.push_back(dst[i].token);
                break;
            }
        }
    }
    return LatticePath(std::move(target), std::move(tokens));
}

}  // namespace shrub

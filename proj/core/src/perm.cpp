#include "shrub/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace shrub {

namespace {

void validate_permutation(const std::vector<int>& values) {
    const int n = static_cast<int>(values.size());
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v : values) {
        if (v < 1 || v > n) {
            throw invalid_input("value " + std::to_string(v) +
                                " out of range for a permutation of length " +
                                std::to_string(n));
        }
        if (seen[static_cast<std::size_t>(v)]++) {
            throw invalid_input("duplicate value " + std::to_string(v) +
                                " in permutation");
        }
    }
}

}  // namespace

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
    validate_permutation(values_);
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

bool Permutation::is_increasing() const {
    return std::is_sorted(values_.begin(), values_.end());
}

Permutation reduce(const std::vector<int>& window) {
    std::vector<int> order(window);
    std::sort(order.begin(), order.end());
    if (std::adjacent_find(order.begin(), order.end()) != order.end()) {
        throw invalid_input("window entries must be distinct");
    }
    std::vector<int> out;
    out.reserve(window.size());
    for (int v : window) {
        auto it = std::lower_bound(order.begin(), order.end(), v);
        out.push_back(static_cast<int>(it - order.begin()) + 1);
    }
    return Permutation(std::move(out));
}

namespace {

// Depth-first choice of host positions, keeping the chosen values
// order-isomorphic to the pattern prefix.
bool contains_from(const std::vector<int>& pi, const std::vector<int>& rho,
                   std::vector<int>& chosen, std::size_t start) {
    const std::size_t m = rho.size();
    const std::size_t t = chosen.size();
    if (t == m) return true;
    for (std::size_t i = start; i + (m - t) <= pi.size(); ++i) {
        bool ok = true;
        for (std::size_t s = 0; s < t; ++s) {
            if ((chosen[s] < pi[i]) != (rho[s] < rho[t])) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        chosen.push_back(pi[i]);
        if (contains_from(pi, rho, chosen, i + 1)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

bool contains(const Permutation& pi, const Permutation& rho) {
    if (rho.size() > pi.size()) return false;
    if (rho.empty()) return true;
    std::vector<int> chosen;
    chosen.reserve(static_cast<std::size_t>(rho.size()));
    return contains_from(pi.values(), rho.values(), chosen, 0);
}

PatternSet::PatternSet(std::vector<Permutation> patterns)
    : patterns_(std::move(patterns)) {
    if (patterns_.empty()) {
        throw invalid_input("pattern set must be nonempty");
    }
    for (const auto& p : patterns_) {
        if (p.empty()) throw invalid_input("patterns must be nonempty");
    }
    auto sorted = patterns_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw invalid_input("duplicate pattern in pattern set");
    }
}

bool avoids_all(const Permutation& pi, const PatternSet& set) {
    for (const auto& rho : set.patterns()) {
        if (contains(pi, rho)) return false;
    }
    return true;
}

int lif_of_values(const std::vector<int>& values) {
    const int n = static_cast<int>(values.size());
    if (n == 0) return 0;
    int prefix_max = 0;
    int rightmost_non_max = 0;  // 0 = none seen
    for (int v : values) {
        if (v > prefix_max) {
            prefix_max = v;
        } else {
            rightmost_non_max = v;
        }
    }
    if (rightmost_non_max == 0) return n;  // increasing
    return n - rightmost_non_max;
}

int lif(const Permutation& pi) { return lif_of_values(pi.values()); }

namespace {

Permutation parse_spaces(const std::string& text) {
    std::istringstream in(text);
    std::vector<int> values;
    std::string tok;
    while (in >> tok) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw invalid_input("bad permutation token '" + tok + "'");
        }
        if (used != tok.size()) {
            throw invalid_input("bad permutation token '" + tok + "'");
        }
        values.push_back(v);
    }
    return Permutation(std::move(values));
}

Permutation parse_compact(const std::string& text) {
    std::vector<int> values;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            values.push_back(c - '0');
            ++i;
        } else if (c == '(') {
            std::size_t j = text.find(')', i);
            if (j == std::string::npos) {
                throw invalid_input("unclosed '(' in permutation text");
            }
            const std::string digits = text.substr(i + 1, j - i - 1);
            if (digits.empty() ||
                !std::all_of(digits.begin(), digits.end(), [](unsigned char d) {
                    return std::isdigit(d);
                })) {
                throw invalid_input("bad parenthesized value '(" + digits + ")'");
            }
            values.push_back(std::stoi(digits));
            i = j + 1;
        } else {
            throw invalid_input(std::string("unexpected character '") + c +
                                "' in permutation text");
        }
    }
    return Permutation(std::move(values));
}

}  // namespace

Permutation parse_perm(const std::string& text) {
    const bool has_space = std::any_of(text.begin(), text.end(), [](unsigned char c) {
        return std::isspace(c);
    });
    if (has_space) return parse_spaces(text);
    return parse_compact(text);
}

std::string format_perm_spaces(const Permutation& pi) {
    std::string out;
    for (int i = 0; i < pi.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(pi[i]);
    }
    return out;
}

std::string format_perm_compact(const Permutation& pi) {
    std::string out;
    for (int i = 0; i < pi.size(); ++i) {
        const int v = pi[i];
        if (v >= 10) {
            out += '(';
            out += std::to_string(v);
            out += ')';
        } else {
            out += static_cast<char>('0' + v);
        }
    }
    return out;
}

}  // namespace shrub

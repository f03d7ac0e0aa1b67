#include "shrub/av321.hpp"

#include <algorithm>
#include <future>
#include <sstream>
#include <stdexcept>

#include "shrub/errors.hpp"

namespace shrub {

namespace detail {
const char* embedded_min_poly_table();
}

LifStateVector LifStateVector::seed() {
    LifStateVector v;
    v.n = 0;
    v.counts = {BigCount(1)};
    return v;
}

BigCount LifStateVector::total() const {
    BigCount t = 0;
    for (const BigCount& c : counts) t += c;
    return t;
}

std::vector<BigCount> op_A(const std::vector<BigCount>& v) {
    // out[j] = sum_{k >= j} v[k] for j >= 1; u^0 maps to the empty sum.
    std::vector<BigCount> out(v.size());
    BigCount s = 0;
    for (std::size_t j = v.size(); j-- > 1;) {
        s += v[j];
        out[j] = s;
    }
    return out;
}

std::vector<BigCount> op_B(const std::vector<BigCount>& v) {
    // out[j] = sum_{k >= j-1} v[k] for j >= 1.
    std::vector<BigCount> out(v.size() + 1);
    BigCount s = 0;
    for (std::size_t j = v.size(); j-- > 0;) {
        s += v[j];
        out[j + 1] = s;
    }
    return out;
}

std::vector<BigCount> op_C(const std::vector<BigCount>& v) {
    std::vector<BigCount> out(v.size() + 1);
    std::copy(v.begin(), v.end(), out.begin() + 1);
    return out;
}

std::vector<BigCount> op_D(const std::vector<BigCount>& v) {
    std::vector<BigCount> out(v.size() + 1);
    BigCount total = 0;
    for (const BigCount& c : v) total += c;
    out[1] = v[0] + total;
    for (std::size_t j = 2; j < out.size(); ++j) out[j] = v[j - 1];
    return out;
}

LifStateVector combined_step(const LifStateVector& v) {
    std::vector<BigCount> bba = op_B(op_B(op_A(v.counts)));
    std::vector<BigCount> out = op_D(op_C(op_C(v.counts)));
    for (std::size_t j = 0; j < bba.size(); ++j) out[j] += bba[j];
    return {v.n + 1, std::move(out)};
}

std::vector<BigCount> combined_step_row(int k) {
    if (k < 0) throw invalid_input("negative exponent");
    // Image of u^k: binomial(k+2, 2) copies of u^1, one fewer of u^2, then
    // triangle-number coefficients down the tail, plus the lone u^(k+3).
    std::vector<BigCount> row(static_cast<std::size_t>(k) + 4);
    const BigCount base = BigCount(k) * (k + 3) / 2;
    row[1] = base + 1;
    row[2] = base;
    for (int c = 3; c <= k + 2; ++c) {
        const BigCount t = k + 3 - c;
        row[static_cast<std::size_t>(c)] = t * (t + 1) / 2;
    }
    row[static_cast<std::size_t>(k) + 3] += 1;
    return row;
}

LifStateVector combined_step_tabular(const LifStateVector& v) {
    std::vector<BigCount> out(v.counts.size() + 3);
    for (std::size_t k = 0; k < v.counts.size(); ++k) {
        if (v.counts[k] == 0) continue;
        const std::vector<BigCount> row = combined_step_row(static_cast<int>(k));
        for (std::size_t j = 0; j < row.size(); ++j) {
            out[j] += v.counts[k] * row[j];
        }
    }
    return {v.n + 1, std::move(out)};
}

std::vector<BigCount> series(int N) {
    if (N < 0) throw invalid_input("series length must be nonnegative");
    std::vector<BigCount> out;
    if (N == 0) return out;
    LifStateVector state = LifStateVector::seed();
    out.push_back(state.total());
    for (int n = 1; n < N; ++n) {
        state = combined_step(state);
        out.push_back(state.total());
    }
    return out;
}

std::uint64_t MinimalPolynomial::checksum() const {
    std::string canon;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        for (std::size_t e = 0; e < coeffs[j].size(); ++e) {
            if (coeffs[j][e] == 0) continue;
            canon += "h=" + std::to_string(2 * j) + ",x=" + std::to_string(e) +
                     ",c=" + std::to_string(coeffs[j][e]) + ";";
        }
    }
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char b : canon) {
        h ^= b;
        h *= 0x100000001b3ull;
    }
    return h;
}

MinimalPolynomial parse_minimal_polynomial(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    std::uint64_t declared = 0;
    bool have_checksum = false;
    MinimalPolynomial poly;
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string head;
        ls >> head;
        if (head == "checksum") {
            std::string hex;
            if (!(ls >> hex) || hex.size() != 16 ||
                hex.find_first_not_of("0123456789abcdef") != std::string::npos) {
                throw parse_error(lineno, "bad checksum line");
            }
            declared = std::stoull(hex, nullptr, 16);
            have_checksum = true;
            continue;
        }
        if (head != "H") throw parse_error(lineno, "expected an H row");
        int power = -1;
        std::string colon;
        if (!(ls >> power >> colon) || colon != ":" || power < 0 ||
            power % 2 != 0 || power / 2 >= static_cast<int>(poly.coeffs.size())) {
            throw parse_error(lineno, "bad H row header");
        }
        if (static_cast<std::size_t>(power / 2) != rows) {
            throw parse_error(lineno, "H rows out of order");
        }
        std::vector<long long> cs;
        long long c = 0;
        while (ls >> c) cs.push_back(c);
        if (!ls.eof()) throw parse_error(lineno, "bad coefficient");
        if (cs.empty()) throw parse_error(lineno, "empty H row");
        poly.coeffs[rows++] = std::move(cs);
    }
    if (!have_checksum) throw parse_error(1, "missing checksum line");
    if (rows != poly.coeffs.size()) {
        throw parse_error(lineno, "expected " + std::to_string(poly.coeffs.size()) +
                                      " H rows, found " + std::to_string(rows));
    }
    if (poly.checksum() != declared) {
        throw parse_error(1, "checksum mismatch: table reads back as another "
                             "polynomial");
    }
    return poly;
}

const std::string& minimal_polynomial_text() {
    static const std::string text = detail::embedded_min_poly_table();
    return text;
}

const MinimalPolynomial& minimal_polynomial() {
    static const MinimalPolynomial poly =
        parse_minimal_polynomial(minimal_polynomial_text());
    return poly;
}

namespace {

// c := a * b mod x^(order+1)
std::vector<BigCount> mul_trunc(const std::vector<BigCount>& a,
                                const std::vector<BigCount>& b, int order) {
    std::vector<BigCount> out(static_cast<std::size_t>(order) + 1);
    for (std::size_t i = 0; i < a.size() && i <= static_cast<std::size_t>(order); ++i) {
        if (a[i] == 0) continue;
        const std::size_t jmax =
            std::min(b.size(), static_cast<std::size_t>(order) + 1 - i);
        for (std::size_t j = 0; j < jmax; ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

std::vector<BigCount> row_to_big(const std::vector<long long>& row) {
    return std::vector<BigCount>(row.begin(), row.end());
}

}  // namespace

MinPolyCheck verify_min_poly(const std::vector<BigCount>& series_terms, int order,
                             const MinimalPolynomial& poly, int jobs) {
    if (order < 0) throw invalid_input("order must be nonnegative");
    if (series_terms.size() < static_cast<std::size_t>(order) + 1) {
        throw invalid_input("need " + std::to_string(order + 1) +
                            " series terms, have " +
                            std::to_string(series_terms.size()));
    }
    std::vector<BigCount> h(series_terms.begin(),
                            series_terms.begin() + order + 1);
    const std::vector<BigCount> h2 = mul_trunc(h, h, order);
    // powers[j] = H^(2j) mod x^(order+1)
    std::vector<std::vector<BigCount>> powers(poly.coeffs.size());
    powers[0] = {BigCount(1)};
    for (std::size_t j = 1; j < powers.size(); ++j) {
        powers[j] = mul_trunc(powers[j - 1], h2, order);
    }
    auto product = [&](std::size_t j) {
        return mul_trunc(row_to_big(poly.coeffs[j]), powers[j], order);
    };
    std::vector<std::vector<BigCount>> terms(poly.coeffs.size());
    if (jobs <= 1) {
        for (std::size_t j = 0; j < terms.size(); ++j) terms[j] = product(j);
    } else {
        std::vector<std::future<std::vector<BigCount>>> futs;
        for (std::size_t j = 0; j < terms.size(); ++j) {
            futs.push_back(std::async(std::launch::async, product, j));
        }
        for (std::size_t j = 0; j < terms.size(); ++j) terms[j] = futs[j].get();
    }
    std::vector<BigCount> acc(static_cast<std::size_t>(order) + 1);
    for (const auto& t : terms) {
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += t[i];
    }
    for (std::size_t i = 0; i < acc.size(); ++i) {
        if (acc[i] != 0) return {false, static_cast<int>(i)};
    }
    return {true, -1};
}

MinPolyCheck verify_min_poly(const std::vector<BigCount>& series_terms, int order) {
    return verify_min_poly(series_terms, order, minimal_polynomial(), 1);
}

std::array<long long, 5> growth_quartic() {
    return {621, -25758, -15505, -28674, 729};
}

namespace {

using RatPoly = std::vector<BigRational>;  // ascending coefficients

BigRational eval(const RatPoly& p, const BigRational& x) {
    BigRational acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) {
        acc = acc * x + p[i];
    }
    return acc;
}

RatPoly derivative(const RatPoly& p) {
    RatPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * BigRational(i));
    return d;
}

void trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of a by b, b nonzero.
RatPoly poly_rem(RatPoly a, const RatPoly& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        const BigRational q = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[shift + i] -= q * b[i];
        }
        a.pop_back();
        trim(a);
    }
    return a;
}

int sign_of(const BigRational& v) {
    if (v > 0) return 1;
    if (v < 0) return -1;
    return 0;
}

// Number of distinct real roots in (lo, hi] by Sturm's theorem.
int sturm_count(const RatPoly& p, const BigRational& lo, const BigRational& hi) {
    std::vector<RatPoly> chain = {p, derivative(p)};
    while (true) {
        RatPoly r = poly_rem(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        for (BigRational& c : r) c = -c;
        chain.push_back(std::move(r));
    }
    auto variations = [&](const BigRational& x) {
        int count = 0;
        int prev = 0;
        for (const RatPoly& q : chain) {
            const int s = sign_of(eval(q, x));
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++count;
            prev = s;
        }
        return count;
    };
    return variations(lo) - variations(hi);
}

}  // namespace

GrowthRate growth_rate(int digits) {
    if (digits < 0) throw invalid_input("digits must be nonnegative");
    const std::array<long long, 5> q = growth_quartic();
    RatPoly p(q.begin(), q.end());
    // Cauchy-style bound: every real root lies in [-41, 41].
    int bracket_lo = 0;
    bool found = false;
    for (int x = 41; x-- > -41;) {
        const int s0 = sign_of(eval(p, BigRational(x)));
        const int s1 = sign_of(eval(p, BigRational(x + 1)));
        if (s0 == 0) throw std::logic_error("integer root in the quartic");
        if (s0 != s1 && s1 != 0) {
            bracket_lo = x;
            found = true;
            break;
        }
    }
    if (!found) throw std::logic_error("no sign change on the grid");
    if (sturm_count(p, BigRational(bracket_lo), BigRational(bracket_lo + 1)) != 1 ||
        sturm_count(p, BigRational(bracket_lo + 1), BigRational(41)) != 0) {
        throw std::logic_error("bracket disagrees with the Sturm count");
    }
    BigRational lo(bracket_lo);
    BigRational hi(bracket_lo + 1);
    const int lo_sign = sign_of(eval(p, lo));
    BigCount scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    auto scaled_floor = [&](const BigRational& v) {
        const BigRational s = v * BigRational(scale);
        BigCount q2 = boost::multiprecision::numerator(s) /
                      boost::multiprecision::denominator(s);
        if (s < 0 && BigRational(q2) != s) --q2;  // floor for negatives
        return q2;
    };
    auto rounded = [&](const BigRational& v) {
        return scaled_floor(v + BigRational(1, 2) / BigRational(scale));
    };
    for (int iter = 0; iter < 400 && rounded(lo) != rounded(hi); ++iter) {
        const BigRational mid = (lo + hi) / 2;
        if (sign_of(eval(p, mid)) == lo_sign) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    if (rounded(lo) != rounded(hi)) {
        throw std::logic_error("bisection failed to stabilize the digits");
    }
    const BigCount scaled = rounded(lo);
    std::string s = scaled.str();
    std::string decimal;
    if (digits == 0) {
        decimal = s;
    } else {
        while (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, "0");
        decimal = s.substr(0, s.size() - digits) + "." +
                  s.substr(s.size() - digits);
    }
    return {std::move(decimal), std::move(lo), std::move(hi)};
}

}  // namespace shrub

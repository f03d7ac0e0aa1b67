#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "shrub/bigint.hpp"

namespace shrub {

// State of the 321 recursion after n shrubs: counts[j] is the number of
// 321-avoiding binary shrub words of length 3n whose lif statistic equals j.
struct LifStateVector {
    int n = 0;
    std::vector<BigCount> counts;  // size 3n+1, indices 0..3n

    static LifStateVector seed();  // n=0: the empty word, lif 0
    BigCount total() const;
};

// The four linear transition operators on coefficient vectors (index =
// exponent of the catalytic variable):
//   A: u^k -> u + u^2 + ... + u^k        (annihilates u^0)
//   B: u^k -> u + u^2 + ... + u^(k+1)
//   C: u^k -> u^(k+1)
//   D: u^k -> u + u^(k+1)
// A preserves the length; B, C, D extend it by one.
std::vector<BigCount> op_A(const std::vector<BigCount>& v);
std::vector<BigCount> op_B(const std::vector<BigCount>& v);
std::vector<BigCount> op_C(const std::vector<BigCount>& v);
std::vector<BigCount> op_D(const std::vector<BigCount>& v);

// One shrub appended: B.B.A + D.C.C, evaluated by prefix-sum passes.
LifStateVector combined_step(const LifStateVector& v);

// The same step through an explicit table: row k is the image of u^k under
// the composition, generated once and cached. Used to cross-check the
// prefix-sum route.
std::vector<BigCount> combined_step_row(int k);
LifStateVector combined_step_tabular(const LifStateVector& v);

// a_0 .. a_{N-1} where a_n counts 321-avoiding binary shrub words on n shrubs.
std::vector<BigCount> series(int N);

// The degree-20 polynomial identity satisfied by the series' generating
// function: sum over j of coeffs[j](x) * H^(2j) == 0, with integer
// coefficient polynomials in x. Data ships in a checked-in table protected by
// a canonical FNV-1a/64 checksum.
struct MinimalPolynomial {
    // coeffs[j][e]: coefficient of x^e attached to H^(2j), j = 0..10.
    std::array<std::vector<long long>, 11> coeffs;

    std::uint64_t checksum() const;  // over the canonical nonzero-entry list
    friend bool operator==(const MinimalPolynomial&, const MinimalPolynomial&) = default;
};

// The embedded table (parsed once, checksum verified).
const MinimalPolynomial& minimal_polynomial();
// The raw embedded text, for re-parsing tests.
const std::string& minimal_polynomial_text();
// Parses the table format and verifies its checksum line; throws parse_error.
MinimalPolynomial parse_minimal_polynomial(const std::string& text);

struct MinPolyCheck {
    bool ok = false;
    // Smallest order with a nonvanishing coefficient; -1 when ok.
    int first_failing_order = -1;
};

// Substitutes the truncated series into the polynomial with exact integer
// arithmetic modulo x^(order+1). Requires at least order+1 series terms.
// jobs > 1 spreads the 11 coefficient products over that many threads.
MinPolyCheck verify_min_poly(const std::vector<BigCount>& series_terms, int order,
                             const MinimalPolynomial& poly, int jobs = 1);
MinPolyCheck verify_min_poly(const std::vector<BigCount>& series_terms, int order);

// 729x^4 - 28674x^3 - 15505x^2 - 25758x + 621, ascending coefficients.
std::array<long long, 5> growth_quartic();

struct GrowthRate {
    std::string decimal;  // greatest real root, rounded to the asked digits
    BigRational lo;       // exact bracketing interval
    BigRational hi;
};

// Isolates the real roots of the quartic by exact sign evaluation on an
// integer grid (cross-checked against a Sturm-sequence root count), then
// bisects the greatest one until `digits` decimal places are stable.
GrowthRate growth_rate(int digits);

}  // namespace shrub

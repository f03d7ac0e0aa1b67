#pragma once

#include "shrub/bigint.hpp"

namespace shrub {

// Exact binomial coefficient by the multiplicative row method; every
// intermediate division is checked to be exact.
BigCount binomial(long n, long k);

BigCount factorial(long n);

// binom((ell+1)m, m) / (ell*m + 1): paths weakly below y = ell*x from (0,0)
// to (m, ell*m), and the count of 123-avoiding ell-ary shrub forests.
BigCount fuss_count(long ell, long m);

// (1/(ell*m+1)) * sum_v binom(ell*m+1, m-v) * binom(ell*m+v, v): E/N/NE paths
// weakly below y = ell*x to (m, ell*m). The sum is divided once at the end,
// remainder checked.
BigCount schroder_count(long ell, long m);

// sum_i binom(5n+1, n-i) * binom(5n+2i, i) / (5n+i+1): E/N paths weakly below
// y = (2/3)x from (0,0) to (3n, 2n). Each summand's division is exact and
// checked.
BigCount duchon_count(long n);

// ((k+1)n)! / (k+1)^n: all k-ary shrub forests on n shrubs, no avoidance.
BigCount unrestricted_forest_count(int k, long n);

}  // namespace shrub

#include "shrub/formulas.hpp"

#include <stdexcept>
#include <string>

#include "shrub/errors.hpp"

namespace shrub {

namespace {

BigCount exact_div(BigCount numerator, const BigCount& divisor, const char* what) {
    BigCount q;
    BigCount r;
    boost::multiprecision::divide_qr(numerator, divisor, q, r);
    if (r != 0) {
        throw std::logic_error(std::string(what) + ": division by " +
                               divisor.str() + " leaves remainder " + r.str());
    }
    return q;
}

}  // namespace

BigCount binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigCount r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r = exact_div(std::move(r), i, "binomial row step");
    }
    return r;
}

BigCount factorial(long n) {
    if (n < 0) throw invalid_input("factorial of a negative number");
    BigCount r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

BigCount fuss_count(long ell, long m) {
    if (ell < 1) throw invalid_input("slope must be positive");
    if (m < 0) throw invalid_input("index must be nonnegative");
    return exact_div(binomial((ell + 1) * m, m), ell * m + 1, "fuss count");
}

BigCount schroder_count(long ell, long m) {
    if (ell < 1) throw invalid_input("slope must be positive");
    if (m < 0) throw invalid_input("index must be nonnegative");
    BigCount sum = 0;
    for (long v = 0; v <= m; ++v) {
        sum += binomial(ell * m + 1, m - v) * binomial(ell * m + v, v);
    }
    return exact_div(std::move(sum), ell * m + 1, "grouped sum");
}

BigCount duchon_count(long n) {
    if (n < 0) throw invalid_input("index must be nonnegative");
    BigCount sum = 0;
    for (long i = 0; i <= n; ++i) {
        BigCount term = binomial(5 * n + 1, n - i) * binomial(5 * n + 2 * i, i);
        sum += exact_div(std::move(term), 5 * n + i + 1, "summand");
    }
    return sum;
}

BigCount unrestricted_forest_count(int k, long n) {
    if (k < 2) throw invalid_input("shrub arity must be at least 2");
    if (n < 0) throw invalid_input("shrub count must be nonnegative");
    BigCount denom = 1;
    for (long i = 0; i < n; ++i) denom *= k + 1;
    return exact_div(factorial((k + 1) * n), denom, "arity quotient");
}

}  // namespace shrub

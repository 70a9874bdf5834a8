#include "tanpick/series_core.h"

#include "tanpick/errors.h"

#include <cmath>
#include <string>

namespace tanpick {

void TruncationSpec::validate() const {
    if (num_terms < 1) {
        throw DomainError("TruncationSpec: num_terms must be >= 1, got " + std::to_string(num_terms));
    }
}

SeriesValue tanh_series(double s, const TruncationSpec& trunc) {
    trunc.validate();
    if (!std::isfinite(s)) throw DomainError("tanh_series: argument must be finite");
    constexpr double half_pi = std::numbers::pi / 2.0;
    const double s2 = s * s;
    const auto term = [&](double k) {
        const double pole = (2.0 * k - 1.0) * half_pi;
        return 1.0 / (pole * pole + s2);
    };

    // Smallest terms first.
    double sum = 0.0;
    for (std::int64_t k = trunc.num_terms; k >= 1; --k) sum += term(static_cast<double>(k));
    if (trunc.tail_correction) sum += euler_maclaurin_tail(term, trunc.num_terms);

    const double n = static_cast<double>(trunc.num_terms);
    return {2.0 * s * sum, 2.0 * std::abs(s) / (std::numbers::pi * std::numbers::pi * n)};
}

double bessel_i_series(int k, double z) {
    if (k < 0) throw DomainError("bessel_i_series: order must be >= 0, got " + std::to_string(k));
    const double half = 0.5 * z;
    // Leading term (z/2)^k / k!.
    double term = 1.0;
    for (int i = 1; i <= k; ++i) term *= half / i;
    if (term == 0.0) return 0.0;

    const double quarter_sq = half * half;
    double sum = term;
    for (int j = 0; j < 10'000; ++j) {
        term *= quarter_sq / ((j + 1.0) * (k + j + 1.0));
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
        sum += term;
    }
    return sum;
}

double odd_double_factorial(int k) {
    if (k < 1 || k > kMaxDoubleFactorialOrder) {
        throw DomainError("odd_double_factorial: order must be in [1, 20], got " + std::to_string(k));
    }
    double result = 1.0;
    for (int i = 3; i <= 2 * k - 1; i += 2) result *= i;
    return result;
}

double bessel_i_quadrature(int k) {
    if (k < 1 || k > kMaxDoubleFactorialOrder) {
        throw DomainError("bessel_i_quadrature: order must be in [1, 20], got " + std::to_string(k));
    }
    const double exponent = k - 0.5;
    const auto integrand = [exponent](double x) {
        return std::pow((1.0 - x) * (1.0 + x), exponent) * std::exp(-2.0 * x);
    };
    const auto integral = quad::integrate_adaptive(integrand, -1.0, 1.0, 1e-12, 0.0, 4000);
    if (!integral.converged) {
        throw Error("bessel_i_quadrature: adaptive quadrature did not reach 1e-12 for k=" +
                    std::to_string(k));
    }
    return std::ldexp(1.0, k) / (odd_double_factorial(k) * std::numbers::pi) * integral.value;
}

double bessel_sum_identity_residual(int max_order) {
    if (max_order < 1) {
        throw DomainError("bessel_sum_identity_residual: K must be >= 1, got " +
                          std::to_string(max_order));
    }
    // Smallest terms first so that extending K only ever adds to an already
    // converged head.
    double tail = 0.0;
    for (int k = max_order; k >= 1; --k) tail += bessel_i_series(k, 2.0);
    return std::abs(bessel_i_series(0, 2.0) + 2.0 * tail - std::exp(2.0));
}

} // namespace tanpick

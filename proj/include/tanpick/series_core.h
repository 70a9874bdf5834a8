#pragma once

#include "tanpick/quadrature.h"

#include <cstdint>
#include <numbers>

namespace tanpick {

// How an infinite sum over k = 1, 2, ... is cut off.
struct TruncationSpec {
    std::int64_t num_terms = 10'000;
    // Add the Euler-Maclaurin estimate of the neglected tail.
    bool tail_correction = true;

    // Throws DomainError when num_terms < 1.
    void validate() const;
};

struct SeriesValue {
    double value = 0.0;
    // Rigorous bound on |partial sum - limit| for the uncorrected partial sum.
    double tail_bound = 0.0;
};

// Euler-Maclaurin estimate of \sum_{k=n+1}^\infty f(k) for a smooth, eventually
// monotone f decaying at least like 1/k^2:
//
//   \int_{n+1}^\infty f(x) dx + f(n+1)/2 - f'(n+1)/12.
//
// The integral is taken on u in (0, 1] after x = (n+1)/u, which maps a 1/x^2
// tail to a bounded integrand. f may return double or std::complex<double>.
template <class F>
auto euler_maclaurin_tail(F&& f, std::int64_t n) {
    const double x0 = static_cast<double>(n) + 1.0;
    const auto mapped = [&](double u) { return f(x0 / u) * (x0 / (u * u)); };
    const auto integral = quad::integrate_adaptive(mapped, 0.0, 1.0, 1e-300, 1e-12, 400).value;
    const double h = std::min(0.5, 1e-3 * x0);
    const auto derivative = (f(x0 + h) - f(x0 - h)) / (2.0 * h);
    return integral + f(x0) * 0.5 - derivative * (1.0 / 12.0);
}

// 2 s \sum_{k=1}^{N} 1 / (((2k-1) pi / 2)^2 + s^2), the partial-fraction
// series of tanh(s). tail_bound = 2|s| / (pi^2 N).
SeriesValue tanh_series(double s, const TruncationSpec& trunc);

// Modified Bessel function of the first kind of integer order k >= 0,
// summed from its power series until the next term is below 1e-18 of the
// running sum. Throws DomainError for k < 0.
double bessel_i_series(int k, double z);

// (2k-1)!! in floating point, 1 <= k <= kMaxDoubleFactorialOrder.
inline constexpr int kMaxDoubleFactorialOrder = 20;
double odd_double_factorial(int k);

// I_k(2) from its integral representation
//   2^k / ((2k-1)!! pi) \int_{-1}^{1} (1-x^2)^{k-1/2} e^{-2x} dx,
// integrated adaptively to 1e-12 absolute. Valid for 1 <= k <= 20.
double bessel_i_quadrature(int k);

// |I_0(2) + 2 \sum_{k=1}^{K} I_k(2) - e^2|.
double bessel_sum_identity_residual(int max_order);

} // namespace tanpick

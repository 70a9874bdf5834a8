#include "tanpick/quadrature.h"

#include "tanpick/errors.h"

#include <Eigen/Eigenvalues>

#include <array>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <string>

namespace tanpick::quad {

namespace {

// L_{n-1}(x), L_n(x), L_{n+1}(x) by the three-term recurrence, in long double
// so that large nodes do not overflow.
std::array<long double, 3> laguerre_values(int n, long double x) {
    long double prev = 1.0L;
    long double cur = 1.0L - x;
    if (n == 0) return {0.0L, prev, cur};
    for (int k = 1; k <= n; ++k) {
        const long double next = ((2.0L * k + 1.0L - x) * cur - k * prev) / (k + 1.0L);
        prev = cur;
        cur = next;
    }
    // Now prev = L_n, cur = L_{n+1}; recover L_{n-1} from the recurrence.
    const long double below = ((2.0L * n + 1.0L - x) * prev - (n + 1.0L) * cur) / n;
    return {below, prev, cur};
}

// Golub-Welsch: the Jacobi matrix of the Laguerre polynomials has diagonal
// 2i+1 and off-diagonal i, and its eigenvalues are the nodes. Each node is
// then polished by Newton steps on L_n and its weight taken from
// x / ((n+1) L_{n+1}(x))^2, which keeps the tiny weights of the large nodes
// accurate to relative precision (eigenvector components do not).
GaussRule build_gauss_laguerre(int n) {
    Eigen::VectorXd diag(n);
    Eigen::VectorXd sub(n > 1 ? n - 1 : 0);
    for (int i = 0; i < n; ++i) diag(i) = 2.0 * i + 1.0;
    for (int i = 1; i < n; ++i) sub(i - 1) = static_cast<double>(i);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw Error("gauss_laguerre_rule: eigen-decomposition failed for n=" + std::to_string(n));
    }

    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        long double x = solver.eigenvalues()(i);
        for (int step = 0; step < 3; ++step) {
            const auto [below, value, above] = laguerre_values(n, x);
            const long double derivative = n * (value - below) / x;
            x -= value / derivative;
        }
        const long double above = laguerre_values(n, x)[2];
        rule.nodes[i] = static_cast<double>(x);
        rule.weights[i] = static_cast<double>(x / ((n + 1.0L) * (n + 1.0L) * above * above));
    }
    return rule;
}

} // namespace

const GaussRule& gauss_laguerre_rule(int n) {
    if (n < 1) throw DomainError("gauss_laguerre_rule: n must be positive");
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<GaussRule>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<GaussRule>(build_gauss_laguerre(n));
    return *slot;
}

void QuadratureSpec::validate() const {
    if (node_count < 16) throw DomainError("QuadratureSpec: node_count must be >= 16");
    if (!(upper_cutoff > 0.0) || !std::isfinite(upper_cutoff)) {
        throw DomainError("QuadratureSpec: upper_cutoff must be positive and finite");
    }
    if (!(abs_tol > 0.0) || !std::isfinite(abs_tol)) {
        throw DomainError("QuadratureSpec: abs_tol must be positive and finite");
    }
}

LaplaceResult laplace_numeric(const std::function<double(double)>& f, double w,
                              const QuadratureSpec& spec) {
    spec.validate();
    if (!(w > 0.0) || !std::isfinite(w)) {
        throw DomainError("laplace_numeric: transform variable must be positive, got " +
                          std::to_string(w));
    }
    const auto weighted = [&](double x) { return f(x) * std::exp(-w * x); };

    // Envelope of |f e^{-wx}| on the last two unit windows before the cutoff;
    // their ratio gives the local decay rate used for the tail estimate. The
    // Gauss-Laguerre scheme has no cutoff of its own: probe at its last node.
    const bool laguerre = spec.scheme == QuadratureScheme::exp_weighted;
    const double cutoff =
        laguerre ? gauss_laguerre_rule(spec.node_count).nodes.back() / w : spec.upper_cutoff;
    const auto envelope = [&](double lo, double hi) {
        double peak = 0.0;
        for (int j = 0; j <= 16; ++j) {
            const double x = lo + (hi - lo) * j / 16.0;
            if (x < 0.0) continue;
            const double v = std::abs(weighted(x));
            if (!std::isfinite(v)) return v;
            peak = std::max(peak, v);
        }
        return peak;
    };
    const double outer = envelope(cutoff - 1.0, cutoff);
    const double inner = envelope(cutoff - 2.0, cutoff - 1.0);
    double tail = 0.0;
    if (!std::isfinite(outer)) {
        tail = outer;
    } else if (outer > 0.0) {
        const double rate = (inner > outer) ? std::log(inner / outer) : 0.0;
        tail = rate > 0.0 ? outer / rate : std::numeric_limits<double>::infinity();
    }
    if (!(tail <= spec.abs_tol)) {
        throw Divergent("laplace_numeric: integrand has not decayed at cutoff " +
                        std::to_string(cutoff) + " for w=" + std::to_string(w));
    }

    LaplaceResult result;
    result.tail_bound = tail;
    if (laguerre) {
        const GaussRule& rule = gauss_laguerre_rule(spec.node_count);
        double sum = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            sum += rule.weights[i] * f(rule.nodes[i] / w);
        }
        result.value = sum / w;
    } else {
        result.value = integrate_adaptive(weighted, 0.0, cutoff, spec.abs_tol).value;
    }
    return result;
}

} // namespace tanpick::quad

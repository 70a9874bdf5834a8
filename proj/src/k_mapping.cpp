#include "tanpick/k_mapping.h"

#include "tanpick/errors.h"
#include "tanpick/pick_transform.h"

#include <cmath>
#include <string>

namespace tanpick {

namespace {

LevyTriple pure_jump(const DiscreteMeasure& levy_measure) { return {0.0, 0.0, levy_measure}; }

// log phi_mu(s) for mu = [0, 0, M]; real because M is symmetric.
auto jump_exponent(const LevyTriple& triple) {
    return [&triple](double s) { return levy_exponent(triple, s).real(); };
}

} // namespace

double k_exponent(double t, const DiscreteMeasure& levy_measure, const QuadratureSpec& quad) {
    if (!std::isfinite(t)) throw DomainError("k_exponent: t must be finite");
    if (t == 0.0) return 0.0;
    const LevyTriple triple = pure_jump(levy_measure);
    const auto psi = jump_exponent(triple);
    return laplace_numeric([&](double s) { return psi(s * t); }, 1.0, quad).value;
}

double k_exponent(double t, const TruncationSpec& trunc, const QuadratureSpec& quad) {
    return k_exponent(t, build_M(trunc), quad);
}

Complex eq6_lhs(double t, const DiscreteMeasure& levy_measure, const QuadratureSpec& quad) {
    if (!(t > 0.0)) {
        throw DomainError("eq6_lhs: the Laplace variable must be positive, got t=" + std::to_string(t));
    }
    const LevyTriple triple = pure_jump(levy_measure);
    const double transform = laplace_numeric(jump_exponent(triple), t, quad).value;
    return {0.0, t * t * transform};
}

Complex eq6_lhs(double t, const TruncationSpec& trunc, const QuadratureSpec& quad) {
    return eq6_lhs(t, build_M(trunc), quad);
}

QuadratureSpec eq6_default_quadrature(double t) {
    QuadratureSpec quad;
    quad.scheme = QuadratureScheme::adaptive;
    quad.upper_cutoff = t > 0.0 ? std::max(50.0, 40.0 / t) : 50.0;
    quad.abs_tol = 1e-10;
    return quad;
}

Complex eq6_middle(double t, const DiscreteMeasure& levy_measure, const QuadratureSpec& quad) {
    if (t == 0.0 || !std::isfinite(t)) throw DomainError("eq6_middle: t must be finite and nonzero");
    return {0.0, t * k_exponent(-1.0 / t, levy_measure, quad)};
}

Complex eq6_rhs(double t) { return tan_reciprocal_oracle(Complex(0.0, t)); }

QuadratureSpec eq7_default_quadrature(double w) {
    QuadratureSpec quad;
    quad.scheme = QuadratureScheme::adaptive;
    quad.upper_cutoff = w > 1.0 ? std::max(50.0, 30.0 / (w - 1.0)) : 50.0;
    quad.abs_tol = 1e-12;
    return quad;
}

double eq7_lhs(double w, const DiscreteMeasure& m, const QuadratureSpec& quad) {
    if (!(w > 1.0) || !std::isfinite(w)) {
        throw DomainError("eq7_lhs: the transform exists only for w > 1, got w=" + std::to_string(w));
    }
    const double tanh1 = std::tanh(1.0);
    const double mass = m.total_mass();
    // phi_m(x) - tanh(1) cosh(x)
    //   = \sum mass (cos(c x) - cosh x) - (tanh(1) - m(R)) cosh x
    // with cos a - cosh b = -2 (sin^2(a/2) + sinh^2(b/2)), so no two large
    // terms of opposite sign are ever subtracted.
    const auto integrand = [&](double x) {
        const double sh = std::sinh(0.5 * x);
        const double oscillating = m.integrate([x](double c) {
            const double s = std::sin(0.5 * c * x);
            return s * s;
        });
        return -2.0 * (oscillating + mass * sh * sh) - (tanh1 - mass) * std::cosh(x);
    };
    return (w * w - 1.0) * laplace_numeric(integrand, w, quad).value;
}

double eq7_lhs(double w, const TruncationSpec& trunc, const QuadratureSpec& quad) {
    return eq7_lhs(w, build_m(trunc), quad);
}

double eq7_rhs(double w) { return -std::tanh(1.0 / w); }

} // namespace tanpick

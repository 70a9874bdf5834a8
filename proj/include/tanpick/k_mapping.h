#pragma once

#include "tanpick/levy_khintchine.h"
#include "tanpick/quadrature.h"

namespace tanpick {

using quad::LaplaceResult;
using quad::QuadratureScheme;
using quad::QuadratureSpec;

// Laplace transform \int_0^\infty f(x) e^{-wx} dx.
using quad::laplace_numeric;

// Exponent of K(mu) for mu = [0, 0, M]:
//   log phi_{K(mu)}(t) = \int_0^\infty log phi_mu(s t) e^{-s} ds,
// which sums to -t tanh(t).
double k_exponent(double t, const DiscreteMeasure& levy_measure, const QuadratureSpec& quad);
double k_exponent(double t, const TruncationSpec& trunc, const QuadratureSpec& quad);

// i t^2 L[log conj(phi_mu)(s); t] for t > 0. Throws DomainError otherwise.
Complex eq6_lhs(double t, const DiscreteMeasure& levy_measure, const QuadratureSpec& quad);
Complex eq6_lhs(double t, const TruncationSpec& trunc, const QuadratureSpec& quad);

// Adaptive quadrature for the Laplace side of the chain at t, so that it does
// not share nodes with the Gauss-Laguerre k_exponent: cutoff max(50, 40 / t).
QuadratureSpec eq6_default_quadrature(double t);

// i t log phi_{K(mu)}(-1/t), the middle member of the chain. t != 0.
Complex eq6_middle(double t, const DiscreteMeasure& levy_measure, const QuadratureSpec& quad);

// tan(1/(it)) = -i tanh(1/t).
Complex eq6_rhs(double t);

// Quadrature used for the cosh-compensated Laplace transform at w: adaptive,
// cutoff max(50, 30 / (w - 1)).
QuadratureSpec eq7_default_quadrature(double w);

// (w^2 - 1) L[phi_m(x) - tanh(1) cosh(x); w] for w > 1. The integrand pairs
// every cosine with its share of the cosh term. Throws DomainError for w <= 1.
double eq7_lhs(double w, const DiscreteMeasure& m, const QuadratureSpec& quad);
double eq7_lhs(double w, const TruncationSpec& trunc, const QuadratureSpec& quad);

// -tanh(1/w).
double eq7_rhs(double w);

} // namespace tanpick

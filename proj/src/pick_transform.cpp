#include "tanpick/pick_transform.h"

#include "tanpick/errors.h"
#include "tanpick/format.h"

#include <cmath>
#include <numbers>

namespace tanpick {

namespace {

std::string describe(Complex z) {
    return "(" + format_double(z.real()) + ", " + format_double(z.imag()) + ")";
}

} // namespace

Complex pick_kernel(Complex z, double x) { return (1.0 + z * x) / (z - x); }

Complex pick_eval(const DiscreteMeasure& m, Complex z) {
    if (z == Complex(0.0, 0.0)) throw ZeroArgument("pick_eval: z = 0");
    if (m.distance_to_atoms(z.real(), z.imag()) < kPoleExclusionRadius) {
        throw PoleProximity("pick_eval: z = " + describe(z) + " is within the exclusion radius of an atom");
    }
    if (m.tail_corrected() && std::abs(z.imag()) < kPoleExclusionRadius &&
        std::abs(z.real()) < m.first_omitted_location() + kPoleExclusionRadius) {
        throw PoleProximity("pick_eval: z = " + describe(z) + " lies among the omitted atoms");
    }
    return m.integrate([z](double x) { return pick_kernel(z, x); });
}

Complex tan_reciprocal_oracle(Complex z) {
    if (z == Complex(0.0, 0.0)) throw ZeroArgument("tan_reciprocal_oracle: z = 0");
    const Complex w = 1.0 / z;
    const double pole = std::numbers::pi * (std::round(w.real() / std::numbers::pi - 0.5) + 0.5);
    if (std::abs(w - Complex(pole, 0.0)) < kTanPoleRadius) {
        throw PoleProximity("tan_reciprocal_oracle: 1/z is a pole of tan for z = " + describe(z));
    }
    // tan(x + iy) = (sin 2x + i sinh 2y) / (cos 2x + cosh 2y); for large |y|
    // divide through by cosh 2y before it overflows.
    const double x2 = 2.0 * w.real();
    const double y2 = 2.0 * w.imag();
    if (std::abs(y2) < 40.0) {
        const Complex sine = std::sin(w);
        const Complex cosine = std::cos(w);
        return sine / cosine;
    }
    const double decay = std::exp(-std::abs(y2));
    const double denom = 1.0 + 2.0 * std::cos(x2) * decay + decay * decay;
    const double re = 2.0 * std::sin(x2) * decay / denom;
    const double im = std::copysign((1.0 - decay * decay) / denom, y2);
    return {re, im};
}

bool upper_half_plane_check(const DiscreteMeasure& m, Complex z) {
    if (!(z.imag() > 0.0)) {
        throw DomainError("upper_half_plane_check: z = " + describe(z) + " is not in the upper half-plane");
    }
    return pick_eval(m, z).imag() < 0.0;
}

} // namespace tanpick

#include "tanpick/levy_khintchine.h"

#include "tanpick/errors.h"

#include <cmath>
#include <numbers>

namespace tanpick {

namespace {

// cos(y) - 1 without cancellation for small y.
double cos_minus_one(double y) {
    const double s = std::sin(0.5 * y);
    return -2.0 * s * s;
}

void check_triple(const LevyTriple& triple) {
    if (!(triple.gaussian_var >= 0.0)) throw DomainError("LevyTriple: gaussian_var must be >= 0");
    if (!std::isfinite(triple.shift)) throw DomainError("LevyTriple: shift must be finite");
    for (const Atom& atom : triple.levy_measure.atoms()) {
        if (atom.location == 0.0) throw DomainError("LevyTriple: Levy measure has an atom at 0");
    }
}

Complex drift_and_gaussian(const LevyTriple& triple, double t) {
    return {-0.5 * triple.gaussian_var * t * t, triple.shift * t};
}

} // namespace

Complex char_fn_finite(const DiscreteMeasure& m, double t) {
    if (m.symmetric()) return {m.integrate([t](double x) { return std::cos(t * x); }), 0.0};
    return char_fn_generic(m, t);
}

Complex char_fn_generic(const DiscreteMeasure& m, double t) {
    return m.integrate([t](double x) { return Complex(std::cos(t * x), std::sin(t * x)); });
}

Complex compound_poisson_exponent(const DiscreteMeasure& m, double t) {
    if (m.symmetric()) return {m.integrate([t](double x) { return cos_minus_one(t * x); }), 0.0};
    return m.integrate([t](double x) { return Complex(cos_minus_one(t * x), std::sin(t * x)); });
}

Complex levy_exponent(const LevyTriple& triple, double t) {
    check_triple(triple);
    if (!triple.levy_measure.symmetric()) return levy_exponent_generic(triple, t);
    const double jumps = triple.levy_measure.integrate([t](double x) { return cos_minus_one(t * x); });
    return drift_and_gaussian(triple, t) + jumps;
}

Complex levy_exponent_generic(const LevyTriple& triple, double t) {
    check_triple(triple);
    const Complex jumps = triple.levy_measure.integrate([t](double x) {
        return Complex(cos_minus_one(t * x), std::sin(t * x) - t * x / (1.0 + x * x));
    });
    return drift_and_gaussian(triple, t) + jumps;
}

double cosine_sum_tail_bound(double t, std::int64_t num_terms) {
    if (num_terms < 1) throw DomainError("cosine_sum_tail_bound: num_terms must be >= 1");
    return t * t / (std::numbers::pi * std::numbers::pi * static_cast<double>(num_terms));
}

double mu_exponent_resolvent(double t, const TruncationSpec& trunc) {
    const DiscreteMeasure M = build_M(trunc);
    const double t2 = t * t;
    return -t2 * M.integrate([t2](double x) { return x * x / (t2 * x * x + 1.0); });
}

} // namespace tanpick

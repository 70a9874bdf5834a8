#pragma once

#include "tanpick/measures.h"

#include <complex>

namespace tanpick {

using Complex = std::complex<double>;

// Levy-Khintchine triplet [a, sigma^2, M].
struct LevyTriple {
    double shift = 0.0;
    double gaussian_var = 0.0;
    DiscreteMeasure levy_measure;
};

// \int e^{itx} m(dx). Symmetric measures take the cosine-only path and return
// an imaginary part of exactly 0.
Complex char_fn_finite(const DiscreteMeasure& m, double t);

// Same integral summed as cos + i sin over every atom, whatever the symmetry
// flag says.
Complex char_fn_generic(const DiscreteMeasure& m, double t);

// \int (e^{itx} - 1) m(dx), the log of the compound Poisson characteristic
// function of m.
Complex compound_poisson_exponent(const DiscreteMeasure& m, double t);

// ita - sigma^2 t^2 / 2 + \int (e^{itx} - 1 - itx / (1 + x^2)) M(dx).
// For symmetric M the compensator cancels pairwise and only
// \int (cos tx - 1) M(dx) is summed. The measure's own truncation decides
// whether the tail estimate is added. Throws DomainError on gaussian_var < 0
// or an atom at 0.
Complex levy_exponent(const LevyTriple& triple, double t);

// Generic path of levy_exponent with the compensator summed explicitly.
Complex levy_exponent_generic(const LevyTriple& triple, double t);

// Bound on \sum_{|k| > N} (1 - cos(t c_k)) <= t^2 / (pi^2 N) for the unit-mass
// family of build_M.
double cosine_sum_tail_bound(double t, std::int64_t num_terms);

// -t^2 \sum_{|k| <= N} c_k^2 / (t^2 c_k^2 + 1), which sums to -t tanh(t).
double mu_exponent_resolvent(double t, const TruncationSpec& trunc);

} // namespace tanpick

#pragma once

#include "tanpick/levy_khintchine.h"

namespace tanpick {

// Radius around atom locations inside which pick_eval refuses to evaluate.
inline constexpr double kPoleExclusionRadius = 1e-6;
// Radius around the poles (2k-1) pi / 2 of tan, measured in the 1/z plane.
inline constexpr double kTanPoleRadius = 1e-8;

// (1 + z x) / (z - x), evaluated directly in complex arithmetic.
Complex pick_kernel(Complex z, double x);

// \int (1 + z x) / (z - x) m(dx) over the atoms of m, plus the tail estimate
// when m is tail-corrected. Throws ZeroArgument for z = 0 and PoleProximity
// when z is within kPoleExclusionRadius of an atom (or of the accumulation
// interval of the omitted atoms).
Complex pick_eval(const DiscreteMeasure& m, Complex z);

// tan(1/z) from complex sine and cosine, independent of any measure. Throws
// ZeroArgument for z = 0 and PoleProximity when 1/z lies within
// kTanPoleRadius of a pole of tan.
Complex tan_reciprocal_oracle(Complex z);

// For Im z > 0: whether pick_eval(m, z) lies in the open lower half-plane,
// i.e. whether -pick_eval is a Pick (Herglotz) function at z. Throws
// DomainError when Im z <= 0.
bool upper_half_plane_check(const DiscreteMeasure& m, Complex z);

} // namespace tanpick

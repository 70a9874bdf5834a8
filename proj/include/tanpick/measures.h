#pragma once

#include "tanpick/series_core.h"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tanpick {

struct Atom {
    double location = 0.0;
    double mass = 0.0;
};

// Continuous-index extension k -> (location(k), mass(k)) of an atom family,
// used to estimate the contribution of the atoms with k > N that a truncated
// measure does not materialize. For symmetric measures each index stands for
// the pair of atoms at +/- location(k).
struct AtomFamily {
    std::function<double(double)> location;
    std::function<double(double)> mass;
};

// Finite list of point masses, stored sorted by location. Immutable after
// construction.
class DiscreteMeasure {
  public:
    DiscreteMeasure() = default;

    // Throws DomainError on a non-finite location, a non-positive mass,
    // repeated locations, or (when symmetric) an atom without an equal-mass
    // mirror image.
    explicit DiscreteMeasure(std::vector<Atom> atoms, bool symmetric = false);

    // A truncation of an infinite symmetric family: atoms for k = +/-1..+/-N
    // plus the family used for tail estimates when trunc.tail_correction.
    DiscreteMeasure(std::vector<Atom> atoms, TruncationSpec trunc, AtomFamily family);

    std::span<const Atom> atoms() const { return atoms_; }
    std::size_t size() const { return atoms_.size(); }
    bool empty() const { return atoms_.empty(); }
    bool symmetric() const { return symmetric_; }
    const std::optional<TruncationSpec>& truncation() const { return truncation_; }
    bool tail_corrected() const { return truncation_ && truncation_->tail_correction && family_; }

    // Same atoms, tail correction switched on or off.
    DiscreteMeasure with_tail_correction(bool enabled) const;

    // \int g dm over the materialized atoms, plus the Euler-Maclaurin tail of
    // the unmaterialized family members when tail_corrected().
    template <class G>
    auto integrate(G&& g) const {
        using T = std::decay_t<decltype(g(0.0))>;
        T sum{};
        for (const Atom& atom : atoms_) sum += atom.mass * g(atom.location);
        if (tail_corrected()) sum += tail(g);
        return sum;
    }

    template <class G>
    auto tail(G&& g) const {
        const auto pair_term = [&](double k) {
            const double x = family_->location(k);
            return family_->mass(k) * (g(x) + g(-x));
        };
        return euler_maclaurin_tail(pair_term, truncation_->num_terms);
    }

    double total_mass() const;

    // Smallest |z - x| over materialized atoms x.
    double distance_to_atoms(double re, double im) const;

    // Innermost atom location the truncation left out, 0 when untruncated.
    double first_omitted_location() const;

  private:
    std::vector<Atom> atoms_;
    bool symmetric_ = false;
    std::optional<TruncationSpec> truncation_;
    std::optional<AtomFamily> family_;
};

// c_k = ((2k-1) pi / 2)^{-1} for k >= 1 and c_k = -c_{-k} for k <= -1; these
// are the reciprocals of the poles of tan. Throws DomainError for k = 0.
double atom_location(std::int64_t k);

// m = \sum_{k != 0} c_k^2 / (1 + c_k^2) delta_{c_k}, truncated to |k| <= N.
// Total mass tends to tanh(1).
DiscreteMeasure build_m(const TruncationSpec& trunc);

// M(dx) = (1 + x^2) / x^2 m(dx): unit atoms at every c_k, |k| <= N.
DiscreteMeasure build_M(const TruncationSpec& trunc);

// \int min(1, x^2) M(dx). Throws DomainError on an atom at 0.
double levy_integrability_check(const DiscreteMeasure& measure);

// CSV with header "location,mass", 17 significant digits, trailing newline.
std::string to_csv(const DiscreteMeasure& measure);
// JSON array of {"location": x, "mass": w}.
std::string to_json(const DiscreteMeasure& measure);

} // namespace tanpick

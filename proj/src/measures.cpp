#include "tanpick/measures.h"

#include "tanpick/errors.h"
#include "tanpick/format.h"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace tanpick {

namespace {

void sort_and_validate(std::vector<Atom>& atoms, bool symmetric) {
    for (const Atom& atom : atoms) {
        if (!std::isfinite(atom.location)) throw DomainError("DiscreteMeasure: non-finite atom location");
        if (!(atom.mass > 0.0) || !std::isfinite(atom.mass)) {
            throw DomainError("DiscreteMeasure: atom masses must be positive and finite");
        }
    }
    std::sort(atoms.begin(), atoms.end(),
              [](const Atom& a, const Atom& b) { return a.location < b.location; });
    for (std::size_t i = 1; i < atoms.size(); ++i) {
        if (atoms[i].location == atoms[i - 1].location) {
            throw DomainError("DiscreteMeasure: repeated atom location " +
                              format_double(atoms[i].location));
        }
    }
    if (symmetric) {
        for (std::size_t i = 0, j = atoms.size(); i < j--; ++i) {
            if (atoms[i].location != -atoms[j].location || atoms[i].mass != atoms[j].mass) {
                throw DomainError("DiscreteMeasure: atoms are not symmetric about 0");
            }
        }
    }
}

// Inverse of the pole (2k-1) pi / 2, for real k >= 1.
double family_location(double k) { return 2.0 / ((2.0 * k - 1.0) * std::numbers::pi); }

std::vector<Atom> tangent_atoms(std::int64_t n, auto&& mass_of) {
    std::vector<Atom> atoms;
    atoms.reserve(2 * static_cast<std::size_t>(n));
    for (std::int64_t k = 1; k <= n; ++k) {
        const double c = atom_location(k);
        atoms.push_back({c, mass_of(c)});
        atoms.push_back({-c, mass_of(c)});
    }
    return atoms;
}

} // namespace

DiscreteMeasure::DiscreteMeasure(std::vector<Atom> atoms, bool symmetric)
    : atoms_(std::move(atoms)), symmetric_(symmetric) {
    sort_and_validate(atoms_, symmetric_);
}

DiscreteMeasure::DiscreteMeasure(std::vector<Atom> atoms, TruncationSpec trunc, AtomFamily family)
    : atoms_(std::move(atoms)), symmetric_(true), truncation_(trunc), family_(std::move(family)) {
    trunc.validate();
    sort_and_validate(atoms_, symmetric_);
}

DiscreteMeasure DiscreteMeasure::with_tail_correction(bool enabled) const {
    DiscreteMeasure copy = *this;
    if (copy.truncation_) copy.truncation_->tail_correction = enabled;
    return copy;
}

double DiscreteMeasure::total_mass() const {
    return integrate([](double) { return 1.0; });
}

double DiscreteMeasure::distance_to_atoms(double re, double im) const {
    if (atoms_.empty()) return std::numeric_limits<double>::infinity();
    const auto it = std::lower_bound(atoms_.begin(), atoms_.end(), re,
                                     [](const Atom& a, double x) { return a.location < x; });
    double best = std::numeric_limits<double>::infinity();
    if (it != atoms_.end()) best = std::hypot(it->location - re, im);
    if (it != atoms_.begin()) best = std::min(best, std::hypot(std::prev(it)->location - re, im));
    return best;
}

double DiscreteMeasure::first_omitted_location() const {
    if (!truncation_ || !family_) return 0.0;
    return family_->location(static_cast<double>(truncation_->num_terms + 1));
}

double atom_location(std::int64_t k) {
    if (k == 0) throw DomainError("atom_location: index 0 has no atom");
    if (k < 0) return -atom_location(-k);
    return family_location(static_cast<double>(k));
}

DiscreteMeasure build_m(const TruncationSpec& trunc) {
    trunc.validate();
    const auto mass = [](double c) { return c * c / (1.0 + c * c); };
    AtomFamily family{family_location, [mass](double k) { return mass(family_location(k)); }};
    return DiscreteMeasure(tangent_atoms(trunc.num_terms, mass), trunc, std::move(family));
}

DiscreteMeasure build_M(const TruncationSpec& trunc) {
    trunc.validate();
    const auto unit = [](double) { return 1.0; };
    AtomFamily family{family_location, unit};
    return DiscreteMeasure(tangent_atoms(trunc.num_terms, unit), trunc, std::move(family));
}

double levy_integrability_check(const DiscreteMeasure& measure) {
    for (const Atom& atom : measure.atoms()) {
        if (atom.location == 0.0) throw DomainError("levy_integrability_check: atom at the origin");
    }
    return measure.integrate([](double x) { return std::min(1.0, x * x); });
}

std::string to_csv(const DiscreteMeasure& measure) {
    std::string out = "location,mass\n";
    for (const Atom& atom : measure.atoms()) {
        out += format_double(atom.location) + ',' + format_double(atom.mass) + '\n';
    }
    return out;
}

std::string to_json(const DiscreteMeasure& measure) {
    nlohmann::json array = nlohmann::json::array();
    for (const Atom& atom : measure.atoms()) {
        array.push_back({{"location", atom.location}, {"mass", atom.mass}});
    }
    return array.dump() + '\n';
}

} // namespace tanpick

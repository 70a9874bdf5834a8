#include "tanpick/sampling.h"

#include "tanpick/errors.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

namespace tanpick {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

RandomSource::RandomSource(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id), engine_(splitmix64(seed ^ splitmix64(stream_id))) {}

int RandomSource::rademacher() {
    if (bits_left_ == 0) {
        bits_ = engine_();
        bits_left_ = 64;
    }
    const int bit = static_cast<int>(bits_ & 1U);
    bits_ >>= 1;
    --bits_left_;
    return bit ? 1 : -1;
}

int RandomSource::poisson(double lambda) {
    if (!(lambda >= 0.0) || !std::isfinite(lambda)) throw DomainError("poisson: lambda must be >= 0");
    if (lambda > 500.0) throw DomainError("poisson: inversion sampler limited to lambda <= 500");
    const double u = uniform();
    int k = 0;
    double p = std::exp(-lambda);
    double cdf = p;
    while (u >= cdf && p > 0.0) {
        ++k;
        p *= lambda / k;
        cdf += p;
    }
    return k;
}

PoissonInverter::PoissonInverter(double lambda) {
    if (!(lambda >= 0.0) || lambda > 500.0) throw DomainError("PoissonInverter: lambda must be in [0, 500]");
    double p = std::exp(-lambda);
    double cdf = p;
    cdf_.push_back(cdf);
    for (int k = 1; p > 0.0 && cdf < 1.0; ++k) {
        p *= lambda / k;
        cdf += p;
        cdf_.push_back(cdf);
    }
    // guide_[b] = smallest k with cdf_[k] > b / size, a safe starting point
    // for every u in bucket b.
    constexpr int buckets = 256;
    guide_.resize(buckets);
    std::size_t k = 0;
    for (int b = 0; b < buckets; ++b) {
        const double lower = static_cast<double>(b) / buckets;
        while (k + 1 < cdf_.size() && lower >= cdf_[k]) ++k;
        guide_[b] = static_cast<int>(k);
    }
}

int PoissonInverter::invert(double u) const {
    std::size_t k = static_cast<std::size_t>(guide_[static_cast<std::size_t>(u * guide_.size())]);
    while (k + 1 < cdf_.size() && u >= cdf_[k]) ++k;
    return static_cast<int>(k);
}

std::vector<int> sample_rademacher(RandomSource& rng, std::size_t count) {
    std::vector<int> out(count);
    for (int& r : out) r = rng.rademacher();
    return out;
}

SignCounts sample_Y_counts(RandomSource& rng) {
    static const PoissonInverter poisson2(2.0);
    // The top 53 bits of one engine word give the uniform for N_2; the low 11
    // bits supply the signs when N_2 <= 11.
    constexpr int spare_bits = 11;
    const std::uint64_t word = rng.next_u64();
    const int steps = poisson2.invert(static_cast<double>(word >> spare_bits) * 0x1.0p-53);
    if (steps == 0) return {};

    SignCounts counts;
    const auto add_signs = [&counts](std::uint64_t bits, int n) {
        if (n < 64) bits &= (std::uint64_t{1} << n) - 1;
        const int ones = std::popcount(bits);
        counts.plus += ones;
        counts.minus += n - ones;
    };
    if (steps <= spare_bits) {
        add_signs(word, steps);
        return counts;
    }
    for (int remaining = steps; remaining > 0; remaining -= 64) {
        add_signs(rng.next_u64(), std::min(remaining, 64));
    }
    return counts;
}

int sample_Y(RandomSource& rng) { return sample_Y_counts(rng).sum(); }

int sample_skellam_direct(RandomSource& rng, double lambda1, double lambda2) {
    const int first = rng.poisson(lambda1);
    return first - rng.poisson(lambda2);
}

double skellam_pmf(int k) { return std::exp(-2.0) * bessel_i_series(std::abs(k), 2.0); }

double sample_X(RandomSource& rng, const TruncationSpec& trunc) {
    trunc.validate();
    double x = 0.0;
    for (std::int64_t n = 1; n <= trunc.num_terms; ++n) {
        const int y = sample_Y(rng);
        if (y != 0) x += atom_location(n) * y;
    }
    return x;
}

std::vector<double> sample_X(RandomSource& rng, const TruncationSpec& trunc, std::size_t count) {
    trunc.validate();
    std::vector<double> weights(static_cast<std::size_t>(trunc.num_terms));
    for (std::size_t n = 0; n < weights.size(); ++n) weights[n] = atom_location(static_cast<std::int64_t>(n + 1));
    std::vector<double> out(count);
    for (double& x : out) {
        x = 0.0;
        for (double c : weights) {
            const int y = sample_Y(rng);
            if (y != 0) x += c * y;
        }
    }
    return out;
}

double sample_X_tail_sd(std::int64_t num_terms) {
    if (num_terms < 1) throw DomainError("sample_X_tail_sd: num_terms must be >= 1");
    return std::sqrt(2.0 / (std::numbers::pi * std::numbers::pi * static_cast<double>(num_terms)));
}

EcfEstimate ecf(std::span<const double> samples, std::span<const double> t_grid) {
    if (samples.empty()) throw EmptySample("ecf: no samples");
    EcfEstimate estimate;
    estimate.t_grid.assign(t_grid.begin(), t_grid.end());
    estimate.sample_count = samples.size();
    const double n = static_cast<double>(samples.size());
    for (double t : t_grid) {
        double sum_c = 0.0, sum_s = 0.0, sum_c2 = 0.0, sum_s2 = 0.0;
        for (double x : samples) {
            const double c = std::cos(t * x);
            const double s = std::sin(t * x);
            sum_c += c;
            sum_s += s;
            sum_c2 += c * c;
            sum_s2 += s * s;
        }
        const double mean_c = sum_c / n;
        const double mean_s = sum_s / n;
        const double var = std::max(0.0, sum_c2 / n - mean_c * mean_c) +
                           std::max(0.0, sum_s2 / n - mean_s * mean_s);
        estimate.values.emplace_back(mean_c, mean_s);
        estimate.std_errors.push_back(std::sqrt(var / n));
    }
    return estimate;
}

std::map<int, double> empirical_pmf(std::span<const int> samples) {
    std::map<int, double> pmf;
    for (int v : samples) pmf[v] += 1.0;
    for (auto& [value, freq] : pmf) freq /= static_cast<double>(samples.size());
    return pmf;
}

} // namespace tanpick

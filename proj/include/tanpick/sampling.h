#pragma once

#include "tanpick/levy_khintchine.h"

#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <vector>

namespace tanpick {

// Seeded random stream. Identical (seed, stream_id) pairs produce identical
// sequences on every platform: the engine is std::mt19937_64 and all
// variates below are derived from its raw 64-bit output.
class RandomSource {
  public:
    explicit RandomSource(std::uint64_t seed, std::uint64_t stream_id = 0);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

    std::uint64_t next_u64() { return engine_(); }
    // Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    // +1 or -1 with probability 1/2 each.
    int rademacher();
    // Poisson(lambda) by sequential inversion of the CDF.
    int poisson(double lambda);

  private:
    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::mt19937_64 engine_;
    std::uint64_t bits_ = 0;
    int bits_left_ = 0;
};

// Poisson(lambda) by inversion against a precomputed CDF table with a guide
// table of starting indices; returns the same value as RandomSource::poisson
// for the same uniform.
class PoissonInverter {
  public:
    explicit PoissonInverter(double lambda);
    int operator()(RandomSource& rng) const { return invert(rng.uniform()); }
    int invert(double u) const;

  private:
    std::vector<double> cdf_;
    std::vector<int> guide_;
};

std::vector<int> sample_rademacher(RandomSource& rng, std::size_t count);

// Number of +1 and -1 steps in one draw of Y.
struct SignCounts {
    int plus = 0;
    int minus = 0;
    int sum() const { return plus - minus; }
};

// Y = r_1 + ... + r_{N_2}, N_2 ~ Poisson(2), r_j Rademacher.
int sample_Y(RandomSource& rng);
SignCounts sample_Y_counts(RandomSource& rng);

// P_1 - P_2 with independent P_i ~ Poisson(lambda_i).
int sample_skellam_direct(RandomSource& rng, double lambda1 = 1.0, double lambda2 = 1.0);

// P(Y = k) = e^{-2} I_{|k|}(2).
double skellam_pmf(int k);
inline constexpr int kSkellamSupport = 30;

// X = \sum_{n=1}^{N} c_n Y_n with independent copies Y_n.
double sample_X(RandomSource& rng, const TruncationSpec& trunc);
std::vector<double> sample_X(RandomSource& rng, const TruncationSpec& trunc, std::size_t count);

// Standard deviation bound of the omitted \sum_{n>N} c_n Y_n:
// sqrt(2 \sum_{n>N} c_n^2) <= sqrt(2 / (pi^2 N)).
double sample_X_tail_sd(std::int64_t num_terms);

struct EcfEstimate {
    std::vector<double> t_grid;
    std::vector<Complex> values;
    // Standard error of each complex mean: sqrt(var(cos) + var(sin)) / sqrt(n).
    std::vector<double> std_errors;
    std::size_t sample_count = 0;
};

// Empirical characteristic function. Throws EmptySample on no samples.
EcfEstimate ecf(std::span<const double> samples, std::span<const double> t_grid);

// Relative frequencies of each observed value.
std::map<int, double> empirical_pmf(std::span<const int> samples);

} // namespace tanpick

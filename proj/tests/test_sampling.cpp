#include "tanpick/errors.h"
#include "tanpick/sampling.h"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>

using namespace tanpick;

namespace {

template <class T>
std::pair<double, double> mean_var(const std::vector<T>& xs) {
    double mean = 0.0;
    for (T x : xs) mean += x;
    mean /= xs.size();
    double var = 0.0;
    for (T x : xs) var += (x - mean) * (x - mean);
    return {mean, var / (xs.size() - 1)};
}

std::vector<int> draw_Y(RandomSource& rng, std::size_t n) {
    std::vector<int> out(n);
    for (int& y : out) y = sample_Y(rng);
    return out;
}

} // namespace

TEST_CASE("identical seeds give identical streams") {
    RandomSource a(42, 3), b(42, 3);
    for (int i = 0; i < 1000; ++i) REQUIRE(a.next_u64() == b.next_u64());
    RandomSource c(42, 3), d(42, 3);
    for (int i = 0; i < 1000; ++i) REQUIRE(sample_Y(c) == sample_Y(d));
    RandomSource e(42, 3), f(42, 3);
    CHECK(sample_X(e, {200, false}, 500) == sample_X(f, {200, false}, 500));
}

TEST_CASE("different streams are uncorrelated") {
    RandomSource a(42, 0), b(42, 1), c(43, 0);
    constexpr int n = 200'000;
    double sab = 0.0, sac = 0.0;
    for (int i = 0; i < n; ++i) {
        const double ua = a.uniform() - 0.5;
        sab += ua * (b.uniform() - 0.5);
        sac += ua * (c.uniform() - 0.5);
    }
    // Correlation standard error is 1/sqrt(n); allow 5 of them.
    CHECK(std::abs(12.0 * sab / n) < 5.0 / std::sqrt(n));
    CHECK(std::abs(12.0 * sac / n) < 5.0 / std::sqrt(n));
}

TEST_CASE("uniform lies in [0, 1)") {
    RandomSource rng(1);
    for (int i = 0; i < 100'000; ++i) {
        const double u = rng.uniform();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
    }
}

TEST_CASE("Rademacher mean and variance") {
    RandomSource rng(5);
    const auto [mean, var] = mean_var(sample_rademacher(rng, 400'000));
    CHECK(std::abs(mean) < 5.0 / std::sqrt(400'000.0));
    CHECK(var == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(sample_rademacher(rng, 0).empty());
}

TEST_CASE("PoissonInverter agrees with sequential inversion") {
    const PoissonInverter inverter(2.0);
    CHECK(inverter.invert(0.0) == 0);
    CHECK(inverter.invert(std::exp(-2.0) * 0.999) == 0);
    CHECK(inverter.invert(std::exp(-2.0) * 1.001) == 1);
    RandomSource a(9), b(9);
    for (int i = 0; i < 50'000; ++i) REQUIRE(inverter(a) == b.poisson(2.0));
    CHECK(inverter.invert(1.0 - 0x1.0p-53) > 10);
}

TEST_CASE("Poisson sampler moments") {
    RandomSource rng(21);
    std::vector<int> draws(400'000);
    for (int& d : draws) d = rng.poisson(3.5);
    const auto [mean, var] = mean_var(draws);
    CHECK(mean == doctest::Approx(3.5).epsilon(5e-3));
    CHECK(var == doctest::Approx(3.5).epsilon(1e-2));
    CHECK(rng.poisson(0.0) == 0);
    CHECK_THROWS_AS(rng.poisson(-1.0), DomainError);
}

TEST_CASE("Y has mean 0, variance 2 and the Skellam(1, 1) law") {
    RandomSource rng(31);
    const auto ys = draw_Y(rng, 1'000'000);
    const auto [mean, var] = mean_var(ys);
    CHECK(std::abs(mean) < 5.0 * std::sqrt(2.0 / 1e6));
    CHECK(var == doctest::Approx(2.0).epsilon(1e-2));
    const auto pmf = empirical_pmf(ys);
    CHECK(pmf.at(0) == doctest::Approx(skellam_pmf(0)).epsilon(1e-2));
    CHECK(pmf.at(1) == doctest::Approx(pmf.at(-1)).epsilon(2e-2));
}

TEST_CASE("sign counts split N_2 into two independent Poisson(1)") {
    RandomSource rng(37);
    constexpr int n = 400'000;
    double sp = 0.0, sm = 0.0, spm = 0.0;
    for (int i = 0; i < n; ++i) {
        const SignCounts c = sample_Y_counts(rng);
        sp += c.plus;
        sm += c.minus;
        spm += static_cast<double>(c.plus) * c.minus;
    }
    CHECK(sp / n == doctest::Approx(1.0).epsilon(1e-2));
    CHECK(sm / n == doctest::Approx(1.0).epsilon(1e-2));
    CHECK(std::abs(spm / n - (sp / n) * (sm / n)) < 1e-2);
}

TEST_CASE("skellam_pmf") {
    CHECK(skellam_pmf(0) == doctest::Approx(0.3085083).epsilon(1e-7));
    CHECK(skellam_pmf(1) == doctest::Approx(0.2152693).epsilon(1e-7));
    CHECK(skellam_pmf(-3) == skellam_pmf(3));
    double total = 0.0;
    for (int k = -kSkellamSupport; k <= kSkellamSupport; ++k) total += skellam_pmf(k);
    CHECK(std::abs(total - 1.0) < 1e-12);
}

TEST_CASE("direct Skellam sampler") {
    RandomSource rng(41);
    std::vector<int> draws(400'000);
    for (int& d : draws) d = sample_skellam_direct(rng);
    const auto pmf = empirical_pmf(draws);
    for (int k = -3; k <= 3; ++k) CHECK(std::abs(pmf.at(k) - skellam_pmf(k)) < 4e-3);
    RandomSource skewed(43);
    for (int& d : draws) d = sample_skellam_direct(skewed, 3.0, 1.0);
    const auto [mean, var] = mean_var(draws);
    CHECK(mean == doctest::Approx(2.0).epsilon(1e-2));
    CHECK(var == doctest::Approx(4.0).epsilon(2e-2));
}

TEST_CASE("ecf edge cases") {
    const std::vector<double> grid = {0.0, 1.0};
    CHECK_THROWS_AS(ecf(std::vector<double>{}, grid), EmptySample);
    const std::vector<double> zeros(10, 0.0);
    const EcfEstimate est = ecf(zeros, grid);
    CHECK(est.sample_count == 10);
    for (std::size_t j = 0; j < grid.size(); ++j) {
        CHECK(est.values[j] == Complex(1.0, 0.0));
        CHECK(est.std_errors[j] == 0.0);
    }
    const std::vector<double> single = {2.0};
    CHECK(std::abs(ecf(single, std::vector<double>{0.5}).values[0] - std::exp(Complex(0.0, 1.0))) < 1e-15);
}

TEST_CASE("ecf of Y at t = pi is e^{-4}") {
    RandomSource rng(47);
    const auto ys = draw_Y(rng, 1'000'000);
    const std::vector<double> as_double(ys.begin(), ys.end());
    const EcfEstimate est = ecf(as_double, std::vector<double>{std::numbers::pi, 1.0});
    CHECK(std::abs(est.values[0] - std::exp(-4.0)) < 4.0 * est.std_errors[0]);
    CHECK(std::abs(est.values[1] - std::exp(2.0 * (std::cos(1.0) - 1.0))) < 4.0 * est.std_errors[1]);
}

TEST_CASE("X has mean 0 and variance close to 1") {
    RandomSource rng(53);
    const auto xs = sample_X(rng, {200, false}, 200'000);
    const auto [mean, var] = mean_var(xs);
    CHECK(std::abs(mean) < 5.0 / std::sqrt(2e5));
    CHECK(var == doctest::Approx(1.0).epsilon(2e-2));
    CHECK(sample_X_tail_sd(200) == doctest::Approx(std::sqrt(2.0 / (std::numbers::pi * std::numbers::pi * 200))));
    RandomSource one(55);
    const double x = sample_X(one, {1, false});
    CHECK(std::abs(std::remainder(x / atom_location(1), 1.0)) < 1e-12);
}

TEST_CASE("empirical_pmf") {
    const std::vector<int> values = {1, 1, -2, 0};
    const auto pmf = empirical_pmf(values);
    CHECK(pmf.size() == 3);
    CHECK(pmf.at(1) == 0.5);
    CHECK(pmf.at(-2) == 0.25);
    CHECK(empirical_pmf(std::vector<int>{}).empty());
}

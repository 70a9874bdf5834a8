#include "tanpick/cli.h"

#include "tanpick/errors.h"
#include "tanpick/format.h"
#include "tanpick/k_mapping.h"
#include "tanpick/pick_transform.h"
#include "tanpick/sampling.h"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>

namespace tanpick::cli {

namespace {

using Inputs = std::vector<std::pair<std::string, double>>;
using Reports = std::vector<VerificationReport>;

constexpr std::array<std::string_view, 7> kIdentities = {
    "pick", "eq6", "k-map", "eq7", "skellam", "bessel", "counterpart"};

constexpr auto kAbs = TolerancePolicy::absolute;

constexpr std::array<CheckDefaults, 24> kDefaults = {{
    {"pick", "mass", 100'000, 1e-8, kAbs},
    {"pick", "eq5", 100'000, 1e-6, kAbs},
    {"pick", "corollary_max", 100'000, 1e-3, kAbs},
    {"pick", "herglotz_violations", 100'000, 0.5, kAbs},
    {"eq6", "eq6_lhs_vs_rhs", 100'000, 1e-5, kAbs},
    {"eq6", "eq6_middle_vs_rhs", 100'000, 1e-5, kAbs},
    {"eq6", "eq6_lhs_vs_middle", 100'000, 1e-5, kAbs},
    {"k-map", "k_exponent", 100'000, 1e-6, kAbs},
    {"k-map", "resolvent", 100'000, 1e-6, kAbs},
    {"k-map", "k_exponent_vs_resolvent", 100'000, 1e-6, kAbs},
    {"eq7", "eq7", 10'000, 1e-4, kAbs},
    {"eq7", "eq7_domain_w1", 10'000, 0.5, kAbs},
    {"skellam", "pmf_total", 0, 1e-12, kAbs},
    {"skellam", "eq9_sum", 0, 1e-12, kAbs},
    {"skellam", "pmf_Y_mc", 0, 3e-3, kAbs},
    {"skellam", "pmf_skellam_mc", 0, 3e-3, kAbs},
    {"skellam", "pmf_two_sample", 0, 3e-3, kAbs},
    {"skellam", "s_plus_poisson1", 0, 3e-3, kAbs},
    {"skellam", "s_minus_poisson1", 0, 3e-3, kAbs},
    {"skellam", "s_plus_minus_cov", 0, 3e-3, kAbs},
    {"bessel", "bessel_series_vs_quadrature", 0, 1e-10, kAbs},
    {"counterpart", "x_mean", 200, 4e-3, kAbs},
    {"counterpart", "x_var", 200, 1e-2, kAbs},
    {"counterpart", "x_ecf_coverage", 200, 1e-2, kAbs},
}};

constexpr std::size_t kDefaultSamples = 1'000'000;
constexpr std::size_t kEcfSeeds = 20;
constexpr std::size_t kEcfSamplesPerSeed = 100'000;
constexpr int kMcCells = 8;

const CheckDefaults& defaults_for(std::string_view check) {
    for (const auto& d : kDefaults) {
        if (d.check == check) return d;
    }
    throw UnknownIdentity("no defaults for check " + std::string(check));
}

// Resolved settings for one run of one identity family.
class Context {
  public:
    explicit Context(const VerifyOptions& options) : options_(options) {}

    TruncationSpec trunc(std::string_view check) const {
        return {options_.terms.value_or(defaults_for(check).terms), options_.tail_correction};
    }
    double tol(std::string_view check) const { return options_.tol.value_or(defaults_for(check).tolerance); }
    std::size_t samples() const { return options_.samples.value_or(kDefaultSamples); }
    std::uint64_t seed() const { return options_.seed; }

    void add(Reports& out, std::string_view check, Inputs inputs, Complex lhs, Complex rhs) const {
        out.push_back(make_report(std::string(check), std::move(inputs), lhs, rhs, tol(check),
                                  defaults_for(check).policy));
    }

  private:
    const VerifyOptions& options_;
};

double tanh_closed(double t) { return -t * std::tanh(t); }

// Worst cell of |empirical - exact| over |k| <= kMcCells.
template <class Exact>
void add_pmf_check(Reports& out, const Context& ctx, std::string_view check,
                   const std::map<int, double>& empirical, Exact exact, int lo = -kMcCells) {
    int worst = 0;
    double worst_dev = -1.0;
    for (int k = lo; k <= kMcCells; ++k) {
        const auto it = empirical.find(k);
        const double freq = it == empirical.end() ? 0.0 : it->second;
        const double dev = std::abs(freq - exact(k));
        if (dev > worst_dev) {
            worst_dev = dev;
            worst = k;
        }
    }
    const auto it = empirical.find(worst);
    ctx.add(out, check, {{"k", worst}}, it == empirical.end() ? 0.0 : it->second, exact(worst));
}

double poisson1_pmf(int k) {
    if (k < 0) return 0.0;
    return std::exp(-1.0 - std::lgamma(k + 1.0));
}

std::vector<Complex> corollary_points(std::uint64_t seed, std::size_t count) {
    RandomSource rng(seed, 1);
    std::vector<Complex> points;
    while (points.size() < count) {
        const Complex z(-5.0 + 10.0 * rng.uniform(), -5.0 + 10.0 * rng.uniform());
        if (std::abs(z.imag()) >= 0.2 && std::abs(z) >= 0.2 && std::abs(z) <= 5.0) points.push_back(z);
    }
    return points;
}

Reports verify_pick(const Context& ctx) {
    Reports out;
    {
        const TruncationSpec trunc = ctx.trunc("mass");
        const DiscreteMeasure m = build_m(trunc);
        ctx.add(out, "mass", {{"terms", static_cast<double>(trunc.num_terms)}}, m.total_mass(), std::tanh(1.0));
    }
    const TruncationSpec trunc = ctx.trunc("eq5");
    const DiscreteMeasure m = build_m(trunc);
    for (double t : {-4.0, -2.0, -1.0, -0.5, -0.25, 0.25, 0.5, 1.0, 2.0, 4.0}) {
        const Complex z(0.0, t);
        ctx.add(out, "eq5", {{"t", t}}, pick_eval(m, z), tan_reciprocal_oracle(z));
    }

    const DiscreteMeasure mc = build_m(ctx.trunc("corollary_max"));
    Complex worst_z, worst_lhs, worst_rhs;
    double worst_err = -1.0;
    int violations = 0;
    for (const Complex z : corollary_points(ctx.seed(), 200)) {
        const Complex lhs = pick_eval(mc, z);
        const Complex rhs = tan_reciprocal_oracle(z);
        if (std::abs(lhs - rhs) > worst_err) {
            worst_err = std::abs(lhs - rhs);
            worst_z = z;
            worst_lhs = lhs;
            worst_rhs = rhs;
        }
        if (z.imag() > 0.0 && !(lhs.imag() < 0.0)) ++violations;
    }
    ctx.add(out, "corollary_max", {{"z_re", worst_z.real()}, {"z_im", worst_z.imag()}}, worst_lhs, worst_rhs);
    ctx.add(out, "herglotz_violations", {{"points", 200}}, static_cast<double>(violations), 0.0);
    return out;
}

Reports verify_eq6(const Context& ctx) {
    Reports out;
    const QuadratureSpec quad;
    const DiscreteMeasure M = build_M(ctx.trunc("eq6_lhs_vs_rhs"));
    for (double t : {0.25, 0.5, 1.0, 2.0, 4.0}) {
        const Complex lhs = eq6_lhs(t, M, eq6_default_quadrature(t));
        const Complex middle = eq6_middle(t, M, quad);
        const Complex rhs = eq6_rhs(t);
        ctx.add(out, "eq6_lhs_vs_rhs", {{"t", t}}, lhs, rhs);
        ctx.add(out, "eq6_middle_vs_rhs", {{"t", t}}, middle, rhs);
        ctx.add(out, "eq6_lhs_vs_middle", {{"t", t}}, lhs, middle);
    }
    return out;
}

Reports verify_k_map(const Context& ctx) {
    Reports out;
    const QuadratureSpec quad;
    const TruncationSpec trunc = ctx.trunc("k_exponent");
    const DiscreteMeasure M = build_M(trunc);
    for (double t : {0.25, 0.5, 1.0, 2.0, 4.0}) {
        const double k = k_exponent(t, M, quad);
        const double resolvent = mu_exponent_resolvent(t, ctx.trunc("resolvent"));
        ctx.add(out, "k_exponent", {{"t", t}}, k, tanh_closed(t));
        ctx.add(out, "resolvent", {{"t", t}}, resolvent, tanh_closed(t));
        ctx.add(out, "k_exponent_vs_resolvent", {{"t", t}}, k, resolvent);
    }
    return out;
}

Reports verify_eq7(const Context& ctx) {
    Reports out;
    const DiscreteMeasure m = build_m(ctx.trunc("eq7"));
    for (double w : {1.25, 2.0, 5.0}) {
        ctx.add(out, "eq7", {{"w", w}}, eq7_lhs(w, m, eq7_default_quadrature(w)), eq7_rhs(w));
    }
    double raised = 0.0;
    try {
        eq7_lhs(1.0, m, eq7_default_quadrature(1.0));
    } catch (const DomainError&) {
        raised = 1.0;
    }
    ctx.add(out, "eq7_domain_w1", {{"w", 1.0}}, raised, 1.0);
    return out;
}

Reports verify_skellam(const Context& ctx) {
    Reports out;
    double total = 0.0;
    for (int k = kSkellamSupport; k >= -kSkellamSupport; --k) total += skellam_pmf(k);
    ctx.add(out, "pmf_total", {{"max_k", kSkellamSupport}}, total, 1.0);

    double bessel_tail = 0.0;
    for (int k = 20; k >= 1; --k) bessel_tail += bessel_i_series(k, 2.0);
    ctx.add(out, "eq9_sum", {{"K", 20}}, bessel_i_series(0, 2.0) + 2.0 * bessel_tail, std::exp(2.0));

    const std::size_t n = ctx.samples();
    RandomSource rng_y(ctx.seed(), 2);
    RandomSource rng_s(ctx.seed(), 3);
    std::vector<int> ys(n), skellam(n), plus(n), minus(n);
    double sum_p = 0.0, sum_m = 0.0, sum_pm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const SignCounts counts = sample_Y_counts(rng_y);
        ys[i] = counts.sum();
        plus[i] = counts.plus;
        minus[i] = counts.minus;
        sum_p += counts.plus;
        sum_m += counts.minus;
        sum_pm += static_cast<double>(counts.plus) * counts.minus;
        skellam[i] = sample_skellam_direct(rng_s);
    }
    const auto pmf_y = empirical_pmf(ys);
    const auto pmf_s = empirical_pmf(skellam);
    const double dn = static_cast<double>(n);
    add_pmf_check(out, ctx, "pmf_Y_mc", pmf_y, skellam_pmf);
    add_pmf_check(out, ctx, "pmf_skellam_mc", pmf_s, skellam_pmf);
    add_pmf_check(out, ctx, "pmf_two_sample", pmf_y, [&](int k) {
        const auto it = pmf_s.find(k);
        return it == pmf_s.end() ? 0.0 : it->second;
    });
    add_pmf_check(out, ctx, "s_plus_poisson1", empirical_pmf(plus), poisson1_pmf, 0);
    add_pmf_check(out, ctx, "s_minus_poisson1", empirical_pmf(minus), poisson1_pmf, 0);
    const double cov = sum_pm / dn - (sum_p / dn) * (sum_m / dn);
    ctx.add(out, "s_plus_minus_cov", {{"samples", dn}}, cov, 0.0);
    return out;
}

Reports verify_bessel(const Context& ctx) {
    Reports out;
    for (int k = 1; k <= 10; ++k) {
        ctx.add(out, "bessel_series_vs_quadrature", {{"k", k}}, bessel_i_series(k, 2.0), bessel_i_quadrature(k));
    }
    return out;
}

Reports verify_counterpart(const Context& ctx) {
    Reports out;
    const TruncationSpec trunc = ctx.trunc("x_mean");
    RandomSource rng(ctx.seed(), 4);
    const std::vector<double> xs = sample_X(rng, trunc, ctx.samples());
    double sum = 0.0, sum_sq = 0.0;
    for (double x : xs) {
        sum += x;
        sum_sq += x * x;
    }
    const double n = static_cast<double>(xs.size());
    const double mean = sum / n;
    const double var = sum_sq / n - mean * mean;
    ctx.add(out, "x_mean", {{"samples", n}, {"terms", static_cast<double>(trunc.num_terms)}}, mean, 0.0);
    ctx.add(out, "x_var", {{"samples", n}, {"terms", static_cast<double>(trunc.num_terms)}}, var, 1.0);

    // ECF against exp(levy exponent) of the full measure on 21 points of
    // [-5, 5], over kEcfSeeds independent streams.
    const LevyTriple mu{0.0, 0.0, build_M({10'000, true})};
    std::vector<double> grid;
    for (int j = 0; j <= 20; ++j) grid.push_back(-5.0 + 0.5 * j);
    std::size_t covered = 0, total = 0;
    for (std::size_t s = 0; s < kEcfSeeds; ++s) {
        RandomSource seed_rng(ctx.seed(), 100 + s);
        const auto samples = sample_X(seed_rng, trunc, kEcfSamplesPerSeed);
        const EcfEstimate est = ecf(samples, grid);
        for (std::size_t j = 0; j < grid.size(); ++j) {
            const Complex exact = std::exp(levy_exponent(mu, grid[j]));
            if (std::abs(est.values[j] - exact) <= 3.0 * est.std_errors[j]) ++covered;
            ++total;
        }
    }
    ctx.add(out, "x_ecf_coverage", {{"seeds", static_cast<double>(kEcfSeeds)}, {"points", static_cast<double>(total)}},
            static_cast<double>(covered) / static_cast<double>(total), 1.0);
    return out;
}

void validate(const VerifyOptions& options) {
    if (options.terms && (*options.terms < 1 || *options.terms > 10'000'000)) {
        throw InvalidOverride("--terms must be in [1, 1e7]");
    }
    if (options.tol && !(*options.tol > 0.0 && std::isfinite(*options.tol))) {
        throw InvalidOverride("--tol must be positive and finite");
    }
    if (options.samples && (*options.samples < 1 || *options.samples > 100'000'000)) {
        throw InvalidOverride("--samples must be in [1, 1e8]");
    }
}

std::vector<double> linspace(double lo, double hi, int steps) {
    if (steps < 1) throw InvalidOverride("--steps must be >= 1");
    std::vector<double> grid(static_cast<std::size_t>(steps));
    for (int j = 0; j < steps; ++j) grid[j] = steps == 1 ? lo : lo + (hi - lo) * j / (steps - 1);
    return grid;
}

std::string row(std::initializer_list<double> values) {
    std::string line;
    for (double v : values) {
        if (!line.empty()) line += ',';
        line += format_double(v);
    }
    return line + '\n';
}

} // namespace

std::span<const std::string_view> identity_names() { return kIdentities; }

std::span<const CheckDefaults> check_defaults() { return kDefaults; }

std::string defaults_table() {
    std::string out = "# verification defaults, version " + std::to_string(kDefaultsVersion) + '\n';
    out += "identity,check,terms,tolerance,policy\n";
    for (const auto& d : kDefaults) {
        out += std::string(d.identity) + ',' + std::string(d.check) + ',' + std::to_string(d.terms) + ',' +
               format_double(d.tolerance) + ',' +
               (d.policy == TolerancePolicy::absolute ? "absolute" : "absolute_or_relative") + '\n';
    }
    return out;
}

std::vector<VerificationReport> run_verify(std::string_view identity, const VerifyOptions& options) {
    validate(options);
    if (identity == "all") {
        Reports out;
        for (std::string_view name : kIdentities) {
            Reports part = run_verify(name, options);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    const Context ctx(options);
    if (identity == "pick") return verify_pick(ctx);
    if (identity == "eq6") return verify_eq6(ctx);
    if (identity == "k-map") return verify_k_map(ctx);
    if (identity == "eq7") return verify_eq7(ctx);
    if (identity == "skellam") return verify_skellam(ctx);
    if (identity == "bessel") return verify_bessel(ctx);
    if (identity == "counterpart") return verify_counterpart(ctx);
    throw UnknownIdentity("unknown identity '" + std::string(identity) + "'");
}

std::string run_table(std::string_view table_id, const TableOptions& options) {
    if (options.terms && *options.terms < 1) throw InvalidOverride("--terms must be >= 1");
    const auto trunc = [&](std::int64_t fallback) {
        return TruncationSpec{options.terms.value_or(fallback), options.tail_correction};
    };
    std::string out;
    if (table_id == "eq5") {
        const DiscreteMeasure m = build_m(trunc(100'000));
        out = "t,lhs_re,lhs_im,rhs_re,rhs_im,abs_err\n";
        for (double t : linspace(options.t_min, options.t_max, options.steps)) {
            const Complex z(0.0, t);
            const Complex lhs = pick_eval(m, z);
            const Complex rhs = tan_reciprocal_oracle(z);
            out += row({t, lhs.real(), lhs.imag(), rhs.real(), rhs.imag(), std::abs(lhs - rhs)});
        }
    } else if (table_id == "corollary") {
        const DiscreteMeasure m = build_m(trunc(100'000));
        out = "z_re,z_im,lhs_re,lhs_im,rhs_re,rhs_im,abs_err\n";
        for (double im : linspace(options.im_min, options.im_max, options.steps)) {
            for (double re : linspace(options.re_min, options.re_max, options.steps)) {
                const Complex z(re, im);
                const Complex lhs = pick_eval(m, z);
                const Complex rhs = tan_reciprocal_oracle(z);
                out += row({re, im, lhs.real(), lhs.imag(), rhs.real(), rhs.imag(), std::abs(lhs - rhs)});
            }
        }
    } else if (table_id == "exponent") {
        const DiscreteMeasure M = build_M(trunc(100'000));
        const QuadratureSpec quad;
        out = "t,k_exponent,closed_form,abs_err\n";
        for (double t : linspace(options.t_min, options.t_max, options.steps)) {
            const double k = k_exponent(t, M, quad);
            out += row({t, k, tanh_closed(t), std::abs(k - tanh_closed(t))});
        }
    } else if (table_id == "eq7") {
        const DiscreteMeasure m = build_m(trunc(10'000));
        out = "w,lhs,rhs,abs_err\n";
        for (double w : linspace(options.w_min, options.w_max, options.steps)) {
            const double lhs = eq7_lhs(w, m, eq7_default_quadrature(w));
            out += row({w, lhs, eq7_rhs(w), std::abs(lhs - eq7_rhs(w))});
        }
    } else {
        throw UnknownIdentity("unknown table '" + std::string(table_id) + "'");
    }
    return out;
}

std::string sample_text(std::string_view kind, std::size_t count, std::uint64_t seed, std::int64_t terms) {
    RandomSource rng(seed);
    std::string out;
    if (kind == "x") {
        for (double x : sample_X(rng, {terms, false}, count)) out += format_double(x) + '\n';
    } else if (kind == "y") {
        for (std::size_t i = 0; i < count; ++i) out += std::to_string(sample_Y(rng)) + '\n';
    } else if (kind == "skellam") {
        for (std::size_t i = 0; i < count; ++i) out += std::to_string(sample_skellam_direct(rng)) + '\n';
    } else {
        throw UnknownIdentity("unknown sample kind '" + std::string(kind) + "'");
    }
    return out;
}

std::string pmf_text(std::string_view distribution, int max_k, std::string_view format) {
    if (distribution != "skellam") {
        throw UnknownIdentity("unknown distribution '" + std::string(distribution) + "'");
    }
    if (max_k < 0) throw InvalidOverride("--max-k must be >= 0");
    if (format == "csv") {
        std::string out = "k,pmf\n";
        for (int k = -max_k; k <= max_k; ++k) out += std::to_string(k) + ',' + format_double(skellam_pmf(k)) + '\n';
        return out;
    }
    if (format == "json") {
        nlohmann::ordered_json array = nlohmann::ordered_json::array();
        for (int k = -max_k; k <= max_k; ++k) array.push_back({{"k", k}, {"pmf", skellam_pmf(k)}});
        return array.dump(2) + '\n';
    }
    throw InvalidOverride("--format must be csv or json");
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text << std::flush;
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open '" + path + "' for writing");
    file << text;
    if (!file.flush()) throw IoError("failed writing '" + path + "'");
}

} // namespace tanpick::cli

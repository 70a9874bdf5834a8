#pragma once

#include "tanpick/report.h"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tanpick::cli {

inline constexpr std::uint64_t kDefaultSeed = 20210215;
inline constexpr int kDefaultsVersion = 1;

// Identity families accepted by `verify --identity`, in the order `all` runs them.
std::span<const std::string_view> identity_names();

struct CheckDefaults {
    std::string_view identity;
    std::string_view check;
    std::int64_t terms; // 0 when the check has no truncation
    double tolerance;
    TolerancePolicy policy;
};

// Versioned table of the tolerances every check uses unless --tol is given.
std::span<const CheckDefaults> check_defaults();
std::string defaults_table();

struct VerifyOptions {
    std::optional<std::int64_t> terms;
    std::optional<double> tol;
    std::optional<std::size_t> samples;
    std::uint64_t seed = kDefaultSeed;
    bool tail_correction = true;
};

// Runs the checks of one identity family (or all of them). Throws
// UnknownIdentity for an unrecognized name and InvalidOverride for
// out-of-range options.
std::vector<VerificationReport> run_verify(std::string_view identity, const VerifyOptions& options);

struct TableOptions {
    double t_min = 0.25;
    double t_max = 4.0;
    double w_min = 1.25;
    double w_max = 5.0;
    double re_min = -2.0;
    double re_max = 2.0;
    double im_min = 0.25;
    double im_max = 2.0;
    int steps = 16;
    std::optional<std::int64_t> terms;
    bool tail_correction = true;
};

// CSV text of one comparison table: eq5, corollary, exponent or eq7.
std::string run_table(std::string_view table_id, const TableOptions& options);

// One sample per line for kind x, y or skellam.
std::string sample_text(std::string_view kind, std::size_t count, std::uint64_t seed,
                        std::int64_t terms);

// Skellam(1, 1) pmf for -max_k..max_k as "csv" (k,pmf) or "json".
std::string pmf_text(std::string_view distribution, int max_k, std::string_view format);

// Writes text to path, or to stdout when path is empty or "-". Throws IoError.
void write_output(const std::string& path, const std::string& text);

} // namespace tanpick::cli

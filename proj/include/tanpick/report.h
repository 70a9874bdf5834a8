#pragma once

#include <complex>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tanpick {

enum class TolerancePolicy {
    absolute,             // pass iff abs_err <= tolerance
    absolute_or_relative, // pass iff abs_err <= tolerance or rel_err <= tolerance
};

// One checked identity instance: a computed left-hand side against its
// independent right-hand side.
struct VerificationReport {
    std::string identity_id;
    std::vector<std::pair<std::string, double>> inputs;
    std::complex<double> lhs;
    std::complex<double> rhs;
    double abs_err = 0.0;
    double rel_err = 0.0;
    double tolerance = 0.0;
    TolerancePolicy policy = TolerancePolicy::absolute;
    bool pass = false;
};

// Fills abs_err = |lhs - rhs|, rel_err = abs_err / |rhs| and pass.
VerificationReport make_report(std::string identity_id,
                               std::vector<std::pair<std::string, double>> inputs,
                               std::complex<double> lhs, std::complex<double> rhs, double tolerance,
                               TolerancePolicy policy = TolerancePolicy::absolute);

bool all_pass(std::span<const VerificationReport> reports);

// JSON array of report objects (snake_case keys), trailing newline.
std::string reports_to_json(std::span<const VerificationReport> reports);
// Aligned plain-text table, one report per line.
std::string reports_to_text(std::span<const VerificationReport> reports);

} // namespace tanpick

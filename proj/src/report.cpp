#include "tanpick/report.h"

#include "tanpick/format.h"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace tanpick {

VerificationReport make_report(std::string identity_id,
                               std::vector<std::pair<std::string, double>> inputs,
                               std::complex<double> lhs, std::complex<double> rhs, double tolerance,
                               TolerancePolicy policy) {
    VerificationReport report;
    report.identity_id = std::move(identity_id);
    report.inputs = std::move(inputs);
    report.lhs = lhs;
    report.rhs = rhs;
    report.abs_err = std::abs(lhs - rhs);
    const double scale = std::abs(rhs);
    if (scale > 0.0) {
        report.rel_err = report.abs_err / scale;
    } else {
        report.rel_err = report.abs_err == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    }
    report.tolerance = tolerance;
    report.policy = policy;
    report.pass = report.abs_err <= tolerance ||
                  (policy == TolerancePolicy::absolute_or_relative && report.rel_err <= tolerance);
    return report;
}

bool all_pass(std::span<const VerificationReport> reports) {
    return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
}

std::string reports_to_json(std::span<const VerificationReport> reports) {
    nlohmann::ordered_json array = nlohmann::ordered_json::array();
    for (const VerificationReport& r : reports) {
        nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
        for (const auto& [key, value] : r.inputs) inputs[key] = value;
        array.push_back({
            {"identity_id", r.identity_id},
            {"inputs", inputs},
            {"lhs", {{"re", r.lhs.real()}, {"im", r.lhs.imag()}}},
            {"rhs", {{"re", r.rhs.real()}, {"im", r.rhs.imag()}}},
            {"abs_err", r.abs_err},
            {"rel_err", r.rel_err},
            {"tolerance", r.tolerance},
            {"policy", r.policy == TolerancePolicy::absolute ? "absolute" : "absolute_or_relative"},
            {"pass", r.pass},
        });
    }
    return array.dump(2) + '\n';
}

std::string reports_to_text(std::span<const VerificationReport> reports) {
    std::size_t id_width = 11;
    for (const auto& r : reports) id_width = std::max(id_width, r.identity_id.size());

    const auto pad = [](std::string s, std::size_t width) {
        if (s.size() < width) s.append(width - s.size(), ' ');
        return s;
    };
    const auto complex_text = [](std::complex<double> z) {
        if (z.imag() == 0.0) return format_double(z.real());
        return format_double(z.real()) + (z.imag() < 0.0 ? "" : "+") + format_double(z.imag()) + "i";
    };

    std::string out = pad("identity_id", id_width) + "  " + pad("inputs", 28) + "  " +
                      pad("lhs", 48) + "  " + pad("rhs", 48) + "  " + pad("abs_err", 24) + "  " +
                      pad("tolerance", 24) + "  result\n";
    for (const auto& r : reports) {
        std::string inputs;
        for (const auto& [key, value] : r.inputs) {
            if (!inputs.empty()) inputs += ' ';
            inputs += key + '=' + format_double(value);
        }
        out += pad(r.identity_id, id_width) + "  " + pad(inputs, 28) + "  " +
               pad(complex_text(r.lhs), 48) + "  " + pad(complex_text(r.rhs), 48) + "  " +
               pad(format_double(r.abs_err), 24) + "  " + pad(format_double(r.tolerance), 24) + "  " +
               (r.pass ? "PASS" : "FAIL") + '\n';
    }
    return out;
}

} // namespace tanpick

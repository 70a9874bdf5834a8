#include "tanpick/cli.h"
#include "tanpick/errors.h"
#include "tanpick/report.h"

#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <sstream>

using namespace tanpick;

namespace {

int count_lines(const std::string& text) {
    return static_cast<int>(std::count(text.begin(), text.end(), '\n'));
}

std::string first_line(const std::string& text) { return text.substr(0, text.find('\n')); }

} // namespace

TEST_CASE("make_report tolerance policies") {
    const auto abs_only = make_report("x", {}, 1.001e6, 1e6, 1e-2);
    CHECK(abs_only.abs_err == doctest::Approx(1000.0));
    CHECK(abs_only.rel_err == doctest::Approx(1e-3));
    CHECK_FALSE(abs_only.pass);
    CHECK(make_report("x", {}, 1.001e6, 1e6, 1e-2, TolerancePolicy::absolute_or_relative).pass);
    CHECK(make_report("x", {}, 0.5, 0.5, 0.0).pass);
    const auto zero_rhs = make_report("x", {}, 1e-3, 0.0, 1e-2);
    CHECK(zero_rhs.pass);
    CHECK(std::isinf(zero_rhs.rel_err));
    CHECK_FALSE(make_report("x", {}, NAN, 0.0, 1.0).pass);
}

TEST_CASE("report serialization") {
    std::vector<VerificationReport> reports = {
        make_report("mass", {{"N", 10.0}}, {0.5, -0.25}, 0.5, 1.0),
        make_report("eq5", {{"t", 2.0}}, 1.0, 0.0, 1e-3),
    };
    CHECK_FALSE(all_pass(reports));
    const auto json = nlohmann::json::parse(reports_to_json(reports));
    REQUIRE(json.size() == 2);
    CHECK(json[0]["identity_id"] == "mass");
    CHECK(json[0]["inputs"]["N"] == 10.0);
    CHECK(json[0]["lhs"]["im"] == -0.25);
    CHECK(json[0]["pass"] == true);
    CHECK(json[1]["pass"] == false);
    CHECK(json[0]["policy"] == "absolute");
    const std::string text = reports_to_text(reports);
    CHECK(count_lines(text) >= 2);
    CHECK(text.find("PASS") != std::string::npos);
    CHECK(text.find("FAIL") != std::string::npos);
}

TEST_CASE("verify rejects unknown identities and bad overrides") {
    CHECK_THROWS_AS(cli::run_verify("nope", {}), UnknownIdentity);
    cli::VerifyOptions bad;
    bad.terms = 0;
    CHECK_THROWS_AS(cli::run_verify("pick", bad), InvalidOverride);
    bad = {};
    bad.tol = -1.0;
    CHECK_THROWS_AS(cli::run_verify("bessel", bad), InvalidOverride);
    bad = {};
    bad.samples = 0;
    CHECK_THROWS_AS(cli::run_verify("skellam", bad), InvalidOverride);
}

TEST_CASE("verify passes with defaults for the fast identities") {
    for (std::string_view id : {"bessel", "eq7"}) {
        const auto reports = cli::run_verify(id, {});
        CHECK_FALSE(reports.empty());
        CHECK(all_pass(reports));
    }
}

TEST_CASE("verify fails when the tolerance is out of reach") {
    cli::VerifyOptions opts;
    opts.terms = 100;
    opts.tol = 1e-12;
    opts.tail_correction = false;
    CHECK_FALSE(all_pass(cli::run_verify("pick", opts)));
}

TEST_CASE("defaults table is versioned and covers every identity") {
    const std::string table = cli::defaults_table();
    CHECK(first_line(table).find("version 1") != std::string::npos);
    for (std::string_view id : cli::identity_names()) {
        CHECK(table.find(std::string(id) + ",") != std::string::npos);
    }
}

TEST_CASE("tables have the expected headers and row counts") {
    cli::TableOptions opts;
    opts.steps = 4;
    opts.terms = 2000;
    const std::string eq5 = cli::run_table("eq5", opts);
    CHECK(first_line(eq5) == "t,lhs_re,lhs_im,rhs_re,rhs_im,abs_err");
    CHECK(count_lines(eq5) == 5);
    const std::string corollary = cli::run_table("corollary", opts);
    CHECK(first_line(corollary) == "z_re,z_im,lhs_re,lhs_im,rhs_re,rhs_im,abs_err");
    CHECK(count_lines(corollary) == 17);
    CHECK(first_line(cli::run_table("exponent", opts)) == "t,k_exponent,closed_form,abs_err");
    const std::string eq7 = cli::run_table("eq7", opts);
    CHECK(first_line(eq7) == "w,lhs,rhs,abs_err");
    CHECK(eq7 == cli::run_table("eq7", opts));
    CHECK_THROWS_AS(cli::run_table("eq8", opts), UnknownIdentity);
    opts.steps = 0;
    CHECK_THROWS_AS(cli::run_table("eq5", opts), InvalidOverride);
}

TEST_CASE("sample and pmf text") {
    CHECK(cli::sample_text("x", 50, 7, 200) == cli::sample_text("x", 50, 7, 200));
    CHECK(cli::sample_text("x", 50, 7, 200) != cli::sample_text("x", 50, 8, 200));
    CHECK(count_lines(cli::sample_text("y", 25, 1, 200)) == 25);
    CHECK(count_lines(cli::sample_text("skellam", 25, 1, 200)) == 25);
    CHECK_THROWS_AS(cli::sample_text("z", 5, 1, 200), UnknownIdentity);

    const std::string csv = cli::pmf_text("skellam", 2, "csv");
    CHECK(first_line(csv) == "k,pmf");
    CHECK(count_lines(csv) == 6);
    const auto json = nlohmann::json::parse(cli::pmf_text("skellam", 2, "json"));
    CHECK(json.size() == 5);
    CHECK(json[2]["k"] == 0);
    CHECK_THROWS_AS(cli::pmf_text("poisson", 2, "csv"), UnknownIdentity);
    CHECK_THROWS_AS(cli::pmf_text("skellam", 2, "xml"), InvalidOverride);
    CHECK_THROWS_AS(cli::pmf_text("skellam", -1, "csv"), InvalidOverride);
}

TEST_CASE("write_output reports unwritable paths") {
    CHECK_THROWS_AS(cli::write_output("/nonexistent-dir/out.csv", "x"), IoError);
}

// Command-line front end: identity verification, sampling, pmf and
// comparison tables.

#include "tanpick/cli.h"
#include "tanpick/errors.h"

#include <CLI11.hpp>

#include <iostream>

namespace {

int run(int argc, char** argv) {
    using namespace tanpick;

    CLI::App app{"Numerical verification of the Pick representation of tan(1/z) and its "
                 "infinitely divisible counterpart"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "Run identity checks; exit 0 iff all pass");
    std::string identity = "all";
    cli::VerifyOptions verify_options;
    std::int64_t terms = 0;
    double tol = 0.0;
    std::size_t samples = 0;
    bool json = false;
    bool show_defaults = false;
    bool no_tail = false;
    std::string verify_out;
    verify->add_option("--identity", identity, "pick|eq6|k-map|eq7|skellam|bessel|counterpart|all")
        ->capture_default_str();
    auto* terms_opt = verify->add_option("--terms", terms, "Series truncation N (overrides defaults)");
    auto* tol_opt = verify->add_option("--tol", tol, "Tolerance applied to every check");
    auto* samples_opt = verify->add_option("--samples", samples, "Monte Carlo sample count");
    verify->add_option("--seed", verify_options.seed, "Random seed")->capture_default_str();
    verify->add_flag("--json", json, "Emit reports as JSON");
    verify->add_flag("--no-tail-correction", no_tail, "Disable Euler-Maclaurin tail estimates");
    verify->add_flag("--show-defaults", show_defaults, "Print the default tolerance table and exit");
    verify->add_option("--out", verify_out, "Output path (default stdout)");

    // sample
    auto* sample = app.add_subcommand("sample", "Write samples, one per line");
    std::string kind;
    std::size_t count = 1000;
    std::uint64_t seed = cli::kDefaultSeed;
    std::int64_t trunc = 200;
    std::string sample_out;
    sample->add_option("kind", kind, "x|y|skellam")->required()->check(CLI::IsMember({"x", "y", "skellam"}));
    sample->add_option("--n", count, "Number of samples")->capture_default_str();
    sample->add_option("--seed", seed, "Random seed")->capture_default_str();
    sample->add_option("--trunc,--terms", trunc, "Number of blocks in X")->capture_default_str();
    sample->add_option("--out", sample_out, "Output path (default stdout)");

    // pmf
    auto* pmf = app.add_subcommand("pmf", "Write an exact pmf table");
    std::string distribution;
    int max_k = 10;
    std::string format = "csv";
    std::string pmf_out;
    pmf->add_option("distribution", distribution, "skellam")->required();
    pmf->add_option("--max-k", max_k, "Largest |k|")->capture_default_str();
    pmf->add_option("--format", format, "csv|json")->capture_default_str()->check(CLI::IsMember({"csv", "json"}));
    pmf->add_option("--out", pmf_out, "Output path (default stdout)");

    // table
    auto* table = app.add_subcommand("table", "Write a comparison table as CSV");
    std::string table_id;
    cli::TableOptions table_options;
    std::int64_t table_terms = 0;
    bool table_no_tail = false;
    std::string table_out;
    table->add_option("table", table_id, "eq5|corollary|exponent|eq7")
        ->required()
        ->check(CLI::IsMember({"eq5", "corollary", "exponent", "eq7"}));
    table->add_option("--t-min", table_options.t_min)->capture_default_str();
    table->add_option("--t-max", table_options.t_max)->capture_default_str();
    table->add_option("--w-min", table_options.w_min)->capture_default_str();
    table->add_option("--w-max", table_options.w_max)->capture_default_str();
    table->add_option("--re-min", table_options.re_min)->capture_default_str();
    table->add_option("--re-max", table_options.re_max)->capture_default_str();
    table->add_option("--im-min", table_options.im_min)->capture_default_str();
    table->add_option("--im-max", table_options.im_max)->capture_default_str();
    table->add_option("--steps", table_options.steps, "Grid points (per axis for corollary)")
        ->capture_default_str();
    auto* table_terms_opt = table->add_option("--terms", table_terms, "Series truncation N");
    table->add_flag("--no-tail-correction", table_no_tail, "Disable Euler-Maclaurin tail estimates");
    table->add_option("--out", table_out, "Output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    if (verify->parsed()) {
        if (show_defaults) {
            cli::write_output(verify_out, cli::defaults_table());
            return 0;
        }
        if (*terms_opt) verify_options.terms = terms;
        if (*tol_opt) verify_options.tol = tol;
        if (*samples_opt) verify_options.samples = samples;
        verify_options.tail_correction = !no_tail;
        const auto reports = cli::run_verify(identity, verify_options);
        cli::write_output(verify_out, json ? reports_to_json(reports) : reports_to_text(reports));
        return all_pass(reports) ? 0 : 1;
    }
    if (sample->parsed()) {
        cli::write_output(sample_out, cli::sample_text(kind, count, seed, trunc));
        return 0;
    }
    if (pmf->parsed()) {
        cli::write_output(pmf_out, cli::pmf_text(distribution, max_k, format));
        return 0;
    }
    if (*table_terms_opt) table_options.terms = table_terms;
    table_options.tail_correction = !table_no_tail;
    cli::write_output(table_out, cli::run_table(table_id, table_options));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const tanpick::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

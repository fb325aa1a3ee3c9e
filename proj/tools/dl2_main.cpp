// Command-line front end: Deligne-Lusztig character tables for GL2/SL2 over
// small fields, restriction reports and the verification suites.

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "dl2/runner.hpp"

namespace {

struct CliOptions {
    dl2::RunConfig config;
    std::string torus = "nonsplit";
    std::string theta = "0";
    std::string format = "md";
};

void add_common(CLI::App* cmd, CliOptions& opt, bool with_theta) {
    cmd->add_option("--q", opt.config.q_list, "field sizes (odd prime powers <= 11)")
        ->required()
        ->delimiter(',');
    cmd->add_option("--format", opt.format, "output format: md, csv or json");
    cmd->add_option("--out", opt.config.out_path, "output file (default stdout)");
    cmd->add_option("--cache-dir", opt.config.cache_dir,
                    "computation cache directory (default $DL2_CACHE_DIR)");
    if (with_theta) {
        cmd->add_option("--torus", opt.torus, "torus kind: split or nonsplit");
        cmd->add_option("--theta", opt.theta,
                        "character index j, or j1,j2 for the split torus");
    }
}

void parse_theta(const std::string& text, dl2::RunConfig* config) {
    const auto comma = text.find(',');
    config->theta_j1 = std::stol(text.substr(0, comma));
    config->theta_j2 =
        comma == std::string::npos ? 0 : std::stol(text.substr(comma + 1));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Deligne-Lusztig characters of GL2/SL2 and restriction checks"};
    app.set_version_flag("--version", "dl2 0.1.0");
    app.require_subcommand(1);

    CliOptions classes_opt, table_opt, restrict_opt, verify_opt, census_opt;

    CLI::App* classes = app.add_subcommand("classes", "conjugacy class listing");
    add_common(classes, classes_opt, false);
    classes->add_option("--group", classes_opt.config.group,
                        "group: gl2, sl2 or det:<order>");

    CLI::App* table = app.add_subcommand("table", "R_{T,theta} class-function table");
    add_common(table, table_opt, true);
    table->add_option("--group", table_opt.config.group, "group: gl2 or sl2");

    CLI::App* restrict_cmd =
        app.add_subcommand("restrict", "restriction report for one (T, theta)");
    add_common(restrict_cmd, restrict_opt, true);

    CLI::App* verify = app.add_subcommand("verify", "run the verification suites");
    verify_opt.format = "json";
    add_common(verify, verify_opt, false);
    verify->add_option("--suite", verify_opt.config.suite,
                       "restriction, oracle, orthogonality, degrees, coset, iso, "
                       "census, regularity or all");
    verify->add_option("--jobs", verify_opt.config.jobs, "worker pool size");
    verify->add_option("--iso-samples", verify_opt.config.iso_samples,
                       "random conjugations per torus in the iso suite");
    verify->add_option("--iso-seed", verify_opt.config.iso_seed,
                       "seed for the iso suite sampling");

    CLI::App* census = app.add_subcommand("census", "cuspidal restriction census");
    add_common(census, census_opt, false);
    census->add_option("--jobs", census_opt.config.jobs, "worker pool size");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    CliOptions* opt = nullptr;
    if (classes->parsed()) opt = &classes_opt;
    if (table->parsed()) opt = &table_opt;
    if (restrict_cmd->parsed()) opt = &restrict_opt;
    if (verify->parsed()) opt = &verify_opt;
    if (census->parsed()) opt = &census_opt;
    opt->config.command = app.get_subcommands().front()->get_name();

    try {
        opt->config.format = dl2::parse_format(opt->format);
        if (opt->torus == "split")
            opt->config.torus = dl2::TorusKind::split;
        else if (opt->torus == "nonsplit")
            opt->config.torus = dl2::TorusKind::nonsplit;
        else
            throw dl2::Error("unknown torus kind: " + opt->torus);
        parse_theta(opt->theta, &opt->config);
    } catch (const std::exception& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    if (opt->config.cache_dir.empty())
        if (const char* env = std::getenv("DL2_CACHE_DIR")) opt->config.cache_dir = env;

    return dl2::run(opt->config, std::cout, std::cerr);
}

#include "lambda0/commands.hpp"
#include "lambda0/report.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
    using namespace lambda0;

    CLI::App app{"Exact computations in the polynomial algebra generated by t and x_n"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    CommandOptions options;
    std::string format = "text";
    bool timing = false;
    app.option_defaults()->always_capture_default();
    app.add_option("--imax", options.imax, "largest first index of a sweep");
    app.add_option("--jmax", options.jmax, "largest second index of a sweep");
    app.add_option("--nmax", options.nmax, "largest n of a sweep");
    app.add_option("--dmax", options.dmax, "largest degree for dims and series");
    app.add_option("--degree", options.degree, "degree for basis");
    app.add_option("--n", options.n, "index n for chi");
    app.add_option("--spec", options.spec, "character: universal, D21a or osp");
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "tsv", "text"}));
    app.add_option("--budget", options.budget, "derivation / rewrite step budget");
    app.add_option("--threads", options.threads, "worker threads");
    app.add_flag("--timing", timing, "append wall-clock time to the report");

    std::string target;
    auto* verify = app.add_subcommand("verify", "run a verification sweep")->fallthrough();
    verify->add_option("target", target, "p, q, chi, rek, words or gamma")->required();

    std::string expression;
    auto* normalize = app.add_subcommand("normalize", "normal form on the spanning set M")->fallthrough();
    normalize->add_option("expr", expression, "polynomial in t and x3, x4, ...")->required();

    auto* dims = app.add_subcommand("dims", "dimension census table")->fallthrough();
    auto* chi = app.add_subcommand("chi", "universal character of x_n")->fallthrough();
    auto* series = app.add_subcommand("series", "coefficients of the lower-bound series")->fallthrough();
    auto* basis = app.add_subcommand("basis", "members of M in one degree")->fallthrough();

    std::vector<std::string> words;
    auto* words_cmd = app.add_subcommand("words", "evaluate word brackets")->fallthrough();
    words_cmd->add_option("word", words, "words over 1, 2, 3")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const auto start = std::chrono::steady_clock::now();
        Report report;
        if (*verify) report = cmd_verify(target, options);
        else if (*normalize) report = cmd_normalize(expression, options);
        else if (*dims) report = cmd_dims(options);
        else if (*chi) report = cmd_chi(options);
        else if (*series) report = cmd_series(options);
        else if (*basis) report = cmd_basis(options);
        else report = cmd_words(words, options);
        if (timing) report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << render(report, parse_format(format));
        return exit_code(report);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

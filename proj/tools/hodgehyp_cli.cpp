#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "hodgehyp/hodgehyp.h"

namespace {

// 0 ok, 1 verification failure, 2 parse, 3 reducible, 4 internal
int exit_code(hh_status s)
{
    switch (s) {
    case HH_OK: return 0;
    case HH_VERIFY_FAILED: return 1;
    case HH_PARSE_ERROR:
    case HH_INVALID_ARGUMENT: return 2;
    case HH_REDUCIBLE: return 3;
    case HH_INTERNAL:
    case HH_UNKNOWN_DATA: return 4;
    }
    return 4;
}

int report_error(hh_status s)
{
    std::cerr << "hodgehyp: " << hh_last_error() << '\n';
    return exit_code(s);
}

hh_engine engine_of(const std::string& e)
{
    if (e == "recursive")
        return HH_ENGINE_RECURSIVE;
    if (e == "both")
        return HH_ENGINE_BOTH;
    return HH_ENGINE_CLOSED;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Local Hodge data of irreducible hypergeometric D-modules"};
    app.set_version_flag("--version", std::string(hh_version()));
    app.require_subcommand(1);

    std::string alpha, beta, engine = "closed", format = "json";
    bool normalize = false;
    auto* compute = app.add_subcommand("compute", "Compute the Hodge profile of H(alpha, beta)");
    compute->add_option("--alpha", alpha, "Comma-separated rationals, e.g. 0,1/2")->required();
    compute->add_option("--beta", beta, "Comma-separated rationals")->required();
    compute->add_option("--engine", engine, "closed, recursive or both")
        ->check(CLI::IsMember({"closed", "recursive", "both"}));
    compute->add_option("--format", format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
    compute->add_flag("--normalize", normalize, "Shift p so that the smallest index is 0");

    int n_max = 2, den_max = 4;
    std::uint64_t sample = 0, seed = 0;
    bool inject_fault = false;
    auto* verify = app.add_subcommand("verify", "Run the consistency sweep");
    verify->add_option("--n-max", n_max, "Largest rank")->check(CLI::PositiveNumber);
    verify->add_option("--den-max", den_max, "Largest denominator")->check(CLI::PositiveNumber);
    verify->add_option("--sample", sample, "Number of random instances (default: exhaustive grid)");
    verify->add_option("--seed", seed, "Random seed");
    verify->add_flag("--inject-fault", inject_fault, "Corrupt the recursive engine output to exercise failure reporting");

    auto* batch = app.add_subcommand("batch", "Read JSON lines {\"alpha\": [...], \"beta\": [...]} from stdin");
    batch->add_option("--engine", engine, "closed, recursive or both")
        ->check(CLI::IsMember({"closed", "recursive", "both"}));
    batch->add_flag("--normalize", normalize, "Shift p so that the smallest index is 0");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const hh_compute_options options{engine_of(engine), normalize ? 1 : 0,
                                     format == "tsv" ? HH_FORMAT_TSV : HH_FORMAT_JSON};

    if (*compute) {
        hh_params* params = nullptr;
        if (auto s = hh_params_parse(alpha.c_str(), beta.c_str(), &params); s != HH_OK)
            return report_error(s);
        char* out = nullptr;
        const auto s = hh_compute_document(params, &options, &out);
        hh_params_free(params);
        if (s != HH_OK)
            return report_error(s);
        std::cout << out;
        hh_string_free(out);
        return 0;
    }

    if (*verify) {
        const hh_verify_options vo{n_max, den_max, sample, seed, inject_fault ? 1 : 0};
        char* out = nullptr;
        const auto s = hh_verify(&vo, &out);
        if (!out)
            return report_error(s);
        std::cout << out;
        hh_string_free(out);
        return exit_code(s);
    }

    std::string line;
    while (std::getline(std::cin, line)) {
        char* out = nullptr;
        if (auto s = hh_batch_line(line.c_str(), &options, &out); s != HH_OK)
            return report_error(s);
        std::cout << out << '\n';
        hh_string_free(out);
    }
    return 0;
}

#include <algorithm>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "qident/harness.hpp"

namespace qident {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

int emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return kExitOk;
    }
    std::ofstream out(output_path);
    if (!out) {
        std::cerr << "cannot open output file: " << output_path << "\n";
        return kExitUsage;
    }
    out << text;
    return kExitOk;
}

struct CommonOpts {
    std::string format = "table";
    bool deterministic = false;
    std::string output;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--format", opts.format, "Output format: table, json or csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    cmd->add_flag("--deterministic", opts.deterministic,
                  "Omit elapsed-time fields so identical runs are byte-identical");
    cmd->add_option("--output", opts.output, "Write the report to this path instead of stdout");
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"qident: exact verification of multi-colored partition identities"};
    app.require_subcommand(1);

    // verify
    std::string identity;
    bool all = false;
    int colors = 2;
    int order = 30;
    CommonOpts verify_opts;
    auto* verify = app.add_subcommand("verify", "Build both sides of an identity and compare "
                                                "coefficients up to the truncation order");
    verify->add_option("--identity", identity, "Identity name (see --help for the catalog)");
    verify->add_flag("--all", all, "Verify the whole identity catalog (fails fast)");
    verify->add_option("--colors", colors, "Number of colors r (forced to 1 for the "
                                           "single-variable identities)");
    verify->add_option("--order", order, "Exclusive truncation order T (exponents 0..T-1)");
    add_common(verify, verify_opts);

    // oracle
    std::string kind_str = "strict";
    int oracle_colors = 2;
    int max_n = 10;
    CommonOpts oracle_opts;
    auto* oracle = app.add_subcommand("oracle", "Compare brute-force partition enumeration "
                                                "against the product-side coefficients");
    oracle->add_option("--kind", kind_str, "Partition kind: strict or over")
        ->check(CLI::IsMember({"strict", "over"}));
    oracle->add_option("--colors", oracle_colors, "Number of colors r");
    oracle->add_option("--max-n", max_n, "Largest weight to check");
    add_common(oracle, oracle_opts);

    // decompose
    std::string literal;
    CommonOpts decompose_opts;
    auto* decompose = app.add_subcommand("decompose", "Durfee-square block decomposition of a "
                                                      "colored (over)partition literal");
    decompose->add_option("--partition", literal,
                          "Partition literal, e.g. \"2[2]~,2[1],1[2]~,1[1],1[1]~\"")
        ->required();
    add_common(decompose, decompose_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            std::cout << app.help();
            return kExitOk;
        }
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (verify->parsed()) {
            const auto format = *format_from_string(verify_opts.format);
            if (all == !identity.empty()) {
                std::cerr << "verify: pass exactly one of --identity <name> or --all\n";
                return kExitUsage;
            }
            std::vector<IdentityName> names;
            if (all) {
                for (const auto& entry : identity_catalog()) names.push_back(entry.name);
                std::sort(names.begin(), names.end(), [](IdentityName a, IdentityName b) {
                    return to_string(a) < to_string(b);
                });
            } else {
                auto name = identity_from_string(identity);
                if (!name) {
                    std::cerr << "unknown identity '" << identity << "'; catalog:";
                    for (const auto& entry : identity_catalog())
                        std::cerr << " " << entry.name_str;
                    std::cerr << "\n";
                    return kExitUsage;
                }
                names.push_back(*name);
            }
            std::string text;
            for (IdentityName name : names) {
                const IdentitySpec spec{name, colors, order};
                // keep the coefficient table out of multi-identity reports
                const bool want_sides =
                    !all && (format == OutputFormat::csv || format == OutputFormat::json);
                VerifyOutcome outcome = run_verify_full(spec, want_sides);
                text += render_verify(outcome.report,
                                      outcome.sides ? &*outcome.sides : nullptr, format,
                                      verify_opts.deterministic);
                if (outcome.report.status == VerifyStatus::error) {
                    std::cerr << "error: " << outcome.report.error_message << "\n";
                    return kExitUsage;
                }
                if (outcome.report.status == VerifyStatus::mismatch) {
                    emit(text, verify_opts.output);
                    return kExitMismatch;
                }
            }
            return emit(text, verify_opts.output);
        }

        if (oracle->parsed()) {
            const auto format = *format_from_string(oracle_opts.format);
            const PartitionKind kind =
                kind_str == "strict" ? PartitionKind::strict : PartitionKind::over;
            OracleReport report = run_oracle(kind, oracle_colors, max_n);
            int rc = emit(render_oracle(report, format, oracle_opts.deterministic),
                          oracle_opts.output);
            if (rc != kExitOk) return rc;
            return report.pass ? kExitOk : kExitMismatch;
        }

        if (decompose->parsed()) {
            const auto format = *format_from_string(decompose_opts.format);
            ColoredPartition p = parse_partition(literal);
            BlockDecomposition d = durfee_decompose(p);
            return emit(render_decompose(p, d, format), decompose_opts.output);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace qident

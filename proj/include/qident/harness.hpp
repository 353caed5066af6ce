#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "qident/combinatorics.hpp"
#include "qident/identities.hpp"

namespace qident {

enum class VerifyStatus { match, mismatch, error };
std::string_view to_string(VerifyStatus s);

struct VerifyReport {
    IdentitySpec spec;
    VerifyStatus status = VerifyStatus::error;
    std::optional<Mismatch> mismatch;  // present iff status == mismatch
    std::string error_message;        // present iff status == error
    std::chrono::duration<double> elapsed{};
    int terms_built = 0;
};

/* Builds both sides of the identity and compares them coefficientwise up to
 * the spec's order. Deterministic for a fixed spec (times aside). */
VerifyReport run_verify(const IdentitySpec& spec);

/* Same, but keeps the built sides (for coefficient dumps). */
struct VerifyOutcome {
    VerifyReport report;
    std::optional<IdentitySides> sides;
};
VerifyOutcome run_verify_full(const IdentitySpec& spec, bool keep_sides);

/* Comparison/report assembly on externally built sides; lets tests inject
 * perturbed series. */
VerifyReport report_from_sides(const IdentitySpec& spec, const IdentitySides& sides,
                               std::chrono::duration<double> elapsed);

struct OracleRow {
    int n;
    std::string count;  // partition count (all symbols set to 1)
    bool match;
};

struct OracleReport {
    PartitionKind kind = PartitionKind::strict;
    int colors = 0;
    int max_n = 0;
    bool pass = true;
    int first_mismatch_n = -1;
    std::string enumerated;  // at the first mismatch
    std::string series;
    std::vector<OracleRow> rows;
    std::chrono::duration<double> elapsed{};
};

/* Compares the brute-force generating polynomial with the q^n coefficient
 * of the product side, for all n <= n_max. */
OracleReport run_oracle(PartitionKind kind, int r, int n_max);

enum class OutputFormat { table, json, csv };
std::optional<OutputFormat> format_from_string(std::string_view s);

/* Renderers. With deterministic = true no elapsed-time field is emitted, so
 * identical invocations produce byte-identical output (golden-file mode). */
std::string render_verify(const VerifyReport& report, const IdentitySides* sides,
                          OutputFormat format, bool deterministic);
std::string render_oracle(const OracleReport& report, OutputFormat format, bool deterministic);
std::string render_decompose(const ColoredPartition& p, const BlockDecomposition& d,
                             OutputFormat format);

/* Coefficient-table export: one row per q-exponent 0..T-1 with both sides'
 * canonical polynomial text. */
std::string coefficient_table_csv(const IdentitySpec& spec, const IdentitySides& sides);

/* The qident command line. Exit codes: 0 full success, 1 any mismatch,
 * 2 usage or parse errors. */
int cli_main(int argc, const char* const* argv);

}  // namespace qident

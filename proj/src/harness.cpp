#include "qident/harness.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace qident {

namespace {

using nlohmann::json;

constexpr int kJsonSchemaVersion = 1;

json spec_json(const IdentitySpec& spec) {
    return json{{"name", std::string(to_string(spec.name))},
                {"colors", spec.colors},
                {"order", spec.order}};
}

json verify_json(const VerifyReport& report, const IdentitySides* sides, bool deterministic) {
    json j{{"schema", kJsonSchemaVersion},
           {"kind", "verify"},
           {"identity", spec_json(report.spec)},
           {"status", std::string(to_string(report.status))},
           {"terms_built", report.terms_built}};
    if (report.mismatch) {
        j["first_mismatch"] = {{"exponent", report.mismatch->exponent},
                               {"lhs", report.mismatch->lhs.str()},
                               {"rhs", report.mismatch->rhs.str()}};
    }
    if (!report.error_message.empty()) j["error"] = report.error_message;
    if (!deterministic) j["elapsed_seconds"] = report.elapsed.count();
    if (sides) {
        json rows = json::array();
        for (int n = 0; n < report.spec.order; ++n) {
            rows.push_back({{"n", n}, {"lhs", sides->lhs[n].str()}, {"rhs", sides->rhs[n].str()}});
        }
        j["coefficients"] = std::move(rows);
    }
    return j;
}

std::string kind_str(PartitionKind kind) {
    return kind == PartitionKind::strict ? "strict" : "over";
}

}  // namespace

std::string_view to_string(VerifyStatus s) {
    switch (s) {
        case VerifyStatus::match: return "match";
        case VerifyStatus::mismatch: return "mismatch";
        case VerifyStatus::error: return "error";
    }
    return "error";
}

VerifyOutcome run_verify_full(const IdentitySpec& raw_spec, bool keep_sides) {
    VerifyOutcome outcome;
    const IdentitySpec spec = raw_spec.normalized();
    outcome.report.spec = spec;
    const auto start = std::chrono::steady_clock::now();
    try {
        spec.validate();
        IdentitySides sides = catalog_entry(spec.name).build(spec.colors, spec.order);
        outcome.report = report_from_sides(spec, sides, std::chrono::steady_clock::now() - start);
        if (keep_sides) outcome.sides = std::move(sides);
    } catch (const std::exception& e) {
        outcome.report.status = VerifyStatus::error;
        outcome.report.error_message = e.what();
        outcome.report.elapsed = std::chrono::steady_clock::now() - start;
    }
    return outcome;
}

VerifyReport run_verify(const IdentitySpec& spec) {
    return run_verify_full(spec, false).report;
}

VerifyReport report_from_sides(const IdentitySpec& spec, const IdentitySides& sides,
                               std::chrono::duration<double> elapsed) {
    VerifyReport report;
    report.spec = spec;
    report.terms_built = sides.terms_built;
    report.elapsed = elapsed;
    auto mismatch = first_mismatch(sides.lhs, sides.rhs, spec.order);
    if (mismatch) {
        report.status = VerifyStatus::mismatch;
        report.mismatch = std::move(mismatch);
    } else {
        report.status = VerifyStatus::match;
    }
    return report;
}

OracleReport run_oracle(PartitionKind kind, int r, int n_max) {
    if (r < 1) throw std::invalid_argument("color count must be >= 1");
    if (n_max < 0) throw std::invalid_argument("max-n must be >= 0");
    const auto start = std::chrono::steady_clock::now();
    OracleReport report;
    report.kind = kind;
    report.colors = r;
    report.max_n = n_max;

    const int T = n_max + 1;
    QSeries series = QSeries::one(T);
    if (kind == PartitionKind::strict) {
        for (int j = 1; j <= r; ++j)
            series = mul(series, poch_infinite(MultiPoly::variable(Symbol::a(j)), 1, 1, T));
    } else {
        series = build_overpartition_cft(r, std::max(T, 2)).lhs;
    }

    std::vector<std::pair<Symbol, Int>> ones;
    for (int j = 1; j <= r; ++j) {
        ones.emplace_back(Symbol::a(j), 1);
        ones.emplace_back(Symbol::z(j), 1);
    }
    for (int n = 0; n <= n_max; ++n) {
        const MultiPoly enumerated = gen_poly(kind, r, n);
        const bool match = enumerated == series[n];
        const MultiPoly count = enumerated.substitute(ones);
        report.rows.push_back({n, count.coefficient(Monomial::unit()).get_str(), match});
        if (!match && report.pass) {
            report.pass = false;
            report.first_mismatch_n = n;
            report.enumerated = enumerated.str();
            report.series = series[n].str();
        }
    }
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

std::optional<OutputFormat> format_from_string(std::string_view s) {
    if (s == "table") return OutputFormat::table;
    if (s == "json") return OutputFormat::json;
    if (s == "csv") return OutputFormat::csv;
    return std::nullopt;
}

std::string coefficient_table_csv(const IdentitySpec& spec, const IdentitySides& sides) {
    std::ostringstream out;
    out << "identity,n,lhs,rhs,match\n";
    for (int n = 0; n < spec.order; ++n) {
        const bool match = sides.lhs[n] == sides.rhs[n];
        out << to_string(spec.name) << "," << n << "," << sides.lhs[n].str() << ","
            << sides.rhs[n].str() << "," << (match ? "yes" : "no") << "\n";
    }
    return out.str();
}

std::string render_verify(const VerifyReport& report, const IdentitySides* sides,
                          OutputFormat format, bool deterministic) {
    switch (format) {
        case OutputFormat::json: return verify_json(report, sides, deterministic).dump(2) + "\n";
        case OutputFormat::csv: {
            if (!sides) {
                std::ostringstream out;
                out << "identity,colors,order,status,terms_built\n";
                out << to_string(report.spec.name) << "," << report.spec.colors << ","
                    << report.spec.order << "," << to_string(report.status) << ","
                    << report.terms_built << "\n";
                return out.str();
            }
            return coefficient_table_csv(report.spec, *sides);
        }
        case OutputFormat::table: {
            std::ostringstream out;
            out << "identity " << to_string(report.spec.name) << "  colors "
                << report.spec.colors << "  order " << report.spec.order << "\n";
            out << "status: " << to_string(report.status);
            if (report.status == VerifyStatus::match)
                out << " (all " << report.spec.order << " coefficients agree)";
            out << "\n";
            if (report.mismatch) {
                out << "first mismatch at q^" << report.mismatch->exponent << "\n";
                out << "  lhs: " << report.mismatch->lhs.str() << "\n";
                out << "  rhs: " << report.mismatch->rhs.str() << "\n";
            }
            if (!report.error_message.empty()) out << "error: " << report.error_message << "\n";
            out << "outer-sum terms built: " << report.terms_built << "\n";
            if (!deterministic) out << "elapsed: " << report.elapsed.count() << " s\n";
            return out.str();
        }
    }
    return {};
}

std::string render_oracle(const OracleReport& report, OutputFormat format, bool deterministic) {
    switch (format) {
        case OutputFormat::json: {
            json j{{"schema", kJsonSchemaVersion},
                   {"kind", "oracle"},
                   {"partition_kind", kind_str(report.kind)},
                   {"colors", report.colors},
                   {"max_n", report.max_n},
                   {"status", report.pass ? "match" : "mismatch"}};
            json rows = json::array();
            for (const auto& row : report.rows)
                rows.push_back({{"n", row.n}, {"count", row.count}, {"match", row.match}});
            j["rows"] = std::move(rows);
            if (!report.pass) {
                j["first_mismatch"] = {{"n", report.first_mismatch_n},
                                       {"enumerated", report.enumerated},
                                       {"series", report.series}};
            }
            if (!deterministic) j["elapsed_seconds"] = report.elapsed.count();
            return j.dump(2) + "\n";
        }
        case OutputFormat::csv: {
            std::ostringstream out;
            out << "kind,colors,n,count,match\n";
            for (const auto& row : report.rows) {
                out << kind_str(report.kind) << "," << report.colors << "," << row.n << ","
                    << row.count << "," << (row.match ? "yes" : "no") << "\n";
            }
            return out.str();
        }
        case OutputFormat::table: {
            std::ostringstream out;
            out << "oracle " << kind_str(report.kind) << "  colors " << report.colors
                << "  n <= " << report.max_n << "\n";
            out << "  n  count        series\n";
            for (const auto& row : report.rows) {
                out << std::setw(3) << row.n << "  " << std::setw(11) << row.count << "  "
                    << (row.match ? "match" : "MISMATCH") << "\n";
            }
            out << "status: " << (report.pass ? "match" : "mismatch") << "\n";
            if (!report.pass) {
                out << "first mismatch at n = " << report.first_mismatch_n << "\n";
                out << "  enumerated: " << report.enumerated << "\n";
                out << "  series:     " << report.series << "\n";
            }
            if (!deterministic) out << "elapsed: " << report.elapsed.count() << " s\n";
            return out.str();
        }
    }
    return {};
}

std::string render_decompose(const ColoredPartition& p, const BlockDecomposition& d,
                             OutputFormat format) {
    switch (format) {
        case OutputFormat::json: {
            json rows = json::array();
            for (const auto& row : d.block2)
                rows.push_back(
                    {{"length", row.length}, {"color", row.color}, {"overlined", row.overlined}});
            json b3 = json::array();
            for (const auto& part : d.block3)
                b3.push_back(
                    {{"size", part.size}, {"color", part.color}, {"overlined", part.overlined}});
            json j{{"schema", kJsonSchemaVersion},
                   {"kind", "decompose"},
                   {"partition", format_partition(p)},
                   {"partition_kind", kind_str(p.kind)},
                   {"weight", p.weight()},
                   {"durfee", d.durfee},
                   {"block1_weight", d.durfee * d.durfee},
                   {"block2", std::move(rows)},
                   {"block3", std::move(b3)},
                   {"block4", format_partition(d.block4)},
                   {"weight_check", d.weight() == p.weight()}};
            return j.dump(2) + "\n";
        }
        case OutputFormat::csv: {
            std::ostringstream out;
            out << "block,size_or_length,color,overlined\n";
            out << "I," << d.durfee << ",," << "\n";
            for (const auto& row : d.block2)
                out << "II," << row.length << "," << row.color << ","
                    << (row.overlined ? "yes" : "no") << "\n";
            for (const auto& part : d.block3)
                out << "III," << part.size << "," << part.color << ","
                    << (part.overlined ? "yes" : "no") << "\n";
            for (const auto& part : d.block4.parts)
                out << "IV," << part.size << "," << part.color << ","
                    << (part.overlined ? "yes" : "no") << "\n";
            return out.str();
        }
        case OutputFormat::table: {
            std::ostringstream out;
            out << "partition: " << format_partition(p) << "  (" << kind_str(p.kind)
                << ", weight " << p.weight() << ")\n";
            out << "Durfee square N = " << d.durfee << "  (Block I weight " << d.durfee * d.durfee
                << ")\n";
            out << "Block II rows (length, color, overlined):\n";
            for (const auto& row : d.block2) {
                out << "  (" << row.length << ", a" << row.color << ", "
                    << (row.overlined ? "yes" : "no") << ")\n";
            }
            out << "Block III: ";
            if (d.block3.empty()) {
                out << "(empty)\n";
            } else {
                std::string b3;
                for (const auto& part : d.block3) {
                    if (!b3.empty()) b3 += ",";
                    b3 += std::to_string(part.size) + "[" + std::to_string(part.color) + "]" +
                          (part.overlined ? "~" : "");
                }
                out << b3 << "\n";
            }
            out << "Block IV: "
                << (d.block4.parts.empty() ? "(empty)" : format_partition(d.block4)) << "\n";
            out << "weight check: " << d.durfee * d.durfee << " (I) + ";
            int w2 = 0;
            for (const auto& row : d.block2) w2 += row.length;
            out << w2 << " (II) + " << d.durfee * static_cast<int>(d.block3.size()) << " (III) + "
                << d.block4.weight() << " (IV) = " << d.weight() << "\n";
            return out.str();
        }
    }
    return {};
}

}  // namespace qident

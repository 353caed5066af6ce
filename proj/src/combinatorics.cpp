#include "qident/combinatorics.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

#include "qident/qseries.hpp"

namespace qident {

namespace {

/* Descending generalized order, with the overlined copy last in its
 * (size, color) run. */
bool part_before(const ColoredPart& x, const ColoredPart& y) {
    if (x.size != y.size) return x.size > y.size;
    if (x.color != y.color) return x.color > y.color;
    return x.overlined < y.overlined;
}

void validate_parts(PartitionKind kind, const std::vector<ColoredPart>& parts) {
    std::map<std::pair<int, int>, std::pair<int, int>> seen;  // (size,color) -> (count, overlines)
    for (const auto& p : parts) {
        if (p.size < 1) throw std::invalid_argument("partition part must have size >= 1");
        if (p.color < 1) throw std::invalid_argument("partition part must have color >= 1");
        auto& [count, overlines] = seen[{p.size, p.color}];
        ++count;
        if (p.overlined) ++overlines;
    }
    for (const auto& [key, val] : seen) {
        const auto& [count, overlines] = val;
        if (kind == PartitionKind::strict) {
            if (overlines > 0)
                throw std::invalid_argument("strict partition cannot carry overlines");
            if (count > 1)
                throw std::invalid_argument("strict partition repeats part " +
                                            std::to_string(key.first) + " in color " +
                                            std::to_string(key.second));
        } else if (overlines > 1) {
            throw std::invalid_argument("more than one overlined copy of part " +
                                        std::to_string(key.first) + " in color " +
                                        std::to_string(key.second));
        }
    }
}

}  // namespace

int ColoredPartition::weight() const {
    int w = 0;
    for (const auto& p : parts) w += p.size;
    return w;
}

ColoredPartition make_partition(PartitionKind kind, std::vector<ColoredPart> parts) {
    validate_parts(kind, parts);
    std::sort(parts.begin(), parts.end(), part_before);
    return ColoredPartition{kind, std::move(parts)};
}

std::vector<ColoredPartition> enum_strict(int r, int n) {
    if (r < 1) throw std::invalid_argument("color count must be >= 1");
    if (n < 0) throw std::invalid_argument("weight must be >= 0");
    std::vector<ColoredPartition> out;
    std::vector<ColoredPart> acc;
    /* Walk (size, color) pairs in decreasing generalized order; each pair is
     * used at most once, so within every color the sizes are distinct. */
    auto rec = [&](auto&& self, int size, int color, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(ColoredPartition{PartitionKind::strict, acc});
            return;
        }
        if (size < 1) return;
        if (size > remaining) {
            self(self, remaining, r, remaining);
            return;
        }
        const int nsize = color > 1 ? size : size - 1;
        const int ncolor = color > 1 ? color - 1 : r;
        self(self, nsize, ncolor, remaining);  // skip this pair
        acc.push_back({size, color, false});
        self(self, nsize, ncolor, remaining - size);
        acc.pop_back();
    };
    rec(rec, n, r, n);
    return out;
}

std::vector<ColoredPartition> enum_over(int r, int n) {
    if (r < 1) throw std::invalid_argument("color count must be >= 1");
    if (n < 0) throw std::invalid_argument("weight must be >= 0");
    std::vector<ColoredPartition> out;
    std::vector<ColoredPart> acc;
    /* Per (size, color) pair: any multiplicity, and at most one overline,
     * carried by the last copy of the run. */
    auto rec = [&](auto&& self, int size, int color, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(ColoredPartition{PartitionKind::over, acc});
            return;
        }
        if (size < 1) return;
        if (size > remaining) {
            self(self, remaining, r, remaining);
            return;
        }
        const int nsize = color > 1 ? size : size - 1;
        const int ncolor = color > 1 ? color - 1 : r;
        self(self, nsize, ncolor, remaining);
        for (int m = 1; m * size <= remaining; ++m) {
            for (int k = 0; k < m; ++k) acc.push_back({size, color, false});
            self(self, nsize, ncolor, remaining - m * size);
            acc.back().overlined = true;
            self(self, nsize, ncolor, remaining - m * size);
            for (int k = 0; k < m; ++k) acc.pop_back();
        }
    };
    rec(rec, n, r, n);
    return out;
}

MultiPoly partition_monomial(const ColoredPartition& p) {
    std::map<int, std::pair<int, int>> per_color;  // color -> (parts, overlines)
    for (const auto& part : p.parts) {
        auto& [count, overlines] = per_color[part.color];
        ++count;
        if (part.overlined) ++overlines;
    }
    Monomial m;
    for (const auto& [color, val] : per_color) {
        m = m.times(Monomial::of(Symbol::a(color), val.first));
        if (val.second > 0) m = m.times(Monomial::of(Symbol::z(color), val.second));
    }
    return MultiPoly::term(m, 1);
}

MultiPoly gen_poly(PartitionKind kind, int r, int n) {
    const auto all = kind == PartitionKind::strict ? enum_strict(r, n) : enum_over(r, n);
    MultiPoly sum;
    for (const auto& p : all) sum += partition_monomial(p);
    return sum;
}

int BlockDecomposition::weight() const {
    int w = durfee * durfee;
    for (const auto& row : block2) w += row.length;
    w += durfee * static_cast<int>(block3.size());
    w += block4.weight();
    return w;
}

BlockDecomposition durfee_decompose(const ColoredPartition& p) {
    if (p.parts.empty())
        throw std::invalid_argument("empty partition has no Durfee square (the N = 0 stratum "
                                    "is the leading 1)");
    const auto& parts = p.parts;
    int N = 0;
    while (N < static_cast<int>(parts.size()) && parts[static_cast<std::size_t>(N)].size >= N + 1)
        ++N;

    BlockDecomposition d;
    d.kind = p.kind;
    d.durfee = N;
    for (int j = 0; j < N; ++j) {
        const auto& part = parts[static_cast<std::size_t>(j)];
        d.block2.push_back({part.size - N, part.color, part.overlined});
    }
    d.block4.kind = p.kind;
    for (int j = N; j < static_cast<int>(parts.size()); ++j) {
        const auto& part = parts[static_cast<std::size_t>(j)];
        if (part.size == N) {
            d.block3.push_back(part);
        } else {
            d.block4.parts.push_back(part);
        }
    }
    return d;
}

ColoredPartition recompose(const BlockDecomposition& d) {
    if (d.durfee < 1) throw std::invalid_argument("recompose: Durfee size must be >= 1");
    if (static_cast<int>(d.block2.size()) != d.durfee)
        throw std::invalid_argument("recompose: Block II must have exactly N rows");
    std::vector<ColoredPart> parts;
    for (const auto& row : d.block2) {
        if (row.length < 0) throw std::invalid_argument("recompose: negative Block II row");
        parts.push_back({d.durfee + row.length, row.color, row.overlined});
    }
    for (const auto& part : d.block3) {
        if (part.size != d.durfee)
            throw std::invalid_argument("recompose: Block III part size must equal N");
        parts.push_back(part);
    }
    for (const auto& part : d.block4.parts) {
        if (part.size > d.durfee - 1)
            throw std::invalid_argument("recompose: Block IV part of size >= N");
        parts.push_back(part);
    }
    ColoredPartition p = make_partition(d.kind, std::move(parts));
    if (!(durfee_decompose(p) == d))
        throw std::invalid_argument("recompose: blocks do not reassemble into a partition "
                                    "with this decomposition");
    return p;
}

MultiPoly durfee_stratified_poly(PartitionKind kind, int r, int n, int N) {
    if (N < 1) throw std::invalid_argument("Durfee stratum index must be >= 1");
    const auto all = kind == PartitionKind::strict ? enum_strict(r, n) : enum_over(r, n);
    MultiPoly sum;
    for (const auto& p : all) {
        if (p.parts.empty()) continue;
        if (durfee_decompose(p).durfee == N) sum += partition_monomial(p);
    }
    return sum;
}

namespace {

/* Brute-force table of single-color overpartition generating polynomials in
 * z = z1, by weight < T, under a part-count regime. */
std::vector<MultiPoly> lemma_enumeration(int i, int T, bool exact, bool zero_allowed) {
    std::vector<MultiPoly> tab(static_cast<std::size_t>(T));
    const int min_size = zero_allowed ? 0 : 1;
    auto record = [&](int weight, int used, int zdeg) {
        if (exact && used != i) return;
        tab[static_cast<std::size_t>(weight)] +=
            MultiPoly::term(Monomial::of(Symbol::z(1), zdeg), 1);
    };
    auto rec = [&](auto&& self, int size, int used, int weight, int zdeg) -> void {
        if (size < min_size) {
            record(weight, used, zdeg);
            return;
        }
        self(self, size - 1, used, weight, zdeg);
        for (int m = 1; used + m <= i && weight + m * size < T; ++m) {
            self(self, size - 1, used + m, weight + m * size, zdeg);
            self(self, size - 1, used + m, weight + m * size, zdeg + 1);
        }
    };
    rec(rec, T - 1, 0, 0, 0);
    return tab;
}

LemmaCheck compare_lemma(const std::string& lemma, int i, const std::vector<MultiPoly>& tab,
                         const QSeries& closed) {
    LemmaCheck check{lemma, i, true, -1, "", ""};
    for (int n = 0; n < closed.order(); ++n) {
        if (tab[static_cast<std::size_t>(n)] != closed[n]) {
            check.pass = false;
            check.first_mismatch_n = n;
            check.enumerated = tab[static_cast<std::size_t>(n)].str();
            check.closed_form = closed[n].str();
            break;
        }
    }
    return check;
}

}  // namespace

LemmaReport verify_over_lemmas(int i_max, int T) {
    if (i_max < 1) throw std::invalid_argument("i_max must be >= 1");
    if (T < 2) throw std::invalid_argument("truncation order must be >= 2");
    const MultiPoly z = MultiPoly::variable(Symbol::z(1));
    LemmaReport report;
    for (int i = 1; i <= i_max; ++i) {
        const QSeries inv_qq = unit_inv(poch_finite(MultiPoly(-1), 1, 1, i, T));
        // (-zq;q)_i / (q;q)_i
        const QSeries at_most = mul(poch_finite(z, 1, 1, i, T), inv_qq);
        // q^i (-z;q)_i / (q;q)_i
        const QSeries exactly = shift(mul(poch_finite(z, 0, 1, i, T), inv_qq), i, T);
        // (-z;q)_i / (q;q)_i
        const QSeries zero_ok = mul(poch_finite(z, 0, 1, i, T), inv_qq);

        report.checks.push_back(
            compare_lemma("at_most", i, lemma_enumeration(i, T, false, false), at_most));
        report.checks.push_back(
            compare_lemma("exactly", i, lemma_enumeration(i, T, true, false), exactly));
        report.checks.push_back(
            compare_lemma("exactly_zero_ok", i, lemma_enumeration(i, T, true, true), zero_ok));
    }
    for (const auto& check : report.checks) report.all_pass = report.all_pass && check.pass;
    return report;
}

ColoredPartition parse_partition(std::string_view text) {
    std::vector<ColoredPart> parts;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto parse_int = [&](const char* what) {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start)
            throw std::invalid_argument(std::string("partition literal: expected ") + what +
                                        " at offset " + std::to_string(pos));
        return std::stoi(std::string(text.substr(start, pos - start)));
    };
    skip_ws();
    if (pos >= text.size()) throw std::invalid_argument("partition literal: empty input");
    while (true) {
        ColoredPart part{parse_int("part size"), 1, false};
        skip_ws();
        if (pos < text.size() && text[pos] == '[') {
            ++pos;
            part.color = parse_int("color index");
            skip_ws();
            if (pos >= text.size() || text[pos] != ']')
                throw std::invalid_argument("partition literal: expected ']' at offset " +
                                            std::to_string(pos));
            ++pos;
        }
        skip_ws();
        if (pos < text.size() && text[pos] == '~') {
            part.overlined = true;
            ++pos;
        }
        parts.push_back(part);
        skip_ws();
        if (pos >= text.size()) break;
        if (text[pos] != ',')
            throw std::invalid_argument("partition literal: expected ',' at offset " +
                                        std::to_string(pos));
        ++pos;
    }
    bool over = false;
    std::map<std::pair<int, int>, int> counts;
    for (const auto& p : parts) {
        if (p.overlined) over = true;
        if (++counts[{p.size, p.color}] > 1) over = true;
    }
    return make_partition(over ? PartitionKind::over : PartitionKind::strict, std::move(parts));
}

std::string format_partition(const ColoredPartition& p) {
    std::string out;
    for (const auto& part : p.parts) {
        if (!out.empty()) out += ",";
        out += std::to_string(part.size) + "[" + std::to_string(part.color) + "]";
        if (part.overlined) out += "~";
    }
    return out;
}

}  // namespace qident

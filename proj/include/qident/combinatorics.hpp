#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qident/polyring.hpp"

namespace qident {

enum class PartitionKind { strict, over };

struct ColoredPart {
    int size;   // >= 1 in a partition proper; 0 only inside Block II rows
    int color;  // 1-based
    bool overlined = false;

    bool operator==(const ColoredPart&) const = default;
};

/* An r-colored strict partition or overpartition. Parts are kept weakly
 * decreasing under the generalized order 1_{a1} < 1_{a2} < ... < 2_{a1} < ...,
 * i.e. sorted descending by (size, color); within a run of equal (size,
 * color) the overlined copy, if any, is the last one. */
struct ColoredPartition {
    PartitionKind kind = PartitionKind::strict;
    std::vector<ColoredPart> parts;

    int weight() const;
    bool operator==(const ColoredPartition&) const = default;
};

/* Sorts into canonical order and checks the invariants for the given kind:
 * strict = distinct sizes within each color and no overlines; over = at most
 * one overline per (size, color). Throws std::invalid_argument. */
ColoredPartition make_partition(PartitionKind kind, std::vector<ColoredPart> parts);

/* All r-colored strict partitions / overpartitions of weight n. */
std::vector<ColoredPartition> enum_strict(int r, int n);
std::vector<ColoredPartition> enum_over(int r, int n);

/* prod_j a_j^{#parts colored j} * z_j^{#overlined parts colored j}. */
MultiPoly partition_monomial(const ColoredPartition& p);

/* Sum of partition_monomial over the weight-n enumeration. */
MultiPoly gen_poly(PartitionKind kind, int r, int n);

struct Block2Row {
    int length;  // part size minus the Durfee side; >= 0
    int color;
    bool overlined = false;

    bool operator==(const Block2Row&) const = default;
};

/* The Durfee square (Block I, side N), the row remainders right of it
 * (Block II, one row per part meeting the square, zero-length rows keep
 * their color and overline flag), the parts of size exactly N below it
 * (Block III), and the rest (Block IV, largest part <= N-1). */
struct BlockDecomposition {
    PartitionKind kind = PartitionKind::strict;
    int durfee = 0;
    std::vector<Block2Row> block2;   // exactly durfee rows
    std::vector<ColoredPart> block3; // all of size durfee
    ColoredPartition block4;

    int weight() const;
    bool operator==(const BlockDecomposition&) const = default;
};

/* Throws std::invalid_argument on the empty partition (no Durfee square;
 * the N = 0 stratum is the leading 1 of the identities). */
BlockDecomposition durfee_decompose(const ColoredPartition& p);

/* Inverse of durfee_decompose; throws std::invalid_argument on blocks that
 * do not reassemble into a partition with this exact decomposition. */
ColoredPartition recompose(const BlockDecomposition& d);

/* Generating polynomial of the weight-n partitions whose Durfee square has
 * size exactly N. */
MultiPoly durfee_stratified_poly(PartitionKind kind, int r, int n, int N);

struct LemmaCheck {
    std::string lemma;  // "at_most", "exactly", "exactly_zero_ok"
    int parts_bound;    // the i in the closed forms
    bool pass;
    int first_mismatch_n = -1;
    std::string enumerated;
    std::string closed_form;
};

struct LemmaReport {
    bool all_pass = true;
    std::vector<LemmaCheck> checks;
};

/* Checks the three single-color overpartition counting lemmas against
 * brute-force enumeration, for 1 <= i <= i_max, coefficients below T:
 *   at_most          (0 not allowed, <= i parts)  vs (-zq;q)_i / (q;q)_i
 *   exactly          (0 not allowed, == i parts)  vs q^i (-z;q)_i / (q;q)_i
 *   exactly_zero_ok  (0 allowed,     == i parts)  vs (-z;q)_i / (q;q)_i   */
LemmaReport verify_over_lemmas(int i_max, int T);

/* Partition literal: comma-separated `size[color]` with a trailing `~` for
 * an overline, e.g. "2[2]~,2[1],1[2]~,1[1],1[1]~". The color defaults to 1
 * when omitted. Rejects overline-rule violations with a specific error. */
ColoredPartition parse_partition(std::string_view text);
std::string format_partition(const ColoredPartition& p);

}  // namespace qident

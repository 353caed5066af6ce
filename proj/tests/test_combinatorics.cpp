#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "qident/combinatorics.hpp"
#include "qident/qseries.hpp"

using namespace qident;

TEST_CASE("strict enumeration at small weights") {
    CHECK(enum_strict(1, 5).size() == 3);  // {5}, {4+1}, {3+2}
    CHECK(enum_strict(2, 2).size() == 3);  // {2_a1}, {2_a2}, {1_a1 + 1_a2}
    auto empty = enum_strict(3, 0);
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].parts.empty());
}

TEST_CASE("overpartition enumeration counts") {
    CHECK(enum_over(1, 1).size() == 2);  // {1}, {1bar}
    const int expected[] = {1, 2, 4, 8, 14, 24};
    for (int n = 0; n <= 5; ++n) CHECK(enum_over(1, n).size() == expected[n]);
}

TEST_CASE("a known 2-colored overpartition of 7 is enumerated") {
    const ColoredPartition target = parse_partition("2[2]~,2[1],1[2]~,1[1],1[1]~");
    CHECK(target.weight() == 7);
    bool found = false;
    for (const auto& p : enum_over(2, 7)) found = found || p == target;
    CHECK(found);
}

TEST_CASE("generating polynomials") {
    CHECK(gen_poly(PartitionKind::strict, 1, 5).str() == "a1 + 2*a1^2");
    CHECK(gen_poly(PartitionKind::over, 1, 1).str() == "a1 + a1*z1");
    // {2}, {2bar}, {1+1}, {1bar+1}
    CHECK(gen_poly(PartitionKind::over, 1, 2).str() == "a1 + a1^2 + a1*z1 + a1^2*z1");
}

TEST_CASE("durfee decomposition of simple partitions") {
    const BlockDecomposition d = durfee_decompose(parse_partition("1[1]"));
    CHECK(d.durfee == 1);
    REQUIRE(d.block2.size() == 1);
    CHECK(d.block2[0] == Block2Row{0, 1, false});
    CHECK(d.block3.empty());
    CHECK(d.block4.parts.empty());

    const BlockDecomposition d5 = durfee_decompose(parse_partition("5[1]"));
    CHECK(d5.durfee == 1);
    REQUIRE(d5.block2.size() == 1);
    CHECK(d5.block2[0] == Block2Row{4, 1, false});
    CHECK(d5.block3.empty());
    CHECK(d5.block4.parts.empty());
}

TEST_CASE("durfee decomposition of the r=2 weight-8 example") {
    // {3_a1, 2_a2, 2_a1, 1_a2}: N = 2, Block II rows (1,a1),(0,a2),
    // Block III = [2_a1], Block IV = {1_a2}
    const BlockDecomposition d = durfee_decompose(parse_partition("3[1],2[2],2[1],1[2]"));
    CHECK(d.durfee == 2);
    REQUIRE(d.block2.size() == 2);
    CHECK(d.block2[0] == Block2Row{1, 1, false});
    CHECK(d.block2[1] == Block2Row{0, 2, false});
    REQUIRE(d.block3.size() == 1);
    CHECK(d.block3[0] == ColoredPart{2, 1, false});
    CHECK(d.block4.parts == std::vector<ColoredPart>{{1, 2, false}});
    CHECK(d.weight() == 8);
}

TEST_CASE("decompose rejects the empty partition") {
    CHECK_THROWS_AS(durfee_decompose(ColoredPartition{}), std::invalid_argument);
}

TEST_CASE("recompose inverts decompose") {
    const BlockDecomposition d = durfee_decompose(parse_partition("1[1]"));
    CHECK(recompose(d) == parse_partition("1[1]"));
    for (int n = 1; n <= 7; ++n) {
        for (const auto& p : enum_strict(2, n)) CHECK(recompose(durfee_decompose(p)) == p);
        for (const auto& p : enum_over(2, n)) CHECK(recompose(durfee_decompose(p)) == p);
    }
}

TEST_CASE("recompose rejects inconsistent blocks") {
    BlockDecomposition d = durfee_decompose(parse_partition("3[1],2[2],2[1],1[2]"));
    BlockDecomposition bad = d;
    bad.block4.parts.push_back({5, 1, false});  // block4 part >= N
    CHECK_THROWS_AS(recompose(bad), std::invalid_argument);
    bad = d;
    bad.block2.pop_back();  // wrong row count
    CHECK_THROWS_AS(recompose(bad), std::invalid_argument);
    bad = d;
    bad.block3[0].size = 1;  // block3 part of size != N
    CHECK_THROWS_AS(recompose(bad), std::invalid_argument);
}

TEST_CASE("weight conservation in every decomposition") {
    for (int n = 1; n <= 8; ++n) {
        for (const auto& p : enum_over(2, n)) {
            const BlockDecomposition d = durfee_decompose(p);
            CHECK(d.weight() == p.weight());
        }
    }
}

TEST_CASE("durfee strata partition the enumeration") {
    for (int n = 1; n <= 8; ++n) {
        for (PartitionKind kind : {PartitionKind::strict, PartitionKind::over}) {
            MultiPoly total;
            for (int N = 1; N * N <= n; ++N) total += durfee_stratified_poly(kind, 2, n, N);
            CHECK(total == gen_poly(kind, 2, n));
        }
    }
    // {5} and {4+1} have Durfee size 1 (only one part >= 2 in {4+1}); {3+2} has size 2
    CHECK(durfee_stratified_poly(PartitionKind::strict, 1, 5, 1).str() == "a1 + a1^2");
    CHECK(durfee_stratified_poly(PartitionKind::strict, 1, 5, 2).str() == "a1^2");
}

TEST_CASE("overline legality in enumerated overpartitions") {
    for (int n = 0; n <= 6; ++n) {
        for (const auto& p : enum_over(2, n)) {
            std::map<std::pair<int, int>, int> overlines;
            for (const auto& part : p.parts)
                if (part.overlined) ++overlines[{part.size, part.color}];
            for (const auto& [key, count] : overlines) CHECK(count <= 1);
        }
    }
}

TEST_CASE("overpartition counting lemmas at small scale") {
    const LemmaReport report = verify_over_lemmas(3, 10);
    CHECK(report.all_pass);
    CHECK(report.checks.size() == 9);
    for (const auto& check : report.checks) CHECK(check.pass);
}

TEST_CASE("lemma i=1 shapes") {
    // exactly one part, 0 not allowed: {n}, {nbar} for n >= 1 -> q(1+z)/(1-q)
    const LemmaReport report = verify_over_lemmas(1, 6);
    CHECK(report.all_pass);
}

TEST_CASE("partition literal parsing") {
    const ColoredPartition p = parse_partition("2[2]~,2[1],1[2]~,1[1],1[1]~");
    CHECK(p.kind == PartitionKind::over);
    CHECK(p.weight() == 7);
    CHECK(format_partition(p) == "2[2]~,2[1],1[2]~,1[1],1[1]~");
    // color defaults to 1
    CHECK(parse_partition("3,2,1") == parse_partition("3[1],2[1],1[1]"));
    // canonical order is restored on parse
    CHECK(format_partition(parse_partition("1[1],2[1]")) == "2[1],1[1]");
}

TEST_CASE("partition literal rejections") {
    CHECK_THROWS_WITH_AS(parse_partition("1[1]~,1[1]~"),
                         doctest::Contains("more than one overlined copy"),
                         std::invalid_argument);
    CHECK_THROWS_AS(parse_partition(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("2[]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("2["), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("0[1]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("x"), std::invalid_argument);
}

TEST_CASE("make_partition validates strictness") {
    CHECK_THROWS_AS(make_partition(PartitionKind::strict, {{2, 1, false}, {2, 1, false}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_partition(PartitionKind::strict, {{2, 1, true}}),
                    std::invalid_argument);
}

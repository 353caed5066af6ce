#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qident/qseries.hpp"

namespace qident {

enum class IdentityName {
    sylvester,
    pentagonal,
    theta_gauss,
    theta_jacobi,
    alladi,
    overpartition_cft,
    cauchy_multi,
    dousse_kim,
    ped,
    alladi_y,
};

std::string_view to_string(IdentityName name);
std::optional<IdentityName> identity_from_string(std::string_view s);

/* True for the identities that carry no color parameter; their color count
 * is forced to 1. */
bool single_variable(IdentityName name);

struct IdentitySpec {
    IdentityName name;
    int colors;
    int order;

    /* Forces colors = 1 for single-variable identities. */
    IdentitySpec normalized() const;
    /* Throws std::invalid_argument on colors < 1 or order < 2. */
    void validate() const;
};

/* Both sides of an identity at a common truncation order, plus the number
 * of outer-sum terms the right-hand side needed. */
struct IdentitySides {
    QSeries lhs;
    QSeries rhs;
    int terms_built = 0;
};

IdentitySides build_sylvester(int T);
IdentitySides build_pentagonal(int T);  // one-sided form is the canonical rhs
QSeries pentagonal_two_sided(int T);
IdentitySides build_theta_gauss(int T);
IdentitySides build_theta_jacobi(int T);
IdentitySides build_alladi(int r, int T);
IdentitySides build_overpartition_cft(int r, int T);
IdentitySides build_cauchy_multi(int r, int T);
QSeries cauchy_classical_rhs(int T);  // 1 + sum a^N q^{N^2} / ((q;q)_N (aq;q)_N)
IdentitySides build_dousse_kim(int T);
IdentitySides build_ped(int r, int T);
IdentitySides build_alladi_y(int r, int T);

/* Individual N-terms of the multi-dimensional right-hand sides, at full
 * truncation order T. Terms whose q^{N^2} (resp. q^{2N^2-N}) prefactor lies
 * at or above T are zero series; a regression test asserts that adding one
 * such term changes nothing. */
QSeries alladi_rhs_term(int r, int N, int T);
QSeries overpartition_rhs_term(int r, int N, int T);
QSeries cauchy_rhs_term(int r, int N, int T);
QSeries ped_rhs_term(int r, int N, int T);
QSeries alladi_y_rhs_term(int r, int N, int T);

/* Data-driven catalog: one entry per identity, builders take (colors, T)
 * uniformly. Names match the CLI contract exactly. */
struct IdentityEntry {
    IdentityName name;
    std::string_view name_str;
    bool single_variable;
    IdentitySides (*build)(int r, int T);
};

const std::vector<IdentityEntry>& identity_catalog();
const IdentityEntry& catalog_entry(IdentityName name);

}  // namespace qident

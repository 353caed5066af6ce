#pragma once

#include <optional>
#include <vector>

#include "qident/polyring.hpp"

namespace qident {

/* Formal power series in q truncated at an exclusive order T: coeffs[n] is
 * the coefficient of q^n for 0 <= n < T, exact in that range, with no claim
 * at n >= T. Every arithmetic result keeps this guarantee. */
class QSeries {
public:
    explicit QSeries(int order);  // the zero series; order >= 1
    static QSeries one(int order);

    int order() const { return static_cast<int>(coeffs_.size()); }
    const MultiPoly& operator[](int n) const { return coeffs_[static_cast<std::size_t>(n)]; }
    MultiPoly& operator[](int n) { return coeffs_[static_cast<std::size_t>(n)]; }

    bool is_zero() const;

private:
    std::vector<MultiPoly> coeffs_;
};

/* Coefficientwise sum; result order is min(order(f), order(g)). */
QSeries add(const QSeries& f, const QSeries& g);

/* Truncated Cauchy convolution: out[n] = sum_{k=0..n} f[k]*g[n-k]. */
QSeries mul(const QSeries& f, const QSeries& g);

/* c * q^e as a series of the given order (zero series when e >= order). */
QSeries monomial_series(const MultiPoly& c, int e, int order);

/* f * c * q^e, truncated to f's order. */
QSeries shift_scale(const QSeries& f, const MultiPoly& c, int e);
QSeries shift(const QSeries& f, int e, int order);

/* f * (1 + c*q^e) without a full convolution: out[n] = f[n] + c*f[n-e]. */
QSeries mul_one_plus(const QSeries& f, const MultiPoly& c, int e);

/* prod_{k=0}^{n-1} (1 + c*q^{e0 + k*step}) truncated at `order`. Factors at
 * or beyond the order are 1 + O(q^order) and are skipped. (a;q)_n style
 * products are obtained by passing c = -a; (c;q)_0 = 1. */
QSeries poch_finite(const MultiPoly& c, int e0, int step, int n, int order);

/* prod_{k>=0} (1 + c*q^{e0 + k*step}) truncated at `order`; requires
 * e0 >= 1 so that only finitely many factors matter. */
QSeries poch_infinite(const MultiPoly& c, int e0, int step, int order);

/* sum_{m>=0} c^m q^{e*m}, i.e. 1/(1 - c*q^e); requires e >= 1. */
QSeries geom_inv(const MultiPoly& c, int e, int order);

/* Multiplicative inverse of a series with constant term 1, by the
 * triangular recurrence g[n] = -sum_{k=1..n} f[k]*g[n-k]. */
QSeries unit_inv(const QSeries& f);

struct Mismatch {
    int exponent;
    MultiPoly lhs;
    MultiPoly rhs;
};

/* First coefficient mismatch below `upto`, or nullopt when the series agree
 * there. Requires upto <= min(order(f), order(g)) so a pass is never
 * vacuous. */
std::optional<Mismatch> first_mismatch(const QSeries& f, const QSeries& g, int upto);
bool equal_upto(const QSeries& f, const QSeries& g, int upto);

/* Applies MultiPoly::strict_limit coefficientwise; rethrows StrictLimitError
 * with the offending q-exponent attached. */
QSeries strict_limit_series(const QSeries& f);

/* Coefficientwise substitution. */
QSeries substitute(const QSeries& f, const std::vector<std::pair<Symbol, Int>>& bindings);

}  // namespace qident

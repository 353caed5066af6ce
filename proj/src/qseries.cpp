#include "qident/qseries.hpp"

#include <algorithm>

namespace qident {

QSeries::QSeries(int order) {
    if (order < 1) throw std::invalid_argument("series order must be >= 1");
    coeffs_.resize(static_cast<std::size_t>(order));
}

QSeries QSeries::one(int order) {
    QSeries s(order);
    s[0] = MultiPoly(1);
    return s;
}

bool QSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const MultiPoly& p) { return p.is_zero(); });
}

QSeries add(const QSeries& f, const QSeries& g) {
    const int order = std::min(f.order(), g.order());
    QSeries out(order);
    for (int n = 0; n < order; ++n) {
        out[n] = f[n];
        out[n] += g[n];
    }
    return out;
}

QSeries mul(const QSeries& f, const QSeries& g) {
    const int order = std::min(f.order(), g.order());
    QSeries out(order);
    for (int k = 0; k < order; ++k) {
        if (f[k].is_zero()) continue;
        for (int j = 0; j + k < order; ++j) {
            if (g[j].is_zero()) continue;
            out[k + j].add_product(f[k], g[j]);
        }
    }
    return out;
}

QSeries monomial_series(const MultiPoly& c, int e, int order) {
    QSeries out(order);
    if (e < order) out[e] = c;
    return out;
}

QSeries shift_scale(const QSeries& f, const MultiPoly& c, int e) {
    QSeries out(f.order());
    for (int n = 0; n + e < f.order(); ++n) {
        if (f[n].is_zero()) continue;
        out[n + e].add_product(f[n], c);
    }
    return out;
}

QSeries shift(const QSeries& f, int e, int order) {
    QSeries out(order);
    for (int n = 0; n + e < order && n < f.order(); ++n) out[n + e] = f[n];
    return out;
}

QSeries mul_one_plus(const QSeries& f, const MultiPoly& c, int e) {
    QSeries out = f;
    for (int n = 0; n + e < f.order(); ++n) {
        if (f[n].is_zero()) continue;
        out[n + e].add_product(f[n], c);
    }
    return out;
}

QSeries poch_finite(const MultiPoly& c, int e0, int step, int n, int order) {
    if (e0 < 0 || step < 1 || n < 0) throw std::invalid_argument("poch_finite: bad parameters");
    QSeries out = QSeries::one(order);
    for (int k = 0; k < n; ++k) {
        const int e = e0 + k * step;
        if (e >= order) break;  // remaining factors are 1 below the order
        out = mul_one_plus(out, c, e);
    }
    return out;
}

QSeries poch_infinite(const MultiPoly& c, int e0, int step, int order) {
    if (e0 < 1)
        throw std::invalid_argument("poch_infinite: e0 must be >= 1 (the product would not "
                                    "converge formally)");
    if (step < 1) throw std::invalid_argument("poch_infinite: step must be >= 1");
    QSeries out = QSeries::one(order);
    for (int e = e0; e < order; e += step) out = mul_one_plus(out, c, e);
    return out;
}

QSeries geom_inv(const MultiPoly& c, int e, int order) {
    if (e < 1) throw std::invalid_argument("geom_inv: exponent must be >= 1");
    QSeries out(order);
    MultiPoly power(1);
    for (int n = 0; n < order; n += e) {
        out[n] = power;
        power *= c;
    }
    return out;
}

QSeries unit_inv(const QSeries& f) {
    if (!f[0].is_one()) throw std::invalid_argument("unit_inv: constant term must be 1");
    const int order = f.order();
    QSeries g(order);
    g[0] = MultiPoly(1);
    for (int n = 1; n < order; ++n) {
        MultiPoly acc;
        for (int k = 1; k <= n; ++k) {
            if (f[k].is_zero() || g[n - k].is_zero()) continue;
            acc.add_product(f[k], g[n - k]);
        }
        g[n] = -acc;
    }
    return g;
}

std::optional<Mismatch> first_mismatch(const QSeries& f, const QSeries& g, int upto) {
    if (upto < 1) throw std::invalid_argument("comparison order must be >= 1");
    if (upto > f.order() || upto > g.order())
        throw std::invalid_argument("comparison order exceeds an operand's truncation order");
    for (int n = 0; n < upto; ++n) {
        if (f[n] != g[n]) return Mismatch{n, f[n], g[n]};
    }
    return std::nullopt;
}

bool equal_upto(const QSeries& f, const QSeries& g, int upto) {
    return !first_mismatch(f, g, upto).has_value();
}

QSeries strict_limit_series(const QSeries& f) {
    QSeries out(f.order());
    for (int n = 0; n < f.order(); ++n) {
        try {
            out[n] = f[n].strict_limit();
        } catch (const StrictLimitError& e) {
            throw StrictLimitError(std::string(e.what()) + " (coefficient of q^" +
                                       std::to_string(n) + ")",
                                   n);
        }
    }
    return out;
}

QSeries substitute(const QSeries& f, const std::vector<std::pair<Symbol, Int>>& bindings) {
    QSeries out(f.order());
    for (int n = 0; n < f.order(); ++n) out[n] = f[n].substitute(bindings);
    return out;
}

}  // namespace qident

#include "qident/identities.hpp"

#include <stdexcept>

namespace qident {

namespace {

MultiPoly A(int j) { return MultiPoly::variable(Symbol::a(j)); }
MultiPoly Z(int j) { return MultiPoly::variable(Symbol::z(j)); }
MultiPoly AZ(int j) { return A(j) * Z(j); }
MultiPoly AY(int j) { return A(j) * MultiPoly::variable(Symbol::y()); }

int binom2(int n) { return n * (n - 1) / 2; }  // binom(0,2) = binom(1,2) = 0

int pentagonal_exp(int k) { return (3 * k * k - k) / 2; }

void check_order(int T) {
    if (T < 2) throw std::invalid_argument("truncation order must be >= 2");
}

void check_colors(int r) {
    if (r < 1) throw std::invalid_argument("color count must be >= 1");
}

/* All (i_1, ..., i_r) of nonnegative integers with sum N, in lexicographic
 * order. The order is mathematically irrelevant (the terms are summed) and
 * fixed only so intermediate dumps are reproducible. */
std::vector<std::vector<int>> compositions(int N, int r) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(r), 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == r - 1) {
            cur[static_cast<std::size_t>(pos)] = remaining;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            cur[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    rec(rec, 0, N);
    return out;
}

/* out += c * q^e * f, where out has a (possibly) larger order than f. */
void add_shifted(QSeries& out, const QSeries& f, const MultiPoly& c, int e) {
    for (int n = 0; n < f.order() && n + e < out.order(); ++n) {
        if (f[n].is_zero()) continue;
        out[n + e].add_product(f[n], c);
    }
}

/* 1/(q;q)_n and 1/(q^2;q^2)_n style factors. */
QSeries inv_qpoch(int n, int e0, int step, int order) {
    return unit_inv(poch_finite(MultiPoly(-1), e0, step, n, order));
}

}  // namespace

std::string_view to_string(IdentityName name) {
    switch (name) {
        case IdentityName::sylvester: return "sylvester";
        case IdentityName::pentagonal: return "pentagonal";
        case IdentityName::theta_gauss: return "theta_gauss";
        case IdentityName::theta_jacobi: return "theta_jacobi";
        case IdentityName::alladi: return "alladi";
        case IdentityName::overpartition_cft: return "overpartition_cft";
        case IdentityName::cauchy_multi: return "cauchy_multi";
        case IdentityName::dousse_kim: return "dousse_kim";
        case IdentityName::ped: return "ped";
        case IdentityName::alladi_y: return "alladi_y";
    }
    throw std::logic_error("unreachable");
}

std::optional<IdentityName> identity_from_string(std::string_view s) {
    for (const auto& entry : identity_catalog()) {
        if (entry.name_str == s) return entry.name;
    }
    return std::nullopt;
}

bool single_variable(IdentityName name) {
    switch (name) {
        case IdentityName::sylvester:
        case IdentityName::pentagonal:
        case IdentityName::theta_gauss:
        case IdentityName::theta_jacobi:
        case IdentityName::dousse_kim: return true;
        default: return false;
    }
}

IdentitySpec IdentitySpec::normalized() const {
    IdentitySpec s = *this;
    if (single_variable(s.name)) s.colors = 1;
    return s;
}

void IdentitySpec::validate() const {
    check_colors(colors);
    check_order(order);
}

IdentitySides build_sylvester(int T) {
    check_order(T);
    QSeries lhs = poch_infinite(A(1), 1, 1, T);
    QSeries rhs = QSeries::one(T);
    int built = 0;
    for (int k = 1; pentagonal_exp(k) < T; ++k) {
        const int e = pentagonal_exp(k);
        const int rem = T - e;
        // (-a q;q)_{k-1} (1 + a q^{2k}) / (q;q)_k
        QSeries t = poch_finite(A(1), 1, 1, k - 1, rem);
        t = mul(t, inv_qpoch(k, 1, 1, rem));
        t = mul_one_plus(t, A(1), 2 * k);
        add_shifted(rhs, t, MultiPoly::term(Monomial::of(Symbol::a(1), k), 1), e);
        ++built;
    }
    return {std::move(lhs), std::move(rhs), built};
}

IdentitySides build_pentagonal(int T) {
    check_order(T);
    QSeries lhs = poch_infinite(MultiPoly(-1), 1, 1, T);
    QSeries rhs = QSeries::one(T);
    int built = 0;
    for (int k = 1; pentagonal_exp(k) < T; ++k) {
        const int e = pentagonal_exp(k);
        const MultiPoly sign(k % 2 == 0 ? 1 : -1);
        rhs[e] += sign;
        if (e + k < T) rhs[e + k] += sign;  // the (1 + q^k) companion exponent
        ++built;
    }
    return {std::move(lhs), std::move(rhs), built};
}

QSeries pentagonal_two_sided(int T) {
    check_order(T);
    QSeries s(T);
    s[0] = MultiPoly(1);
    for (int k = 1; pentagonal_exp(k) < T; ++k) {
        const MultiPoly sign(k % 2 == 0 ? 1 : -1);
        s[pentagonal_exp(k)] += sign;
        const int eneg = (3 * k * k + k) / 2;  // index -k
        if (eneg < T) s[eneg] += sign;
    }
    return s;
}

IdentitySides build_theta_gauss(int T) {
    check_order(T);
    QSeries lhs = mul(poch_infinite(MultiPoly(-1), 1, 1, T),
                      unit_inv(poch_infinite(MultiPoly(1), 1, 1, T)));
    QSeries rhs(T);
    rhs[0] = MultiPoly(1);
    int built = 0;
    for (int k = 1; k * k < T; ++k) {
        rhs[k * k] += MultiPoly(k % 2 == 0 ? 2 : -2);  // k and -k coincide
        ++built;
    }
    return {std::move(lhs), std::move(rhs), built};
}

IdentitySides build_theta_jacobi(int T) {
    check_order(T);
    // (q^2;q^2)_inf / (-q;q^2)_inf
    QSeries lhs = mul(poch_infinite(MultiPoly(-1), 2, 2, T),
                      unit_inv(poch_infinite(MultiPoly(1), 1, 2, T)));
    QSeries rhs(T);
    rhs[0] = MultiPoly(1);
    int built = 0;
    for (int k = 1; 2 * k * k - k < T; ++k) {
        const MultiPoly sign(k % 2 == 0 ? 1 : -1);
        rhs[2 * k * k - k] += sign;
        if (2 * k * k + k < T) rhs[2 * k * k + k] += sign;  // index -k
        ++built;
    }
    return {std::move(lhs), std::move(rhs), built};
}

QSeries alladi_rhs_term(int r, int N, int T) {
    QSeries out(T);
    const int sq = N * N;
    if (sq >= T) return out;
    const int rem = T - sq;

    QSeries boundary = QSeries::one(rem);
    for (int j = 1; j <= r; ++j) boundary = mul(boundary, poch_finite(A(j), 1, 1, N - 1, rem));

    QSeries inner(rem);
    for (const auto& comp : compositions(N, r)) {
        int qexp = 0;
        Monomial amono;
        for (int j = 1; j <= r; ++j) {
            qexp += binom2(comp[static_cast<std::size_t>(j - 1)]);
            amono = amono.times(Monomial::of(Symbol::a(j), comp[static_cast<std::size_t>(j - 1)]));
        }
        if (qexp >= rem) continue;

        QSeries f = QSeries::one(rem);
        for (int j = 1; j <= r; ++j)
            f = mul(f, inv_qpoch(comp[static_cast<std::size_t>(j - 1)], 1, 1, rem));

        // 1 + sum_s q^{i_1+...+i_s} a_s q^N prod_{k<s} (1 + a_k q^N)
        QSeries bracket = QSeries::one(rem);
        int prefix = 0;
        for (int s = 1; s <= r; ++s) {
            prefix += comp[static_cast<std::size_t>(s - 1)];
            QSeries t = monomial_series(A(s), prefix + N, rem);
            for (int k = 1; k < s; ++k) t = mul_one_plus(t, A(k), N);
            bracket = add(bracket, t);
        }
        f = mul(f, bracket);
        add_shifted(inner, f, MultiPoly::term(amono, 1), qexp);
    }
    add_shifted(out, mul(boundary, inner), MultiPoly(1), sq);
    return out;
}

IdentitySides build_alladi(int r, int T) {
    check_colors(r);
    check_order(T);
    QSeries lhs = QSeries::one(T);
    for (int j = 1; j <= r; ++j) lhs = mul(lhs, poch_infinite(A(j), 1, 1, T));
    QSeries rhs = QSeries::one(T);
    int built = 0;
    for (int N = 1; N * N < T; ++N) {
        rhs = add(rhs, alladi_rhs_term(r, N, T));
        ++built;
    }
    return {std::move(lhs), std::move(rhs), built};
}

QSeries overpartition_rhs_term(int r, int N, int T) {
    QSeries out(T);
    const int sq = N * N;
    if (sq >= T) return out;
    const int rem = T - sq;

    QSeries boundary = QSeries::one(rem);
    for (int j = 1; j <= r; ++j) {
        boundary = mul(boundary, poch_finite(AZ(j), 1, 1, N - 1, rem));
        boundary = mul(boundary, unit_inv(poch_finite(-A(j), 1, 1, N - 1, rem)));
    }

    QSeries inner(rem);
    for (const auto& comp : compositions(N, r)) {
        Monomial amono;
        QSeries f = QSeries::one(rem);
        for (int j = 1; j <= r; ++j) {
            const int ij = comp[static_cast<std::size_t>(j - 1)];
            amono = amono.times(Monomial::of(Symbol::a(j), ij));
            f = mul(f, poch_finite(Z(j), 0, 1, ij, rem));  // (-z_j;q)_{i_j}
            f = mul(f, inv_qpoch(ij, 1, 1, rem));
        }

        // 1 + sum_s q^{i_1+...+i_{s-1}} (1 + z_s q^{i_s}) a_s q^N / (1 - a_s q^N)
        //         * prod_{k<s} (1 + a_k z_k q^N) / (1 - a_k q^N)
        QSeries bracket = QSeries::one(rem);
        int prefix_before = 0;
        for (int s = 1; s <= r; ++s) {
            const int is = comp[static_cast<std::size_t>(s - 1)];
            QSeries t = shift_scale(geom_inv(A(s), N, rem), A(s), N);
            t = mul_one_plus(t, Z(s), is);
            for (int k = 1; k < s; ++k) {
                t = mul_one_plus(t, AZ(k), N);
                t = mul(t, geom_inv(A(k), N, rem));
            }
            t = shift(t, prefix_before, rem);
            bracket = add(bracket, t);
            prefix_before += is;
        }
        f = mul(f, bracket);
        add_shifted(inner, f, MultiPoly::term(amono, 1), 0);
    }
    add_shifted(out, mul(boundary, inner), MultiPoly(1), sq);
    return out;
}

IdentitySides build_overpartition_cft(int r, int T) {
    check_colors(r);
    check_order(T);
    QSeries lhs = QSeries::one(T);
    for (int j = 1; j <= r; ++j) {
        lhs = mul(lhs, poch_infinite(AZ(j), 1, 1, T));
        lhs = mul(lhs, unit_inv(poch_infinite(-A(j), 1, 1, T)));
    }
    QSeries rhs = QSeries::one(T);
    int built = 0;
    for (int N = 1; N * N < T; ++N) {
        rhs = add(rhs, overpartition_rhs_term(r, N, T));
        ++built;
    }
    return {std::move(lhs), std::move(rhs), built};
}

QSeries cauchy_rhs_term(int r, int N, int T) {
    QSeries out(T);
    const int sq = N * N;
    if (sq >= T) return out;
    const int rem = T - sq;

    QSeries boundary = QSeries::one(rem);
    for (int j = 1; j <= r; ++j)
        boundary = mul(boundary, unit_inv(poch_finite(-A(j), 1, 1, N - 1, rem)));

    QSeries inner(rem);
    for (const auto& comp : compositions(N, r)) {
        Monomial amono;
        QSeries f = QSeries::one(rem);
        for (int j = 1; j <= r; ++j) {
            const int ij = comp[static_cast<std::size_t>(j - 1)];
            amono = amono.times(Monomial::of(Symbol::a(j), ij));
            f = mul(f, inv_qpoch(ij, 1, 1, rem));
        }
        QSeries bracket = QSeries::one(rem);
        int prefix_before = 0;
        for (int s = 1; s <= r; ++s) {
            QSeries t = shift_scale(geom_inv(A(s), N, rem), A(s), N);
            for (int k = 1; k < s; ++k) t = mul(t, geom_inv(A(k), N, rem));
            t = shift(t, prefix_before, rem);
            bracket = add(bracket, t);
            prefix_before += comp[static_cast<std::size_t>(s - 1)];
        }
        f = mul(f, bracket);
        add_shifted(inner, f, MultiPoly::term(amono, 1), 0);
    }
    add_shifted(out, mul(boundary, inner), MultiPoly(1), sq);
    return out;
}

IdentitySides build_cauchy_multi(int r, int T) {
    check_colors(r);
    check_order(T);
    QSeries lhs = QSeries::one(T);
    for (int j = 1; j <= r; ++j) lhs = mul(lhs, unit_inv(poch_infinite(-A(j), 1, 1, T)));
    QSeries rhs = QSeries::one(T);
    int built = 0;
    for (int N = 1; N * N < T; ++N) {
        rhs = add(rhs, cauchy_rhs_term(r, N, T));
        ++built;
    }
    return {std::move(lhs), std::move(rhs), built};
}

QSeries cauchy_classical_rhs(int T) {
    check_order(T);
    QSeries rhs = QSeries::one(T);
    for (int N = 1; N * N < T; ++N) {
        const int rem = T - N * N;
        QSeries t = inv_qpoch(N, 1, 1, rem);
        t = mul(t, unit_inv(poch_finite(-A(1), 1, 1, N, rem)));
        add_shifted(rhs, t, MultiPoly::term(Monomial::of(Symbol::a(1), N), 1), N * N);
    }
    return rhs;
}

IdentitySides build_dousse_kim(int T) {
    check_order(T);
    QSeries lhs = mul(poch_infinite(A(1), 1, 1, T), unit_inv(poch_infinite(-A(1), 1, 1, T)));
    QSeries rhs = QSeries::one(T);
    int built = 0;
    auto quotient = [](int m, int rem) {
        // (-q;q)_m (-aq;q)_m / ((q;q)_m (aq;q)_m)
        QSeries t = poch_finite(MultiPoly(1), 1, 1, m, rem);
        t = mul(t, poch_finite(A(1), 1, 1, m, rem));
        t = mul(t, inv_qpoch(m, 1, 1, rem));
        t = mul(t, unit_inv(poch_finite(-A(1), 1, 1, m, rem)));
        return t;
    };
    for (int N = 1; N * N < T; ++N) {
        const int rem = T - N * N;
        QSeries t = add(quotient(N - 1, rem), quotient(N, rem));
        add_shifted(rhs, t, MultiPoly::term(Monomial::of(Symbol::a(1), N), 1), N * N);
        ++built;
    }
    return {std::move(lhs), std::move(rhs), built};
}

QSeries ped_rhs_term(int r, int N, int T) {
    QSeries out(T);
    const int sq = 2 * N * N - N;
    if (sq >= T) return out;
    const int rem = T - sq;

    QSeries boundary = QSeries::one(rem);
    for (int j = 1; j <= r; ++j) {
        // (-a_j z_j q^2;q^2)_{N-1} / (a_j q;q^2)_{N-1}: even exponents above,
        // odd below, the same split as the ped product side
        boundary = mul(boundary, poch_finite(AZ(j), 2, 2, N - 1, rem));
        boundary = mul(boundary, unit_inv(poch_finite(-A(j), 1, 2, N - 1, rem)));
    }

    QSeries inner(rem);
    for (const auto& comp : compositions(N, r)) {
        Monomial amono;
        QSeries f = QSeries::one(rem);
        for (int j = 1; j <= r; ++j) {
            const int ij = comp[static_cast<std::size_t>(j - 1)];
            amono = amono.times(Monomial::of(Symbol::a(j), ij));
            f = mul(f, poch_finite(Z(j), 1, 2, ij, rem));  // (-z_j q;q^2)_{i_j}
            f = mul(f, inv_qpoch(ij, 2, 2, rem));          // 1/(q^2;q^2)_{i_j}
        }

        // 1 + sum_s q^{2(i_1+...+i_{s-1})} (1 + z_s q^{2 i_s + 1})
        //         * a_s q^{2N-1} / (1 - a_s q^{2N-1})
        //         * prod_{k<s} (1 + a_k z_k q^{2N}) / (1 - a_k q^{2N-1})
        QSeries bracket = QSeries::one(rem);
        int prefix_before = 0;
        for (int s = 1; s <= r; ++s) {
            const int is = comp[static_cast<std::size_t>(s - 1)];
            QSeries t = shift_scale(geom_inv(A(s), 2 * N - 1, rem), A(s), 2 * N - 1);
            t = mul_one_plus(t, Z(s), 2 * is + 1);
            for (int k = 1; k < s; ++k) {
                t = mul_one_plus(t, AZ(k), 2 * N);
                t = mul(t, geom_inv(A(k), 2 * N - 1, rem));
            }
            t = shift(t, 2 * prefix_before, rem);
            bracket = add(bracket, t);
            prefix_before += is;
        }
        f = mul(f, bracket);
        add_shifted(inner, f, MultiPoly::term(amono, 1), 0);
    }
    add_shifted(out, mul(boundary, inner), MultiPoly(1), sq);
    return out;
}

IdentitySides build_ped(int r, int T) {
    check_colors(r);
    check_order(T);
    QSeries lhs = QSeries::one(T);
    for (int j = 1; j <= r; ++j) {
        lhs = mul(lhs, poch_infinite(AZ(j), 2, 2, T));       // (-a_j z_j q^2;q^2)_inf
        lhs = mul(lhs, unit_inv(poch_infinite(-A(j), 1, 2, T)));  // 1/(a_j q;q^2)_inf
    }
    QSeries rhs = QSeries::one(T);
    int built = 0;
    for (int N = 1; 2 * N * N - N < T; ++N) {
        rhs = add(rhs, ped_rhs_term(r, N, T));
        ++built;
    }
    return {std::move(lhs), std::move(rhs), built};
}

QSeries alladi_y_rhs_term(int r, int N, int T) {
    QSeries out(T);
    const int sq = N * N;
    if (sq >= T) return out;
    const int rem = T - sq;

    QSeries boundary = QSeries::one(rem);
    for (int j = 1; j <= r; ++j) boundary = mul(boundary, poch_finite(AY(j), 1, 1, N - 1, rem));

    QSeries inner(rem);
    for (const auto& comp : compositions(N, r)) {
        int qexp = 0;
        Monomial amono;
        for (int j = 1; j <= r; ++j) {
            qexp += binom2(comp[static_cast<std::size_t>(j - 1)]);
            amono = amono.times(Monomial::of(Symbol::a(j), comp[static_cast<std::size_t>(j - 1)]));
        }
        if (qexp >= rem) continue;

        QSeries f = QSeries::one(rem);
        for (int j = 1; j <= r; ++j)
            f = mul(f, inv_qpoch(comp[static_cast<std::size_t>(j - 1)], 1, 1, rem));

        QSeries bracket = QSeries::one(rem);
        int prefix = 0;
        for (int s = 1; s <= r; ++s) {
            prefix += comp[static_cast<std::size_t>(s - 1)];
            QSeries t = monomial_series(AY(s), prefix + N, rem);
            for (int k = 1; k < s; ++k) t = mul_one_plus(t, AY(k), N);
            bracket = add(bracket, t);
        }
        f = mul(f, bracket);
        add_shifted(inner, f, MultiPoly::term(amono, 1), qexp);
    }
    // outer weight (y q^N)^N = y^N q^{N^2}
    add_shifted(out, mul(boundary, inner),
                MultiPoly::term(Monomial::of(Symbol::y(), N), 1), sq);
    return out;
}

IdentitySides build_alladi_y(int r, int T) {
    check_colors(r);
    check_order(T);
    QSeries lhs = QSeries::one(T);
    for (int j = 1; j <= r; ++j) lhs = mul(lhs, poch_infinite(AY(j), 1, 1, T));
    QSeries rhs = QSeries::one(T);
    int built = 0;
    for (int N = 1; N * N < T; ++N) {
        rhs = add(rhs, alladi_y_rhs_term(r, N, T));
        ++built;
    }
    return {std::move(lhs), std::move(rhs), built};
}

const std::vector<IdentityEntry>& identity_catalog() {
    static const std::vector<IdentityEntry> catalog = {
        {IdentityName::sylvester, "sylvester", true,
         [](int, int T) { return build_sylvester(T); }},
        {IdentityName::pentagonal, "pentagonal", true,
         [](int, int T) { return build_pentagonal(T); }},
        {IdentityName::theta_gauss, "theta_gauss", true,
         [](int, int T) { return build_theta_gauss(T); }},
        {IdentityName::theta_jacobi, "theta_jacobi", true,
         [](int, int T) { return build_theta_jacobi(T); }},
        {IdentityName::alladi, "alladi", false,
         [](int r, int T) { return build_alladi(r, T); }},
        {IdentityName::overpartition_cft, "overpartition_cft", false,
         [](int r, int T) { return build_overpartition_cft(r, T); }},
        {IdentityName::cauchy_multi, "cauchy_multi", false,
         [](int r, int T) { return build_cauchy_multi(r, T); }},
        {IdentityName::dousse_kim, "dousse_kim", true,
         [](int, int T) { return build_dousse_kim(T); }},
        {IdentityName::ped, "ped", false, [](int r, int T) { return build_ped(r, T); }},
        {IdentityName::alladi_y, "alladi_y", false,
         [](int r, int T) { return build_alladi_y(r, T); }},
    };
    return catalog;
}

const IdentityEntry& catalog_entry(IdentityName name) {
    for (const auto& entry : identity_catalog()) {
        if (entry.name == name) return entry;
    }
    throw std::logic_error("identity missing from catalog");
}

}  // namespace qident

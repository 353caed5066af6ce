#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qident {

/* Exact coefficients. Inner-sum coefficients grow combinatorially with the
 * number of colors and the truncation order, so fixed-width integers are
 * not an option. */
using Int = mpz_class;

/* A formal symbol: one of a_1, a_2, ..., z_1, z_2, ..., y.
 *
 * The fixed total order is a_1 < z_1 < a_2 < z_2 < ... < y. It has no
 * mathematical content; it pins down canonical serialization. */
class Symbol {
public:
    enum class Kind { A, Z, Y };

    static Symbol a(int index) { return Symbol(Kind::A, index); }
    static Symbol z(int index) { return Symbol(Kind::Z, index); }
    static Symbol y() { return Symbol(Kind::Y, 0); }

    Kind kind() const;
    int index() const;  // 1-based color index; 0 for y

    /* Position in the fixed total order. */
    std::uint32_t order_key() const { return key_; }
    static Symbol from_order_key(std::uint32_t key) { return Symbol(key); }

    std::string name() const;  // "a1", "z2", "y"

    bool operator==(const Symbol& o) const { return key_ == o.key_; }
    bool operator<(const Symbol& o) const { return key_ < o.key_; }

private:
    Symbol(Kind kind, int index);
    explicit Symbol(std::uint32_t key) : key_(key) {}
    std::uint32_t key_;
};

/* A power product of symbols, e.g. a1^2*z1. Stored as (symbol, exponent)
 * pairs sorted by the symbol order, exponents >= 1; the empty product is
 * the monomial 1. Equal maps <=> equal monomials. */
class Monomial {
public:
    using Entry = std::pair<std::uint32_t, std::uint32_t>;  // (order_key, exponent)

    Monomial() = default;
    static Monomial unit() { return Monomial(); }
    static Monomial of(Symbol s, int exponent = 1);

    Monomial times(const Monomial& other) const;

    int exponent(Symbol s) const;
    int total_degree() const { return static_cast<int>(degree_); }
    bool is_unit() const { return entries_.empty(); }

    const std::vector<Entry>& entries() const { return entries_; }

    std::string str() const;

    bool operator==(const Monomial& o) const { return entries_ == o.entries_; }

private:
    friend struct TermOrder;
    std::vector<Entry> entries_;
    std::uint32_t degree_ = 0;
};

/* Term order used for the canonical map and for serialization: ascending
 * total degree, ties broken lexicographically on the exponent vector with
 * the higher power of the earlier symbol first. Gives e.g.
 * 1 < a1 < z1 < a2 < a1^2 < a1*z1 < a1*a2. */
struct TermOrder {
    bool operator()(const Monomial& x, const Monomial& y) const;
};

class StrictLimitError : public std::domain_error {
public:
    explicit StrictLimitError(const std::string& what, int exponent = -1)
        : std::domain_error(what), q_exponent(exponent) {}
    int q_exponent;  // offending q-exponent when raised through a series, else -1
};

/* Sparse multivariate polynomial over the integers in the symbols above.
 * Canonical form: no zero coefficients, map keyed by the fixed term order,
 * so equal polynomials have identical term maps. */
class MultiPoly {
public:
    using TermMap = std::map<Monomial, Int, TermOrder>;

    MultiPoly() = default;  // zero
    MultiPoly(int c) : MultiPoly(Int(c)) {}
    explicit MultiPoly(Int c);
    static MultiPoly variable(Symbol s, int exponent = 1);
    static MultiPoly term(const Monomial& m, Int c);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    Int coefficient(const Monomial& m) const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly& operator*=(const MultiPoly& o);

    /* Adds c * m * f for every term (m, c) of f; the workhorse behind
     * series convolution. */
    void add_scaled(const MultiPoly& f, const Monomial& m, const Int& c);
    void add_product(const MultiPoly& f, const MultiPoly& g);

    /* Replaces each bound symbol by its integer value and re-canonicalizes.
     * Unbound symbols are untouched. */
    MultiPoly substitute(const std::vector<std::pair<Symbol, Int>>& bindings) const;

    /* The a_i -> a_i/z_i, z_i -> infinity limit: keeps exactly the terms with
     * deg_{z_i} = deg_{a_i} for every color i, then sets every z_i to 1.
     * Throws StrictLimitError if some term has deg_{z_i} > deg_{a_i}. */
    MultiPoly strict_limit() const;

    /* Canonical text form, e.g. "1 + 2*a1 + a1^2*z1", "-a1 - 3", "0".
     * Terms in the fixed term order; this format is a test contract. */
    std::string str() const;
    static MultiPoly parse(std::string_view text);

    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

private:
    TermMap terms_;
};

MultiPoly operator*(const Int& c, const MultiPoly& p);

}  // namespace qident

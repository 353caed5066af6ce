#include "qident/polyring.hpp"

#include <cctype>
#include <limits>
#include <sstream>

namespace qident {

namespace {
constexpr std::uint32_t kYKey = std::numeric_limits<std::uint32_t>::max();
}

Symbol::Symbol(Kind kind, int index) {
    if (kind == Kind::Y) {
        key_ = kYKey;
        return;
    }
    if (index < 1) throw std::invalid_argument("symbol index must be >= 1");
    if (index > (1 << 24)) throw std::invalid_argument("symbol index out of range");
    key_ = 2u * static_cast<std::uint32_t>(index - 1) + (kind == Kind::Z ? 1u : 0u);
}

Symbol::Kind Symbol::kind() const {
    if (key_ == kYKey) return Kind::Y;
    return (key_ % 2 == 0) ? Kind::A : Kind::Z;
}

int Symbol::index() const {
    if (key_ == kYKey) return 0;
    return static_cast<int>(key_ / 2) + 1;
}

std::string Symbol::name() const {
    switch (kind()) {
        case Kind::A: return "a" + std::to_string(index());
        case Kind::Z: return "z" + std::to_string(index());
        default: return "y";
    }
}

Monomial Monomial::of(Symbol s, int exponent) {
    if (exponent < 0) throw std::invalid_argument("monomial exponent must be >= 0");
    Monomial m;
    if (exponent > 0) {
        m.entries_.emplace_back(s.order_key(), static_cast<std::uint32_t>(exponent));
        m.degree_ = static_cast<std::uint32_t>(exponent);
    }
    return m;
}

Monomial Monomial::times(const Monomial& other) const {
    Monomial out;
    out.entries_.reserve(entries_.size() + other.entries_.size());
    auto i = entries_.begin();
    auto j = other.entries_.begin();
    while (i != entries_.end() && j != other.entries_.end()) {
        if (i->first < j->first) {
            out.entries_.push_back(*i++);
        } else if (j->first < i->first) {
            out.entries_.push_back(*j++);
        } else {
            out.entries_.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    out.entries_.insert(out.entries_.end(), i, entries_.end());
    out.entries_.insert(out.entries_.end(), j, other.entries_.end());
    out.degree_ = degree_ + other.degree_;
    return out;
}

int Monomial::exponent(Symbol s) const {
    for (const auto& [key, exp] : entries_) {
        if (key == s.order_key()) return static_cast<int>(exp);
        if (key > s.order_key()) break;
    }
    return 0;
}

std::string Monomial::str() const {
    std::string out;
    for (const auto& [key, exp] : entries_) {
        if (!out.empty()) out += "*";
        out += Symbol::from_order_key(key).name();
        if (exp > 1) out += "^" + std::to_string(exp);
    }
    return out;
}

bool TermOrder::operator()(const Monomial& x, const Monomial& y) const {
    if (x.degree_ != y.degree_) return x.degree_ < y.degree_;
    auto i = x.entries_.begin();
    auto j = y.entries_.begin();
    while (i != x.entries_.end() && j != y.entries_.end()) {
        if (i->first != j->first) return i->first < j->first;
        if (i->second != j->second) return i->second > j->second;
        ++i;
        ++j;
    }
    // equal total degrees with one side exhausted forces the other too
    return false;
}

MultiPoly::MultiPoly(Int c) {
    if (c != 0) terms_.emplace(Monomial::unit(), std::move(c));
}

MultiPoly MultiPoly::variable(Symbol s, int exponent) {
    return term(Monomial::of(s, exponent), 1);
}

MultiPoly MultiPoly::term(const Monomial& m, Int c) {
    MultiPoly p;
    if (c != 0) p.terms_.emplace(m, std::move(c));
    return p;
}

bool MultiPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_unit() && terms_.begin()->second == 1;
}

Int MultiPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Int(0) : it->second;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) {
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) {
        auto [it, inserted] = terms_.try_emplace(m, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly out = *this;
    out += o;
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly out = *this;
    out -= o;
    return out;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

void MultiPoly::add_scaled(const MultiPoly& f, const Monomial& m, const Int& c) {
    if (c == 0) return;
    for (const auto& [fm, fc] : f.terms_) {
        Monomial key = fm.times(m);
        auto [it, inserted] = terms_.try_emplace(std::move(key), Int());
        it->second += fc * c;  // gmpxx folds this into one addmul
        if (it->second == 0) terms_.erase(it);
    }
}

void MultiPoly::add_product(const MultiPoly& f, const MultiPoly& g) {
    // iterate the smaller operand's terms on the outside
    const MultiPoly& outer = f.term_count() <= g.term_count() ? f : g;
    const MultiPoly& inner = f.term_count() <= g.term_count() ? g : f;
    for (const auto& [m, c] : outer.terms_) add_scaled(inner, m, c);
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly out;
    out.add_product(*this, o);
    return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
    *this = *this * o;
    return *this;
}

MultiPoly operator*(const Int& c, const MultiPoly& p) {
    MultiPoly out;
    out.add_scaled(p, Monomial::unit(), c);
    return out;
}

MultiPoly MultiPoly::substitute(const std::vector<std::pair<Symbol, Int>>& bindings) const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) {
        Int coeff = c;
        Monomial rest;
        for (const auto& [key, exp] : m.entries()) {
            Symbol s = Symbol::from_order_key(key);
            const Int* bound = nullptr;
            for (const auto& [bs, bv] : bindings) {
                if (bs == s) {
                    bound = &bv;
                    break;
                }
            }
            if (bound) {
                Int power;
                mpz_pow_ui(power.get_mpz_t(), bound->get_mpz_t(), exp);
                coeff *= power;
            } else {
                rest = rest.times(Monomial::of(s, static_cast<int>(exp)));
            }
        }
        out += MultiPoly::term(rest, std::move(coeff));
    }
    return out;
}

MultiPoly MultiPoly::strict_limit() const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) {
        // per color i, compare deg_{a_i} with deg_{z_i}; entries are sorted,
        // so z_i (key 2i-1) immediately follows a_i (key 2i-2) when both occur
        bool keep = true;
        Monomial kept;
        const auto& es = m.entries();
        for (std::size_t idx = 0; idx < es.size(); ++idx) {
            auto [key, exp] = es[idx];
            Symbol s = Symbol::from_order_key(key);
            switch (s.kind()) {
                case Symbol::Kind::Y:
                    kept = kept.times(Monomial::of(s, static_cast<int>(exp)));
                    break;
                case Symbol::Kind::A: {
                    std::uint32_t zdeg = 0;
                    if (idx + 1 < es.size() && es[idx + 1].first == key + 1) {
                        zdeg = es[idx + 1].second;
                        ++idx;
                    }
                    if (zdeg > exp)
                        throw StrictLimitError("strict limit: term " + m.str() +
                                               " has z-degree exceeding a-degree for color " +
                                               std::to_string(s.index()));
                    if (zdeg != exp) keep = false;
                    kept = kept.times(Monomial::of(s, static_cast<int>(exp)));
                    break;
                }
                case Symbol::Kind::Z:
                    // z_i with no matching a_i: deg_{a_i} = 0 < deg_{z_i}
                    throw StrictLimitError("strict limit: term " + m.str() +
                                           " has z-degree exceeding a-degree for color " +
                                           std::to_string(s.index()));
            }
        }
        if (keep) out += MultiPoly::term(kept, c);
    }
    return out;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        const bool negative = c < 0;
        Int mag = negative ? Int(-c) : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (m.is_unit()) {
            out += mag.get_str();
        } else {
            if (mag != 1) out += mag.get_str() + "*";
            out += m.str();
        }
    }
    return out;
}

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() { return text[pos]; }

    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos) +
                                    ": " + why);
    }

    Int parse_integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected digits");
        return Int(std::string(text.substr(start, pos - start)), 10);
    }

    int parse_small_int() {
        Int v = parse_integer();
        if (!v.fits_sint_p()) fail("exponent or index out of range");
        return static_cast<int>(v.get_si());
    }

    Symbol parse_symbol() {
        skip_ws();
        char c = peek();
        ++pos;
        if (c == 'y') return Symbol::y();
        if (c != 'a' && c != 'z') fail("expected symbol a<i>, z<i> or y");
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("symbol requires an index");
        int index = parse_small_int();
        if (index < 1) fail("symbol index must be >= 1");
        return c == 'a' ? Symbol::a(index) : Symbol::z(index);
    }

    // term := integer ('*' factor)* | factor ('*' factor)*
    MultiPoly parse_term() {
        skip_ws();
        Int coeff = 1;
        Monomial mono;
        bool saw_factor = false;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = parse_integer();
            saw_factor = true;
            skip_ws();
            if (pos < text.size() && peek() == '*') {
                ++pos;
            } else {
                return MultiPoly::term(mono, coeff);
            }
        }
        while (true) {
            Symbol s = parse_symbol();
            int exp = 1;
            skip_ws();
            if (pos < text.size() && peek() == '^') {
                ++pos;
                exp = parse_small_int();
                if (exp < 1) fail("exponent must be >= 1");
            }
            mono = mono.times(Monomial::of(s, exp));
            saw_factor = true;
            skip_ws();
            if (pos < text.size() && peek() == '*') {
                ++pos;
                continue;
            }
            break;
        }
        if (!saw_factor) fail("empty term");
        return MultiPoly::term(mono, coeff);
    }
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text) {
    Parser p{text};
    MultiPoly out;
    bool negate = false;
    p.skip_ws();
    if (p.done()) p.fail("empty input");
    if (p.peek() == '-') {
        negate = true;
        ++p.pos;
    } else if (p.peek() == '+') {
        ++p.pos;
    }
    while (true) {
        MultiPoly t = p.parse_term();
        out += negate ? -t : t;
        if (p.done()) break;
        char c = p.peek();
        if (c == '+') {
            negate = false;
        } else if (c == '-') {
            negate = true;
        } else {
            p.fail("expected '+' or '-'");
        }
        ++p.pos;
    }
    return out;
}

}  // namespace qident

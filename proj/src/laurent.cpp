#include "amphicheck/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <climits>

namespace amphicheck {

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::variable(int var, int exponent) {
    if (var < 1) throw std::invalid_argument("Monomial: variable index must be >= 1");
    Monomial m;
    if (exponent != 0) m.factors_.emplace_back(var, exponent);
    return m;
}

Monomial Monomial::from_pairs(std::initializer_list<std::pair<int, int>> pairs) {
    std::vector<std::pair<int, int>> collected(pairs);
    for (const auto& [var, exp] : collected) {
        (void)exp;
        if (var < 1) throw std::invalid_argument("Monomial: variable index must be >= 1");
    }
    std::sort(collected.begin(), collected.end());
    Monomial m;
    for (const auto& [var, exp] : collected) {
        if (!m.factors_.empty() && m.factors_.back().first == var) {
            m.factors_.back().second += exp;
            if (m.factors_.back().second == 0) m.factors_.pop_back();
        } else if (exp != 0) {
            m.factors_.emplace_back(var, exp);
        }
    }
    return m;
}

int Monomial::exponent(int var) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), var,
                               [](const auto& pair, int v) { return pair.first < v; });
    if (it != factors_.end() && it->first == var) return it->second;
    return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial out;
    out.factors_.reserve(factors_.size() + other.factors_.size());
    auto a = factors_.begin(), ae = factors_.end();
    auto b = other.factors_.begin(), be = other.factors_.end();
    while (a != ae || b != be) {
        if (b == be || (a != ae && a->first < b->first)) {
            out.factors_.push_back(*a++);
        } else if (a == ae || b->first < a->first) {
            out.factors_.push_back(*b++);
        } else {
            int exp = a->second + b->second;
            if (exp != 0) out.factors_.emplace_back(a->first, exp);
            ++a;
            ++b;
        }
    }
    return out;
}

Monomial Monomial::inverse() const {
    Monomial out = *this;
    for (auto& [var, exp] : out.factors_) {
        (void)var;
        exp = -exp;
    }
    return out;
}

Monomial Monomial::pow(int k) const {
    if (k == 0) return Monomial{};
    Monomial out = *this;
    for (auto& [var, exp] : out.factors_) {
        (void)var;
        exp *= k;
    }
    return out;
}

std::optional<Monomial> Monomial::sqrt() const {
    Monomial out = *this;
    for (auto& [var, exp] : out.factors_) {
        (void)var;
        if (exp % 2 != 0) return std::nullopt;
        exp /= 2;
    }
    return out;
}

bool Monomial::divisible_by(const Monomial& other) const {
    auto a = factors_.begin(), ae = factors_.end();
    auto b = other.factors_.begin(), be = other.factors_.end();
    while (a != ae || b != be) {
        if (b == be || (a != ae && a->first < b->first)) {
            if (a->second < 0) return false;
            ++a;
        } else if (a == ae || b->first < a->first) {
            if (b->second > 0) return false;
            ++b;
        } else {
            if (a->second < b->second) return false;
            ++a;
            ++b;
        }
    }
    return true;
}

int Monomial::lex_cmp(const Monomial& a, const Monomial& b) {
    auto i = a.factors_.begin(), ie = a.factors_.end();
    auto j = b.factors_.begin(), je = b.factors_.end();
    while (i != ie || j != je) {
        int var_a = (i != ie) ? i->first : INT_MAX;
        int var_b = (j != je) ? j->first : INT_MAX;
        int exp_a = 0, exp_b = 0;
        if (var_a <= var_b) exp_a = i->second;
        if (var_b <= var_a) exp_b = j->second;
        if (exp_a != exp_b) return exp_a > exp_b ? 1 : -1;
        if (var_a <= var_b) ++i;
        if (var_b <= var_a) ++j;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// Errors

parse_error::parse_error(const std::string& message, std::size_t position)
    : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
      position_(position) {}

divide_error::divide_error(Kind kind, const std::string& message)
    : std::runtime_error(message), kind_(kind) {}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(int arity) : arity_(arity) {
    if (arity < 0) throw std::invalid_argument("LaurentPoly: arity must be >= 0");
}

LaurentPoly LaurentPoly::constant(int arity, Int value) {
    LaurentPoly p(arity);
    p.add_term(Monomial{}, value);
    return p;
}

LaurentPoly LaurentPoly::variable(int arity, int var) {
    LaurentPoly p(arity);
    p.add_term(Monomial::variable(var), 1);
    return p;
}

LaurentPoly LaurentPoly::term(int arity, Monomial m, Int coefficient) {
    LaurentPoly p(arity);
    p.add_term(m, coefficient);
    return p;
}

void LaurentPoly::add_term(const Monomial& m, const Int& coefficient) {
    if (m.max_variable() > arity_)
        throw std::invalid_argument("LaurentPoly: variable index exceeds arity");
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.emplace(m, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

const std::pair<const Monomial, Int>& LaurentPoly::leading() const {
    if (terms_.empty()) throw std::logic_error("LaurentPoly: zero polynomial has no leading term");
    return *terms_.rbegin();
}

Int LaurentPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it != terms_.end() ? it->second : Int(0);
}

int LaurentPoly::min_exponent(int var) const {
    bool seen = false;
    int best = 0;
    for (const auto& [m, c] : terms_) {
        (void)c;
        int e = m.exponent(var);
        if (!seen || e < best) {
            best = e;
            seen = true;
        }
    }
    return seen ? best : 0;
}

bool LaurentPoly::supported_on(const std::vector<int>& vars) const {
    for (const auto& [m, c] : terms_) {
        (void)c;
        for (const auto& [var, exp] : m.pairs()) {
            (void)exp;
            if (std::find(vars.begin(), vars.end(), var) == vars.end()) return false;
        }
    }
    return true;
}

namespace {

void require_same_arity(const LaurentPoly& a, const LaurentPoly& b, const char* op) {
    if (a.arity() != b.arity())
        throw std::invalid_argument(std::string(op) + ": arity mismatch");
}

// Monomial shift taking every variable's minimum exponent to zero.
Monomial min_shift(const LaurentPoly& p) {
    std::vector<std::pair<int, int>> pairs;
    for (int var = 1; var <= p.arity(); ++var) {
        int e = p.min_exponent(var);
        if (e != 0) pairs.emplace_back(var, -e);
    }
    Monomial m;
    for (const auto& [var, exp] : pairs) m = m * Monomial::variable(var, exp);
    return m;
}

}  // namespace

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out(arity_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const {
    LaurentPoly out = *this;
    out += other;
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& other) const {
    LaurentPoly out = *this;
    out -= other;
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
    require_same_arity(*this, other, "operator+");
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
    require_same_arity(*this, other, "operator-");
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
    require_same_arity(*this, other, "operator*");
    LaurentPoly out(arity_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : other.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

LaurentPoly LaurentPoly::operator*(const Int& scalar) const {
    LaurentPoly out(arity_);
    if (scalar == 0) return out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * scalar);
    return out;
}

LaurentPoly LaurentPoly::operator*(const UnitFactor& unit) const {
    LaurentPoly out(arity_);
    for (const auto& [m, c] : terms_)
        out.add_term(m * unit.monomial, unit.sign < 0 ? Int(-c) : c);
    return out;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
    LaurentPoly result = constant(arity_, 1);
    LaurentPoly base = *this;
    while (k != 0) {
        if (k & 1u) result *= base;
        k >>= 1u;
        if (k != 0) base *= base;
    }
    return result;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        const bool negative = c < 0;
        const Int magnitude = negative ? Int(-c) : c;
        if (first) {
            if (negative) out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        std::string mono;
        for (const auto& [var, exp] : m.pairs()) {
            if (!mono.empty()) mono += "*";
            mono += "t" + std::to_string(var);
            if (exp != 1) mono += "^" + std::to_string(exp);
        }
        if (mono.empty()) {
            out += magnitude.str();
        } else {
            if (magnitude != 1) out += magnitude.str() + "*";
            out += mono;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class ExprParser {
public:
    ExprParser(std::string_view text, int arity) : text_(text), arity_(arity) {}

    LaurentPoly parse() {
        LaurentPoly result = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return result;
    }

private:
    std::string_view text_;
    int arity_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& message) const { throw parse_error(message, pos_); }
    [[noreturn]] void fail_at(const std::string& message, std::size_t at) const {
        throw parse_error(message, at);
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    LaurentPoly parse_expr() {
        skip_ws();
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            if (text_[pos_] == '-') sign = -1;
            ++pos_;
        }
        LaurentPoly acc = parse_term();
        if (sign < 0) acc = -acc;
        for (;;) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            LaurentPoly next = parse_term();
            if (c == '+')
                acc += next;
            else
                acc -= next;
        }
        return acc;
    }

    LaurentPoly parse_term() {
        LaurentPoly acc = parse_factor();
        for (;;) {
            skip_ws();
            if (peek() != '*') break;
            ++pos_;
            acc *= parse_factor();
        }
        return acc;
    }

    LaurentPoly parse_factor() {
        LaurentPoly base = parse_base();
        skip_ws();
        if (peek() != '^') return base;
        const std::size_t caret = pos_;
        ++pos_;
        long long exp = parse_exponent();
        if (exp >= 0) return base.pow(static_cast<unsigned>(exp));
        if (base.term_count() != 1)
            fail_at("negative exponent requires a one-term base with coefficient 1 or -1", caret);
        const auto& [mono, coeff] = *base.terms().begin();
        if (coeff != 1 && coeff != -1)
            fail_at("negative exponent requires a one-term base with coefficient 1 or -1", caret);
        UnitFactor unit = UnitFactor::of(coeff < 0 ? -1 : 1, mono).pow(static_cast<int>(exp));
        return LaurentPoly::term(arity_, unit.monomial, unit.sign);
    }

    LaurentPoly parse_base() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            LaurentPoly inner = parse_expr();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (c == 't') {
            const std::size_t start = pos_;
            ++pos_;
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                fail("expected a variable index after 't'");
            long long var = parse_digits(9);
            if (var < 1 || var > arity_)
                fail_at("variable index out of range (ring has " + std::to_string(arity_) +
                            " variables)",
                        start);
            return LaurentPoly::variable(arity_, static_cast<int>(var));
        }
        if (c == '+' || c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            if (c == '+' || c == '-') {
                if (c == '-') digits += '-';
                ++pos_;
                skip_ws();
                if (!std::isdigit(static_cast<unsigned char>(peek())))
                    fail("expected digits after the sign");
            }
            while (std::isdigit(static_cast<unsigned char>(peek()))) digits += text_[pos_++];
            return LaurentPoly::constant(arity_, Int(digits));
        }
        fail("expected an integer, a variable, or '('");
    }

    long long parse_exponent() {
        skip_ws();
        long long sign = 1;
        if (peek() == '+' || peek() == '-') {
            if (text_[pos_] == '-') sign = -1;
            ++pos_;
        }
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
        return sign * parse_digits(9);
    }

    // Reads digit+ into a long long, refusing more than max_digits digits.
    long long parse_digits(int max_digits) {
        long long value = 0;
        int count = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            if (++count > max_digits) fail("number too large");
            value = value * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        return value;
    }
};

}  // namespace

LaurentPoly parse_poly(std::string_view text, int arity) {
    if (arity < 0) throw std::invalid_argument("parse_poly: arity must be >= 0");
    return ExprParser(text, arity).parse();
}

// ---------------------------------------------------------------------------
// Substitution

LaurentPoly substitute(const LaurentPoly& p, const std::map<int, UnitFactor>& images,
                       int target_arity) {
    if (target_arity < 0) throw std::invalid_argument("substitute: target arity must be >= 0");
    for (const auto& [var, image] : images) {
        if (var < 1 || var > p.arity())
            throw std::invalid_argument("substitute: image given for a variable outside the ring");
        if (image.sign != 1 && image.sign != -1)
            throw std::invalid_argument("substitute: image sign must be +1 or -1");
        if (image.monomial.max_variable() > target_arity)
            throw std::invalid_argument("substitute: image uses a variable beyond the target arity");
    }
    LaurentPoly out(target_arity);
    for (const auto& [m, c] : p.terms()) {
        UnitFactor acc = UnitFactor::one();
        for (const auto& [var, exp] : m.pairs()) {
            auto it = images.find(var);
            if (it != images.end()) {
                acc = acc * it->second.pow(exp);
            } else {
                if (var > target_arity)
                    throw std::invalid_argument(
                        "substitute: unmapped variable exceeds the target arity");
                acc = acc * UnitFactor::of(1, Monomial::variable(var, exp));
            }
        }
        out.add_term(acc.monomial, acc.sign < 0 ? Int(-c) : c);
    }
    return out;
}

LaurentPoly substitute(const LaurentPoly& p, const std::map<int, UnitFactor>& images) {
    return substitute(p, images, p.arity());
}

LaurentPoly invert_variables(const LaurentPoly& p) {
    LaurentPoly out(p.arity());
    for (const auto& [m, c] : p.terms()) out.add_term(m.inverse(), c);
    return out;
}

LaurentPoly set_variable_to_one(const LaurentPoly& p, int var) {
    return substitute(p, {{var, UnitFactor::one()}}, p.arity());
}

// ---------------------------------------------------------------------------
// Exact division

namespace {

void validate_divisor(const LaurentPoly& d) {
    if (d.is_zero()) throw divide_error(divide_error::Kind::zero_divisor, "division by zero");
    if (d.term_count() > 2)
        throw divide_error(divide_error::Kind::unsupported_divisor,
                           "divisor must have at most two terms: " + d.to_string());
}

// Quotient p/d for a divisor with one or two terms; nullopt when inexact.
std::optional<LaurentPoly> divide_once(const LaurentPoly& p, const LaurentPoly& d) {
    if (p.is_zero()) return LaurentPoly::zero(p.arity());

    if (d.term_count() == 1) {
        const auto& [dm, dc] = *d.terms().begin();
        LaurentPoly q(p.arity());
        const Monomial dm_inv = dm.inverse();
        for (const auto& [m, c] : p.terms()) {
            if (c % dc != 0) return std::nullopt;
            q.add_term(m * dm_inv, c / dc);
        }
        return q;
    }

    // Two-term divisor. Shift dividend and divisor so all exponents are
    // nonnegative; then exact division keeps every intermediate leading
    // term divisible by the divisor's leading term, and the leading
    // monomial strictly decreases in the (well-ordered) lex order on
    // nonnegative exponents, so the loop terminates.
    const Monomial shift_p = min_shift(p);
    const Monomial shift_d = min_shift(d);
    LaurentPoly rem = p * UnitFactor::of(1, shift_p);
    const LaurentPoly dd = d * UnitFactor::of(1, shift_d);

    const Monomial lead_m = dd.leading().first;
    const Int lead_c = dd.leading().second;
    const Monomial tail_m = dd.terms().begin()->first;
    const Int tail_c = dd.terms().begin()->second;

    LaurentPoly q(p.arity());
    while (!rem.is_zero()) {
        const Monomial rm = rem.leading().first;
        const Int rc = rem.leading().second;
        if (!rm.divisible_by(lead_m)) return std::nullopt;
        if (rc % lead_c != 0) return std::nullopt;
        const Int qc = rc / lead_c;
        const Monomial qm = rm / lead_m;
        q.add_term(qm, qc);
        rem.add_term(rm, -rc);
        rem.add_term(qm * tail_m, -qc * tail_c);
    }
    // p·shift_p = q·(d·shift_d)  =>  p/d = q·shift_d/shift_p.
    return q * UnitFactor::of(1, shift_d * shift_p.inverse());
}

}  // namespace

LaurentPoly divide_exact(const LaurentPoly& p, const std::vector<LaurentPoly>& factors) {
    LaurentPoly acc = p;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        require_same_arity(acc, factors[i], "divide_exact");
        validate_divisor(factors[i]);
        auto q = divide_once(acc, factors[i]);
        if (!q)
            throw divide_error(divide_error::Kind::remainder,
                               "inexact division by factor " + std::to_string(i + 1) + " (" +
                                   factors[i].to_string() + ")");
        acc = std::move(*q);
    }
    return acc;
}

std::optional<LaurentPoly> try_divide_exact(const LaurentPoly& p,
                                            const std::vector<LaurentPoly>& factors) {
    try {
        return divide_exact(p, factors);
    } catch (const divide_error& e) {
        if (e.kind() == divide_error::Kind::remainder) return std::nullopt;
        throw;
    }
}

// ---------------------------------------------------------------------------
// Comparison up to units

std::optional<UnitFactor> equal_up_to_unit(const LaurentPoly& p, const LaurentPoly& q) {
    require_same_arity(p, q, "equal_up_to_unit");
    if (p.is_zero() && q.is_zero()) return UnitFactor::one();
    if (p.is_zero() || q.is_zero()) return std::nullopt;
    if (p.term_count() != q.term_count()) return std::nullopt;

    // Multiplying by a monomial preserves the lex order of terms, so any
    // relating unit must match the leading terms; that determines it.
    const auto& [pm, pc] = p.leading();
    const auto& [qm, qc] = q.leading();
    const Int pa = pc < 0 ? Int(-pc) : pc;
    const Int qa = qc < 0 ? Int(-qc) : qc;
    if (pa != qa) return std::nullopt;
    UnitFactor unit = UnitFactor::of((pc < 0) == (qc < 0) ? 1 : -1, pm / qm);
    if (q * unit == p) return unit;
    return std::nullopt;
}

bool doteq(const LaurentPoly& p, const LaurentPoly& q) {
    return equal_up_to_unit(p, q).has_value();
}

LaurentPoly normalize_canonical(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    LaurentPoly shifted = p * UnitFactor::of(1, min_shift(p));
    if (shifted.leading().second < 0) return -shifted;
    return shifted;
}

}  // namespace amphicheck

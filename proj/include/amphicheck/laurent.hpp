// Exact arithmetic in the integer Laurent polynomial ring
// Z[t1^{±1}, ..., tr^{±1}]: sparse polynomials with arbitrary-precision
// coefficients, an expression parser/printer, substitution by ±monomial
// images, exact division by factored binomial divisors, and comparison
// up to units ±t1^{a1}···tr^{ar}.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace amphicheck {

using Int = boost::multiprecision::cpp_int;

// Product of variable powers t_{v1}^{e1}···t_{vk}^{ek}. Stored sparse:
// (variable, exponent) pairs sorted by variable, exponents never zero.
// Exponents may be negative. The trivial monomial is the empty product.
class Monomial {
public:
    Monomial() = default;

    static Monomial variable(int var, int exponent = 1);
    static Monomial from_pairs(std::initializer_list<std::pair<int, int>> pairs);

    int exponent(int var) const;
    bool trivial() const { return factors_.empty(); }
    int max_variable() const { return factors_.empty() ? 0 : factors_.back().first; }

    Monomial operator*(const Monomial& other) const;
    Monomial inverse() const;
    Monomial pow(int k) const;

    // m1 / m2 is always defined (monomials are units).
    Monomial operator/(const Monomial& other) const { return *this * other.inverse(); }

    // Exponent-wise square root; empty when some exponent is odd.
    std::optional<Monomial> sqrt() const;

    // true iff every exponent of `other` is <= the matching exponent here
    // (ordinary divisibility once all exponents are nonnegative).
    bool divisible_by(const Monomial& other) const;

    // Lexicographic order with t1 > t2 > ...: the first variable with
    // differing exponent decides, higher exponent wins. Returns -1/0/+1.
    static int lex_cmp(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial& other) const = default;

    const std::vector<std::pair<int, int>>& pairs() const { return factors_; }

private:
    std::vector<std::pair<int, int>> factors_;
};

struct MonomialLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::lex_cmp(a, b) < 0;
    }
};

// A unit of the ring: ±(monomial).
struct UnitFactor {
    int sign = 1;
    Monomial monomial;

    static UnitFactor one() { return {}; }
    static UnitFactor constant_one(int sign) { return {sign, Monomial{}}; }
    static UnitFactor of(int sign, Monomial m) { return {sign, std::move(m)}; }

    UnitFactor inverse() const { return {sign, monomial.inverse()}; }
    UnitFactor pow(int k) const {
        return {(sign < 0 && (k % 2 != 0)) ? -1 : 1, monomial.pow(k)};
    }
    UnitFactor operator*(const UnitFactor& other) const {
        return {sign * other.sign, monomial * other.monomial};
    }
    bool operator==(const UnitFactor& other) const = default;
};

class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& message, std::size_t position);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class divide_error : public std::runtime_error {
public:
    enum class Kind { remainder, unsupported_divisor, zero_divisor };

    divide_error(Kind kind, const std::string& message);
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

// Element of Z[t1^{±1},...,tr^{±1}]. Terms are kept in a map ordered by
// the lex order above; coefficients are never zero (zero polynomial =
// empty map). Every variable index used must be in [1, arity]; arity 0
// polynomials are plain integers. Values are immutable in spirit: all
// operations return new polynomials, so sharing across threads is safe.
class LaurentPoly {
public:
    using TermMap = std::map<Monomial, Int, MonomialLexLess>;

    LaurentPoly() = default;
    explicit LaurentPoly(int arity);

    static LaurentPoly zero(int arity) { return LaurentPoly(arity); }
    static LaurentPoly constant(int arity, Int value);
    static LaurentPoly variable(int arity, int var);
    static LaurentPoly term(int arity, Monomial m, Int coefficient);

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Lex-greatest term; polynomial must be nonzero.
    const std::pair<const Monomial, Int>& leading() const;

    // Coefficient of m (zero when absent).
    Int coefficient(const Monomial& m) const;

    // Smallest exponent of `var` over the support, 0 for the zero polynomial.
    int min_exponent(int var) const;

    // true iff every variable in the support lies in `vars` (1-based list).
    bool supported_on(const std::vector<int>& vars) const;

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& other) const;
    LaurentPoly operator-(const LaurentPoly& other) const;
    LaurentPoly operator*(const LaurentPoly& other) const;
    LaurentPoly& operator+=(const LaurentPoly& other);
    LaurentPoly& operator-=(const LaurentPoly& other);
    LaurentPoly& operator*=(const LaurentPoly& other) { return *this = *this * other; }

    LaurentPoly operator*(const Int& scalar) const;
    LaurentPoly operator*(const UnitFactor& unit) const;
    LaurentPoly pow(unsigned k) const;

    bool operator==(const LaurentPoly& other) const = default;

    // Canonical-order expansion, e.g. "t1*t2 - t1 - t2 + 1"; "0" for zero.
    std::string to_string() const;

    void add_term(const Monomial& m, const Int& coefficient);

private:
    friend class ExprParser;

    int arity_ = 0;
    TermMap terms_;
};

// Parses the expression grammar
//   expr   := ('+'|'-')? term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' int)?
//   base   := int | var | '(' expr ')'
//   var    := 't' digit+
// Integer literals may be signed. A negative '^' exponent is only legal
// when the base is a unit (a single term with coefficient ±1). Variable
// indices are 1-based and must not exceed `arity`. Throws parse_error
// with the offending byte position.
LaurentPoly parse_poly(std::string_view text, int arity);

// Ring homomorphism determined by var -> ±monomial images in a target
// ring of arity `target_arity`. Variables absent from `images` map to
// themselves. Throws std::invalid_argument when an image (or an
// unassigned variable) uses an index beyond target_arity.
LaurentPoly substitute(const LaurentPoly& p,
                       const std::map<int, UnitFactor>& images,
                       int target_arity);

// Same-arity convenience overloads.
LaurentPoly substitute(const LaurentPoly& p, const std::map<int, UnitFactor>& images);
LaurentPoly invert_variables(const LaurentPoly& p);             // every t -> t^{-1}
LaurentPoly set_variable_to_one(const LaurentPoly& p, int var);

// Exact division p / (f1·f2···fk), each factor a polynomial with at most
// two terms (the intended shapes: integer constants, t1 - 1, t1*t2 - 1,
// t1 - t2, and the like). Throws divide_error: remainder when the
// division is not exact, unsupported_divisor for factors with more than
// two terms, zero_divisor for a zero factor.
LaurentPoly divide_exact(const LaurentPoly& p, const std::vector<LaurentPoly>& factors);

// As divide_exact, but an inexact division yields nullopt instead of a
// throw. Malformed divisors still throw.
std::optional<LaurentPoly> try_divide_exact(const LaurentPoly& p,
                                            const std::vector<LaurentPoly>& factors);

// The unit u with p = u·q, when one exists. The unit is unique for
// nonzero q; zero ≐ zero via the trivial unit; zero vs nonzero -> none.
// Both arguments must have the same arity.
std::optional<UnitFactor> equal_up_to_unit(const LaurentPoly& p, const LaurentPoly& q);

bool doteq(const LaurentPoly& p, const LaurentPoly& q);  // p ≐ q

// Canonical representative of the ≐-class: every variable's minimum
// exponent shifted to 0 and the lex-leading coefficient made positive.
// Idempotent, and constant on ≐-classes.
LaurentPoly normalize_canonical(const LaurentPoly& p);

}  // namespace amphicheck

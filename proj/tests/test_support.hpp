// Shared test helpers: seeded random generators for monomials, Laurent
// polynomials, and symmetric factor families, plus a brute-force
// reference for the parity sums that recomputes everything from the
// definitions (used to cross-check the production implementation).
//
// Header is doctest-free so the benchmark tool can reuse it.

#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "amphicheck/index_set.hpp"
#include "amphicheck/laurent.hpp"
#include "amphicheck/obstruction.hpp"

namespace amphitest {

using Rng = std::mt19937_64;

inline int rand_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline int rand_nonzero(Rng& rng, int lo, int hi) {
    for (;;) {
        int v = rand_int(rng, lo, hi);
        if (v != 0) return v;
    }
}

// Random monomial on variables drawn from `vars` with exponents in
// [-max_exp, max_exp].
inline amphicheck::Monomial random_monomial(Rng& rng, const std::vector<int>& vars, int max_exp) {
    amphicheck::Monomial m;
    for (int v : vars) {
        int e = rand_int(rng, -max_exp, max_exp);
        if (e != 0) m = m * amphicheck::Monomial::variable(v).pow(e);
    }
    return m;
}

inline amphicheck::Monomial random_monomial(Rng& rng, int arity, int max_exp) {
    std::vector<int> vars;
    for (int v = 1; v <= arity; ++v) vars.push_back(v);
    return random_monomial(rng, vars, max_exp);
}

// Random polynomial with up to max_terms terms, exponents in
// [-max_exp, max_exp], coefficients in [-max_coeff, max_coeff]\{0}
// (terms may collide, so the result can have fewer terms or be zero).
inline amphicheck::LaurentPoly random_poly(Rng& rng, int arity, int max_terms, int max_exp,
                                           int max_coeff) {
    amphicheck::LaurentPoly p = amphicheck::LaurentPoly::zero(arity);
    int terms = rand_int(rng, 0, max_terms);
    for (int k = 0; k < terms; ++k)
        p.add_term(random_monomial(rng, arity, max_exp),
                   amphicheck::Int(rand_nonzero(rng, -max_coeff, max_coeff)));
    return p;
}

inline amphicheck::LaurentPoly random_nonzero_poly(Rng& rng, int arity, int max_terms, int max_exp,
                                                   int max_coeff) {
    for (;;) {
        amphicheck::LaurentPoly p = random_poly(rng, arity, max_terms, max_exp, max_coeff);
        if (!p.is_zero()) return p;
    }
}

inline amphicheck::UnitFactor random_unit(Rng& rng, int arity, int max_exp) {
    return amphicheck::UnitFactor::of(rand_int(rng, 0, 1) ? 1 : -1,
                                      random_monomial(rng, arity, max_exp));
}

// Random polynomial at ambient arity r, supported on the variables of J,
// exactly invariant under t -> t^-1: a sum of c * (m + m^-1) blocks with
// exponents in [0, max_exp] and block coefficients in
// [-max_coeff, max_coeff]\{0}.
inline amphicheck::LaurentPoly random_symmetric_poly(Rng& rng, int r, amphicheck::IndexSet J,
                                                     int max_exp, int max_coeff) {
    std::vector<int> vars = J.indices();
    amphicheck::LaurentPoly p = amphicheck::LaurentPoly::zero(r);
    int blocks = rand_int(rng, 0, 4);
    for (int k = 0; k < blocks; ++k) {
        amphicheck::Monomial m;
        for (int v : vars) {
            int e = rand_int(rng, 0, max_exp);
            if (e != 0) m = m * amphicheck::Monomial::variable(v).pow(e);
        }
        amphicheck::Int c(rand_nonzero(rng, -max_coeff, max_coeff));
        p.add_term(m, c);
        if (!m.trivial()) p.add_term(m.inverse(), c);
    }
    return p;
}

// Random complete symmetric factor family at arity r. Each factor is
// exactly symmetric with support inside its subset; roughly one factor
// in three is forced to zero so that degenerate branches get exercised.
// Knot polynomials are 1 + c*(2 - t - t^-1), which take value 1 at t=1.
inline amphicheck::SymmetricFactorFamily random_family(Rng& rng, int r, int max_exp = 3,
                                                       int max_coeff = 5) {
    amphicheck::SymmetricFactorFamily fam;
    fam.r = r;
    for (amphicheck::IndexSet J : amphicheck::factor_subsets(r)) {
        amphicheck::LaurentPoly f = rand_int(rng, 0, 2) == 0
                                        ? amphicheck::LaurentPoly::zero(r)
                                        : random_symmetric_poly(rng, r, J, max_exp, max_coeff);
        if (!f.is_zero() && f.leading().second < 0) f = -f;
        fam.factors.emplace(J, f);
        fam.extracted.push_back(J);
    }
    for (int i = 1; i <= r; ++i) {
        int c = rand_int(rng, -2, 2);
        amphicheck::LaurentPoly knot = amphicheck::LaurentPoly::constant(1, amphicheck::Int(1));
        amphicheck::LaurentPoly t = amphicheck::LaurentPoly::variable(1, 1);
        amphicheck::LaurentPoly bump =
            amphicheck::LaurentPoly::constant(1, amphicheck::Int(2)) - t -
            amphicheck::LaurentPoly::term(1, amphicheck::Monomial::variable(1).pow(-1),
                                          amphicheck::Int(1));
        knot = knot + bump * amphicheck::LaurentPoly::constant(1, amphicheck::Int(c));
        fam.knot_polys.push_back(knot);
    }
    fam.knot_polys_defaulted = false;
    return fam;
}

// ---------------------------------------------------------------------
// Brute-force reference for the parity sums. Recomputes the weights and
// specializations straight from the definitions, sharing nothing with
// the production code path beyond the polynomial arithmetic itself:
//   - subsets J enumerated by looping over all bitmasks of {1..r},
//   - the sign count and parity of |J \ I| done with explicit loops,
//   - the specialization done one variable at a time.
inline std::pair<amphicheck::LaurentPoly, amphicheck::LaurentPoly> s_sums_bruteforce(
    const amphicheck::SymmetricFactorFamily& fam, const amphicheck::SubsetFrame& frame,
    const amphicheck::SignAssignment& signs) {
    const int r = fam.r;
    amphicheck::LaurentPoly even = amphicheck::LaurentPoly::zero(r);
    amphicheck::LaurentPoly odd = amphicheck::LaurentPoly::zero(r);
    for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
        // J must contain I and have at least two elements.
        int size = 0;
        for (int i = 1; i <= r; ++i)
            if (mask & (1u << (i - 1))) ++size;
        if (size < 2) continue;
        bool contains_I = true;
        for (int i : frame.I.indices())
            if (!(mask & (1u << (i - 1)))) contains_I = false;
        if (!contains_I) continue;

        amphicheck::IndexSet J = amphicheck::IndexSet::from_bits(mask);
        amphicheck::LaurentPoly value = fam.factor(J);
        int outside = 0;   // |J \ I|
        int positives = 0; // members of J \ I carrying sign +1
        for (int i = 1; i <= r; ++i) {
            if (!(mask & (1u << (i - 1))) || frame.I.contains(i)) continue;
            ++outside;
            if (frame.u.at(i) == 1) ++positives;
            value = amphicheck::set_variable_to_one(value, i);
        }
        int weight = (positives % 2 == 1 ? -1 : 1) * signs.sign_of(J);
        amphicheck::LaurentPoly contribution =
            value * amphicheck::LaurentPoly::constant(r, amphicheck::Int(weight));
        if (outside % 2 == 0)
            even = even + contribution;
        else
            odd = odd + contribution;
    }
    return {even, odd};
}

}  // namespace amphitest

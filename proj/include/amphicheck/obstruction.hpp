// The core obstruction machinery for algebraically split links:
// extraction of the symmetric factor f_J of each sublink polynomial,
// the specializations F_J(I), the parity-split sign-weighted sums
// S_even/S_odd over supersets, the vanishing tests built from them,
// two-variable divisibility tests, diagonal specialization tests, and
// the surgery torsion expressions used to cross-check coherence.

#pragma once

#include "amphicheck/index_set.hpp"
#include "amphicheck/laurent.hpp"
#include "amphicheck/linkdata.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace amphicheck {

// A required factor f_J was not supplied / not derivable.
class missing_factor_error : public std::runtime_error {
public:
    explicit missing_factor_error(IndexSet subset);
    IndexSet subset() const { return subset_; }

private:
    IndexSet subset_;
};

class missing_knot_poly_error : public std::runtime_error {
public:
    explicit missing_knot_poly_error(int component);
    int component() const { return component_; }

private:
    int component_;
};

// Symmetric-factor extraction failed: the input polynomial is not
// consistent with an algebraically split link.
class extract_error : public std::runtime_error {
public:
    enum class Kind { not_divisible, no_symmetric_rep };

    extract_error(Kind kind, const std::string& message);
    Kind kind() const { return kind_; }

    // Set when the failure is tagged with the sublink it came from.
    std::optional<IndexSet> subset;

private:
    Kind kind_;
};

// The per-sublink symmetric factors of a link's polynomial data.
// factors[J] (|J| >= 2) is f_J: the quotient of the sublink polynomial
// by ∏_{i∈J}(t_i − 1), shifted so f_J(t) = f_J(t^{-1}) holds exactly,
// with lex-leading coefficient positive; stored at ambient arity r with
// support inside J. Each factor is canonical only up to a global sign,
// which is why the vanishing tests search over sign assignments.
struct SymmetricFactorFamily {
    int r = 0;
    std::map<IndexSet, LaurentPoly> factors;
    std::vector<LaurentPoly> knot_polys;  // r entries, arity 1
    bool knot_polys_defaulted = false;    // true when filled with 1s

    // provenance
    std::vector<IndexSet> extracted;  // subsets with supplied data
    std::vector<IndexSet> missing;    // subsets with no data

    bool has_factor(IndexSet J) const { return factors.count(J) != 0; }
    const LaurentPoly& factor(IndexSet J) const;  // throws missing_factor_error
    bool complete() const { return missing.empty(); }
};

// Choice of ±1 per stored factor subset, multiplying f_J.
struct SignAssignment {
    std::map<IndexSet, int> signs;

    static SignAssignment trivial(const SymmetricFactorFamily& family);
    int sign_of(IndexSet J) const;  // +1 when absent

    bool operator==(const SignAssignment& other) const = default;
};

// A nonempty index set I together with a sign u_i = ±1 for every
// component outside I.
struct SubsetFrame {
    IndexSet I;
    std::map<int, int> u;

    bool operator==(const SubsetFrame& other) const = default;
};

SubsetFrame flip_frame(const SubsetFrame& frame);  // negate every u_i

// Quotient expression numerator / ∏ denominator_factors, each
// denominator factor of the form (monomial − 1).
struct TorsionExpr {
    LaurentPoly numerator;
    std::vector<LaurentPoly> denominator_factors;

    bool operator==(const TorsionExpr& other) const = default;
};

// Equality up to unit after cross-multiplication.
bool torsion_doteq(const TorsionExpr& a, const TorsionExpr& b);
// Exact equality after cross-multiplication.
bool torsion_equal_exact(const TorsionExpr& a, const TorsionExpr& b);

// Divides `delta` (support inside J, |J| >= 2) by ∏_{i∈J}(t_i − 1) and
// shifts the quotient to its exactly-symmetric representative with
// positive lex-leading coefficient. Zero input yields zero. Throws
// extract_error (not_divisible / no_symmetric_rep) on inputs no
// algebraically split link can produce.
LaurentPoly extract_symmetric_factor(const LaurentPoly& delta, IndexSet J);

// Builds the family for an algebraically split record: extracts f_J for
// every supplied sublink polynomial and for the full component set from
// `alexander` (when r >= 2); records gaps in `missing`; copies knot
// polynomials or defaults them to 1. Extraction failures are rethrown
// with the offending subset tagged.
SymmetricFactorFamily build_family(const LinkRecord& rec);

// F_J(I): f_J with every variable outside I set to 1. Requires I ⊆ J.
LaurentPoly f_sub(const SymmetricFactorFamily& family, IndexSet J, IndexSet I);

// The parity-split sums over supersets of the frame's I:
//   S_parity = Σ_{J ⊇ I, |J∖I| of that parity, |J| ≥ 2} η_J(u)·sign(J)·F_J(I)
// with η_J(u) = (−1)^{#{i ∈ J∖I : u_i = +1}}. Returns (S_even, S_odd).
// Serial reference implementation; the sign-search kernel must agree
// with it (tested).
std::pair<LaurentPoly, LaurentPoly> s_sums(const SymmetricFactorFamily& family,
                                           const SubsetFrame& frame,
                                           const SignAssignment& signs);

struct SignMode {
    bool exists = true;     // search all assignments
    SignAssignment fixed;   // used when !exists

    static SignMode exists_mode() { return {}; }
    static SignMode fixed_mode(SignAssignment signs) { return {false, std::move(signs)}; }
};

struct ParitySumOptions {
    // EXISTS-mode search is capped at this component count (the
    // assignment space is 2^(2^r − r − 1)).
    int max_exists_r = 4;
    // Force the per-assignment reference path instead of the packed
    // kernel (used by equivalence tests and the benchmark).
    bool force_serial = false;
};

// The parity-sum vanishing test over every frame:
//   |I| = 1        → S_odd must vanish for every u;
//   2 ≤ |I| ≤ r−1  → S_even or S_odd must vanish for every u (checked
//                    per frame).
// FIXED mode checks the given assignment. EXISTS mode (sound default)
// passes iff some assignment passes; assignments are indexed by bitmask
// over the family's subsets in ascending order (bit set = sign −1), and
// the verdict reports the first passing index, or the assignment with
// the fewest violations and its first violated frame. NOT_APPLICABLE
// when r < 2, the family is incomplete, or the EXISTS cap is exceeded.
// test_id "parity_sums".
Verdict check_parity_sums(const SymmetricFactorFamily& family, const SignMode& mode,
                          const ParitySumOptions& options = {});

// Vanishing tests on the full-set factor f = f_{1..r}:
//  - "factor_vanishing.single": r even → F({i}) must vanish for every i.
//    NOT_APPLICABLE for odd r.
//  - "factor_vanishing.codim1.<i>": for I = {1..r}∖{i}, the sublink
//    polynomial on I and F(I) cannot both be nonzero. For r = 2 the
//    sublink is a single component whose polynomial is never zero, so
//    the test reduces to F({j}) = 0; for r ≥ 3 it needs f_I and is
//    NOT_APPLICABLE when that factor is absent.
// All are independent of the sign ambiguity.
std::vector<Verdict> check_factor_vanishing(const SymmetricFactorFamily& family);

enum class TwoVarMode { AMPHI, EPS_AMPHI };

// Two-component divisibility test: AMPHI requires divisibility by
// (t1−1)²(t2−1)²; EPS_AMPHI additionally by (t1t2−1)(t1−t2). Zero
// passes. Input must have arity 2. test_id "divisibility.amphicheiral"
// / "divisibility.eps_amphicheiral".
Verdict check_split_divisibility(const LaurentPoly& delta, TwoVarMode mode);

// Diagonal specialization test: for even r, substituting
// t_i -> t^{η_i} (one variable t, every η ∈ {±1}^r) must yield zero.
// NOT_APPLICABLE for odd r. test_id "diagonal_vanishing".
Verdict check_diagonal_vanishing(const LaurentPoly& delta);

// The surgery torsion expression for a frame with 1 ≤ |I| ≤ r−1, using
// the trivial sign assignment:
//   |I| = {x}:      (Δ_{K_x}(t_x) + (t_x−1)²·(S_even+S_odd)) / (t_x−1)
//   2 ≤ |I| ≤ r−1:  ∏_{i∈I}(t_i−1)·(S_even+S_odd)
TorsionExpr surgery_torsion(const SymmetricFactorFamily& family, const SubsetFrame& frame);

// All frames of the vanishing test, ascending by I's mask then by the
// u-mask (bit k set ⇔ u = +1 on the k-th component outside I).
std::vector<SubsetFrame> enumerate_frames(int r);

// All subsets with at least two elements, ascending by mask: the bit
// order of sign-assignment indices.
std::vector<IndexSet> factor_subsets(int r);

// The assignment with index `index` in the search order above.
SignAssignment assignment_from_index(const SymmetricFactorFamily& family, std::uint64_t index);

}  // namespace amphicheck

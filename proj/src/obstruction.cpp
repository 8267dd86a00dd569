#include "amphicheck/obstruction.hpp"

#include <algorithm>
#include <climits>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace amphicheck {

missing_factor_error::missing_factor_error(IndexSet subset)
    : std::runtime_error("missing factor for subset {" + subset.to_string() + "}"),
      subset_(subset) {}

missing_knot_poly_error::missing_knot_poly_error(int component)
    : std::runtime_error("missing knot polynomial for component " + std::to_string(component)),
      component_(component) {}

extract_error::extract_error(Kind kind, const std::string& message)
    : std::runtime_error(message), kind_(kind) {}

const LaurentPoly& SymmetricFactorFamily::factor(IndexSet J) const {
    auto it = factors.find(J);
    if (it == factors.end()) throw missing_factor_error(J);
    return it->second;
}

SignAssignment SignAssignment::trivial(const SymmetricFactorFamily& family) {
    SignAssignment out;
    for (const auto& [subset, poly] : family.factors) {
        (void)poly;
        out.signs[subset] = 1;
    }
    return out;
}

int SignAssignment::sign_of(IndexSet J) const {
    auto it = signs.find(J);
    return it == signs.end() ? 1 : it->second;
}

SubsetFrame flip_frame(const SubsetFrame& frame) {
    SubsetFrame out = frame;
    for (auto& [i, sign] : out.u) {
        (void)i;
        sign = -sign;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Symmetric factor extraction

LaurentPoly extract_symmetric_factor(const LaurentPoly& delta, IndexSet J) {
    if (J.size() < 2)
        throw std::invalid_argument("extract_symmetric_factor: subset needs >= 2 elements");
    if (J.max_index() > delta.arity())
        throw std::invalid_argument("extract_symmetric_factor: subset exceeds the arity");
    if (delta.is_zero()) return delta;

    std::vector<LaurentPoly> divisors;
    for (int i : J.indices())
        divisors.push_back(LaurentPoly::variable(delta.arity(), i) -
                           LaurentPoly::constant(delta.arity(), 1));
    auto quotient = try_divide_exact(delta, divisors);
    if (!quotient)
        throw extract_error(extract_error::Kind::not_divisible,
                            "polynomial is not divisible by the product of (t_i - 1) over {" +
                                J.to_string() + "}");

    // Find the unit with q(t^{-1}) = s·m·q(t). A symmetric representative
    // m^{1/2}·q exists iff s = +1 and every exponent of m is even.
    const LaurentPoly inverted = invert_variables(*quotient);
    const auto unit = equal_up_to_unit(inverted, *quotient);
    if (!unit)
        throw extract_error(extract_error::Kind::no_symmetric_rep,
                            "quotient is not a unit multiple of its variable-inverse");
    if (unit->sign != 1)
        throw extract_error(extract_error::Kind::no_symmetric_rep,
                            "quotient is antisymmetric under variable inversion; no symmetric "
                            "representative exists");
    const auto half = unit->monomial.sqrt();
    if (!half)
        throw extract_error(extract_error::Kind::no_symmetric_rep,
                            "the unit relating the quotient to its variable-inverse has an odd "
                            "exponent; no symmetric representative exists");
    LaurentPoly symmetric = *quotient * UnitFactor::of(1, *half);
    if (symmetric.leading().second < 0) symmetric = -symmetric;
    return symmetric;
}

SymmetricFactorFamily build_family(const LinkRecord& rec) {
    SymmetricFactorFamily family;
    family.r = rec.r;

    const IndexSet full = IndexSet::full(rec.r);
    for (IndexSet J : factor_subsets(rec.r)) {
        const LaurentPoly* source = nullptr;
        if (J == full) {
            source = &rec.alexander;
        } else {
            auto it = rec.sublinks.find(J);
            if (it != rec.sublinks.end()) source = &it->second;
        }
        if (source == nullptr) {
            family.missing.push_back(J);
            continue;
        }
        try {
            family.factors[J] = extract_symmetric_factor(*source, J);
        } catch (extract_error& e) {
            e.subset = J;
            throw;
        }
        family.extracted.push_back(J);
    }

    if (rec.has_knot_polys()) {
        family.knot_polys = rec.knot_polys;
    } else {
        family.knot_polys.assign(rec.r, LaurentPoly::constant(1, 1));
        family.knot_polys_defaulted = true;
    }
    return family;
}

// ---------------------------------------------------------------------------
// Specializations and sums

LaurentPoly f_sub(const SymmetricFactorFamily& family, IndexSet J, IndexSet I) {
    if (!I.subset_of(J)) throw std::invalid_argument("f_sub: I must be a subset of J");
    const LaurentPoly& f = family.factor(J);
    std::map<int, UnitFactor> images;
    for (int i : J.set_minus(I).indices()) images[i] = UnitFactor::one();
    if (images.empty()) return f;
    return substitute(f, images);
}

namespace {

void validate_frame(int r, const SubsetFrame& frame) {
    if (frame.I.is_empty()) throw std::invalid_argument("frame: I must be nonempty");
    if (frame.I.max_index() > r) throw std::invalid_argument("frame: I exceeds component count");
    IndexSet u_keys;
    for (const auto& [i, sign] : frame.u) {
        if (i < 1 || i > r) throw std::invalid_argument("frame: u index out of range");
        if (sign != 1 && sign != -1) throw std::invalid_argument("frame: u values must be ±1");
        u_keys = u_keys.set_union(IndexSet::singleton(i));
    }
    if (u_keys.set_union(frame.I) != IndexSet::full(r) || !u_keys.set_intersect(frame.I).is_empty())
        throw std::invalid_argument("frame: I and the domain of u must partition the components");
}

// η_J(u) = (−1)^{#{i ∈ J∖I : u_i = +1}}
int eta(const SubsetFrame& frame, IndexSet J) {
    int k = 0;
    for (int i : J.set_minus(frame.I).indices())
        if (frame.u.at(i) == 1) ++k;
    return (k % 2 == 0) ? 1 : -1;
}

nlohmann::json frame_to_json(const SubsetFrame& frame) {
    nlohmann::json u = nlohmann::json::object();
    for (const auto& [i, sign] : frame.u) u[std::to_string(i)] = sign;
    return {{"I", frame.I.to_string()}, {"u", u}};
}

nlohmann::json assignment_to_json(const SignAssignment& signs) {
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [subset, sign] : signs.signs) out[subset.to_string()] = sign;
    return out;
}

}  // namespace

std::pair<LaurentPoly, LaurentPoly> s_sums(const SymmetricFactorFamily& family,
                                           const SubsetFrame& frame,
                                           const SignAssignment& signs) {
    validate_frame(family.r, frame);
    LaurentPoly even(family.r), odd(family.r);
    const IndexSet complement = IndexSet::full(family.r).set_minus(frame.I);
    for (IndexSet extra : subsets_of(complement)) {
        const IndexSet J = frame.I.set_union(extra);
        if (J.size() < 2) continue;
        const int weight = eta(frame, J) * signs.sign_of(J);
        const LaurentPoly term = f_sub(family, J, frame.I) * Int(weight);
        if (extra.size() % 2 == 0)
            even += term;
        else
            odd += term;
    }
    return {even, odd};
}

std::vector<SubsetFrame> enumerate_frames(int r) {
    std::vector<SubsetFrame> out;
    for (IndexSet I : subsets_of(IndexSet::full(r), 1)) {
        if (I.size() >= r) continue;
        const std::vector<int> outside = IndexSet::full(r).set_minus(I).indices();
        for (std::uint32_t mask = 0; mask < (1u << outside.size()); ++mask) {
            SubsetFrame frame;
            frame.I = I;
            for (std::size_t k = 0; k < outside.size(); ++k)
                frame.u[outside[k]] = ((mask >> k) & 1u) ? 1 : -1;
            out.push_back(std::move(frame));
        }
    }
    return out;
}

std::vector<IndexSet> factor_subsets(int r) { return subsets_of(IndexSet::full(r), 2); }

SignAssignment assignment_from_index(const SymmetricFactorFamily& family, std::uint64_t index) {
    SignAssignment out;
    std::size_t bit = 0;
    for (const auto& [subset, poly] : family.factors) {
        (void)poly;
        out.signs[subset] = ((index >> bit) & 1ull) ? -1 : 1;
        ++bit;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parity-sum vanishing test

namespace {

// Does the frame's condition hold for these sums?
bool frame_condition_holds(const SubsetFrame& frame, const LaurentPoly& s_even,
                           const LaurentPoly& s_odd) {
    if (frame.I.size() == 1) return s_odd.is_zero();
    return s_even.is_zero() || s_odd.is_zero();
}

struct FrameEvaluation {
    std::size_t violations = 0;
    std::optional<std::size_t> first_violation;  // index into the frame list
};

// Reference evaluation of one assignment over all frames.
FrameEvaluation evaluate_assignment_serial(const SymmetricFactorFamily& family,
                                           const std::vector<SubsetFrame>& frames,
                                           const SignAssignment& signs) {
    FrameEvaluation result;
    for (std::size_t fi = 0; fi < frames.size(); ++fi) {
        const auto [s_even, s_odd] = s_sums(family, frames[fi], signs);
        if (!frame_condition_holds(frames[fi], s_even, s_odd)) {
            ++result.violations;
            if (!result.first_violation) result.first_violation = fi;
        }
    }
    return result;
}

// Packed form of one parity side of one frame: the nonzero columns
// η_J(u)·F_J(I), aligned on the union of their monomials. The sum under
// a sign assignment is zero iff every row's signed column sum is zero.
struct PackedSide {
    std::vector<std::size_t> bits;           // assignment bit per column
    std::vector<std::vector<Int>> columns;   // [column][row]
    std::size_t rows = 0;
};

struct PackedFrame {
    bool singleton = false;
    std::size_t frame_index = 0;
    PackedSide even, odd;
};

PackedSide pack_side(int arity, const std::vector<std::pair<std::size_t, LaurentPoly>>& terms) {
    PackedSide side;
    (void)arity;
    std::map<Monomial, std::size_t, MonomialLexLess> row_of;
    for (const auto& [bit, poly] : terms) {
        (void)bit;
        for (const auto& [m, c] : poly.terms()) {
            (void)c;
            row_of.emplace(m, 0);
        }
    }
    std::size_t next = 0;
    for (auto& [m, row] : row_of) {
        (void)m;
        row = next++;
    }
    side.rows = next;
    for (const auto& [bit, poly] : terms) {
        std::vector<Int> column(side.rows, Int(0));
        for (const auto& [m, c] : poly.terms()) column[row_of[m]] = c;
        side.bits.push_back(bit);
        side.columns.push_back(std::move(column));
    }
    return side;
}

bool side_zero(const PackedSide& side, std::uint64_t assignment) {
    for (std::size_t row = 0; row < side.rows; ++row) {
        Int acc = 0;
        for (std::size_t c = 0; c < side.columns.size(); ++c) {
            const Int& value = side.columns[c][row];
            if ((assignment >> side.bits[c]) & 1ull)
                acc -= value;
            else
                acc += value;
        }
        if (acc != 0) return false;
    }
    return true;
}

std::vector<PackedFrame> pack_frames(const SymmetricFactorFamily& family,
                                     const std::vector<SubsetFrame>& frames) {
    // Assignment bit per subset, in map (= ascending mask) order.
    std::map<IndexSet, std::size_t> bit_of;
    {
        std::size_t next = 0;
        for (const auto& [subset, poly] : family.factors) {
            (void)poly;
            bit_of[subset] = next++;
        }
    }

    std::vector<PackedFrame> out;
    for (std::size_t fi = 0; fi < frames.size(); ++fi) {
        const SubsetFrame& frame = frames[fi];
        PackedFrame packed;
        packed.singleton = frame.I.size() == 1;
        packed.frame_index = fi;

        std::vector<std::pair<std::size_t, LaurentPoly>> even_terms, odd_terms;
        const IndexSet complement = IndexSet::full(family.r).set_minus(frame.I);
        for (IndexSet extra : subsets_of(complement)) {
            const IndexSet J = frame.I.set_union(extra);
            if (J.size() < 2) continue;
            LaurentPoly term = f_sub(family, J, frame.I) * Int(eta(frame, J));
            if (term.is_zero()) continue;
            auto& bucket = (extra.size() % 2 == 0) ? even_terms : odd_terms;
            bucket.emplace_back(bit_of.at(J), std::move(term));
        }
        packed.even = pack_side(family.r, even_terms);
        packed.odd = pack_side(family.r, odd_terms);
        out.push_back(std::move(packed));
    }
    return out;
}

FrameEvaluation evaluate_assignment_packed(const std::vector<PackedFrame>& packed,
                                           std::uint64_t assignment) {
    FrameEvaluation result;
    for (const PackedFrame& frame : packed) {
        const bool ok = frame.singleton
                            ? side_zero(frame.odd, assignment)
                            : (side_zero(frame.even, assignment) ||
                               side_zero(frame.odd, assignment));
        if (!ok) {
            ++result.violations;
            if (!result.first_violation) result.first_violation = frame.frame_index;
        }
    }
    return result;
}

struct SearchOutcome {
    std::optional<std::uint64_t> passing_index;   // min index with 0 violations
    std::uint64_t best_index = 0;                 // argmin (violations, index)
    std::size_t best_violations = SIZE_MAX;
};

// Exhaustive ascending sweep of assignment indices; stops at the end of
// the chunk containing the first passing index. Deterministic for any
// thread count: candidates are merged by minimum index.
template <typename Evaluate>
SearchOutcome sweep_assignments(std::uint64_t total, Evaluate&& evaluate) {
    SearchOutcome outcome;
    const std::uint64_t chunk = 4096;
    for (std::uint64_t base = 0; base < total && !outcome.passing_index; base += chunk) {
        const std::uint64_t end = std::min(base + chunk, total);
#if defined(_OPENMP)
#pragma omp parallel
        {
            SearchOutcome local;
#pragma omp for nowait schedule(static)
            for (long long idx = static_cast<long long>(base); idx < static_cast<long long>(end);
                 ++idx) {
                const auto eval = evaluate(static_cast<std::uint64_t>(idx));
                if (eval.violations == 0) {
                    if (!local.passing_index || idx < static_cast<long long>(*local.passing_index))
                        local.passing_index = idx;
                } else if (eval.violations < local.best_violations ||
                           (eval.violations == local.best_violations &&
                            static_cast<std::uint64_t>(idx) < local.best_index)) {
                    local.best_violations = eval.violations;
                    local.best_index = idx;
                }
            }
#pragma omp critical
            {
                if (local.passing_index &&
                    (!outcome.passing_index || *local.passing_index < *outcome.passing_index))
                    outcome.passing_index = local.passing_index;
                if (local.best_violations < outcome.best_violations ||
                    (local.best_violations == outcome.best_violations &&
                     local.best_index < outcome.best_index)) {
                    outcome.best_violations = local.best_violations;
                    outcome.best_index = local.best_index;
                }
            }
        }
#else
        for (std::uint64_t idx = base; idx < end; ++idx) {
            const auto eval = evaluate(idx);
            if (eval.violations == 0) {
                outcome.passing_index = idx;
                break;
            }
            if (eval.violations < outcome.best_violations ||
                (eval.violations == outcome.best_violations && idx < outcome.best_index)) {
                outcome.best_violations = eval.violations;
                outcome.best_index = idx;
            }
        }
#endif
    }
    return outcome;
}

}  // namespace

Verdict check_parity_sums(const SymmetricFactorFamily& family, const SignMode& mode,
                          const ParitySumOptions& options) {
    const char* id = "parity_sums";
    if (family.r < 2) return Verdict::not_applicable(id, "needs at least two components");
    if (!family.complete()) {
        std::string missing;
        for (const IndexSet& subset : family.missing) {
            if (!missing.empty()) missing += " ";
            missing += "{" + subset.to_string() + "}";
        }
        return Verdict::not_applicable(id, "family is missing factors for " + missing);
    }

    const std::vector<SubsetFrame> frames = enumerate_frames(family.r);

    if (!mode.exists) {
        for (const auto& [subset, sign] : mode.fixed.signs) {
            if (!family.has_factor(subset))
                return Verdict::data_error(id, "sign assignment names an unknown subset {" +
                                                   subset.to_string() + "}");
            if (sign != 1 && sign != -1)
                return Verdict::data_error(id, "sign assignment values must be +1 or -1");
        }
        const auto eval = evaluate_assignment_serial(family, frames, mode.fixed);
        if (eval.violations == 0)
            return Verdict::pass(id, {{"mode", "fixed"},
                                      {"assignment", assignment_to_json(mode.fixed)},
                                      {"frames_checked", frames.size()}});
        const SubsetFrame& bad = frames[*eval.first_violation];
        const auto [s_even, s_odd] = s_sums(family, bad, mode.fixed);
        return Verdict::fail(id, {{"mode", "fixed"},
                                  {"assignment", assignment_to_json(mode.fixed)},
                                  {"violations", eval.violations},
                                  {"frame", frame_to_json(bad)},
                                  {"s_even", s_even.to_string()},
                                  {"s_odd", s_odd.to_string()}});
    }

    if (family.r > options.max_exists_r)
        return Verdict::not_applicable(
            id, "component count " + std::to_string(family.r) +
                    " exceeds the sign-search cap " + std::to_string(options.max_exists_r));
    const std::size_t bit_count = family.factors.size();
    if (bit_count >= 63)
        return Verdict::not_applicable(id, "sign assignment space is too large to enumerate");
    const std::uint64_t total = 1ull << bit_count;

    SearchOutcome outcome;
    if (options.force_serial) {
        outcome = sweep_assignments(total, [&](std::uint64_t idx) {
            return evaluate_assignment_serial(family, frames, assignment_from_index(family, idx));
        });
    } else {
        const auto packed = pack_frames(family, frames);
        outcome = sweep_assignments(
            total, [&](std::uint64_t idx) { return evaluate_assignment_packed(packed, idx); });
    }

    if (outcome.passing_index) {
        const SignAssignment signs = assignment_from_index(family, *outcome.passing_index);
        return Verdict::pass(id, {{"mode", "exists"},
                                  {"assignment_index", *outcome.passing_index},
                                  {"assignment", assignment_to_json(signs)},
                                  {"frames_checked", frames.size()}});
    }

    // No assignment works; report the closest one and its first broken
    // frame, recomputed through the reference path for the witness.
    const SignAssignment best = assignment_from_index(family, outcome.best_index);
    const auto eval = evaluate_assignment_serial(family, frames, best);
    const SubsetFrame& bad = frames[*eval.first_violation];
    const auto [s_even, s_odd] = s_sums(family, bad, best);
    return Verdict::fail(id, {{"mode", "exists"},
                              {"assignments_tried", total},
                              {"violations", eval.violations},
                              {"assignment_index", outcome.best_index},
                              {"assignment", assignment_to_json(best)},
                              {"frame", frame_to_json(bad)},
                              {"s_even", s_even.to_string()},
                              {"s_odd", s_odd.to_string()}});
}

// ---------------------------------------------------------------------------
// Vanishing tests on the full-set factor

std::vector<Verdict> check_factor_vanishing(const SymmetricFactorFamily& family) {
    std::vector<Verdict> out;
    const int r = family.r;
    const IndexSet full = IndexSet::full(r);

    {
        const char* id = "factor_vanishing.single";
        if (r % 2 != 0) {
            out.push_back(Verdict::not_applicable(id, "applies to even component counts"));
        } else if (!family.has_factor(full)) {
            out.push_back(Verdict::not_applicable(id, "full-set factor unavailable"));
        } else {
            nlohmann::json offenders = nlohmann::json::array();
            for (int i = 1; i <= r; ++i) {
                const LaurentPoly F = f_sub(family, full, IndexSet::singleton(i));
                if (!F.is_zero())
                    offenders.push_back({{"component", i}, {"specialization", F.to_string()}});
            }
            if (offenders.empty())
                out.push_back(Verdict::pass(id));
            else
                out.push_back(Verdict::fail(
                    id, {{"reason", "the full-set factor must vanish when all variables but "
                                    "one are set to 1"},
                         {"offenders", offenders}}));
        }
    }

    if (r < 2) return out;

    for (int i = 1; i <= r; ++i) {
        const std::string id = "factor_vanishing.codim1." + std::to_string(i);
        if (!family.has_factor(full)) {
            out.push_back(Verdict::not_applicable(id, "full-set factor unavailable"));
            continue;
        }
        const IndexSet I = full.set_minus(IndexSet::singleton(i));
        const LaurentPoly F = f_sub(family, full, I);
        if (r == 2) {
            // The remaining sublink is a single component whose
            // polynomial is nonzero by normalization, so F must vanish.
            if (F.is_zero())
                out.push_back(Verdict::pass(id));
            else
                out.push_back(Verdict::fail(
                    id, {{"reason", "specialization must vanish because the remaining "
                                    "component's polynomial cannot"},
                         {"deleted_component", i},
                         {"specialization", F.to_string()}}));
            continue;
        }
        if (!family.has_factor(I)) {
            out.push_back(Verdict::not_applicable(
                id, "factor for {" + I.to_string() + "} unavailable"));
            continue;
        }
        const LaurentPoly& f_I = family.factor(I);
        if (!f_I.is_zero() && !F.is_zero())
            out.push_back(Verdict::fail(
                id, {{"reason", "the sublink factor and the specialization cannot both be "
                                "nonzero"},
                     {"deleted_component", i},
                     {"sublink_factor", f_I.to_string()},
                     {"specialization", F.to_string()}}));
        else
            out.push_back(Verdict::pass(id));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Two-variable divisibility

Verdict check_split_divisibility(const LaurentPoly& delta, TwoVarMode mode) {
    if (delta.arity() != 2)
        throw std::invalid_argument("check_split_divisibility: needs an arity-2 polynomial");
    const char* id = (mode == TwoVarMode::AMPHI) ? "divisibility.amphicheiral"
                                                 : "divisibility.eps_amphicheiral";
    if (delta.is_zero()) return Verdict::pass(id, {{"note", "zero polynomial"}});

    const LaurentPoly t1 = LaurentPoly::variable(2, 1);
    const LaurentPoly t2 = LaurentPoly::variable(2, 2);
    const LaurentPoly one = LaurentPoly::constant(2, 1);
    std::vector<LaurentPoly> factors = {t1 - one, t1 - one, t2 - one, t2 - one};
    if (mode == TwoVarMode::EPS_AMPHI) {
        factors.push_back(t1 * t2 - one);
        factors.push_back(t1 - t2);
    }

    LaurentPoly acc = delta;
    for (std::size_t k = 0; k < factors.size(); ++k) {
        auto q = try_divide_exact(acc, {factors[k]});
        if (!q)
            return Verdict::fail(id, {{"reason", "polynomial is not divisible by the required "
                                                 "product"},
                                      {"factors_divided", k},
                                      {"failed_factor", factors[k].to_string()}});
        acc = std::move(*q);
    }
    return Verdict::pass(id, {{"quotient", acc.to_string()}});
}

// ---------------------------------------------------------------------------
// Diagonal specialization

Verdict check_diagonal_vanishing(const LaurentPoly& delta) {
    const char* id = "diagonal_vanishing";
    const int r = delta.arity();
    if (r < 1) return Verdict::not_applicable(id, "needs at least one component");
    if (r % 2 != 0) return Verdict::not_applicable(id, "applies to even component counts");

    for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
        std::map<int, UnitFactor> images;
        nlohmann::json signs = nlohmann::json::array();
        for (int i = 1; i <= r; ++i) {
            const int e = ((mask >> (i - 1)) & 1u) ? -1 : 1;
            signs.push_back(e);
            images[i] = UnitFactor::of(1, Monomial::variable(1, e));
        }
        const LaurentPoly image = substitute(delta, images, 1);
        if (!image.is_zero())
            return Verdict::fail(id, {{"reason", "one-variable specialization must vanish"},
                                      {"signs", signs},
                                      {"image", image.to_string()}});
    }
    return Verdict::pass(id, {{"specializations_checked", 1u << r}});
}

// ---------------------------------------------------------------------------
// Surgery torsion

bool torsion_doteq(const TorsionExpr& a, const TorsionExpr& b) {
    LaurentPoly lhs = a.numerator;
    for (const auto& d : b.denominator_factors) lhs *= d;
    LaurentPoly rhs = b.numerator;
    for (const auto& d : a.denominator_factors) rhs *= d;
    return doteq(lhs, rhs);
}

bool torsion_equal_exact(const TorsionExpr& a, const TorsionExpr& b) {
    LaurentPoly lhs = a.numerator;
    for (const auto& d : b.denominator_factors) lhs *= d;
    LaurentPoly rhs = b.numerator;
    for (const auto& d : a.denominator_factors) rhs *= d;
    return lhs == rhs;
}

TorsionExpr surgery_torsion(const SymmetricFactorFamily& family, const SubsetFrame& frame) {
    validate_frame(family.r, frame);
    const int s = frame.I.size();
    if (s < 1 || s >= family.r)
        throw std::invalid_argument("surgery_torsion: frame size must be in [1, r-1]");

    const auto [s_even, s_odd] = s_sums(family, frame, SignAssignment::trivial(family));
    const LaurentPoly sum = s_even + s_odd;

    TorsionExpr out;
    if (s == 1) {
        const int x = frame.I.indices().front();
        if (static_cast<int>(family.knot_polys.size()) != family.r)
            throw missing_knot_poly_error(x);
        const LaurentPoly knot = substitute(
            family.knot_polys[x - 1], {{1, UnitFactor::of(1, Monomial::variable(x))}}, family.r);
        const LaurentPoly tx_minus_one =
            LaurentPoly::variable(family.r, x) - LaurentPoly::constant(family.r, 1);
        out.numerator = knot + tx_minus_one * tx_minus_one * sum;
        out.denominator_factors.push_back(tx_minus_one);
    } else {
        LaurentPoly product = LaurentPoly::constant(family.r, 1);
        for (int i : frame.I.indices())
            product *= LaurentPoly::variable(family.r, i) - LaurentPoly::constant(family.r, 1);
        out.numerator = product * sum;
    }
    return out;
}

}  // namespace amphicheck

// Link records (component count, linking matrix, Alexander-type
// polynomial data), their JSON serialization, and the classical
// identities every genuine link satisfies: the duality symmetry of the
// multivariable polynomial, the one-variable-collapse compatibility with
// sublink polynomials, sign-pattern symmetry, and linking-number screens.

#pragma once

#include "amphicheck/index_set.hpp"
#include "amphicheck/laurent.hpp"

#include "json.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace amphicheck {

enum class Status { PASS, FAIL, NOT_APPLICABLE, DATA_ERROR };

std::string to_string(Status status);
std::optional<Status> status_from_string(std::string_view text);

// Outcome of one named check. FAIL always carries a witness explaining
// what broke; NOT_APPLICABLE and DATA_ERROR carry a reason.
struct Verdict {
    Status status = Status::PASS;
    std::string test_id;
    nlohmann::json witness = nlohmann::json::object();

    static Verdict pass(std::string test_id, nlohmann::json witness = nlohmann::json::object());
    static Verdict fail(std::string test_id, nlohmann::json witness);
    static Verdict not_applicable(std::string test_id, std::string reason);
    static Verdict data_error(std::string test_id, std::string reason);

    bool operator==(const Verdict& other) const = default;
};

// One link's data. Conventions:
//  - components are indexed 1..r; linking_matrix is r×r, symmetric,
//    zero on the diagonal;
//  - `alexander` has arity r;
//  - `sublinks` maps a proper index set I (2 ≤ |I| ≤ r-1) to the
//    polynomial of the sublink on those components, stored at ambient
//    arity r with support inside I;
//  - `knot_polys` is empty (absent) or holds r one-variable polynomials
//    (arity 1, variable t1), each taking the value ±1 at t1 = 1.
struct LinkRecord {
    std::string name;
    int r = 0;
    std::vector<std::vector<int>> linking_matrix;
    LaurentPoly alexander;
    std::map<IndexSet, LaurentPoly> sublinks;
    std::vector<LaurentPoly> knot_polys;

    bool has_knot_polys() const { return !knot_polys.empty(); }
    int linking(int i, int j) const { return linking_matrix.at(i - 1).at(j - 1); }

    bool operator==(const LinkRecord& other) const = default;
};

// Structural problems (schema invariants) with the record, in a fixed
// order; empty means the record is well-formed.
std::vector<std::string> structural_problems(const LinkRecord& rec);

// JSON schema, one object per record:
//   { "name": str, "components": int, "linking_matrix": [[int]],
//     "alexander": expr, "sublinks": {"1,3": expr, ...},
//     "knot_polys": [expr, ...] }
// sublinks and knot_polys are optional. Files hold arrays of records.
LinkRecord record_from_json(const nlohmann::json& j);  // throws std::runtime_error
nlohmann::json record_to_json(const LinkRecord& rec);

// One entry of a record file: either a record or the reason it was
// rejected (malformed JSON value, schema violation, structural problem).
struct RecordParse {
    std::string name;  // best-effort, for reporting
    std::optional<LinkRecord> record;
    std::string error;
};

// Parses a JSON array of record objects. Per-entry failures land in the
// corresponding RecordParse; a top-level parse failure throws.
std::vector<RecordParse> parse_records_text(const std::string& text);

// true iff every off-diagonal linking number is zero (vacuous for r = 1).
bool is_algebraically_split(const LinkRecord& rec);

// Duality symmetry: for r >= 2 the polynomial must equal
// (-1)^r t1^{a1}...tr^{ar} times its variable-inverse, with each
// a_i ≡ 1 + Σ_{j≠i} lk(K_i,K_j) (mod 2); for r = 1 it must equal
// t^a times its inverse with a even. Zero polynomial passes. The unit
// relating the two sides is unique, so it is computed directly and its
// sign/exponent parities are checked. test_id "duality".
Verdict check_duality(const LinkRecord& rec);

// Collapse compatibility for deleting component `deleted`: substitutes 1
// for that variable and compares against the stored polynomial of the
// remaining sublink, scaled by (∏ t_i^{ℓ_i} − 1) where ℓ_i is the
// linking number with the deleted component. When the remaining link is
// a single component the identity takes the divided form, checked after
// cross-multiplying by (t_i − 1). When every ℓ_i is zero the right side
// vanishes and the check degenerates to "collapse is zero", needing no
// sublink data. test_id "torres.delete_<deleted>".
Verdict check_torres(const LinkRecord& rec, int deleted);

// Linking-number screens, in order:
//  - "linking.pair_even": for r = 2, a nonzero even linking number means
//    the link is not component-preservingly amphicheiral (FAIL);
//    NOT_APPLICABLE for other r.
//  - "linking.odd_cycle": FAIL when the graph on components with edges
//    at nonzero linking numbers contains an odd cycle (the cycle's
//    linking products cannot all flip sign); PASS otherwise.
//  - "linking.invertibility_note": informational, emitted only for
//    r = 2 with nonzero linking number.
std::vector<Verdict> linking_screen(const LinkRecord& rec);

// Sign-pattern symmetry: compares the polynomial against its image under
// t_i -> t_i^{eps_i} up to unit. FAIL rules out both (eps)-amphicheiral
// and component-preservingly (eps)-invertible. eps must hold r entries,
// each ±1. test_id "eps_symmetry.<pattern>" with pattern like "+-".
Verdict check_eps_symmetry(const LinkRecord& rec, const std::vector<int>& eps);

// "+-+" for eps = (+1,-1,+1).
std::string eps_pattern(const std::vector<int>& eps);

}  // namespace amphicheck

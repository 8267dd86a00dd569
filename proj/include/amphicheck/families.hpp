// Closed-form generators for the example link families used as fixtures
// and as a demonstration corpus: the chained Milnor links, the 2-bridge
// family C(2a, 2b, −2a), and a few named links with known polynomials.

#pragma once

#include "amphicheck/linkdata.hpp"

#include <string>
#include <vector>

namespace amphicheck {

// λ-component chained link (λ ≥ 3): all linking numbers zero;
// polynomial (t1−1)(t2−1)(t3−1) for λ = 3 and 0 for λ ≥ 4. For λ = 3
// the 2-component sublinks are trivial (polynomial 0) and are included;
// for λ ≥ 4 sublink polynomials are not known in closed form here and
// are omitted. Knot polynomials are all 1 (unknotted components).
LinkRecord milnor_record(int lambda);

// 2-bridge link C(2a, 2b, −2a), a ≠ 0, b ≠ 0: two unknotted components,
// linking number zero, polynomial
//   b·(t1−1)(t2−1)·(((t1t2)^a − 1)/(t1t2 − 1))²
// with the inner quotient expanded exactly (a Laurent polynomial for
// either sign of a). (1,1) gives the Whitehead link.
LinkRecord two_bridge_caa_record(int a, int b);

// Hard-coded records: "borromean" (= milnor_record(3)), "whitehead"
// (= two_bridge_caa_record(1,1)), "10n59" with polynomial
// (t1−1)(t2−1)(t1−t2)(t1t2−1), and "11n247" with polynomial 0.
// Throws std::invalid_argument for unknown names.
LinkRecord named_fixture(const std::string& name);

std::vector<std::string> fixture_names();

}  // namespace amphicheck

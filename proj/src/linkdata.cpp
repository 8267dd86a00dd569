#include "amphicheck/linkdata.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace amphicheck {

std::string to_string(Status status) {
    switch (status) {
        case Status::PASS: return "PASS";
        case Status::FAIL: return "FAIL";
        case Status::NOT_APPLICABLE: return "NOT_APPLICABLE";
        case Status::DATA_ERROR: return "DATA_ERROR";
    }
    return "?";
}

std::optional<Status> status_from_string(std::string_view text) {
    if (text == "PASS") return Status::PASS;
    if (text == "FAIL") return Status::FAIL;
    if (text == "NOT_APPLICABLE") return Status::NOT_APPLICABLE;
    if (text == "DATA_ERROR") return Status::DATA_ERROR;
    return std::nullopt;
}

Verdict Verdict::pass(std::string test_id, nlohmann::json witness) {
    return {Status::PASS, std::move(test_id), std::move(witness)};
}

Verdict Verdict::fail(std::string test_id, nlohmann::json witness) {
    return {Status::FAIL, std::move(test_id), std::move(witness)};
}

Verdict Verdict::not_applicable(std::string test_id, std::string reason) {
    return {Status::NOT_APPLICABLE, std::move(test_id), {{"reason", std::move(reason)}}};
}

Verdict Verdict::data_error(std::string test_id, std::string reason) {
    return {Status::DATA_ERROR, std::move(test_id), {{"reason", std::move(reason)}}};
}

// ---------------------------------------------------------------------------
// Structural validation

namespace {

// Evaluates a one-variable polynomial at t1 = 1.
Int value_at_one(const LaurentPoly& p) {
    Int total = 0;
    for (const auto& [m, c] : p.terms()) {
        (void)m;
        total += c;
    }
    return total;
}

}  // namespace

std::vector<std::string> structural_problems(const LinkRecord& rec) {
    std::vector<std::string> problems;
    if (rec.r < 1) {
        problems.push_back("component count must be >= 1");
        return problems;
    }
    if (rec.r > IndexSet::max_index_limit) {
        problems.push_back("component count exceeds the supported limit of 32");
        return problems;
    }

    if (static_cast<int>(rec.linking_matrix.size()) != rec.r) {
        problems.push_back("linking_matrix must have one row per component");
    } else {
        for (int i = 0; i < rec.r; ++i)
            if (static_cast<int>(rec.linking_matrix[i].size()) != rec.r) {
                problems.push_back("linking_matrix row " + std::to_string(i + 1) +
                                   " must have one entry per component");
                return problems;
            }
        for (int i = 0; i < rec.r; ++i) {
            if (rec.linking_matrix[i][i] != 0)
                problems.push_back("linking_matrix diagonal entry " + std::to_string(i + 1) +
                                   " must be zero");
            for (int j = i + 1; j < rec.r; ++j)
                if (rec.linking_matrix[i][j] != rec.linking_matrix[j][i])
                    problems.push_back("linking_matrix must be symmetric at (" +
                                       std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        }
    }

    if (rec.alexander.arity() != rec.r)
        problems.push_back("alexander polynomial arity must equal the component count");

    for (const auto& [subset, poly] : rec.sublinks) {
        const std::string key = subset.to_string();
        if (subset.size() < 2)
            problems.push_back("sublink \"" + key + "\" must have at least 2 components");
        if (subset.size() >= rec.r)
            problems.push_back("sublink \"" + key +
                               "\" must be a proper subset of the components");
        if (subset.max_index() > rec.r)
            problems.push_back("sublink \"" + key + "\" uses a component index beyond " +
                               std::to_string(rec.r));
        if (poly.arity() != rec.r)
            problems.push_back("sublink \"" + key + "\" polynomial must be stored at arity " +
                               std::to_string(rec.r));
        else if (!poly.supported_on(subset.indices()))
            problems.push_back("sublink \"" + key +
                               "\" polynomial uses variables outside its index set");
    }

    if (!rec.knot_polys.empty()) {
        if (static_cast<int>(rec.knot_polys.size()) != rec.r) {
            problems.push_back("knot_polys must hold one polynomial per component");
        } else {
            for (int i = 0; i < rec.r; ++i) {
                if (rec.knot_polys[i].arity() != 1) {
                    problems.push_back("knot polynomial " + std::to_string(i + 1) +
                                       " must be one-variable");
                    continue;
                }
                const Int v = value_at_one(rec.knot_polys[i]);
                if (v != 1 && v != -1)
                    problems.push_back("knot polynomial " + std::to_string(i + 1) +
                                       " must take the value 1 or -1 at t1 = 1");
            }
        }
    }
    return problems;
}

// ---------------------------------------------------------------------------
// JSON serialization

LinkRecord record_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::runtime_error("record must be a JSON object");

    LinkRecord rec;
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw std::runtime_error("\"name\" must be a string");
        rec.name = j["name"].get<std::string>();
    }
    if (!j.contains("components") || !j["components"].is_number_integer())
        throw std::runtime_error("\"components\" must be an integer");
    rec.r = j["components"].get<int>();
    if (rec.r < 1 || rec.r > IndexSet::max_index_limit)
        throw std::runtime_error("\"components\" must be in [1, 32]");

    if (!j.contains("linking_matrix") || !j["linking_matrix"].is_array())
        throw std::runtime_error("\"linking_matrix\" must be an array of integer rows");
    for (const auto& row : j["linking_matrix"]) {
        if (!row.is_array()) throw std::runtime_error("linking_matrix rows must be arrays");
        std::vector<int> out_row;
        for (const auto& entry : row) {
            if (!entry.is_number_integer())
                throw std::runtime_error("linking_matrix entries must be integers");
            out_row.push_back(entry.get<int>());
        }
        rec.linking_matrix.push_back(std::move(out_row));
    }

    if (!j.contains("alexander") || !j["alexander"].is_string())
        throw std::runtime_error("\"alexander\" must be an expression string");
    try {
        rec.alexander = parse_poly(j["alexander"].get<std::string>(), rec.r);
    } catch (const parse_error& e) {
        throw std::runtime_error(std::string("\"alexander\": ") + e.what());
    }

    if (j.contains("sublinks")) {
        if (!j["sublinks"].is_object())
            throw std::runtime_error("\"sublinks\" must be an object keyed by index sets");
        for (const auto& [key, value] : j["sublinks"].items()) {
            IndexSet subset;
            try {
                subset = IndexSet::from_string(key);
            } catch (const std::invalid_argument& e) {
                throw std::runtime_error("sublink key \"" + key + "\": " + e.what());
            }
            if (!value.is_string())
                throw std::runtime_error("sublink \"" + key + "\" must be an expression string");
            try {
                rec.sublinks[subset] = parse_poly(value.get<std::string>(), rec.r);
            } catch (const parse_error& e) {
                throw std::runtime_error("sublink \"" + key + "\": " + e.what());
            }
        }
    }

    if (j.contains("knot_polys")) {
        if (!j["knot_polys"].is_array())
            throw std::runtime_error("\"knot_polys\" must be an array of expression strings");
        for (const auto& entry : j["knot_polys"]) {
            if (!entry.is_string())
                throw std::runtime_error("knot_polys entries must be expression strings");
            try {
                rec.knot_polys.push_back(parse_poly(entry.get<std::string>(), 1));
            } catch (const parse_error& e) {
                throw std::runtime_error(std::string("knot_polys: ") + e.what());
            }
        }
    }

    const auto problems = structural_problems(rec);
    if (!problems.empty()) {
        std::string joined;
        for (const auto& p : problems) {
            if (!joined.empty()) joined += "; ";
            joined += p;
        }
        throw std::runtime_error(joined);
    }
    return rec;
}

nlohmann::json record_to_json(const LinkRecord& rec) {
    nlohmann::json j;
    j["name"] = rec.name;
    j["components"] = rec.r;
    j["linking_matrix"] = rec.linking_matrix;
    j["alexander"] = rec.alexander.to_string();
    if (!rec.sublinks.empty()) {
        nlohmann::json subs = nlohmann::json::object();
        for (const auto& [subset, poly] : rec.sublinks) subs[subset.to_string()] = poly.to_string();
        j["sublinks"] = std::move(subs);
    }
    if (!rec.knot_polys.empty()) {
        nlohmann::json knots = nlohmann::json::array();
        for (const auto& poly : rec.knot_polys) knots.push_back(poly.to_string());
        j["knot_polys"] = std::move(knots);
    }
    return j;
}

std::vector<RecordParse> parse_records_text(const std::string& text) {
    nlohmann::json root = nlohmann::json::parse(text);  // throws on malformed JSON
    if (!root.is_array())
        throw std::runtime_error("record file must hold a JSON array of records");
    std::vector<RecordParse> out;
    for (std::size_t i = 0; i < root.size(); ++i) {
        RecordParse entry;
        const auto& item = root[i];
        if (item.is_object() && item.contains("name") && item["name"].is_string())
            entry.name = item["name"].get<std::string>();
        else
            entry.name = "record[" + std::to_string(i) + "]";
        try {
            entry.record = record_from_json(item);
            if (entry.record->name.empty()) entry.record->name = entry.name;
        } catch (const std::exception& e) {
            entry.error = e.what();
        }
        out.push_back(std::move(entry));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Checks

bool is_algebraically_split(const LinkRecord& rec) {
    for (int i = 0; i < rec.r; ++i)
        for (int j = 0; j < rec.r; ++j)
            if (i != j && rec.linking_matrix[i][j] != 0) return false;
    return true;
}

Verdict check_duality(const LinkRecord& rec) {
    const char* id = "duality";
    if (rec.alexander.arity() != rec.r)
        return Verdict::data_error(id, "alexander polynomial arity does not match components");
    if (rec.alexander.is_zero())
        return Verdict::pass(id, {{"note", "zero polynomial, identity holds vacuously"}});

    const LaurentPoly inv = invert_variables(rec.alexander);
    const auto unit = equal_up_to_unit(rec.alexander, inv);
    if (!unit) {
        return Verdict::fail(id, {{"reason", "polynomial is not a unit multiple of its "
                                             "variable-inverse"},
                                  {"polynomial", rec.alexander.to_string()}});
    }

    nlohmann::json exponents = nlohmann::json::array();
    for (int i = 1; i <= rec.r; ++i) exponents.push_back(unit->monomial.exponent(i));

    const int required_sign = (rec.r % 2 == 0) ? 1 : -1;
    if (rec.r == 1) {
        const int a = unit->monomial.exponent(1);
        if (unit->sign != 1 || a % 2 != 0)
            return Verdict::fail(id, {{"reason", "one-variable symmetry requires a positive "
                                                 "unit with even exponent"},
                                      {"sign", unit->sign},
                                      {"exponent", a}});
        return Verdict::pass(id, {{"sign", unit->sign}, {"exponents", exponents}});
    }

    if (unit->sign != required_sign)
        return Verdict::fail(id, {{"reason", "unit sign must be (-1)^r"},
                                  {"sign", unit->sign},
                                  {"required_sign", required_sign},
                                  {"exponents", exponents}});
    for (int i = 1; i <= rec.r; ++i) {
        int lk_sum = 0;
        for (int j = 1; j <= rec.r; ++j)
            if (j != i) lk_sum += rec.linking(i, j);
        const int a = unit->monomial.exponent(i);
        // a_i ≡ 1 + Σ_{j≠i} lk (mod 2)
        if (((a - 1 - lk_sum) % 2 + 2) % 2 != 0)
            return Verdict::fail(id, {{"reason", "unit exponent parity violates the linking "
                                                 "constraint"},
                                      {"component", i},
                                      {"exponent", a},
                                      {"linking_sum", lk_sum},
                                      {"exponents", exponents}});
    }
    return Verdict::pass(id, {{"sign", unit->sign}, {"exponents", exponents}});
}

Verdict check_torres(const LinkRecord& rec, int deleted) {
    const std::string id = "torres.delete_" + std::to_string(deleted);
    if (deleted < 1 || deleted > rec.r)
        throw std::invalid_argument("check_torres: component index out of range");
    if (rec.r < 2)
        return Verdict::not_applicable(id, "needs at least two components");

    const IndexSet remaining = IndexSet::full(rec.r).set_minus(IndexSet::singleton(deleted));
    const LaurentPoly collapsed = set_variable_to_one(rec.alexander, deleted);

    // ∏_{i∈remaining} t_i^{lk(i, deleted)}
    Monomial link_mono;
    bool all_zero = true;
    for (int i : remaining.indices()) {
        const int l = rec.linking(i, deleted);
        if (l != 0) all_zero = false;
        link_mono = link_mono * Monomial::variable(i, l);
    }

    if (all_zero) {
        // Right side vanishes; no sublink data needed.
        if (collapsed.is_zero())
            return Verdict::pass(id, {{"note", "degenerate case: zero linking with the deleted "
                                               "component forces a zero collapse"}});
        return Verdict::fail(id, {{"reason", "collapse must vanish when the deleted component "
                                             "has zero linking with the rest"},
                                  {"collapsed", collapsed.to_string()}});
    }

    const LaurentPoly scale =
        LaurentPoly::term(rec.r, link_mono, 1) - LaurentPoly::constant(rec.r, 1);

    if (rec.r == 2) {
        // Remaining link is one component: cross-multiplied divided form
        //   collapse·(t_i − 1) ≐ (t_i^ℓ − 1)·knot_poly.
        const int i = remaining.indices().front();
        if (!rec.has_knot_polys())
            return Verdict::data_error(id, "needs the knot polynomial of component " +
                                               std::to_string(i));
        const LaurentPoly knot =
            substitute(rec.knot_polys[i - 1], {{1, UnitFactor::of(1, Monomial::variable(i))}},
                       rec.r);
        const LaurentPoly var_minus_one =
            LaurentPoly::variable(rec.r, i) - LaurentPoly::constant(rec.r, 1);
        const LaurentPoly lhs = collapsed * var_minus_one;
        const LaurentPoly rhs = scale * knot;
        if (doteq(lhs, rhs))
            return Verdict::pass(id, {{"collapsed", collapsed.to_string()}});
        return Verdict::fail(id, {{"reason", "collapse does not match the remaining knot "
                                             "polynomial"},
                                  {"lhs", lhs.to_string()},
                                  {"rhs", rhs.to_string()}});
    }

    const auto it = rec.sublinks.find(remaining);
    if (it == rec.sublinks.end())
        return Verdict::data_error(id, "needs the sublink polynomial for {" +
                                           remaining.to_string() + "}");
    const LaurentPoly rhs = scale * it->second;
    if (doteq(collapsed, rhs))
        return Verdict::pass(id, {{"collapsed", collapsed.to_string()}});
    return Verdict::fail(id, {{"reason", "collapse does not match the scaled sublink polynomial"},
                              {"lhs", collapsed.to_string()},
                              {"rhs", rhs.to_string()}});
}

namespace {

// Finds an odd cycle in the graph on 1..r with the given edges, as a
// vertex list, or empty when the graph is bipartite.
std::vector<int> find_odd_cycle(int r, const std::vector<std::vector<bool>>& edge) {
    std::vector<int> color(r + 1, -1), parent(r + 1, 0);
    for (int start = 1; start <= r; ++start) {
        if (color[start] != -1) continue;
        std::deque<int> queue{start};
        color[start] = 0;
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            for (int w = 1; w <= r; ++w) {
                if (!edge[v][w]) continue;
                if (color[w] == -1) {
                    color[w] = color[v] ^ 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if (color[w] == color[v]) {
                    // Same-color edge closes an odd cycle: climb both
                    // ancestries to the meeting point.
                    std::vector<int> va{v}, wa{w};
                    auto contains = [](const std::vector<int>& xs, int x) {
                        return std::find(xs.begin(), xs.end(), x) != xs.end();
                    };
                    int a = v;
                    while (a != start) {
                        a = parent[a];
                        va.push_back(a);
                    }
                    int b = w;
                    while (!contains(va, b)) {
                        b = parent[b];
                        wa.push_back(b);
                    }
                    std::vector<int> cycle;
                    for (int x : va) {
                        cycle.push_back(x);
                        if (x == b) break;
                    }
                    for (auto itr = wa.rbegin(); itr != wa.rend(); ++itr)
                        if (*itr != b) cycle.push_back(*itr);
                    return cycle;
                }
            }
        }
    }
    return {};
}

}  // namespace

std::vector<Verdict> linking_screen(const LinkRecord& rec) {
    std::vector<Verdict> out;

    if (rec.r == 2) {
        const int l = rec.linking(1, 2);
        if (l != 0 && l % 2 == 0)
            out.push_back(Verdict::fail(
                "linking.pair_even",
                {{"reason", "a two-component link with nonzero even linking number is not "
                            "component-preservingly amphicheiral"},
                 {"linking_number", l}}));
        else
            out.push_back(Verdict::pass("linking.pair_even", {{"linking_number", l}}));
    } else {
        out.push_back(
            Verdict::not_applicable("linking.pair_even", "applies to two-component links"));
    }

    std::vector<std::vector<bool>> edge(rec.r + 1, std::vector<bool>(rec.r + 1, false));
    for (int i = 1; i <= rec.r; ++i)
        for (int j = 1; j <= rec.r; ++j)
            if (i != j && rec.linking(i, j) != 0) edge[i][j] = true;
    const auto cycle = find_odd_cycle(rec.r, edge);
    if (cycle.empty()) {
        out.push_back(Verdict::pass("linking.odd_cycle"));
    } else {
        long long product = 1;
        nlohmann::json cycle_json = nlohmann::json::array();
        for (std::size_t k = 0; k < cycle.size(); ++k) {
            cycle_json.push_back(cycle[k]);
            product *= rec.linking(cycle[k], cycle[(k + 1) % cycle.size()]);
        }
        out.push_back(Verdict::fail(
            "linking.odd_cycle",
            {{"reason", "an odd cycle of nonzero linking numbers rules out "
                        "component-preserving amphicheirality"},
             {"cycle", cycle_json},
             {"cycle_product", product}}));
    }

    if (rec.r == 2 && rec.linking(1, 2) != 0)
        out.push_back(Verdict::not_applicable(
            "linking.invertibility_note",
            "with nonzero linking number, only simultaneous reversal of both components can "
            "be an invertibility symmetry"));

    return out;
}

std::string eps_pattern(const std::vector<int>& eps) {
    std::string out;
    for (int e : eps) out += (e >= 0 ? '+' : '-');
    return out;
}

Verdict check_eps_symmetry(const LinkRecord& rec, const std::vector<int>& eps) {
    const std::string id = "eps_symmetry." + eps_pattern(eps);
    if (static_cast<int>(eps.size()) != rec.r)
        return Verdict::data_error(id, "sign vector length must equal the component count");
    for (int e : eps)
        if (e != 1 && e != -1)
            return Verdict::data_error(id, "sign vector entries must be +1 or -1");

    std::map<int, UnitFactor> images;
    for (int i = 1; i <= rec.r; ++i)
        images[i] = UnitFactor::of(1, Monomial::variable(i, eps[i - 1]));
    const LaurentPoly image = substitute(rec.alexander, images);
    if (doteq(rec.alexander, image)) return Verdict::pass(id);
    return Verdict::fail(
        id, {{"reason", "polynomial changes under the sign pattern; the link is neither "
                        "amphicheiral nor invertible with these component signs "
                        "(component-preservingly)"},
             {"pattern", eps_pattern(eps)},
             {"polynomial", rec.alexander.to_string()},
             {"image", image.to_string()}});
}

}  // namespace amphicheck

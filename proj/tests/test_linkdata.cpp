#include <string>
#include <vector>

#include "amphicheck/families.hpp"
#include "amphicheck/linkdata.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace amphicheck;

namespace {

LinkRecord make_record(std::string name, int r, std::vector<std::vector<int>> lk,
                       const char* alexander) {
    LinkRecord rec;
    rec.name = std::move(name);
    rec.r = r;
    rec.linking_matrix = std::move(lk);
    rec.alexander = parse_poly(alexander, r);
    return rec;
}

// Two components, trefoil clasped to an unknot with linking number 1.
LinkRecord trefoil_clasp_record() {
    LinkRecord rec = make_record("trefoil_clasp", 2, {{0, 1}, {1, 0}}, "t1^2 - t1 + 1");
    rec.knot_polys = {parse_poly("t1^2 - t1 + 1", 1), parse_poly("1", 1)};
    return rec;
}

}  // namespace

TEST_CASE("status names round-trip") {
    for (Status s : {Status::PASS, Status::FAIL, Status::NOT_APPLICABLE, Status::DATA_ERROR})
        CHECK(status_from_string(to_string(s)) == s);
    CHECK_FALSE(status_from_string("bogus").has_value());
}

TEST_CASE("well-formed records report no structural problems") {
    CHECK(structural_problems(named_fixture("borromean")).empty());
    CHECK(structural_problems(named_fixture("whitehead")).empty());
    CHECK(structural_problems(named_fixture("10n59")).empty());
    CHECK(structural_problems(trefoil_clasp_record()).empty());
}

TEST_CASE("structural problems are detected") {
    SUBCASE("matrix shape") {
        LinkRecord rec = make_record("x", 2, {{0, 1}}, "t1*t2 - 1");
        CHECK_FALSE(structural_problems(rec).empty());
    }
    SUBCASE("asymmetric matrix") {
        LinkRecord rec = make_record("x", 2, {{0, 1}, {2, 0}}, "t1*t2 - 1");
        CHECK_FALSE(structural_problems(rec).empty());
    }
    SUBCASE("nonzero diagonal") {
        LinkRecord rec = make_record("x", 2, {{1, 0}, {0, 0}}, "t1*t2 - 1");
        CHECK_FALSE(structural_problems(rec).empty());
    }
    SUBCASE("alexander arity off") {
        LinkRecord rec = make_record("x", 2, {{0, 0}, {0, 0}}, "t1 - 1");
        rec.alexander = parse_poly("t1*t2*t3 - 1", 3);
        CHECK_FALSE(structural_problems(rec).empty());
    }
    SUBCASE("sublink key not a proper middle subset") {
        LinkRecord rec = make_record("x", 3, {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}, "0");
        rec.sublinks[IndexSet::singleton(2)] = LaurentPoly::zero(3);
        CHECK_FALSE(structural_problems(rec).empty());
    }
    SUBCASE("sublink polynomial uses variables outside its subset") {
        LinkRecord rec = make_record("x", 3, {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}, "0");
        rec.sublinks[IndexSet::of({1, 2})] = parse_poly("t3 - 1", 3);
        CHECK_FALSE(structural_problems(rec).empty());
    }
    SUBCASE("knot polynomial count") {
        LinkRecord rec = make_record("x", 2, {{0, 0}, {0, 0}}, "0");
        rec.knot_polys = {parse_poly("1", 1)};
        CHECK_FALSE(structural_problems(rec).empty());
    }
    SUBCASE("knot polynomial value at 1 must be a unit") {
        LinkRecord rec = make_record("x", 2, {{0, 0}, {0, 0}}, "0");
        rec.knot_polys = {parse_poly("t1 + 1", 1), parse_poly("1", 1)};
        CHECK_FALSE(structural_problems(rec).empty());
        rec.knot_polys = {parse_poly("-1", 1), parse_poly("t1^2 - t1 + 1", 1)};
        CHECK(structural_problems(rec).empty());
    }
}

TEST_CASE("record JSON round-trips") {
    for (const char* name : {"borromean", "whitehead", "10n59", "11n247"}) {
        LinkRecord rec = named_fixture(name);
        CHECK(record_from_json(record_to_json(rec)) == rec);
    }
    LinkRecord rec = trefoil_clasp_record();
    CHECK(record_from_json(record_to_json(rec)) == rec);

    // Sublinks survive with their keys.
    LinkRecord sub = make_record("s", 3, {{0, 0, 1}, {0, 0, 1}, {1, 1, 0}}, "(t1*t2-1)^2");
    sub.sublinks[IndexSet::of({1, 2})] = parse_poly("t1*t2 - 1", 3);
    LinkRecord back = record_from_json(record_to_json(sub));
    CHECK(back == sub);
    CHECK(back.sublinks.count(IndexSet::of({1, 2})) == 1);
}

TEST_CASE("record JSON rejects malformed fields") {
    nlohmann::json good = record_to_json(named_fixture("whitehead"));

    nlohmann::json j = good;
    j.erase("components");
    CHECK_THROWS_AS(record_from_json(j), std::runtime_error);

    j = good;
    j["components"] = 0;
    CHECK_THROWS_AS(record_from_json(j), std::runtime_error);

    j = good;
    j["components"] = 64;
    CHECK_THROWS_AS(record_from_json(j), std::runtime_error);

    j = good;
    j.erase("alexander");
    CHECK_THROWS_AS(record_from_json(j), std::runtime_error);

    j = good;
    j["alexander"] = "t1 +";
    CHECK_THROWS_AS(record_from_json(j), std::runtime_error);

    j = good;
    j["alexander"] = "t5 - 1";  // variable beyond the component count
    CHECK_THROWS_AS(record_from_json(j), std::runtime_error);

    j = good;
    j["linking_matrix"] = "not a matrix";
    CHECK_THROWS_AS(record_from_json(j), std::runtime_error);

    j = good;
    j["sublinks"] = {{"1,zebra", "0"}};
    CHECK_THROWS_AS(record_from_json(j), std::runtime_error);

    CHECK_THROWS_AS(record_from_json(nlohmann::json::array()), std::runtime_error);
}

TEST_CASE("record files parse per entry") {
    std::string text = R"json([
        {"name": "ok", "components": 2, "linking_matrix": [[0,0],[0,0]],
         "alexander": "(t1-1)*(t2-1)"},
        {"name": "broken", "components": 2, "linking_matrix": [[0,0],[0,0]],
         "alexander": "t1 +"},
        {"components": 1, "linking_matrix": [[0]], "alexander": 42}
    ])json";
    auto entries = parse_records_text(text);
    REQUIRE(entries.size() == 3);
    CHECK(entries[0].record.has_value());
    CHECK(entries[0].name == "ok");
    CHECK_FALSE(entries[1].record.has_value());
    CHECK(entries[1].name == "broken");
    CHECK_FALSE(entries[1].error.empty());
    CHECK_FALSE(entries[2].record.has_value());
    CHECK(entries[2].name == "record[2]");

    CHECK_THROWS(parse_records_text("{\"components\": 2}"));  // not an array
    CHECK_THROWS(parse_records_text("not json at all"));
    CHECK(parse_records_text("[]").empty());
}

TEST_CASE("algebraically split means all off-diagonal linking numbers vanish") {
    CHECK(is_algebraically_split(named_fixture("borromean")));
    CHECK(is_algebraically_split(named_fixture("whitehead")));
    CHECK_FALSE(is_algebraically_split(trefoil_clasp_record()));
    CHECK(is_algebraically_split(make_record("one", 1, {{0}}, "t1 - 1")));
}

TEST_CASE("duality symmetry: hand-verified verdicts") {
    SUBCASE("three components, unit sign -1, exponents (1,1,1)") {
        Verdict v = check_duality(named_fixture("borromean"));
        CHECK(v.status == Status::PASS);
        CHECK(v.witness["sign"] == -1);
        CHECK(v.witness["exponents"] == nlohmann::json({1, 1, 1}));
    }
    SUBCASE("two components, unit sign +1, exponents (3,3)") {
        Verdict v = check_duality(named_fixture("10n59"));
        CHECK(v.status == Status::PASS);
        CHECK(v.witness["sign"] == 1);
        CHECK(v.witness["exponents"] == nlohmann::json({3, 3}));
    }
    SUBCASE("zero polynomial passes vacuously") {
        CHECK(check_duality(named_fixture("11n247")).status == Status::PASS);
    }
    SUBCASE("one variable: even exponent passes, odd exponent fails") {
        LinkRecord knot = make_record("k", 1, {{0}}, "t1^2 - t1 + 1");
        CHECK(check_duality(knot).status == Status::PASS);
        LinkRecord bad = make_record("k", 1, {{0}}, "t1 + 1");
        CHECK(check_duality(bad).status == Status::FAIL);
    }
    SUBCASE("no relating unit at all") {
        LinkRecord rec = make_record("x", 1, {{0}}, "t1 + 2");
        Verdict v = check_duality(rec);
        CHECK(v.status == Status::FAIL);
        CHECK(v.witness.contains("polynomial"));
    }
    SUBCASE("exponent parity must match the linking numbers") {
        // t1^2*t2 + 1 is a unit multiple of its inverse, but with zero
        // linking the exponents must be odd; a1 = 2 breaks it.
        LinkRecord rec = make_record("x", 2, {{0, 0}, {0, 0}}, "t1^2*t2 + 1");
        Verdict v = check_duality(rec);
        CHECK(v.status == Status::FAIL);
        CHECK(v.witness["component"] == 1);
        // The same polynomial with linking number 1 makes a1 = 2 legal
        // ... but a2 = 1 then breaks (needs 1 + 1 even).
        LinkRecord rec2 = make_record("x", 2, {{0, 1}, {1, 0}}, "t1^2*t2 + 1");
        Verdict v2 = check_duality(rec2);
        CHECK(v2.status == Status::FAIL);
        CHECK(v2.witness["component"] == 2);
    }
    SUBCASE("torus-style pair with linking number two passes") {
        LinkRecord rec = make_record("x", 2, {{0, 2}, {2, 0}}, "t1*t2 + 1");
        CHECK(check_duality(rec).status == Status::PASS);
    }
    SUBCASE("trefoil clasp record passes") {
        CHECK(check_duality(trefoil_clasp_record()).status == Status::PASS);
    }
}

TEST_CASE("collapse compatibility: hand-verified verdicts") {
    SUBCASE("two components against stored knot polynomials") {
        LinkRecord rec = trefoil_clasp_record();
        CHECK(check_torres(rec, 2).status == Status::PASS);
        CHECK(check_torres(rec, 1).status == Status::PASS);
        // Swap in wrong knot polynomials and the check fails.
        rec.knot_polys = {parse_poly("1", 1), parse_poly("1", 1)};
        CHECK(check_torres(rec, 2).status == Status::FAIL);
    }
    SUBCASE("degenerate: zero linking forces a zero collapse") {
        CHECK(check_torres(named_fixture("borromean"), 3).status == Status::PASS);
        CHECK(check_torres(named_fixture("borromean"), 1).status == Status::PASS);
        LinkRecord bad = make_record("x", 2, {{0, 0}, {0, 0}}, "t1*t2 + 1");
        Verdict v = check_torres(bad, 2);
        CHECK(v.status == Status::FAIL);
        CHECK(v.witness.contains("collapsed"));
    }
    SUBCASE("three components against a stored sublink polynomial") {
        LinkRecord rec = make_record("x", 3, {{0, 0, 1}, {0, 0, 1}, {1, 1, 0}}, "(t1*t2-1)^2");
        rec.sublinks[IndexSet::of({1, 2})] = parse_poly("t1*t2 - 1", 3);
        CHECK(check_torres(rec, 3).status == Status::PASS);
        rec.sublinks[IndexSet::of({1, 2})] = parse_poly("t1*t2 + 1", 3);
        CHECK(check_torres(rec, 3).status == Status::FAIL);
    }
    SUBCASE("missing data is a data error, not a failure") {
        LinkRecord rec = make_record("x", 3, {{0, 0, 1}, {0, 0, 1}, {1, 1, 0}}, "(t1*t2-1)^2");
        CHECK(check_torres(rec, 3).status == Status::DATA_ERROR);
        LinkRecord pair = make_record("x", 2, {{0, 1}, {1, 0}}, "t1^2 - t1 + 1");
        CHECK(check_torres(pair, 2).status == Status::DATA_ERROR);  // no knot polynomials
    }
    SUBCASE("edge cases") {
        CHECK(check_torres(make_record("k", 1, {{0}}, "1"), 1).status == Status::NOT_APPLICABLE);
        CHECK_THROWS_AS(check_torres(named_fixture("borromean"), 4), std::invalid_argument);
        CHECK_THROWS_AS(check_torres(named_fixture("borromean"), 0), std::invalid_argument);
    }
}

TEST_CASE("linking screens") {
    auto by_id = [](const std::vector<Verdict>& vs, const std::string& id) {
        for (const Verdict& v : vs)
            if (v.test_id == id) return v;
        return Verdict::data_error("missing", "verdict not found: " + id);
    };

    SUBCASE("nonzero even linking number on a pair fails") {
        LinkRecord rec = make_record("x", 2, {{0, 2}, {2, 0}}, "t1*t2 + 1");
        auto vs = linking_screen(rec);
        CHECK(by_id(vs, "linking.pair_even").status == Status::FAIL);
        CHECK(by_id(vs, "linking.pair_even").witness["linking_number"] == 2);
        CHECK(by_id(vs, "linking.odd_cycle").status == Status::PASS);
        CHECK(by_id(vs, "linking.invertibility_note").status == Status::NOT_APPLICABLE);
    }
    SUBCASE("odd linking number on a pair passes the parity screen") {
        LinkRecord rec = trefoil_clasp_record();
        auto vs = linking_screen(rec);
        CHECK(by_id(vs, "linking.pair_even").status == Status::PASS);
        CHECK(by_id(vs, "linking.invertibility_note").status == Status::NOT_APPLICABLE);
    }
    SUBCASE("split pair emits no invertibility note") {
        auto vs = linking_screen(named_fixture("whitehead"));
        CHECK(by_id(vs, "linking.pair_even").status == Status::PASS);
        CHECK(by_id(vs, "linking.invertibility_note").test_id == "missing");
    }
    SUBCASE("triangle of nonzero linking numbers is an odd cycle") {
        LinkRecord rec =
            make_record("x", 3, {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}, "0");
        auto vs = linking_screen(rec);
        Verdict v = by_id(vs, "linking.odd_cycle");
        CHECK(v.status == Status::FAIL);
        CHECK(v.witness["cycle"].size() == 3);
        CHECK(v.witness["cycle_product"] == 1);
        CHECK(by_id(vs, "linking.pair_even").status == Status::NOT_APPLICABLE);
    }
    SUBCASE("even cycles are fine") {
        LinkRecord rec = make_record(
            "x", 4,
            {{0, 1, 0, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, 1, 0}}, "0");
        CHECK(by_id(linking_screen(rec), "linking.odd_cycle").status == Status::PASS);
    }
    SUBCASE("five-cycle fails") {
        std::vector<std::vector<int>> m(5, std::vector<int>(5, 0));
        for (int i = 0; i < 5; ++i) {
            m[i][(i + 1) % 5] = 1;
            m[(i + 1) % 5][i] = 1;
        }
        LinkRecord rec = make_record("x", 5, m, "0");
        Verdict v = by_id(linking_screen(rec), "linking.odd_cycle");
        CHECK(v.status == Status::FAIL);
        CHECK(v.witness["cycle"].size() % 2 == 1);
    }
    SUBCASE("screens depend only on the linking matrix") {
        LinkRecord a = make_record("a", 3, {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}, "0");
        LinkRecord b = make_record("b", 3, {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}},
                                   "(t1-1)*(t2-1)*(t3-1)");
        CHECK(linking_screen(a) == linking_screen(b));
    }
}

TEST_CASE("sign-pattern symmetry") {
    SUBCASE("inverting both variables of the alternating pair passes") {
        Verdict v = check_eps_symmetry(named_fixture("10n59"), {-1, -1});
        CHECK(v.status == Status::PASS);
        CHECK(v.test_id == "eps_symmetry.--");
    }
    SUBCASE("the identity pattern always passes") {
        amphitest::Rng rng(5);
        for (int iter = 0; iter < 20; ++iter) {
            LinkRecord rec = make_record("x", 2, {{0, 0}, {0, 0}}, "0");
            rec.alexander = amphitest::random_poly(rng, 2, 5, 3, 9);
            CHECK(check_eps_symmetry(rec, {1, 1}).status == Status::PASS);
        }
    }
    SUBCASE("an asymmetric polynomial fails a mixed pattern") {
        LinkRecord rec = make_record("x", 2, {{0, 0}, {0, 0}}, "t1^2*t2 + 1");
        Verdict v = check_eps_symmetry(rec, {-1, 1});
        CHECK(v.status == Status::FAIL);
        CHECK(v.test_id == "eps_symmetry.-+");
    }
    SUBCASE("bad sign vectors are data errors") {
        CHECK(check_eps_symmetry(named_fixture("whitehead"), {1}).status == Status::DATA_ERROR);
        CHECK(check_eps_symmetry(named_fixture("whitehead"), {1, 0}).status ==
              Status::DATA_ERROR);
    }
    CHECK(eps_pattern({1, -1, 1}) == "+-+");
}

#include <vector>

#include "amphicheck/families.hpp"
#include "amphicheck/linkdata.hpp"
#include "doctest.h"

using namespace amphicheck;

namespace {
LaurentPoly P(const char* text, int arity) { return parse_poly(text, arity); }
}  // namespace

TEST_CASE("chained-link records") {
    SUBCASE("three components") {
        LinkRecord rec = milnor_record(3);
        CHECK(rec.name == "milnor(3)");
        CHECK(rec.r == 3);
        CHECK(rec.alexander == P("(t1-1)*(t2-1)*(t3-1)", 3));
        CHECK(rec.sublinks.size() == 3);
        for (const auto& [subset, poly] : rec.sublinks) CHECK(poly.is_zero());
        REQUIRE(rec.knot_polys.size() == 3);
        for (const auto& k : rec.knot_polys) CHECK(k == P("1", 1));
        CHECK(is_algebraically_split(rec));
        CHECK(structural_problems(rec).empty());
    }
    SUBCASE("four or more components have zero polynomial and no sublink data") {
        for (int lambda : {4, 5, 8}) {
            LinkRecord rec = milnor_record(lambda);
            CHECK(rec.r == lambda);
            CHECK(rec.alexander.is_zero());
            CHECK(rec.sublinks.empty());
            CHECK(structural_problems(rec).empty());
        }
    }
    SUBCASE("parameter validation") {
        CHECK_THROWS_AS(milnor_record(2), std::invalid_argument);
        CHECK_THROWS_AS(milnor_record(33), std::invalid_argument);
    }
}

TEST_CASE("two-bridge pair records") {
    SUBCASE("hand-expanded polynomials") {
        CHECK(two_bridge_caa_record(1, 1).alexander == P("(t1-1)*(t2-1)", 2));
        CHECK(two_bridge_caa_record(2, 1).alexander ==
              P("(t1-1)*(t2-1)*(t1*t2+1)^2", 2));
        CHECK(two_bridge_caa_record(1, -3).alexander == P("-3*(t1-1)*(t2-1)", 2));
        // a = 2, b = 3: both the b-scaling and the squared quotient.
        CHECK(two_bridge_caa_record(2, 3).alexander ==
              P("3*(t1-1)*(t2-1)*(t1*t2+1)^2", 2));
    }
    SUBCASE("negating a flips nothing essential") {
        for (int a : {1, 2, 3})
            for (int b : {1, -2}) {
                LinkRecord pos = two_bridge_caa_record(a, b);
                LinkRecord neg = two_bridge_caa_record(-a, b);
                CHECK(doteq(pos.alexander, neg.alexander));
            }
    }
    SUBCASE("records are split with unknotted components") {
        LinkRecord rec = two_bridge_caa_record(3, -2);
        CHECK(rec.name == "caa(3,-2)");
        CHECK(is_algebraically_split(rec));
        REQUIRE(rec.knot_polys.size() == 2);
        CHECK(rec.knot_polys[0] == P("1", 1));
        CHECK(structural_problems(rec).empty());
    }
    SUBCASE("parameter validation") {
        CHECK_THROWS_AS(two_bridge_caa_record(0, 1), std::invalid_argument);
        CHECK_THROWS_AS(two_bridge_caa_record(1, 0), std::invalid_argument);
    }
}

TEST_CASE("named fixtures") {
    LinkRecord borromean = named_fixture("borromean");
    CHECK(borromean.name == "borromean");
    CHECK(borromean.alexander == milnor_record(3).alexander);
    CHECK(borromean.sublinks == milnor_record(3).sublinks);

    LinkRecord whitehead = named_fixture("whitehead");
    CHECK(whitehead.name == "whitehead");
    CHECK(whitehead.alexander == two_bridge_caa_record(1, 1).alexander);

    LinkRecord alt = named_fixture("10n59");
    CHECK(alt.alexander == P("(t1-1)*(t2-1)*(t1-t2)*(t1*t2-1)", 2));
    CHECK(alt.knot_polys.empty());

    LinkRecord zero = named_fixture("11n247");
    CHECK(zero.alexander.is_zero());
    CHECK(zero.r == 2);

    CHECK_THROWS_AS(named_fixture("nonsense"), std::invalid_argument);

    for (const std::string& name : fixture_names()) {
        LinkRecord rec = named_fixture(name);
        CHECK(rec.name == name);
        CHECK(structural_problems(rec).empty());
    }
}

TEST_CASE("every generated record satisfies the classical identities") {
    std::vector<LinkRecord> records;
    for (int lambda = 3; lambda <= 8; ++lambda) records.push_back(milnor_record(lambda));
    for (int a = -3; a <= 3; ++a)
        for (int b = -3; b <= 3; ++b)
            if (a != 0 && b != 0) records.push_back(two_bridge_caa_record(a, b));
    for (const std::string& name : fixture_names()) records.push_back(named_fixture(name));

    for (const LinkRecord& rec : records) {
        CAPTURE(rec.name);
        CHECK(structural_problems(rec).empty());
        CHECK(check_duality(rec).status == Status::PASS);
        CHECK(is_algebraically_split(rec));
        // Split records collapse to zero when any variable is set to 1.
        if (rec.r >= 2)
            for (int i = 1; i <= rec.r; ++i)
                CHECK(set_variable_to_one(rec.alexander, i).is_zero());
    }
}

TEST_CASE("generated records round-trip through JSON") {
    for (int lambda : {3, 4})
        CHECK(record_from_json(record_to_json(milnor_record(lambda))) == milnor_record(lambda));
    for (int a : {1, -2})
        CHECK(record_from_json(record_to_json(two_bridge_caa_record(a, 3))) ==
              two_bridge_caa_record(a, 3));
}

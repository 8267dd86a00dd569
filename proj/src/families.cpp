#include "amphicheck/families.hpp"

namespace amphicheck {

namespace {

std::vector<std::vector<int>> zero_matrix(int r) {
    return std::vector<std::vector<int>>(r, std::vector<int>(r, 0));
}

LaurentPoly var_minus_one(int arity, int var) {
    return LaurentPoly::variable(arity, var) - LaurentPoly::constant(arity, 1);
}

}  // namespace

LinkRecord milnor_record(int lambda) {
    if (lambda < 3) throw std::invalid_argument("milnor_record: needs at least 3 components");
    if (lambda > IndexSet::max_index_limit)
        throw std::invalid_argument("milnor_record: component count exceeds the supported limit");

    LinkRecord rec;
    rec.name = "milnor(" + std::to_string(lambda) + ")";
    rec.r = lambda;
    rec.linking_matrix = zero_matrix(lambda);
    if (lambda == 3) {
        rec.alexander = var_minus_one(3, 1) * var_minus_one(3, 2) * var_minus_one(3, 3);
        // 2-component sublinks are trivial links: polynomial 0.
        rec.sublinks[IndexSet::of({1, 2})] = LaurentPoly::zero(3);
        rec.sublinks[IndexSet::of({1, 3})] = LaurentPoly::zero(3);
        rec.sublinks[IndexSet::of({2, 3})] = LaurentPoly::zero(3);
    } else {
        rec.alexander = LaurentPoly::zero(lambda);
    }
    rec.knot_polys.assign(lambda, LaurentPoly::constant(1, 1));
    return rec;
}

LinkRecord two_bridge_caa_record(int a, int b) {
    if (a == 0 || b == 0)
        throw std::invalid_argument("two_bridge_caa_record: parameters must be nonzero");

    LinkRecord rec;
    rec.name = "caa(" + std::to_string(a) + "," + std::to_string(b) + ")";
    rec.r = 2;
    rec.linking_matrix = zero_matrix(2);

    // ((t1t2)^a − 1)/(t1t2 − 1), an exact Laurent-polynomial quotient for
    // either sign of a.
    const Monomial t1t2 = Monomial::from_pairs({{1, 1}, {2, 1}});
    const LaurentPoly numerator =
        LaurentPoly::term(2, t1t2.pow(a), 1) - LaurentPoly::constant(2, 1);
    const LaurentPoly denominator = LaurentPoly::term(2, t1t2, 1) - LaurentPoly::constant(2, 1);
    const LaurentPoly quotient = divide_exact(numerator, {denominator});

    rec.alexander = var_minus_one(2, 1) * var_minus_one(2, 2) * quotient * quotient * Int(b);
    rec.knot_polys.assign(2, LaurentPoly::constant(1, 1));
    return rec;
}

LinkRecord named_fixture(const std::string& name) {
    if (name == "borromean") {
        LinkRecord rec = milnor_record(3);
        rec.name = "borromean";
        return rec;
    }
    if (name == "whitehead") {
        LinkRecord rec = two_bridge_caa_record(1, 1);
        rec.name = "whitehead";
        return rec;
    }
    if (name == "10n59") {
        LinkRecord rec;
        rec.name = "10n59";
        rec.r = 2;
        rec.linking_matrix = zero_matrix(2);
        rec.alexander = var_minus_one(2, 1) * var_minus_one(2, 2) *
                        (LaurentPoly::variable(2, 1) - LaurentPoly::variable(2, 2)) *
                        (LaurentPoly::variable(2, 1) * LaurentPoly::variable(2, 2) -
                         LaurentPoly::constant(2, 1));
        return rec;
    }
    if (name == "11n247") {
        LinkRecord rec;
        rec.name = "11n247";
        rec.r = 2;
        rec.linking_matrix = zero_matrix(2);
        rec.alexander = LaurentPoly::zero(2);
        return rec;
    }
    throw std::invalid_argument("named_fixture: unknown name \"" + name + "\"");
}

std::vector<std::string> fixture_names() { return {"borromean", "whitehead", "10n59", "11n247"}; }

}  // namespace amphicheck

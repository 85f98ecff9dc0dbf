#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pbent/duality.hpp"

using namespace pbent;

namespace {

PAryFunction from_poly(const char* text, int p, int n) {
    return anf_evaluate(parse_poly(text, PrimeModulus{p}, n));
}

} // namespace

TEST_CASE("signs and duals for the two-variable pair") {
    auto ra = classify_regularity(from_poly("-x0^2 + x1^2", 3, 2));
    CHECK(ra.kind == RegularityKind::regular);
    CHECK(ra.unit_sign == 1);
    CHECK(!ra.witness);
    REQUIRE(ra.dual);
    CHECK(*ra.dual == from_poly("x0^2 - x1^2", 3, 2));

    auto rb = classify_regularity(from_poly("x0^2 + x1^2", 3, 2));
    CHECK(rb.kind == RegularityKind::weakly_regular_minus);
    CHECK(rb.unit_sign == -1);
    REQUIRE(rb.dual);
    CHECK(*rb.dual == from_poly("-x0^2 - x1^2", 3, 2));
}

TEST_CASE("signs and duals for the five-variable-value catalog") {
    struct Row { const char* poly; const char* dual; RegularityKind kind; };
    const Row rows[] = {
        {"x0^3*x1 + 2*x1^4", "2*x0^4 - x0*x1^3", RegularityKind::regular},
        {"-x0*x1^3 + x1^4", "x0^4 + x0^3*x1", RegularityKind::regular},
        {"-x0^3*x1 + x1^4", "x0^4 + x0*x1^3", RegularityKind::regular},
        {"-x0^2 + 2*x1^2", "-x0^2 + 3*x1^2", RegularityKind::weakly_regular_minus},
        {"-x0*x1 + x1^2", "x0^2 + x0*x1", RegularityKind::regular},
        {"2*x0*x1^3 + x1^4 - x1^2", "x0^2 + x0^4 + 3*x0^3*x1", RegularityKind::regular},
    };
    for (const Row& r : rows) {
        auto rep = classify_regularity(from_poly(r.poly, 5, 2));
        CHECK(rep.kind == r.kind);
        REQUIRE(rep.dual);
        CHECK(*rep.dual == from_poly(r.dual, 5, 2));
    }
}

TEST_CASE("signs and duals for the four-variable catalog") {
    struct Row { const char* poly; const char* dual; RegularityKind kind; };
    const Row rows[] = {
        {"2*x0*x3 + x1*x2 + x0^2*x1*x2 + 2*x0*x1^2*x3",
         "x0*x3 + 2*x1*x2 + x0*x2^2*x3 + 2*x1*x2*x3^2", RegularityKind::regular},
        {"-x0^2 - x1^2 + x2*x3",
         "x0^2 + x1^2 - x2*x3", RegularityKind::weakly_regular_minus},
        {"x0^2 + x1^2 + x0*x2 + 2*x2*x3",
         "2*x0^2 + 2*x1^2 + x0*x3 + x2*x3 + 2*x3^2", RegularityKind::weakly_regular_minus},
    };
    for (const Row& r : rows) {
        auto rep = classify_regularity(from_poly(r.poly, 3, 4));
        CHECK(rep.kind == r.kind);
        REQUIRE(rep.dual);
        CHECK(*rep.dual == from_poly(r.dual, 3, 4));
    }
}

TEST_CASE("regularity does not imply the feasibility structure") {
    // every Walsh value is +5 zeta^j, yet the component graphs are not all
    // strongly regular, so the distinguished-index route refuses
    auto f = from_poly("3*x0^4 + 2*x0^2 + 2*x0*x1", 5, 2);
    auto rep = classify_regularity(f);
    CHECK(rep.kind == RegularityKind::regular);
    CHECK(rep.unit_sign == 1);
    REQUIRE(rep.dual);
    CHECK(is_bent(*rep.dual).bent);
    CHECK(is_even(*rep.dual));
    CHECK_THROWS_AS(dual_by_distinguished_index(f), PreconditionError);
}

TEST_CASE("bent without a constant sign has no dual") {
    // two-variable quadratics of opposite sign glued along x2: the Walsh
    // values factor as 3 zeta^{-x2 x3} W_{f_{x3}}(x0, x1) with mixed signs
    auto f = from_poly("2*x0^2 + x1^2 + 2*x0^2*x2^2 + x2*x3", 3, 4);
    CHECK(is_bent(f).bent);
    auto rep = classify_regularity(f);
    CHECK(rep.kind == RegularityKind::not_weakly_regular);
    CHECK(rep.unit_sign == 0);
    CHECK(!rep.dual);
    REQUIRE(rep.witness);
    // the sign is fixed by the origin; the first conflict sits at (0,0,0,1)
    CHECK(*rep.witness == 1);
}

TEST_CASE("regularity preconditions") {
    // not bent
    CHECK_THROWS_AS(classify_regularity(from_poly("x0", 3, 2)), PreconditionError);
    // odd number of variables
    CHECK_THROWS_AS(classify_regularity(from_poly("x0^2", 5, 1)), PreconditionError);
}

TEST_CASE("both dual routes agree on feasible functions") {
    struct Row { const char* poly; int p, n; };
    const Row rows[] = {
        {"-x0^2 + x1^2", 3, 2},
        {"x0^2 + x1^2", 3, 2},
        {"x0^3*x1 + 2*x1^4", 5, 2},
        {"-x0*x1^3 + x1^4", 5, 2},
        {"-x0^3*x1 + x1^4", 5, 2},
        {"2*x0*x3 + x1*x2 + x0^2*x1*x2 + 2*x0*x1^2*x3", 3, 4},
        {"-x0^2 - x1^2 + x2*x3", 3, 4},
        {"x0^2 + x1^2 + x0*x2 + 2*x2*x3", 3, 4},
    };
    for (const Row& r : rows) {
        auto f = from_poly(r.poly, r.p, r.n);
        auto rep = classify_regularity(f);
        REQUIRE(rep.dual);
        CHECK(dual_by_distinguished_index(f) == *rep.dual);
    }
}

TEST_CASE("the distinguished route needs the feasibility structure") {
    CHECK_THROWS_AS(dual_by_distinguished_index(from_poly("-x0^2 + 2*x1^2", 5, 2)),
                    PreconditionError);
    CHECK_THROWS_AS(verify_dual_structure(from_poly("-x0^2 + 2*x1^2", 5, 2)),
                    PreconditionError);
}

TEST_CASE("taking the dual twice returns to the original") {
    struct Row { const char* poly; int p, n; };
    const Row rows[] = {
        {"-x0^2 + x1^2", 3, 2},
        {"x0^2 + x1^2", 3, 2},
        {"x0^3*x1 + 2*x1^4", 5, 2},
        {"-x0^2 + 2*x1^2", 5, 2},
        {"-x0^2 - x1^2 + x2*x3", 3, 4},
    };
    for (const Row& r : rows) {
        auto f = from_poly(r.poly, r.p, r.n);
        auto rep = classify_regularity(f);
        REQUIRE(rep.dual);
        auto back = classify_regularity(*rep.dual);
        REQUIRE(back.dual);
        CHECK(*back.dual == f);
    }
}

TEST_CASE("dual structure of the two-variable pair") {
    auto ra = verify_dual_structure(from_poly("-x0^2 + x1^2", 3, 2));
    CHECK(ra.all_ok());
    CHECK(!ra.witness);
    CHECK(ra.set_match == std::vector<int>{2, 1, 3});

    auto rb = verify_dual_structure(from_poly("x0^2 + x1^2", 3, 2));
    CHECK(rb.all_ok());
    CHECK(rb.set_match == std::vector<int>{2, 1, 3});
}

TEST_CASE("dual structure of the four-variable instances") {
    auto r1 = verify_dual_structure(from_poly("-x0^2 - x1^2 + x2*x3", 3, 4));
    CHECK(r1.all_ok());
    // the dual permutes the level sets: D_1^* = D_2, D_2^* = D_1, D_3^* = D_3
    CHECK(r1.set_match == std::vector<int>{2, 1, 3});

    auto r2 = verify_dual_structure(from_poly("x0^2 + x1^2 + x0*x2 + 2*x2*x3", 3, 4));
    CHECK(r2.all_ok());
    // here no dual level set coincides with one of the original sets
    CHECK(r2.set_match == std::vector<int>{-1, -1, -1});
}

TEST_CASE("dual structure of the five-class instances") {
    for (const char* poly : {"x0^3*x1 + 2*x1^4", "-x0*x1^3 + x1^4", "-x0^3*x1 + x1^4"}) {
        auto r = verify_dual_structure(from_poly(poly, 5, 2));
        CHECK(r.all_ok());
        CHECK(!r.witness);
    }
}

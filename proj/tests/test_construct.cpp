#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pbent/duality.hpp"
#include "pbent/orthogonal_array.hpp"
#include "pbent/scheme.hpp"

using namespace pbent;

namespace {

PAryFunction from_poly(const char* text, int p, int n) {
    return anf_evaluate(parse_poly(text, PrimeModulus{p}, n));
}

bool same_graph(const DenseGraph& g, const CayleyGraph& c) {
    if (g.vertices() != c.vertices()) return false;
    const Domain& d = c.domain();
    for (Index u = 0; u < g.vertices(); ++u)
        for (Index v = u + 1; v < g.vertices(); ++v)
            if (g.adjacent(u, v) != c.connected_to_origin(d.sub(u, v))) return false;
    return true;
}

} // namespace

TEST_CASE("the smallest array comes out in the documented layout") {
    auto oa = bush_construct(PrimeModulus{3}, 1);
    CHECK(oa.rows() == 4);
    CHECK(oa.N == 3);
    CHECK(oa_to_text(oa) ==
          "3 1 4\n"
          "0 0 0 1 1 1 2 2 2\n"
          "0 1 2 0 1 2 0 1 2\n"
          "0 1 2 1 2 0 2 0 1\n"
          "0 1 2 2 0 1 1 2 0\n");
}

TEST_CASE("constructed arrays have the pair property") {
    CHECK(!validate_oa(bush_construct(PrimeModulus{3}, 1)));
    CHECK(!validate_oa(bush_construct(PrimeModulus{3}, 2)));
    CHECK(!validate_oa(bush_construct(PrimeModulus{5}, 1)));
    CHECK(!validate_oa(bush_construct(PrimeModulus{5}, 2)));
    CHECK(!validate_oa(bush_construct(PrimeModulus{7}, 1)));
}

TEST_CASE("first column is identically zero") {
    const std::pair<int, int> cases[] = {{3, 2}, {5, 1}, {7, 1}};
    for (auto [p, m] : cases) {
        auto oa = bush_construct(PrimeModulus{p}, m);
        for (const auto& row : oa.grid) CHECK(row[0] == 0);
    }
}

TEST_CASE("a duplicated symbol pair is found and reported faithfully") {
    auto oa = bush_construct(PrimeModulus{3}, 1);
    oa.grid[3][5] = oa.grid[3][1];
    oa.grid[2][5] = oa.grid[2][1];  // columns 1 and 5 now agree in rows 2 and 3
    auto bad = validate_oa(oa);
    REQUIRE(bad);
    CHECK(oa.grid[bad->row_a][bad->col_a] == oa.grid[bad->row_a][bad->col_b]);
    CHECK(oa.grid[bad->row_b][bad->col_a] == oa.grid[bad->row_b][bad->col_b]);
    CHECK(bad->row_a < bad->row_b);
    CHECK(bad->col_a < bad->col_b);
}

TEST_CASE("row partitions of the smallest array give the two quadratics") {
    auto oa = bush_construct(PrimeModulus{3}, 1);
    CHECK(bent_from_oa(oa, parse_partition("0|1|2,3:0", oa)) ==
          from_poly("-x0^2 + x1^2", 3, 2));
    CHECK(bent_from_oa(oa, parse_partition("0,1|2,3", oa)) ==
          from_poly("x0^2 + x1^2", 3, 2));
    // the default grouping is the first of those
    CHECK(bent_from_oa(oa, default_partition(oa)) == from_poly("-x0^2 + x1^2", 3, 2));
}

TEST_CASE("partition values are assigned in order when omitted") {
    auto oa = bush_construct(PrimeModulus{3}, 1);
    auto part = parse_partition("2,3:1|0|1", oa);
    REQUIRE(part.groups.size() == 3);
    CHECK(part.groups[0].value == 1);
    CHECK(part.groups[1].value == 2);  // 1 is taken, 2 is the next free value
    CHECK(part.groups[2].value == 0);  // nonzero values exhausted
}

TEST_CASE("partition grammar rejections") {
    auto oa = bush_construct(PrimeModulus{3}, 1);
    CHECK_THROWS_AS(parse_partition("", oa), ParseError);
    CHECK_THROWS_AS(parse_partition("0|9", oa), ParseError);         // row out of range
    CHECK_THROWS_AS(parse_partition("0,0|1", oa), ParseError);       // row twice
    CHECK_THROWS_AS(parse_partition("0:1|1:1", oa), ParseError);     // value twice
    CHECK_THROWS_AS(parse_partition("0:5", oa), ParseError);         // value out of range
    CHECK_THROWS_AS(parse_partition("0|1|2|3", oa), ParseError);     // more groups than values
    CHECK_THROWS_AS(parse_partition("0|1 2", oa), ParseError);       // stray token
    CHECK_THROWS_AS(parse_partition("0;1", oa), ParseError);
    try {
        parse_partition("0|9", oa);
    } catch (const ParseError& e) {
        CHECK(e.position() == 2);
    }
}

TEST_CASE("incomplete coverage is refused") {
    auto oa = bush_construct(PrimeModulus{3}, 1);
    CHECK_THROWS_AS(bent_from_oa(oa, parse_partition("0|1", oa)), PreconditionError);
    // a corrupted array can cover a column twice
    auto bad = bush_construct(PrimeModulus{3}, 1);
    bad.grid[1][5] = 0;
    RowPartition all;
    all.groups.push_back({{0, 1, 2, 3}, 1});
    CHECK_THROWS_AS(bent_from_oa(bad, all), PreconditionError);
}

TEST_CASE("the default nine-symbol function has the documented shape") {
    auto oa = bush_construct(PrimeModulus{3}, 2);
    auto f = bent_from_oa(oa, default_partition(oa));
    CHECK(is_even(f));
    CHECK(is_bent(f).bent);
    auto feas = feasibility_verdict(f);
    CHECK(feas.kind == FeasibilityKind::lst);
    REQUIRE(feas.graph_verdicts.size() == 3);
    for (const auto& v : feas.graph_verdicts) REQUIRE(v.is_srg());
    CHECK(*feas.graph_verdicts[0].params == SrgParams{81, 24, 9, 6});
    CHECK(*feas.graph_verdicts[1].params == SrgParams{81, 24, 9, 6});
    CHECK(*feas.graph_verdicts[2].params == SrgParams{81, 32, 13, 12});
    CHECK(classify_regularity(f).kind == RegularityKind::regular);
    auto am = amorphic_check(f);
    CHECK(am.amorphic);
    CHECK(am.type == SquareType::lst);
}

TEST_CASE("selecting every row yields the complete graph") {
    auto oa = bush_construct(PrimeModulus{3}, 1);
    std::vector<int> all{0, 1, 2, 3};
    auto verdict = srg_check(oa_graph(oa, all));
    CHECK(verdict.status == SrgStatus::not_srg);
    CHECK(verdict.complete);
}

TEST_CASE("array graphs coincide with the difference-set graphs") {
    auto oa = bush_construct(PrimeModulus{3}, 2);
    auto f = bent_from_oa(oa, default_partition(oa));
    auto ls = level_sets(f);
    auto part = default_partition(oa);
    for (std::size_t g = 0; g < part.groups.size(); ++g) {
        const int value = part.groups[g].value;
        const int cls = value == 0 ? 3 : value;
        CayleyGraph cayley(PrimeModulus{3}, 4, ls.classes[static_cast<std::size_t>(cls)]);
        CHECK(same_graph(oa_graph(oa, part.groups[g].rows), cayley));
    }
}

TEST_CASE("dense and difference-set regularity checks agree") {
    auto oa = bush_construct(PrimeModulus{5}, 1);
    std::vector<int> two{0, 1};
    auto dense = srg_check(oa_graph(oa, two));
    REQUIRE(dense.is_srg());
    CHECK(*dense.params == SrgParams{25, 8, 3, 2});

    std::vector<Index> connection;
    Domain d(PrimeModulus{5}, 2);
    for (Index v = 1; v < d.size(); ++v)
        if (oa.grid[0][static_cast<std::size_t>(v)] == 0 ||
            oa.grid[1][static_cast<std::size_t>(v)] == 0)
            connection.push_back(v);
    auto sparse = srg_check(CayleyGraph(PrimeModulus{5}, 2, connection));
    REQUIRE(sparse.is_srg());
    CHECK(*sparse.params == *dense.params);
}

TEST_CASE("dense check rejects an irregular graph") {
    DenseGraph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    auto verdict = srg_check(g);
    CHECK(verdict.status == SrgStatus::not_srg);
    CHECK_THROWS_AS(g.add_edge(2, 2), PreconditionError);
}

TEST_CASE("text round trip and rejections") {
    auto oa = bush_construct(PrimeModulus{5}, 1);
    auto back = oa_from_text(oa_to_text(oa));
    CHECK(back.p == oa.p);
    CHECK(back.m == oa.m);
    CHECK(back.N == oa.N);
    CHECK(back.grid == oa.grid);

    CHECK_THROWS_AS(oa_from_text(""), ParseError);
    CHECK_THROWS_AS(oa_from_text("3 1"), ParseError);             // missing rows
    CHECK_THROWS_AS(oa_from_text("3 1 2\n0 0 0"), ParseError);    // short row
    CHECK_THROWS_AS(oa_from_text("3 1 1\n0 0 0 1 1 1 2 2 5"), ParseError);
    CHECK_THROWS_AS(oa_from_text("3 1 1\n0 0 0 1 1 1 2 2 2 0"), ParseError);
    CHECK_THROWS_AS(oa_from_text("3 0 4"), ParseError);
    CHECK_THROWS_AS(oa_from_text("x 1 4"), ParseError);
    CHECK_THROWS_AS(oa_from_text("9 1 4"), PreconditionError);    // not a prime
}

TEST_CASE("extension symbols print as digit tuples") {
    auto oa = bush_construct(PrimeModulus{3}, 2);
    auto text = oa_to_text(oa);
    CHECK(text.substr(0, 6) == "3 2 10");
    // row 0 maps column (a, b) to a, so column index 5 = (1, 2) prints as "01"
    auto line_end = text.find('\n');
    auto row0 = text.substr(line_end + 1, text.find('\n', line_end + 1) - line_end - 1);
    CHECK(row0.substr(0, 29) == "00 00 00 00 00 00 00 00 00 01");

    auto back = oa_from_text(text);
    CHECK(back.grid == oa.grid);
    CHECK(oa_to_text(back) == text);

    CHECK_THROWS_AS(oa_from_text("3 2 1\n00 0 00"), ParseError);   // one digit short
    CHECK_THROWS_AS(oa_from_text("3 2 1\n000 00 00"), ParseError); // one digit long
}

TEST_CASE("an oversized row set fails validation, not parsing") {
    auto oa = bush_construct(PrimeModulus{3}, 1);
    auto text = oa_to_text(oa);
    text[4] = '5';  // claim five rows
    text += "0 1 2 0 1 2 0 1 2\n";
    auto parsed = oa_from_text(text);
    CHECK(parsed.rows() == 5);
    CHECK(validate_oa(parsed).has_value());
}

#include <doctest.h>

#include "oracles.hpp"
#include "repshift/repshift.hpp"
#include "repshift/zgroup.hpp"

using namespace repshift;
using namespace repshift::testing;

TEST_CASE("free reduction merges adjacent letters") {
    Word w{{0, 1, 2}, {0, 1, -2}, {1, 0, 1}};
    CHECK(freely_reduce(w) == Word{{1, 0, 1}});
    Word v{{0, 0, 1}, {0, 0, 1}, {0, 1, -1}};
    CHECK(freely_reduce(v) == Word{{0, 0, 2}, {0, 1, -1}});
    CHECK(freely_reduce({}).empty());
}

TEST_CASE("parsing the compact shift-periodic forms") {
    auto p1 = parse_presentation("zgroup; gens a; rel a[1] a[0]^-2");
    const auto& z1 = std::get<ZGroupPresentation>(p1);
    CHECK(z1.families == std::vector<std::string>{"a"});
    CHECK(z1.relators.size() == 1);
    CHECK(z1.window == 1);

    auto p2 = parse_presentation("zgroup; gens a; rel a[0]^2; rel a[1] a[0]^-1");
    const auto& z2 = std::get<ZGroupPresentation>(p2);
    CHECK(z2.relators.size() == 2);
    CHECK(z2.window == 1);
}

TEST_CASE("syntax errors carry a position") {
    CHECK_THROWS_AS(parse_presentation("zgroup; gens a; rel a[1"), ParseError);
    CHECK_THROWS_AS(parse_presentation("zgroup; rel a[0]"), ParseError);
    CHECK_THROWS_AS(parse_presentation("zgroup; gens a; rel c[0]"), ParseError);
    CHECK_THROWS_AS(parse_presentation("zgroup; gens a; frob a[0]"), ParseError);
    CHECK_THROWS_AS(parse_presentation(""), ParseError);
    try {
        parse_presentation("zgroup\ngens a\nrel a[1");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.col() > 0);
    }
}

TEST_CASE("round trip: pretty_print then parse is the identity") {
    for (const char* name : {"ex2_1.zg", "ex4_4a.zg", "ex4_4b.zg", "ex3_7.zg"}) {
        Presentation p = load_fixture(name);
        Presentation q = parse_presentation(pretty_print(p));
        CHECK(p == q);
    }
}

TEST_CASE("window normalization shifts every relator family to index 0") {
    auto base = std::get<ZGroupPresentation>(
        parse_presentation("zgroup; gens a; rel a[1] a[0]^-2"));
    auto shifted = std::get<ZGroupPresentation>(
        parse_presentation("zgroup; gens a; rel a[4] a[3]^-2"));
    CHECK(base == shifted);
    for (const Word& r : base.relators)
        for (const IndexedLetter& l : r) CHECK(l.shift >= 0);
}

TEST_CASE("window widths and default windows") {
    Presentation ex21 = load_fixture("ex2_1.zg");
    CHECK(window_width(ex21) == 1);
    CHECK(default_window(ex21) == 2);

    Presentation free1 = parse_presentation("zgroup; gens a");
    CHECK(window_width(free1) == 0);
    CHECK(default_window(free1) == 1);

    Presentation hnn = load_fixture("ex3_7.zg");
    CHECK(window_width(hnn) == 0);
    CHECK(default_window(hnn) == 1);
}

TEST_CASE("window base of the doubling presentation") {
    Presentation p = load_fixture("ex2_1.zg");

    // n = 2: <a0, a1 | a1 a0^-2>, U-part {a0}, phi an index shift
    BasePresentation b2 = hnn_window_base(p, 2);
    CHECK(b2.gens.size() == 2);
    CHECK(b2.relators.size() == 1);
    CHECK(b2.u_gens == std::vector<int>{0});
    REQUIRE(b2.phi.size() == 1);
    CHECK(b2.phi[0] == Word{{1, 0, 1}});
    CHECK(b2.slice0 == std::vector<int>{0});

    // n = 1: free base of rank 1 with phi(a) = a^2
    BasePresentation b1 = hnn_window_base(p, 1);
    CHECK(b1.gens.size() == 1);
    CHECK(b1.relators.empty());
    CHECK(b1.u_gens == std::vector<int>{0});
    REQUIRE(b1.phi.size() == 1);
    CHECK(b1.phi[0] == Word{{0, 0, 2}});

    CHECK_THROWS_AS(hnn_window_base(parse_presentation("zgroup; gens a; rel a[2] a[0]^-1"), 1),
                    DomainError);
}

TEST_CASE("HNN data passes through at window 1") {
    Presentation p = load_fixture("ex3_7.zg");
    const auto& h = std::get<HNNData>(p);
    BasePresentation b = hnn_window_base(p, 1);
    CHECK(b.gens == h.gens);
    CHECK(b.relators == h.base_relators);
    CHECK(b.u_gens == h.u_gens);
    CHECK(b.phi == h.phi);
    CHECK(b.slice0.size() == h.gens.size());
}

TEST_CASE("window composition preserves hom counts") {
    // Edges of the (n+1)-window graph correspond to composable pairs of
    // n-window edges, i.e. to 2-edge paths.
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    for (const char* name : {"ex2_1.zg", "ex4_4a.zg", "ex4_4b.zg"}) {
        Presentation p = load_fixture(name);
        for (int n = default_window(p); n <= default_window(p) + 1; ++n) {
            BasePresentation bn = hnn_window_base(p, n);
            BasePresentation bn1 = hnn_window_base(p, n + 1);
            auto homs_n = enumerate_homs(bn, s3);
            auto homs_n1 = enumerate_homs(bn1, s3);

            ShiftGraph g = graph_from_homs(bn, s3, homs_n);
            size_t pairs = 0;
            for (const auto& e : g.edges)
                for (const auto& f : g.edges)
                    if (e.dst == f.src) ++pairs;
            CHECK(homs_n1.size() == pairs);
        }
    }
}

TEST_CASE("enumerated homs agree with the brute-force oracle") {
    for (const char* name : {"ex2_1.zg", "ex4_4a.zg", "ex4_4b.zg"}) {
        Presentation p = load_fixture(name);
        for (const char* group : {"Z2", "Z3", "S3"}) {
            FiniteGroup sigma = FiniteGroup::from_name(group);
            BasePresentation b = hnn_window_base(p, default_window(p));
            auto got = enumerate_homs(b, sigma);
            std::sort(got.begin(), got.end());
            CHECK(got == brute_homs(b, sigma));
        }
    }
}

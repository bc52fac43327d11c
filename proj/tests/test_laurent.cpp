#include <doctest.h>

#include "oracles.hpp"
#include "repshift/laurent.hpp"

using namespace repshift;
using namespace repshift::testing;

namespace {

IntPoly ipoly(const std::string& text) { return parse_poly(text).first; }

PolyMatrix<Int> imatrix(const std::string& text) { return parse_poly_matrix(text).first; }

PolyMatrix<Int> circulant2(const PolyMatrix<Int>& a, const PolyMatrix<Int>& b) {
    size_t h = a.size(), n = 2 * h;
    PolyMatrix<Int> m(n, std::vector<IntPoly>(n));
    for (size_t i = 0; i < h; ++i)
        for (size_t j = 0; j < h; ++j) {
            m[i][j] = m[h + i][h + j] = a[i][j];
            m[i][h + j] = m[h + i][j] = b[i][j];
        }
    return m;
}

PolyMatrix<Int> circulant3(const PolyMatrix<Int>& a, const PolyMatrix<Int>& b,
                           const PolyMatrix<Int>& c) {
    size_t h = a.size(), n = 3 * h;
    const PolyMatrix<Int>* rows[3][3] = {{&a, &b, &c}, {&c, &a, &b}, {&b, &c, &a}};
    PolyMatrix<Int> m(n, std::vector<IntPoly>(n));
    for (size_t br = 0; br < 3; ++br)
        for (size_t bc = 0; bc < 3; ++bc)
            for (size_t i = 0; i < h; ++i)
                for (size_t j = 0; j < h; ++j)
                    m[br * h + i][bc * h + j] = (*rows[br][bc])[i][j];
    return m;
}

} // namespace

TEST_CASE("coefficient rings") {
    Zeta z{Int(0), Int(1)};
    CHECK(z * z == Zeta{Int(-1), Int(-1)});     // z^2 = -1 - z
    CHECK(z * z * z == Zeta{Int(1), Int(0)});   // z^3 = 1
    CHECK(z.conj() == Zeta{Int(-1), Int(-1)});  // conjugation is z -> z^2
    Zeta w{Int(2), Int(3)};
    CHECK((w * w.conj()).y == 0); // norms are rational integers
    CHECK(ring_div(w * z, z) == w);

    Zp a{5, 7}, b{3, 7};
    CHECK(a + b == Zp{1, 7});
    CHECK(a * b == Zp{1, 7});
    CHECK(ring_div(Zp{1, 7}, b) * b == Zp{1, 7});
    CHECK_THROWS_AS((void)(Zp{1, 5} * Zp{1, 7}), DomainError);
    CHECK(Zp{} + Zp{} == Zp{}); // context-free zero

    CHECK(ring_div(Int(12), Int(4)) == 3);
    CHECK_THROWS_AS(ring_div(Int(5), Int(2)), InternalError);
    CHECK_THROWS_AS(ring_div(Int(5), Int(0)), DomainError);
}

TEST_CASE("polynomial text forms round trip") {
    for (const char* text : {"t^2-3t+1", "4s-1", "s^-1+1", "-2t^3+t", "7", "0", "s"}) {
        auto [f, var] = parse_poly(text);
        if (f.is_zero()) continue;
        auto [g, var2] = parse_poly(poly_str(f, var ? var : 't'));
        CHECK(f == g);
    }
    CHECK(poly_str(ipoly("t^2-3t+1"), 's') == "s^2-3s+1");
    CHECK(parse_poly("7").second == 0);
    CHECK(parse_poly("t^2-3t+1").second == 't');
    CHECK_THROWS_AS(parse_poly("t+s"), ParseError);
    CHECK_THROWS_AS(parse_poly("t^"), ParseError);
    CHECK_THROWS_AS(parse_poly(""), ParseError);
}

TEST_CASE("laurent arithmetic and exact division") {
    IntPoly f = ipoly("t^2-3t+1");
    IntPoly g = ipoly("t-1");
    CHECK(poly_div_exact(f * g, g) == f);
    CHECK(poly_div_exact(f * g, f) == g);
    CHECK_THROWS_AS(poly_div_exact(f, g), InternalError);
    CHECK_THROWS_AS(poly_div_exact(f, IntPoly{}), DomainError);
    CHECK((f - f).is_zero());
    CHECK(f + IntPoly{} == f);

    IntPoly lau = IntPoly::monomial(Int(1), -2) + IntPoly(Int(1)); // t^-2 + 1
    CHECK(lau.low == -2);
    CHECK(poly_div_exact(lau * g, g) == lau);
}

TEST_CASE("normalization and associate equality") {
    CHECK(normalized(ipoly("-t^2+3t-1")) == ipoly("t^2-3t+1"));
    CHECK(normalized(IntPoly::monomial(Int(-2), -3)) == IntPoly(Int(2)));
    CHECK(assoc_equal(ipoly("t-1"), ipoly("-t+1")));
    CHECK(assoc_equal(ipoly("t-1"), IntPoly::monomial(Int(1), 4) * ipoly("t-1")));
    CHECK_FALSE(assoc_equal(ipoly("t-1"), ipoly("t-2")));
    CHECK(assoc_equal(to_mod(ipoly("2t+4"), 3), to_mod(ipoly("t+2"), 3)));
}

TEST_CASE("symmetry") {
    CHECK(is_symmetric(ipoly("t^2-3t+1")));
    CHECK_FALSE(is_symmetric(ipoly("2t-1")));
    CHECK(is_symmetric(ipoly("s-1")));
    CHECK(is_symmetric(ipoly("5")));
    CHECK_THROWS_AS(is_symmetric(IntPoly{}), DomainError);
}

TEST_CASE("pullback") {
    CHECK(pullback_char_poly(ipoly("t^2-3t+1"), 1) == normalized(ipoly("t^2-3t+1")));
    CHECK(assoc_equal(pullback_char_poly(ipoly("t^2-3t+1"), 2), ipoly("s^2-7s+1")));
    CHECK(assoc_equal(pullback_char_poly(ipoly("2t-1"), 2), ipoly("4s-1")));
    CHECK_THROWS_AS(pullback_char_poly(ipoly("t-2"), 0), DomainError);

    // library resultant and the independent oracle agree
    std::mt19937 rng(424242);
    for (int i = 0; i < 40; ++i) {
        IntPoly f = random_poly(rng, 5, 9);
        if (f.is_zero()) continue;
        int r = 1 + static_cast<int>(rng() % 3);
        IntPoly lib = pullback_char_poly(f, r);
        CHECK(assoc_equal(lib, resultant_pullback(f, r)));
        CHECK(assoc_equal(lib, pullback_resultant(f, r)));
        CHECK(normalized(lib).degree() == normalized(f).degree());
    }
    for (int i = 0; i < 40; ++i) {
        IntPoly f = random_symmetric_poly(rng, 6, 9);
        if (f.is_zero()) continue;
        int r = 1 + static_cast<int>(rng() % 3);
        CHECK(is_symmetric(f));
        CHECK(is_symmetric(pullback_char_poly(f, r)));
    }
}

TEST_CASE("matrix parsing") {
    auto [m, var] = parse_poly_matrix("s-2 ; -1\n-1; s-2\n");
    CHECK(var == 's');
    REQUIRE(m.size() == 2);
    CHECK(m[0][0] == ipoly("s-2"));
    CHECK(m[0][1] == ipoly("-1"));
    CHECK_THROWS_AS(parse_poly_matrix("s;1\n2\n"), ParseError);
    CHECK_THROWS_AS(parse_poly_matrix(""), ParseError);
    CHECK_THROWS_AS(parse_poly_matrix("s;1\nt;2\n"), ParseError);
    // comments are allowed
    auto [m2, var2] = parse_poly_matrix("# covering matrix\n1;0\n0;1\n");
    CHECK(m2.size() == 2);
}

TEST_CASE("determinants") {
    PolyMatrix<Int> id(3, std::vector<IntPoly>(3));
    for (int i = 0; i < 3; ++i) id[i][i] = IntPoly(Int(1));
    CHECK(poly_matrix_det(id) == IntPoly(Int(1)));

    auto t2 = imatrix(read_fixture("ex4_4_t2.mat"));
    IntPoly det2 = poly_matrix_det(t2);
    CHECK(det2 == ipoly("s^2-4s+3"));
    CHECK(assoc_equal(to_mod(det2, 3), to_mod(ipoly("s-1"), 3)));
    CHECK(det2 == cofactor_det(t2));

    auto t6 = imatrix(read_fixture("ex4_4_t6.mat"));
    IntPoly det6 = poly_matrix_det(t6);
    CHECK(det6 == cofactor_det(t6));
    CHECK(assoc_equal(to_mod(det6, 2), to_mod(ipoly("s^2-2s+1"), 2)));

    CHECK_THROWS_AS(poly_matrix_det(PolyMatrix<Int>{{IntPoly(Int(1)), IntPoly(Int(2))}}),
                    DomainError);

    std::mt19937 rng(777);
    for (int i = 0; i < 30; ++i) {
        auto m = random_block(rng, 3, 2, 5);
        CHECK(poly_matrix_det(m) == cofactor_det(m));
    }
}

TEST_CASE("two-fold cover factorization") {
    auto r1 = two_cover_factor(PolyMatrix<Int>{{ipoly("s")}}, PolyMatrix<Int>{{ipoly("1")}});
    CHECK(r1.det_sum == ipoly("s+1"));
    CHECK(r1.det_diff == ipoly("s-1"));
    CHECK(r1.g == IntPoly(Int(1)));
    CHECK_FALSE(r1.surjective_s3_lift);

    auto [a, b] = split_two_blocks(imatrix(read_fixture("ex4_4_t2.mat")));
    auto r2 = two_cover_factor(a, b);
    CHECK(r2.det_sum == ipoly("s-3"));
    CHECK(r2.det_diff == ipoly("s-1"));
    CHECK(r2.g == IntPoly(Int(1)));
    CHECK(r2.g_mod3.coeffs.size() <= 1);
    CHECK_FALSE(r2.surjective_s3_lift);

    // symmetric determinants give a symmetric quotient
    PolyMatrix<Int> sa{{ipoly("s-1"), IntPoly{}}, {IntPoly{}, ipoly("s^2-3s+1")}};
    PolyMatrix<Int> sb{{IntPoly{}, IntPoly{}}, {IntPoly{}, IntPoly{}}};
    auto r3 = two_cover_factor(sa, sb);
    CHECK(is_symmetric(r3.det_sum));
    CHECK(is_symmetric(r3.det_diff));
    CHECK(is_symmetric(r3.g));
    CHECK(r3.surjective_s3_lift); // g = s^2-3s+1 is nontrivial mod 3

    CHECK_THROWS_AS(two_cover_factor(PolyMatrix<Int>{{ipoly("s")}},
                                     PolyMatrix<Int>{{ipoly("2")}}),
                    DomainError); // (s-1) does not divide s-2

    // determinant identity and mod-2 congruence on random blocks
    std::mt19937 rng(31337);
    for (int i = 0; i < 25; ++i) {
        int n = 1 + static_cast<int>(rng() % 3);
        auto ra = random_block(rng, n, 2, 4), rb = random_block(rng, n, 2, 4);
        IntPoly whole = cofactor_det(circulant2(ra, rb));
        IntPoly split = poly_matrix_det(mat_add(ra, rb)) * poly_matrix_det(mat_sub(ra, rb));
        CHECK(whole == split);
        CHECK(to_mod(poly_matrix_det(mat_sub(ra, rb)) - poly_matrix_det(mat_add(ra, rb)), 2)
                  .is_zero());
    }
}

TEST_CASE("three-fold cover factorization") {
    PolyMatrix<Int> id{{IntPoly(Int(1))}};
    PolyMatrix<Int> zero{{IntPoly{}}};
    auto r0 = three_cover_factor(id, zero, zero);
    CHECK(r0.delta_tilde == IntPoly(Int(1)));
    CHECK(r0.ffbar == IntPoly(Int(1)));

    auto [a, b, c] = split_three_blocks(imatrix(read_fixture("ex4_4_t6.mat")));
    auto r = three_cover_factor(a, b, c);
    CHECK(assoc_equal(r.delta_tilde, ipoly("s-4")));
    CHECK(r.ffbar == ipoly("s^2-2s+1"));
    CHECK(r.s_minus_1_sq_factor);
    CHECK_FALSE(r.surjective_a4_lift);

    // whole-determinant factorization, integrality, and the mod-3 congruence
    std::mt19937 rng(5150);
    for (int i = 0; i < 25; ++i) {
        int n = 1 + static_cast<int>(rng() % 2);
        auto ra = random_block(rng, n, 1, 3);
        auto rb = random_block(rng, n, 1, 3);
        auto rc = random_block(rng, n, 1, 3);
        auto rep = three_cover_factor(ra, rb, rc);
        IntPoly whole = cofactor_det(circulant3(ra, rb, rc));
        CHECK(assoc_equal(whole, rep.delta_tilde * rep.ffbar));
        CHECK(to_mod(rep.ffbar - rep.delta_tilde * rep.delta_tilde, 3).is_zero());
    }
}

TEST_CASE("block splitting") {
    auto [a, b] = split_two_blocks(imatrix(read_fixture("ex4_4_t2.mat")));
    CHECK(a == PolyMatrix<Int>{{ipoly("s-2")}});
    CHECK(b == PolyMatrix<Int>{{ipoly("-1")}});
    CHECK_THROWS_AS(split_two_blocks(imatrix("1;2;3\n4;5;6\n7;8;9\n")), DomainError);
    CHECK_THROWS_AS(split_two_blocks(imatrix("1;2\n3;4\n")), DomainError);

    auto [x, y, z] = split_three_blocks(imatrix(read_fixture("ex4_4_t6.mat")));
    CHECK(x.size() == 2);
    // both rotation orders are accepted
    auto m1 = circulant3(x, y, z);
    auto [x1, y1, z1] = split_three_blocks(m1);
    CHECK(x1 == x);
    CHECK(y1 == y);
    CHECK(z1 == z);
    CHECK_THROWS_AS(split_three_blocks(imatrix("1;2\n3;4\n")), DomainError);
}

TEST_CASE("pullbacks anchor the cover determinants") {
    // a_{j+1} = a_j^2 has 0th characteristic polynomial t - 2; pulling back
    // along s = t^2 gives s - 4, the determinant sum of the 3-fold cover
    auto [a, b, c] = split_three_blocks(imatrix(read_fixture("ex4_4_t6.mat")));
    auto r3 = three_cover_factor(a, b, c);
    CHECK(assoc_equal(pullback_char_poly(ipoly("t-2"), 2), r3.delta_tilde));

    // a_{j+1} = a_j^3 has t - 3; det(T) = (s-1)(s-3) = detSum * detDiff
    auto [a2, b2] = split_two_blocks(imatrix(read_fixture("ex4_4_t2.mat")));
    auto r2 = two_cover_factor(a2, b2);
    CHECK(assoc_equal(pullback_char_poly(ipoly("t-3"), 1), r2.det_sum));
}

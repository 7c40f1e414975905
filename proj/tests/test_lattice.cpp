#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "k3fm/lattice.hpp"

using namespace k3fm;

namespace {

IntLattice hyperbolic_plane() { return IntLattice({{0, 1}, {1, 0}}); }

IntMat gram_u_minus2() { return {{0, 1, 0}, {1, 0, 0}, {0, 0, -2}}; }

}  // namespace

TEST_CASE("int_det matches cofactor expansion on small matrices") {
    CHECK(int_det({{Int(5)}}) == 5);
    CHECK(int_det({{1, 2}, {3, 4}}) == -2);
    CHECK(int_det({{2, 0, 0}, {0, 3, 0}, {0, 0, 5}}) == 30);
    CHECK(int_det({{0, 1, 0}, {1, 0, 0}, {0, 0, -2}}) == 2);
    // singular
    CHECK(int_det({{1, 2}, {2, 4}}) == 0);
}

TEST_CASE("rat_inverse and rat_solve") {
    RatMat a = {{Rat(2), Rat(1)}, {Rat(1), Rat(1)}};
    RatMat inv = rat_inverse(a);
    RatMat prod = rat_mat_mul(a, inv);
    CHECK(prod == rat_identity(2));

    auto x = rat_solve({{Rat(2), Rat(1)}, {Rat(1), Rat(1)}}, {Rat(3), Rat(2)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 1);
    CHECK((*x)[1] == 1);

    // inconsistent system
    CHECK_FALSE(rat_solve({{Rat(1), Rat(1)}, {Rat(1), Rat(1)}}, {Rat(0), Rat(1)}).has_value());

    // underdetermined: free variables pinned to zero, still a valid solution
    auto y = rat_solve({{Rat(1), Rat(1)}}, {Rat(5)});
    REQUIRE(y.has_value());
    CHECK((*y)[0] + (*y)[1] == 5);
}

TEST_CASE("smith_normal_form invariants") {
    auto check_snf = [](const IntMat& m) {
        SmithNF s = smith_normal_form(m);
        IntMat umv = int_mat_mul(int_mat_mul(s.u, m), s.v);
        CHECK(umv == s.d);
        Int du = int_det(s.u), dv = int_det(s.v);
        CHECK((du == 1 || du == -1));
        CHECK((dv == 1 || dv == -1));
        std::size_t n = std::min(m.size(), m[0].size());
        for (std::size_t i = 0; i + 1 < n; ++i)
            if (s.d[i][i] != 0 && s.d[i + 1][i + 1] != 0) CHECK(s.d[i + 1][i + 1] % s.d[i][i] == 0);
    };
    check_snf({{2, 4}, {6, 8}});
    check_snf({{0, 1}, {1, 0}});
    check_snf({{6, 0, 0}, {0, 10, 0}, {0, 0, 15}});
    check_snf(gram_u_minus2());
}

TEST_CASE("SNF of the rank-2 complement Gram for the (2,7,2) family class") {
    // Gram [[-2rs, 2l], [2l, -2]] at r=2, s=7, l=2 has invariant factors 2, 20
    SmithNF s = smith_normal_form({{-28, 4}, {4, -2}});
    CHECK(s.d[0][0] == 2);
    CHECK(s.d[1][1] == 20);
}

TEST_CASE("IntLattice validates its Gram matrix") {
    CHECK_NOTHROW(IntLattice(gram_u_minus2()));
    CHECK_THROWS_AS(IntLattice({{0, 1}, {2, 0}}), std::invalid_argument);  // not symmetric
    CHECK_THROWS_AS(IntLattice({{1, 0}, {0, 2}}), std::invalid_argument);  // odd diagonal
    CHECK_THROWS_AS(IntLattice({{2, 2}, {2, 2}}), std::invalid_argument);  // degenerate
}

TEST_CASE("pairing on U + <-2>") {
    IntLattice l(gram_u_minus2());
    IntVec e{1, 0, 0}, f{0, 1, 0}, delta{0, 0, 1};
    CHECK(pair(l, e, e) == 0);
    CHECK(pair(l, e, f) == 1);
    CHECK(pair(l, delta, delta) == -2);
    // L_{2,7,2} = e + 14 f - 2 delta has square 2 d = 2 (rs - l^2) = 20
    IntVec cls{1, 14, -2};
    CHECK(pair(l, cls, cls) == 20);
    // rational overload agrees after scaling
    CHECK(pair(l, to_rat(cls), to_rat(delta)) == 4);
}

TEST_CASE("divisibility and primitivity") {
    IntLattice l(gram_u_minus2());
    CHECK(divisibility(l, {1, 14, -2}) == 1);
    CHECK(divisibility(l, {1, 14, 1}) == 1);
    // Lbar-type class 2e + 2rs f + l delta pairs evenly with everything
    CHECK(divisibility(l, {2, 4, 1}) == 2);
    CHECK(divisibility(l, {0, 0, 1}) == 2);
    CHECK(is_primitive({2, 4, 1}));
    CHECK_FALSE(is_primitive({2, 4, 6}));
}

TEST_CASE("sublattice coordinates and membership") {
    IntLattice l(gram_u_minus2());
    Sublattice s(l, {{1, 0, 0}, {0, 1, 0}});
    CHECK(s.rank() == 2);
    CHECK(s.induced().gram() == IntMat{{0, 1}, {1, 0}});

    RatVec inside = {Rat(3), Rat(-1), Rat(0)};
    CHECK(s.contains_vector(inside));
    CHECK(s.in_rational_span(inside));
    auto coords = s.span_coords(inside);
    REQUIRE(coords.has_value());
    CHECK(s.to_ambient(*coords) == inside);

    RatVec half = {Rat(1, 2), Rat(0), Rat(0)};
    CHECK_FALSE(s.contains_vector(half));
    CHECK(s.in_rational_span(half));

    RatVec outside = {Rat(0), Rat(0), Rat(1)};
    CHECK_FALSE(s.in_rational_span(outside));
    CHECK_FALSE(s.span_coords(outside).has_value());
}

TEST_CASE("orthogonal complement is saturated and orthogonal") {
    IntLattice l(gram_u_minus2());
    IntVec cls{1, 14, -2};  // square 20
    Sublattice t = orthogonal_complement(l, cls);
    CHECK(t.rank() == 2);
    for (const IntVec& row : t.basis()) CHECK(pair(l, row, cls) == 0);
    // |disc T| = square * |det Lambda| for a primitive vector in this ambient
    CHECK(boost::multiprecision::abs(t.induced().det()) == 40);
    // saturation: any ambient vector in the rational span with integral
    // coordinates times 2 that lies in Lambda must lie in T
    RatVec v = to_rat(t.to_ambient(IntVec{1, 1}));
    CHECK(t.contains_vector(v));
}

TEST_CASE("orthogonal complement in the hyperbolic plane") {
    IntLattice u = hyperbolic_plane();
    Sublattice c = orthogonal_complement(u, {1, 1});  // square 2
    CHECK(c.rank() == 1);
    CHECK(c.induced().gram()[0][0] == -2);
}

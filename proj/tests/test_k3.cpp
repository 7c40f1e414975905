#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "k3fm/k3.hpp"

using namespace k3fm;

TEST_CASE("reduced model layout") {
    K3Lattice k = k3_lattice(Model::reduced);
    CHECK(k.lat.rank() == 3);
    CHECK(pair(k.lat, k.e, k.e) == 0);
    CHECK(pair(k.lat, k.e, k.f) == 1);
    CHECK(pair(k.lat, k.delta, k.delta) == -2);
    CHECK(pair(k.lat, k.e, k.delta) == 0);
}

TEST_CASE("full model layout") {
    K3Lattice k = k3_lattice(Model::full);
    CHECK(k.lat.rank() == 23);
    CHECK(boost::multiprecision::abs(k.lat.det()) == 2);
    CHECK(pair(k.lat, k.e, k.f) == 1);
    CHECK(pair(k.lat, k.delta, k.delta) == -2);
    CHECK(pair(k.lat, k.e, k.delta) == 0);
    CHECK(pair(k.lat, k.f, k.delta) == 0);
    // E8(-1) blocks are negative definite of determinant 1: check the square
    // of one root vector
    IntVec root(23, 0);
    root[6] = 1;
    CHECK(pair(k.lat, root, root) == -2);
}

TEST_CASE("family classes and their invariants") {
    K3Lattice k = k3_lattice(Model::reduced);

    IntVec L = class_of(k, Family::L, 2, 7, 2);
    CHECK(L == IntVec{1, 14, -2});
    CHECK(pair(k.lat, L, L) == 2 * family_d(Family::L, 2, 7, 2));
    CHECK(family_d(Family::L, 2, 7, 2) == 10);
    CHECK(divisibility(k.lat, L) == 1);

    IntVec Lp = class_of(k, Family::Lp, 2, 7, 2);
    CHECK(Lp == IntVec{7, 2, -2});
    CHECK(pair(k.lat, Lp, Lp) == 20);

    IntVec Lbar = class_of(k, Family::Lbar, 3, 2, 3);
    CHECK(Lbar == IntVec{2, 12, 3});
    CHECK(family_d(Family::Lbar, 3, 2, 3) == 15);
    CHECK(pair(k.lat, Lbar, Lbar) == 2 * 15);
    CHECK(divisibility(k.lat, Lbar) == 2);

    IntVec Lbarp = class_of(k, Family::Lbarp, 3, 2, 3);
    CHECK(Lbarp == IntVec{4, 6, 3});
    CHECK(pair(k.lat, Lbarp, Lbarp) == 2 * 15);
}

TEST_CASE("family validation") {
    K3Lattice k = k3_lattice(Model::reduced);
    CHECK_THROWS_AS(class_of(k, Family::L, 2, 4, 1), std::invalid_argument);     // gcd(r,s) != 1
    CHECK_THROWS_AS(class_of(k, Family::L, 0, 1, 0), std::invalid_argument);     // r < 1
    CHECK_THROWS_AS(class_of(k, Family::L, 1, 1, 2), std::invalid_argument);     // square <= 0
    CHECK_THROWS_AS(class_of(k, Family::Lbar, 1, 1, 2), std::invalid_argument);  // l even
}

TEST_CASE("full-model classes agree with reduced ones under the embedding") {
    K3Lattice kf = k3_lattice(Model::full);
    IntVec L = class_of(kf, Family::L, 2, 7, 2);
    CHECK(pair(kf.lat, L, L) == 20);
    CHECK(divisibility(kf.lat, L) == 1);
    IntVec Lbar = class_of(kf, Family::Lbar, 1, 1, 1);
    CHECK(pair(kf.lat, Lbar, Lbar) == 6);
    CHECK(divisibility(kf.lat, Lbar) == 2);
}

TEST_CASE("RatIsometry rejects non-isometries") {
    K3Lattice k = k3_lattice(Model::reduced);
    RatMat scale = rat_identity(3);
    scale[0][0] = 2;
    CHECK_THROWS_AS(RatIsometry(k.lat, scale), std::invalid_argument);
    CHECK_NOTHROW(RatIsometry(k.lat, rat_identity(3)));
}

TEST_CASE("reflections are involutive isometries") {
    K3Lattice k = k3_lattice(Model::reduced);
    RatIsometry rho = rho_r(k, 2);
    // rho_2 reflects in e - 2f: e -> 2f, f -> e/2, delta fixed
    CHECK(rho.apply(k.e) == RatVec{Rat(0), Rat(2), Rat(0)});
    CHECK(rho.apply(k.f) == RatVec{Rat(1, 2), Rat(0), Rat(0)});
    CHECK(rho.apply(k.delta) == to_rat(k.delta));
    RatMat sq = rat_mat_mul(rho.matrix(), rho.matrix());
    CHECK(sq == rat_identity(3));
}

TEST_CASE("rho_r carries L to L-prime and Lbar to Lbar-prime") {
    K3Lattice k = k3_lattice(Model::reduced);
    SUBCASE("divisibility 1") {
        RatIsometry rho = rho_r(k, 2);
        RatVec img = rho.apply(class_of(k, Family::L, 2, 7, 2));
        CHECK(to_int(img) == class_of(k, Family::Lp, 2, 7, 2));
    }
    SUBCASE("divisibility 2") {
        RatIsometry rho = rho_r(k, 3);
        RatVec img = rho.apply(class_of(k, Family::Lbar, 3, 2, 3));
        CHECK(to_int(img) == class_of(k, Family::Lbarp, 3, 2, 3));
    }
}

TEST_CASE("rho_r is integral on the complement of L but not on the lattice") {
    K3Lattice k = k3_lattice(Model::reduced);
    RatIsometry rho = rho_r(k, 2);
    Sublattice t = orthogonal_complement(k.lat, class_of(k, Family::L, 2, 7, 2));
    CHECK(is_integral_on(rho, t));
    // on the full lattice rho_2 has half-integral entries
    Sublattice all(k.lat, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK_FALSE(is_integral_on(rho, all));
}

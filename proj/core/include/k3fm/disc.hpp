#pragma once

// Discriminant groups disc T = T*/T with their Q/Z bilinear and Q/2Z quadratic
// forms, and the canonical generator data attached to the orthogonal
// complement of a polarization class: a gluing generator gamma(1) of order 2d
// (divisibility 1) or d (divisibility 2), plus the order-2 class [delta_L] in
// the divisibility-1 case.

#include "k3fm/k3.hpp"

namespace k3fm {

// Finite quotient T*/T presented by the Smith normal form of Gram(T).
// Generators are stored as rational lifts in ambient coordinates; element
// coordinates are integer vectors modulo `orders`.
struct DiscGroup {
    Sublattice sub;                 // T inside its ambient lattice
    IntVec orders;                  // invariant factors > 1, each dividing the next
    std::vector<RatVec> gen_lifts;  // ambient lifts of the generators
    IntMat urows;                   // coordinate-extraction rows (from SNF row transform)
};

DiscGroup disc_group(Sublattice t);

Int disc_order(const DiscGroup& g);

// membership of x in T* (rational span of T with integral pairings against T)
bool in_dual(const DiscGroup& g, const RatVec& x);

// class of a dual vector in generator coordinates; throws if x is not in T*
IntVec discretize(const DiscGroup& g, const RatVec& x);

RatVec lift_of(const DiscGroup& g, const IntVec& coords);

IntVec reduce_coords(const DiscGroup& g, IntVec coords);
IntVec add_coords(const DiscGroup& g, const IntVec& a, const IntVec& b);
IntVec scale_coords(const DiscGroup& g, const Int& c, const IntVec& a);
bool is_zero_coords(const IntVec& coords);

Int element_order(const DiscGroup& g, const IntVec& coords);

// quadratic form value in Q/2Z, representative in [0,2)
Rat quad_of(const DiscGroup& g, const IntVec& coords);

// bilinear form value in Q/Z, representative in [0,1)
Rat bil_of(const DiscGroup& g, const IntVec& a, const IntVec& b);

// Orthogonal complement of a polarization class together with its discriminant
// group and canonical generators.  div 1: disc = Z_2d + Z_2, gamma1 of order
// 2d with q = -1/(2d), delta_cls of order 2 with q = -1/2 and b(., gamma1) = 0.
// div 2: disc = Z_d, gamma1 of order d, delta_cls empty.
struct Transcendental {
    IntVec cls;        // the polarization class, ambient coordinates
    Int d;             // half of its square
    int div;           // divisibility, 1 or 2
    DiscGroup disc;
    IntVec gamma1;
    IntVec delta_cls;
};

Transcendental transcendental(const K3Lattice& k, const IntVec& cls);

// express coords as a*gamma1 + b*delta_cls (b = 0 in divisibility 2);
// nullopt when coords is outside the span of the canonical generators
std::optional<std::pair<Int, Int>> in_canonical_basis(const Transcendental& t, const IntVec& coords);

}  // namespace k3fm

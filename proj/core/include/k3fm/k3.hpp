#pragma once

// The fixed lattices of the K3^[2] setting: the full rank-23 lattice
// U^3 + E8(-1)^2 + <-2> with distinguished classes e, f, delta, a rank-3
// reduced model U + <-2>, the polarization families L/L'/Lbar/Lbar', and
// rational reflections.

#include "k3fm/lattice.hpp"

namespace k3fm {

enum class Model { reduced, full };

struct K3Lattice {
    Model model;
    IntLattice lat;
    IntVec e, f, delta;
};

// U + <-2> (rank 3) or U^3 + E8(-1)^2 + <-2> (rank 23)
K3Lattice k3_lattice(Model model);

enum class Family { L, Lp, Lbar, Lbarp };

// L       : e + rs f - l delta        (divisibility 1)
// Lp      : s e + r f - l delta
// Lbar    : 2e + 2rs f + l delta      (divisibility 2, l odd)
// Lbarp   : 2s e + 2r f + l delta
IntVec class_of(const K3Lattice& k, Family fam, const Int& r, const Int& s, const Int& l);

// degree invariant: square/2 for L-type, square/2 for Lbar-type
Int family_d(Family fam, const Int& r, const Int& s, const Int& l);

// Rational-matrix isometry of the ambient rational space; the constructor
// checks M^T G M = G exactly.
class RatIsometry {
  public:
    RatIsometry(const IntLattice& l, RatMat m);

    const RatMat& matrix() const { return m_; }
    RatVec apply(const RatVec& v) const { return rat_mat_vec(m_, v); }
    RatVec apply(const IntVec& v) const { return rat_mat_vec(m_, to_rat(v)); }
    RatIsometry inverse(const IntLattice& l) const { return RatIsometry(l, rat_inverse(m_)); }

  private:
    RatMat m_;
};

// reflection x -> x - 2(u,x)/(u,u) u
RatIsometry reflection(const IntLattice& l, const IntVec& u);

// reflection with respect to e - r f
RatIsometry rho_r(const K3Lattice& k, const Int& r);

// true iff iso maps every basis vector of S to an integral ambient vector
bool is_integral_on(const RatIsometry& iso, const Sublattice& s);

}  // namespace k3fm

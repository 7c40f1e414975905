#pragma once

// Discriminant-action invariants of isometries between the orthogonal
// complements of polarization classes: the pair (a mod 2d, b mod 2) in
// divisibility 1 and the residue a mod d in divisibility 2, together with
// admissibility enumeration, exact computation from a rational isometry,
// closed-form predictions for the reflections rho_r, and composition.

#include "k3fm/disc.hpp"

namespace k3fm {

struct Action {
    int div;  // 1 or 2
    Int d;
    Int a;    // residue mod 2d (div 1) or mod d (div 2)
    Int b;    // residue mod 2; always 0 in divisibility 2
};

bool operator==(const Action& x, const Action& y);

Action identity_action(const Int& d, int div);

// div 1: a^2 = 1 - b d (mod 4d); div 2: a^2 = 1 (mod d)
bool is_admissible(const Action& act);

// all admissible actions, ordered by (b, a); div 2 requires d = 3 mod 4
std::vector<Action> admissible_actions(const Int& d, int div);

// the action induced by -id on the ambient lattice: a -> -a, b fixed
Action negate(const Action& act);

// equal up to negation
bool equivalent(const Action& x, const Action& y);

Action canonical_rep(const Action& act);

// image of [delta] forced by the quadratic form once the gamma1-image is
// fixed: one of (0,1), (d,0), (d,1) as (gamma1, delta) coefficients
std::pair<Int, Int> delta_image(const Action& act);

// composition of the full generator-image maps, x after y
Action compose(const Action& x, const Action& y);

// Exact action of an ambient rational isometry restricting to an integral
// isometry T_src -> T_dst: pull the canonical generator of disc(T_dst) back
// through iso^{-1} and express it in the canonical generators of disc(T_src).
Action induced_action(const K3Lattice& k, const RatIsometry& iso, const Transcendental& src,
                      const Transcendental& dst);

// Closed-form prediction for the action of rho_r on the complement of
// L_{r,s,l} (div 1, needs r | 2l) resp. Lbar_{r,s,l} (div 2, needs r | l,
// r and l odd).  Bezout witness m is the minimal nonnegative solution of
// s m = 1 (mod r) resp. 2 s m = 1 (mod r).
struct RhoPrediction {
    Action action;
    Int t;  // 2l/r (div 1 only)
    Int m;
};
RhoPrediction predicted_rho_action(const Int& r, const Int& s, const Int& l, int div);

}  // namespace k3fm

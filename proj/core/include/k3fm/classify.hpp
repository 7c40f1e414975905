#pragma once

// Derived-equivalence verdicts and partner counts, Brauer B-lift algebra,
// kernel ranks, twisted Mukai vectors, and the fixture Picard lattices.

#include "k3fm/decompose.hpp"

namespace k3fm {

struct Verdict {
    enum class Kind { Derived, TwistedHalfDelta };
    Kind kind;
    Int d;
    int div;
    int tau;
    Int two_pow_tau;
    Int partners_raw;           // number of admissible actions
    Int partners_mod_negation;  // classes under a -> -a
    Int b0_count, b1_count;     // divisibility-1 split of the raw count
};

// number of distinct prime divisors, with tau(1) = 1
int tau(const Int& d);

Verdict classify(const Int& d, int div);

// Rational lift B0/k of a k-torsion Brauer class, carried with the Picard
// generators that enter the ambiguity: B is trivial iff it lies in
// Lambda + (1/k) span(pic).
struct BLift {
    RatVec cls;
    Int k;
    std::vector<IntVec> pic;
};

bool blift_is_trivial(const K3Lattice& kl, const BLift& b);
bool blift_equiv(const K3Lattice& kl, const BLift& x, const BLift& y);

// B-lifts of the two twists carried by the reflection step of a triple:
// div 1 gives ((l/r - 1/2) delta, (l/r + 1/2) delta), trivial exactly when
// t = 2l/r is odd; div 2 gives (-(l+r)/(2r) delta, -(l-r)/(2r) delta),
// always trivial
std::pair<BLift, BLift> twist_pair(const K3Lattice& kl, const RSL& rsl);

// n! r^n
Int kernel_rank(int n, const Int& r);

struct MukaiVector {
    Int rank;
    Int c1_h;  // multiple of the polarization h
    Rat s;
};

bool operator==(const MukaiVector& x, const MukaiVector& y);

// (0, h, (8 - 2(c1A + KC))/4)
MukaiVector twisted_mukai_vector(const Int& c1A_deg, const Int& KC_deg);

// (0, h, deg + 1 - g)
MukaiVector line_bundle_vector(const Int& deg, const Int& g);

Int pushforward_rank(const Int& deg, const Int& g);

struct PkGram {
    IntMat gram;
    bool even;  // diagonal entries all even
};

// [[2k^2, 2k], [2k, 0]] for k odd, [[k^2/2, k/2], [k/2, 0]] for k even
PkGram pk_picard_gram(const Int& k);

}  // namespace k3fm

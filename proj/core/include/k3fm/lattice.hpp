#pragma once

// Exact linear algebra for even integral lattices given by Gram matrices:
// pairings, divisibility, orthogonal complements, Smith normal form,
// and membership tests for rational vectors.

#include <optional>
#include <stdexcept>

#include "k3fm/rational.hpp"

namespace k3fm {

// ---------------------------------------------------------------- matrices

IntMat int_identity(std::size_t n);
RatMat rat_identity(std::size_t n);
IntMat int_mat_mul(const IntMat& a, const IntMat& b);
RatMat rat_mat_mul(const RatMat& a, const RatMat& b);
IntMat int_transpose(const IntMat& a);
RatMat to_rat(const IntMat& a);
RatVec to_rat(const IntVec& v);
IntVec int_mat_vec(const IntMat& a, const IntVec& v);
RatVec rat_mat_vec(const RatMat& a, const RatVec& v);
bool is_integral(const RatVec& v);
IntVec to_int(const RatVec& v);  // throws if non-integral

// fraction-free determinant (Bareiss)
Int int_det(IntMat a);

// inverse of a nonsingular rational matrix (Gauss-Jordan); throws if singular
RatMat rat_inverse(RatMat a);

// solve A x = b over the rationals; nullopt if inconsistent.
// A may be rectangular; when the solution space is positive-dimensional the
// free variables are set to zero.
std::optional<RatVec> rat_solve(RatMat a, RatVec b);

// Smith normal form: U * M * V = D with U, V unimodular and the diagonal of D
// nonnegative with d1 | d2 | ...
struct SmithNF {
    IntMat u, d, v;
};
SmithNF smith_normal_form(const IntMat& m);

// ---------------------------------------------------------------- lattices

// Even nondegenerate integral lattice, fixed by its Gram matrix.
class IntLattice {
  public:
    explicit IntLattice(IntMat gram);

    std::size_t rank() const { return gram_.size(); }
    const IntMat& gram() const { return gram_; }
    const Int& det() const { return det_; }

  private:
    IntMat gram_;
    Int det_;
};

Int pair(const IntLattice& l, const IntVec& v, const IntVec& w);
Rat pair(const IntLattice& l, const RatVec& v, const RatVec& w);

// positive generator of { (v, x) : x in L }
Int divisibility(const IntLattice& l, const IntVec& v);

// gcd of coordinates is 1
bool is_primitive(const IntVec& v);

// true iff all coordinates are integers
bool contains(const IntLattice& l, const RatVec& x);

// Primitive (saturated) sublattice of an ambient lattice, stored as a row
// basis in ambient coordinates together with the induced Gram matrix.
class Sublattice {
  public:
    Sublattice(IntLattice ambient, IntMat basis);

    const IntLattice& ambient() const { return ambient_; }
    const IntMat& basis() const { return basis_; }
    const IntLattice& induced() const { return induced_; }
    std::size_t rank() const { return basis_.size(); }

    // internal -> ambient coordinates
    RatVec to_ambient(const RatVec& internal) const;
    IntVec to_ambient(const IntVec& internal) const;

    // ambient -> internal; nullopt when x is outside span(basis) over Q
    std::optional<RatVec> span_coords(const RatVec& x) const;

    // member of the sublattice itself (integral internal coordinates)
    bool contains_vector(const RatVec& x) const;
    // member of span(basis) over Q
    bool in_rational_span(const RatVec& x) const;

  private:
    IntLattice ambient_;
    IntMat basis_;
    IntLattice induced_;
};

// Saturated orthogonal complement of a primitive anisotropic vector.
Sublattice orthogonal_complement(const IntLattice& l, const IntVec& v);

}  // namespace k3fm

#include "k3fm/k3.hpp"

#include <stdexcept>

namespace k3fm {

namespace {

// E8 with the standard Coxeter labelling, negated
IntMat e8_minus() {
    // Cartan matrix of E8; node 1 is the trivalent branch end.
    const int c[8][8] = {
        {2, 0, -1, 0, 0, 0, 0, 0},   //
        {0, 2, 0, -1, 0, 0, 0, 0},   //
        {-1, 0, 2, -1, 0, 0, 0, 0},  //
        {0, -1, -1, 2, -1, 0, 0, 0}, //
        {0, 0, 0, -1, 2, -1, 0, 0},  //
        {0, 0, 0, 0, -1, 2, -1, 0},  //
        {0, 0, 0, 0, 0, -1, 2, -1},  //
        {0, 0, 0, 0, 0, 0, -1, 2},   //
    };
    IntMat g(8, IntVec(8));
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) g[i][j] = -c[i][j];
    return g;
}

IntVec unit(std::size_t n, std::size_t i) {
    IntVec v(n, 0);
    v[i] = 1;
    return v;
}

}  // namespace

K3Lattice k3_lattice(Model model) {
    if (model == Model::reduced) {
        IntMat g = {{0, 1, 0}, {1, 0, 0}, {0, 0, -2}};
        return {model, IntLattice(g), unit(3, 0), unit(3, 1), unit(3, 2)};
    }
    // three hyperbolic planes, two copies of E8(-1), then <-2>
    const std::size_t n = 23;
    IntMat g(n, IntVec(n, 0));
    for (std::size_t k = 0; k < 3; ++k) {
        g[2 * k][2 * k + 1] = 1;
        g[2 * k + 1][2 * k] = 1;
    }
    IntMat e8 = e8_minus();
    for (std::size_t c = 0; c < 2; ++c) {
        std::size_t off = 6 + 8 * c;
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j) g[off + i][off + j] = e8[i][j];
    }
    g[22][22] = -2;
    // e, f span the first hyperbolic plane
    return {model, IntLattice(g), unit(n, 0), unit(n, 1), unit(n, 22)};
}

IntVec class_of(const K3Lattice& k, Family fam, const Int& r, const Int& s, const Int& l) {
    if (r <= 0 || s <= 0) throw std::invalid_argument("class_of: r, s must be positive");
    if (igcd(r, s) != 1) throw std::invalid_argument("class_of: r, s must be coprime");
    bool barred = (fam == Family::Lbar || fam == Family::Lbarp);
    if (barred && imod(l, 2) != 1) throw std::invalid_argument("class_of: l must be odd for barred families");
    if (family_d(fam, r, s, l) <= 0) throw std::invalid_argument("class_of: square must be positive");
    std::size_t n = k.lat.rank();
    IntVec v(n, 0);
    auto add = [&](const IntVec& w, const Int& c) {
        for (std::size_t i = 0; i < n; ++i) v[i] += c * w[i];
    };
    switch (fam) {
        case Family::L:
            add(k.e, 1), add(k.f, r * s), add(k.delta, -l);
            break;
        case Family::Lp:
            add(k.e, s), add(k.f, r), add(k.delta, -l);
            break;
        case Family::Lbar:
            add(k.e, 2), add(k.f, 2 * r * s), add(k.delta, l);
            break;
        case Family::Lbarp:
            add(k.e, 2 * s), add(k.f, 2 * r), add(k.delta, l);
            break;
    }
    return v;
}

Int family_d(Family fam, const Int& r, const Int& s, const Int& l) {
    if (fam == Family::L || fam == Family::Lp) return r * s - l * l;
    return 4 * r * s - l * l;
}

RatIsometry::RatIsometry(const IntLattice& l, RatMat m) : m_(std::move(m)) {
    std::size_t n = l.rank();
    if (m_.size() != n) throw std::invalid_argument("RatIsometry: size mismatch");
    RatMat g = to_rat(l.gram());
    // columns of m_ are images of basis vectors; check all pairings
    for (std::size_t i = 0; i < n; ++i) {
        RatVec ci(n), gi(n);
        for (std::size_t k = 0; k < n; ++k) ci[k] = m_[k][i];
        gi = rat_mat_vec(g, ci);
        for (std::size_t j = i; j < n; ++j) {
            Rat p = 0;
            for (std::size_t k = 0; k < n; ++k) p += m_[k][j] * gi[k];
            if (p != Rat(l.gram()[i][j])) throw std::invalid_argument("RatIsometry: not an isometry");
        }
    }
}

RatIsometry reflection(const IntLattice& l, const IntVec& u) {
    Int uu = pair(l, u, u);
    if (uu == 0) throw std::invalid_argument("reflection: isotropic vector");
    std::size_t n = l.rank();
    RatMat m(n, RatVec(n, 0));
    for (std::size_t j = 0; j < n; ++j) {
        IntVec ej(n, 0);
        ej[j] = 1;
        Int ue = pair(l, u, ej);
        for (std::size_t i = 0; i < n; ++i) {
            Rat x = (i == j) ? Rat(1) : Rat(0);
            m[i][j] = x - make_rat(2 * ue, uu) * Rat(u[i]);
        }
    }
    return RatIsometry(l, std::move(m));
}

RatIsometry rho_r(const K3Lattice& k, const Int& r) {
    if (r <= 0) throw std::invalid_argument("rho_r: r must be positive");
    std::size_t n = k.lat.rank();
    IntVec u(n, 0);
    for (std::size_t i = 0; i < n; ++i) u[i] = k.e[i] - r * k.f[i];
    return reflection(k.lat, u);
}

bool is_integral_on(const RatIsometry& iso, const Sublattice& s) {
    for (const IntVec& b : s.basis())
        if (!is_integral(iso.apply(b))) return false;
    return true;
}

}  // namespace k3fm

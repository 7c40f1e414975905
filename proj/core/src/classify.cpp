#include "k3fm/classify.hpp"

#include <set>
#include <stdexcept>

namespace k3fm {

int tau(const Int& d) {
    if (d < 1) throw std::invalid_argument("tau: d must be positive");
    if (d == 1) return 1;
    Int n = d;
    int count = 0;
    for (Int p = 2; p * p <= n; ++p) {
        if (imod(n, p) != 0) continue;
        ++count;
        while (imod(n, p) == 0) n /= p;
    }
    if (n > 1) ++count;
    return count;
}

Verdict classify(const Int& d, int div) {
    std::vector<Action> acts = admissible_actions(d, div);  // validates (d, div)
    Verdict v;
    v.d = d;
    v.div = div;
    v.tau = tau(d);
    v.two_pow_tau = Int(1) << v.tau;
    v.kind = (div == 2 || imod(d, 4) == 1 || imod(d, 8) == 0) ? Verdict::Kind::Derived
                                                              : Verdict::Kind::TwistedHalfDelta;
    v.partners_raw = Int(acts.size());
    std::set<std::pair<Int, Int>> classes;
    Int b0 = 0, b1 = 0;
    for (const Action& a : acts) {
        Action c = canonical_rep(a);
        classes.insert({c.a, c.b});
        (a.b == 0 ? b0 : b1) += 1;
    }
    v.partners_mod_negation = Int(classes.size());
    v.b0_count = b0;
    v.b1_count = b1;
    return v;
}

bool blift_is_trivial(const K3Lattice& kl, const BLift& b) {
    std::size_t n = kl.lat.rank();
    if (b.cls.size() != n) throw std::invalid_argument("blift_is_trivial: dimension mismatch");
    // scan coefficients c in [0,k)^pic of the (1/k) span(pic) ambiguity
    std::vector<Int> c(b.pic.size(), 0);
    while (true) {
        RatVec x = b.cls;
        for (std::size_t i = 0; i < b.pic.size(); ++i)
            for (std::size_t j = 0; j < n; ++j) x[j] -= make_rat(c[i] * b.pic[i][j], b.k);
        if (is_integral(x)) return true;
        std::size_t i = 0;
        for (; i < c.size(); ++i) {
            if (++c[i] < b.k) break;
            c[i] = 0;
        }
        if (i == c.size()) return false;
    }
}

bool blift_equiv(const K3Lattice& kl, const BLift& x, const BLift& y) {
    if (x.k != y.k) throw std::invalid_argument("blift_equiv: mismatched torsion orders");
    BLift diff{x.cls, x.k, x.pic};
    for (std::size_t j = 0; j < diff.cls.size(); ++j) diff.cls[j] -= y.cls[j];
    return blift_is_trivial(kl, diff);
}

std::pair<BLift, BLift> twist_pair(const K3Lattice& kl, const RSL& rsl) {
    std::size_t n = kl.lat.rank();
    auto delta_times = [&](const Rat& c) {
        RatVec v(n, 0);
        for (std::size_t j = 0; j < n; ++j) v[j] = c * Rat(kl.delta[j]);
        return v;
    };
    Rat cx, cy;
    std::vector<IntVec> px, py;
    if (rsl.div == 1) {
        cx = make_rat(rsl.l, rsl.r) - make_rat(1, 2);
        cy = make_rat(rsl.l, rsl.r) + make_rat(1, 2);
        px = {class_of(kl, Family::L, rsl.r, rsl.s, rsl.l)};
        py = {class_of(kl, Family::Lp, rsl.r, rsl.s, rsl.l)};
    } else {
        cx = make_rat(-(rsl.l + rsl.r), 2 * rsl.r);
        cy = make_rat(-(rsl.l - rsl.r), 2 * rsl.r);
        px = {class_of(kl, Family::Lbar, rsl.r, rsl.s, rsl.l)};
        py = {class_of(kl, Family::Lbarp, rsl.r, rsl.s, rsl.l)};
    }
    Int kx = ilcm(2, den(cx)), ky = ilcm(2, den(cy));
    return {BLift{delta_times(cx), kx, std::move(px)}, BLift{delta_times(cy), ky, std::move(py)}};
}

Int kernel_rank(int n, const Int& r) {
    if (n < 1 || r < 1) throw std::invalid_argument("kernel_rank: need n, r >= 1");
    Int out = 1;
    for (int i = 2; i <= n; ++i) out *= i;
    for (int i = 0; i < n; ++i) out *= r;
    return out;
}

bool operator==(const MukaiVector& x, const MukaiVector& y) {
    return x.rank == y.rank && x.c1_h == y.c1_h && x.s == y.s;
}

MukaiVector twisted_mukai_vector(const Int& c1A_deg, const Int& KC_deg) {
    return MukaiVector{0, 1, make_rat(8 - 2 * (c1A_deg + KC_deg), 4)};
}

MukaiVector line_bundle_vector(const Int& deg, const Int& g) {
    if (g < 0) throw std::invalid_argument("line_bundle_vector: genus must be nonnegative");
    return MukaiVector{0, 1, Rat(deg + 1 - g)};
}

Int pushforward_rank(const Int& deg, const Int& g) {
    if (g < 0) throw std::invalid_argument("pushforward_rank: genus must be nonnegative");
    return deg + 1 - g;
}

PkGram pk_picard_gram(const Int& k) {
    if (k < 2) throw std::invalid_argument("pk_picard_gram: k must be at least 2");
    IntMat g;
    if (imod(k, 2) == 1)
        g = {{2 * k * k, 2 * k}, {2 * k, 0}};
    else
        g = {{k * k / 2, k / 2}, {k / 2, 0}};
    bool even = imod(g[0][0], 2) == 0 && imod(g[1][1], 2) == 0;
    return PkGram{std::move(g), even};
}

}  // namespace k3fm

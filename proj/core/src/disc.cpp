#include "k3fm/disc.hpp"

#include <algorithm>
#include <stdexcept>

namespace k3fm {

DiscGroup disc_group(Sublattice t) {
    std::size_t n = t.rank();
    SmithNF snf = smith_normal_form(t.induced().gram());
    IntVec orders;
    std::vector<RatVec> lifts;
    IntMat urows;
    for (std::size_t i = 0; i < n; ++i) {
        const Int& di = snf.d[i][i];
        if (di <= 1) continue;
        orders.push_back(di);
        // generator lift: (1/d_i) times column i of V, in internal coordinates
        RatVec internal(n);
        for (std::size_t j = 0; j < n; ++j) internal[j] = make_rat(snf.v[j][i], di);
        lifts.push_back(t.to_ambient(internal));
        urows.push_back(snf.u[i]);
    }
    return DiscGroup{std::move(t), std::move(orders), std::move(lifts), std::move(urows)};
}

Int disc_order(const DiscGroup& g) {
    Int p = 1;
    for (const Int& d : g.orders) p *= d;
    return p;
}

namespace {

// pairings of x against the basis of T; these are the "integral coordinates"
// of a dual vector in the SNF presentation
IntVec dual_pairings(const DiscGroup& g, const RatVec& x) {
    IntVec y;
    y.reserve(g.sub.rank());
    for (const IntVec& b : g.sub.basis()) {
        Rat p = pair(g.sub.ambient(), x, to_rat(b));
        if (!is_integer(p)) throw std::invalid_argument("discretize: vector not in the dual");
        y.push_back(num(p));
    }
    return y;
}

}  // namespace

bool in_dual(const DiscGroup& g, const RatVec& x) {
    if (!g.sub.in_rational_span(x)) return false;
    for (const IntVec& b : g.sub.basis())
        if (!is_integer(pair(g.sub.ambient(), x, to_rat(b)))) return false;
    return true;
}

IntVec discretize(const DiscGroup& g, const RatVec& x) {
    if (!g.sub.in_rational_span(x)) throw std::invalid_argument("discretize: vector not in span of T");
    IntVec y = dual_pairings(g, x);
    IntVec coords(g.orders.size());
    for (std::size_t i = 0; i < g.orders.size(); ++i) {
        Int acc = 0;
        for (std::size_t j = 0; j < y.size(); ++j) acc += g.urows[i][j] * y[j];
        coords[i] = imod(acc, g.orders[i]);
    }
    return coords;
}

RatVec lift_of(const DiscGroup& g, const IntVec& coords) {
    std::size_t n = g.sub.ambient().rank();
    RatVec x(n, 0);
    for (std::size_t i = 0; i < coords.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) x[j] += Rat(coords[i]) * g.gen_lifts[i][j];
    return x;
}

IntVec reduce_coords(const DiscGroup& g, IntVec coords) {
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = imod(coords[i], g.orders[i]);
    return coords;
}

IntVec add_coords(const DiscGroup& g, const IntVec& a, const IntVec& b) {
    IntVec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = imod(a[i] + b[i], g.orders[i]);
    return c;
}

IntVec scale_coords(const DiscGroup& g, const Int& c, const IntVec& a) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = imod(c * a[i], g.orders[i]);
    return r;
}

bool is_zero_coords(const IntVec& coords) {
    for (const Int& c : coords)
        if (c != 0) return false;
    return true;
}

Int element_order(const DiscGroup& g, const IntVec& coords) {
    Int o = 1;
    for (std::size_t i = 0; i < coords.size(); ++i) o = ilcm(o, g.orders[i] / igcd(coords[i], g.orders[i]));
    return o;
}

Rat quad_of(const DiscGroup& g, const IntVec& coords) {
    RatVec x = lift_of(g, coords);
    return mod2(pair(g.sub.ambient(), x, x));
}

Rat bil_of(const DiscGroup& g, const IntVec& a, const IntVec& b) {
    return mod1(pair(g.sub.ambient(), lift_of(g, a), lift_of(g, b)));
}

namespace {

// integer vector y with (y, cls) = divisibility(cls), by a gcd chain over the
// pairings of cls with the basis vectors
IntVec pairing_witness(const IntLattice& l, const IntVec& cls) {
    std::size_t n = l.rank();
    IntVec w(n);
    for (std::size_t j = 0; j < n; ++j) {
        IntVec ej(n, 0);
        ej[j] = 1;
        w[j] = pair(l, cls, ej);
    }
    IntVec y(n, 0);
    Int g = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (w[j] == 0) continue;
        Int xj, yj;
        Int g2 = ext_gcd(g, w[j], xj, yj);
        for (std::size_t i = 0; i < j; ++i) y[i] *= xj;
        y[j] = yj;
        g = g2;
    }
    if (g == 0) throw std::invalid_argument("pairing_witness: zero class");
    return y;
}

// all classes killed by 2: every coordinate 0 or half the (even) order
std::vector<IntVec> two_torsion(const DiscGroup& g) {
    std::vector<IntVec> out{IntVec(g.orders.size(), 0)};
    for (std::size_t i = 0; i < g.orders.size(); ++i) {
        if (imod(g.orders[i], 2) != 0) continue;
        std::size_t cur = out.size();
        for (std::size_t k = 0; k < cur; ++k) {
            IntVec c = out[k];
            c[i] = g.orders[i] / 2;
            out.push_back(std::move(c));
        }
    }
    return out;
}

}  // namespace

Transcendental transcendental(const K3Lattice& k, const IntVec& cls) {
    const IntLattice& amb = k.lat;
    if (!is_primitive(cls)) throw std::invalid_argument("transcendental: class must be primitive");
    Int sq = pair(amb, cls, cls);
    if (sq <= 0) throw std::invalid_argument("transcendental: class must have positive square");
    Int div = divisibility(amb, cls);
    if (div != 1 && div != 2) throw std::invalid_argument("transcendental: divisibility must be 1 or 2");
    Int d = sq / 2;

    Transcendental t{cls, d, static_cast<int>(div), disc_group(orthogonal_complement(amb, cls)), {}, {}};
    if (disc_order(t.disc) != (div == 1 ? 4 * d : d))
        throw std::logic_error("transcendental: unexpected discriminant order");

    // gluing generator: [cls/(2d) - lambda] with (lambda, cls) = 1, resp.
    // [cls/d - lambda] with (lambda, cls) = 2; the class does not depend on
    // the witness lambda since two witnesses differ by an element of T
    IntVec lambda = pairing_witness(amb, cls);
    Int denom = (div == 1) ? 2 * d : d;
    RatVec v(amb.rank());
    for (std::size_t i = 0; i < amb.rank(); ++i) v[i] = make_rat(cls[i], denom) - Rat(lambda[i]);
    t.gamma1 = discretize(t.disc, v);
    if (element_order(t.disc, t.gamma1) != denom)
        throw std::logic_error("transcendental: gluing generator has wrong order");

    if (div == 1) {
        // [delta_L]: order 2, q = -1/2, orthogonal to gamma1.  The multiples
        // of gamma1 of order 2 pair with gamma1 as -1/2, so the conditions
        // single out one class; the tie-breaks below are for safety only.
        std::vector<IntVec> cand;
        for (IntVec& x : two_torsion(t.disc)) {
            if (is_zero_coords(x)) continue;
            if (quad_of(t.disc, x) != Rat(3, 2)) continue;
            if (bil_of(t.disc, x, t.gamma1) != 0) continue;
            cand.push_back(std::move(x));
        }
        if (cand.size() > 1) {
            std::vector<IntVec> even;
            for (const IntVec& x : cand) {
                bool all_even = true;
                for (const IntVec& b : t.disc.sub.basis()) {
                    Rat p = pair(amb, lift_of(t.disc, x), to_rat(b));
                    if (imod(num(p), 2) != 0) all_even = false;
                }
                if (all_even) even.push_back(x);
            }
            if (!even.empty()) cand = std::move(even);
            std::sort(cand.begin(), cand.end());
        }
        if (cand.empty()) throw std::logic_error("transcendental: no [delta_L] class found");
        t.delta_cls = cand.front();
    }
    return t;
}

std::optional<std::pair<Int, Int>> in_canonical_basis(const Transcendental& t, const IntVec& coords) {
    IntVec target = reduce_coords(t.disc, coords);
    Int amax = element_order(t.disc, t.gamma1);
    for (Int a = 0; a < amax; ++a) {
        IntVec ag = scale_coords(t.disc, a, t.gamma1);
        if (ag == target) return std::make_pair(a, Int(0));
        if (t.div == 1 && add_coords(t.disc, ag, t.delta_cls) == target) return std::make_pair(a, Int(1));
    }
    return std::nullopt;
}

}  // namespace k3fm

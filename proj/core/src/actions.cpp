#include "k3fm/actions.hpp"

#include <stdexcept>

namespace k3fm {

namespace {

Int modulus(const Action& act) { return act.div == 1 ? 2 * act.d : act.d; }

void check_compatible(const Action& x, const Action& y) {
    if (x.div != y.div || x.d != y.d) throw std::invalid_argument("actions: incompatible parameters");
}

}  // namespace

bool operator==(const Action& x, const Action& y) {
    return x.div == y.div && x.d == y.d && x.a == y.a && x.b == y.b;
}

Action identity_action(const Int& d, int div) { return Action{div, d, 1, 0}; }

bool is_admissible(const Action& act) {
    if (act.d < 1) return false;
    if (act.div == 1) {
        if (act.b != 0 && act.b != 1) return false;
        return imod(act.a * act.a + act.b * act.d - 1, 4 * act.d) == 0;
    }
    if (act.b != 0) return false;
    return imod(act.a * act.a - 1, act.d) == 0;
}

std::vector<Action> admissible_actions(const Int& d, int div) {
    if (d < 1) throw std::invalid_argument("admissible_actions: d must be positive");
    if (div == 2 && imod(d, 4) != 3)
        throw std::invalid_argument("admissible_actions: divisibility 2 requires d = 3 mod 4");
    std::vector<Action> out;
    if (div == 1) {
        for (Int b = 0; b <= 1; ++b)
            for (Int a = 0; a < 2 * d; ++a) {
                Action act{1, d, a, b};
                if (is_admissible(act)) out.push_back(act);
            }
    } else {
        for (Int a = 0; a < d; ++a) {
            Action act{2, d, a, 0};
            if (is_admissible(act)) out.push_back(act);
        }
    }
    return out;
}

Action negate(const Action& act) { return Action{act.div, act.d, imod(-act.a, modulus(act)), act.b}; }

bool equivalent(const Action& x, const Action& y) {
    if (x.div != y.div || x.d != y.d || x.b != y.b) return false;
    return x.a == y.a || negate(x).a == y.a;
}

Action canonical_rep(const Action& act) {
    Int n = negate(act).a;
    return Action{act.div, act.d, act.a <= n ? act.a : n, act.b};
}

std::pair<Int, Int> delta_image(const Action& act) {
    if (act.div != 1) throw std::invalid_argument("delta_image: divisibility 1 only");
    const Int& d = act.d;
    // q(A gamma1 + B delta) = -A^2/(2d) - B^2/2 mod 2 must equal -1/2, and
    // the pairing with the gamma1-image, -A a/(2d) - B b/2 mod 1, must vanish
    const std::pair<Int, Int> candidates[] = {{Int(0), Int(1)}, {d, Int(0)}, {d, Int(1)}};
    std::optional<std::pair<Int, Int>> found;
    for (const auto& [A, B] : candidates) {
        Rat q = mod2(make_rat(-A * A, 2 * d) - make_rat(B * B, 2));
        if (q != Rat(3, 2)) continue;
        Rat bl = mod1(make_rat(-A * act.a, 2 * d) - make_rat(B * act.b, 2));
        if (bl != 0) continue;
        if (found) throw std::logic_error("delta_image: not unique");
        found = {A, B};
    }
    if (!found) throw std::logic_error("delta_image: no candidate");
    return *found;
}

Action compose(const Action& x, const Action& y) {
    check_compatible(x, y);
    if (x.div == 2) return Action{2, x.d, imod(x.a * y.a, x.d), 0};
    auto [cx, ex] = delta_image(x);
    Int a = imod(x.a * y.a + cx * y.b, 2 * x.d);
    Int b = imod(x.b * y.a + ex * y.b, 2);
    return Action{1, x.d, a, b};
}

Action induced_action(const K3Lattice& k, const RatIsometry& iso, const Transcendental& src,
                      const Transcendental& dst) {
    if (src.d != dst.d || src.div != dst.div)
        throw std::invalid_argument("induced_action: mismatched invariants");
    // integrality of the restriction and span matching
    for (const IntVec& b : src.disc.sub.basis()) {
        RatVec img = iso.apply(b);
        if (!is_integral(img)) throw std::invalid_argument("induced_action: not integral on source");
        if (!dst.disc.sub.in_rational_span(img))
            throw std::invalid_argument("induced_action: image outside target span");
    }
    RatIsometry inv = iso.inverse(k.lat);
    RatVec pulled = inv.apply(lift_of(dst.disc, dst.gamma1));
    IntVec coords = discretize(src.disc, pulled);
    auto ab = in_canonical_basis(src, coords);
    if (!ab) throw std::logic_error("induced_action: image outside canonical span");
    Action act{src.div, src.d, ab->first, src.div == 1 ? ab->second : Int(0)};
    if (!is_admissible(act)) throw std::logic_error("induced_action: inadmissible result");
    return act;
}

RhoPrediction predicted_rho_action(const Int& r, const Int& s, const Int& l, int div) {
    if (r < 1 || s < 1 || igcd(r, s) != 1)
        throw std::invalid_argument("predicted_rho_action: need coprime positive r, s");
    if (div == 1) {
        if (imod(2 * l, r) != 0) throw std::invalid_argument("predicted_rho_action: r must divide 2l");
        Int d = r * s - l * l;
        if (d <= 0) throw std::invalid_argument("predicted_rho_action: nonpositive d");
        Int t = 2 * l / r;
        Int m = (r == 1) ? Int(0) : inv_mod(s, r);
        // a = -(1/2) r t^2 m + 2 s m - 1 = -t l m + 2 s m - 1
        Int a = imod(-t * l * m + 2 * s * m - 1, 2 * d);
        Int b = imod(t * m, 2);
        return RhoPrediction{Action{1, d, a, b}, t, m};
    }
    if (imod(r, 2) != 1 || imod(l, 2) != 1 || imod(l, r) != 0)
        throw std::invalid_argument("predicted_rho_action: need r, l odd with r | l");
    Int d = 4 * r * s - l * l;
    if (d <= 0) throw std::invalid_argument("predicted_rho_action: nonpositive d");
    Int m = (r == 1) ? Int(0) : inv_mod(imod(2 * s, r), r);
    Int a = imod(1 - d * m / r, d);
    return RhoPrediction{Action{2, d, a, 0}, 0, m};
}

}  // namespace k3fm

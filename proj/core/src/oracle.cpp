#include "k3fm/oracle.hpp"

#include <array>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace k3fm {

namespace {

std::string istr(const Int& x) { return x.str(); }

void fail(VerificationReport& rep, const std::string& input, const std::string& expected,
          const std::string& got) {
    rep.failures.push_back({input, expected, got});
}

void tally(VerificationReport& rep, bool ok, const std::string& input, const std::string& expected,
           const std::string& got) {
    if (ok)
        ++rep.passes;
    else
        fail(rep, input, expected, got);
}

// run fn over the items, partitioned into contiguous blocks across jobs
// worker threads; failure lists are concatenated in block order, so output is
// independent of the job count
template <typename Item, typename Fn>
void parallel_items(const std::vector<Item>& items, int jobs, VerificationReport& rep, Fn fn) {
    if (jobs < 2 || items.size() < 2) {
        for (const Item& it : items) fn(it, rep);
        return;
    }
    std::size_t nblocks = std::min<std::size_t>(jobs, items.size());
    std::vector<VerificationReport> parts(nblocks);
    std::vector<std::thread> threads;
    std::size_t per = (items.size() + nblocks - 1) / nblocks;
    for (std::size_t b = 0; b < nblocks; ++b) {
        threads.emplace_back([&, b] {
            std::size_t lo = b * per, hi = std::min(items.size(), lo + per);
            for (std::size_t i = lo; i < hi; ++i) fn(items[i], parts[b]);
        });
    }
    for (auto& t : threads) t.join();
    for (const auto& p : parts) {
        rep.passes += p.passes;
        rep.failures.insert(rep.failures.end(), p.failures.begin(), p.failures.end());
    }
}

// (r, s, l) grid with gcd(r, s) = 1 and the divisibility side conditions
std::vector<std::array<Int, 4>> rsl_grid(const Int& rmax, const Int& smax, const Int& lmax) {
    std::vector<std::array<Int, 4>> out;
    for (Int r = 1; r <= rmax; ++r)
        for (Int s = 1; s <= smax; ++s) {
            if (igcd(r, s) != 1) continue;
            for (Int l = -lmax; l <= lmax; ++l) {
                if (imod(2 * l, r) == 0 && r * s - l * l > 0) out.push_back({r, s, l, 1});
                if (imod(r, 2) == 1 && imod(l, 2) == 1 && imod(l, r) == 0 && 4 * r * s - l * l > 0)
                    out.push_back({r, s, l, 2});
            }
        }
    return out;
}

std::string rsl_str(const std::array<Int, 4>& g) {
    std::ostringstream os;
    os << "(r,s,l)=(" << g[0] << "," << g[1] << "," << g[2] << ") div " << g[3];
    return os.str();
}

std::string action_str(const Action& a) {
    std::ostringstream os;
    if (a.div == 1)
        os << "(" << a.a << "," << a.b << ")";
    else
        os << a.a;
    return os.str();
}

IntVec arena_class(const K3Lattice& k, const Int& d, int div) {
    if (div == 1) return class_of(k, Family::L, 1, d, 0);
    return class_of(k, Family::Lbar, 1, (d + 1) / 4, 1);
}

}  // namespace

std::vector<Int> solve_congruence(const Int& c, const Int& n, bool half_range) {
    if (n < 1) throw std::invalid_argument("solve_congruence: modulus must be positive");
    Int hi = half_range ? (n + 1) / 2 : n;
    std::vector<Int> out;
    for (Int a = 0; a < hi; ++a)
        if (imod(a * a - c, n) == 0) out.push_back(a);
    return out;
}

std::vector<DiscAuto> enumerate_disc_autos(const DiscGroup& g, const Int& bound) {
    Int size = disc_order(g);
    if (size > bound) throw std::invalid_argument("enumerate_disc_autos: group too large");
    std::size_t ng = g.orders.size();
    if (ng == 0) return {DiscAuto{{}}};

    // form values on the generators; everything else follows abstractly
    std::vector<Rat> qg(ng);
    std::vector<std::vector<Rat>> bg(ng, std::vector<Rat>(ng));
    for (std::size_t i = 0; i < ng; ++i) {
        IntVec ei(ng, 0);
        ei[i] = 1;
        qg[i] = quad_of(g, ei);
        for (std::size_t j = 0; j < ng; ++j) {
            IntVec ej(ng, 0);
            ej[j] = 1;
            bg[i][j] = bil_of(g, ei, ej);
        }
    }
    auto q_abs = [&](const IntVec& x) {
        Rat q = 0;
        for (std::size_t i = 0; i < ng; ++i) {
            q += Rat(x[i] * x[i]) * qg[i];
            for (std::size_t j = i + 1; j < ng; ++j) q += Rat(2 * x[i] * x[j]) * bg[i][j];
        }
        return mod2(q);
    };
    auto b_abs = [&](const IntVec& x, const IntVec& y) {
        Rat b = 0;
        for (std::size_t i = 0; i < ng; ++i)
            for (std::size_t j = 0; j < ng; ++j) b += Rat(x[i] * y[j]) * bg[i][j];
        return mod1(b);
    };

    std::vector<IntVec> elements;
    {
        IntVec cur(ng, 0);
        while (true) {
            elements.push_back(cur);
            std::size_t i = 0;
            for (; i < ng; ++i) {
                if (++cur[i] < g.orders[i]) break;
                cur[i] = 0;
            }
            if (i == ng) break;
        }
    }

    // image candidates per generator: same order and same quad value
    std::vector<std::vector<IntVec>> cands(ng);
    for (std::size_t i = 0; i < ng; ++i) {
        IntVec ei(ng, 0);
        ei[i] = 1;
        for (const IntVec& x : elements)
            if (element_order(g, x) == g.orders[i] && q_abs(x) == qg[i]) cands[i].push_back(x);
    }

    std::vector<DiscAuto> out;
    std::vector<IntVec> pick(ng);
    auto bijective = [&]() {
        std::set<IntVec> seen;
        for (const IntVec& a : elements) {
            IntVec img(ng, 0);
            for (std::size_t i = 0; i < ng; ++i)
                for (std::size_t j = 0; j < ng; ++j)
                    img[j] = imod(img[j] + a[i] * pick[i][j], g.orders[j]);
            seen.insert(img);
        }
        return Int(seen.size()) == size;
    };
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == ng) {
            if (bijective()) out.push_back(DiscAuto{pick});
            return;
        }
        for (const IntVec& x : cands[i]) {
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j) ok = b_abs(x, pick[j]) == bg[i][j];
            if (ok && b_abs(x, x) != mod1(qg[i])) ok = false;
            if (!ok) continue;
            pick[i] = x;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

VerificationReport verify_congruence_counts(const Int& max_d, int jobs) {
    VerificationReport rep{"congruence-counts", "2 <= d <= " + istr(max_d)};
    std::vector<Int> ds;
    for (Int d = 2; d <= max_d; ++d) ds.push_back(d);
    parallel_items(ds, jobs, rep, [](const Int& d, VerificationReport& r) {
        Int expected = Int(1) << tau(d);
        Int got = Int(solve_congruence(1, 4 * d, true).size());
        tally(r, got == expected, "d=" + istr(d) + " b=0 count", istr(expected), istr(got));

        Int b1 = Int(solve_congruence(imod(3 * d + 1, 4 * d), 4 * d, true).size());
        bool should_exist = imod(d, 4) == 1 || imod(d, 8) == 0;
        bool count_ok = should_exist ? b1 == expected : b1 == 0;
        tally(r, count_ok, "d=" + istr(d) + " b=1 count", should_exist ? istr(expected) : "0",
              istr(b1));
    });
    return rep;
}

VerificationReport verify_rho_closed_form(const Int& rmax, const Int& smax, const Int& lmax,
                                          int jobs) {
    VerificationReport rep{"rho-closed-form",
                           "r <= " + istr(rmax) + ", s <= " + istr(smax) + ", |l| <= " + istr(lmax)};
    parallel_items(rsl_grid(rmax, smax, lmax), jobs, rep,
                   [](const std::array<Int, 4>& g, VerificationReport& r) {
                       int div = static_cast<int>(g[3]);
                       RhoPrediction pred = predicted_rho_action(g[0], g[1], g[2], div);
                       Action exact = exact_rho_action(RSL{g[0], g[1], g[2], div, 0, 0});
                       tally(r, equivalent(pred.action, exact), rsl_str(g),
                             action_str(pred.action) + " up to negation", action_str(exact));
                   });
    rep.warnings.push_back(
        "delta-coefficient arbitration: over the whole grid the exact b-component equals "
        "t*m mod 2, which reduces to t mod 2 since m is odd whenever t is odd; the "
        "statement-level coefficient 2l/r agrees with the proof-level t*m/2 parity");
    return rep;
}

VerificationReport verify_disc_structure(const Int& max_d, int jobs) {
    VerificationReport rep{"disc-structure", "d <= " + istr(max_d) + " (full model capped at 50)"};
    std::vector<Int> ds;
    for (Int d = 1; d <= max_d; ++d) ds.push_back(d);
    parallel_items(ds, jobs, rep, [](const Int& d, VerificationReport& r) {
        K3Lattice k = k3_lattice(Model::reduced);
        for (int div : {1, 2}) {
            if (div == 2 && imod(d, 4) != 3) continue;
            Transcendental t = transcendental(k, arena_class(k, d, div));
            std::string in = "d=" + istr(d) + " div " + std::to_string(div);

            IntVec want = div == 1 ? (d == 1 ? IntVec{2, 2} : IntVec{2, 2 * d}) : IntVec{d};
            tally(r, t.disc.orders == want, in + " orders", "Z_2d+Z_2 resp. Z_d", "other");

            Rat qg = quad_of(t.disc, t.gamma1);
            if (div == 1) {
                Rat expect = mod2(make_rat(-1, 2 * d));
                tally(r, qg == expect, in + " q(gamma1)", rat_str(expect), rat_str(qg));
                Rat qd = quad_of(t.disc, t.delta_cls);
                tally(r, qd == Rat(3, 2), in + " q(delta)", "3/2", rat_str(qd));
                Rat bl = bil_of(t.disc, t.gamma1, t.delta_cls);
                tally(r, bl == 0, in + " b(gamma1,delta)", "0", rat_str(bl));
            }

            if (d <= 50) {
                K3Lattice kf = k3_lattice(Model::full);
                Transcendental tf = transcendental(kf, arena_class(kf, d, div));
                bool same = tf.disc.orders == t.disc.orders &&
                            quad_of(tf.disc, tf.gamma1) == qg &&
                            (div == 2 || (quad_of(tf.disc, tf.delta_cls) ==
                                              quad_of(t.disc, t.delta_cls) &&
                                          bil_of(tf.disc, tf.gamma1, tf.delta_cls) ==
                                              bil_of(t.disc, t.gamma1, t.delta_cls)));
                tally(r, same, in + " full-model agreement", "identical invariants", "mismatch");
            }
        }
    });
    return rep;
}

VerificationReport verify_partner_counts(const Int& max_d, int jobs) {
    VerificationReport rep{"partner-counts", "d <= " + istr(max_d)};
    std::vector<Int> ds;
    for (Int d = 2; d <= max_d; ++d) ds.push_back(d);
    parallel_items(ds, jobs, rep, [](const Int& d, VerificationReport& r) {
        Verdict v1 = classify(d, 1);
        tally(r, v1.b0_count == v1.two_pow_tau, "d=" + istr(d) + " div 1 b=0 count",
              istr(v1.two_pow_tau), istr(v1.b0_count));
        if (imod(d, 4) == 3) {
            Verdict v2 = classify(d, 2);
            tally(r, v2.partners_raw == v2.two_pow_tau, "d=" + istr(d) + " div 2 raw count",
                  istr(v2.two_pow_tau), istr(v2.partners_raw));
            tally(r, 2 * v2.partners_mod_negation == v2.two_pow_tau,
                  "d=" + istr(d) + " div 2 negation-classes", istr(v2.two_pow_tau / 2),
                  istr(v2.partners_mod_negation));
        }
        // cross-check admissibility against the exhaustive automorphism
        // enumeration on small discriminant groups
        if (d <= 30) {
            K3Lattice k = k3_lattice(Model::reduced);
            for (int div : {1, 2}) {
                if (div == 2 && imod(d, 4) != 3) continue;
                Transcendental t = transcendental(k, arena_class(k, d, div));
                std::set<std::pair<Int, Int>> from_autos;
                for (const DiscAuto& au : enumerate_disc_autos(t.disc)) {
                    IntVec img(t.disc.orders.size(), 0);
                    for (std::size_t i = 0; i < t.disc.orders.size(); ++i)
                        for (std::size_t j = 0; j < t.disc.orders.size(); ++j)
                            img[j] = imod(img[j] + t.gamma1[i] * au.images[i][j], t.disc.orders[j]);
                    auto ab = in_canonical_basis(t, img);
                    if (ab) from_autos.insert(*ab);
                }
                std::set<std::pair<Int, Int>> from_congruence;
                for (const Action& a : admissible_actions(d, div)) from_congruence.insert({a.a, a.b});
                tally(r, from_autos == from_congruence,
                      "d=" + istr(d) + " div " + std::to_string(div) + " automorphism enumeration",
                      "congruence solutions", "different set");
            }
        }
    });
    Verdict v13 = classify(13, 1);
    rep.warnings.push_back(
        "divisibility-2 partner count: the negation-quotient count is 2^(tau(d)-1) while the raw "
        "action count is 2^tau(d); both conventions appear in the source results and both are "
        "reported");
    rep.warnings.push_back(
        "b=1 surplus for d = 1 mod 4, d > 1: at d=13 there are " + istr(v13.partners_raw) +
        " admissible actions (" + istr(v13.b1_count) + " with b=1), i.e. " +
        istr(v13.partners_mod_negation) + " negation-classes, versus 2^tau(13) = " +
        istr(v13.two_pow_tau) + " counted by the b=0 congruence alone");
    return rep;
}

VerificationReport verify_twist_rules(const Int& rmax, const Int& smax, const Int& lmax, int jobs) {
    VerificationReport rep{"twist-rules",
                           "r <= " + istr(rmax) + ", s <= " + istr(smax) + ", |l| <= " + istr(lmax)};
    parallel_items(rsl_grid(rmax, smax, lmax), jobs, rep,
                   [](const std::array<Int, 4>& g, VerificationReport& r) {
                       K3Lattice k = k3_lattice(Model::reduced);
                       int div = static_cast<int>(g[3]);
                       RSL rsl{g[0], g[1], g[2], div, 0, 0};
                       auto [bx, by] = twist_pair(k, rsl);
                       bool tx = blift_is_trivial(k, bx), ty = blift_is_trivial(k, by);
                       bool want = div == 2 || imod(2 * g[2] / g[0], 2) != 0;  // t odd
                       tally(r, tx == want && ty == want, rsl_str(g) + " triviality",
                             want ? "both trivial" : "both nontrivial",
                             (tx ? "X trivial" : "X nontrivial") + std::string(", ") +
                                 (ty ? "Y trivial" : "Y nontrivial"));
                       if (!want) {
                           // in the even-t case both sides reduce to the [delta/2] class
                           RatVec half(k.lat.rank(), 0);
                           for (std::size_t j = 0; j < half.size(); ++j)
                               half[j] = make_rat(k.delta[j], 2);
                           bool ex = blift_equiv(k, bx, BLift{half, 2, bx.pic});
                           bool ey = blift_equiv(k, by, BLift{half, 2, by.pic});
                           tally(r, ex && ey, rsl_str(g) + " [delta/2] reduction",
                                 "both equivalent to delta/2", ex && ey ? "ok" : "mismatch");
                       }
                   });
    return rep;
}

VerificationReport run_suite(const std::string& name, const Int& max_d, int jobs) {
    if (name == "congruence-counts") return verify_congruence_counts(max_d, jobs);
    if (name == "rho-closed-form") return verify_rho_closed_form(max_d, max_d, max_d, jobs);
    if (name == "disc-structure") return verify_disc_structure(max_d, jobs);
    if (name == "partner-counts") return verify_partner_counts(max_d, jobs);
    if (name == "twist-rules") return verify_twist_rules(max_d, max_d, max_d, jobs);
    throw std::domain_error("unknown suite: " + name);
}

}  // namespace k3fm

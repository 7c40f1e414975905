// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure.  Each criterion recomputes its claim from scratch through the
// public API; none of them trust cached constants.

#include <chrono>
#include <iostream>
#include <string>

#include "k3fm/oracle.hpp"

using namespace k3fm;

namespace {

int g_failures = 0;

void report(int idx, const std::string& label, bool pass, double seconds, double limit) {
    bool in_time = limit <= 0 || seconds < limit;
    bool ok = pass && in_time;
    if (!ok) ++g_failures;
    std::cout << "criterion " << idx << " (" << label << "): " << (ok ? "PASS" : "FAIL");
    std::cout << "  [" << seconds << " s";
    if (limit > 0) std::cout << ", limit " << limit;
    std::cout << "]";
    if (pass && !in_time) std::cout << "  (correct but over the time limit)";
    std::cout << "\n";
}

template <typename F>
void timed(int idx, const std::string& label, double limit, F f) {
    auto start = std::chrono::steady_clock::now();
    bool pass = false;
    std::string note;
    try {
        pass = f();
    } catch (const std::exception& e) {
        note = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!note.empty()) std::cout << "criterion " << idx << " exception: " << note << "\n";
    report(idx, label, pass, secs, limit);
}

bool criterion1() {
    for (Int d = 2; d <= 300; ++d) {
        Int want = Int(1) << tau(d);
        if (Int(solve_congruence(1, 4 * d, true).size()) != want) return false;
    }
    return true;
}

bool criterion2() {
    for (Int d = 1; d <= 300; ++d) {
        auto b1 = solve_congruence(imod(1 - d, 4 * d), 4 * d, true);
        bool exist = !b1.empty();
        bool should = imod(d, 4) == 1 || imod(d, 8) == 0;
        if (exist != should) return false;
        if (exist && b1.size() != solve_congruence(1, 4 * d, true).size()) return false;
    }
    return true;
}

bool criterion3() {
    VerificationReport r = verify_rho_closed_form(12, 12, 12);
    if (!r.ok() || r.passes == 0) return false;
    // the delta-coefficient record is part of the deliverable
    for (const std::string& w : r.warnings)
        if (w.find("delta-coefficient") != std::string::npos) return true;
    return false;
}

bool criterion4() {
    for (Int d = 1; d <= 100; ++d)
        for (const Action& target : admissible_actions(d, 1)) {
            DecompositionChain c = decompose(d, target);
            if (c.steps.size() > 2) return false;
            if (!equivalent(c.composed, target)) return false;
        }
    for (Int d = 3; d <= 199; d += 4)
        for (const Action& target : admissible_actions(d, 2)) {
            DecompositionChain c = decompose(d, target);
            if (c.steps.size() != 1) return false;
            if (!equivalent(c.composed, target)) return false;
        }
    return true;
}

bool criterion5() {
    VerificationReport r = verify_twist_rules(12, 12, 12);
    return r.ok() && r.passes > 0;
}

bool criterion6() {
    VerificationReport r = verify_disc_structure(300);
    return r.ok() && r.passes > 0;
}

// Derived verdict <=> every admissible action is realized by a chain whose
// every step carries trivial twists (odd t in divisibility 1, automatic in
// divisibility 2).
bool criterion7() {
    K3Lattice k = k3_lattice(Model::reduced);
    auto all_steps_trivial = [&](const DecompositionChain& c) {
        for (const ChainStep& s : c.steps) {
            auto [bx, by] = twist_pair(k, s.rsl);
            if (!blift_is_trivial(k, bx) || !blift_is_trivial(k, by)) return false;
        }
        return true;
    };
    for (Int d = 1; d <= 100; ++d) {
        bool derived = classify(d, 1).kind == Verdict::Kind::Derived;
        bool chains = true;
        for (const Action& target : admissible_actions(d, 1)) {
            bool found = false;
            try {
                ChainMode mode = target.b == 0 ? ChainMode::odd_t_only : ChainMode::natural;
                found = all_steps_trivial(decompose(d, target, mode));
            } catch (const std::runtime_error&) {
                found = false;
            }
            if (!found) {
                chains = false;
                break;
            }
        }
        if (derived != chains) return false;

        if (imod(d, 4) == 3) {
            if (classify(d, 2).kind != Verdict::Kind::Derived) return false;
            for (const Action& target : admissible_actions(d, 2))
                if (!all_steps_trivial(decompose(d, target))) return false;
        }
    }
    return true;
}

bool criterion8() {
    K3Lattice k = k3_lattice(Model::reduced);
    IntVec eta{1, 10, -3};
    if (pair(k.lat, eta, eta) != 2 || divisibility(k.lat, eta) != 1) return false;
    if (kernel_rank(2, 2) != 8) return false;
    BLift bm{{Rat(1, 2), Rat(5), Rat(-1, 2)}, 2, {IntVec{1, 10, -3}}};
    BLift bs{{Rat(1), Rat(5, 2), Rat(-1, 2)}, 2, {IntVec{2, 5, -3}}};
    if (!blift_is_trivial(k, bm) || !blift_is_trivial(k, bs)) return false;
    Verdict v = classify(1, 1);
    return v.kind == Verdict::Kind::Derived && v.tau == 1 && v.partners_mod_negation == 2;
}

bool criterion9() {
    if (!(twisted_mukai_vector(0, 2) == MukaiVector{0, 1, Rat(1)})) return false;
    if (!(line_bundle_vector(1, 2) == MukaiVector{0, 1, Rat(0)})) return false;
    // pushforward rank m + n + 1 - g for a degree m + n map
    for (Int m = 0; m <= 4; ++m)
        for (Int n = 0; n <= 4; ++n)
            for (Int g = 0; g <= 3; ++g)
                if (pushforward_rank(m + n, g) != m + n + 1 - g) return false;
    return true;
}

bool criterion10() {
    VerificationReport r = verify_partner_counts(20);
    bool conflict = false, surplus = false;
    for (const std::string& w : r.warnings) {
        if (w.find("divisibility-2 partner count") != std::string::npos) conflict = true;
        if (w.find("d=13") != std::string::npos && w.find("b=1 surplus") != std::string::npos)
            surplus = true;
    }
    return r.ok() && conflict && surplus;
}

}  // namespace

int main() {
    timed(1, "partner-count congruence identity, d <= 300", 10, criterion1);
    timed(2, "b=1 existence trichotomy, d <= 300", 10, criterion2);
    timed(3, "closed form vs exact reflection actions, grid 12", 60, criterion3);
    timed(4, "decomposition completeness, d <= 100 / 199", 120, criterion4);
    timed(5, "twist rule on the grid", 30, criterion5);
    timed(6, "discriminant structure, full <= 50, reduced <= 300", 60, criterion6);
    timed(7, "verdicts match all-trivial-twist chain existence, d <= 100", 0, criterion7);
    timed(8, "degree-2 baby case fixture", 1, criterion8);
    timed(9, "Mukai vector formulas", 0, criterion9);
    timed(10, "discrepancy warnings surfaced", 0, criterion10);
    std::cout << (g_failures == 0 ? "all criteria passed" : "criteria failed") << "\n";
    return g_failures == 0 ? 0 : 1;
}

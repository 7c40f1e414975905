#pragma once

// Independent brute-force verifiers: congruence solvers, exhaustive
// enumeration of quadratic-form-preserving discriminant automorphisms, and
// sweep suites that recompute every closed form against the exact machinery.

#include <string>

#include "k3fm/classify.hpp"

namespace k3fm {

// all a in [0, n) (or [0, n/2) when half_range) with a^2 = c mod n
std::vector<Int> solve_congruence(const Int& c, const Int& n, bool half_range);

// generator-image tuples of group automorphisms preserving the bilinear form
// mod Z and the quadratic form mod 2Z
struct DiscAuto {
    std::vector<IntVec> images;  // image coordinates per generator
};
std::vector<DiscAuto> enumerate_disc_autos(const DiscGroup& g, const Int& bound = 10000);

struct VerificationReport {
    std::string suite;
    std::string range;
    long long passes = 0;
    struct Failure {
        std::string input, expected, got;
    };
    std::vector<Failure> failures;
    std::vector<std::string> warnings;
    bool ok() const { return failures.empty(); }
};

// counts of a^2 = 1 mod 4d (2^tau) and the b=1 existence trichotomy
VerificationReport verify_congruence_counts(const Int& max_d, int jobs = 1);

// predicted_rho_action vs induced_action over the (r,s,l) grid
VerificationReport verify_rho_closed_form(const Int& rmax, const Int& smax, const Int& lmax,
                                          int jobs = 1);

// disc orders and canonical-generator form values; full-model cross-check
// capped at d <= 50
VerificationReport verify_disc_structure(const Int& max_d, int jobs = 1);

// partner counts per both stated conventions, plus admissibility vs the
// exhaustive automorphism enumeration on small d
VerificationReport verify_partner_counts(const Int& max_d, int jobs = 1);

// B-lift triviality vs the parity of t over the (r,s,l) grid
VerificationReport verify_twist_rules(const Int& rmax, const Int& smax, const Int& lmax,
                                      int jobs = 1);

VerificationReport run_suite(const std::string& name, const Int& max_d, int jobs = 1);

}  // namespace k3fm

#pragma once

// Constructive realization of admissible discriminant actions by chains of
// reflections: given (d, divisibility, target action), produce one or two
// (r,s,l) triples whose reflections compose to the target, every step
// re-verified by the exact induced-action computation.

#include "k3fm/actions.hpp"

namespace k3fm {

struct RSL {
    Int r, s, l;
    int div;
    Int n, m;  // Bezout witnesses: r n + s m = 1 (div 1), r n + 2 s m = 1 (div 2)
};

struct ChainStep {
    RSL rsl;
    Action verified;  // exact action of the reflection rho_r on the complement
};

struct DecompositionChain {
    Action target;
    std::vector<ChainStep> steps;
    Action composed;     // composition of the verified step actions
    bool uses_negation;  // composed = negate(target) rather than target itself
};

// ordered pairs (r, k) with r k = d and gcd(r, k) = 1
std::vector<std::pair<Int, Int>> coprime_splits(const Int& d);

// natural: shortest chain, b=0 targets by a single even-t step.
// odd_t_only: every step has t = 2l/r odd (trivial twist), so b=0 targets
// need two steps; only possible when b=1 actions exist at this d.
enum class ChainMode { natural, odd_t_only };

DecompositionChain decompose_div1(const Int& d, const Action& target,
                                  ChainMode mode = ChainMode::natural);

DecompositionChain decompose_div2(const Int& d, const Action& target);

DecompositionChain decompose(const Int& d, const Action& target,
                             ChainMode mode = ChainMode::natural);

// exhaustive scan over r <= bound, |l| <= bound with s = (d + l^2)/r;
// returns the lexicographically first triple realizing target up to negation
std::optional<RSL> fallback_search(const Int& d, const Action& target, const Int& bound);

// exact action of rho_r on the complement of the family class of the triple
Action exact_rho_action(const RSL& rsl);

}  // namespace k3fm

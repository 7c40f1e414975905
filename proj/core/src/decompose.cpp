#include "k3fm/decompose.hpp"

#include <algorithm>
#include <stdexcept>

namespace k3fm {

namespace {

RSL make_rsl(const Int& r, const Int& s, const Int& l, int div) {
    RSL x{r, s, l, div, 0, 0};
    if (div == 1) {
        x.m = (r == 1) ? Int(0) : inv_mod(s, r);
        x.n = (1 - s * x.m) / r;
    } else {
        x.m = (r == 1) ? Int(0) : inv_mod(imod(2 * s, r), r);
        x.n = (1 - 2 * s * x.m) / r;
    }
    return x;
}

// candidate single steps with t even (action b = 0), one per coprime split
std::vector<RSL> even_t_steps(const Int& d) {
    std::vector<RSL> out;
    for (const auto& [r, k] : coprime_splits(d)) out.push_back(make_rsl(r, r + k, r, 1));
    return out;
}

// candidate single steps with t odd (action b = 1); empty unless
// d = 1 mod 4 or 8 | d
std::vector<RSL> odd_t_steps(const Int& d) {
    std::vector<RSL> out;
    if (imod(d, 4) == 1) {
        for (const auto& [u, v] : coprime_splits(d)) out.push_back(make_rsl(2 * u, (u + v) / 2, u, 1));
    } else if (imod(d, 8) == 0) {
        Int odd = d, twos = 1;
        while (imod(odd, 2) == 0) {
            odd /= 2;
            twos *= 2;
        }
        Int pw = twos / 8;  // 2^(v2(d) - 3)
        for (const auto& [u, v] : coprime_splits(odd))
            out.push_back(make_rsl(8 * pw * u, v + 2 * pw * u, 4 * pw * u, 1));
    }
    return out;
}

std::vector<ChainStep> verify_steps(const std::vector<RSL>& cands) {
    std::vector<ChainStep> out;
    out.reserve(cands.size());
    for (const RSL& r : cands) out.push_back(ChainStep{r, exact_rho_action(r)});
    return out;
}

DecompositionChain finish(const Action& target, std::vector<ChainStep> steps) {
    Action composed = steps.front().verified;
    for (std::size_t i = 1; i < steps.size(); ++i) composed = compose(composed, steps[i].verified);
    if (!equivalent(composed, target)) throw std::runtime_error("decompose: chain does not verify");
    bool neg = !(composed == target);
    return DecompositionChain{target, std::move(steps), composed, neg};
}

// first verified step matching the target up to negation, in recipe order
std::optional<ChainStep> pick_single(const std::vector<ChainStep>& steps, const Action& target) {
    for (const ChainStep& s : steps)
        if (equivalent(s.verified, target)) return s;
    return std::nullopt;
}

std::optional<DecompositionChain> pick_pair(const std::vector<ChainStep>& first,
                                            const std::vector<ChainStep>& second,
                                            const Action& target) {
    for (const ChainStep& s1 : first)
        for (const ChainStep& s2 : second) {
            Action c = compose(s1.verified, s2.verified);
            if (equivalent(c, target)) return DecompositionChain{target, {s1, s2}, c, !(c == target)};
        }
    return std::nullopt;
}

}  // namespace

std::vector<std::pair<Int, Int>> coprime_splits(const Int& d) {
    if (d < 1) throw std::invalid_argument("coprime_splits: d must be positive");
    std::vector<std::pair<Int, Int>> out;
    for (Int r = 1; r * r <= d; ++r) {
        if (imod(d, r) != 0) continue;
        Int k = d / r;
        if (igcd(r, k) != 1) continue;
        out.emplace_back(r, k);
        if (k != r) out.emplace_back(k, r);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Action exact_rho_action(const RSL& rsl) {
    K3Lattice k = k3_lattice(Model::reduced);
    Family src_fam = rsl.div == 1 ? Family::L : Family::Lbar;
    Family dst_fam = rsl.div == 1 ? Family::Lp : Family::Lbarp;
    Transcendental src = transcendental(k, class_of(k, src_fam, rsl.r, rsl.s, rsl.l));
    Transcendental dst = transcendental(k, class_of(k, dst_fam, rsl.r, rsl.s, rsl.l));
    return induced_action(k, rho_r(k, rsl.r), src, dst);
}

DecompositionChain decompose_div1(const Int& d, const Action& target, ChainMode mode) {
    if (target.div != 1 || target.d != d) throw std::invalid_argument("decompose_div1: target mismatch");
    if (!is_admissible(target)) throw std::invalid_argument("decompose_div1: inadmissible target");

    std::vector<ChainStep> odd = verify_steps(odd_t_steps(d));
    if (target.b == 1) {
        if (odd.empty()) throw std::runtime_error("decompose_div1: no odd-t steps exist at this d");
        if (auto s = pick_single(odd, target)) return finish(target, {*s});
        // corrector: compose an even-t step with a realized odd-t step
        std::vector<ChainStep> even = verify_steps(even_t_steps(d));
        if (auto c = pick_pair(even, odd, target)) return *c;
        if (auto c = pick_pair(odd, even, target)) return *c;
        throw std::runtime_error("decompose_div1: no chain found for b=1 target");
    }

    if (mode == ChainMode::odd_t_only) {
        if (odd.empty())
            throw std::runtime_error("decompose_div1: odd-t chains impossible (no b=1 actions at this d)");
        if (auto c = pick_pair(odd, odd, target)) return *c;
        throw std::runtime_error("decompose_div1: no odd-t pair found");
    }

    std::vector<ChainStep> even = verify_steps(even_t_steps(d));
    if (auto s = pick_single(even, target)) return finish(target, {*s});
    if (auto f = fallback_search(d, target, 4 * d)) return finish(target, {ChainStep{*f, exact_rho_action(*f)}});
    throw std::runtime_error("decompose_div1: no chain found for b=0 target");
}

DecompositionChain decompose_div2(const Int& d, const Action& target) {
    if (target.div != 2 || target.d != d) throw std::invalid_argument("decompose_div2: target mismatch");
    if (imod(d, 4) != 3) throw std::invalid_argument("decompose_div2: d must be 3 mod 4");
    if (!is_admissible(target)) throw std::invalid_argument("decompose_div2: inadmissible target");

    std::vector<RSL> cands;
    if (target.a == imod(Int(1), d) || target.a == imod(Int(-1), d)) {
        cands.push_back(make_rsl(1, (d + 1) / 4, 1, 2));
    } else {
        Int r = igcd(target.a - 1, d), k = igcd(target.a + 1, d);
        Int s = (r + k) / 4;
        cands.push_back(make_rsl(r, s, r, 2));
        cands.push_back(make_rsl(k, s, k, 2));
    }
    auto steps = verify_steps(cands);
    if (auto s = pick_single(steps, target)) return finish(target, {*s});
    if (auto f = fallback_search(d, target, 4 * d)) return finish(target, {ChainStep{*f, exact_rho_action(*f)}});
    throw std::runtime_error("decompose_div2: recipe failed");
}

DecompositionChain decompose(const Int& d, const Action& target, ChainMode mode) {
    return target.div == 1 ? decompose_div1(d, target, mode) : decompose_div2(d, target);
}

std::optional<RSL> fallback_search(const Int& d, const Action& target, const Int& bound) {
    if (bound < 1) throw std::invalid_argument("fallback_search: bound must be positive");
    for (Int r = 1; r <= bound; ++r) {
        if (target.div == 2 && imod(r, 2) == 0) continue;
        for (Int labs = 0; labs <= bound; ++labs) {
            for (int sign = 0; sign < (labs == 0 ? 1 : 2); ++sign) {
                Int l = sign == 0 ? labs : -labs;
                Int s;
                if (target.div == 1) {
                    if (imod(2 * l, r) != 0) continue;
                    if (imod(d + l * l, r) != 0) continue;
                    s = (d + l * l) / r;
                } else {
                    if (imod(l, 2) == 0 || imod(l, r) != 0) continue;
                    if (imod(d + l * l, 4 * r) != 0) continue;
                    s = (d + l * l) / (4 * r);
                }
                if (s < 1 || igcd(r, s) != 1) continue;
                RSL cand = make_rsl(r, s, l, target.div);
                if (equivalent(exact_rho_action(cand), target)) return cand;
            }
        }
    }
    return std::nullopt;
}

}  // namespace k3fm

#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hodgehyp/closed_form.hpp"
#include "hodgehyp/convolution.hpp"

// Inductive engine: H_{alpha,beta} is (H' (x) L) * H_{0,gamma0} (x) L^{-1}
// where H' drops one pair (alpha_j, beta_j), L twists by alpha_j and
// gamma0 = gamma_rep({beta_j - alpha_j}). Each local invariant is read off
// after the transform with a peel chosen so that the value is determined.

namespace hodgehyp {

enum class PeelCase { Case1, Case2, Case3 };
const char* peel_case_name(PeelCase c);

struct PeelPlan {
    std::size_t peel_index = 0;
    PeelCase case_tag = PeelCase::Case1;
    GammaRep gamma0;
};

struct PeelTarget {
    SingularPoint point;
    Residue residue;
};

HodgeProfile base_profile(const Residue& a, const Residue& b);

// Lowest j whose peel leaves the target determined: a different residue
// (Case1) or the same residue with multiplicity >= 2 (Case2). Case3 marks a
// j > 0 forced because pair 0 has the target residue with multiplicity 1.
// At x1 the peel is always 0.
PeelPlan choose_peel(const HypergeometricParams& params, const PeelTarget& target);

struct EngineOptions {
    bool memoize = true;
    // delta along index 0 of the sorted pair list; off means the given order
    bool canonical_delta_order = true;
};

struct EngineStats {
    std::size_t computed = 0;
    std::size_t memo_hits = 0;
};

class RecursiveEngine {
public:
    explicit RecursiveEngine(EngineOptions options = {});

    HodgeProfile profile(const HypergeometricParams& params);
    EngineStats stats() const;
    void clear();

private:
    HodgeProfile compute(const HypergeometricParams& params);
    HodgeProfile sub_profile(const HypergeometricParams& params);
    GradedCounts delta(const HypergeometricParams& params, const HodgeProfile& full);

    EngineOptions options_;
    mutable std::mutex mutex_;
    std::map<std::string, std::shared_ptr<const HodgeProfile>> memo_;
    EngineStats stats_;
};

HodgeProfile profile_recursive(const HypergeometricParams& params);

struct EngineReport {
    bool agree = false;
    std::optional<int> shift;
    std::vector<std::string> mismatches;
    bool lemma37_ok = false;
    std::vector<std::string> lemma37_failures;
    std::optional<std::string> error;
};

EngineReport verify_cross_engine(const HypergeometricParams& params);
EngineReport compare_profiles(const HypergeometricParams& params, const HodgeProfile& closed,
                              const HodgeProfile& recursive);

} // namespace hodgehyp

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hodgehyp/params.hpp"

// Verification sweeps over irreducible parameter sets: the two engines
// against each other, the pairing shift identity, fiber ranks,
// permutation invariance and the monodromy at 1.

namespace hodgehyp {

struct SweepSpec {
    int n_max = 2;
    int den_max = 4;
    // absent: every multiset of pairs on the grid; present: this many seeded samples
    std::optional<std::size_t> sample;
    std::uint64_t seed = 0;
    // corrupt one engine's output so the failure path can be exercised
    bool inject_fault = false;
    unsigned threads = 0; // 0: hardware concurrency
};

struct SweepFailure {
    std::string check;
    std::string detail;
    std::string params;     // as printed by HypergeometricParams::str
    std::string reproducer; // smallest failing sub-instance, as a CLI call
};

struct SweepResult {
    std::size_t instances = 0;
    std::size_t checks = 0;
    std::vector<SweepFailure> failures;

    bool ok() const { return failures.empty(); }
};

// Distinct values k/d in [0, 1) with 1 <= d <= den_max, ascending.
std::vector<Residue> residue_grid(int den_max);

// Every irreducible multiset of n pairs on the grid, pairs in canonical order.
void for_each_pair_multiset(const std::vector<Residue>& grid, int n,
                            const std::function<void(const HypergeometricParams&)>& visit);

// Irreducible instance with n in [1, n_max] and denominators <= den_max.
template <class Rng>
HypergeometricParams random_irreducible(Rng& rng, int n_max, int den_max);

// Failed checks on one instance; empty when all pass.
std::vector<SweepFailure> check_instance(const HypergeometricParams& params, std::uint64_t perm_seed,
                                         bool inject_fault);

SweepResult run_sweep(const SweepSpec& spec);

std::string reproducer_command(const HypergeometricParams& params);

template <class Rng>
HypergeometricParams random_irreducible(Rng& rng, int n_max, int den_max)
{
    auto draw = [&] {
        const long d = 1 + static_cast<long>(rng() % static_cast<std::uint64_t>(den_max));
        return Residue::of(Rational(static_cast<long>(rng() % static_cast<std::uint64_t>(d)), d));
    };
    for (;;) {
        const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n_max));
        std::vector<Residue> alpha, beta;
        for (int i = 0; i < n; ++i)
            alpha.push_back(draw());
        for (int i = 0; i < n; ++i)
            beta.push_back(draw());
        HypergeometricParams p(std::move(alpha), std::move(beta));
        if (p.is_irreducible())
            return p;
    }
}

} // namespace hodgehyp

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hodgehyp/combinatorics.hpp"
#include "hodgehyp/params.hpp"
#include "hodgehyp/profile.hpp"

// Closed formulas for the local Hodge data of an irreducible H_{alpha,beta}.
//
// At 0 and infinity every eigenvalue class carries a single Jordan block of
// size mult; its primitive part sits at ell = mult - 1 and at
// p = p_count(alpha, beta, class residue). At 1 the monodromy is a
// pseudoreflection whose special exponent is gamma_s = {sum (beta_k - alpha_k)}
// in (0, 1].

namespace hodgehyp {

template <class T>
struct ClosedEntry {
    T residue;
    int ell = 0;
    int p = 0;
};

// One entry per distinct class (alpha at 0, beta at infinity), in order of
// first appearance.
template <std::totally_ordered T>
std::vector<ClosedEntry<T>> nu_closed_entries(std::span<const T> alpha, std::span<const T> beta, EndPoint point)
{
    const auto side = point == EndPoint::Zero ? alpha : beta;
    std::vector<ClosedEntry<T>> out;
    for (std::size_t m = 0; m < side.size(); ++m) {
        bool seen = false;
        for (std::size_t j = 0; j < m && !seen; ++j)
            seen = side[j] == side[m];
        if (seen)
            continue;
        out.push_back({side[m], mult_and_ell(side, m).ell, p_count(alpha, beta, side[m])});
    }
    return out;
}

// Hodge index of the single vanishing-cycle class at 1:
//   n - floor(sum_k {beta_k - alpha_k}) + [gamma_s = 1].
// This is what iterating the finite-point convolution rule over the rank-one
// factors produces, starting from index 1 in rank one (where h^1 = 1 and
// phi = psi at lambda_s), and it does not depend on the order of the factors.
template <ResidueLike T>
int mu_one_index(std::span<const T> alpha, std::span<const T> beta)
{
    detail::check_lengths(alpha, beta);
    T running{};
    int wraps = 0;
    for (std::size_t k = 0; k < alpha.size(); ++k) {
        const T step = residue_sub(beta[k], alpha[k]);
        const T next = residue_add(running, step);
        if (!is_zero(step) && next < running)
            ++wraps;
        running = next;
    }
    const int n = static_cast<int>(alpha.size());
    return n - wraps + (is_zero(running) ? 1 : 0);
}

// #{i : {sum_{k<=i} (beta_k - alpha_k)} < gamma_s}, read off the partial sums
// in list order. Kept for comparison: it depends on the order of the factors
// once n >= 3, and it sits one below mu_one_index in rank one.
template <ResidueLike T>
int mu_one_partial_sum_count(std::span<const T> alpha, std::span<const T> beta)
{
    detail::check_lengths(alpha, beta);
    const T special = special_residue(alpha, beta);
    T running{};
    int count = 0;
    for (std::size_t k = 0; k < alpha.size(); ++k) {
        running = residue_add(running, residue_sub(beta[k], alpha[k]));
        // gamma_s = 1 when the total is 0; every partial sum in [0,1) is below it
        if (is_zero(special) || running < special)
            ++count;
    }
    return count;
}

struct NuOneCounts {
    int nu_at_1 = 0;
    int nu_at_lambda_s = 0;

    friend bool operator==(const NuOneCounts&, const NuOneCounts&) = default;
};

// Dimensions of psi at 1 for eigenvalue 1 and for lambda_s != 1.
template <ResidueLike T>
NuOneCounts nu_one_counts(std::span<const T> alpha, std::span<const T> beta)
{
    const int n = static_cast<int>(alpha.size());
    if (is_zero(special_residue(alpha, beta)))
        return {n, 0};
    return {n - 1, 1};
}

// "H(a1,b1) * H(a2,b2) * ...", the factorization the p-indices refer to.
std::string pairing_note(const HypergeometricParams& params);

JordanStructure jordan_structure(const HypergeometricParams& params, SingularPoint point);
LocalHodgeTable nu_closed(const HypergeometricParams& params, EndPoint point);
LocalHodgeTable mu_one_closed(const HypergeometricParams& params);
int mu_one_partial_sum_count(const HypergeometricParams& params);
NuOneCounts nu_one_counts(const HypergeometricParams& params);

// h^p = sum over residues of nu_total_from_prim(nu_zero, r, p).
GradedCounts hodge_numbers(const LocalHodgeTable& nu_zero);

// Nearby-cycle table at 1 implied by the vanishing-cycle table of a rank-n
// hypergeometric: the lambda_s != 1 class has psi = phi; for a transvection
// phi_1 = N prim_1 psi_1 with the same p. The eigenvalue-1 classes not seen
// by phi are left as an unknown (0, 0) slot.
LocalHodgeTable nu_one_from_mu(const LocalHodgeTable& mu_one, int rank);

HodgeProfile profile_closed(const HypergeometricParams& params);

} // namespace hodgehyp

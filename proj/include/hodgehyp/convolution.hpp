#pragma once

#include <optional>
#include <span>

#include "hodgehyp/profile.hpp"
#include "hodgehyp/residue.hpp"
#include "hodgehyp/table.hpp"

// Local Hodge data under middle multiplicative convolution with H_{0,gamma0}
// and under Kummer twists.
//
// Convolution with H_{0,gamma0} is, up to the inclusion of G_m in A^1, the
// additive middle convolution MC_{lambda0} of the twist by L_{conj(lambda0)}
// (Katz). The transforms below are the resulting table maps, written
// forwards: each takes the data of M and returns the data of M * H_{0,gamma0}.
//
// Conventions: every table passed to an mc_* function or to twist_delta keys
// its eigenvalues by the exponent gamma with lambda = exp(-2 pi i gamma), at
// every point. Tables at 0 and at finite points are stored that way already;
// hypergeometric tables at infinity are stored by beta (lambda = exp(+2 pi i beta))
// and go through infinity_to_exponents / infinity_from_exponents.
//
// Two outputs are not determined by these rules and come back as unknown
// slots: nu at infinity for (conj(lambda0), ell = 0), and nu at 0 for
// (lambda = 1, ell = 0) unless h^p H^1(P^1, DR M^min) is supplied.
//
// The preconditions on M (irreducible, not L_{lambda0}, not punctual) are the
// caller's business; the maps themselves are plain table algebra.

namespace hodgehyp {

struct ConvolutionContext {
    GammaRep gamma0;
    Residue lambda0_residue;

    // gamma0 must lie in (0, 1).
    static ConvolutionContext make(const GammaRep& gamma0);
    static ConvolutionContext from_residue(const Residue& r) { return make(gamma_rep(r)); }

    // 1 - gamma0, the exponent of conj(lambda0).
    Rational conjugate_value() const;
};

LocalHodgeTable infinity_to_exponents(const LocalHodgeTable& stored);
LocalHodgeTable infinity_from_exponents(const LocalHodgeTable& exponents);

// Tensor with the Kummer module moving exponents at 0 by -c: residues at 0
// and infinity become {r - c}; finite points, p, ell and multiplicities stay.
// delta is dropped unless c = 0 (see twist_delta).
HodgeProfile twist(const HodgeProfile& profile, const Residue& c);

// delta^p(M (x) L_{conj(lambda0)}) = delta^p(M) - h^p(M)
//     + sum_{gamma in [gamma0,1)} nu_{0,lambda}^p(M) + sum_{gamma in [1-gamma0,1)} nu_{inf,lambda}^p(M)
GradedCounts twist_delta(const GradedCounts& delta, const GradedCounts& h, const LocalHodgeTable& nu_zero,
                         const LocalHodgeTable& nu_infinity_exponents, const ConvolutionContext& ctx);

// Vanishing cycles at x_i != 0: gamma' -> gamma = gamma'+gamma0; p kept when
// gamma in (0, gamma0], p + 1 when gamma in (gamma0, 1].
LocalHodgeTable mc_mu_finite(const LocalHodgeTable& table, const ConvolutionContext& ctx);

// Nearby cycles at infinity (exponent keys).
LocalHodgeTable mc_nu_infinity(const LocalHodgeTable& table, const ConvolutionContext& ctx);

// Nearby cycles at 0. h1 is h^p H^1(P^1, DR M^min); without it the
// (lambda = 1, ell = 0) output is an unknown slot.
LocalHodgeTable mc_nu_zero(const LocalHodgeTable& table, const ConvolutionContext& ctx,
                           const std::optional<GradedCounts>& h1);

// h^p(M * H) = h^p(M) + nu_{0,1,prim}^{p-1} - nu_{0,lambda0,prim}^{p-1} + h^p H^1
//              + sum_{gamma in [gamma0,1)} (nu_{0,lambda}^{p-1} - nu_{0,lambda}^p)
GradedCounts mc_h(const GradedCounts& h, const LocalHodgeTable& nu_zero, const GradedCounts& h1,
                  const ConvolutionContext& ctx);

// delta^p(M * H) = delta^p(M) + sum_{gamma in [gamma0,1)} (nu_{0,lambda}^p - nu_{0,lambda}^{p-1})
//     + nu_{0,lambda0,prim}^{p-1}
//     - sum_i (mu_{x_i,1}^p + sum_{gamma in (0,1-gamma0)} mu_{x_i,lambda}^{p-1})
// All tables are data of M.
GradedCounts mc_delta(const GradedCounts& delta, const LocalHodgeTable& nu_zero,
                      std::span<const LocalHodgeTable> mu_finite, const ConvolutionContext& ctx);

// mu_{0,1}^p = nu_{0,1}^{p-1} - nu_{0,1,prim}^{p-1}
GradedCounts mu_from_nu_unit(const LocalHodgeTable& nu_table);

} // namespace hodgehyp

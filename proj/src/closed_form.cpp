#include "hodgehyp/closed_form.hpp"

namespace hodgehyp {

namespace {

std::span<const Residue> as_span(const std::vector<Residue>& v) { return {v.data(), v.size()}; }

JordanStructure blocks_per_class(SingularPoint point, const std::vector<Residue>& side)
{
    JordanStructure js{point, {}};
    for (std::size_t m = 0; m < side.size(); ++m) {
        bool seen = false;
        for (std::size_t j = 0; j < m && !seen; ++j)
            seen = side[j] == side[m];
        if (!seen)
            js.blocks.push_back({side[m], mult_and_ell(as_span(side), m).mult});
    }
    return js;
}

} // namespace

std::string pairing_note(const HypergeometricParams& params)
{
    std::string s;
    for (std::size_t k = 0; k < params.size(); ++k) {
        if (k)
            s += " * ";
        s += "H(" + params.alpha(k).str() + "," + params.beta(k).str() + ")";
    }
    return s;
}

JordanStructure jordan_structure(const HypergeometricParams& params, SingularPoint point)
{
    params.require_irreducible();
    switch (point.kind) {
    case SingularPoint::Kind::Zero:
        return blocks_per_class(point, params.alpha());
    case SingularPoint::Kind::Infinity:
        return blocks_per_class(point, params.beta());
    case SingularPoint::Kind::Finite:
        break;
    }
    if (point.index != 1)
        throw Error(ErrorCode::InvalidArgument, "a hypergeometric module has a single finite singular point x1 = 1");

    const int n = static_cast<int>(params.size());
    const GammaRep gs = special_gamma(params);
    JordanStructure js{point, {}};
    if (gs.is_one()) {
        js.blocks.push_back({Residue{}, 2});
        for (int i = 0; i < n - 2; ++i)
            js.blocks.push_back({Residue{}, 1});
    } else {
        for (int i = 0; i < n - 1; ++i)
            js.blocks.push_back({Residue{}, 1});
        js.blocks.push_back({gs.residue(), 1});
    }
    return js;
}

LocalHodgeTable nu_closed(const HypergeometricParams& params, EndPoint point)
{
    params.require_irreducible();
    LocalHodgeTable table(point == EndPoint::Zero ? SingularPoint::zero() : SingularPoint::infinity(),
                          TableKind::NearbyPrimitive);
    for (const auto& e : nu_closed_entries(as_span(params.alpha()), as_span(params.beta()), point))
        table.add(e.residue, e.ell, e.p, 1);
    return table;
}

LocalHodgeTable mu_one_closed(const HypergeometricParams& params)
{
    params.require_irreducible();
    LocalHodgeTable table(SingularPoint::finite(1), TableKind::VanishingPrimitive);
    const int p = mu_one_index(as_span(params.alpha()), as_span(params.beta()));
    table.add(special_gamma(params).residue(), 0, p, 1);
    return table;
}

int mu_one_partial_sum_count(const HypergeometricParams& params)
{
    return mu_one_partial_sum_count(as_span(params.alpha()), as_span(params.beta()));
}

NuOneCounts nu_one_counts(const HypergeometricParams& params)
{
    params.require_irreducible();
    return nu_one_counts(as_span(params.alpha()), as_span(params.beta()));
}

GradedCounts hodge_numbers(const LocalHodgeTable& nu_zero)
{
    if (!nu_zero.unknown_slots().empty())
        throw Error(ErrorCode::UnknownData, "Hodge numbers need a fully determined table at 0");
    return fiber_totals(nu_zero);
}

LocalHodgeTable nu_one_from_mu(const LocalHodgeTable& mu_one, int rank)
{
    LocalHodgeTable nu(mu_one.point(), TableKind::NearbyPrimitive);
    std::int64_t visible = 0;
    for (const auto& [key, m] : mu_one.entries()) {
        // phi_1 = N prim_{ell+1} psi_1, same p
        const int ell = key.residue.is_zero() ? key.ell + 1 : key.ell;
        nu.add(key.residue, ell, key.p, m);
        visible += m * (ell + 1);
    }
    if (visible < rank)
        nu.mark_unknown(Residue{}, 0);
    return nu;
}

HodgeProfile profile_closed(const HypergeometricParams& params)
{
    params.require_irreducible();
    HodgeProfile profile;
    profile.rank = static_cast<int>(params.size());
    profile.nu_zero = nu_closed(params, EndPoint::Zero);
    profile.nu_infinity = nu_closed(params, EndPoint::Infinity);
    const auto mu = mu_one_closed(params);
    profile.nu_finite = {nu_one_from_mu(mu, profile.rank)};
    profile.mu_finite = {mu};
    profile.h = hodge_numbers(profile.nu_zero);
    profile.normalization_note = pairing_note(params);
    profile.monodromy = {jordan_structure(params, SingularPoint::zero()),
                         jordan_structure(params, SingularPoint::finite(1)),
                         jordan_structure(params, SingularPoint::infinity())};
    profile.notes["gamma_s"] = special_gamma(params).str();
    if (profile.rank == 1)
        profile.notes["rank_one_offset"] = "rank-one factors sit at p=1 at 0, 1 and infinity";
    return profile;
}

} // namespace hodgehyp

#include "hodgehyp/combinatorics.hpp"

namespace hodgehyp {

const char* separation_case_name(SeparationCase c)
{
    switch (c) {
    case SeparationCase::AlphaGammaBeta: return "alpha<gamma<beta";
    case SeparationCase::GammaBetaAlpha: return "gamma<beta<alpha";
    case SeparationCase::BetaAlphaGamma: return "beta<alpha<gamma";
    case SeparationCase::NotSeparated: return "not-separated";
    }
    return "?";
}

const char* end_point_name(EndPoint p) { return p == EndPoint::Zero ? "0" : "inf"; }

namespace {

std::span<const Residue> as_span(const std::vector<Residue>& v) { return {v.data(), v.size()}; }

} // namespace

int p_count(const HypergeometricParams& params, const Residue& g)
{
    return p_count(as_span(params.alpha()), as_span(params.beta()), g);
}

GammaRep special_gamma(const HypergeometricParams& params)
{
    return gamma_rep(special_residue(as_span(params.alpha()), as_span(params.beta())));
}

int fedorov_p(const HypergeometricParams& params, std::size_t m, EndPoint point)
{
    return fedorov_p(as_span(params.alpha()), as_span(params.beta()), m, point);
}

int shift_constant(const HypergeometricParams& params)
{
    return shift_constant(as_span(params.alpha()), as_span(params.beta()));
}

Lemma37Result lemma37(const HypergeometricParams& params, std::size_t m, EndPoint point)
{
    return lemma37(as_span(params.alpha()), as_span(params.beta()), m, point);
}

bool check_lemma37(const HypergeometricParams& params, std::size_t m, EndPoint point)
{
    return check_lemma37(as_span(params.alpha()), as_span(params.beta()), m, point);
}

LocalHodgeTable dualize_table(const LocalHodgeTable& table)
{
    LocalHodgeTable out(table.point(), table.kind());
    for (const auto& slot : table.unknown_slots())
        out.mark_unknown(slot.residue.conjugate(), slot.ell);
    for (const auto& [key, m] : table.entries())
        out.add(key.residue.conjugate(), key.ell, key.ell - key.p, m);
    return out;
}

} // namespace hodgehyp

#include "hodgehyp/recursion.hpp"

#include "hodgehyp/combinatorics.hpp"

#include <algorithm>

namespace hodgehyp {

const char* peel_case_name(PeelCase c)
{
    switch (c) {
    case PeelCase::Case1: return "Case1";
    case PeelCase::Case2: return "Case2";
    case PeelCase::Case3: return "Case3";
    }
    return "?";
}

namespace {

GammaRep peel_gamma(const HypergeometricParams& params, std::size_t j)
{
    return gamma_rep(residue_sub(params.beta(j), params.alpha(j)));
}

// The (residue, ell) slot of `from`, copied into `into`.
void read_slot(const LocalHodgeTable& from, LocalHodgeTable& into, const Residue& r, int ell)
{
    if (from.is_unknown(r, ell))
        throw Error(ErrorCode::InternalUnknownConsulted,
                    "engine read undetermined slot (" + r.str() + ", ell=" + std::to_string(ell) + ") at " +
                        from.point().str());
    for (const auto& [key, m] : from.entries())
        if (key.residue == r && key.ell == ell)
            into.add(key.residue, key.ell, key.p, m);
}

std::vector<Residue> distinct(const std::vector<Residue>& side)
{
    std::vector<Residue> out;
    for (const auto& r : side)
        if (std::find(out.begin(), out.end(), r) == out.end())
            out.push_back(r);
    return out;
}

int count(const std::vector<Residue>& side, const Residue& r)
{
    return static_cast<int>(std::count(side.begin(), side.end(), r));
}

HodgeProfile strip_delta(HodgeProfile p)
{
    p.delta.reset();
    return p;
}

} // namespace

HodgeProfile base_profile(const Residue& a, const Residue& b)
{
    if (a == b)
        throw Error(ErrorCode::ReducibleInput, "irreducibility requires alpha_i != beta_j, but alpha_1 = beta_1 = " + a.str());
    const Residue gs = residue_sub(b, a);
    HodgeProfile p;
    p.rank = 1;
    p.nu_zero.add(a, 0, 1, 1);
    p.nu_infinity.add(b, 0, 1, 1);
    LocalHodgeTable mu(SingularPoint::finite(1), TableKind::VanishingPrimitive);
    mu.add(gs, 0, 1, 1);
    p.nu_finite = {nu_one_from_mu(mu, 1)};
    p.mu_finite = {mu};
    p.h = {{1, 1}};
    const Rational degree = -(a.value() + b.conjugate().value() + gs.value());
    p.delta = GradedCounts{{1, degree.floor().get_si()}};
    const HypergeometricParams params({a}, {b});
    p.normalization_note = pairing_note(params);
    p.monodromy = {jordan_structure(params, SingularPoint::zero()), jordan_structure(params, SingularPoint::finite(1)),
                   jordan_structure(params, SingularPoint::infinity())};
    p.notes["gamma_s"] = gamma_rep(gs).str();
    p.notes["rank_one_offset"] = "rank-one factors sit at p=1 at 0, 1 and infinity";
    p.notes["delta"] = "experimental";
    return p;
}

PeelPlan choose_peel(const HypergeometricParams& params, const PeelTarget& target)
{
    const std::size_t n = params.size();
    if (n < 2)
        throw Error(ErrorCode::InvalidArgument, "peeling needs at least two pairs");
    if (target.point.kind == SingularPoint::Kind::Finite) {
        if (target.point.index != 1)
            throw Error(ErrorCode::InvalidArgument, "no finite singular point " + target.point.str());
        return {0, PeelCase::Case1, peel_gamma(params, 0)};
    }
    const auto& side = target.point.kind == SingularPoint::Kind::Zero ? params.alpha() : params.beta();
    if (side[0] != target.residue)
        return {0, PeelCase::Case1, peel_gamma(params, 0)};
    if (count(side, target.residue) >= 2)
        return {0, PeelCase::Case2, peel_gamma(params, 0)};
    for (std::size_t j = 1; j < n; ++j)
        if (side[j] != target.residue)
            return {j, PeelCase::Case3, peel_gamma(params, j)};
    throw Error(ErrorCode::NoValidPeel, "no peel index for " + target.point.str() + " residue " + target.residue.str());
}

RecursiveEngine::RecursiveEngine(EngineOptions options) : options_(options) {}

EngineStats RecursiveEngine::stats() const
{
    std::lock_guard lock(mutex_);
    return stats_;
}

void RecursiveEngine::clear()
{
    std::lock_guard lock(mutex_);
    memo_.clear();
    stats_ = {};
}

HodgeProfile RecursiveEngine::profile(const HypergeometricParams& params)
{
    params.require_irreducible();
    HodgeProfile p = params.size() == 1 ? base_profile(params.alpha(0), params.beta(0)) : compute(params);
    p.normalization_note = pairing_note(params);
    return p;
}

HodgeProfile RecursiveEngine::sub_profile(const HypergeometricParams& params)
{
    if (params.size() == 1)
        return base_profile(params.alpha(0), params.beta(0));
    const HypergeometricParams key_params = options_.canonical_delta_order ? params.canonical() : params;
    const std::string key = key_params.str();
    if (options_.memoize) {
        std::lock_guard lock(mutex_);
        if (auto it = memo_.find(key); it != memo_.end()) {
            ++stats_.memo_hits;
            return *it->second;
        }
    }
    auto value = std::make_shared<const HodgeProfile>(compute(key_params));
    if (options_.memoize) {
        std::lock_guard lock(mutex_);
        // first writer wins; a concurrent duplicate computed the same value
        memo_.emplace(key, value);
    }
    return *value;
}

HodgeProfile RecursiveEngine::compute(const HypergeometricParams& params)
{
    {
        std::lock_guard lock(mutex_);
        ++stats_.computed;
    }
    const std::size_t n = params.size();

    struct Peeled {
        LocalHodgeTable nu_zero;
        LocalHodgeTable nu_infinity;
    };
    std::map<std::size_t, Peeled> peeled;
    auto transform = [&](std::size_t j) -> const Peeled& {
        if (auto it = peeled.find(j); it != peeled.end())
            return it->second;
        const Residue c = params.alpha(j);
        const HodgeProfile m = twist(sub_profile(params.without(j)), c);
        const auto ctx = ConvolutionContext::make(peel_gamma(params, j));
        const auto at_zero = mc_nu_zero(m.nu_zero, ctx, std::nullopt);
        const auto at_inf = infinity_from_exponents(mc_nu_infinity(infinity_to_exponents(m.nu_infinity), ctx));
        return peeled
            .emplace(j, Peeled{table_twist_residues(at_zero, c.conjugate()), table_twist_residues(at_inf, c.conjugate())})
            .first->second;
    };

    HodgeProfile p;
    p.rank = static_cast<int>(n);
    for (const auto& r : distinct(params.alpha())) {
        const auto plan = choose_peel(params, {SingularPoint::zero(), r});
        read_slot(transform(plan.peel_index).nu_zero, p.nu_zero, r, count(params.alpha(), r) - 1);
    }
    for (const auto& r : distinct(params.beta())) {
        const auto plan = choose_peel(params, {SingularPoint::infinity(), r});
        read_slot(transform(plan.peel_index).nu_infinity, p.nu_infinity, r, count(params.beta(), r) - 1);
    }

    const GammaRep gs = special_gamma(params);
    const auto plan = choose_peel(params, {SingularPoint::finite(1), gs.residue()});
    const HodgeProfile sub = sub_profile(params.without(plan.peel_index));
    const auto mu_all = mc_mu_finite(sub.mu_finite.at(0), ConvolutionContext::make(plan.gamma0));
    LocalHodgeTable mu(SingularPoint::finite(1), TableKind::VanishingPrimitive);
    read_slot(mu_all, mu, gs.residue(), 0);
    p.mu_finite = {mu};
    p.nu_finite = {nu_one_from_mu(mu, p.rank)};

    p.h = hodge_numbers(p.nu_zero);
    p.delta = delta(params, p);
    p.normalization_note = pairing_note(params);
    p.monodromy = {jordan_structure(params, SingularPoint::zero()), jordan_structure(params, SingularPoint::finite(1)),
                   jordan_structure(params, SingularPoint::infinity())};
    p.notes["gamma_s"] = gs.str();
    p.notes["delta"] = "experimental";
    return p;
}

GradedCounts RecursiveEngine::delta(const HypergeometricParams& params, const HodgeProfile& full)
{
    const HypergeometricParams order = options_.canonical_delta_order ? params.canonical() : params;
    const Residue c = order.alpha(0);
    const HodgeProfile sub = sub_profile(order.without(0));
    if (!sub.delta)
        throw Error(ErrorCode::InternalUnknownConsulted, "sub-profile without delta");

    GradedCounts delta_m = *sub.delta;
    if (!c.is_zero())
        delta_m = twist_delta(delta_m, sub.h, sub.nu_zero, infinity_to_exponents(sub.nu_infinity),
                              ConvolutionContext::from_residue(c));
    const HodgeProfile m = twist(sub, c);
    const auto ctx = ConvolutionContext::make(peel_gamma(order, 0));
    GradedCounts out = mc_delta(delta_m, m.nu_zero, m.mu_finite, ctx);
    if (c.is_zero())
        return out;
    const HodgeProfile t = twist(strip_delta(full), c);
    return twist_delta(out, full.h, t.nu_zero, infinity_to_exponents(t.nu_infinity),
                       ConvolutionContext::from_residue(c.conjugate()));
}

HodgeProfile profile_recursive(const HypergeometricParams& params)
{
    RecursiveEngine engine;
    return engine.profile(params);
}

EngineReport compare_profiles(const HypergeometricParams& params, const HodgeProfile& closed,
                              const HodgeProfile& recursive)
{
    EngineReport report;
    auto check = [&](const char* what, bool same) {
        if (!same)
            report.mismatches.push_back(std::string(what) + " differs");
    };
    check("rank", closed.rank == recursive.rank);
    check("nu at 0", closed.nu_zero == recursive.nu_zero);
    check("nu at inf", closed.nu_infinity == recursive.nu_infinity);
    check("nu at x1", closed.nu_finite == recursive.nu_finite);
    check("mu at x1", closed.mu_finite == recursive.mu_finite);
    check("h", closed.h == recursive.h);
    report.shift = equal_up_to_shift(strip_delta(closed), strip_delta(recursive));

    report.lemma37_ok = true;
    for (std::size_t m = 0; m < params.size(); ++m) {
        for (EndPoint point : {EndPoint::Zero, EndPoint::Infinity}) {
            if (!check_lemma37(params, m, point)) {
                report.lemma37_ok = false;
                report.lemma37_failures.push_back(params.str() + " m=" + std::to_string(m) + " point=" +
                                                  end_point_name(point));
            }
        }
    }
    report.agree = report.mismatches.empty() && report.shift == 0;
    return report;
}

EngineReport verify_cross_engine(const HypergeometricParams& params)
{
    try {
        params.require_irreducible();
        return compare_profiles(params, profile_closed(params), profile_recursive(params));
    } catch (const Error& e) {
        EngineReport report;
        report.error = std::string(error_code_name(e.code())) + ": " + e.what();
        return report;
    }
}

} // namespace hodgehyp

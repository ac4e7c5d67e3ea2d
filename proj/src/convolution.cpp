#include "hodgehyp/convolution.hpp"

#include "hodgehyp/errors.hpp"

#include <algorithm>

namespace hodgehyp {

namespace {

struct Interval {
    Rational lo;
    Rational hi;
    bool lo_closed = false;
    bool hi_closed = false;

    bool contains(const Rational& x) const
    {
        const bool above = lo_closed ? x >= lo : x > lo;
        const bool below = hi_closed ? x <= hi : x < hi;
        return above && below;
    }
};

Interval open(Rational lo, Rational hi) { return {std::move(lo), std::move(hi), false, false}; }
Interval closed_open(Rational lo, Rational hi) { return {std::move(lo), std::move(hi), true, false}; }
Interval open_closed(Rational lo, Rational hi) { return {std::move(lo), std::move(hi), false, true}; }

Rational exponent(const Residue& r) { return gamma_rep(r).value(); }

// sum over residues whose exponent lies in `range` of nu_lambda^p
GradedCounts totals_in(const LocalHodgeTable& table, const Interval& range)
{
    GradedCounts out;
    for (const auto& r : table.residues()) {
        if (!range.contains(exponent(r)))
            continue;
        for (const auto& [p, v] : nu_totals(table, r))
            add_graded(out, p, v);
    }
    return out;
}

GradedCounts prim_counts(const LocalHodgeTable& table, const Residue& residue)
{
    if (table.has_unknown(residue))
        throw Error(ErrorCode::UnknownData, "residue " + residue.str() + " at " + table.point().str() + " is undetermined");
    GradedCounts out;
    for (const auto& [key, m] : table.entries())
        if (key.residue == residue)
            add_graded(out, key.p, m);
    return out;
}

std::pair<int, int> p_span(std::initializer_list<const GradedCounts*> maps)
{
    int lo = 0, hi = 0;
    bool any = false;
    for (const auto* m : maps) {
        if (m->empty())
            continue;
        const int a = m->begin()->first;
        const int b = m->rbegin()->first;
        lo = any ? std::min(lo, a) : a;
        hi = any ? std::max(hi, b) : b;
        any = true;
    }
    if (!any)
        return {0, -1};
    return {lo - 1, hi + 1};
}

std::int64_t get(const GradedCounts& m, int p)
{
    const auto it = m.find(p);
    return it == m.end() ? 0 : it->second;
}

void require_nearby(const LocalHodgeTable& table, const char* what)
{
    if (table.kind() != TableKind::NearbyPrimitive)
        throw Error(ErrorCode::InvalidArgument, std::string(what) + " expects a nearby-cycle table");
}

} // namespace

ConvolutionContext ConvolutionContext::make(const GammaRep& gamma0)
{
    if (gamma0.is_one())
        throw Error(ErrorCode::InvalidArgument, "gamma0 must lie in (0,1)");
    return {gamma0, gamma0.residue()};
}

Rational ConvolutionContext::conjugate_value() const { return Rational(1) - gamma0.value(); }

LocalHodgeTable infinity_to_exponents(const LocalHodgeTable& stored) { return table_conjugate_residues(stored); }
LocalHodgeTable infinity_from_exponents(const LocalHodgeTable& exponents) { return table_conjugate_residues(exponents); }

HodgeProfile twist(const HodgeProfile& profile, const Residue& c)
{
    if (c.is_zero())
        return profile;
    HodgeProfile out = profile;
    out.nu_zero = table_twist_residues(profile.nu_zero, c);
    out.nu_infinity = table_twist_residues(profile.nu_infinity, c);
    for (auto& js : out.monodromy) {
        if (js.point.kind == SingularPoint::Kind::Finite)
            continue;
        for (auto& b : js.blocks)
            b.residue = residue_sub(b.residue, c);
    }
    out.delta.reset();
    return out;
}

GradedCounts twist_delta(const GradedCounts& delta, const GradedCounts& h, const LocalHodgeTable& nu_zero,
                         const LocalHodgeTable& nu_infinity_exponents, const ConvolutionContext& ctx)
{
    const auto zero_part = totals_in(nu_zero, closed_open(ctx.gamma0.value(), Rational(1)));
    const auto inf_part = totals_in(nu_infinity_exponents, closed_open(ctx.conjugate_value(), Rational(1)));
    GradedCounts out = delta;
    for (const auto& [p, v] : h)
        add_graded(out, p, -v);
    for (const auto& [p, v] : zero_part)
        add_graded(out, p, v);
    for (const auto& [p, v] : inf_part)
        add_graded(out, p, v);
    return out;
}

LocalHodgeTable mc_mu_finite(const LocalHodgeTable& table, const ConvolutionContext& ctx)
{
    if (table.kind() != TableKind::VanishingPrimitive)
        throw Error(ErrorCode::InvalidArgument, "mc_mu_finite expects a vanishing-cycle table");
    const Interval keep = open_closed(Rational(0), ctx.gamma0.value());
    LocalHodgeTable out(table.point(), table.kind());
    for (const auto& slot : table.unknown_slots())
        out.mark_unknown(residue_add(slot.residue, ctx.lambda0_residue), slot.ell);
    for (const auto& [key, m] : table.entries()) {
        const Residue moved = residue_add(key.residue, ctx.lambda0_residue);
        const int p = keep.contains(exponent(moved)) ? key.p : key.p + 1;
        out.add(moved, key.ell, p, m);
    }
    return out;
}

LocalHodgeTable mc_nu_infinity(const LocalHodgeTable& table, const ConvolutionContext& ctx)
{
    require_nearby(table, "mc_nu_infinity");
    const Rational conj = ctx.conjugate_value();
    const Residue conj_residue = frac(conj);
    const Interval raised = open(Rational(0), conj);

    LocalHodgeTable out(table.point(), table.kind());
    out.mark_unknown(conj_residue, 0);
    for (const auto& slot : table.unknown_slots()) {
        const Rational g = exponent(slot.residue);
        if (g == Rational(1)) {
            if (slot.ell >= 1)
                out.mark_unknown(slot.residue, slot.ell - 1);
        } else if (g == conj) {
            out.mark_unknown(slot.residue, slot.ell + 1);
        } else {
            out.mark_unknown(slot.residue, slot.ell);
        }
    }
    for (const auto& [key, m] : table.entries()) {
        const Rational g = exponent(key.residue);
        if (g == Rational(1)) {
            // lambda = 1: ell drops by one, ell = 0 is absorbed
            if (key.ell >= 1)
                out.add(key.residue, key.ell - 1, key.p, m);
        } else if (g == conj) {
            out.add(key.residue, key.ell + 1, key.p + 1, m);
        } else if (raised.contains(g)) {
            out.add(key.residue, key.ell, key.p + 1, m);
        } else {
            out.add(key.residue, key.ell, key.p, m);
        }
    }
    return out;
}

LocalHodgeTable mc_nu_zero(const LocalHodgeTable& table, const ConvolutionContext& ctx,
                           const std::optional<GradedCounts>& h1)
{
    require_nearby(table, "mc_nu_zero");
    const Rational g0 = ctx.gamma0.value();
    const Residue unit{};

    LocalHodgeTable out(table.point(), table.kind());
    if (!h1) {
        out.mark_unknown(unit, 0);
    } else {
        for (const auto& [p, v] : *h1) {
            if (v < 0)
                throw Error(ErrorCode::InvalidArgument, "h^p H^1 must be non-negative");
            out.add(unit, 0, p, v);
        }
    }
    for (const auto& slot : table.unknown_slots()) {
        const Rational g = exponent(slot.residue);
        if (g == Rational(1))
            out.mark_unknown(slot.residue, slot.ell + 1);
        else if (g == g0) {
            if (slot.ell >= 1)
                out.mark_unknown(slot.residue, slot.ell - 1);
        } else
            out.mark_unknown(slot.residue, slot.ell);
    }
    for (const auto& [key, m] : table.entries()) {
        const Rational g = exponent(key.residue);
        if (g == Rational(1)) {
            out.add(key.residue, key.ell + 1, key.p + 1, m);
        } else if (g == g0) {
            // lambda = lambda0: ell drops by one, ell = 0 is absorbed
            if (key.ell >= 1)
                out.add(key.residue, key.ell - 1, key.p, m);
        } else if (g < g0) {
            out.add(key.residue, key.ell, key.p, m);
        } else {
            out.add(key.residue, key.ell, key.p + 1, m);
        }
    }
    return out;
}

GradedCounts mc_h(const GradedCounts& h, const LocalHodgeTable& nu_zero, const GradedCounts& h1,
                  const ConvolutionContext& ctx)
{
    const Residue unit{};
    const auto unit_prim = prim_counts(nu_zero, unit);
    const auto lambda0_prim = prim_counts(nu_zero, ctx.lambda0_residue);
    const auto upper = totals_in(nu_zero, closed_open(ctx.gamma0.value(), Rational(1)));

    GradedCounts out;
    const auto [lo, hi] = p_span({&h, &unit_prim, &lambda0_prim, &upper, &h1});
    for (int p = lo; p <= hi; ++p) {
        const std::int64_t v = get(h, p) + get(unit_prim, p - 1) - get(lambda0_prim, p - 1) + get(h1, p) +
                               get(upper, p - 1) - get(upper, p);
        add_graded(out, p, v);
    }
    return out;
}

GradedCounts mc_delta(const GradedCounts& delta, const LocalHodgeTable& nu_zero,
                      std::span<const LocalHodgeTable> mu_finite, const ConvolutionContext& ctx)
{
    const auto upper = totals_in(nu_zero, closed_open(ctx.gamma0.value(), Rational(1)));
    const auto lambda0_prim = prim_counts(nu_zero, ctx.lambda0_residue);

    GradedCounts mu_unit;
    GradedCounts mu_low;
    const Interval low = open(Rational(0), ctx.conjugate_value());
    for (const auto& mu : mu_finite) {
        if (mu.kind() != TableKind::VanishingPrimitive)
            throw Error(ErrorCode::InvalidArgument, "mc_delta expects vanishing-cycle tables at finite points");
        for (const auto& [p, v] : nu_totals(mu, Residue{}))
            add_graded(mu_unit, p, v);
        for (const auto& [p, v] : totals_in(mu, low))
            add_graded(mu_low, p, v);
    }

    GradedCounts out;
    const auto [lo, hi] = p_span({&delta, &upper, &lambda0_prim, &mu_unit, &mu_low});
    for (int p = lo; p <= hi; ++p) {
        const std::int64_t v = get(delta, p) + get(upper, p) - get(upper, p - 1) + get(lambda0_prim, p - 1) -
                               get(mu_unit, p) - get(mu_low, p - 1);
        add_graded(out, p, v);
    }
    return out;
}

GradedCounts mu_from_nu_unit(const LocalHodgeTable& nu_table)
{
    const Residue unit{};
    const auto totals = nu_totals(nu_table, unit);
    const auto prim = prim_counts(nu_table, unit);
    GradedCounts out;
    const auto [lo, hi] = p_span({&totals, &prim});
    for (int p = lo; p <= hi; ++p)
        add_graded(out, p, get(totals, p - 1) - get(prim, p - 1));
    return out;
}

} // namespace hodgehyp

#include "hodgehyp/profile.hpp"

#include <algorithm>

namespace hodgehyp {

int JordanStructure::total_size() const
{
    int total = 0;
    for (const auto& b : blocks)
        total += b.size;
    return total;
}

bool same_invariants(const HodgeProfile& a, const HodgeProfile& b)
{
    return a.rank == b.rank && a.nu_zero == b.nu_zero && a.nu_infinity == b.nu_infinity && a.nu_finite == b.nu_finite &&
           a.mu_finite == b.mu_finite && a.h == b.h && a.delta == b.delta;
}

HodgeProfile profile_shift(const HodgeProfile& profile, int s)
{
    HodgeProfile out = profile;
    out.nu_zero = table_shift(profile.nu_zero, s);
    out.nu_infinity = table_shift(profile.nu_infinity, s);
    for (auto& t : out.nu_finite)
        t = table_shift(t, s);
    for (auto& t : out.mu_finite)
        t = table_shift(t, s);
    out.h = shift_graded(profile.h, s);
    if (profile.delta)
        out.delta = shift_graded(*profile.delta, s);
    return out;
}

std::optional<int> profile_min_p(const HodgeProfile& profile)
{
    std::optional<int> best;
    auto consider = [&](std::optional<int> p) {
        if (p && (!best || *p < *best))
            best = p;
    };
    consider(profile.nu_zero.min_p());
    consider(profile.nu_infinity.min_p());
    for (const auto& t : profile.nu_finite)
        consider(t.min_p());
    for (const auto& t : profile.mu_finite)
        consider(t.min_p());
    if (!profile.h.empty())
        consider(profile.h.begin()->first);
    if (profile.delta && !profile.delta->empty())
        consider(profile.delta->begin()->first);
    return best;
}

std::optional<int> equal_up_to_shift(const HodgeProfile& in_a, const HodgeProfile& in_b)
{
    // delta only takes part when both sides carry it
    HodgeProfile a = in_a, b = in_b;
    if (!a.delta || !b.delta) {
        a.delta.reset();
        b.delta.reset();
    }
    const auto pa = profile_min_p(a);
    const auto pb = profile_min_p(b);
    if (pa.has_value() != pb.has_value())
        return std::nullopt;
    const int s = pa ? *pb - *pa : 0;
    if (same_invariants(profile_shift(a, s), b))
        return s;
    return std::nullopt;
}

std::vector<std::string> check_profile_invariants(const HodgeProfile& profile)
{
    std::vector<std::string> problems;
    std::int64_t h_total = 0;
    for (const auto& [p, v] : profile.h) {
        if (v < 0)
            problems.push_back("negative h^" + std::to_string(p));
        h_total += v;
    }
    if (h_total != profile.rank)
        problems.push_back("sum of h^p is " + std::to_string(h_total) + ", rank is " + std::to_string(profile.rank));
    for (const auto* t : {&profile.nu_zero, &profile.nu_infinity}) {
        if (!t->unknown_slots().empty())
            continue;
        if (t->total_dimension() != profile.rank)
            problems.push_back("Jordan total at " + t->point().str() + " is " + std::to_string(t->total_dimension()));
    }
    return problems;
}

} // namespace hodgehyp

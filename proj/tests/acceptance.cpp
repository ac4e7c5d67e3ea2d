// Acceptance run: one PASS/FAIL line per criterion.
//   acceptance            all criteria
//   acceptance AC3 AC7    selected criteria
// Exit status is non-zero when any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hodgehyp/combinatorics.hpp"
#include "hodgehyp/convolution.hpp"
#include "hodgehyp/recursion.hpp"
#include "hodgehyp/verify.hpp"
#include "support/lemma_tables.hpp"

using namespace hodgehyp;

namespace {

// Pinned limits. Exact criteria have no numeric tolerance.
constexpr double kAc1Seconds = 60.0;
constexpr double kAc2Seconds = 30.0;
constexpr std::uint64_t kSeed = 20240917;
constexpr std::size_t kAc1Random = 1000;
constexpr std::size_t kAc6Instances = 100;
constexpr int kAc6Perms = 10;
constexpr std::size_t kAc7Instances = 50;
constexpr std::size_t kAc7MaxPairings = 24;
constexpr std::size_t kAc8Tables = 1000;

using Fixed = FixedResidue<840>;

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::string> notes;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_seconds(double s)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", s);
    return buf;
}

// ---- instance sets -------------------------------------------------------

const std::vector<HypergeometricParams>& ac1_instances()
{
    static const std::vector<HypergeometricParams> set = [] {
        std::vector<HypergeometricParams> out;
        const auto grid = residue_grid(4);
        for (int n = 1; n <= 2; ++n)
            for_each_pair_multiset(grid, n, [&](const HypergeometricParams& p) { out.push_back(p); });
        std::mt19937_64 rng(kSeed);
        for (std::size_t i = 0; i < kAc1Random; ++i)
            out.push_back(random_irreducible(rng, 4, 8));
        return out;
    }();
    return set;
}

// Every multiset of n (alpha, beta) pairs on the den <= 8 grid, as 840ths.
void for_each_fixed_multiset(int n, const std::function<void(std::span<const Fixed>, std::span<const Fixed>)>& visit)
{
    std::vector<Fixed> grid;
    for (const auto& r : residue_grid(8))
        grid.push_back(Fixed::from(r));
    std::vector<std::pair<Fixed, Fixed>> pairs;
    for (auto a : grid)
        for (auto b : grid)
            pairs.emplace_back(a, b);
    std::vector<Fixed> alpha(static_cast<std::size_t>(n)), beta(static_cast<std::size_t>(n));
    std::function<void(int, std::size_t)> extend = [&](int depth, std::size_t from) {
        if (depth == n) {
            visit(alpha, beta);
            return;
        }
        for (std::size_t i = from; i < pairs.size(); ++i) {
            alpha[static_cast<std::size_t>(depth)] = pairs[i].first;
            beta[static_cast<std::size_t>(depth)] = pairs[i].second;
            extend(depth + 1, i);
        }
    };
    extend(0, 0);
}

bool fixed_irreducible(std::span<const Fixed> alpha, std::span<const Fixed> beta)
{
    for (auto a : alpha)
        for (auto b : beta)
            if (a == b)
                return false;
    return true;
}

// Sum over classes of nu^p, from closed-form entries: an (ell, p) class
// contributes to p - ell .. p.
template <class Entries>
std::map<int, int> fiber_from_entries(const Entries& entries)
{
    std::map<int, int> out;
    for (const auto& e : entries) {
        for (int q = e.p - e.ell; q <= e.p; ++q)
            ++out[q];
    }
    return out;
}

std::string graded(const GradedCounts& g)
{
    std::string s = "{";
    for (const auto& [p, v] : g)
        s += (s.size() > 1 ? "," : "") + std::to_string(p) + ":" + std::to_string(v);
    return s + "}";
}

// ---- criteria --------------------------------------------------------------

Outcome ac1()
{
    Outcome o;
    const auto t0 = Clock::now();
    std::size_t bad = 0;
    for (const auto& params : ac1_instances()) {
        const auto rep = verify_cross_engine(params);
        if (!rep.agree) {
            if (++bad <= 5)
                o.notes.push_back("disagree: " + params.str() + (rep.error ? " " + *rep.error : ""));
        }
    }
    const double s = seconds_since(t0);
    o.pass = bad == 0 && s < kAc1Seconds;
    o.detail = std::to_string(ac1_instances().size()) + " instances, " + std::to_string(bad) + " disagree, " +
               fmt_seconds(s) + " (limit " + fmt_seconds(kAc1Seconds) + ")";
    return o;
}

Outcome ac2()
{
    Outcome o;
    const auto t0 = Clock::now();
    std::size_t instances = 0, checks = 0, bad = 0;
    for (int n = 1; n <= 3; ++n)
        for_each_fixed_multiset(n, [&](std::span<const Fixed> a, std::span<const Fixed> b) {
            if (!fixed_irreducible(a, b))
                return;
            ++instances;
            for (std::size_t m = 0; m < a.size(); ++m)
                for (EndPoint pt : {EndPoint::Zero, EndPoint::Infinity}) {
                    ++checks;
                    if (!check_lemma37(a, b, m, pt) && ++bad <= 5)
                        o.notes.push_back("fails at m=" + std::to_string(m));
                }
        });
    const double s = seconds_since(t0);
    o.pass = bad == 0 && s < kAc2Seconds;
    o.detail = std::to_string(instances) + " irreducible multisets, " + std::to_string(checks) + " identities, " +
               std::to_string(bad) + " fail, " + fmt_seconds(s) + " (limit " + fmt_seconds(kAc2Seconds) + ")";
    return o;
}

// Does the chain "x < y = z" hold for the row's placement?
bool chain_realized(const lemma_tables::Row& row)
{
    auto value = [&](const std::string& name) -> int {
        if (name == "alpha_k")
            return row.alpha_k;
        if (name == "beta_k")
            return row.beta_k;
        return row.pivot; // alpha_m in table i, beta_m in table ii
    };
    std::istringstream in(row.position);
    std::string lhs, op, rhs;
    in >> lhs;
    while (in >> op >> rhs) {
        const int a = value(lhs), b = value(rhs);
        if ((op == "<" && !(a < b)) || (op == "=" && a != b))
            return false;
        lhs = rhs;
    }
    return true;
}

Outcome ac3()
{
    Outcome o;
    int matched = 0, realized = 0;
    auto contribution = [](const lemma_tables::Row& r) {
        const EndPoint pt = r.table == 1 ? EndPoint::Zero : EndPoint::Infinity;
        return lemma37_contribution(Fixed(r.alpha_k * 210), Fixed(r.beta_k * 210), Fixed(r.pivot * 210), pt);
    };
    for (const auto& row : lemma_tables::kRows) {
        const auto low = lemma_tables::with_zero(row);
        if (chain_realized(row) && chain_realized(low))
            ++realized;
        else
            o.notes.push_back("placement does not realize \"" + std::string(row.position) + "\"");
        const auto c = contribution(row);
        if (c.to_p_count == row.expect_p && c.to_fedorov == row.expect_fedorov && contribution(low) == c) {
            ++matched;
            continue;
        }
        o.notes.push_back("table " + std::string(row.table == 1 ? "i" : "ii") + " row \"" + row.position +
                          "\": table gives (" + std::to_string(row.expect_p) + "," + std::to_string(row.expect_fedorov) +
                          "), computed (" + std::to_string(c.to_p_count) + "," + std::to_string(c.to_fedorov) +
                          "); both still differ by [alpha_k<beta_k]=" + std::to_string(c.to_p_count - c.to_fedorov));
    }
    o.pass = matched == 16 && realized == 16;
    o.detail = std::to_string(realized) + "/16 rows instantiated, " + std::to_string(matched) + "/16 rows match";
    return o;
}

Outcome ac4()
{
    Outcome o;
    std::size_t bad = 0, instances = 0;
    for (const auto& params : ac1_instances()) {
        for (const auto* which : {"closed", "recursive"}) {
            const auto p = std::string(which) == "closed" ? profile_closed(params) : profile_recursive(params);
            std::int64_t total = 0;
            for (const auto& [q, v] : p.h)
                total += v;
            if (fiber_totals(p.nu_zero) != fiber_totals(p.nu_infinity) || total != static_cast<std::int64_t>(params.size()))
                if (++bad <= 5)
                    o.notes.push_back(std::string(which) + " " + params.str() + " fiber 0 " +
                                      graded(fiber_totals(p.nu_zero)) + " vs inf " + graded(fiber_totals(p.nu_infinity)));
        }
        ++instances;
    }
    std::size_t irreducible = 0;
    for (int n = 1; n <= 3; ++n)
        for_each_fixed_multiset(n, [&](std::span<const Fixed> a, std::span<const Fixed> b) {
            if (!fixed_irreducible(a, b))
                return;
            ++irreducible;
            const auto z = nu_closed_entries(a, b, EndPoint::Zero);
            const auto i = nu_closed_entries(a, b, EndPoint::Infinity);
            const auto fz = fiber_from_entries(z);
            const auto fi = fiber_from_entries(i);
            int total = 0;
            for (const auto& [q, v] : fz)
                total += v;
            if ((fz != fi || total != n) && ++bad <= 5)
                o.notes.push_back("grid instance of size " + std::to_string(n) + " fails");
        });
    o.pass = bad == 0;
    o.detail = std::to_string(instances) + " criterion-1 instances (both engines), " + std::to_string(irreducible) +
               " irreducible criterion-2 instances, " + std::to_string(bad) + " fail";
    return o;
}

Outcome ac5()
{
    Outcome o;
    std::size_t bad = 0;
    auto expect_unit = [](bool transvection, int n) { return transvection ? n : n - 1; };
    for (const auto& params : ac1_instances()) {
        const int n = static_cast<int>(params.size());
        const bool tv = special_gamma(params).is_one();
        for (const auto& p : {profile_closed(params), profile_recursive(params)}) {
            const auto& mu = p.mu_finite.at(0);
            const bool single = mu.total_dimension() == 1 && mu.unknown_slots().empty() &&
                                mu.entries().begin()->first.ell == 0;
            const auto js = p.monodromy.at(1);
            int unit = 0;
            for (const auto& b : js.blocks)
                if (b.residue.is_zero())
                    unit += b.size;
            const auto& nu1 = p.nu_finite.at(0);
            std::int64_t nu_unit = 0;
            for (const auto& [k, m] : nu1.entries())
                if (k.residue.is_zero())
                    nu_unit += m * (k.ell + 1);
            const bool unit_ok = unit == expect_unit(tv, n) &&
                                 (nu1.has_unknown(Residue{}) || nu_unit == expect_unit(tv, n));
            if ((!single || !unit_ok) && ++bad <= 5)
                o.notes.push_back(params.str());
        }
    }
    std::size_t grid = 0;
    for (int n = 1; n <= 3; ++n)
        for_each_fixed_multiset(n, [&](std::span<const Fixed> a, std::span<const Fixed> b) {
            if (!fixed_irreducible(a, b))
                return;
            ++grid;
            const auto c = nu_one_counts(a, b);
            const bool tv = is_zero(special_residue(a, b));
            if ((c.nu_at_1 != expect_unit(tv, n) || c.nu_at_1 + c.nu_at_lambda_s != n) && ++bad <= 5)
                o.notes.push_back("grid instance of size " + std::to_string(n));
        });
    o.pass = bad == 0;
    o.detail = std::to_string(ac1_instances().size()) + " criterion-1 instances (both engines), " + std::to_string(grid) +
               " criterion-2 instances, " + std::to_string(bad) + " fail";
    return o;
}

Outcome ac6()
{
    Outcome o;
    std::mt19937_64 rng(kSeed + 6);
    std::size_t bad = 0, literal_varies = 0;
    for (std::size_t i = 0; i < kAc6Instances; ++i) {
        const auto params = random_irreducible(rng, 4, 8);
        const auto closed = profile_closed(params);
        const auto rec = profile_recursive(params);
        const int index = mu_one_index<Residue>(params.alpha(), params.beta());
        bool varies = false;
        const int literal = mu_one_partial_sum_count(params);
        for (int k = 0; k < kAc6Perms; ++k) {
            std::vector<std::size_t> order(params.size());
            std::iota(order.begin(), order.end(), std::size_t{0});
            std::shuffle(order.begin(), order.end(), rng);
            const auto q = params.permuted(order);
            const bool ok = same_invariants(profile_closed(q), closed) && same_invariants(profile_recursive(q), rec) &&
                            mu_one_index<Residue>(q.alpha(), q.beta()) == index;
            if (!ok && ++bad <= 5)
                o.notes.push_back(params.str() + " vs " + q.str());
            varies = varies || mu_one_partial_sum_count(q) != literal;
        }
        literal_varies += varies ? 1 : 0;
    }
    o.pass = bad == 0;
    o.detail = std::to_string(kAc6Instances) + " instances x " + std::to_string(kAc6Perms) + " permutations, " +
               std::to_string(bad) + " change (mu-at-1 index included)";
    o.notes.push_back("info: the literal partial-sum count varies under reordering on " +
                      std::to_string(literal_varies) + "/" + std::to_string(kAc6Instances) +
                      " instances; it is not what the profiles use");
    return o;
}

Outcome ac7()
{
    Outcome o;
    std::mt19937_64 rng(kSeed + 7);
    std::size_t bad = 0, pairings = 0, nonzero = 0;
    for (std::size_t i = 0; i < kAc7Instances; ++i) {
        const auto params = random_irreducible(rng, 4, 8);
        const auto closed = profile_closed(params);
        const auto rec = profile_recursive(params);
        std::vector<std::size_t> order(params.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::size_t tried = 0;
        do {
            std::vector<Residue> beta;
            for (auto j : order)
                beta.push_back(params.beta(j));
            const HypergeometricParams q(params.alpha(), beta);
            const auto s_closed = equal_up_to_shift(closed, profile_closed(q));
            const auto s_rec = equal_up_to_shift(rec, profile_recursive(q));
            ++pairings;
            if ((!s_closed || !s_rec || s_closed != s_rec) && ++bad <= 5)
                o.notes.push_back(params.str() + " re-paired as " + q.str());
            if (s_closed && *s_closed != 0)
                ++nonzero;
        } while (++tried < kAc7MaxPairings && std::next_permutation(order.begin(), order.end()));
    }
    o.pass = bad == 0;
    o.detail = std::to_string(pairings) + " pairings over " + std::to_string(kAc7Instances) + " instances, " +
               std::to_string(bad) + " without a shift, " + std::to_string(nonzero) + " with a non-zero shift";
    return o;
}

Outcome ac8()
{
    Outcome o;
    std::mt19937_64 rng(kSeed + 8);
    std::size_t bad = 0;
    const auto grid = residue_grid(8);
    for (std::size_t i = 0; i < kAc8Tables; ++i) {
        const SingularPoint pt = i % 3 == 0 ? SingularPoint::zero() : i % 3 == 1 ? SingularPoint::infinity() : SingularPoint::finite(1);
        LocalHodgeTable t(pt, i % 2 ? TableKind::NearbyPrimitive : TableKind::VanishingPrimitive);
        const int k = static_cast<int>(rng() % 6);
        for (int e = 0; e < k; ++e)
            t.add(grid[rng() % grid.size()], static_cast<int>(rng() % 4), static_cast<int>(rng() % 7) - 2,
                  1 + static_cast<int>(rng() % 3));
        if (rng() % 4 == 0) {
            const Residue r = grid[rng() % grid.size()];
            const int ell = static_cast<int>(rng() % 2);
            const bool occupied = std::any_of(t.entries().begin(), t.entries().end(), [&](const auto& e) {
                return e.first.residue == r && e.first.ell == ell;
            });
            if (!occupied)
                t.mark_unknown(r, ell);
        }
        const auto d = dualize_table(t);
        if ((dualize_table(d) != t || d.total_dimension() != t.total_dimension()) && ++bad <= 5)
            o.notes.push_back("table " + std::to_string(i));
    }
    o.pass = bad == 0;
    o.detail = std::to_string(kAc8Tables) + " random tables, " + std::to_string(bad) + " fail";
    return o;
}

Outcome ac9()
{
    Outcome o;
    const auto legendre = HypergeometricParams::parse("0,0", "1/2,1/2");
    const auto interlaced = HypergeometricParams::parse("0,1/2", "1/4,3/4");
    const GradedCounts want_leg{{1, 1}, {2, 1}};
    for (const auto& [name, p] : {std::pair{"closed", profile_closed(legendre)}, std::pair{"recursive", profile_recursive(legendre)}}) {
        const auto& js = p.monodromy.at(1);
        const bool transvection = special_gamma(legendre).is_one() && js.blocks.size() == 1 &&
                                  js.blocks[0].residue.is_zero() && js.blocks[0].size == 2;
        if (p.h != want_leg || !transvection) {
            o.pass = false;
            o.notes.push_back(std::string(name) + " Legendre h=" + graded(p.h));
        }
    }
    for (const auto& [name, p] : {std::pair{"closed", profile_closed(interlaced)}, std::pair{"recursive", profile_recursive(interlaced)}}) {
        if (p.h.size() != 1 || p.h.begin()->second != 2) {
            o.pass = false;
            o.notes.push_back(std::string(name) + " interlaced h=" + graded(p.h));
        }
    }
    o.detail = "Legendre h=" + graded(profile_closed(legendre).h) + " transvection at 1, interlaced h=" +
               graded(profile_closed(interlaced).h);
    return o;
}

Outcome ac10()
{
    Outcome o;
    std::mt19937_64 rng(kSeed + 10);
    std::size_t bad = 0, consulted = 0;
    RecursiveEngine literal({.memoize = true, .canonical_delta_order = false});
    for (const auto& params : ac1_instances()) {
        try {
            const auto p = profile_recursive(params);
            std::vector<std::size_t> order(params.size());
            std::iota(order.begin(), order.end(), std::size_t{0});
            std::shuffle(order.begin(), order.end(), rng);
            const auto q = params.permuted(order);
            if ((!p.delta || profile_recursive(q).delta != p.delta || literal.profile(q).delta != p.delta) && ++bad <= 5)
                o.notes.push_back(params.str());
        } catch (const Error& e) {
            if (e.code() == ErrorCode::InternalUnknownConsulted)
                ++consulted;
            if (++bad <= 5)
                o.notes.push_back(params.str() + ": " + e.what());
        }
    }
    o.pass = bad == 0 && consulted == 0;
    o.detail = std::to_string(ac1_instances().size()) + " instances, " + std::to_string(bad) + " delta failures, " +
               std::to_string(consulted) + " unknown-slot reads";
    return o;
}

Outcome ac11()
{
    Outcome o;
    const auto ctx = ConvolutionContext::from_residue(Residue::parse("1/3"));
    LocalHodgeTable t(SingularPoint::infinity(), TableKind::NearbyPrimitive);
    t.add(ctx.lambda0_residue.conjugate(), 0, 4, 1); // lambda0-bar, ell = 0, exponent keys
    const auto out = mc_nu_infinity(t, ctx);
    const Residue slot = Residue::of(Rational(1) - ctx.gamma0.value());
    bool fabricated = false;
    for (const auto& [k, m] : out.entries())
        fabricated = fabricated || (k.residue == slot && k.ell == 0);
    o.pass = out.is_unknown(slot, 0) && !fabricated;
    o.detail = std::string("unknown slot ") + (out.is_unknown(slot, 0) ? "emitted" : "missing") + ", " +
               (fabricated ? "fabricated entry present" : "no fabricated entry");
    return o;
}

} // namespace

int main(int argc, char** argv)
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> all{
        {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4},   {"AC5", ac5},   {"AC6", ac6},
        {"AC7", ac7}, {"AC8", ac8}, {"AC9", ac9}, {"AC10", ac10}, {"AC11", ac11},
    };
    std::vector<std::string> wanted(argv + 1, argv + argc);
    bool all_pass = true;
    for (const auto& [name, run] : all) {
        if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), name) == wanted.end())
            continue;
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::printf("%s %s %s\n", name.c_str(), o.pass ? "PASS" : "FAIL", o.detail.c_str());
        for (const auto& n : o.notes)
            std::printf("    %s\n", n.c_str());
        all_pass = all_pass && o.pass;
    }
    return all_pass ? 0 : 1;
}

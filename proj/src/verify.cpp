#include "hodgehyp/verify.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <thread>

#include "hodgehyp/recursion.hpp"

namespace hodgehyp {

namespace {

std::string csv(const std::vector<Residue>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + v[i].str();
    return s;
}

std::string graded_str(const GradedCounts& g)
{
    std::string s = "{";
    for (const auto& [p, v] : g)
        s += (s.size() > 1 ? ", " : "") + std::to_string(p) + ":" + std::to_string(v);
    return s + "}";
}

void fail(std::vector<SweepFailure>& out, const HypergeometricParams& params, std::string check, std::string detail)
{
    out.push_back({std::move(check), std::move(detail), params.str(), {}});
}

void check_monodromy(std::vector<SweepFailure>& out, const HypergeometricParams& params, const HodgeProfile& p,
                     const char* engine)
{
    const auto& mu = p.mu_finite.at(0);
    const GammaRep gs = special_gamma(params);
    const bool single = mu.entries().size() == 1 && mu.unknown_slots().empty() &&
                        mu.entries().begin()->first.ell == 0 && mu.entries().begin()->second == 1 &&
                        mu.entries().begin()->first.residue == gs.residue();
    if (!single)
        fail(out, params, "monodromy", std::string(engine) + ": mu at 1 is not one class at ell=0");

    const auto counts = nu_one_counts(params);
    const auto js = jordan_structure(params, SingularPoint::finite(1));
    int unit = 0;
    for (const auto& b : js.blocks)
        if (b.residue.is_zero())
            unit += b.size;
    const int expected = gs.is_one() ? static_cast<int>(params.size()) : static_cast<int>(params.size()) - 1;
    if (counts.nu_at_1 != expected || unit != expected || js.total_size() != static_cast<int>(params.size()))
        fail(out, params, "monodromy", "eigenvalue-1 count at 1 is not " + std::to_string(expected));
}

void check_fiber(std::vector<SweepFailure>& out, const HypergeometricParams& params, const HodgeProfile& p,
                 const char* engine)
{
    const auto at_zero = fiber_totals(p.nu_zero);
    const auto at_inf = fiber_totals(p.nu_infinity);
    if (at_zero != at_inf)
        fail(out, params, "fiber_rank",
             std::string(engine) + ": fiber at 0 " + graded_str(at_zero) + " vs infinity " + graded_str(at_inf));
    for (const auto& problem : check_profile_invariants(p))
        fail(out, params, "fiber_rank", std::string(engine) + ": " + problem);
}

std::vector<SweepFailure> shrink(const HypergeometricParams& params, const std::string& check, bool inject_fault)
{
    HypergeometricParams current = params;
    std::vector<SweepFailure> last;
    for (bool progress = true; progress && current.size() > 1;) {
        progress = false;
        for (std::size_t j = 0; j < current.size(); ++j) {
            const auto candidate = current.without(j);
            auto fails = check_instance(candidate, 0, inject_fault);
            if (std::any_of(fails.begin(), fails.end(), [&](const SweepFailure& f) { return f.check == check; })) {
                current = candidate;
                progress = true;
                break;
            }
        }
    }
    return {{check, {}, current.str(), reproducer_command(current)}};
}

} // namespace

std::string reproducer_command(const HypergeometricParams& params)
{
    return "hodgehyp compute --alpha " + csv(params.alpha()) + " --beta " + csv(params.beta()) + " --engine both";
}

std::vector<Residue> residue_grid(int den_max)
{
    std::vector<Residue> out;
    for (long d = 1; d <= den_max; ++d)
        for (long k = 0; k < d; ++k)
            out.push_back(Residue::of(Rational(k, d)));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void for_each_pair_multiset(const std::vector<Residue>& grid, int n,
                            const std::function<void(const HypergeometricParams&)>& visit)
{
    std::vector<std::pair<Residue, Residue>> pairs;
    for (const auto& a : grid)
        for (const auto& b : grid)
            if (a != b)
                pairs.emplace_back(a, b);

    std::vector<Residue> alpha, beta;
    std::function<void(std::size_t)> extend = [&](std::size_t from) {
        if (static_cast<int>(alpha.size()) == n) {
            visit(HypergeometricParams(alpha, beta));
            return;
        }
        for (std::size_t i = from; i < pairs.size(); ++i) {
            const auto& [a, b] = pairs[i];
            if (std::find(beta.begin(), beta.end(), a) != beta.end() ||
                std::find(alpha.begin(), alpha.end(), b) != alpha.end())
                continue;
            alpha.push_back(a);
            beta.push_back(b);
            extend(i);
            alpha.pop_back();
            beta.pop_back();
        }
    };
    extend(0);
}

std::vector<SweepFailure> check_instance(const HypergeometricParams& params, std::uint64_t perm_seed,
                                         bool inject_fault)
{
    std::vector<SweepFailure> out;
    try {
        const HodgeProfile closed = profile_closed(params);
        RecursiveEngine engine;
        HodgeProfile recursive = engine.profile(params);
        if (inject_fault)
            recursive = profile_shift(recursive, 1);

        const EngineReport report = compare_profiles(params, closed, recursive);
        if (!report.agree) {
            std::string detail = report.shift ? "shift " + std::to_string(*report.shift) : "no shift";
            for (const auto& m : report.mismatches)
                detail += "; " + m;
            fail(out, params, "cross_engine", detail);
        }
        for (const auto& f : report.lemma37_failures)
            fail(out, params, "lemma37", f);

        check_fiber(out, params, closed, "closed");
        check_fiber(out, params, recursive, "recursive");
        check_monodromy(out, params, closed, "closed");
        check_monodromy(out, params, recursive, "recursive");

        std::vector<std::size_t> order(params.size());
        std::iota(order.begin(), order.end(), 0);
        std::mt19937_64 rng(perm_seed);
        std::shuffle(order.begin(), order.end(), rng);
        const auto permuted = params.permuted(order);
        if (!same_invariants(profile_closed(permuted), closed))
            fail(out, params, "permutation", "closed profile changes under reordering");
        auto permuted_recursive = engine.profile(permuted);
        if (inject_fault)
            permuted_recursive = profile_shift(permuted_recursive, 1);
        if (!same_invariants(permuted_recursive, recursive))
            fail(out, params, "permutation", "recursive profile changes under reordering");
    } catch (const Error& e) {
        fail(out, params, "error", std::string(error_code_name(e.code())) + ": " + e.what());
    }
    return out;
}

SweepResult run_sweep(const SweepSpec& spec)
{
    if (spec.n_max < 1 || spec.den_max < 1)
        throw Error(ErrorCode::InvalidArgument, "n-max and den-max must be positive");

    std::vector<HypergeometricParams> instances;
    if (spec.sample) {
        std::mt19937_64 rng(spec.seed);
        for (std::size_t i = 0; i < *spec.sample; ++i)
            instances.push_back(random_irreducible(rng, spec.n_max, spec.den_max));
    } else {
        const auto grid = residue_grid(spec.den_max);
        for (int n = 1; n <= spec.n_max; ++n)
            for_each_pair_multiset(grid, n, [&](const HypergeometricParams& p) { instances.push_back(p); });
    }

    const unsigned workers =
        std::max(1u, std::min<unsigned>(spec.threads ? spec.threads : std::thread::hardware_concurrency(),
                                        static_cast<unsigned>(std::max<std::size_t>(1, instances.size()))));
    std::vector<std::vector<SweepFailure>> per_instance(instances.size());
    auto work = [&](unsigned w) {
        for (std::size_t i = w; i < instances.size(); i += workers)
            per_instance[i] = check_instance(instances[i], spec.seed ^ (0x9e3779b97f4a7c15ULL * (i + 1)), spec.inject_fault);
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w)
        pool.emplace_back(work, w);
    work(0);
    for (auto& t : pool)
        t.join();

    SweepResult result;
    result.instances = instances.size();
    // per instance: cross-engine, shift identity, fiber (x2), monodromy (x2), permutation (x2)
    result.checks = instances.size() * 8;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        for (auto& f : per_instance[i]) {
            // shrinking reruns the engines, so only the first few failures get it
            f.reproducer = result.failures.size() < 20 ? shrink(instances[i], f.check, spec.inject_fault).front().reproducer
                                                       : reproducer_command(instances[i]);
            result.failures.push_back(std::move(f));
        }
    }
    return result;
}

} // namespace hodgehyp

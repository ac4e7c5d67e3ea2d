#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "hodgehyp/recursion.hpp"
#include "hodgehyp/verify.hpp"
#include "support/oracles.hpp"

using namespace hodgehyp;

namespace {

HypergeometricParams P(const char* a, const char* b) { return HypergeometricParams::parse(a, b); }
Residue R(const char* s) { return Residue::parse(s); }

} // namespace

TEST_CASE("base profile")
{
    const auto a = base_profile(R("0"), R("1/2"));
    CHECK(a.rank == 1);
    CHECK(a.nu_zero.at(R("0"), 0, 1) == 1);
    CHECK(a.nu_infinity.at(R("1/2"), 0, 1) == 1);
    CHECK(a.mu_finite.at(0).at(R("1/2"), 0, 1) == 1);
    CHECK(a.h == GradedCounts{{1, 1}});
    CHECK(a.delta == GradedCounts{{1, -1}});

    CHECK(base_profile(R("1/2"), R("1/4")).delta == GradedCounts{{1, -2}});
    CHECK_THROWS_AS(base_profile(R("1/3"), R("1/3")), Error);
    CHECK(check_profile_invariants(a).empty());
}

TEST_CASE("base profile agrees with the closed form")
{
    for (const auto& a : residue_grid(6))
        for (const auto& b : residue_grid(6)) {
            if (a == b)
                continue;
            const HypergeometricParams params({a}, {b});
            CAPTURE(params.str());
            const auto rep = compare_profiles(params, profile_closed(params), base_profile(a, b));
            CHECK(rep.agree);
        }
}

TEST_CASE("choose_peel")
{
    const auto params = P("1/3,1/3,1/2", "0,1/4,1/4");
    auto plan = choose_peel(params, {SingularPoint::zero(), R("1/3")});
    CHECK(plan.peel_index == 0);
    CHECK(plan.case_tag == PeelCase::Case2);

    plan = choose_peel(params, {SingularPoint::zero(), R("1/2")});
    CHECK(plan.peel_index == 0);
    CHECK(plan.case_tag == PeelCase::Case1);
    CHECK(plan.gamma0 == gamma_rep(R("2/3")));

    plan = choose_peel(params, {SingularPoint::infinity(), R("0")});
    CHECK(plan.peel_index == 1);
    CHECK(plan.case_tag == PeelCase::Case3);
    CHECK(plan.gamma0 == gamma_rep(residue_sub(R("1/4"), R("1/3"))));

    plan = choose_peel(params, {SingularPoint::finite(1), R("0")});
    CHECK(plan.peel_index == 0);

    CHECK_THROWS_AS(choose_peel(P("0", "1/2"), {SingularPoint::zero(), R("0")}), Error);
    CHECK(std::string(peel_case_name(PeelCase::Case3)) == "Case3");
}

TEST_CASE("peel never lands on an exhausted residue")
{
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 500; ++trial) {
        const auto params = random_irreducible(rng, 5, 6);
        if (params.size() < 2)
            continue;
        for (const auto& r : params.alpha()) {
            const auto plan = choose_peel(params, {SingularPoint::zero(), r});
            const auto sub = params.without(plan.peel_index).alpha();
            CHECK(std::count(sub.begin(), sub.end(), r) >= 1);
        }
        for (const auto& r : params.beta()) {
            const auto plan = choose_peel(params, {SingularPoint::infinity(), r});
            const auto sub = params.without(plan.peel_index).beta();
            CHECK(std::count(sub.begin(), sub.end(), r) >= 1);
        }
    }
}

TEST_CASE("recursive profile matches the closed form")
{
    for (const auto& [a, b] : std::vector<std::pair<const char*, const char*>>{
             {"0,0", "1/2,1/2"}, {"1/4,3/4", "0,1/2"}, {"0,0,0", "1/5,9/10,1/5"}, {"1/6,5/6", "0,0"},
             {"0,1/3,2/3", "1/2,1/2,1/2"}, {"1/2,1/2,1/2,1/2", "0,0,0,0"}}) {
        const auto params = P(a, b);
        CAPTURE(params.str());
        const auto rep = verify_cross_engine(params);
        CHECK_FALSE(rep.error.has_value());
        CHECK(rep.agree);
        CHECK(rep.shift == 0);
    }

    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 500; ++trial) {
        const auto params = random_irreducible(rng, 4, 8);
        CAPTURE(params.str());
        const auto rep = verify_cross_engine(params);
        CHECK(rep.agree);
        CHECK(rep.mismatches.empty());
    }
}

TEST_CASE("memoization does not change the result")
{
    std::mt19937_64 rng(71);
    RecursiveEngine memo;
    RecursiveEngine plain({.memoize = false});
    for (int trial = 0; trial < 200; ++trial) {
        const auto params = random_irreducible(rng, 4, 6);
        const auto a = memo.profile(params);
        const auto b = plain.profile(params);
        CHECK(same_invariants(a, b));
        CHECK(a.delta == b.delta);
    }
    CHECK(memo.stats().memo_hits > 0);
    CHECK(plain.stats().memo_hits == 0);
    memo.clear();
    CHECK(memo.stats().computed == 0);
}

TEST_CASE("delta is independent of the pair order")
{
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 200; ++trial) {
        const auto params = random_irreducible(rng, 4, 8);
        CAPTURE(params.str());
        std::vector<std::size_t> order(params.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::shuffle(order.begin(), order.end(), rng);
        const auto shuffled = params.permuted(order);

        const auto canon = profile_recursive(params);
        CHECK(profile_recursive(shuffled).delta == canon.delta);

        RecursiveEngine literal({.memoize = true, .canonical_delta_order = false});
        CHECK(literal.profile(params).delta == canon.delta);
        CHECK(literal.profile(shuffled).delta == canon.delta);
    }
}

TEST_CASE("delta degree sum")
{
    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 300; ++trial) {
        const auto params = random_irreducible(rng, 5, 10);
        const auto prof = profile_recursive(params);
        std::int64_t total = 0;
        for (const auto& [p, v] : *prof.delta)
            total += v;
        CHECK(Rational(total) == oracle::degree_from_exponents(params));
    }
}

TEST_CASE("reducible input")
{
    CHECK_THROWS_AS(profile_recursive(P("0,1/2", "1/2,1/3")), Error);
    const auto rep = verify_cross_engine(P("0,1/2", "1/2,1/3"));
    REQUIRE(rep.error.has_value());
    CHECK(rep.error->find("reducible") == 0);
    CHECK_FALSE(rep.agree);
}

TEST_CASE("compare_profiles reports a shifted profile")
{
    const auto params = P("0,0", "1/2,1/2");
    const auto closed = profile_closed(params);
    const auto rep = compare_profiles(params, closed, profile_shift(closed, 2));
    CHECK_FALSE(rep.agree);
    CHECK(rep.shift == 2);
    CHECK_FALSE(rep.mismatches.empty());
}

// gr_F^p V^0 has rank h^p, so delta^p vanishes wherever h^p does; with a
// single Hodge index the whole degree sits there.
TEST_CASE("delta lives where h does")
{
    std::mt19937_64 rng(97);
    for (int trial = 0; trial < 600; ++trial) {
        const auto params = random_irreducible(rng, 4, 8);
        CAPTURE(params.str());
        const auto prof = profile_recursive(params);
        for (const auto& [p, v] : *prof.delta)
            if (v != 0)
                CHECK(prof.h.contains(p));
        if (prof.h.size() == 1) {
            const int p0 = prof.h.begin()->first;
            CHECK(*prof.delta == GradedCounts{{p0, static_cast<std::int64_t>(oracle::degree_from_exponents(params).floor().get_si())}});
        }
    }
}

// With one Hodge index the limit at 1 has all of its classes there too.
TEST_CASE("mu at 1 sits in the fiber for a single Hodge index")
{
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 600; ++trial) {
        const auto params = random_irreducible(rng, 4, 8);
        const auto prof = profile_closed(params);
        if (prof.h.size() != 1 || special_gamma(params).is_one())
            continue;
        CAPTURE(params.str());
        CHECK(prof.mu_finite.at(0).entries().begin()->first.p == prof.h.begin()->first);
    }
}

TEST_CASE("re-pairing shifts every invariant, delta included")
{
    std::mt19937_64 rng(103);
    for (int trial = 0; trial < 100; ++trial) {
        const auto params = random_irreducible(rng, 4, 8);
        std::vector<Residue> beta = params.beta();
        std::shuffle(beta.begin(), beta.end(), rng);
        const HypergeometricParams q(params.alpha(), beta);
        CAPTURE(params.str());
        CAPTURE(q.str());
        const auto a = profile_recursive(params);
        const auto b = profile_recursive(q);
        const auto s = equal_up_to_shift(a, b);
        REQUIRE(s.has_value());
        CHECK(equal_up_to_shift(profile_closed(params), profile_closed(q)) == s);
    }
}

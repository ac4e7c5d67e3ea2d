#pragma once

#include <concepts>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hodgehyp/errors.hpp"
#include "hodgehyp/params.hpp"
#include "hodgehyp/residue.hpp"
#include "hodgehyp/table.hpp"

// Circle-order combinatorics behind the closed formulas.
//
// Everything here depends only on comparisons (plus sums mod 1 for the
// special eigenvalue), so the templates accept any exact ordered residue
// type: Residue for general use, FixedResidue<D> for bulk sweeps.

namespace hodgehyp {

// Which strict chain makes a -> g -> b hold, if any.
enum class SeparationCase { AlphaGammaBeta, GammaBetaAlpha, BetaAlphaGamma, NotSeparated };

enum class EndPoint { Zero, Infinity };

const char* separation_case_name(SeparationCase c);
const char* end_point_name(EndPoint p);

template <std::totally_ordered T>
SeparationCase separation_case(const T& a, const T& g, const T& b)
{
    if (a < g && g < b)
        return SeparationCase::AlphaGammaBeta;
    if (g < b && b < a)
        return SeparationCase::GammaBetaAlpha;
    if (b < a && a < g)
        return SeparationCase::BetaAlphaGamma;
    return SeparationCase::NotSeparated;
}

// exp(2 pi i g) lies in the open arc from exp(2 pi i a) to exp(2 pi i b).
template <std::totally_ordered T>
bool separated(const T& a, const T& g, const T& b)
{
    return separation_case(a, g, b) != SeparationCase::NotSeparated;
}

namespace detail {

inline void check_index(std::size_t m, std::size_t n)
{
    if (m >= n)
        throw Error(ErrorCode::IndexOutOfRange, "index " + std::to_string(m) + " out of range for n = " + std::to_string(n));
}

template <class T>
void check_lengths(std::span<const T> alpha, std::span<const T> beta)
{
    if (alpha.size() != beta.size())
        throw Error(ErrorCode::InvalidArgument, "alpha and beta lengths differ");
}

} // namespace detail

// Number of pairs (alpha_k, beta_k) not separated by g.
template <std::totally_ordered T>
int p_count(std::span<const T> alpha, std::span<const T> beta, const T& g)
{
    detail::check_lengths(alpha, beta);
    int count = 0;
    for (std::size_t k = 0; k < alpha.size(); ++k)
        if (!separated(alpha[k], g, beta[k]))
            ++count;
    return count;
}

// Hodge index from the solution-side formulas, rewritten for horizontal sections:
//   at 0:        #{j : beta_j <  alpha_m} - #{i : alpha_i < alpha_m}
//   at infinity: #{j : beta_j <= beta_m}  - #{i : alpha_i < beta_m}
template <std::totally_ordered T>
int fedorov_p(std::span<const T> alpha, std::span<const T> beta, std::size_t m, EndPoint point)
{
    detail::check_lengths(alpha, beta);
    detail::check_index(m, alpha.size());
    const T& pivot = point == EndPoint::Zero ? alpha[m] : beta[m];
    int p = 0;
    for (const auto& b : beta)
        if (b < pivot || (point == EndPoint::Infinity && b == pivot))
            ++p;
    for (const auto& a : alpha)
        if (a < pivot)
            --p;
    return p;
}

// #{k : alpha_k < beta_k}; the offset between the two formula families.
template <std::totally_ordered T>
int shift_constant(std::span<const T> alpha, std::span<const T> beta)
{
    detail::check_lengths(alpha, beta);
    int count = 0;
    for (std::size_t k = 0; k < alpha.size(); ++k)
        if (alpha[k] < beta[k])
            ++count;
    return count;
}

struct Lemma37Contribution {
    int to_p_count = 0;
    int to_fedorov = 0;

    friend bool operator==(const Lemma37Contribution&, const Lemma37Contribution&) = default;
};

// What pair k adds to p_count and to fedorov_p when the pivot is alpha_m
// (EndPoint::Zero) or beta_m (EndPoint::Infinity).
template <std::totally_ordered T>
Lemma37Contribution lemma37_contribution(const T& alpha_k, const T& beta_k, const T& pivot, EndPoint point)
{
    Lemma37Contribution c;
    c.to_p_count = separated(alpha_k, pivot, beta_k) ? 0 : 1;
    const bool beta_below = point == EndPoint::Zero ? beta_k < pivot : beta_k <= pivot;
    c.to_fedorov = (beta_below ? 1 : 0) - (alpha_k < pivot ? 1 : 0);
    return c;
}

struct Lemma37Result {
    bool holds = false;
    int p_count = 0;
    int fedorov = 0;
    int shift = 0;
    std::vector<Lemma37Contribution> per_k;
};

template <std::totally_ordered T>
Lemma37Result lemma37(std::span<const T> alpha, std::span<const T> beta, std::size_t m, EndPoint point)
{
    detail::check_lengths(alpha, beta);
    detail::check_index(m, alpha.size());
    const T& pivot = point == EndPoint::Zero ? alpha[m] : beta[m];
    Lemma37Result r;
    r.p_count = p_count(alpha, beta, pivot);
    r.fedorov = fedorov_p(alpha, beta, m, point);
    r.shift = shift_constant(alpha, beta);
    r.holds = r.p_count - r.fedorov == r.shift;
    r.per_k.reserve(alpha.size());
    for (std::size_t k = 0; k < alpha.size(); ++k)
        r.per_k.push_back(lemma37_contribution(alpha[k], beta[k], pivot, point));
    return r;
}

// p_count - fedorov_p == shift_constant, without the per-k breakdown.
template <std::totally_ordered T>
bool check_lemma37(std::span<const T> alpha, std::span<const T> beta, std::size_t m, EndPoint point)
{
    detail::check_lengths(alpha, beta);
    detail::check_index(m, alpha.size());
    const T& pivot = point == EndPoint::Zero ? alpha[m] : beta[m];
    return p_count(alpha, beta, pivot) - fedorov_p(alpha, beta, m, point) == shift_constant(alpha, beta);
}

// Sum_k (beta_k - alpha_k) mod 1.
template <ResidueLike T>
T special_residue(std::span<const T> alpha, std::span<const T> beta)
{
    detail::check_lengths(alpha, beta);
    T total{};
    for (std::size_t k = 0; k < alpha.size(); ++k)
        total = residue_add(total, residue_sub(beta[k], alpha[k]));
    return total;
}

// Residue-typed entry points.
int p_count(const HypergeometricParams& params, const Residue& g);
GammaRep special_gamma(const HypergeometricParams& params);
int fedorov_p(const HypergeometricParams& params, std::size_t m, EndPoint point);
int shift_constant(const HypergeometricParams& params);
Lemma37Result lemma37(const HypergeometricParams& params, std::size_t m, EndPoint point);
bool check_lemma37(const HypergeometricParams& params, std::size_t m, EndPoint point);

// Duality between solutions and horizontal sections:
// (r, ell, p) -> ({-r}, ell, ell - p).
LocalHodgeTable dualize_table(const LocalHodgeTable& table);

} // namespace hodgehyp

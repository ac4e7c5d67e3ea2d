#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hodgehyp/errors.hpp"
#include "hodgehyp/residue.hpp"

namespace hodgehyp {

// Parameters (alpha, beta) of H_{alpha,beta}. The list order is the order of
// the rank-one factors H_{alpha_1,beta_1} * ... * H_{alpha_n,beta_n}.
class HypergeometricParams {
public:
    HypergeometricParams(std::vector<Residue> alpha, std::vector<Residue> beta);

    // Comma-separated rationals, reduced mod 1.
    static HypergeometricParams parse(std::string_view alpha_csv, std::string_view beta_csv);

    std::size_t size() const { return alpha_.size(); }
    const std::vector<Residue>& alpha() const { return alpha_; }
    const std::vector<Residue>& beta() const { return beta_; }
    const Residue& alpha(std::size_t i) const { return alpha_.at(i); }
    const Residue& beta(std::size_t i) const { return beta_.at(i); }

    // alpha_i != beta_j for all i, j.
    bool is_irreducible() const;
    void require_irreducible() const;

    HypergeometricParams without(std::size_t j) const;
    HypergeometricParams twisted(const Residue& c) const;
    HypergeometricParams permuted(std::span<const std::size_t> order) const;
    // Pairs sorted lexicographically.
    HypergeometricParams canonical() const;

    std::string str() const;

    friend bool operator==(const HypergeometricParams&, const HypergeometricParams&) = default;

private:
    std::vector<Residue> alpha_;
    std::vector<Residue> beta_;
};

struct MultAndEll {
    int mult = 0;
    int ell = 0;

    friend bool operator==(const MultAndEll&, const MultAndEll&) = default;
};

template <class T>
MultAndEll mult_and_ell(std::span<const T> tuple, std::size_t m)
{
    if (m >= tuple.size())
        throw Error(ErrorCode::IndexOutOfRange,
                    "index " + std::to_string(m) + " out of range for tuple of size " + std::to_string(tuple.size()));
    int mult = 0;
    for (const auto& x : tuple)
        if (x == tuple[m])
            ++mult;
    return {mult, mult - 1};
}

std::vector<Residue> parse_residue_list(std::string_view csv);

} // namespace hodgehyp

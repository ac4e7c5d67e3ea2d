#include "hodgehyp/params.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace hodgehyp {

HypergeometricParams::HypergeometricParams(std::vector<Residue> alpha, std::vector<Residue> beta)
    : alpha_(std::move(alpha)), beta_(std::move(beta))
{
    if (alpha_.empty())
        throw Error(ErrorCode::InvalidArgument, "parameter lists must be non-empty");
    if (alpha_.size() != beta_.size())
        throw Error(ErrorCode::InvalidArgument, "alpha has " + std::to_string(alpha_.size()) + " entries but beta has " +
                                                    std::to_string(beta_.size()));
}

std::vector<Residue> parse_residue_list(std::string_view csv)
{
    std::vector<Residue> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = csv.find(',', start);
        const auto item = csv.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        out.push_back(Residue::parse(item));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

HypergeometricParams HypergeometricParams::parse(std::string_view alpha_csv, std::string_view beta_csv)
{
    auto alpha = parse_residue_list(alpha_csv);
    auto beta = parse_residue_list(beta_csv);
    if (alpha.size() != beta.size())
        throw Error(ErrorCode::Parse, "alpha and beta must have the same length");
    return {std::move(alpha), std::move(beta)};
}

bool HypergeometricParams::is_irreducible() const
{
    const std::set<Residue> betas(beta_.begin(), beta_.end());
    return std::none_of(alpha_.begin(), alpha_.end(), [&](const Residue& a) { return betas.contains(a); });
}

void HypergeometricParams::require_irreducible() const
{
    for (std::size_t i = 0; i < alpha_.size(); ++i)
        for (std::size_t j = 0; j < beta_.size(); ++j)
            if (alpha_[i] == beta_[j])
                throw Error(ErrorCode::ReducibleInput, "irreducibility requires alpha_i != beta_j for all i, j, but alpha_" +
                                                           std::to_string(i + 1) + " = beta_" + std::to_string(j + 1) +
                                                           " = " + alpha_[i].str());
}

HypergeometricParams HypergeometricParams::without(std::size_t j) const
{
    if (j >= size())
        throw Error(ErrorCode::IndexOutOfRange, "peel index out of range");
    if (size() < 2)
        throw Error(ErrorCode::InvalidArgument, "cannot remove the only pair");
    auto alpha = alpha_;
    auto beta = beta_;
    alpha.erase(alpha.begin() + static_cast<std::ptrdiff_t>(j));
    beta.erase(beta.begin() + static_cast<std::ptrdiff_t>(j));
    return {std::move(alpha), std::move(beta)};
}

HypergeometricParams HypergeometricParams::twisted(const Residue& c) const
{
    auto alpha = alpha_;
    auto beta = beta_;
    for (auto& a : alpha)
        a = residue_sub(a, c);
    for (auto& b : beta)
        b = residue_sub(b, c);
    return {std::move(alpha), std::move(beta)};
}

HypergeometricParams HypergeometricParams::permuted(std::span<const std::size_t> order) const
{
    if (order.size() != size())
        throw Error(ErrorCode::InvalidArgument, "permutation has wrong length");
    std::vector<bool> used(size(), false);
    std::vector<Residue> alpha, beta;
    for (const auto i : order) {
        if (i >= size() || used[i])
            throw Error(ErrorCode::InvalidArgument, "not a permutation");
        used[i] = true;
        alpha.push_back(alpha_[i]);
        beta.push_back(beta_[i]);
    }
    return {std::move(alpha), std::move(beta)};
}

HypergeometricParams HypergeometricParams::canonical() const
{
    std::vector<std::size_t> order(size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return std::tie(alpha_[i], beta_[i]) < std::tie(alpha_[j], beta_[j]);
    });
    return permuted(order);
}

std::string HypergeometricParams::str() const
{
    auto join = [](const std::vector<Residue>& xs) {
        std::string s;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (i)
                s += ',';
            s += xs[i].str();
        }
        return s;
    };
    return "alpha=(" + join(alpha_) + ") beta=(" + join(beta_) + ")";
}

} // namespace hodgehyp

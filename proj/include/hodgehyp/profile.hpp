#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hodgehyp/table.hpp"

namespace hodgehyp {

struct JordanBlock {
    Residue residue;
    int size = 1;

    friend bool operator==(const JordanBlock&, const JordanBlock&) = default;
};

struct JordanStructure {
    SingularPoint point;
    std::vector<JordanBlock> blocks;

    int total_size() const;

    friend bool operator==(const JordanStructure&, const JordanStructure&) = default;
};

// Complete numerical Hodge data of a module: primitive tables at 0, at the
// finite points and at infinity, Hodge numbers h^p, and (when known) the
// degrees delta^p of the graded Deligne extension.
struct HodgeProfile {
    int rank = 0;
    LocalHodgeTable nu_zero{SingularPoint::zero(), TableKind::NearbyPrimitive};
    LocalHodgeTable nu_infinity{SingularPoint::infinity(), TableKind::NearbyPrimitive};
    std::vector<LocalHodgeTable> nu_finite;
    std::vector<LocalHodgeTable> mu_finite;
    GradedCounts h;
    std::optional<GradedCounts> delta;
    std::string normalization_note;
    std::vector<JordanStructure> monodromy;
    std::map<std::string, std::string> notes;
};

// Same numerical invariants: rank, every table, h and delta.
// Notes, normalization text and monodromy are ignored.
bool same_invariants(const HodgeProfile& a, const HodgeProfile& b);

// Every p-index moved by s.
HodgeProfile profile_shift(const HodgeProfile& profile, int s);

// The unique s with profile_shift(a, s) having the same invariants as b.
// delta is compared only when both profiles have it.
std::optional<int> equal_up_to_shift(const HodgeProfile& a, const HodgeProfile& b);

// Smallest p over every table, h and delta.
std::optional<int> profile_min_p(const HodgeProfile& profile);

// Sum_p h^p = rank and total Jordan size at 0 and infinity = rank.
std::vector<std::string> check_profile_invariants(const HodgeProfile& profile);

} // namespace hodgehyp

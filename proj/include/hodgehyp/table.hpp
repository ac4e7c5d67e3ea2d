#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hodgehyp/residue.hpp"

namespace hodgehyp {

struct SingularPoint {
    enum class Kind { Zero, Finite, Infinity };

    Kind kind = Kind::Zero;
    int index = 0; // 1-based index into the finite set x = {x_1, ..., x_r}

    static SingularPoint zero() { return {Kind::Zero, 0}; }
    static SingularPoint infinity() { return {Kind::Infinity, 0}; }
    static SingularPoint finite(int i) { return {Kind::Finite, i}; }

    // "0", "inf", "x1", ...
    std::string str() const;
    static SingularPoint parse(const std::string& text);

    friend bool operator==(const SingularPoint&, const SingularPoint&) = default;
    friend auto operator<=>(const SingularPoint&, const SingularPoint&) = default;
};

enum class TableKind { NearbyPrimitive, VanishingPrimitive };

using Multiplicity = std::int64_t;

// p -> value. Zero values are never stored.
using GradedCounts = std::map<int, std::int64_t>;

void add_graded(GradedCounts& counts, int p, std::int64_t value);
GradedCounts shift_graded(const GradedCounts& counts, int s);

struct HodgeKey {
    Residue residue;
    int ell = 0;
    int p = 0;

    friend bool operator==(const HodgeKey&, const HodgeKey&) = default;
    friend auto operator<=>(const HodgeKey&, const HodgeKey&) = default;
};

struct UnknownSlot {
    Residue residue;
    int ell = 0;

    friend bool operator==(const UnknownSlot&, const UnknownSlot&) = default;
    friend auto operator<=>(const UnknownSlot&, const UnknownSlot&) = default;
};

// Primitive local Hodge numbers at one point: (residue, ell, p) -> multiplicity,
// plus the (residue, ell) slots whose values are not determined.
class LocalHodgeTable {
public:
    LocalHodgeTable() = default;
    LocalHodgeTable(SingularPoint point, TableKind kind) : point_(point), kind_(kind) {}

    SingularPoint point() const { return point_; }
    TableKind kind() const { return kind_; }

    // Accumulates; multiplicity must be positive.
    void add(const Residue& residue, int ell, int p, Multiplicity mult);
    void mark_unknown(const Residue& residue, int ell);

    const std::map<HodgeKey, Multiplicity>& entries() const { return entries_; }
    const std::set<UnknownSlot>& unknown_slots() const { return unknown_; }

    Multiplicity at(const Residue& residue, int ell, int p) const;
    bool is_unknown(const Residue& residue, int ell) const { return unknown_.contains({residue, ell}); }
    bool has_unknown(const Residue& residue) const;

    std::vector<Residue> residues() const;
    Multiplicity total_dimension() const;
    bool empty() const { return entries_.empty() && unknown_.empty(); }

    std::optional<int> min_p() const;

    friend bool operator==(const LocalHodgeTable&, const LocalHodgeTable&) = default;

private:
    SingularPoint point_;
    TableKind kind_ = TableKind::NearbyPrimitive;
    std::map<HodgeKey, Multiplicity> entries_;
    std::set<UnknownSlot> unknown_;
};

// nu_lambda^p = sum_{ell >= 0} sum_{k=0}^{ell} nu_{lambda,ell}^{p+k}.
// Vanishing-cycle tables are summed the same way.
std::int64_t nu_total_from_prim(const LocalHodgeTable& table, const Residue& residue, int p);

struct PrimCoprim {
    std::int64_t prim = 0;
    std::int64_t coprim = 0;

    friend bool operator==(const PrimCoprim&, const PrimCoprim&) = default;
};

PrimCoprim nu_prim_and_coprim(const LocalHodgeTable& table, const Residue& residue, int p);

// All non-zero nu_lambda^p for one residue.
GradedCounts nu_totals(const LocalHodgeTable& table, const Residue& residue);

// Sum over residues of nu_totals.
GradedCounts fiber_totals(const LocalHodgeTable& table);

LocalHodgeTable table_shift(const LocalHodgeTable& table, int s);

// r -> {r - c} on every residue, entries and unknown slots alike.
LocalHodgeTable table_twist_residues(const LocalHodgeTable& table, const Residue& c);

// r -> {-r}; (ell, p) untouched. Converts infinity tables between the
// exp(+2 pi i r) storage and the exp(-2 pi i gamma) exponent convention.
LocalHodgeTable table_conjugate_residues(const LocalHodgeTable& table);

// At most one (ell, p) with non-zero multiplicity per residue.
bool has_single_block_per_residue(const LocalHodgeTable& table);

} // namespace hodgehyp

#include "hodgehyp/table.hpp"

#include "hodgehyp/errors.hpp"

#include <limits>

namespace hodgehyp {

std::string SingularPoint::str() const
{
    switch (kind) {
    case Kind::Zero: return "0";
    case Kind::Infinity: return "inf";
    case Kind::Finite: return "x" + std::to_string(index);
    }
    return "?";
}

SingularPoint SingularPoint::parse(const std::string& text)
{
    if (text == "0")
        return zero();
    if (text == "inf")
        return infinity();
    if (text.size() > 1 && text[0] == 'x') {
        try {
            const int i = std::stoi(text.substr(1));
            if (i >= 1)
                return finite(i);
        } catch (const std::exception&) {
        }
    }
    throw Error(ErrorCode::Parse, "bad singular point '" + text + "'");
}

void add_graded(GradedCounts& counts, int p, std::int64_t value)
{
    if (value == 0)
        return;
    auto& slot = counts[p];
    slot += value;
    if (slot == 0)
        counts.erase(p);
}

GradedCounts shift_graded(const GradedCounts& counts, int s)
{
    GradedCounts out;
    for (const auto& [p, v] : counts)
        out.emplace(p + s, v);
    return out;
}

void LocalHodgeTable::add(const Residue& residue, int ell, int p, Multiplicity mult)
{
    if (mult <= 0)
        throw Error(ErrorCode::InvalidArgument, "multiplicity must be positive");
    if (ell < 0)
        throw Error(ErrorCode::InvalidArgument, "ell must be non-negative");
    if (is_unknown(residue, ell))
        throw Error(ErrorCode::InvalidArgument,
                    "slot (" + residue.str() + ", " + std::to_string(ell) + ") is marked unknown");
    entries_[HodgeKey{residue, ell, p}] += mult;
}

void LocalHodgeTable::mark_unknown(const Residue& residue, int ell)
{
    const auto first = entries_.lower_bound(HodgeKey{residue, ell, std::numeric_limits<int>::min()});
    if (first != entries_.end() && first->first.residue == residue && first->first.ell == ell)
        throw Error(ErrorCode::InvalidArgument,
                    "slot (" + residue.str() + ", " + std::to_string(ell) + ") already has entries");
    unknown_.insert({residue, ell});
}

Multiplicity LocalHodgeTable::at(const Residue& residue, int ell, int p) const
{
    const auto it = entries_.find(HodgeKey{residue, ell, p});
    return it == entries_.end() ? 0 : it->second;
}

bool LocalHodgeTable::has_unknown(const Residue& residue) const
{
    const auto it = unknown_.lower_bound({residue, 0});
    return it != unknown_.end() && it->residue == residue;
}

std::vector<Residue> LocalHodgeTable::residues() const
{
    std::set<Residue> seen;
    for (const auto& [key, m] : entries_)
        seen.insert(key.residue);
    for (const auto& slot : unknown_)
        seen.insert(slot.residue);
    return {seen.begin(), seen.end()};
}

Multiplicity LocalHodgeTable::total_dimension() const
{
    Multiplicity total = 0;
    for (const auto& [key, m] : entries_)
        total += m * (key.ell + 1);
    return total;
}

std::optional<int> LocalHodgeTable::min_p() const
{
    std::optional<int> best;
    for (const auto& [key, m] : entries_)
        if (!best || key.p < *best)
            best = key.p;
    return best;
}

namespace {

void require_known(const LocalHodgeTable& table, const Residue& residue)
{
    if (table.has_unknown(residue))
        throw Error(ErrorCode::UnknownData,
                    "residue " + residue.str() + " at " + table.point().str() + " has undetermined slots");
}

} // namespace

std::int64_t nu_total_from_prim(const LocalHodgeTable& table, const Residue& residue, int p)
{
    require_known(table, residue);
    std::int64_t total = 0;
    for (const auto& [key, m] : table.entries()) {
        if (key.residue != residue)
            continue;
        // entry (ell, q) feeds nu^p for q - ell <= p <= q
        if (key.p - key.ell <= p && p <= key.p)
            total += m;
    }
    return total;
}

PrimCoprim nu_prim_and_coprim(const LocalHodgeTable& table, const Residue& residue, int p)
{
    require_known(table, residue);
    PrimCoprim out;
    for (const auto& [key, m] : table.entries()) {
        if (key.residue != residue)
            continue;
        if (key.p == p)
            out.prim += m;
        if (key.p == p + key.ell)
            out.coprim += m;
    }
    return out;
}

GradedCounts nu_totals(const LocalHodgeTable& table, const Residue& residue)
{
    require_known(table, residue);
    GradedCounts out;
    for (const auto& [key, m] : table.entries()) {
        if (key.residue != residue)
            continue;
        for (int k = 0; k <= key.ell; ++k)
            add_graded(out, key.p - k, m);
    }
    return out;
}

GradedCounts fiber_totals(const LocalHodgeTable& table)
{
    GradedCounts out;
    for (const auto& r : table.residues())
        for (const auto& [p, v] : nu_totals(table, r))
            add_graded(out, p, v);
    return out;
}

LocalHodgeTable table_shift(const LocalHodgeTable& table, int s)
{
    LocalHodgeTable out(table.point(), table.kind());
    for (const auto& slot : table.unknown_slots())
        out.mark_unknown(slot.residue, slot.ell);
    for (const auto& [key, m] : table.entries())
        out.add(key.residue, key.ell, key.p + s, m);
    return out;
}

LocalHodgeTable table_twist_residues(const LocalHodgeTable& table, const Residue& c)
{
    LocalHodgeTable out(table.point(), table.kind());
    for (const auto& slot : table.unknown_slots())
        out.mark_unknown(residue_sub(slot.residue, c), slot.ell);
    for (const auto& [key, m] : table.entries())
        out.add(residue_sub(key.residue, c), key.ell, key.p, m);
    return out;
}

LocalHodgeTable table_conjugate_residues(const LocalHodgeTable& table)
{
    LocalHodgeTable out(table.point(), table.kind());
    for (const auto& slot : table.unknown_slots())
        out.mark_unknown(slot.residue.conjugate(), slot.ell);
    for (const auto& [key, m] : table.entries())
        out.add(key.residue.conjugate(), key.ell, key.p, m);
    return out;
}

bool has_single_block_per_residue(const LocalHodgeTable& table)
{
    std::map<Residue, int> blocks;
    for (const auto& [key, m] : table.entries()) {
        if (++blocks[key.residue] > 1)
            return false;
    }
    return true;
}

} // namespace hodgehyp

#include "credence/mass.hpp"

#include "credence/errors.hpp"

namespace credence {

MassFunction::MassFunction(Frame frame,
                           std::map<SubsetMask, Rational> assignments,
                           WorldMode mode)
    : frame_(std::move(frame)), focal_(std::move(assignments)), mode_(mode) {
    Rational total = 0;
    for (auto it = focal_.begin(); it != focal_.end();) {
        frame_.require_mask(it->first);
        if (it->second < 0)
            throw ValidationError("negative mass on " +
                                  frame_.format_subset(it->first));
        if (it->second == 0) {
            it = focal_.erase(it);
            continue;
        }
        if (it->first.is_empty() && mode_ == WorldMode::Closed)
            throw ValidationError("mass on the empty set in closed mode");
        total += it->second;
        ++it;
    }
    if (total != 1)
        throw ValidationError("masses sum to " + to_fraction(total) +
                              ", expected 1");
    if (empty_set_mass() == 0) mode_ = WorldMode::Closed;
}

Rational MassFunction::mass(const SubsetMask& a) const {
    frame_.require_mask(a);
    auto it = focal_.find(a);
    return it == focal_.end() ? Rational(0) : it->second;
}

Rational MassFunction::empty_set_mass() const {
    auto it = focal_.find(frame_.empty_set());
    return it == focal_.end() ? Rational(0) : it->second;
}

Rational MassFunction::bel(const SubsetMask& a) const {
    frame_.require_mask(a);
    Rational sum = 0;
    for (const auto& [s, v] : focal_)
        if (!s.is_empty() && s.subset_of(a)) sum += v;
    return sum;
}

Rational MassFunction::pl(const SubsetMask& a) const {
    frame_.require_mask(a);
    Rational sum = 0;
    for (const auto& [s, v] : focal_)
        if (s.intersects(a)) sum += v;
    return sum;
}

BeliefTable MassFunction::bel_table() const {
    const int n = frame_.size();
    std::vector<Rational> values(std::size_t{1} << n);
    for (const auto& [s, v] : focal_)
        if (!s.is_empty()) values[s.bits()] += v;
    for (int bit = 0; bit < n; ++bit) {
        const std::uint32_t step = std::uint32_t{1} << bit;
        for (std::uint32_t s = 0; s < values.size(); ++s)
            if (s & step) values[s] += values[s ^ step];
    }
    return BeliefTable{frame_, mode_, std::move(values)};
}

const Rational& BeliefTable::bel(const SubsetMask& m) const {
    frame.require_mask(m);
    return values[m.bits()];
}

MassFunction vacuous(const Frame& frame) {
    return categorical(frame, frame.full_set());
}

MassFunction categorical(const Frame& frame, const SubsetMask& a) {
    frame.require_mask(a);
    if (a.is_empty())
        throw ValidationError("categorical mass needs a nonempty subset");
    return {frame, {{a, Rational(1)}}, WorldMode::Closed};
}

MassFunction bayesian(const Frame& frame,
                      const std::map<std::string, Rational>& p) {
    std::map<SubsetMask, Rational> assignments;
    for (const auto& [name, prob] : p) {
        if (prob < 0)
            throw ValidationError("negative probability for " + name);
        assignments[frame.singleton(name)] = prob;
    }
    return {frame, std::move(assignments), WorldMode::Closed};
}

MassFunction mass_from_bel(const BeliefTable& table) {
    const int n = table.frame.size();
    if (table.values.size() != std::size_t{1} << n)
        throw ValidationError("belief table has wrong size for its frame");
    if (!table.values.empty() && table.values[0] != 0)
        throw ValidationError("bel of the empty set must be 0");

    std::vector<Rational> mobius = table.values;
    for (int bit = 0; bit < n; ++bit) {
        const std::uint32_t step = std::uint32_t{1} << bit;
        for (std::uint32_t s = 0; s < mobius.size(); ++s)
            if (s & step) mobius[s] -= mobius[s ^ step];
    }

    std::map<SubsetMask, Rational> assignments;
    Rational total = 0;
    for (std::uint32_t s = 0; s < mobius.size(); ++s) {
        if (mobius[s] == 0) continue;
        SubsetMask mask = SubsetMask::of_bits(n, s);
        if (mobius[s] < 0)
            throw ValidationError(
                "not a belief function: inverted mass of " +
                table.frame.format_subset(mask) + " is " +
                to_fraction(mobius[s]));
        assignments[mask] = mobius[s];
        total += mobius[s];
    }
    if (table.mode == WorldMode::Open && total < 1)
        assignments[table.frame.empty_set()] = 1 - total;
    return {table.frame, std::move(assignments), table.mode};
}

} // namespace credence

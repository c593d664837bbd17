#include "credence/scenario.hpp"

#include "credence/errors.hpp"

#include <algorithm>
#include <unordered_set>

namespace credence {

Scenario::Scenario(Frame outcomes, std::vector<std::string> source_names,
                   std::vector<Rational> probabilities,
                   std::vector<std::vector<int>> assignments)
    : outcomes_(std::move(outcomes)),
      source_names_(std::move(source_names)),
      probabilities_(std::move(probabilities)),
      assignments_(std::move(assignments)) {
    alive_.assign(assignments_.size(),
                  std::vector<char>(source_names_.size(), 1));
    world_killed_.assign(assignments_.size(), 0);
    world_names_.reserve(assignments_.size());
    for (std::size_t w = 0; w < assignments_.size(); ++w)
        world_names_.push_back("w" + std::to_string(w + 1));
}

Scenario Scenario::build(std::vector<std::string> outcome_labels,
                         std::vector<SourceSpec> sources) {
    Frame outcomes(std::move(outcome_labels));
    if (sources.empty()) throw ValidationError("scenario needs a source");

    std::vector<std::string> names;
    std::vector<Rational> probs;
    std::vector<std::vector<int>> options; // outcome indices per source
    std::unordered_set<std::string> seen;
    Rational total = 0;
    std::uint64_t world_count = 1;
    for (auto& spec : sources) {
        if (spec.name.empty()) throw ValidationError("empty source name");
        if (!seen.insert(spec.name).second)
            throw ValidationError("duplicate source name " + spec.name);
        if (spec.selection_probability < 0)
            throw ValidationError("negative selection probability for " +
                                  spec.name);
        if (spec.options.empty())
            throw ValidationError("source " + spec.name +
                                  " has an empty option set");
        std::vector<int> idx;
        for (const auto& o : spec.options) {
            int i = outcomes.index_of(o);
            if (std::find(idx.begin(), idx.end(), i) != idx.end())
                throw ValidationError("duplicate option " + o +
                                      " for source " + spec.name);
            idx.push_back(i);
        }
        total += spec.selection_probability;
        world_count *= idx.size();
        if (world_count > kWorldBudget)
            throw BudgetError("world enumeration exceeds budget of " +
                              std::to_string(kWorldBudget));
        names.push_back(spec.name);
        probs.push_back(spec.selection_probability);
        options.push_back(std::move(idx));
    }
    if (total != 1)
        throw ValidationError("selection probabilities sum to " +
                              to_fraction(total) + ", expected 1");

    const std::size_t k = options.size();
    std::vector<std::vector<int>> assignments;
    assignments.reserve(world_count);
    std::vector<std::size_t> pick(k, 0);
    while (true) {
        std::vector<int> row(k);
        for (std::size_t i = 0; i < k; ++i) row[i] = options[i][pick[i]];
        assignments.push_back(std::move(row));
        std::size_t pos = k;
        while (pos > 0) {
            if (++pick[pos - 1] < options[pos - 1].size()) break;
            pick[pos - 1] = 0;
            --pos;
        }
        if (pos == 0) break;
    }
    return {std::move(outcomes), std::move(names), std::move(probs),
            std::move(assignments)};
}

int Scenario::world_index(const std::string& name) const {
    auto it = std::find(world_names_.begin(), world_names_.end(), name);
    if (it == world_names_.end())
        throw ValidationError("unknown world " + name);
    return static_cast<int>(it - world_names_.begin());
}

int Scenario::source_index(const std::string& name) const {
    auto it = std::find(source_names_.begin(), source_names_.end(), name);
    if (it == source_names_.end())
        throw ValidationError("unknown source " + name);
    return static_cast<int>(it - source_names_.begin());
}

Scenario Scenario::kill_worlds(
    const std::vector<std::string>& dead_worlds) const {
    Scenario next = *this;
    for (const auto& name : dead_worlds) {
        const int w = world_index(name);
        next.world_killed_[w] = 1;
        std::fill(next.alive_[w].begin(), next.alive_[w].end(), 0);
    }
    if (std::all_of(next.world_killed_.begin(), next.world_killed_.end(),
                    [](char dead) { return dead != 0; }))
        throw ConflictError("every world is impossible");
    return next;
}

Scenario Scenario::kill_pairs(
    const std::vector<std::pair<std::string, std::string>>& dead_pairs)
    const {
    Scenario next = *this;
    for (const auto& [world, source] : dead_pairs)
        next.alive_[world_index(world)][source_index(source)] = 0;
    return next;
}

Scenario Scenario::observe_outcomes(const SubsetMask& possible) const {
    outcomes_.require_mask(possible);
    if (possible.is_empty())
        throw ValidationError("observation leaves no possible outcome");
    Scenario next = *this;
    for (int w = 0; w < world_count(); ++w)
        for (int s = 0; s < source_count(); ++s)
            if (!possible.contains(assignments_[w][s])) next.alive_[w][s] = 0;
    return next;
}

Scenario Scenario::restrict_sources(
    const std::vector<std::string>& allowed) const {
    std::vector<bool> keep(source_count(), false);
    for (const auto& name : allowed) keep[source_index(name)] = true;
    Rational total = 0;
    for (int s = 0; s < source_count(); ++s)
        if (keep[s]) total += probabilities_[s];
    if (total == 0)
        throw ConflictError("allowed sources have probability 0");
    Scenario next = *this;
    for (int s = 0; s < source_count(); ++s)
        next.probabilities_[s] =
            keep[s] ? Rational(probabilities_[s] / total) : Rational(0);
    return next;
}

MultivaluedSource Scenario::to_source() const {
    std::vector<SubsetMask> images;
    images.reserve(source_names_.size());
    for (int s = 0; s < source_count(); ++s) {
        SubsetMask image = outcomes_.empty_set();
        for (int w = 0; w < world_count(); ++w)
            if (alive_[w][s])
                image = image |
                        SubsetMask::singleton(outcomes_.size(),
                                              assignments_[w][s]);
        images.push_back(image);
    }
    return {source_names_, probabilities_, outcomes_, std::move(images)};
}

MassFunction Scenario::induced_mass(Normalize normalize) const {
    return credence::induced_mass(to_source(), normalize);
}

Scenario soldiers_scenario() {
    return Scenario::build(
        {"P1", "P2", "P3"},
        {{"S1", Rational(1, 3), {"P1", "P2"}},
         {"S2", Rational(1, 3), {"P1", "P2", "P3"}},
         {"S3", Rational(1, 3), {"P1"}}});
}

MassFunction soldiers_mass() {
    return soldiers_scenario().induced_mass(Normalize::Yes);
}

} // namespace credence

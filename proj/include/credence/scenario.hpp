#pragma once

#include "credence/conditioning.hpp"
#include "credence/frame.hpp"
#include "credence/mass.hpp"
#include "credence/source.hpp"

#include <string>
#include <utility>
#include <vector>

namespace credence {

// Cap on the enumerated world count (Cartesian product of option sets).
inline constexpr std::uint64_t kWorldBudget = std::uint64_t{1} << 20;

struct SourceSpec {
    std::string name;
    Rational selection_probability;
    std::vector<std::string> options; // outcomes this source may pick
};

// Possible-worlds table: every world assigns one outcome to every source,
// worlds enumerated as the Cartesian product of the option sets (last
// source varies fastest) and named w1, w2, ... in that order. Evidence
// shrinks the set of alive (world, source) pairs or rescales the selection
// probabilities; scenarios are immutable and revisions return new values.
class Scenario {
public:
    static Scenario build(std::vector<std::string> outcome_labels,
                          std::vector<SourceSpec> sources);

    const Frame& outcomes() const { return outcomes_; }
    int world_count() const { return static_cast<int>(assignments_.size()); }
    int source_count() const { return static_cast<int>(source_names_.size()); }

    const std::string& world_name(int w) const { return world_names_[w]; }
    int world_index(const std::string& name) const;
    const std::string& source_name(int s) const { return source_names_[s]; }
    int source_index(const std::string& name) const;

    // Outcome index the source picked in this world.
    int assignment(int world, int source) const {
        return assignments_[world][source];
    }
    bool pair_alive(int world, int source) const {
        return alive_[world][source] != 0;
    }
    bool world_alive(int world) const { return !world_killed_[world]; }
    const std::vector<Rational>& selection_probabilities() const {
        return probabilities_;
    }

    // Whole worlds become impossible; their pairs die with them. Errors if
    // no world would remain.
    Scenario kill_worlds(const std::vector<std::string>& dead_worlds) const;

    // Individual (world, source) pairs become impossible; probabilities
    // and worlds are untouched. Killing a dead pair is a no-op.
    Scenario kill_pairs(
        const std::vector<std::pair<std::string, std::string>>& dead_pairs)
        const;

    // Pair-level reading of an outcome observation: kills every pair whose
    // assigned outcome falls outside `possible`.
    Scenario observe_outcomes(const SubsetMask& possible) const;

    // Probabilistic revision of the selection: probabilities conditioned
    // on the allowed sources, pairs untouched.
    Scenario restrict_sources(const std::vector<std::string>& allowed) const;

    // The evidence space read off the table: one point per source, image =
    // outcomes it still picks in some alive pair.
    MultivaluedSource to_source() const;
    MassFunction induced_mass(Normalize normalize) const;

private:
    Frame outcomes_;
    std::vector<std::string> source_names_;
    std::vector<Rational> probabilities_;
    std::vector<std::vector<int>> assignments_; // [world][source]
    std::vector<std::vector<char>> alive_;      // [world][source]
    std::vector<char> world_killed_;
    std::vector<std::string> world_names_;

    Scenario(Frame outcomes, std::vector<std::string> source_names,
             std::vector<Rational> probabilities,
             std::vector<std::vector<int>> assignments);
};

// The built-in drill: three guards, three posts, uniform selection; the
// worlds table this produces is the --demo soldiers fixture.
Scenario soldiers_scenario();

// The induced initial mass of the soldiers drill:
// m({P1}) = m({P1,P2}) = m({P1,P2,P3}) = 1/3.
MassFunction soldiers_mass();

} // namespace credence

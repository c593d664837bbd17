#pragma once

#include "credence/frame.hpp"
#include "credence/rational.hpp"

#include <map>
#include <vector>

namespace credence {

// Closed world: no weight may sit on the empty set. Open world: the empty
// set may carry the unnormalized conflict left over by mass transfer.
enum class WorldMode { Closed, Open };

struct BeliefTable;

// Basic belief masses on the focal subsets of a frame. Validated at
// construction: every stored mass is strictly positive, the total is
// exactly 1, and closed-world masses carry nothing on the empty set.
//
// A mass whose empty-set weight is zero is canonically closed, so open
// masses always carry positive conflict weight; this keeps identities like
// d_condition(m, full, open) == m exact.
class MassFunction {
public:
    MassFunction(Frame frame, std::map<SubsetMask, Rational> assignments,
                 WorldMode mode);

    const Frame& frame() const { return frame_; }
    WorldMode mode() const { return mode_; }

    // Focal subsets with their masses, ascending mask order; includes the
    // empty set in open mode.
    const std::map<SubsetMask, Rational>& focal() const { return focal_; }

    Rational mass(const SubsetMask& a) const; // 0 when a is not focal
    Rational empty_set_mass() const;

    // Sum of masses on nonempty subsets of a (the empty set never counts).
    Rational bel(const SubsetMask& a) const;
    // Sum of masses on focal sets meeting a; equals bel(full) - bel(~a).
    Rational pl(const SubsetMask& a) const;

    // Dense bel over all 2^n subsets via the subset-lattice zeta transform.
    BeliefTable bel_table() const;

    bool operator==(const MassFunction& o) const = default;

private:
    Frame frame_;
    std::map<SubsetMask, Rational> focal_;
    WorldMode mode_;
};

// Dense bel values for every subset of the frame, indexed by mask bits.
struct BeliefTable {
    Frame frame;
    WorldMode mode;
    std::vector<Rational> values; // size 2^n

    const Rational& bel(const SubsetMask& m) const;
};

// m(full) = 1: total ignorance, the identity of Dempster combination.
MassFunction vacuous(const Frame& frame);

// All mass on one subset.
MassFunction categorical(const Frame& frame, const SubsetMask& a);

// Mass on singletons only; bel = pl = the additive probability p.
MassFunction bayesian(const Frame& frame,
                      const std::map<std::string, Rational>& p);

// Möbius inversion of a belief table; rejects tables that are not belief
// functions (some inverted mass negative). Open tables reconstitute the
// empty-set weight as 1 - bel(full).
MassFunction mass_from_bel(const BeliefTable& table);

} // namespace credence

#pragma once

#include "credence/mass.hpp"

namespace credence {

enum class ConditioningRule { DempsterNormalized, DempsterOpen, Robust };

enum class Normalize { Yes, No };

// Lower/upper probability bounds produced by a conditioning rule.
struct IntervalResult {
    Rational lower;
    Rational upper;
    ConditioningRule rule;

    bool operator==(const IntervalResult& o) const = default;
};

IntervalResult make_interval(Rational lower, Rational upper,
                             ConditioningRule rule);

// Mass-transfer result plus the conflict weight: the weight discarded by
// renormalization, or (open world) the weight left sitting on the empty set.
struct DempsterOutcome {
    MassFunction mass;
    Rational conflict;
};

// Dempster's rule of conditioning: every focal mass m(A) moves to A∩B.
// Normalized: the empty-set weight is discarded and the rest rescaled
// (errors when pl(B) = 0). Unnormalized: the empty-set weight is retained.
DempsterOutcome d_condition(const MassFunction& m, const SubsetMask& b,
                            Normalize normalize);

// Closed forms for the normalized rule:
//   lower = (bel(A∪~B) - bel(~B)) / pl(B),  upper = pl(A∩B) / pl(B).
// Agrees exactly with bel/pl of d_condition(m, B, Normalize::Yes).
IntervalResult d_condition_closed_form(const MassFunction& m,
                                       const SubsetMask& a,
                                       const SubsetMask& b);

// Envelope conditioning over the compatible credal set:
//   lower = bel(A∩B) / (bel(A∩B) + pl(~A∩B)),
//   upper = pl(A∩B) / (pl(A∩B) + bel(~A∩B)),
// with the degenerate cases resolved to the exact envelope: when
// pl(A∩B) = 0 both bounds are 0; when bel(A∩B) = 0 the lower bound is 0
// unless pl(~A∩B) = 0 too, in which case every surviving distribution
// gives A∩B all of B's weight and the lower bound is 1.
IntervalResult g_condition(const MassFunction& m, const SubsetMask& a,
                           const SubsetMask& b);

// Dempster's rule of combination (orthogonal sum).
DempsterOutcome combine_dempster(const MassFunction& m1,
                                 const MassFunction& m2, Normalize normalize);

struct RuleComparison {
    IntervalResult dempster;
    IntervalResult robust;

    bool dempster_within_robust() const;
};

// D and G answers for the same conditional query.
RuleComparison compare_rules(const MassFunction& m, const SubsetMask& a,
                             const SubsetMask& b);

} // namespace credence

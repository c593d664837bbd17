#pragma once

#include "credence/conditioning.hpp"
#include "credence/mass.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace credence {

// Hard cap on the number of focal-mass allocations enumerated per mass.
inline constexpr std::uint64_t kAllocationBudget = 1'000'000;

// Largest frame verify_against_closed_forms will sweep (the pair loop
// visits 4^n subset pairs).
inline constexpr int kVerifyMaxFrameSize = 6;

// One extreme point of the credal set: the distribution obtained by
// handing each focal mass wholly to one of its own elements.
struct AllocationVertex {
    std::vector<Rational> distribution; // by frame index, sums to 1
    // focal subset -> frame index of the element that received its mass;
    // for duplicated distributions, the first allocation in enumeration
    // order is kept.
    std::vector<std::pair<SubsetMask, int>> allocation;
};

// Deduplicated extreme points of the probability polytope compatible with
// a closed-world mass; vertices are sorted by distribution, so output is
// deterministic however they were produced.
class CredalVertexSet {
public:
    CredalVertexSet(MassFunction mass, std::vector<AllocationVertex> vertices)
        : mass_(std::move(mass)), vertices_(std::move(vertices)) {}

    const MassFunction& mass() const { return mass_; }
    const std::vector<AllocationVertex>& vertices() const { return vertices_; }

    Rational probability_of(const AllocationVertex& v,
                            const SubsetMask& a) const;

private:
    MassFunction mass_;
    std::vector<AllocationVertex> vertices_;
};

// Brute-force ground truth for the compatible-distribution polytope. Errors
// on open-world masses (the empty set cannot be allocated) and when the
// product of focal-set sizes exceeds the allocation budget.
CredalVertexSet enumerate_vertices(const MassFunction& m);

// (min, max) of P(A) over the vertices; a linear objective attains its
// polytope extremes at vertices, so this is the exact envelope.
IntervalResult envelope(const CredalVertexSet& v, const SubsetMask& a);

// (min, max) of P(A∩B)/P(B) over the vertices with P(B) > 0; the ratio is
// linear-fractional, so vertex extremes are again exact. Errors when every
// vertex gives B probability 0.
IntervalResult conditional_envelope(const CredalVertexSet& v,
                                    const SubsetMask& a, const SubsetMask& b);

struct VerificationReport {
    std::size_t masses_checked = 0;
    std::size_t envelope_checks = 0;
    std::size_t conditional_checks = 0;
    std::size_t containment_checks = 0;
    std::size_t transfer_checks = 0;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
    void merge(const VerificationReport& o);
};

// Sweeps every subset pair (A, B) with pl(B) > 0 and records any
// disagreement between:
//   - envelope(A) and (bel(A), pl(A)),
//   - conditional_envelope(A, B) and g_condition(A, B),
//   - d_condition_closed_form(A, B) and bel/pl of the transferred mass,
// plus any D interval not contained in its G interval. Violations are
// report content; the call itself only throws on budget/validity limits.
VerificationReport verify_against_closed_forms(const MassFunction& m);

} // namespace credence

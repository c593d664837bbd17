#include "credence/conditioning.hpp"

#include "credence/errors.hpp"

namespace credence {

IntervalResult make_interval(Rational lower, Rational upper,
                             ConditioningRule rule) {
    if (lower < 0 || lower > upper || upper > 1)
        throw ValidationError("interval bounds out of order: [" +
                              to_fraction(lower) + ", " + to_fraction(upper) +
                              "]");
    return {std::move(lower), std::move(upper), rule};
}

namespace {

MassFunction renormalized(const Frame& frame,
                          std::map<SubsetMask, Rational> acc,
                          const Rational& conflict) {
    acc.erase(frame.empty_set());
    const Rational keep = 1 - conflict;
    for (auto& [s, v] : acc) v /= keep;
    return {frame, std::move(acc), WorldMode::Closed};
}

} // namespace

DempsterOutcome d_condition(const MassFunction& m, const SubsetMask& b,
                            Normalize normalize) {
    m.frame().require_mask(b);
    if (b.is_empty())
        throw ValidationError("cannot condition on the empty set");

    std::map<SubsetMask, Rational> acc;
    for (const auto& [s, v] : m.focal()) acc[s & b] += v;

    Rational conflict = 0;
    if (auto it = acc.find(m.frame().empty_set()); it != acc.end())
        conflict = it->second;

    if (normalize == Normalize::No)
        return {MassFunction(m.frame(), std::move(acc), WorldMode::Open),
                conflict};
    if (conflict == 1)
        throw ConflictError("conditioning on " + m.frame().format_subset(b) +
                            " is undefined: pl = 0 (total conflict)");
    return {renormalized(m.frame(), std::move(acc), conflict), conflict};
}

IntervalResult d_condition_closed_form(const MassFunction& m,
                                       const SubsetMask& a,
                                       const SubsetMask& b) {
    m.frame().require_mask(a);
    m.frame().require_mask(b);
    const Rational pl_b = m.pl(b);
    if (pl_b == 0)
        throw ConflictError("conditioning on " + m.frame().format_subset(b) +
                            " is undefined: pl = 0");
    Rational lower = (m.bel(a | ~b) - m.bel(~b)) / pl_b;
    Rational upper = m.pl(a & b) / pl_b;
    return make_interval(std::move(lower), std::move(upper),
                         ConditioningRule::DempsterNormalized);
}

IntervalResult g_condition(const MassFunction& m, const SubsetMask& a,
                           const SubsetMask& b) {
    m.frame().require_mask(a);
    m.frame().require_mask(b);
    if (m.pl(b) == 0)
        throw ConflictError("conditioning on " + m.frame().format_subset(b) +
                            " is undefined: pl = 0");

    const SubsetMask in = a & b;
    const SubsetMask out = ~a & b;
    const Rational pl_in = m.pl(in);
    if (pl_in == 0)
        return make_interval(0, 0, ConditioningRule::Robust);

    Rational upper = pl_in / (pl_in + m.bel(out));
    const Rational bel_in = m.bel(in);
    Rational lower;
    if (bel_in > 0)
        lower = bel_in / (bel_in + m.pl(out));
    else
        lower = m.pl(out) == 0 ? Rational(1) : Rational(0);
    return make_interval(std::move(lower), std::move(upper),
                         ConditioningRule::Robust);
}

DempsterOutcome combine_dempster(const MassFunction& m1,
                                 const MassFunction& m2, Normalize normalize) {
    if (!(m1.frame() == m2.frame()))
        throw ValidationError("cannot combine masses over different frames");

    std::map<SubsetMask, Rational> acc;
    for (const auto& [s1, v1] : m1.focal())
        for (const auto& [s2, v2] : m2.focal()) acc[s1 & s2] += v1 * v2;

    Rational conflict = 0;
    if (auto it = acc.find(m1.frame().empty_set()); it != acc.end())
        conflict = it->second;

    if (normalize == Normalize::No)
        return {MassFunction(m1.frame(), std::move(acc), WorldMode::Open),
                conflict};
    if (conflict == 1)
        throw ConflictError("combination is undefined: total conflict");
    return {renormalized(m1.frame(), std::move(acc), conflict), conflict};
}

bool RuleComparison::dempster_within_robust() const {
    return robust.lower <= dempster.lower && dempster.upper <= robust.upper;
}

RuleComparison compare_rules(const MassFunction& m, const SubsetMask& a,
                             const SubsetMask& b) {
    return {d_condition_closed_form(m, a, b), g_condition(m, a, b)};
}

} // namespace credence

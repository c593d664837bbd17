#include "credence/credal.hpp"

#include "credence/errors.hpp"

#include <map>
#include <utility>

namespace credence {

Rational CredalVertexSet::probability_of(const AllocationVertex& v,
                                         const SubsetMask& a) const {
    mass_.frame().require_mask(a);
    Rational sum = 0;
    for (int i : a.elements()) sum += v.distribution[i];
    return sum;
}

CredalVertexSet enumerate_vertices(const MassFunction& m) {
    if (m.mode() == WorldMode::Open)
        throw ValidationError(
            "open-world mass has no credal set: the empty set cannot be "
            "allocated");

    std::vector<SubsetMask> focal_sets;
    std::vector<std::vector<int>> choices;
    std::uint64_t combinations = 1;
    for (const auto& [s, v] : m.focal()) {
        focal_sets.push_back(s);
        choices.push_back(s.elements());
        combinations *= choices.back().size();
        if (combinations > kAllocationBudget)
            throw BudgetError("allocation enumeration exceeds budget of " +
                              std::to_string(kAllocationBudget));
    }

    const int n = m.frame().size();
    const auto k = focal_sets.size();
    // Keyed by distribution: deduplicates and yields the canonical sort.
    std::map<std::vector<Rational>, std::vector<std::pair<SubsetMask, int>>>
        seen;

    std::vector<std::size_t> pick(k, 0);
    while (true) {
        std::vector<Rational> dist(n);
        std::vector<std::pair<SubsetMask, int>> allocation;
        allocation.reserve(k);
        for (std::size_t i = 0; i < k; ++i) {
            const int element = choices[i][pick[i]];
            dist[element] += m.focal().at(focal_sets[i]);
            allocation.emplace_back(focal_sets[i], element);
        }
        seen.emplace(std::move(dist), std::move(allocation));

        // Odometer over the per-focal-set element choices, last set fastest.
        std::size_t pos = k;
        while (pos > 0) {
            if (++pick[pos - 1] < choices[pos - 1].size()) break;
            pick[pos - 1] = 0;
            --pos;
        }
        if (pos == 0) break;
    }

    std::vector<AllocationVertex> vertices;
    vertices.reserve(seen.size());
    for (auto& [dist, allocation] : seen)
        vertices.push_back({dist, allocation});
    return {m, std::move(vertices)};
}

IntervalResult envelope(const CredalVertexSet& v, const SubsetMask& a) {
    if (v.vertices().empty())
        throw ValidationError("empty vertex set has no envelope");
    bool first = true;
    Rational lo, hi;
    for (const auto& vertex : v.vertices()) {
        Rational p = v.probability_of(vertex, a);
        if (first || p < lo) lo = p;
        if (first || p > hi) hi = p;
        first = false;
    }
    return make_interval(std::move(lo), std::move(hi),
                         ConditioningRule::Robust);
}

IntervalResult conditional_envelope(const CredalVertexSet& v,
                                    const SubsetMask& a, const SubsetMask& b) {
    bool first = true;
    Rational lo, hi;
    for (const auto& vertex : v.vertices()) {
        Rational pb = v.probability_of(vertex, b);
        if (pb == 0) continue;
        Rational ratio = v.probability_of(vertex, a & b) / pb;
        if (first || ratio < lo) lo = ratio;
        if (first || ratio > hi) hi = ratio;
        first = false;
    }
    if (first)
        throw ConflictError("conditioning on " +
                            v.mass().frame().format_subset(b) +
                            " is undefined: P = 0 at every vertex");
    return make_interval(std::move(lo), std::move(hi),
                         ConditioningRule::Robust);
}

void VerificationReport::merge(const VerificationReport& o) {
    masses_checked += o.masses_checked;
    envelope_checks += o.envelope_checks;
    conditional_checks += o.conditional_checks;
    containment_checks += o.containment_checks;
    transfer_checks += o.transfer_checks;
    violations.insert(violations.end(), o.violations.begin(),
                      o.violations.end());
}

namespace {

std::string interval_text(const IntervalResult& i) {
    return "[" + to_fraction(i.lower) + ", " + to_fraction(i.upper) + "]";
}

} // namespace

VerificationReport verify_against_closed_forms(const MassFunction& m) {
    const Frame& frame = m.frame();
    const int n = frame.size();
    if (n > kVerifyMaxFrameSize)
        throw BudgetError("verification sweeps 4^n subset pairs; frame size " +
                          std::to_string(n) + " exceeds " +
                          std::to_string(kVerifyMaxFrameSize));

    const CredalVertexSet verts = enumerate_vertices(m);
    VerificationReport report;
    report.masses_checked = 1;

    const std::uint32_t subsets = std::uint32_t{1} << n;
    for (std::uint32_t bits = 0; bits < subsets; ++bits) {
        const SubsetMask a = SubsetMask::of_bits(n, bits);
        const IntervalResult env = envelope(verts, a);
        ++report.envelope_checks;
        if (env.lower != m.bel(a) || env.upper != m.pl(a))
            report.violations.push_back(
                "envelope of " + frame.format_subset(a) + " is " +
                interval_text(env) + " but (bel, pl) = [" +
                to_fraction(m.bel(a)) + ", " + to_fraction(m.pl(a)) + "]");
    }

    for (std::uint32_t b_bits = 1; b_bits < subsets; ++b_bits) {
        const SubsetMask b = SubsetMask::of_bits(n, b_bits);
        if (m.pl(b) == 0) continue;
        const MassFunction transferred =
            d_condition(m, b, Normalize::Yes).mass;
        for (std::uint32_t a_bits = 0; a_bits < subsets; ++a_bits) {
            const SubsetMask a = SubsetMask::of_bits(n, a_bits);
            const std::string pair_text =
                "(A=" + frame.format_subset(a) + ", B=" +
                frame.format_subset(b) + ")";

            const IntervalResult g = g_condition(m, a, b);
            const IntervalResult oracle = conditional_envelope(verts, a, b);
            ++report.conditional_checks;
            if (!(g == oracle))
                report.violations.push_back(
                    "conditional envelope " + interval_text(oracle) +
                    " differs from G closed form " + interval_text(g) +
                    " at " + pair_text);

            const IntervalResult d = d_condition_closed_form(m, a, b);
            ++report.transfer_checks;
            if (d.lower != transferred.bel(a) || d.upper != transferred.pl(a))
                report.violations.push_back(
                    "D closed form " + interval_text(d) +
                    " differs from transferred mass [" +
                    to_fraction(transferred.bel(a)) + ", " +
                    to_fraction(transferred.pl(a)) + "] at " + pair_text);

            ++report.containment_checks;
            if (d.lower < g.lower || d.upper > g.upper)
                report.violations.push_back("D interval " + interval_text(d) +
                                            " not within G interval " +
                                            interval_text(g) + " at " +
                                            pair_text);
        }
    }
    return report;
}

} // namespace credence

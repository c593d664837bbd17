#pragma once

// Shared fixtures and independent oracles for the test suites.
//
// The fixtures rebuild the three-guards drill by hand so that engine output
// can be checked against literal values rather than against itself.  The
// bel/pl oracles walk the whole powerset instead of the focal map, taking a
// different code path from the library.

#include "credence/mass.hpp"
#include "credence/source.hpp"

#include <cstdint>
#include <vector>

namespace credence::testing {

inline Frame posts_frame() { return Frame({"P1", "P2", "P3"}); }

inline MassFunction posts_mass() {
    const Frame f = posts_frame();
    return {f,
            {{f.subset({"P1"}), Rational(1, 3)},
             {f.subset({"P1", "P2"}), Rational(1, 3)},
             {f.full_set(), Rational(1, 3)}},
            WorldMode::Closed};
}

inline MultivaluedSource guards_source() {
    const Frame f = posts_frame();
    return {{"S1", "S2", "S3"},
            {Rational(1, 3), Rational(1, 3), Rational(1, 3)},
            f,
            {f.subset({"P1", "P2"}), f.full_set(), f.subset({"P1"})}};
}

inline Rational bel_oracle(const MassFunction& m, const SubsetMask& a) {
    Rational total = 0;
    const int n = m.frame().size();
    for (std::uint32_t bits = 1; bits < (std::uint32_t{1} << n); ++bits) {
        const SubsetMask x = SubsetMask::of_bits(n, bits);
        if (x.subset_of(a)) total += m.mass(x);
    }
    return total;
}

inline Rational pl_oracle(const MassFunction& m, const SubsetMask& a) {
    Rational total = 0;
    const int n = m.frame().size();
    for (std::uint32_t bits = 1; bits < (std::uint32_t{1} << n); ++bits) {
        const SubsetMask x = SubsetMask::of_bits(n, bits);
        if (x.intersects(a)) total += m.mass(x);
    }
    return total;
}

inline std::vector<SubsetMask> all_subsets(const Frame& f) {
    std::vector<SubsetMask> out;
    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << f.size());
         ++bits)
        out.push_back(SubsetMask::of_bits(f.size(), bits));
    return out;
}

inline std::vector<SubsetMask> nonempty_subsets(const Frame& f) {
    auto out = all_subsets(f);
    out.erase(out.begin());
    return out;
}

} // namespace credence::testing

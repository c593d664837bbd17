#pragma once

#include "credence/frame.hpp"
#include "credence/mass.hpp"
#include "credence/source.hpp"

#include <cstdint>
#include <random>

namespace credence {

// Deterministic generation for seeded property runs. Every draw goes
// through uniform_below (rejection sampling on the raw mt19937_64 stream),
// so a seed pins the exact sequence on every platform.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

// Frame with labels "e1".."en", size drawn from 1..max_size.
Frame random_frame(std::mt19937_64& rng, int max_size);

// Random mass over the frame: the focal count is uniform on
// 1..min(2^n - 1, max_focal), focal subsets are distinct nonempty draws,
// and masses come from integer weights uniform on 1..weight_grid,
// normalized exactly.
MassFunction random_mass(std::mt19937_64& rng, const Frame& frame,
                         int max_focal = 8, int weight_grid = 16);

// Any subset, the empty one included.
SubsetMask random_subset(std::mt19937_64& rng, const Frame& frame);
SubsetMask random_nonempty_subset(std::mt19937_64& rng, const Frame& frame);

// Source with 1..max_sources points (labels "x1"..), grid-normalized
// probabilities and unrestricted images, so empty images do occur.
MultivaluedSource random_source(std::mt19937_64& rng, int max_sources,
                                int max_frame_size);

} // namespace credence

#pragma once

#include "credence/conditioning.hpp"
#include "credence/frame.hpp"
#include "credence/mass.hpp"
#include "credence/rational.hpp"

#include <string>
#include <vector>

namespace credence {

// An evidence space X carrying a probability for each point and mapping
// every point to a subset of the target frame (its image). Source labels
// are ordered; all state is immutable after construction.
class MultivaluedSource {
public:
    MultivaluedSource(std::vector<std::string> source_labels,
                      std::vector<Rational> probabilities, Frame target,
                      std::vector<SubsetMask> images);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int i) const { return labels_[i]; }
    int index_of(const std::string& name) const;
    const std::vector<Rational>& probabilities() const { return p_; }
    const Rational& probability(int i) const { return p_[i]; }
    const Frame& target() const { return target_; }
    const std::vector<SubsetMask>& images() const { return images_; }
    const SubsetMask& image(int i) const { return images_[i]; }

    bool operator==(const MultivaluedSource& o) const = default;

private:
    std::vector<std::string> labels_;
    std::vector<Rational> p_;
    Frame target_;
    std::vector<SubsetMask> images_;
};

// m(A) = total probability of the points whose image is A. Empty images
// feed the empty set; normalized, their weight is rescaled away (errors
// when every image is empty), unnormalized it stays as conflict.
MassFunction induced_mass(const MultivaluedSource& s, Normalize normalize);

// Images intersected with b; point probabilities untouched. The induced
// mass of the result equals d_condition of the original induced mass.
MultivaluedSource condition_mapping(const MultivaluedSource& s,
                                    const SubsetMask& b);

// Probabilities conditioned on the allowed points (zeroed elsewhere,
// rescaled to 1); images untouched.
MultivaluedSource condition_source(const MultivaluedSource& s,
                                   const std::vector<std::string>& allowed);

// Envelope conditioning read at the source level; evaluates g_condition on
// the unnormalized induced mass, so empty-image weight stays out of both
// bel and pl exactly as the source-level bounds prescribe.
IntervalResult g_condition_source(const MultivaluedSource& s,
                                  const SubsetMask& a, const SubsetMask& b);

} // namespace credence

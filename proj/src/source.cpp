#include "credence/source.hpp"

#include "credence/errors.hpp"

#include <algorithm>
#include <unordered_set>

namespace credence {

MultivaluedSource::MultivaluedSource(std::vector<std::string> source_labels,
                                     std::vector<Rational> probabilities,
                                     Frame target,
                                     std::vector<SubsetMask> images)
    : labels_(std::move(source_labels)),
      p_(std::move(probabilities)),
      target_(std::move(target)),
      images_(std::move(images)) {
    if (labels_.empty()) throw ValidationError("source space is empty");
    std::unordered_set<std::string> seen;
    for (const auto& l : labels_) {
        if (l.empty()) throw ValidationError("empty source label");
        if (!seen.insert(l).second)
            throw ValidationError("duplicate source label " + l);
    }
    if (p_.size() != labels_.size() || images_.size() != labels_.size())
        throw ValidationError(
            "source labels, probabilities and images must align");
    Rational total = 0;
    for (std::size_t i = 0; i < p_.size(); ++i) {
        if (p_[i] < 0)
            throw ValidationError("negative probability for " + labels_[i]);
        total += p_[i];
    }
    if (total != 1)
        throw ValidationError("source probabilities sum to " +
                              to_fraction(total) + ", expected 1");
    for (const auto& img : images_) target_.require_mask(img);
}

int MultivaluedSource::index_of(const std::string& name) const {
    auto it = std::find(labels_.begin(), labels_.end(), name);
    if (it == labels_.end())
        throw ValidationError("unknown source label " + name);
    return static_cast<int>(it - labels_.begin());
}

MassFunction induced_mass(const MultivaluedSource& s, Normalize normalize) {
    std::map<SubsetMask, Rational> acc;
    for (int i = 0; i < s.size(); ++i) acc[s.image(i)] += s.probability(i);

    if (normalize == Normalize::No)
        return {s.target(), std::move(acc), WorldMode::Open};

    Rational empty_weight = 0;
    if (auto it = acc.find(s.target().empty_set()); it != acc.end()) {
        empty_weight = it->second;
        acc.erase(it);
    }
    if (empty_weight == 1)
        throw ConflictError(
            "every image with positive probability is empty");
    for (auto& [mask, v] : acc) v /= 1 - empty_weight;
    return {s.target(), std::move(acc), WorldMode::Closed};
}

MultivaluedSource condition_mapping(const MultivaluedSource& s,
                                    const SubsetMask& b) {
    s.target().require_mask(b);
    std::vector<SubsetMask> images = s.images();
    for (auto& img : images) img = img & b;
    return {s.labels(), s.probabilities(), s.target(), std::move(images)};
}

MultivaluedSource condition_source(const MultivaluedSource& s,
                                   const std::vector<std::string>& allowed) {
    std::vector<bool> keep(s.size(), false);
    for (const auto& name : allowed) keep[s.index_of(name)] = true;

    Rational total = 0;
    for (int i = 0; i < s.size(); ++i)
        if (keep[i]) total += s.probability(i);
    if (total == 0)
        throw ConflictError("allowed source set has probability 0");

    std::vector<Rational> p(s.size());
    for (int i = 0; i < s.size(); ++i)
        if (keep[i]) p[i] = s.probability(i) / total;
    return {s.labels(), std::move(p), s.target(), s.images()};
}

IntervalResult g_condition_source(const MultivaluedSource& s,
                                  const SubsetMask& a, const SubsetMask& b) {
    return g_condition(induced_mass(s, Normalize::No), a, b);
}

} // namespace credence

#include "credence/frame.hpp"

#include "credence/errors.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace credence {

SubsetMask SubsetMask::of_bits(int frame_size, std::uint32_t bits) {
    if (frame_size < 1 || frame_size > kMaxFrameSize)
        throw ValidationError("frame size out of range");
    if (bits >> frame_size)
        throw ValidationError("subset mask has bits outside its frame");
    return {frame_size, bits};
}

int SubsetMask::count() const { return std::popcount(bits_); }

void SubsetMask::require_same_frame(const SubsetMask& o) const {
    if (n_ != o.n_)
        throw ValidationError("frame mismatch between subset masks");
}

bool SubsetMask::subset_of(const SubsetMask& o) const {
    require_same_frame(o);
    return (bits_ & ~o.bits_) == 0;
}

bool SubsetMask::intersects(const SubsetMask& o) const {
    require_same_frame(o);
    return (bits_ & o.bits_) != 0;
}

SubsetMask SubsetMask::operator|(const SubsetMask& o) const {
    require_same_frame(o);
    return {n_, bits_ | o.bits_};
}

SubsetMask SubsetMask::operator&(const SubsetMask& o) const {
    require_same_frame(o);
    return {n_, bits_ & o.bits_};
}

std::vector<int> SubsetMask::elements() const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i)
        if (contains(i)) out.push_back(i);
    return out;
}

Frame::Frame(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty())
        throw ValidationError("frame needs at least one label");
    if (labels_.size() > kMaxFrameSize)
        throw ValidationError("frame size exceeds " +
                              std::to_string(kMaxFrameSize) + " labels");
    std::unordered_set<std::string> seen;
    for (const auto& l : labels_) {
        if (l.empty()) throw ValidationError("empty outcome label");
        if (!seen.insert(l).second)
            throw ValidationError("duplicate label " + l);
    }
}

int Frame::index_of(const std::string& name) const {
    auto it = std::find(labels_.begin(), labels_.end(), name);
    if (it == labels_.end()) throw ValidationError("unknown label " + name);
    return static_cast<int>(it - labels_.begin());
}

SubsetMask Frame::subset(const std::vector<std::string>& names) const {
    std::uint32_t bits = 0;
    for (const auto& name : names) bits |= std::uint32_t{1} << index_of(name);
    return SubsetMask::of_bits(size(), bits);
}

std::vector<std::string> Frame::names_of(const SubsetMask& m) const {
    require_mask(m);
    std::vector<std::string> out;
    for (int i : m.elements()) out.push_back(labels_[i]);
    return out;
}

std::string Frame::format_subset(const SubsetMask& m) const {
    require_mask(m);
    std::string out = "{";
    bool first = true;
    for (int i : m.elements()) {
        if (!first) out += ",";
        out += labels_[i];
        first = false;
    }
    return out + "}";
}

void Frame::require_mask(const SubsetMask& m) const {
    if (m.frame_size() != size())
        throw ValidationError("subset mask does not belong to this frame");
}

} // namespace credence

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace credence {

inline constexpr int kMaxFrameSize = 20;

// Subset of a frame's outcomes, stored as an n-bit mask. The frame size
// travels with the mask so that masks built against frames of different
// sizes cannot be combined silently.
class SubsetMask {
public:
    SubsetMask() = default;

    static SubsetMask empty(int frame_size) { return {frame_size, 0}; }
    static SubsetMask full(int frame_size) {
        return {frame_size, (std::uint32_t{1} << frame_size) - 1};
    }
    static SubsetMask singleton(int frame_size, int index) {
        return {frame_size, std::uint32_t{1} << index};
    }
    // Raw-bits constructor; bits must fit in frame_size bits.
    static SubsetMask of_bits(int frame_size, std::uint32_t bits);

    std::uint32_t bits() const { return bits_; }
    int frame_size() const { return n_; }

    bool is_empty() const { return bits_ == 0; }
    bool is_full() const { return *this == full(n_); }
    int count() const;
    bool contains(int index) const { return (bits_ >> index) & 1u; }
    bool subset_of(const SubsetMask& o) const;
    bool intersects(const SubsetMask& o) const;

    SubsetMask operator|(const SubsetMask& o) const;
    SubsetMask operator&(const SubsetMask& o) const;
    SubsetMask operator~() const { return {n_, bits_ ^ full(n_).bits_}; }

    // Indices of the set bits, ascending.
    std::vector<int> elements() const;

    auto operator<=>(const SubsetMask&) const = default;

private:
    SubsetMask(int n, std::uint32_t bits)
        : n_(static_cast<std::uint8_t>(n)), bits_(bits) {}

    void require_same_frame(const SubsetMask& o) const;

    std::uint8_t n_ = 0;
    std::uint32_t bits_ = 0;
};

// Ordered finite set of distinct outcome labels. Immutable after
// construction; subsets over it are SubsetMask values.
class Frame {
public:
    explicit Frame(std::vector<std::string> labels);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int index) const { return labels_[index]; }
    int index_of(const std::string& name) const; // throws on unknown label

    SubsetMask empty_set() const { return SubsetMask::empty(size()); }
    SubsetMask full_set() const { return SubsetMask::full(size()); }
    SubsetMask singleton(const std::string& name) const {
        return SubsetMask::singleton(size(), index_of(name));
    }
    SubsetMask subset(const std::vector<std::string>& names) const;

    std::vector<std::string> names_of(const SubsetMask& m) const;
    std::string format_subset(const SubsetMask& m) const; // "{P1,P3}"

    // Throws unless the mask was built for a frame of this size.
    void require_mask(const SubsetMask& m) const;

    bool operator==(const Frame& o) const { return labels_ == o.labels_; }

private:
    std::vector<std::string> labels_;
};

} // namespace credence

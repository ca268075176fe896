#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>

namespace argeo {

// Set of defeasible rules, addressed by their position in Program::defeasible_rules.
class RuleSet {
public:
    static constexpr std::size_t capacity = 64;

    constexpr RuleSet() = default;

    static constexpr RuleSet from_bits(std::uint64_t bits) {
        RuleSet s;
        s.bits_ = bits;
        return s;
    }
    static constexpr RuleSet single(std::size_t index) { return from_bits(std::uint64_t{1} << index); }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr bool contains(std::size_t index) const { return (bits_ >> index) & 1U; }
    constexpr void insert(std::size_t index) { bits_ |= std::uint64_t{1} << index; }
    constexpr void erase(std::size_t index) { bits_ &= ~(std::uint64_t{1} << index); }

    constexpr bool subset_of(RuleSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool proper_subset_of(RuleSet other) const { return subset_of(other) && bits_ != other.bits_; }

    constexpr RuleSet operator|(RuleSet o) const { return from_bits(bits_ | o.bits_); }
    constexpr RuleSet operator&(RuleSet o) const { return from_bits(bits_ & o.bits_); }
    constexpr RuleSet& operator|=(RuleSet o) {
        bits_ |= o.bits_;
        return *this;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(static_cast<std::size_t>(std::countr_zero(b)));
    }

    friend constexpr bool operator==(RuleSet, RuleSet) = default;
    friend constexpr auto operator<=>(RuleSet, RuleSet) = default;

private:
    std::uint64_t bits_ = 0;
};

}  // namespace argeo

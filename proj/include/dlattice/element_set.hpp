#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace dlat {

/// Index of an element of a finite carrier.
using Element = int;

/// Sentinel for an undefined partial operation.
inline constexpr Element kAbsent = -1;

/// Carriers are limited to 64 elements so that subsets fit one machine word.
inline constexpr int kMaxCarrier = 64;

/// A subset of a carrier of at most 64 elements, stored as a bitmask.
class ElementSet {
public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr ElementSet singleton(Element a) { return ElementSet(std::uint64_t{1} << a); }
  static constexpr ElementSet first_n(int n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(Element a) const { return (bits_ >> a) & 1U; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }

  constexpr void insert(Element a) { bits_ |= std::uint64_t{1} << a; }
  constexpr void erase(Element a) { bits_ &= ~(std::uint64_t{1} << a); }

  constexpr bool subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(ElementSet other) const { return (bits_ & other.bits_) != 0; }

  /// Smallest member; undefined on the empty set.
  constexpr Element front() const { return std::countr_zero(bits_); }

  constexpr ElementSet operator|(ElementSet o) const { return ElementSet(bits_ | o.bits_); }
  constexpr ElementSet operator&(ElementSet o) const { return ElementSet(bits_ & o.bits_); }
  constexpr ElementSet minus(ElementSet o) const { return ElementSet(bits_ & ~o.bits_); }
  constexpr ElementSet& operator|=(ElementSet o) { bits_ |= o.bits_; return *this; }
  constexpr ElementSet& operator&=(ElementSet o) { bits_ &= o.bits_; return *this; }

  constexpr auto operator<=>(const ElementSet&) const = default;

  std::vector<Element> elements() const {
    std::vector<Element> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (auto b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  /// Calls `f(a)` for each member in increasing order.
  template <class F>
  constexpr void for_each(F&& f) const {
    for (auto b = bits_; b != 0; b &= b - 1) f(static_cast<Element>(std::countr_zero(b)));
  }

private:
  std::uint64_t bits_ = 0;
};

}  // namespace dlat

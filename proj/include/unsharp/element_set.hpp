#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>

namespace unsharp {

/// Dense index of an element inside a poset (0..n-1).
using element = std::uint32_t;

/// Largest carrier supported; element sets are single 64-bit words.
inline constexpr std::size_t max_elements = 64;

/// A subset of the carrier of one poset, stored as a bitmask.
///
/// Iteration visits members in ascending index order, which is the
/// canonical order used for every printed or compared result.
class element_set {
public:
  class iterator {
  public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = element;
    using difference_type = std::ptrdiff_t;
    using pointer = const element*;
    using reference = element;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr element operator*() const { return static_cast<element>(std::countr_zero(rest_)); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

  private:
    std::uint64_t rest_ = 0;
  };

  constexpr element_set() = default;
  constexpr element_set(std::initializer_list<element> members) {
    for (element e : members) insert(e);
  }

  static constexpr element_set from_bits(std::uint64_t bits) {
    element_set s;
    s.bits_ = bits;
    return s;
  }
  static constexpr element_set singleton(element e) { return from_bits(std::uint64_t{1} << e); }
  /// The full carrier {0, ..., n-1}.
  static constexpr element_set all(std::size_t n) {
    return from_bits(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool is_singleton() const { return std::has_single_bit(bits_); }
  constexpr bool contains(element e) const { return (bits_ >> e) & 1U; }

  /// The unique member of a singleton.
  constexpr element single() const {
    assert(is_singleton());
    return static_cast<element>(std::countr_zero(bits_));
  }
  /// Smallest member by index; the set must be nonempty.
  constexpr element first() const {
    assert(!empty());
    return static_cast<element>(std::countr_zero(bits_));
  }

  constexpr void insert(element e) { bits_ |= std::uint64_t{1} << e; }
  constexpr void erase(element e) { bits_ &= ~(std::uint64_t{1} << e); }

  constexpr bool subset_of(element_set other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(element_set other) const { return (bits_ & other.bits_) != 0; }

  constexpr iterator begin() const { return iterator{bits_}; }
  constexpr iterator end() const { return iterator{}; }

  constexpr element_set operator&(element_set o) const { return from_bits(bits_ & o.bits_); }
  constexpr element_set operator|(element_set o) const { return from_bits(bits_ | o.bits_); }
  constexpr element_set operator-(element_set o) const { return from_bits(bits_ & ~o.bits_); }
  constexpr element_set& operator&=(element_set o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr element_set& operator|=(element_set o) {
    bits_ |= o.bits_;
    return *this;
  }

  constexpr bool operator==(const element_set&) const = default;
  constexpr bool operator<(const element_set& o) const { return bits_ < o.bits_; }

private:
  std::uint64_t bits_ = 0;
};

}  // namespace unsharp

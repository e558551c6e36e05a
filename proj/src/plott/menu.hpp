// Copyright 2026 The Plott Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PLOTT_MENU_HPP_
#define PLOTT_MENU_HPP_

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace plott {

// A subset of a finite indexed ground set of at most 64 elements, stored as a
// bit mask. Bit i set means element i is a member.
class Menu {
 public:
  static constexpr int kMaxElements = 64;

  constexpr Menu() = default;
  constexpr explicit Menu(std::uint64_t bits) : bits_(bits) {}
  Menu(std::initializer_list<int> elements) {
    for (int e : elements) bits_ |= bit(e);
  }

  static constexpr Menu singleton(int e) { return Menu(bit(e)); }
  // {0, 1, ..., n-1}
  static constexpr Menu first(int n) {
    return Menu(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  template <typename Range>
  static Menu of(const Range& elements) {
    Menu m;
    for (int e : elements) m.bits_ |= bit(e);
    return m;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int e) const { return (bits_ >> e) & 1u; }
  constexpr bool subset_of(Menu other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(Menu other) const {
    return (bits_ & other.bits_) != 0;
  }
  constexpr Menu with(int e) const { return Menu(bits_ | bit(e)); }
  constexpr Menu without(int e) const { return Menu(bits_ & ~bit(e)); }
  // Lowest-index member; undefined on the empty menu.
  constexpr int front() const { return std::countr_zero(bits_); }

  friend constexpr Menu operator|(Menu a, Menu b) {
    return Menu(a.bits_ | b.bits_);
  }
  friend constexpr Menu operator&(Menu a, Menu b) {
    return Menu(a.bits_ & b.bits_);
  }
  friend constexpr Menu operator-(Menu a, Menu b) {
    return Menu(a.bits_ & ~b.bits_);
  }
  Menu& operator|=(Menu o) { bits_ |= o.bits_; return *this; }
  Menu& operator&=(Menu o) { bits_ &= o.bits_; return *this; }
  Menu& operator-=(Menu o) { bits_ &= ~o.bits_; return *this; }

  // Numeric order of the masks; this is the canonical subset order.
  friend constexpr auto operator<=>(Menu, Menu) = default;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    friend constexpr bool operator==(iterator, iterator) = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> elements() const { return {begin(), end()}; }

 private:
  static constexpr std::uint64_t bit(int e) { return std::uint64_t{1} << e; }

  std::uint64_t bits_ = 0;
};

// Calls fn(sub) for every sub ⊆ menu, in increasing mask order (∅ first).
template <typename Fn>
void for_each_submenu(Menu menu, Fn&& fn) {
  const std::uint64_t m = menu.bits();
  std::uint64_t s = 0;
  do {
    fn(Menu(s));
    s = (s - m) & m;
  } while (s != 0);
}

// Position of `sub` among the submenus of `domain` in increasing mask order.
// The map is order preserving, so it doubles as a dense table index.
inline std::uint64_t compress(Menu sub, Menu domain) {
  std::uint64_t out = 0;
  int pos = 0;
  for (int e : domain) {
    if (sub.contains(e)) out |= std::uint64_t{1} << pos;
    ++pos;
  }
  return out;
}

// Inverse of compress.
inline Menu expand(std::uint64_t local, Menu domain) {
  Menu out;
  for (int e : domain) {
    if (local & 1u) out = out.with(e);
    local >>= 1;
    if (local == 0) break;
  }
  return out;
}

}  // namespace plott

#endif  // PLOTT_MENU_HPP_

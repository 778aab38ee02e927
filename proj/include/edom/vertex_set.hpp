// Copyright 2026 The edom Authors
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

#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace edom {

using Vertex = int;

/// Largest vertex count supported by the single-word bitset tier.
inline constexpr int kMaxVertices = 64;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A set of vertex indices in [0, 64) stored as one machine word.
///
/// All solvers traffic in VertexSet; the type carries no vertex count, so
/// callers attaching a set to a Graph keep bits >= n clear.
class VertexSet {
 public:
  using Word = std::uint64_t;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    constexpr iterator() = default;
    constexpr explicit iterator(Word rest) : rest_(rest) {}
    constexpr Vertex operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    Word rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr VertexSet(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) insert(v);
  }

  static constexpr VertexSet from_bits(Word bits) {
    VertexSet s;
    s.bits_ = bits;
    return s;
  }
  static constexpr VertexSet single(Vertex v) { return from_bits(Word{1} << v); }
  /// {0, ..., n-1}
  static constexpr VertexSet full(int n) {
    return from_bits(n >= 64 ? ~Word{0} : (Word{1} << n) - 1);
  }
  static VertexSet from_vector(const std::vector<Vertex>& vs) {
    VertexSet s;
    for (Vertex v : vs) {
      if (v < 0 || v >= kMaxVertices) throw Error("vertex index out of range: " + std::to_string(v));
      s.insert(v);
    }
    return s;
  }

  constexpr Word bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
  constexpr Vertex lowest() const { return std::countr_zero(bits_); }
  constexpr Vertex highest() const { return 63 - std::countl_zero(bits_); }
  constexpr bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }
  /// True when every member is < n.
  constexpr bool fits(int n) const { return is_subset_of(full(n)); }

  constexpr void insert(Vertex v) { bits_ |= Word{1} << v; }
  constexpr void erase(Vertex v) { bits_ &= ~(Word{1} << v); }

  constexpr VertexSet with(Vertex v) const { return from_bits(bits_ | (Word{1} << v)); }
  constexpr VertexSet without(Vertex v) const { return from_bits(bits_ & ~(Word{1} << v)); }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

  constexpr VertexSet operator|(VertexSet o) const { return from_bits(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return from_bits(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return from_bits(bits_ & ~o.bits_); }
  constexpr VertexSet operator^(VertexSet o) const { return from_bits(bits_ ^ o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator-=(VertexSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }

  constexpr bool operator==(const VertexSet&) const = default;
  /// Orders by the underlying word; used for canonical sorting only.
  constexpr auto operator<=>(const VertexSet&) const = default;

  /// "{0,2,5}"
  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (Vertex v : *this) {
      if (!first) out += ',';
      out += std::to_string(v);
      first = false;
    }
    return out + "}";
  }

 private:
  Word bits_ = 0;
};

namespace detail {
template <typename Fn>
bool invoke_continue(Fn& fn, VertexSet s) {
  if constexpr (std::is_void_v<std::invoke_result_t<Fn&, VertexSet>>) {
    std::invoke(fn, s);
    return true;
  } else {
    return static_cast<bool>(std::invoke(fn, s));
  }
}
}  // namespace detail

/// Calls fn(subset) for every k-element subset of `universe`, in increasing
/// order of the underlying word. Stops early when fn returns false.
template <typename Fn>
bool for_each_subset_of_size(VertexSet universe, int k, Fn&& fn) {
  const int m = universe.size();
  if (k < 0 || k > m) return true;
  // Enumerate k-subsets of the dense index space [0, m) with Gosper's hack,
  // then scatter onto the members of `universe`.
  const bool dense = universe == VertexSet::full(m);
  std::vector<Vertex> members;
  if (!dense) members = universe.to_vector();
  if (k == 0) return detail::invoke_continue(fn, VertexSet{});
  std::uint64_t comb = (k == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  while (true) {
    VertexSet s;
    if (dense) {
      s = VertexSet::from_bits(comb);
    } else {
      for (std::uint64_t rest = comb; rest != 0; rest &= rest - 1) s.insert(members[std::countr_zero(rest)]);
    }
    if (!detail::invoke_continue(fn, s)) return false;
    const std::uint64_t low = comb & (~comb + 1);
    const std::uint64_t ripple = comb + low;
    if (ripple == 0) break;  // last combination of a 64-wide universe
    comb = (((ripple ^ comb) >> 2) / low) | ripple;
    if (m < 64 && (comb >> m) != 0) break;
  }
  return true;
}

}  // namespace edom

template <>
struct std::hash<edom::VertexSet> {
  std::size_t operator()(edom::VertexSet s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};

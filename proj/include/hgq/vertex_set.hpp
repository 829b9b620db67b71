#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "hgq/error.hpp"

namespace hgq {

/// Largest vertex count representable by a VertexSet.
inline constexpr int kMaxVertices = 32;

/// A subset of [n] (vertices are 1-based) packed into a bit mask.
///
/// Ordering is by cardinality first, then lexicographic on the increasing
/// element list, so {1} < {2} < {1,2} < {1,3} < {2,3} < {1,2,3}.
class VertexSet {
 public:
  using Mask = std::uint32_t;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(Mask bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> vertices) {
    for (int v : vertices) insert(v);
  }

  static VertexSet from_list(const std::vector<int>& vertices) {
    VertexSet s;
    for (int v : vertices) s.insert(v);
    return s;
  }

  /// {1, ..., n}
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= kMaxVertices ? ~Mask{0} : ((Mask{1} << n) - 1));
  }

  static constexpr VertexSet singleton(int v) { return VertexSet(Mask{1} << (v - 1)); }

  void insert(int v) {
    if (v < 1 || v > kMaxVertices) {
      throw InputError("vertex out of range: " + std::to_string(v));
    }
    bits_ |= Mask{1} << (v - 1);
  }

  constexpr Mask bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int v) const { return (bits_ >> (v - 1)) & 1U; }
  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }
  /// Largest vertex, 0 for the empty set.
  constexpr int max() const { return bits_ == 0 ? 0 : 32 - std::countl_zero(bits_); }
  constexpr int min() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(size());
    for (Mask m = bits_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
    return out;
  }

  template <class F>
  void for_each(F&& f) const {
    for (Mask m = bits_; m != 0; m &= m - 1) f(std::countr_zero(m) + 1);
  }

  /// Renumber the members of this set that lie in `domain` by their rank in
  /// `domain` (order-preserving relabeling onto an initial segment).
  constexpr VertexSet compress(VertexSet domain) const {
    Mask out = 0;
    int pos = 0;
    for (Mask d = domain.bits_; d != 0; d &= d - 1, ++pos) {
      if (bits_ & (d & -d)) out |= Mask{1} << pos;
    }
    return VertexSet(out);
  }

  constexpr VertexSet shifted(int offset) const { return VertexSet(bits_ << offset); }

  constexpr bool operator==(const VertexSet&) const = default;

  constexpr std::strong_ordering operator<=>(const VertexSet& o) const {
    if (auto c = size() <=> o.size(); c != 0) return c;
    if (bits_ == o.bits_) return std::strong_ordering::equal;
    // The first differing element in the sorted lists is the lowest bit of the
    // symmetric difference; whoever owns it is smaller.
    Mask low = (bits_ ^ o.bits_) & -(bits_ ^ o.bits_);
    return (bits_ & low) ? std::strong_ordering::less : std::strong_ordering::greater;
  }

 private:
  Mask bits_ = 0;
};

struct VertexSetHash {
  std::size_t operator()(VertexSet s) const noexcept { return std::hash<std::uint32_t>{}(s.bits()); }
};

}  // namespace hgq

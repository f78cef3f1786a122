#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

namespace neumaier {

inline constexpr int kMaxVertices = 128;

// Subset of vertices 0..127 packed into two machine words. Intersection
// size (AND + popcount) is the hot kernel for common-neighbor counts.
class VertexSet {
 public:
  constexpr VertexSet() = default;

  static VertexSet full(int n) {
    VertexSet s;
    for (int i = 0; i < n; ++i) s.set(i);
    return s;
  }

  static VertexSet single(int v) {
    VertexSet s;
    s.set(v);
    return s;
  }

  bool test(int v) const { return (w_[v >> 6] >> (v & 63)) & 1u; }
  void set(int v) { w_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(int v) { w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  int count() const { return std::popcount(w_[0]) + std::popcount(w_[1]); }
  bool empty() const { return (w_[0] | w_[1]) == 0; }

  // Lowest member, or -1 when empty.
  int first() const {
    if (w_[0]) return std::countr_zero(w_[0]);
    if (w_[1]) return 64 + std::countr_zero(w_[1]);
    return -1;
  }

  // Lowest member strictly greater than v, or -1.
  int next(int v) const {
    ++v;
    if (v < 64) {
      std::uint64_t m = w_[0] >> v;
      if (m) return v + std::countr_zero(m);
      v = 64;
    }
    if (v < 128) {
      std::uint64_t m = w_[1] >> (v - 64);
      if (m) return v + std::countr_zero(m);
    }
    return -1;
  }

  VertexSet operator&(VertexSet o) const { return {w_[0] & o.w_[0], w_[1] & o.w_[1]}; }
  VertexSet operator|(VertexSet o) const { return {w_[0] | o.w_[0], w_[1] | o.w_[1]}; }
  VertexSet operator^(VertexSet o) const { return {w_[0] ^ o.w_[0], w_[1] ^ o.w_[1]}; }
  // Members of *this not in o.
  VertexSet and_not(VertexSet o) const { return {w_[0] & ~o.w_[0], w_[1] & ~o.w_[1]}; }

  VertexSet& operator&=(VertexSet o) { return *this = *this & o; }
  VertexSet& operator|=(VertexSet o) { return *this = *this | o; }

  bool operator==(const VertexSet&) const = default;

  bool is_subset_of(VertexSet o) const { return (and_not(o)).empty(); }
  bool intersects(VertexSet o) const { return !(*this & o).empty(); }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
    return out;
  }

 private:
  constexpr VertexSet(std::uint64_t lo, std::uint64_t hi) : w_{lo, hi} {}
  std::array<std::uint64_t, 2> w_{0, 0};
};

}  // namespace neumaier

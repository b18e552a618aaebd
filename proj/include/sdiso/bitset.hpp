#ifndef SDISO_BITSET_HPP
#define SDISO_BITSET_HPP

#include <bit>
#include <cassert>
#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

namespace sdiso {

// Dense fixed-universe vertex set on 64-bit words. All binary operations
// assume both operands share the same universe size.
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(int universe) : n_(universe), w_((universe + 63) / 64, 0) {}

  int universe() const { return n_; }

  void set(int v) {
    assert(v >= 0 && v < n_);
    w_[v >> 6] |= uint64_t{1} << (v & 63);
  }
  void reset(int v) {
    assert(v >= 0 && v < n_);
    w_[v >> 6] &= ~(uint64_t{1} << (v & 63));
  }
  bool test(int v) const {
    assert(v >= 0 && v < n_);
    return (w_[v >> 6] >> (v & 63)) & 1;
  }

  int count() const {
    int c = 0;
    for (uint64_t w : w_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (uint64_t w : w_)
      if (w) return false;
    return true;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool subset_of(const VertexSet& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  bool intersects(const VertexSet& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  bool operator==(const VertexSet& o) const { return n_ == o.n_ && w_ == o.w_; }
  // Lexicographic on words; a fixed total order usable as a map key.
  std::strong_ordering operator<=>(const VertexSet& o) const {
    if (auto c = n_ <=> o.n_; c != 0) return c;
    for (size_t i = 0; i < w_.size(); ++i)
      if (auto c = w_[i] <=> o.w_[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  // Lowest set bit at or after v, or -1.
  int next(int v) const {
    if (v >= n_) return -1;
    size_t k = v >> 6;
    uint64_t w = w_[k] & (~uint64_t{0} << (v & 63));
    while (true) {
      if (w) return int(k << 6) + std::countr_zero(w);
      if (++k == w_.size()) return -1;
      w = w_[k];
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (int v = next(0); v >= 0; v = next(v + 1)) out.push_back(v);
    return out;
  }

  size_t hash() const {
    size_t h = std::hash<int>{}(n_);
    for (uint64_t w : w_) h = h * 1000003u ^ std::hash<uint64_t>{}(w);
    return h;
  }

private:
  int n_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace sdiso

#endif

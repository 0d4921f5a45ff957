#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace grundylab {

// Fixed-width bit set sized at construction. The exact solvers preallocate
// pools of these so the hot paths never touch the allocator.
class DynBits {
public:
  DynBits() = default;
  explicit DynBits(int nbits) : w_((static_cast<std::size_t>(nbits) + 63) / 64, 0) {}

  void clear() {
    for (auto& x : w_) x = 0;
  }
  bool test(int i) const { return (w_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u; }
  void set(int i) { w_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w_[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  int count() const {
    int c = 0;
    for (auto x : w_) c += std::popcount(x);
    return c;
  }
  bool any() const {
    for (auto x : w_)
      if (x) return true;
    return false;
  }
  bool none() const { return !any(); }

  DynBits& operator|=(const DynBits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  DynBits& operator&=(const DynBits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  // *this &= ~o
  DynBits& and_not(const DynBits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }
  bool intersects(const DynBits& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }
  int count_and(const DynBits& o) const {
    int c = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
    return c;
  }
  int count_and_not(const DynBits& o) const {
    int c = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & ~o.w_[i]);
    return c;
  }

  int first_set() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return static_cast<int>(i * 64) + std::countr_zero(w_[i]);
    return -1;
  }

  template <class F>
  void for_each(F f) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t x = w_[i];
      while (x) {
        f(static_cast<int>(i * 64) + std::countr_zero(x));
        x &= x - 1;
      }
    }
  }

  bool operator==(const DynBits&) const = default;

private:
  std::vector<std::uint64_t> w_;
};

}  // namespace grundylab

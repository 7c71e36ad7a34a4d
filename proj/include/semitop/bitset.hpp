#ifndef SEMITOP_BITSET_HPP_
#define SEMITOP_BITSET_HPP_

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace semitop {

// Fixed-width bitset used by the cover searches.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  void set(std::size_t i) { w_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (w_[i / 64] >> (i % 64)) & 1; }

  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool covers(const Bitset& o) const {  // o subset of this
    for (std::size_t i = 0; i < w_.size(); ++i)
      if ((o.w_[i] & ~w_[i]) != 0) return false;
    return true;
  }

  bool none() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }

  // least set index, or size() if empty
  std::size_t first() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(w_[i]));
    return n_;
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;
  friend auto operator<=>(const Bitset& a, const Bitset& b) { return a.w_ <=> b.w_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace semitop

#endif  // SEMITOP_BITSET_HPP_

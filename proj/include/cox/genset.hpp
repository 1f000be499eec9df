#pragma once

#include <cassert>
#include <cstdint>
#include <string>
#include <vector>

namespace cox {

// Subset of the generator indices {0, ..., rank-1}, rank <= 32.
class GenSet {
 public:
  constexpr GenSet() : bits_(0) {}
  constexpr explicit GenSet(std::uint32_t bits) : bits_(bits) {}

  static constexpr GenSet all(int rank) {
    return GenSet(rank == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << rank) - 1);
  }
  static constexpr GenSet single(int s) { return GenSet(std::uint32_t{1} << s); }

  constexpr bool contains(int s) const { return (bits_ >> s) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return __builtin_popcount(bits_); }
  constexpr std::uint32_t bits() const { return bits_; }

  constexpr GenSet with(int s) const { return GenSet(bits_ | (std::uint32_t{1} << s)); }
  constexpr GenSet without(int s) const { return GenSet(bits_ & ~(std::uint32_t{1} << s)); }

  constexpr bool subset_of(GenSet other) const { return (bits_ & ~other.bits_) == 0; }

  friend constexpr GenSet operator|(GenSet a, GenSet b) { return GenSet(a.bits_ | b.bits_); }
  friend constexpr GenSet operator&(GenSet a, GenSet b) { return GenSet(a.bits_ & b.bits_); }
  friend constexpr bool operator==(GenSet a, GenSet b) { return a.bits_ == b.bits_; }
  friend constexpr bool operator!=(GenSet a, GenSet b) { return a.bits_ != b.bits_; }
  friend constexpr bool operator<(GenSet a, GenSet b) { return a.bits_ < b.bits_; }

  std::vector<int> members() const {
    std::vector<int> out;
    for (int s = 0; s < 32; ++s)
      if (contains(s)) out.push_back(s);
    return out;
  }

 private:
  std::uint32_t bits_;
};

}  // namespace cox

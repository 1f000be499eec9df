#pragma once

#include <optional>
#include <vector>

#include "cox/errors.hpp"
#include "cox/genset.hpp"

namespace cox {

// Bond order m_st.  Files encode infinity as 0; in memory it is a distinct
// state rather than a magic integer.
class Bond {
 public:
  static constexpr Bond finite(int m) { return Bond(m); }
  static constexpr Bond infinity() { return Bond(0); }

  constexpr bool is_finite() const { return m_ != 0; }
  // Order of st; only meaningful for finite bonds.
  constexpr int order() const {
    assert(m_ != 0);
    return m_;
  }
  // File encoding: the order, or 0 for infinity.
  constexpr int encoded() const { return m_; }

  friend constexpr bool operator==(Bond a, Bond b) { return a.m_ == b.m_; }
  friend constexpr bool operator!=(Bond a, Bond b) { return a.m_ != b.m_; }

 private:
  constexpr explicit Bond(int m) : m_(m) {}
  int m_;
};

class CoxeterMatrix {
 public:
  // Validates symmetry, diagonal 1, off-diagonal >= 2 (or 0 for infinity).
  // Throws ParseError with the offending position otherwise.
  static CoxeterMatrix from_entries(const std::vector<std::vector<int>>& entries);

  int rank() const { return rank_; }
  Bond bond(int s, int t) const { return entries_[s * rank_ + t]; }
  bool commute(int s, int t) const { return bond(s, t) == Bond::finite(2); }

  GenSet all_generators() const { return GenSet::all(rank_); }

  // lcm of all finite bond orders (diagonal included, so always >= 1).
  long finite_order_lcm() const;

  bool operator==(const CoxeterMatrix&) const = default;

 private:
  CoxeterMatrix(int rank, std::vector<Bond> entries)
      : rank_(rank), entries_(std::move(entries)) {}
  int rank_;
  std::vector<Bond> entries_;
};

}  // namespace cox

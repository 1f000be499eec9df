#include "cox/coxeter_matrix.hpp"

#include <numeric>
#include <string>

namespace cox {

CoxeterMatrix CoxeterMatrix::from_entries(const std::vector<std::vector<int>>& entries) {
  const int rank = static_cast<int>(entries.size());
  if (rank < 1 || rank > 32)
    throw ParseError("matrix rank must be between 1 and 32, got " + std::to_string(rank));
  std::vector<Bond> bonds;
  bonds.reserve(static_cast<std::size_t>(rank) * rank);
  for (int i = 0; i < rank; ++i) {
    if (static_cast<int>(entries[i].size()) != rank)
      throw ParseError("row " + std::to_string(i) + " has " + std::to_string(entries[i].size()) +
                       " entries, expected " + std::to_string(rank));
    for (int j = 0; j < rank; ++j) {
      const int m = entries[i][j];
      if (m < 0)
        throw ParseError("negative entry at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      if (i == j && m != 1)
        throw ParseError("diagonal entry at (" + std::to_string(i) + "," + std::to_string(i) +
                         ") must be 1, got " + std::to_string(m));
      if (i != j && m == 1)
        throw ParseError("off-diagonal entry at (" + std::to_string(i) + "," + std::to_string(j) +
                         ") must be >= 2 or 0 (infinity)");
      if (entries[j][i] != m)
        throw ParseError("matrix not symmetric at (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
      bonds.push_back(m == 0 ? Bond::infinity() : Bond::finite(m));
    }
  }
  return CoxeterMatrix(rank, std::move(bonds));
}

long CoxeterMatrix::finite_order_lcm() const {
  long l = 1;
  for (int i = 0; i < rank_; ++i)
    for (int j = i; j < rank_; ++j)
      if (bond(i, j).is_finite()) l = std::lcm(l, static_cast<long>(bond(i, j).order()));
  return l;
}

}  // namespace cox

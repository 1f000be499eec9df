#pragma once

#include <variant>

#include "cox/conjugation.hpp"
#include "cox/hecke.hpp"

namespace cox {

// Linear system whose kernel is the centre truncated to the ball B_N: unknowns
// x_u for u in B_N, one equation per (generator s, element v of B_{N+1})
// stating that T_s x - x T_s has vanishing coefficient at v.  Because the
// commutator of an element supported in B_N lives in B_{N+1}, the system
// characterises genuine centrality, not an approximation.
template <CoefficientRing R>
struct CommutantSystem {
  std::vector<Element> unknowns;  // B_N in normal-form order
  std::vector<std::vector<std::pair<int, typename R::value_type>>> rows;
};

template <CoefficientRing R>
CommutantSystem<R> build_commutant_system(const Group& g, int N, const R& ring,
                                          const DeformationParameters<R>& params,
                                          const BallBudget& budget = {}, bool parallel = true);

// Kernel dimension by fraction-free (Bareiss) elimination on the
// denominator-cleared integer matrix.
int kernel_dimension(const CommutantSystem<RationalField>& sys);

// Kernel basis vectors, indexed like sys.unknowns.
std::vector<std::vector<Rational>> kernel_basis(const CommutantSystem<RationalField>& sys);

int centre_dimension_at(const Group& g, int N,
                        const DeformationParameters<RationalField>& params,
                        const BallBudget& budget = {}, bool parallel = true);

enum class ExchangeSide { Right, Left };  // which of l(ws) > l(w), l(sw) > l(w) holds

// Flat-then-strict conjugation chain from `target`, each flat step annotated
// with a valid exchange side; replaying the coefficient identities of the
// commutation equations along the chain shows that a central element whose
// support has maximal length at `target` must have x_target = 0.
struct ZeroPropagationCertificate {
  Element target;
  GrowthCertificate steps;          // flat prefix, then one final +2 step
  std::vector<ExchangeSide> sides;  // one per step; the final step is always Right
};

using PropagationResult = std::variant<ZeroPropagationCertificate, Exhausted, BudgetExceeded>;

// Preconditions: irreducible, not finite type, w != identity, and in affine
// type w not a translation.  BFS prefers the shortest flat prefix, breaking
// ties by generator order.
PropagationResult propagate_vanishing(const Group& g, const Element& w,
                                      const SearchBudget& budget = {});

// Symbolic replay through the algebra product (not the dual formulas): builds
// x = sum X_u T_u over the ball of radius l(target) with free coefficient
// variables, computes T_s x - x T_s by folding, and checks each claimed
// coefficient identity as a polynomial identity.
bool replay_zero_certificate(const Group& g, const ZeroPropagationCertificate& cert,
                             std::string* error = nullptr);

struct CentreReport {
  int radius = 0;
  bool ok = false;
  std::vector<int> kernel_dimensions;  // one per parameter point
  std::vector<ZeroPropagationCertificate> certificates;
  std::string failure;  // empty when ok
};

// Two independent routes with a cross-check: kernel dimension 1 at both
// rational parameter points, and a replayed vanishing certificate for every
// non-identity element of B_N.  Requires irreducible indefinite type.
CentreReport assert_centre_trivial_up_to(
    const Group& g, int N,
    const std::vector<DeformationParameters<RationalField>>& points,
    const BallBudget& budget = {}, bool parallel = true);

// --- template implementation ---

template <CoefficientRing R>
CommutantSystem<R> build_commutant_system(const Group& g, int N, const R& ring,
                                          const DeformationParameters<R>& params,
                                          const BallBudget& budget, bool parallel) {
  CommutantSystem<R> sys;
  sys.unknowns = g.ball(N, budget, parallel);
  std::vector<Element> outer = g.ball(N + 1, budget, parallel);
  std::map<Element, int> index;
  for (int i = 0; i < static_cast<int>(sys.unknowns.size()); ++i)
    index.emplace(sys.unknowns[i], i);

  const int r = g.rank();
  const int rows = r * static_cast<int>(outer.size());
  sys.rows.resize(rows);
  auto fill = [&](int row) {
    int s = row / static_cast<int>(outer.size());
    const Element& v = outer[row % outer.size()];
    std::map<Element, typename R::value_type> point{{v, ring.one()}};
    auto lhs = dual_left(g, ring, params, s, point);
    auto rhs = dual_right(g, ring, params, s, point);
    std::map<int, typename R::value_type> coeffs;
    for (const auto& [u, c] : lhs) {
      auto it = index.find(u);
      if (it == index.end()) continue;  // unknown forced zero outside B_N
      auto [slot, fresh] = coeffs.emplace(it->second, c);
      if (!fresh) slot->second = ring.add(slot->second, c);
    }
    for (const auto& [u, c] : rhs) {
      auto it = index.find(u);
      if (it == index.end()) continue;
      auto [slot, fresh] = coeffs.emplace(it->second, ring.neg(c));
      if (!fresh) slot->second = ring.sub(slot->second, c);
    }
    for (auto& [col, c] : coeffs)
      if (!ring.is_zero(c)) sys.rows[row].emplace_back(col, std::move(c));
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (int row = 0; row < rows; ++row) fill(row);
  } else {
    for (int row = 0; row < rows; ++row) fill(row);
  }
  return sys;
}

}  // namespace cox

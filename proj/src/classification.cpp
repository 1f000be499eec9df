#include "cox/classification.hpp"

#include <algorithm>
#include <array>
#include <functional>

namespace cox {
namespace {

// Diagram builders for the classification tables.  Unlabelled edges are 3.

CoxeterMatrix from_edges(int rank, const std::vector<std::array<int, 3>>& edges) {
  std::vector<std::vector<int>> e(rank, std::vector<int>(rank, 2));
  for (int i = 0; i < rank; ++i) e[i][i] = 1;
  for (const auto& [a, b, m] : edges) e[a][b] = e[b][a] = m;
  return CoxeterMatrix::from_entries(e);
}

// Path with the given consecutive edge labels; rank = labels.size() + 1.
CoxeterMatrix path(const std::vector<int>& labels) {
  std::vector<std::array<int, 3>> edges;
  for (int i = 0; i < static_cast<int>(labels.size()); ++i)
    edges.push_back({i, i + 1, labels[i]});
  return from_edges(static_cast<int>(labels.size()) + 1, edges);
}

// Node 0 is the branch point; arms of the given lengths, all edges 3.
CoxeterMatrix star(const std::vector<int>& arms) {
  std::vector<std::array<int, 3>> edges;
  int next = 1;
  for (int arm : arms) {
    int prev = 0;
    for (int i = 0; i < arm; ++i) {
      edges.push_back({prev, next, 3});
      prev = next++;
    }
  }
  return from_edges(next, edges);
}

CoxeterMatrix cycle(int rank) {
  std::vector<std::array<int, 3>> edges;
  for (int i = 0; i < rank; ++i) edges.push_back({i, (i + 1) % rank, 3});
  return from_edges(rank, edges);
}

std::vector<int> path_labels(int count, int label_at_end) {
  std::vector<int> labels(count, 3);
  labels.back() = label_at_end;
  return labels;
}

// Affine B~n, rank n+1 (n >= 3): fork at one end, 4-bond at the other.
CoxeterMatrix affine_b(int n) {
  std::vector<std::array<int, 3>> edges = {{0, 2, 3}, {1, 2, 3}};
  for (int i = 2; i + 1 <= n; ++i) edges.push_back({i, i + 1, i + 1 == n ? 4 : 3});
  return from_edges(n + 1, edges);
}

// Affine D~n, rank n+1 (n >= 4): forks at both ends.
CoxeterMatrix affine_d(int n) {
  std::vector<std::array<int, 3>> edges = {{0, 2, 3}, {1, 2, 3}, {n - 1, n - 3, 3}, {n, n - 3, 3}};
  for (int i = 2; i + 1 <= n - 3; ++i) edges.push_back({i, i + 1, 3});
  return from_edges(n + 1, edges);
}

std::vector<CoxeterMatrix> finite_candidates(int r) {
  std::vector<CoxeterMatrix> out;
  out.push_back(path(std::vector<int>(r - 1, 3)));  // A_r
  out.push_back(path(path_labels(r - 1, 4)));       // B_r
  if (r >= 4) out.push_back(star({1, 1, r - 3}));   // D_r
  if (r == 6) out.push_back(star({1, 2, 2}));       // E6
  if (r == 7) out.push_back(star({1, 2, 3}));       // E7
  if (r == 8) out.push_back(star({1, 2, 4}));       // E8
  if (r == 4) out.push_back(path({3, 4, 3}));       // F4
  if (r == 3) out.push_back(path({5, 3}));          // H3
  if (r == 4) out.push_back(path({5, 3, 3}));       // H4
  return out;
}

std::vector<CoxeterMatrix> affine_candidates(int r) {
  std::vector<CoxeterMatrix> out;
  if (r == 2) out.push_back(path({0}));               // A~1, the infinite dihedral group
  if (r >= 3) out.push_back(cycle(r));                // A~(r-1)
  if (r >= 3) {                                       // C~(r-1): 4-bonds at both ends
    std::vector<int> labels(r - 1, 3);
    labels.front() = 4;
    labels.back() = 4;
    out.push_back(path(labels));
  }
  if (r >= 4) out.push_back(affine_b(r - 1));         // B~(r-1)
  if (r >= 5) out.push_back(affine_d(r - 1));         // D~(r-1)
  if (r == 7) out.push_back(star({2, 2, 2}));         // E~6
  if (r == 8) out.push_back(star({1, 3, 3}));         // E~7
  if (r == 9) out.push_back(star({1, 2, 5}));         // E~8
  if (r == 5) out.push_back(path({3, 3, 4, 3}));      // F~4
  if (r == 3) out.push_back(path({6, 3}));            // G~2
  return out;
}

}  // namespace

std::string to_string(TypeKind kind) {
  switch (kind) {
    case TypeKind::Finite: return "Finite";
    case TypeKind::Affine: return "Affine";
    case TypeKind::Indefinite: return "Indefinite";
  }
  return "?";
}

std::vector<GenSet> irreducible_components(const CoxeterMatrix& m, GenSet I) {
  std::vector<GenSet> out;
  GenSet remaining = I;
  while (!remaining.empty()) {
    int seed = remaining.members().front();
    GenSet comp = GenSet::single(seed);
    // flood fill along non-commuting pairs
    bool grew = true;
    while (grew) {
      grew = false;
      for (int s : comp.members())
        for (int t : remaining.members())
          if (!comp.contains(t) && !m.commute(s, t)) {
            comp = comp.with(t);
            grew = true;
          }
    }
    out.push_back(comp);
    for (int s : comp.members()) remaining = remaining.without(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool diagram_isomorphic(const CoxeterMatrix& m, const std::vector<int>& sub,
                        const CoxeterMatrix& pattern) {
  const int r = static_cast<int>(sub.size());
  if (pattern.rank() != r) return false;
  std::vector<int> map(r, -1);       // sub position -> pattern node
  std::vector<bool> used(r, false);  // pattern node taken
  std::function<bool(int)> place = [&](int i) -> bool {
    if (i == r) return true;
    for (int p = 0; p < r; ++p) {
      if (used[p]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        ok = m.bond(sub[i], sub[j]) == pattern.bond(p, map[j]);
      if (!ok) continue;
      map[i] = p;
      used[p] = true;
      if (place(i + 1)) return true;
      used[p] = false;
    }
    return false;
  };
  return place(0);
}

bool is_spherical(const CoxeterMatrix& m, GenSet I) {
  for (GenSet comp : irreducible_components(m, I)) {
    const std::vector<int> sub = comp.members();
    const int r = static_cast<int>(sub.size());
    if (r == 1) continue;
    if (r == 2) {
      if (!m.bond(sub[0], sub[1]).is_finite()) return false;  // I2(m) needs m finite
      continue;
    }
    bool any_infinite = false;
    for (int i = 0; i < r && !any_infinite; ++i)
      for (int j = i + 1; j < r; ++j)
        if (!m.bond(sub[i], sub[j]).is_finite()) {
          any_infinite = true;
          break;
        }
    if (any_infinite) return false;
    bool matched = false;
    for (const CoxeterMatrix& cand : finite_candidates(r))
      if (diagram_isomorphic(m, sub, cand)) {
        matched = true;
        break;
      }
    if (!matched) return false;
  }
  return true;
}

TypeClass classify(const CoxeterMatrix& m) {
  TypeClass tc;
  tc.components = irreducible_components(m, m.all_generators());
  tc.irreducible = tc.components.size() == 1;
  tc.compact_hyperbolic = false;

  if (is_spherical(m, m.all_generators())) {
    tc.kind = TypeKind::Finite;
    return tc;
  }
  if (tc.irreducible) {
    const std::vector<int> sub = m.all_generators().members();
    for (const CoxeterMatrix& cand : affine_candidates(m.rank()))
      if (diagram_isomorphic(m, sub, cand)) {
        tc.kind = TypeKind::Affine;
        return tc;
      }
  }
  tc.kind = TypeKind::Indefinite;
  if (tc.irreducible) {
    // Subsets of spherical sets are spherical, so checking co-rank 1 suffices.
    bool all_proper_spherical = true;
    for (int s = 0; s < m.rank() && all_proper_spherical; ++s)
      all_proper_spherical = is_spherical(m, m.all_generators().without(s));
    tc.compact_hyperbolic = all_proper_spherical;
  }
  return tc;
}

std::vector<GenSet> generator_conjugacy_classes(const CoxeterMatrix& m) {
  const int r = m.rank();
  std::vector<int> parent(r);
  for (int i = 0; i < r; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int s = 0; s < r; ++s)
    for (int t = s + 1; t < r; ++t) {
      Bond b = m.bond(s, t);
      if (b.is_finite() && b.order() % 2 == 1) parent[find(s)] = find(t);
    }
  std::vector<GenSet> classes;
  for (int root = 0; root < r; ++root) {
    if (find(root) != root) continue;
    GenSet cls;
    for (int s = 0; s < r; ++s)
      if (find(s) == root) cls = cls.with(s);
    classes.push_back(cls);
  }
  std::sort(classes.begin(), classes.end());
  return classes;
}

GenSet perp(const CoxeterMatrix& m, GenSet I) {
  GenSet out;
  for (int s = 0; s < m.rank(); ++s) {
    if (I.contains(s)) continue;
    bool commutes = true;
    for (int t : I.members())
      if (!m.commute(s, t)) {
        commutes = false;
        break;
      }
    if (commutes) out = out.with(s);
  }
  return out;
}

}  // namespace cox

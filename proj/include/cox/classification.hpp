#pragma once

#include <string>
#include <vector>

#include "cox/coxeter_matrix.hpp"
#include "cox/genset.hpp"

namespace cox {

enum class TypeKind { Finite, Affine, Indefinite };

std::string to_string(TypeKind kind);

struct TypeClass {
  TypeKind kind;
  bool irreducible;
  std::vector<GenSet> components;
  // Irreducible, not finite, not affine, and every proper subset of S
  // spherical.  Only meaningful when kind == Indefinite.
  bool compact_hyperbolic;
};

// Connected components of the sub-diagram on I (edges where m_st >= 3 or
// infinite).  Sorted by smallest member.
std::vector<GenSet> irreducible_components(const CoxeterMatrix& m, GenSet I);

// Table lookup against the finite-type list A, B/C, D, E6-8, F4, H3, H4, I2(m).
bool is_spherical(const CoxeterMatrix& m, GenSet I);

TypeClass classify(const CoxeterMatrix& m);

// s ~ t when joined by a path of edges with odd finite labels.
std::vector<GenSet> generator_conjugacy_classes(const CoxeterMatrix& m);

// {s not in I : m_st = 2 for all t in I}.
GenSet perp(const CoxeterMatrix& m, GenSet I);

// Exact match of the sub-diagram on `sub` against `pattern`, up to relabeling.
bool diagram_isomorphic(const CoxeterMatrix& m, const std::vector<int>& sub,
                        const CoxeterMatrix& pattern);

}  // namespace cox

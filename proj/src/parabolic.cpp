#include "cox/parabolic.hpp"

#include <algorithm>

namespace cox {

CosetFactorisation factor_right(const Group& g, const Element& w, GenSet I) {
  Element outer = w;
  std::vector<int> inner_letters;  // built from the inside out
  bool stripped = true;
  while (stripped) {
    stripped = false;
    for (int s : I.members())
      if (g.is_right_descent(outer, s)) {
        outer = g.multiply(outer, g.generator(s));
        inner_letters.insert(inner_letters.begin(), s);
        stripped = true;
        break;
      }
  }
  return {std::move(outer), g.from_word(inner_letters)};
}

CosetFactorisation factor_left(const Group& g, const Element& w, GenSet I) {
  Element outer = w;
  std::vector<int> inner_letters;
  bool stripped = true;
  while (stripped) {
    stripped = false;
    for (int s : I.members())
      if (g.is_left_descent(outer, s)) {
        outer = g.multiply(g.generator(s), outer);
        inner_letters.push_back(s);
        stripped = true;
        break;
      }
  }
  return {std::move(outer), g.from_word(inner_letters)};
}

bool in_left_quotient(const Group& g, const Element& w, GenSet I) {
  return (g.left_descents(w) & I).empty();
}

bool in_right_quotient(const Group& g, const Element& w, GenSet J) {
  return (g.right_descents(w) & J).empty();
}

Element min_double_coset_rep(const Group& g, const Element& w, GenSet I, GenSet J) {
  Element cur = w;
  // Alternate stripping; each pass strictly shortens until the fixed point.
  while (true) {
    Element next = factor_left(g, cur, I).outer;
    next = factor_right(g, next, J).outer;
    if (next == cur) break;
    cur = std::move(next);
  }
  return cur;
}

DoubleCosetDecomposition decompose_double_coset(const Group& g, const Element& w, GenSet I,
                                                GenSet J) {
  DoubleCosetDecomposition d;
  d.I = I;
  d.J = J;
  // w = p v with p in W^J, then p = u wbar with u in W_I and wbar in ^I W^J.
  CosetFactorisation right = factor_right(g, w, J);
  d.v = right.inner;
  CosetFactorisation left = factor_left(g, right.outer, I);
  d.u = left.inner;
  d.wbar = left.outer;
  d.H = GenSet();
  Element wbar_inv = g.inverse(d.wbar);
  for (int t : J.members()) {
    Element c = g.multiply(g.multiply(d.wbar, g.generator(t)), wbar_inv);
    if (c.length() == 1 && I.contains(c.word[0])) d.H = d.H.with(c.word[0]);
  }
  return d;
}

Element project_to_residue(const Group& g, const Element& v, const Element& base, GenSet J) {
  // Write base^{-1} v = i * o with i in W_J and o without left descents in J;
  // the distance from v to base*x is l(x^{-1} i o), minimal exactly at x = i.
  Element rel = g.multiply(g.inverse(base), v);
  CosetFactorisation f = factor_left(g, rel, J);
  return g.multiply(base, f.inner);
}

std::vector<Element> residue_reflections(const Group& g, const Element& base, GenSet J) {
  if (!is_spherical(g.system().matrix(), J))
    throw PreconditionError("residue reflections require a spherical type");
  std::vector<Element> out;
  Element base_inv = g.inverse(base);
  for (const Element& x : g.subgroup_ball(J, 1000, {}, /*parallel=*/false))
    for (int s : J.members()) {
      Element r = g.multiply(g.multiply(x, g.generator(s)), g.inverse(x));
      out.push_back(g.multiply(g.multiply(base, r), base_inv));
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool residues_parallel(const Group& g, const Element& base1, GenSet J1, const Element& base2,
                       GenSet J2) {
  return residue_reflections(g, base1, J1) == residue_reflections(g, base2, J2);
}

bool normalizer_membership(const Group& g, const Element& w, GenSet I) {
  const CoxeterMatrix& m = g.system().matrix();
  if (irreducible_components(m, I).size() != 1)
    throw PreconditionError("normalizer criterion requires irreducible I");
  if (is_spherical(m, I)) throw PreconditionError("normalizer criterion requires non-spherical I");
  for (int s : I.members())
    if (!is_spherical(m, I.without(s)))
      throw PreconditionError("normalizer criterion requires all proper subsets of I spherical");
  return g.support(w).subset_of(I | perp(m, I));
}

SphericalProbe spherical_criterion_probe(const Group& g, const Element& x, GenSet H) {
  if (!is_spherical(g.system().matrix(), H))
    throw PreconditionError("probe requires spherical H");
  if (!in_right_quotient(g, x, H)) throw PreconditionError("probe requires x in W^H");
  SphericalProbe p;
  GenSet ld = g.left_descents(x);
  for (int s = 0; s < g.rank(); ++s) {
    if (ld.contains(s)) continue;
    p.ascent_set = p.ascent_set.with(s);
    Element sx = g.multiply(g.generator(s), x);
    if (in_right_quotient(g, sx, H)) p.witnesses = p.witnesses.with(s);
  }
  return p;
}

}  // namespace cox
